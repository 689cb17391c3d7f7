#include "sweepcover/region_io.hpp"

#include <fstream>
#include <sstream>

namespace sweep {

Region parse_region(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw IoError("empty region file");
    std::istringstream hs(header);
    std::string magic, version;
    int64_t width = 0, height = 0;
    if (!(hs >> magic >> version >> width >> height) || magic != "REGION" || version != "v1")
        throw IoError("bad header, expected 'REGION v1 <width> <height>'");
    std::string extra;
    if (hs >> extra) throw IoError("trailing data in region header");
    if (width < 1 || height < 1) throw IoError("region dimensions must be >= 1");

    TileSet tiles;
    for (int64_t row = 0; row < height; ++row) {
        std::string line;
        if (!std::getline(in, line)) throw IoError("truncated region grid");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int64_t>(line.size()) != width)
            throw IoError("grid row " + std::to_string(row + 1) + " has wrong width");
        for (int64_t col = 0; col < width; ++col) {
            char c = line[static_cast<size_t>(col)];
            if (c == '#') {
                // Top row first: row 0 is y = height-1.
                tiles.insert(Tile{static_cast<int32_t>(col),
                                  static_cast<int32_t>(height - 1 - row)});
            } else if (c != '.') {
                throw IoError("bad grid character '" + std::string(1, c) + "'");
            }
        }
    }
    if (text.empty() || text.back() != '\n')
        throw IoError("region file must end with a newline");
    std::string tail;
    while (std::getline(in, tail))
        if (!tail.empty()) throw IoError("trailing data after region grid");

    Region region(std::move(tiles));
    if (region.empty()) throw IoError("region has no contaminated tiles");
    if (!region.is_simply_connected())
        throw IoError("region is not simply connected");
    return region;
}

std::string serialize_region(const Region& region) {
    if (region.empty()) throw IoError("cannot serialize empty region");
    Region::BBox b = region.bbox();
    std::ostringstream out;
    out << "REGION v1 " << b.width() << ' ' << b.height() << '\n';
    for (int32_t y = b.max_y; y >= b.min_y; --y) {
        for (int32_t x = b.min_x; x <= b.max_x; ++x)
            out << (region.contains(Tile{x, y}) ? '#' : '.');
        out << '\n';
    }
    return out.str();
}

Region load_region_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open region file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_region(buf.str());
}

void save_region_file(const Region& region, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write region file: " + path);
    out << serialize_region(region);
}

}  // namespace sweep
