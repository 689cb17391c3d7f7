#include "sweepcover/charts.hpp"

#include <sstream>
#include <vector>

#include "sweepcover/charts_data.hpp"

namespace sweep {

namespace {

// Ring bit positions of a 3x3 pattern, rows top to bottom.
constexpr int kRowBits[3][3] = {{7, 0, 1}, {6, -1, 2}, {5, 4, 3}};

Dir parse_dir(const std::string& s) {
    if (s == "N") return Dir::N;
    if (s == "E") return Dir::E;
    if (s == "S") return Dir::S;
    if (s == "W") return Dir::W;
    throw ChartError("bad direction '" + s + "' in chart file");
}

}  // namespace

ChartTable ChartTable::parse(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == ';') continue;
            lines.push_back(line);
        }
    }
    if (lines.size() % 4 != 0)
        throw ChartError("chart file is not a sequence of 4-line blocks");

    ChartTable table;
    std::vector<std::pair<uint8_t, Dir>> originals;
    for (size_t i = 0; i < lines.size(); i += 4) {
        uint8_t mask = 0;
        for (int r = 0; r < 3; ++r) {
            const std::string& row = lines[i + r];
            if (row.size() != 3) throw ChartError("chart row '" + row + "' is not 3 wide");
            for (int c = 0; c < 3; ++c) {
                if (row[c] != '#' && row[c] != '.')
                    throw ChartError("bad character in chart row '" + row + "'");
                bool on = row[c] == '#';
                if (kRowBits[r][c] < 0) {
                    if (!on) throw ChartError("chart center tile must be contaminated");
                    continue;
                }
                if (on) mask |= static_cast<uint8_t>(1u << kRowBits[r][c]);
            }
        }
        const std::string& arrow = lines[i + 3];
        if (arrow.rfind("-> ", 0) != 0)
            throw ChartError("expected '-> <dir>' after chart pattern");
        Dir dir = parse_dir(arrow.substr(3));
        if (table.strict_[mask])
            throw ChartError("duplicate chart mask " + std::to_string(mask));
        table.strict_[mask] = dir;
        originals.emplace_back(mask, dir);
        ++table.chart_count_;
    }

    // Rotations into the strict tier (a chart that maps onto an existing
    // mask under rotation keeps the earlier destination).
    for (auto [mask, dir] : originals) {
        uint8_t m = mask;
        Dir d = dir;
        for (int r = 0; r < 3; ++r) {
            m = rotate_mask_cw(m);
            d = rotate_cw(d);
            if (!table.strict_[m]) table.strict_[m] = d;
        }
    }

    // Extended tier adds mirror images of every strict entry.
    table.extended_ = table.strict_;
    for (int m = 0; m < 256; ++m) {
        if (!table.strict_[m]) continue;
        uint8_t mm = mirror_mask_x(static_cast<uint8_t>(m));
        Dir md = mirror_x(*table.strict_[m]);
        if (!table.extended_[mm]) table.extended_[mm] = md;
    }
    return table;
}

const ChartTable& ChartTable::builtin() {
    static const ChartTable table = parse(kInitialMoveChartsData);
    return table;
}

}  // namespace sweep
