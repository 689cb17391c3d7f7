"""Builds the _core extension directly with setuptools.

The CMake build is the primary one (it also produces the CLI and the test
binaries); this setup only exists so `pip install -e . --no-build-isolation`
works without CMake. The chart table header normally emitted at CMake
configure time is generated here the same way.
"""

from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).parent
GEN = ROOT / "build" / "py_generated"


def generate_charts_header() -> Path:
    text = (ROOT / "data" / "initial_moves_v1.txt").read_text()
    template = (ROOT / "cmake" / "charts_data.hpp.in").read_text()
    header = template.replace("@SWEEP_CHARTS_TEXT@", text)
    out = GEN / "sweepcover" / "charts_data.hpp"
    out.parent.mkdir(parents=True, exist_ok=True)
    if not out.exists() or out.read_text() != header:
        out.write_text(header)
    return GEN


# setuptools insists on /-separated paths relative to this file
sources = sorted(p.relative_to(ROOT).as_posix() for p in (ROOT / "src").glob("*.cpp"))
sources.append("python/bindings.cpp")

ext = Pybind11Extension(
    "sweepcover._core",
    sources,
    include_dirs=[str(ROOT / "include"), str(generate_charts_header())],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
