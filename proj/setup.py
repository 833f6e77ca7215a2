"""Build the uent._core extension with setuptools + pybind11.

The canonical development build is CMake (which also builds the CLI and the
test suites); this lane exists so `pip install -e . --no-build-isolation`
yields an importable `uent` package on its own.
"""

import os
import re
from pathlib import Path

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).resolve().parent


def read_version() -> str:
    text = (ROOT / "include" / "uent" / "version.hpp").read_text()
    match = re.search(r'kVersion\s*=\s*"([^"]+)"', text)
    if not match:
        raise RuntimeError("kVersion not found in include/uent/version.hpp")
    return match.group(1)


def eigen_include() -> str:
    override = os.environ.get("EIGEN3_INCLUDE")
    if override:
        return override
    for candidate in ("/usr/include/eigen3", "/usr/local/include/eigen3"):
        if os.path.isdir(candidate):
            return candidate
    raise RuntimeError(
        "Eigen3 headers not found; set EIGEN3_INCLUDE to the directory "
        "containing Eigen/ (e.g. /usr/include/eigen3)"
    )


# setuptools requires /-separated paths relative to this directory.
sources = sorted(p.relative_to(ROOT).as_posix() for p in (ROOT / "src").glob("*.cpp"))
sources.append("bindings/module.cpp")

ext = Pybind11Extension(
    "uent._core",
    sources=sources,
    include_dirs=[str(ROOT / "include"), str(ROOT / "vendor"), eigen_include()],
    cxx_std=20,
)

ParallelCompile("UENT_NUM_BUILD_JOBS", default=0).install()

setup(
    version=read_version(),
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
