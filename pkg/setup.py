"""Builds the optional compiled minimal-path kernel.

The package is fully functional without it: if Cython or a C++
compiler is unavailable the install proceeds and the pure-Python twin
is selected at import time.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            sys.stderr.write(f"skipping compiled kernel: {exc}\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            sys.stderr.write(f"skipping compiled kernel {ext.name}: {exc}\n")


ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "circmdd._paths_c",
                ["src/circmdd/_paths_c.pyx"],
                language="c++",
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # pragma: no cover - toolchain dependent
    pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
