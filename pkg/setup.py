"""Build script: compiles the integer-matrix micro-kernels when a C toolchain
is available, and falls back to the pure-Python implementation otherwise."""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/heckechar/_intkernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(f"warning: building without compiled kernels ({exc})\n")

setup(ext_modules=ext_modules)
