"""Build script: compiles the optional C extension for the hot kernels.

The package works without the extension (a pure Python twin is selected at
import time); set GAMMA0CHAR_NO_EXT=1 to skip compiling it.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GAMMA0CHAR_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gamma0char._speedups",
                    ["src/gamma0char/_speedups.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
