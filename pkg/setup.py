"""Build glue for the optional compiled search kernels.

The package is fully functional without the extension; `noetherlab._kernels`
falls back to the pure-Python implementations when `noetherlab._speedups`
is absent. Set NOETHERLAB_NO_EXT=1 to skip compiling it.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("NOETHERLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("noetherlab._speedups", ["src/noetherlab/_speedups.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
