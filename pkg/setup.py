"""Builds the optional Cython kernels; metadata lives in pyproject.toml."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("LCPERTURB_PURE", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/lcperturb/_kernels.pyx"],
            compiler_directives={"language_level": 3},
            quiet=True,
        )

setup(ext_modules=ext_modules)
