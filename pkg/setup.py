"""Build script: compiles the lattice-point counting kernel when Cython is
available.  The package works without it (a pure-Python kernel is selected at
import time), so a failed extension build is not fatal."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sepkit._countcore", ["src/sepkit/_countcore.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
