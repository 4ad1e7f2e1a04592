"""Build script: compiles the optional Cython search kernel.

The package works without the extension (a pure-Python twin of the kernel
is selected at import time), so a failed build only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/gcff/solver/_engine.pyx"],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
