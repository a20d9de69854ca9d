"""Build script: compiles the optional graph kernel extension when Cython is available.

The package works without the extension; a pure-Python backend is selected at
import time if the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "groupoid_spectrum._kernels._graphcore",
                ["src/groupoid_spectrum/_kernels/_graphcore.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
