"""Build script: compiles the optional fast-kernel extension when Cython is present.

The package is fully functional without the extension; sciready.kernels
falls back to the pure-Python implementations at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sciready/kernels/_ckernels.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
