"""Build script.  The Cython kernel extension is optional: if Cython (or a C
compiler) is unavailable the package installs pure-Python and selects the
fallback kernels at import time."""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "quadca._kernels_c",
                ["src/quadca/_kernels_c.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
