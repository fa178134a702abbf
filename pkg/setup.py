import os

from setuptools import Extension, setup

# The compiled kernels are an optional fast path; the package falls back to
# the pure-Python reference implementation when the extension is absent.
ext_modules = []
if os.environ.get("CONECOVER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "conecover._kernels._speedups",
                    ["src/conecover/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
