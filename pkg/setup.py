"""Build script for the optional compiled kernels.

The package is fully functional without the extension; dbslab.kernels
falls back to the numpy implementation when the import fails.
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
                "dbslab.kernels._core",
                sources=["src/dbslab/kernels/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
