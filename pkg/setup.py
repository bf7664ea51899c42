"""Build the optional compiled kernels.

Build in place with ``pip install -e . --no-build-isolation`` or
``python setup.py build_ext --inplace``. If Cython or a compiler is missing
the package still installs and falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sctransforms._kernels",
                ["src/sctransforms/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
