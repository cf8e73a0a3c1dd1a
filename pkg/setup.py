import os

from setuptools import setup

ext_modules = []
if os.environ.get("CREDITEQ_PURE_PYTHON") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "crediteq._kernels._evolve",
                    sources=["src/crediteq/_kernels/_evolve.pyx"],
                    include_dirs=[numpy.get_include()],
                    # -ffp-contract=off keeps the compiled kernel bit-identical
                    # to the numpy fallback (no FMA contraction).
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
