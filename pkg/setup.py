from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# twin at import time, so a missing compiler or Cython only costs speed.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "corecorona._kernels._bitkernels",
                ["src/corecorona/_kernels/_bitkernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
