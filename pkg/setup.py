"""Build script for the optional compiled drive kernel.

The package is fully functional without the extension: floqssh.kernels
falls back to a vectorized NumPy implementation when the compiled module
is absent (see benchmarks/bench_kernels.py for the speed comparison).
"""

import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "floqssh._kernels",
        ["src/floqssh/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
