"""Build script: compiles the optional fast-kernel extension when Cython is present.

The package works without the extension; twistsel._kernels falls back to the
pure-Python implementations at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "twistsel._fastkernels",
                ["src/twistsel/_fastkernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
