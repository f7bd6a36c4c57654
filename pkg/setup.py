"""Build the optional compiled Jacobi kernel.

The package works without it: ``seidel_loops.spectra._kernel`` falls back to
the pure-Python kernel when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SEIDEL_LOOPS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "seidel_loops.spectra._jacobi_ext",
                    ["src/seidel_loops/spectra/_jacobi_ext.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
