import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("POLEGEOM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "polegeom._gfkernels",
                    ["src/polegeom/_gfkernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install the pure-Python package only.
        ext_modules = []

setup(ext_modules=ext_modules)
