import os

from setuptools import setup
from setuptools.extension import Extension

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in blockperm._glue_py if the extension is missing.
ext_modules = []
if not os.environ.get("BLOCKPERM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "blockperm._glue",
                    ["src/blockperm/_glue.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
