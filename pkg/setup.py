import os

from setuptools import setup

ext_modules = []
if os.environ.get("FATLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/fatlab/_ckernels.pyx"], compiler_directives={"language_level": "3"}
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
