"""Build the optional Cython kernel.

The package works without it: ``altsylvester._core`` falls back to the
pure-Python kernel when the extension is missing. Set
``ALTSYLVESTER_NO_EXT=1`` to skip compilation entirely.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ALTSYLVESTER_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("altsylvester._kernel", ["src/altsylvester/_kernel.pyx"],
                       extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3", "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
