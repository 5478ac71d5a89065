import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build the pure-Python package only
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("HEXAGRAMMUM_NO_EXT"):
    ext_modules = cythonize(
        [Extension("hexagrammum._scan_ext", ["src/hexagrammum/_scan_ext.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
