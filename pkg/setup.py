import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the kernel falls back at import
    cythonize = None

EXTENSIONS = []
if cythonize is not None and os.environ.get("S2QUANT_NO_CYTHON", "") != "1":
    EXTENSIONS = cythonize(
        [Extension("s2quant._ckernels", [os.path.join("src", "s2quant", "_ckernels.pyx")])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=EXTENSIONS)
