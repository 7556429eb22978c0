"""Build the optional Cython kernel extension.

The package works without it (pure-Python fallback is selected at import),
so any failure here is non-fatal for source installs.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/walkmat/_kernels.pyx"],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
