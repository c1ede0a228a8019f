"""Build script: compiles the native kernel extension when possible.

The package is fully functional without the extension (the pure-Python
kernels are selected at import time), so any build failure here only
costs speed, never correctness.  Set ORDTOP_NO_NATIVE=1 to skip the
extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping native kernels ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); pure-Python fallback will be used")


ext_modules = []
if not os.environ.get("ORDTOP_NO_NATIVE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("ordtop.kernels._native", ["src/ordtop/kernels/_native.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; pure-Python fallback will be used")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
