"""Build script: compiles the optional mod-p polynomial kernel.

The package is fully functional without the extension (a pure-Python
backend is selected at import time), so compilation failures are
downgraded to warnings.  Set THUMBTACK_NO_EXT=1 to skip the build.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"building the _fpoly extension failed ({exc}); "
                          "falling back to the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "falling back to the pure-Python backend")


ext_modules = []
if not os.environ.get("THUMBTACK_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("thumbtack._fpoly", sources=["src/thumbtack/_fpoly.pyx"])],
            language_level="3",
        )
    except ImportError:
        warnings.warn("Cython not available; building without the _fpoly extension")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
