"""Build hook for the optional compiled straightening kernel.

The package is pure Python by default; when Cython and a C compiler are
available the hot kernel is compiled, otherwise the build falls through
to the interpreted twin without failing the install.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"bggkit: skipping compiled kernel ({exc}); "
                  "using the pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"bggkit: skipping {ext.name} ({exc}); "
                  "using the pure-Python fallback")


ext_modules = []
if os.environ.get("BGGKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/bggkit/_straighten_cy.pyx"],
            language_level="3",
        )
    except ImportError:
        print("bggkit: Cython not available; using the pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
