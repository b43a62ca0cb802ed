"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile only costs
speed.  `pip install -e . --no-build-isolation` builds it in place.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: kernel extension not built ({exc}); "
                  "using the pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to compile {ext.name} ({exc}); "
                  "using the pure-Python fallback")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("flagstone._kernels_cy", ["src/flagstone/_kernels_cy.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
