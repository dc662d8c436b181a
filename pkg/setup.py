"""Build script: compiles the optional fast kernel core.

The extension is best-effort: if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-numpy implementation
selected at import time in ``hammerstein_kit.backend``.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures so the pure-Python install still works."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"WARNING: fast kernel core not built ({exc}); "
                  "using pure-numpy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"WARNING: could not compile {ext.name} ({exc}); "
                  "using pure-numpy fallback")


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "hammerstein_kit._kernelcore",
        ["src/hammerstein_kit/_kernelcore.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
