"""Builds the optional Cython kernel; the package works without it."""
from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("hyperpierce.kernels._scan", ["src/hyperpierce/kernels/_scan.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []


class OptionalBuildExt(build_ext):
    """Fall back to pure Python when no compiler is available."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernels not built ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} not built ({exc}); using pure-Python fallback")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
