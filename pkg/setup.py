"""Build script. Compiles the optional C kernel extension.

If Cython or a C compiler is unavailable the build falls back to a
pure-Python install; the package selects the kernel backend at import.
"""

import sys

from setuptools import setup

# FMA contraction must stay off so the compiled kernels produce
# bit-identical results to the pure-Python backend.
COMPILE_ARGS = ["-O2", "-ffp-contract=off"]

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "wbroadcast._kernels_c",
                ["src/wbroadcast/_kernels_c.pyx"],
                extra_compile_args=COMPILE_ARGS,
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    sys.stderr.write(f"building without compiled kernels: {exc}\n")

setup(ext_modules=ext_modules)
