from setuptools import Extension, setup

# The compiled gate kernel is optional: qaudio.sim falls back to the numpy
# implementation when the extension is missing.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "qaudio.sim._core",
                ["src/qaudio/sim/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
