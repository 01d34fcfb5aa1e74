from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# -march=native + -ffast-math lets gcc vectorize the log calls in the
# capacity grid scan through libmvec; the scan is ~5x slower without them.
# optional=True: a failed build falls back to the pure-Python kernels.
ext = Extension(
    "chancap._kernels",
    ["src/chancap/_kernels.pyx"],
    extra_compile_args=["-O3", "-ffast-math", "-march=native"],
    libraries=["mvec", "m"],
    optional=True,
)

setup(
    ext_modules=cythonize([ext], language_level=3) if cythonize else [],
)
