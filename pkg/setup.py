from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("ecix._speedups", ["src/ecix/_speedups.pyx"])],
        language_level="3",
    )
)
