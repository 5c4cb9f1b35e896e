from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "dhvd._fastcore",
        ["src/dhvd/_fastcore.pyx"],
        extra_compile_args=["-O2"],
    ),
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    ),
)
