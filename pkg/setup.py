from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "folkman._kernels_cy",
                ["src/folkman/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # No Cython: the package still works on the pure-Python kernels.
    ext_modules = []

setup(ext_modules=ext_modules)
