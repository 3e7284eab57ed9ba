from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bgd._kernel_cy",
                ["src/bgd/_kernel_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    # the package falls back to the numpy kernel at import time
    ext_modules = []

setup(ext_modules=ext_modules)
