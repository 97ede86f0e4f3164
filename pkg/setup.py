"""Build the optional Cython kernels; the package falls back to Python if they are absent."""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SWITCHLIST_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "switchlist._kernels",
                    [os.path.join("src", "switchlist", "_kernels.pyx")],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
