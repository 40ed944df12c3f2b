import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python fallback still installs
    cythonize = None

extra = [] if os.name == "nt" else ["-O3", "-ffp-contract=off"]

ext_modules = []
if cythonize is not None and not os.environ.get("LOEWNER_REGIONS_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "loewner_regions._kernels",
                ["src/loewner_regions/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=extra,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
