"""Build script.

The package is pure Python except for one optional compiled extension,
``lsgsb._speedups``, which twins the hot kernels in ``lsgsb._pure``
(word measures, the two monomial-order comparators, the induced lex
comparators and the ALSW test).  If Cython or a C compiler is missing,
or if LSGSB_NO_EXT is set in the environment, the build silently skips
the extension and the package falls back to the pure kernels at import
time (see ``lsgsb._backend``).
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("LSGSB_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("lsgsb._speedups", ["src/lsgsb/_speedups.pyx"])],
            language_level="3",
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
