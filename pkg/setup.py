"""Build script: compiles the optional fast kernels when Cython is available.

Set PLCPKIT_PURE=1 to skip the extension and install the pure-Python
package only; the kernels module falls back automatically at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("PLCPKIT_PURE", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/plcpkit/_kernels/_core.pyx"],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
