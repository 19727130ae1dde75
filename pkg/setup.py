"""Build hook for the optional compiled relabeling kernel.

The package is pure Python and fully functional without compilation; when
Cython and a C compiler are present, the branch-and-bound canonical-form
kernel is built as hopfgraphs._canon and picked up automatically at import.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/hopfgraphs/_canon.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
