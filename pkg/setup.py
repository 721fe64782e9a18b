from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "cesaro_lab._ckern",
                ["src/cesaro_lab/_ckern.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install the pure-numpy backend only.
    extensions = []

setup(ext_modules=extensions)
