from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Build without the compiled kernel; the package falls back to the
    # pure-Python search at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "nodekayles.engine._kernel",
                ["src/nodekayles/engine/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
