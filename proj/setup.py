from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/orlicz_function.cpp",
    "src/conjugate.cpp",
    "src/norms.cpp",
    "src/geometry.cpp",
    "src/classify.cpp",
    "src/json_io.cpp",
    "src/verify.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "orlicz._core",
            ["python/bindings.cpp"] + core_sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
