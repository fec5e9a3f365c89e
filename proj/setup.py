from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = [
    "src/graph.cpp",
    "src/rooted_tree.cpp",
    "src/time_vector.cpp",
    "src/simulate.cpp",
    "src/asymptotics.cpp",
    "src/surgery.cpp",
    "src/search.cpp",
    "src/instance_gen.cpp",
    "src/verify.cpp",
    "src/python/bindings.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "walkcount._core",
            sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
