from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "masseur._core",
    sources=[
        "python/bindings.cpp",
        "src/core_types.cpp",
        "src/trace_io.cpp",
        "src/contact_model.cpp",
        "src/admittance.cpp",
        "src/techniques.cpp",
        "src/sim_engine.cpp",
        "src/analysis.cpp",
        "src/config.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
