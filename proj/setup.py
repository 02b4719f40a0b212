from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "zpk",
    sources=[
        "bindings/pymodule.cpp",
        "src/numutil.cpp",
        "src/modulus.cpp",
        "src/residue.cpp",
        "src/digits.cpp",
        "src/units.cpp",
        "src/triplets.cpp",
        "src/fermat.cpp",
        "src/verify.cpp",
        "src/report.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
