import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class cmake_extension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class cmake_build(build_ext):
    def build_extension(self, ext):
        ext_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        source = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_dir),
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_dir}",
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DCMAKE_BUILD_TYPE=Release",
                "-DODAT_PYTHON_ONLY=ON",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core"],
            check=True,
        )


setup(
    packages=["odat"],
    package_dir={"odat": "python/odat"},
    ext_modules=[cmake_extension("odat._core")],
    cmdclass={"build_ext": cmake_build},
)
