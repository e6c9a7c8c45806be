"""Build the wright_py extension module in place.

Neither maturin nor setuptools-rust is needed: the crate is a plain cdylib,
so `cargo build` followed by one file copy produces an importable module.
Run this script directly, or let smoke_test.py call ensure_built().
"""

import shutil
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
REPO = HERE.parent


def _artifact() -> Path:
    if sys.platform == "win32":
        return REPO / "target" / "release" / "wright_py.dll"
    if sys.platform == "darwin":
        return REPO / "target" / "release" / "libwright_py.dylib"
    return REPO / "target" / "release" / "libwright_py.so"


def _module_path() -> Path:
    suffix = ".pyd" if sys.platform == "win32" else ".so"
    return HERE / f"wright_py{suffix}"


def build() -> Path:
    subprocess.run(
        ["cargo", "build", "--release", "-p", "wright-py"],
        cwd=REPO,
        check=True,
    )
    module = _module_path()
    shutil.copy2(_artifact(), module)
    return module


def ensure_built() -> Path:
    """Build unless an extension module is already present."""
    module = _module_path()
    if not module.exists():
        return build()
    return module


if __name__ == "__main__":
    print(f"built {build()}")
