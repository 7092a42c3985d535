"""Make the extension importable both installed and from an in-tree build.

`pip install .` gives the real `bcqho` package; for development builds the
raw `_bcqho` extension from the CMake build directory is aliased instead.
"""

import importlib
import pathlib
import sys

try:
    import bcqho  # noqa: F401
except ImportError:
    root = pathlib.Path(__file__).resolve().parents[2]
    hits = sorted(root.glob("build*/_bcqho*.so")) + sorted(
        root.glob("build*/**/_bcqho*.so")
    )
    if not hits:
        raise ImportError(
            "bcqho is not installed and no built _bcqho extension was found; "
            "run `pip install .` or configure CMake with -DBCQHO_BUILD_PYTHON=ON"
        )
    sys.path.insert(0, str(hits[0].parent))
    sys.modules["bcqho"] = importlib.import_module("_bcqho")
