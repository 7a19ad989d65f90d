"""Hot kernels with a compiled core and a pure-Python fallback.

The Cython extension ``_scan`` is used when it was built; otherwise, or
when ``HYPERPIERCE_PURE_PYTHON=1`` is set, the pure-Python module is used.
Both return identical results.
"""
import os

from . import _scan_py

try:
    from . import _scan as _compiled
except ImportError:  # extension not built
    _compiled = None

python_first_valid_tuple = _scan_py.first_valid_tuple
compiled_first_valid_tuple = _compiled.first_valid_tuple if _compiled is not None else None

if _compiled is not None and os.environ.get("HYPERPIERCE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    BACKEND = "cython"
    first_valid_tuple = _compiled.first_valid_tuple
else:
    BACKEND = "python"
    first_valid_tuple = _scan_py.first_valid_tuple

__all__ = ["BACKEND", "first_valid_tuple", "python_first_valid_tuple", "compiled_first_valid_tuple"]
