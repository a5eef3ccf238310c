"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise, or when
``DGAKIT_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementation is used.  Both expose ``mul_terms`` and ``rref_rows``.
"""
import os

from . import _pykernels

BACKEND = "python"
mul_terms = _pykernels.mul_terms
rref_rows = _pykernels.rref_rows

if not os.environ.get("DGAKIT_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        mul_terms = _ckernels.mul_terms
        rref_rows = _ckernels.rref_rows

__all__ = ["BACKEND", "mul_terms", "rref_rows"]
