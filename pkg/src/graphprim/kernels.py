"""Backend selection for the subset-enumeration kernels.

The compiled module is used when it imports; setting the environment
variable ``GRAPHPRIM_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

if os.environ.get("GRAPHPRIM_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = "python" if _impl.__name__.endswith("_pykernels") else "cython"

reach_masks = _impl.reach_masks
hereditary_saturated_masks = _impl.hereditary_saturated_masks
tail_masks = _impl.tail_masks
MAX_BITS = _impl.MAX_BITS

__all__ = [
    "BACKEND",
    "MAX_BITS",
    "reach_masks",
    "hereditary_saturated_masks",
    "tail_masks",
]
