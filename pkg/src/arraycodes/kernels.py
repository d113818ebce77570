"""Backend selection for the hot kernels.

The compiled extension is used when it imports; set ARRAYCODES_PURE_PYTHON=1
to force the pure-Python twin.
"""

import os

from . import _pykernels

try:
    if os.environ.get("ARRAYCODES_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = _pykernels

BACKEND = _impl.BACKEND
_cache = {}


def make_kernel(F, module=None):
    mod = module or _impl
    return mod.Kernel(F.q, F.p, F._addmode, F.exp, F.log)


def kernel_for(F):
    """Shared kernel for field F on the active backend."""
    k = _cache.get(F)
    if k is None:
        k = _cache[F] = make_kernel(F)
    return k


def available_backends():
    mods = {"python": _pykernels}
    try:
        from . import _ckernels
        mods["cython"] = _ckernels
    except ImportError:
        pass
    return mods
