"""Backend selection for the word enumeration kernel.

The compiled ``_ckernels`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` module is loaded.  Setting ``STARFACT_PURE=1``
forces the fallback.
"""

import os

from . import _pykernels

if os.environ.get("STARFACT_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
word_counts = _impl.word_counts


def available_backends():
    """Map backend name to its module, for benchmarks and cross-checks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
