"""Backend selection for the exact kernels.

The compiled extension is used when it was built; otherwise the pure-Python
implementation is loaded.  Both expose ``matmul``, ``gauss_jordan`` and
``gdiv`` with identical behaviour.
"""
from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = "compiled" if _compiled is not None else "python"
_active = BACKENDS[BACKEND]


def use_backend(name):
    """Switch the active kernel backend (``"python"`` or ``"compiled"``)."""
    global BACKEND, _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} is not available; have {sorted(BACKENDS)}")
    BACKEND = name
    _active = BACKENDS[name]


def matmul(ar, ai, br, bi, n, k, m):
    return _active.matmul(ar, ai, br, bi, n, k, m)


def gauss_jordan(re, im, rows, cols):
    return _active.gauss_jordan(re, im, rows, cols)


def gdiv(ar, ai, br, bi):
    return _active.gdiv(ar, ai, br, bi)
