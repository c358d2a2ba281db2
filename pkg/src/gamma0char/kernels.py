"""Backend selection for the hot kernels.

Imports the compiled extension when available and routes each call there
whenever the arguments sit inside the extension's proven-safe bounds;
otherwise the pure Python twin handles them at arbitrary precision.
Set GAMMA0CHAR_PURE=1 to force the pure backend.
"""

import os

from . import _kernels_py as _py

try:
    from . import _speedups as _c
except ImportError:  # extension not built
    _c = None

if os.environ.get("GAMMA0CHAR_PURE"):
    _c = None

BACKEND = "compiled" if _c is not None else "pure"

# Static safety bounds for the __int128 arithmetic in the extension.
_C_DEDEKIND_KMAX = 10**6
_C_PSI_ENTRY_MAX = 10**9


def backend_name() -> str:
    return BACKEND


def dedekind_fast_pair(h: int, k: int) -> tuple[int, int]:
    if _c is not None and k <= _C_DEDEKIND_KMAX and abs(h) <= 2**62:
        return _c.dedekind_fast(h, k)
    return _py.dedekind_fast(h, k)


def dedekind_naive_pair(h: int, k: int) -> tuple[int, int]:
    if _c is not None and k <= _C_DEDEKIND_KMAX and abs(h) <= 2**62:
        return _c.dedekind_naive(h, k)
    return _py.dedekind_naive(h, k)


def psi4(a: int, b: int, c: int, d: int) -> int:
    if _c is not None and max(abs(a), abs(b), abs(c), abs(d)) <= _C_PSI_ENTRY_MAX:
        return _c.psi(a, b, c, d)
    return _py.psi(a, b, c, d)


def scan_fast_vs_naive(kmax: int) -> int:
    if _c is not None and kmax <= _C_DEDEKIND_KMAX:
        return _c.scan_fast_vs_naive(kmax)
    return _py.scan_fast_vs_naive(kmax)
