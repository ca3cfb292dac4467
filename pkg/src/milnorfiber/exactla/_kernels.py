"""Gaussian elimination over F_p, the hot inner loop of the modular path.

Two interchangeable backends: a numba-compiled loop nest and a vectorised
numpy version.  The numba path is used when numba imports and the environment
variable ``MILNOR_NUMBA`` is not set to ``0``.  Inputs are int64 arrays with
entries in [0, p) and p < 2**31, so every product fits in int64.
"""
from __future__ import annotations

import logging
import os

import numpy as np

logger = logging.getLogger(__name__)

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    numba = None
    HAVE_NUMBA = False

_FLAG = os.environ.get("MILNOR_NUMBA", "1").strip().lower()
_backend = "numba" if HAVE_NUMBA and _FLAG not in ("0", "false", "no", "off") else "numpy"


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


# numpy ------------------------------------------------------------------------

def _rref_numpy(a: np.ndarray, p: int, full: bool) -> tuple[int, np.ndarray]:
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        lo = 0 if full else r + 1
        col = a[lo:, c].copy()
        if full:
            col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            sub = a[lo + rows, c:]
            sub -= np.outer(col[rows], a[r, c:]) % p
            sub %= p
            a[lo + rows, c:] = sub
        pivots.append(c)
        r += 1
    return r, np.asarray(pivots, dtype=np.int64)


# numba ------------------------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def _inv_mod(a, p):
        t, newt = 0, 1
        r, newr = p, a
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @numba.njit(cache=True, nogil=True)
    def _rref_numba(a, p, full):
        m, n = a.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _inv_mod(a[r, c], p)
            for j in range(c, n):
                a[r, j] = a[r, j] * inv % p
            lo = 0 if full else r + 1
            for i in range(lo, m):
                if i == r:
                    continue
                f = a[i, c]
                if f != 0:
                    g = p - f
                    for j in range(c, n):
                        a[i, j] = (a[i, j] + g * a[r, j]) % p
            pivots[r] = c
            r += 1
        return r, pivots[:r].copy()


def rref_mod_p(a: np.ndarray, p: int) -> tuple[int, np.ndarray]:
    """Reduce ``a`` (modified in place) to reduced row echelon form mod p.

    Pivoting takes the leftmost nonzero column, then the smallest row index.
    Returns the rank and the pivot columns.
    """
    if a.size == 0:
        return 0, np.zeros(0, dtype=np.int64)
    if _backend == "numba":
        r, piv = _rref_numba(a, p, True)
        return int(r), piv
    return _rref_numpy(a, p, True)


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank mod p by forward elimination only; ``a`` is overwritten."""
    if a.size == 0:
        return 0
    if _backend == "numba":
        return int(_rref_numba(a, p, False)[0])
    return _rref_numpy(a, p, False)[0]


def warmup() -> None:
    """Trigger JIT compilation so timings exclude it."""
    a = np.array([[1, 2], [3, 4]], dtype=np.int64)
    rref_mod_p(a.copy(), 7)
    rank_mod_p(a.copy(), 7)
