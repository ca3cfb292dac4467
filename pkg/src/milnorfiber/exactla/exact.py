"""Exact elimination on integer matrices (numpy object arrays of int).

``rank_int`` and ``rref_int`` hand the block to FLINT's fmpz_mat.  The
Bareiss routines below compute the same thing in plain Python and serve as
the reference implementation the tests compare against.
"""
from __future__ import annotations

import numpy as np
from flint import fmpz_mat


def _to_flint(a: np.ndarray) -> fmpz_mat:
    return fmpz_mat(a.shape[0], a.shape[1], [int(v) for v in a.flat])


def rank_int(a: np.ndarray) -> int:
    """Rank over Q of an integer object array."""
    if a.size == 0:
        return 0
    return _to_flint(a).rank()


def rref_int(a: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Fraction-free reduced echelon form.

    Returns ``(R, den, pivots)`` where ``R / den`` is the reduced row echelon
    form (nonzero rows only) and every pivot entry of ``R`` equals ``den``.
    """
    m, n = a.shape
    if m == 0 or n == 0:
        return np.zeros((0, n), dtype=object), 1, []
    R, den, r = _to_flint(a).rref()
    out = np.array([int(v) for v in R.entries()], dtype=object).reshape(m, n)[:r]
    den = int(den)
    if den < 0:
        out, den = -out, -den
    pivots = [int(np.flatnonzero(out[i])[0]) for i in range(r)]
    return out, den, pivots


def _first_pivot(col: np.ndarray) -> int:
    for i, v in enumerate(col):
        if v:
            return i
    return -1


def rank_bareiss(a: np.ndarray) -> int:
    """Rank by fraction-free Bareiss elimination (a copy is reduced)."""
    a = np.array(a, dtype=object, copy=True)
    m, n = a.shape
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        i = _first_pivot(a[r:, c])
        if i < 0:
            continue
        i += r
        if i != r:
            a[[r, i]] = a[[i, r]]
        p = a[r, c]
        if r + 1 < m:
            a[r + 1:, c + 1:] = (p * a[r + 1:, c + 1:] - np.outer(a[r + 1:, c], a[r, c + 1:])) // prev
            a[r + 1:, c] = 0
        prev = p
        r += 1
    return r


def rref_bareiss(a: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Fraction-free Gauss-Jordan.

    Returns ``(R, den, pivots)`` where ``R / den`` is the reduced row echelon
    form (nonzero rows only) and every pivot entry of ``R`` equals ``den``.
    """
    a = np.array(a, dtype=object, copy=True)
    m, n = a.shape
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        i = _first_pivot(a[r:, c])
        if i < 0:
            continue
        i += r
        if i != r:
            a[[r, i]] = a[[i, r]]
        p = a[r, c]
        keep = a[r].copy()
        a[:] = (p * a - np.outer(a[:, c], keep)) // prev
        a[r] = keep
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], prev, pivots


def kernel_from_rref(R: np.ndarray, den: int, pivots: list[int], n: int) -> tuple[list[int], np.ndarray]:
    """Integer kernel matrix (columns scaled by ``den``) from a fraction-free RREF.

    Column ``t`` of the result is ``den`` times the basis vector attached to
    the t-th free column.
    """
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((n, len(free)), dtype=object)
    for t, f in enumerate(free):
        K[f, t] = den
        for i, pc in enumerate(pivots):
            K[pc, t] = -R[i, f]
    return free, K
