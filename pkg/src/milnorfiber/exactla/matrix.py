"""Rational matrices and the rank / kernel / membership operations.

A matrix is first split into the connected components of its sparsity
pattern (rows and columns linked by nonzero entries).  Graded maps built
from polynomials with a diagonal symmetry split into many small blocks this
way, and rank, kernel and RREF are all computed block by block: the union of
the blockwise reduced echelon forms *is* the reduced echelon form of the
whole matrix, so results do not depend on the decomposition.

Each block is handled according to the arithmetic mode:

``off``     fraction-free exact elimination only
``verify``  modular elimination with an exact certificate (falls back to
            exact elimination when no certificate is found)
``trust``   modular elimination only; results are probabilistic
"""
from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import exact, modular

MODES = ("off", "verify", "trust")
_mode: contextvars.ContextVar[str] = contextvars.ContextVar("arithmetic_mode", default="off")


def get_mode() -> str:
    return _mode.get()


def set_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown arithmetic mode {mode!r}; expected one of {MODES}")
    _mode.set(mode)


@contextlib.contextmanager
def arithmetic_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown arithmetic mode {mode!r}; expected one of {MODES}")
    token = _mode.set(mode)
    try:
        yield
    finally:
        _mode.reset(token)


class DimensionError(ValueError):
    pass


class QMatrix:
    """Dense rows x cols matrix over Q.

    Entries are stored as Python ``int`` or ``Fraction`` in a numpy object
    array (row-major).  Treat instances as immutable.
    """

    __slots__ = ("rows", "cols", "_a")

    def __init__(self, data, cols: int | None = None):
        a = np.array(data, dtype=object)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, cols or 0)
        if a.ndim != 2:
            raise DimensionError("matrix data must be two-dimensional")
        for idx, v in np.ndenumerate(a):
            if isinstance(v, Fraction):
                if v.denominator == 1:
                    a[idx] = v.numerator
            elif isinstance(v, (int, np.integer)):
                a[idx] = int(v)
            else:
                a[idx] = Fraction(v)
        self._a = a
        self.rows, self.cols = a.shape

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "QMatrix":
        obj = cls.__new__(cls)
        obj._a = a
        obj.rows, obj.cols = a.shape
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls._wrap(np.zeros((rows, cols), dtype=object))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        a = np.zeros((n, n), dtype=object)
        for i in range(n):
            a[i, i] = 1
        return cls._wrap(a)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int, object]]) -> "QMatrix":
        """Build from sparse (row, col, value) triples; repeated positions add up."""
        a = np.zeros((rows, cols), dtype=object)
        for i, j, v in entries:
            a[i, j] += v
        for idx in zip(*np.nonzero(a)):
            v = a[idx]
            if isinstance(v, Fraction) and v.denominator == 1:
                a[idx] = v.numerator
        return cls._wrap(a)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Sequence]) -> "QMatrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls(np.array(columns, dtype=object).T.reshape(rows, len(columns)))

    # access -----------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> Fraction:
        return Fraction(self._a[ij])

    def to_rows(self) -> list[list[Fraction]]:
        return [[Fraction(v) for v in row] for row in self._a]

    def raw(self) -> np.ndarray:
        """The underlying object array (do not mutate)."""
        return self._a

    def transpose(self) -> "QMatrix":
        return QMatrix._wrap(self._a.T.copy())

    T = property(transpose)

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise DimensionError(f"row mismatch {self.rows} vs {other.rows}")
        return QMatrix._wrap(np.hstack([self._a, other._a]))

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise DimensionError(f"column mismatch {self.cols} vs {other.cols}")
        return QMatrix._wrap(np.vstack([self._a, other._a]))

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.cols} columns")
        v = np.array([Fraction(x) for x in vec], dtype=object)
        if self.cols == 0:
            return [Fraction(0)] * self.rows
        return [Fraction(x) for x in self._a.dot(v)]

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        if self.cols == 0:
            return QMatrix.zeros(self.rows, other.cols)
        return QMatrix._wrap(self._a.dot(other._a))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._a == other._a))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"

    # structure --------------------------------------------------------------
    def blocks(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """Connected components of the sparsity pattern as (rows, cols) index arrays.

        Zero columns come out as blocks without rows; zero rows are dropped.
        Blocks are ordered by their smallest column index.
        """
        m, n = self.shape
        if n == 0:
            return []
        ri, ci = np.nonzero(self._a)
        g = coo_matrix((np.ones(len(ri), dtype=np.int8), (ri, m + ci)), shape=(m + n, m + n))
        _, labels = connected_components(g, directed=False)
        row_lab, col_lab = labels[:m], labels[m:]
        order = {}
        for j, lab in enumerate(col_lab):
            order.setdefault(lab, []).append(j)
        out = []
        for lab, cols in sorted(order.items(), key=lambda kv: kv[1][0]):
            rows = np.flatnonzero(row_lab == lab)
            out.append((rows, np.asarray(cols, dtype=np.int64)))
        return out

    def int_block(self, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
        """Integer sub-matrix with each row scaled by its common denominator."""
        sub = self._a[np.ix_(rows, cols)]
        if sub.size == 0:
            return sub
        for i in range(sub.shape[0]):
            row = sub[i]
            dens = [v.denominator for v in row if isinstance(v, Fraction)]
            if dens:
                L = lcm(*dens)
                sub[i] = [int(v * L) for v in row]
        return sub


# block-level dispatch -----------------------------------------------------------

def _block_rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    mode = get_mode()
    if mode == "trust":
        return modular.rank_trust(a)
    if mode == "verify":
        r = modular.rank_certified(a)
        if r is not None:
            return r
    return exact.rank_int(a)


def _block_kernel(a: np.ndarray) -> tuple[list[int], np.ndarray, np.ndarray]:
    """Free columns, integer kernel columns and their scale factors for one block."""
    m, n = a.shape
    if m == 0:
        K = np.zeros((n, n), dtype=object)
        for t in range(n):
            K[t, t] = 1
        return list(range(n)), K, np.ones(n, dtype=object)
    mode = get_mode()
    res = None
    if mode in ("verify", "trust"):
        res = modular.kernel_certified(a)
    if res is None:
        R, den, piv = exact.rref_int(a)
        free, K = exact.kernel_from_rref(R, den, piv, n)
        return free, K, np.full(len(free), den, dtype=object)
    free, K = res
    scale = np.array([K[f, t] for t, f in enumerate(free)], dtype=object)
    return free, K, scale


# public operations ----------------------------------------------------------------

def rank(M: QMatrix) -> int:
    """Rank over Q."""
    return sum(_block_rank(M.int_block(r, c)) for r, c in M.blocks() if len(r))


def _kernel_parts(M: QMatrix):
    for rows, cols in M.blocks():
        free, K, scale = _block_kernel(M.int_block(rows, cols))
        for t, f in enumerate(free):
            yield int(cols[f]), cols, K[:, t], scale[t]


def kernel_basis(M: QMatrix) -> list[list[Fraction]]:
    """Basis of the right null space in reduced echelon form.

    One vector per free (non-pivot) column f of the RREF of M: it has a 1 in
    position f, zeros in the other free positions, and is sorted by f.
    """
    out = []
    for f, cols, col, s in sorted(_kernel_parts(M), key=lambda t: t[0]):
        v = [Fraction(0)] * M.cols
        for c, x in zip(cols, col):
            if x:
                v[int(c)] = Fraction(x, s)
        out.append(v)
    return out


def kernel_dim(M: QMatrix) -> int:
    return M.cols - rank(M)


def pivot_columns(M: QMatrix) -> list[int]:
    """Pivot columns of the RREF (complement of the free columns)."""
    free = {f for f, *_ in _kernel_parts(M)}
    return [c for c in range(M.cols) if c not in free]


def rref(M: QMatrix) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row echelon form of M."""
    parts = sorted(_kernel_parts(M), key=lambda t: t[0])
    free = {f for f, *_ in parts}
    pivots = [c for c in range(M.cols) if c not in free]
    rows = {p: [Fraction(0)] * M.cols for p in pivots}
    for p in pivots:
        rows[p][p] = Fraction(1)
    for f, cols, col, s in parts:
        for c, x in zip(cols, col):
            c = int(c)
            if x and c != f:
                rows[c][f] = -Fraction(x, s)
    return [rows[p] for p in pivots]


def solve_membership(M: QMatrix, v: Sequence) -> list[Fraction] | None:
    """Some x with M x = v, or None when v is outside the column span.

    The returned x is the particular solution with all free variables zero.
    """
    if len(v) != M.rows:
        raise DimensionError(f"vector of length {len(v)} for {M.rows} rows")
    col = np.array([_norm(-Fraction(x)) for x in v], dtype=object).reshape(M.rows, 1)
    aug = QMatrix._wrap(np.hstack([M.raw(), col]) if M.cols else col)
    n = M.cols
    for f, cols, kcol, s in _kernel_parts(aug):
        if f == n:
            x = [Fraction(0)] * n
            for c, val in zip(cols, kcol):
                if c != n and val:
                    x[int(c)] = Fraction(val, s)
            return x
    return None


def _norm(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def in_span(M: QMatrix, v: Sequence) -> bool:
    return solve_membership(M, v) is not None
