"""Multi-modular rank and kernel computation with exact certification.

Ranks mod p never exceed the rank over Q, so a modular rank is a proven lower
bound.  Upper bounds come from one of two exact certificates:

* a Hadamard bound: if every (r+1)-minor vanishes modulo primes whose product
  exceeds the Hadamard bound of such minors, those minors are zero;
* an explicit kernel: rational reconstruction of the modular RREF kernel,
  checked by an exact integer product ``A @ K == 0``.

When a certificate is out of reach the caller falls back to exact elimination.
"""
from __future__ import annotations

import logging
import random
from functools import lru_cache
from math import gcd, isqrt, prod

import numpy as np

from . import _kernels

logger = logging.getLogger(__name__)

PRIME_LO, PRIME_HI = 2**30, 2**31 - 1
MAX_CERT_PRIMES = 512


@lru_cache(maxsize=None)
def _prime_stream(count: int) -> tuple[int, ...]:
    from sympy import isprime

    rng = random.Random(0x3D1F)
    out: list[int] = []
    seen = set()
    while len(out) < count:
        c = rng.randrange(PRIME_LO, PRIME_HI) | 1
        if c not in seen and isprime(c):
            seen.add(c)
            out.append(c)
    return tuple(out)


def primes(count: int) -> tuple[int, ...]:
    """The first ``count`` of a fixed pseudo-random sequence of 31-bit primes."""
    size = 16
    while size < count:
        size *= 2
    return _prime_stream(size)[:count]


def to_int64(a: np.ndarray) -> np.ndarray | None:
    """int64 view of an integer object array, or None if entries are too large."""
    if a.size == 0:
        return np.zeros(a.shape, dtype=np.int64)
    hi = max(abs(int(a.max())), abs(int(a.min())))
    if hi >= 2**62:
        return None
    return a.astype(np.int64)


def reduce_mod(a: np.ndarray, small: np.ndarray | None, p: int) -> np.ndarray:
    if small is not None:
        return small % p
    return (a % p).astype(np.int64)


def hadamard_sq(a: np.ndarray, k: int) -> int:
    """Upper bound for the square of any k x k minor of integer matrix ``a``."""
    if k <= 0:
        return 1
    sq = a * a
    cols = sorted((int(v) for v in sq.sum(axis=0)), reverse=True)[:k]
    rows = sorted((int(v) for v in sq.sum(axis=1)), reverse=True)[:k]
    return min(prod(cols), prod(rows))


def rank_trust(a: np.ndarray, nprimes: int = 2) -> int:
    """Largest rank over a few primes; probabilistic, never above the true rank."""
    small = to_int64(a)
    return max(_kernels.rank_mod_p(reduce_mod(a, small, p), p) for p in primes(nprimes))


def rank_certified(a: np.ndarray) -> int | None:
    """Rank over Q certified by the Hadamard argument, or None if too costly."""
    m, n = a.shape
    small = to_int64(a)
    best = 0
    modulus = 1
    need = None
    for count, p in enumerate(primes(MAX_CERT_PRIMES), start=1):
        r = _kernels.rank_mod_p(reduce_mod(a, small, p), p)
        if r > best:
            best = r
            need = None
        if best == min(m, n):
            return best
        modulus *= p
        if need is None:
            need = hadamard_sq(a, best + 1)
            bits = need.bit_length() / 2
            if bits / 30 > MAX_CERT_PRIMES:
                logger.debug("hadamard certificate needs ~%d primes; giving up", bits / 30)
                return None
        if modulus * modulus > need:
            return best
    return None


def crt_update(res: np.ndarray, mod: int, new: np.ndarray, p: int) -> np.ndarray:
    """Combine residues mod ``mod`` (object array) with residues mod ``p``."""
    inv = pow(mod % p, -1, p)
    t = ((new.astype(object) - res) % p) * inv % p
    return res + mod * t


def rational_reconstruction(a: int, m: int) -> tuple[int, int] | None:
    """Find n/d with n = a*d (mod m), |n|, d <= sqrt(m/2); None if none exists."""
    a %= m
    if a == 0:
        return 0, 1
    bound = isqrt(m // 2)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    if t1 < 0:
        return -r1, -t1
    return r1, t1


def _reconstruct_all(res: np.ndarray, mod: int) -> tuple[np.ndarray, int] | None:
    """Reconstruct every entry with a common denominator; None on failure."""
    nums = []
    den = 1
    for v in res.flat:
        rr = rational_reconstruction(int(v), mod)
        if rr is None:
            return None
        nums.append(rr)
        den = den * rr[1] // gcd(den, rr[1])
    out = np.array([n * (den // d) for n, d in nums], dtype=object).reshape(res.shape)
    return out, den


def kernel_certified(a: np.ndarray) -> tuple[list[int], np.ndarray] | None:
    """Exact RREF kernel of integer matrix ``a`` via modular images.

    Returns ``(free_columns, K)`` with integer ``K`` whose column t, divided by
    ``K[free[t], t]``, is the reduced basis vector for free column ``free[t]``.
    None when reconstruction does not certify within the prime budget.
    """
    m, n = a.shape
    small = to_int64(a)
    best_key = None
    res = None
    mod = 1
    agree = 0
    for p in primes(MAX_CERT_PRIMES):
        b = reduce_mod(a, small, p)
        r, piv = _kernels.rref_mod_p(b, p)
        key = (r, tuple(int(c) for c in piv))
        pivset = set(key[1])
        free = [c for c in range(n) if c not in pivset]
        if best_key is None or _better(key, best_key):
            best_key, res, mod, agree = key, None, 1, 0
        elif key != best_key:
            continue
        if not free:
            return [], np.zeros((n, 0), dtype=object)
        if r == 0:
            return free, _identity_kernel(n, free)
        img = b[:r][:, free]
        res = img.astype(object) if res is None else crt_update(res, mod, img, p)
        mod *= p
        agree += 1
        # try reconstruction at geometrically spaced prime counts
        if agree & (agree - 1) == 0 or agree % 8 == 0:
            cand = _reconstruct_all(res, mod)
            if cand is None:
                continue
            num, den = cand
            K = np.zeros((n, len(free)), dtype=object)
            for t, f in enumerate(free):
                K[f, t] = den
            for i, pc in enumerate(best_key[1]):
                K[pc, :] = -num[i, :]
            if not np.any(a.dot(K)):
                return free, K
    return None


def _better(key, other) -> bool:
    # higher rank wins; at equal rank the lexicographically smaller pivots win
    return key[0] > other[0] or (key[0] == other[0] and key[1] < other[1])


def _identity_kernel(n: int, free: list[int]) -> np.ndarray:
    K = np.zeros((n, len(free)), dtype=object)
    for t, f in enumerate(free):
        K[f, t] = 1
    return K
