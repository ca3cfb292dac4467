"""Compare the numba and numpy mod-p elimination kernels.

Usage: python benchmarks/bench_kernels.py [--sizes 100 200 400] [--repeat 3]

Random dense matrices and the blocks of a real Jacobian matrix are reduced
with both backends; the script checks that they agree and prints timings.
"""
import argparse
import time

import numpy as np

from milnorfiber import catalog
from milnorfiber.exactla import _kernels, modular
from milnorfiber.jacobian import jacobian_matrix

P = modular.primes(1)[0]


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def run_case(label, a, repeat):
    row = [label, f"{a.shape[0]}x{a.shape[1]}"]
    results = {}
    for name in ("numba", "numpy"):
        _kernels.set_backend(name)
        secs, (rank, piv) = best_of(lambda: _kernels.rref_mod_p(a.copy(), P), repeat)
        results[name] = (rank, tuple(piv))
        row.append(f"{secs * 1000:9.2f}")
    assert results["numba"] == results["numpy"], f"backends disagree on {label}"
    row.append(str(results["numba"][0]))
    return row


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    _kernels.warmup()

    rng = np.random.default_rng(7)
    rows = []
    for n in args.sizes:
        a = rng.integers(0, P, size=(n, n + n // 2), dtype=np.int64)
        rows.append(run_case("random", a, args.repeat))

    curve = catalog.build("e14-sextic")
    M = jacobian_matrix(curve, 20)
    r, c = max(M.blocks(), key=lambda b: len(b[1]))
    a = modular.reduce_mod(M.int_block(r, c), None, P)
    rows.append(run_case("jacobian e14 j=20", a, args.repeat))

    header = ["case", "shape", "numba ms", "numpy ms", "rank"]
    widths = [max(len(str(x[i])) for x in rows + [header]) for i in range(len(header))]
    for line in [header] + rows:
        print("  ".join(str(v).rjust(w) for v, w in zip(line, widths)))


if __name__ == "__main__":
    main()
