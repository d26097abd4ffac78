"""Compare the compiled Jacobi eigensolver against the pure-Python fallback.

Runs both backends on the same truncation matrices and prints a table of
wall time, speedup and the largest eigenvalue discrepancy.

Usage:
    python benchmarks/bench_eigen.py [--sizes 64 128 256] [--ell 1] [--repeats 3]
"""

import argparse
import time

import numpy as np

from hankel_spectra import operators
from hankel_spectra import _jacobi_py

try:
    from hankel_spectra import _jacobi
except ImportError:
    _jacobi = None


def time_solver(solver, matrix, repeats):
    best = float("inf")
    values = None
    for _ in range(repeats):
        work = matrix.copy()
        start = time.perf_counter()
        values, _sweeps, _off = solver(work, 1e-24, 50)
        best = min(best, time.perf_counter() - start)
    return best, np.asarray(values)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512])
    parser.add_argument("--ell", type=int, default=1)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _jacobi is None:
        print("compiled extension not available; showing pure-Python timings only")
    print(f"matrix family: truncation order ell={args.ell}, backend in use: "
          f"{operators.JACOBI_BACKEND}")
    header = f"{'N':>6} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>9} {'max |d eig|':>12}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        matrix = operators.hankel_truncation(args.ell, n).entries
        t_py, vals_py = time_solver(_jacobi_py.jacobi_eigenvalues, matrix, args.repeats)
        if _jacobi is None:
            print(f"{n:>6} {t_py:>12.4f} {'-':>13} {'-':>9} {'-':>12}")
            continue
        t_c, vals_c = time_solver(_jacobi.jacobi_eigenvalues, matrix, args.repeats)
        dev = float(np.max(np.abs(vals_py - vals_c)))
        print(f"{n:>6} {t_py:>12.4f} {t_c:>13.4f} {t_py / t_c:>9.1f} {dev:>12.2e}")


if __name__ == "__main__":
    main()
