"""Compare the compiled and pure-Python Jacobi kernels.

Usage:
    python benchmarks/bench_jacobi.py [--repeat R] [--orders 5 12 20 40]

Times the raw kernels on Seidel matrices of random looped graphs (the
matrices the scans actually solve) and one exhaustive energy-bracket scan
with each kernel forced.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from seidel_loops.energy import shifted_seidel
from seidel_loops.spectra import _jacobi_py
from seidel_loops.spectra.matrix import JACOBI_REL_TOL, MAX_SWEEPS
from seidel_loops.verify import random_instance
from seidel_loops.graph import add_loops

try:
    from seidel_loops.spectra._jacobi_ext import jacobi_kernel as ext_kernel
except ImportError:
    ext_kernel = None


def matrices(order, count, seed=0):
    out = []
    for i in range(count):
        g, w, _ = random_instance(seed, i, order, order)
        out.append(np.ascontiguousarray(shifted_seidel(add_loops(g, w)).array))
    return out


def time_kernel(kernel, mats, repeat):
    best = float("inf")
    for _ in range(repeat):
        work = [m.copy() for m in mats]
        t0 = time.perf_counter()
        for a in work:
            kernel(a, None, JACOBI_REL_TOL * float(np.linalg.norm(a)), MAX_SWEEPS)
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def time_scan(pure):
    env = dict(os.environ, SEIDEL_LOOPS_PURE_PYTHON="1" if pure else "0")
    code = ("import time; from seidel_loops.verify import scan, summarize;"
            "t=time.perf_counter(); summarize(scan(5, n_min=2, workers=1)); print(time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--orders", type=int, nargs="+", default=[5, 12, 20, 40])
    ap.add_argument("--skip-scan", action="store_true")
    args = ap.parse_args()
    if ext_kernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1

    print(f"{'order':>5} {'count':>6} {'python us':>11} {'cython us':>11} {'speedup':>8}")
    for n in args.orders:
        count = max(5, 2000 // (n * n))
        mats = matrices(n, count)
        t_py = time_kernel(_jacobi_py.jacobi_kernel, mats, args.repeat)
        t_ext = time_kernel(ext_kernel, mats, args.repeat)
        print(f"{n:>5} {count:>6} {t_py * 1e6:>11.1f} {t_ext * 1e6:>11.1f} {t_py / t_ext:>7.1f}x")

    if not args.skip_scan:
        t_py, t_ext = time_scan(True), time_scan(False)
        print(f"\nexhaustive bracket scan n=2..5 (33864 records): "
              f"python {t_py:.2f}s, cython {t_ext:.2f}s, speedup {t_py / t_ext:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
