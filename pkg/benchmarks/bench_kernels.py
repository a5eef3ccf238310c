"""Compare the compiled and pure-Python kernels.

Run from the repository root after building the extension:

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both backends directly.  The pipeline timings run each
backend in a fresh interpreter (``DGAKIT_PURE_PYTHON`` switches backends).
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from dgakit import _pykernels

try:
    from dgakit import _ckernels
except ImportError:
    _ckernels = None


def random_terms(rng, odd, nterms):
    out = {}
    for _ in range(nterms):
        mono = tuple(rng.randint(0, 1) if o else rng.randint(0, 2) for o in odd)
        out[mono] = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 4))
    return out


def random_matrix(rng, nrows, ncols, density=0.3):
    return [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) if rng.random() < density else Fraction(0)
             for _ in range(ncols)] for _ in range(nrows)]


PIPELINE = """
import time
from dgakit import betti_numbers, catalog, massey_scan, tensor
t = time.perf_counter()
C = tensor(catalog("g6_15_m1"), catalog("s2_model"))
betti_numbers(C, 6)
massey_scan(catalog("g6_15_m1"), [(1, 1, 2), (1, 2, 2), (2, 1, 2)])
print(time.perf_counter() - t)
"""


def pipeline(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("DGAKIT_PURE_PYTHON", None)
    if pure:
        env["DGAKIT_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", PIPELINE], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def bench(label, fn_py, fn_c, repeat):
    t_py = min(timeit.repeat(fn_py, number=1, repeat=repeat))
    if fn_c is None:
        print(f"{label:<34} python {t_py * 1e3:9.2f} ms   cython  (not built)")
        return
    t_c = min(timeit.repeat(fn_c, number=1, repeat=repeat))
    print(f"{label:<34} python {t_py * 1e3:9.2f} ms   cython {t_c * 1e3:9.2f} ms   x{t_py / t_c:5.1f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for ngens, nterms in [(8, 40), (12, 120)]:
        odd = tuple(i % 3 != 0 for i in range(ngens))
        a, b = random_terms(rng, odd, nterms), random_terms(rng, odd, nterms)
        bench(f"mul_terms {ngens} gens, {nterms}x{nterms} terms",
              lambda: _pykernels.mul_terms(a, b, odd),
              _ckernels and (lambda: _ckernels.mul_terms(a, b, odd)), args.repeat)

    for nrows, ncols in [(20, 15), (35, 35), (80, 70)]:
        m = random_matrix(rng, nrows, ncols)
        bench(f"rref_rows {nrows}x{ncols}",
              lambda: _pykernels.rref_rows(m, ncols),
              _ckernels and (lambda: _ckernels.rref_rows(m, ncols)), args.repeat)

    t_py = pipeline(True)
    line = f"{'pipeline (tensor Betti + scan)':<34} python {t_py * 1e3:9.2f} ms"
    if _ckernels is not None:
        t_c = pipeline(False)
        line += f"   cython {t_c * 1e3:9.2f} ms   x{t_py / t_c:5.1f}"
    print(line)


if __name__ == "__main__":
    main()
