"""Compiled vs pure-Python Bessel kernels.

    python benchmarks/bench_kernels.py [--points 20000] [--repeat 5]

Times the raw kernels in-process, then the full oracle-equivalence grid in
one subprocess per backend (backend selection happens at import).
"""

import argparse
import importlib
import os
import random
import subprocess
import sys
import timeit

from zerofield import _kernels_py

GRID_SNIPPET = (
    "import time; from zerofield import verify, specfun; t = time.perf_counter(); "
    "verify.check_oracle_equivalence(); print(specfun.BACKEND, time.perf_counter() - t)"
)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_table(points, repeat):
    rng = random.Random(0)
    xs = [rng.uniform(0.01, 40.0) for _ in range(points)]
    pairs = [(rng.randint(0, 8), x) for x in xs[: points // 4]]
    backends = {"python": _kernels_py}
    try:
        backends["cython"] = importlib.import_module("zerofield._kernels")
    except ImportError:
        print("compiled kernels not built; timing the pure-Python backend only")
    rows = []
    for name, mod in backends.items():
        t_h0 = best(lambda: mod.h0_many(xs), repeat)
        t_jy = best(lambda: [mod.jy(n, x) for n, x in pairs], repeat)
        rows.append((name, t_h0, t_jy))
    return rows


def grid_time(pure):
    env = dict(os.environ)
    if pure:
        env["ZEROFIELD_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", GRID_SNIPPET], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rows = kernel_table(args.points, args.repeat)
    print(f"{'backend':<8} {'h0_many (' + str(args.points) + ' pts)':>22} {'jy scalar (' + str(args.points // 4) + ')':>20}")
    for name, t_h0, t_jy in rows:
        print(f"{name:<8} {t_h0 * 1e3:>19.2f} ms {t_jy * 1e3:>17.2f} ms")
    if len(rows) == 2:
        print(f"speed-up: h0_many x{rows[0][1] / rows[1][1]:.1f}, jy x{rows[0][2] / rows[1][2]:.1f}")

    print("\noracle-equivalence grid (5 radii x 3 kR x 3 modes), one run per backend:")
    for pure in (True, False):
        name, t = grid_time(pure)
        print(f"  {name:<8} {t:.3f} s")


if __name__ == "__main__":
    main()
