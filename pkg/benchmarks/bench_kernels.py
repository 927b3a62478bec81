"""Compare the numba and pure-numpy backends on the two integer kernels.

    python benchmarks/bench_kernels.py [--sizes 5 6 7 8] [--repeat 5]

Both backends must agree exactly; timings are best-of-repeat wall clock.
"""

import argparse
import json
import time

import numpy as np

from hookimm import _accel


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7, 8])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    rows = []
    for n in args.sizes:
        a = rng.integers(0, 10, size=(n, n)).tolist()
        _accel.permutation_table(n)
        res = {"n": n}
        for backend in ("numpy", "numba"):
            if backend == "numba" and not _accel.NUMBA_AVAILABLE:
                continue
            _accel.set_backend(backend)
            _accel.class_sums_int(a)  # warm-up / JIT
            _accel.ryser_int(a)
            res[f"class_sums_{backend}_s"], cs = best_of(lambda: _accel.class_sums_int(a), args.repeat)
            res[f"ryser_{backend}_s"], per = best_of(lambda: _accel.ryser_int(a), args.repeat)
            res.setdefault("outputs", []).append((cs, per))
        outs = res.pop("outputs")
        res["agree"] = all(o == outs[0] for o in outs)
        rows.append(res)
        print(json.dumps(res))
    _accel.set_backend("numba" if _accel.NUMBA_AVAILABLE else "numpy")


if __name__ == "__main__":
    main()
