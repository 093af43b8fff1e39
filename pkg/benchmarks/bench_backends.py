"""Compare the numba kernels with the pure-numpy fallback.

Two parts:

* per-kernel timings, both backends called side by side in this process;
* an end-to-end CI-order run over a fixed random corpus, once per backend in
  a child process with CIBOOLEAN_DISABLE_NUMBA set accordingly.

    python3 benchmarks/bench_backends.py [--n 10] [--m 4] [--repeat 5] [--json out.json]
"""
import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np

from ciboolean import kernels

END_TO_END = """
import time, numpy as np
from ciboolean import GeneralizedFunction, ci_order, kernels
from ciboolean.ci import METHODS
rng = np.random.default_rng({seed})
n, m = {n}, {m}
corpus = [GeneralizedFunction(n, m, rng.integers(0, 1 << m, size=1 << n)) for _ in range({count})]
corpus += [GeneralizedFunction.constant(n, m, a) for a in range(1 << m)]
for meth in METHODS:  # warm-up / load compiled kernels
    ci_order(corpus[0], meth)
    ci_order(corpus[-1], meth)
start = time.perf_counter()
for g in corpus:
    for meth in METHODS:
        ci_order(g, meth)
print(kernels.BACKEND_NAME, time.perf_counter() - start)
"""


def kernel_cases(n, m, rng):
    vals = rng.integers(0, 1 << m, size=1 << n).astype(np.int64)
    bits = vals & 1
    perm = rng.permutation(n).astype(np.int64)
    level = n
    return {
        "fwht": (1 - 2 * bits,),
        "mobius_mod": (vals, 1 << m),
        "walsh_component_point": (bits, 5),
        "walsh_generalized_coeffs": (vals, 5, m),
        "dft_coeffs": (vals, m, 1, n, level),
        "conditional_counts": (vals, np.array([0, n - 1], dtype=np.int64), 1 << m),
        "permute_values": (vals, perm),
        "combine_components": (rng.integers(0, 2, size=(m, 1 << n)).astype(np.int64), (1 << m) - 1),
    }


def time_kernels(n, m, repeat, seed):
    rng = np.random.default_rng(seed)
    rows = []
    for name, args in kernel_cases(n, m, rng).items():
        row = {"kernel": name}
        for label, mod in (("numpy", kernels.numpy_backend), ("numba", kernels.numba_backend)):
            if mod is None:
                continue
            fn = getattr(mod, name)
            fn(*args)  # compile or warm caches
            number = 200
            best = min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number
            row[label] = best
        rows.append(row)
    return rows


def end_to_end(n, m, count, seed):
    out = {}
    code = END_TO_END.format(seed=seed, n=n, m=m, count=count)
    for flag in ("1", "0"):
        env = dict(os.environ, CIBOOLEAN_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        name, seconds = res.stdout.split()
        out[name] = float(seconds)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--m", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--e2e-n", type=int, default=8)
    parser.add_argument("--e2e-m", type=int, default=2)
    parser.add_argument("--e2e-count", type=int, default=200)
    parser.add_argument("--json", metavar="PATH")
    args = parser.parse_args(argv)

    rows = time_kernels(args.n, args.m, args.repeat, args.seed)
    print(f"kernels at n={args.n} m={args.m} (best of {args.repeat}, microseconds per call)")
    print(f"  {'kernel':<26}{'numpy':>10}{'numba':>10}{'speedup':>9}")
    for row in rows:
        np_us = row["numpy"] * 1e6
        nb_us = row.get("numba", float("nan")) * 1e6
        print(f"  {row['kernel']:<26}{np_us:>10.2f}{nb_us:>10.2f}{np_us / nb_us:>8.1f}x")

    e2e = end_to_end(args.e2e_n, args.e2e_m, args.e2e_count, args.seed)
    print(f"ci_order, all five methods, {args.e2e_count} random + constant functions "
          f"at n={args.e2e_n} m={args.e2e_m}:")
    for name, seconds in e2e.items():
        print(f"  {name:<6} {seconds:.2f} s")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"kernels": rows, "end_to_end": e2e, "args": vars(args)}, fh, indent=2)


if __name__ == "__main__":
    main()
