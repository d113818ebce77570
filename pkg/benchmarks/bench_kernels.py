"""Time the hot kernels on each available backend.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from arraycodes.gf import field
from arraycodes.kernels import available_backends, make_kernel


def workloads(F, rng):
    q = F.q
    A = [[rng.randrange(q) for _ in range(32)] for _ in range(32)]
    B = [[rng.randrange(q) for _ in range(32)] for _ in range(32)]
    S = [[rng.randrange(q) for _ in range(16)] for _ in range(8)]
    poly = [rng.randrange(q) for _ in range(20)]
    pts = list(range(1, min(q, 200)))
    M = [rng.randrange(q) for _ in range(6)]
    return {
        "matmul 32x32": lambda k: k.matmul(A, B),
        "rank 32x32": lambda k: k.rank(A, 0, 32),
        "eval_many deg19": lambda k: k.eval_many(poly, pts),
        "mul_rows_trunc 8x16": lambda k: k.mul_rows_trunc(S, M, 16),
        "feng_tzeng 8x16": lambda k: k.feng_tzeng(S, 0, 16),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--q", type=int, default=256)
    args = ap.parse_args(argv)
    F = field(args.q)
    jobs = workloads(F, random.Random(0))
    backends = {name: make_kernel(F, mod) for name, mod in available_backends().items()}
    names = list(backends)
    print("GF(%d), %d repeats, microseconds per call" % (args.q, args.repeat))
    print("%-22s" % "kernel" + "".join("%12s" % n for n in names) + ("%10s" % "speedup" if len(names) > 1 else ""))
    for label, fn in jobs.items():
        times = {n: timeit.timeit(lambda: fn(k), number=args.repeat) / args.repeat * 1e6
                 for n, k in backends.items()}
        row = "%-22s" % label + "".join("%12.1f" % times[n] for n in names)
        if "cython" in times:
            row += "%9.1fx" % (times["python"] / times["cython"])
        print(row)


if __name__ == "__main__":
    main()
