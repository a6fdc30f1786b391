"""Compiled kernel vs pure-Python kernel on the same workloads.

    python3 benchmarks/bench_kernel.py [--n 20000] [--repeat 3]
"""
import argparse
import random
import timeit

from altsylvester import _kernel_py

try:
    from altsylvester import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

MULTIPLIERS = {
    "const:1": lambda n: 1,
    "pow:2": lambda n: 2 ** n,
}


def workloads(n, seed=1):
    rng = random.Random(seed)
    small = [(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 10 ** 6)) for _ in range(n)]
    # term sizes grow doubly exponentially, so 12-digit inputs already
    # leave the machine-word range after a few steps
    big = [(rng.randint(1, 10 ** 12), rng.randint(10 ** 11, 10 ** 12)) for _ in range(n // 10)]
    return {"word-sized": small, "12-digit": big}


def run(kernel, pairs, c):
    expand = kernel.expand_fraction
    for p, q in pairs:
        expand(p, q, c, 10_000)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernels = [("python", _kernel_py)] + ([("cython", _kernel_c)] if _kernel_c else [])
    if _kernel_c is None:
        print("compiled kernel not built; showing the pure-Python timings only")
    print(f"{'workload':<12} {'cseq':<8} " + " ".join(f"{k:>10}" for k, _ in kernels) + "   speedup")
    for wname, pairs in workloads(args.n).items():
        for cname, c in MULTIPLIERS.items():
            times = [min(timeit.repeat(lambda: run(k, pairs, c), number=1, repeat=args.repeat))
                     for _, k in kernels]
            speed = f"{times[0] / times[1]:8.2f}x" if len(times) == 2 else ""
            print(f"{wname:<12} {cname:<8} " + " ".join(f"{t:9.3f}s" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
