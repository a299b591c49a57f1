"""Compare the compiled and pure-Python GF(p) kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--p 5]

Prints the best-of-N wall time per kernel and size, the speedup, and
checks that both backends return identical results.
"""

import argparse
import random
import timeit

from cycleib.kernels import available_backends


def workloads(rng, p):
    for n in (16, 32, 64):
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        b = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        yield f"matmul {n}x{n}", "matmul", (a, b, p)
        yield f"rref {n}x{n}", "rref", (a, n, p)
    for n in (256, 1024):
        u = [rng.randrange(p) for _ in range(n)]
        v = [rng.randrange(p) for _ in range(n)]
        yield f"convolve {n}", "convolve", (u, v, p)


def _call(mod, fn, fargs):
    if fn == "rref":
        # rref reduces its rows in place, so every call gets a fresh copy
        return lambda: mod.rref([list(r) for r in fargs[0]], *fargs[1:])
    return lambda: getattr(mod, fn)(*fargs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--p", type=int, default=5)
    args = ap.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the pure-Python timings are shown")
    rng = random.Random(0)
    print(f"{'workload':<16}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn, fargs in workloads(rng, args.p):
        times, outputs = {}, {}
        for name, mod in backends.items():
            call = _call(mod, fn, fargs)
            outputs[name] = call()
            times[name] = min(timeit.repeat(call, number=1, repeat=args.repeat))
        if len(set(map(repr, outputs.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<16}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
