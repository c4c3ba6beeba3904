"""Compare the compiled and pure-Python subset-enumeration kernels.

    python3 benchmarks/bench_kernels.py [--max-n 16] [--repeat 3]
"""
import argparse
import random
import time

from graphprim import _pykernels
from graphprim.fixtures import random_graph

try:
    from graphprim import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _inputs(n, seed):
    rng = random.Random(seed)
    while True:
        g = random_graph(rng, max_vertices=n, density=2.0 / n)
        if len(g) == n:
            break
    m = g.masks
    return n, list(m.succ), list(m.up), list(m.down), m.finite_emitters


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _bench(mod, args, repeat):
    n, succ, up, down, fin = args
    hs = _time(lambda: mod.hereditary_saturated_masks(n, succ, fin), repeat)
    tails = _time(lambda: mod.tail_masks(n, up, down, succ, fin), repeat)
    return hs, tails


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=8)
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    opts = ap.parse_args()

    print(f"{'n':>3} {'kernel':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in range(opts.min_n, opts.max_n + 1):
        args = _inputs(n, opts.seed + n)
        py = _bench(_pykernels, args, opts.repeat)
        c = _bench(_ckernels, args, opts.repeat) if _ckernels else (None, None)
        for name, p, q in zip(("hs-sets", "tails"), py, c):
            if q is None:
                print(f"{n:>3} {name:>10} {p:>10.4f} {'n/a':>10} {'n/a':>8}")
            else:
                print(f"{n:>3} {name:>10} {p:>10.4f} {q:>10.5f} {p / q:>7.0f}x")


if __name__ == "__main__":
    main()
