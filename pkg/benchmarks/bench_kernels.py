"""Compiled versus pure-Python kernels on the workloads the acceptance runs use.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from gammazero._kernels import _pure
from gammazero.cabling import search_order
from gammazero.chords import enumerate_diagrams, pairing_from_word

try:
    from gammazero._kernels import _fast
except ImportError:  # extension not built
    _fast = None


def random_pairing(rng: random.Random, n: int) -> tuple[int, ...]:
    labels = [i for i in range(n) for _ in range(2)]
    rng.shuffle(labels)
    return pairing_from_word(labels)


def workloads():
    deg6 = [d.pairing for d in enumerate_diagrams(6)]
    rng = random.Random(0)
    big = [random_pairing(rng, 10) for _ in range(20)]
    lifts = [(p, search_order(p)) for p in (d.pairing for k in range(1, 6) for d in enumerate_diagrams(k))]
    return {
        "state sum, all 902 diagrams of degree 6": lambda m: [m.sl_state_sum(p) for p in deg6],
        "state sum, 20 random diagrams of degree 10": lambda m: [m.sl_state_sum(p) for p in big],
        "lift count p=3, all 131 diagrams of degree 1..5": lambda m: [m.count_lifts(p, 3, o) for p, o in lifts],
        "boundary walk, degree 6": lambda m: [m.boundary_components_all(p) for p in deg6],
    }


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _fast is None:
        print("compiled kernels not built; nothing to compare")
        return
    print(f"{'workload':<50} {'pure s':>9} {'cython s':>9} {'speedup':>8}")
    for name, fn in workloads().items():
        assert fn(_pure) == fn(_fast), name
        tp = min(timeit.repeat(lambda: fn(_pure), number=1, repeat=args.repeat))
        tf = min(timeit.repeat(lambda: fn(_fast), number=1, repeat=args.repeat))
        print(f"{name:<50} {tp:>9.4f} {tf:>9.4f} {tp / tf:>7.1f}x")


if __name__ == "__main__":
    main()
