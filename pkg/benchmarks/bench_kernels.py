"""Compare the compiled and pure-Python word enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit
from itertools import combinations

from starfact.kernels import available_backends
from starfact.oracle import star_generators

CASES = [
    ("star n=5 r=9", 5, lambda n: star_generators(n), 9, True),
    ("star n=6 r=9", 6, lambda n: star_generators(n), 9, True),
    ("star n=7 r=8", 7, lambda n: star_generators(n), 8, True),
    ("hurwitz prefix n=4 r=6", 4, lambda n: list(combinations(range(n), 2)), 6, False),
    ("hurwitz prefix n=5 r=5", 5, lambda n: list(combinations(range(n), 2)), 5, False),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"{'case':<26}" + "".join(f"{name:>12}" for name in names) + ("     speedup" if len(names) > 1 else ""))
    for label, n, gens_for, r, require_all in CASES:
        gens = gens_for(n)
        results, times = {}, {}
        for name in names:
            fn = backends[name].word_counts
            results[name] = fn(n, gens, r, require_all)
            times[name] = min(timeit.repeat(lambda: fn(n, gens, r, require_all), number=1, repeat=args.repeat))
        if len(set(map(tuple, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        row = f"{label:<26}" + "".join(f"{times[name]:>11.3f}s" for name in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
