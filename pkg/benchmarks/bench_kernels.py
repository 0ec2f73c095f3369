"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--members 400]
"""

import argparse
import random
import sys
import timeit

from frankl import _pykernels, kernels
from frankl.core import member_key


def union_closed_members(rng, universe, count):
    """A union-closed family over ``universe`` bits with roughly ``count`` members."""
    have = {0}
    while len(have) < count:
        g = rng.getrandbits(universe)
        have |= {g | h for h in have}
    return sorted(have, key=member_key)


def cases(members, seed):
    rng = random.Random(seed)
    closed = union_closed_members(rng, 12, members)
    loose = sorted({rng.getrandbits(20) for _ in range(members)}, key=member_key)
    fams = [rng.getrandbits(32) for _ in range(2000)]
    return [
        ("sweep_union_closed n=4 (65536 families)", lambda b: list(b.sweep_union_closed(4, 0, 1 << 16))),
        (f"union_violation, {len(closed)} union-closed members", lambda b: b.union_violation(closed)),
        (f"cover_pairs, {len(closed)} members", lambda b: sorted(b.cover_pairs(closed))),
        (f"cover_pairs, {len(loose)} random members", lambda b: sorted(b.cover_pairs(loose))),
        (f"heights, {len(closed)} members", lambda b: list(b.heights(closed))),
        ("family_closure x2000 over P([5])", lambda b: [b.family_closure(f) for f in fams]),
    ]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--members", type=int, default=400)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'case':<46}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, fn in cases(args.members, args.seed):
        if fn(_pykernels) != fn(compiled):
            print(f"backends disagree on {name}", file=sys.stderr)
            return 2
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:<46}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
