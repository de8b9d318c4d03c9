"""Time the compiled kernels against their pure-Python twins.

    python benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import random
import sys
import timeit

from grafotop import _pykernels
from grafotop.cohomology import _derivative_rows
from grafotop.graph import random_graph

try:
    from grafotop import _ckernels
except ImportError:
    _ckernels = None


def _workloads(seed):
    rng = random.Random(seed)
    g = random_graph(40, 0.5, rng)
    dense = random_graph(18, 0.6, rng)
    rows = _derivative_rows(g, 1)
    ncols = len(rows[0]) if rows else 0
    # clique bitmasks of a dense 18-vertex graph for the subset transform
    grades = _pykernels.clique_grades(dense.order, list(dense.masks))
    cm, sg = [], []
    for k, gr in enumerate(grades):
        for c in gr:
            m = 0
            for i in c:
                m |= 1 << i
            cm.append(m)
            sg.append(-1 if k % 2 else 1)
    return {
        "clique_grades (n=40, p=.5)": lambda mod: mod.clique_grades(g.order, list(g.masks)),
        f"integer_rank ({len(rows)}x{ncols})": lambda mod: mod.integer_rank(rows, ncols),
        "subset_euler (d=18)": lambda mod: mod.subset_euler(dense.order, cm, sg),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown", file=sys.stderr)
    print(f"{'kernel':34s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in _workloads(args.seed).items():
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:34s} {tp:10.4f} {'-':>10s} {'-':>8s}")
            continue
        assert fn(_pykernels) == fn(_ckernels), name
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:34s} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
