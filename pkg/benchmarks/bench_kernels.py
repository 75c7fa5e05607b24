#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on the hot workloads.

Runs BFS eccentricities and canonical labeling over every connected
graph of a given order, plus one full enumeration level, against both
backends.  Usage: python benchmarks/bench_kernels.py [--n 7]
"""

import argparse
import time

from ecix import _kernels_py
from ecix.canon import rows_from_key
from ecix.enumeration import _level_keys

try:
    from ecix import _speedups
except ImportError:
    _speedups = None


def _bench(label, fn, repeat=3):
    best = min(_timed(fn) for _ in range(repeat))
    print(f"  {label:<28} {best * 1000:9.1f} ms")
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def _ecc_workload(mod, graphs):
    def run():
        for n, rows in graphs:
            mod.all_eccentricities(n, rows)
    return run


def _canon_workload(mod, graphs):
    def run():
        for n, rows in graphs:
            mod.canonical_key(n, rows)
    return run


def _level_workload(mod, parents, level):
    def run():
        out = set()
        bit = 1 << level
        for key in parents:
            _, rows = rows_from_key(key)
            for mask in range(1, bit):
                child = list(rows)
                mm = mask
                while mm:
                    child[(mm & -mm).bit_length() - 1] |= bit
                    mm &= mm - 1
                child.append(mask)
                out.add(mod.canonical_key(level + 1, child))
        return out
    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=7,
                        help="graph order for per-graph workloads (default 7)")
    args = parser.parse_args()

    keys = _level_keys(args.n)
    graphs = [rows_from_key(k) for k in keys]
    parents = _level_keys(args.n - 1)
    print(f"workload: {len(graphs)} connected graphs on {args.n} vertices; "
          f"one expansion level from {len(parents)} parents")

    backends = [("python", _kernels_py)]
    if _speedups is not None:
        backends.insert(0, ("cython", _speedups))
    else:
        print("compiled extension not built; timing the fallback only")

    results = {}
    for name, mod in backends:
        print(f"{name}:")
        results[name, "ecc"] = _bench("all_eccentricities sweep",
                                      _ecc_workload(mod, graphs))
        results[name, "canon"] = _bench("canonical_key sweep",
                                        _canon_workload(mod, graphs))
        results[name, "level"] = _bench(f"expand level {args.n - 1} -> {args.n}",
                                        _level_workload(mod, parents, args.n - 1),
                                        repeat=1)

    if _speedups is not None:
        print("speedup (python / cython):")
        for metric in ("ecc", "canon", "level"):
            ratio = results["python", metric] / results["cython", metric]
            print(f"  {metric:<28} {ratio:9.1f}x")


if __name__ == "__main__":
    main()
