#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Both backends produce identical outputs for identical seeds (the test suite
asserts this bit for bit); this script only measures the speed gap.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from wordpath import _pure
from wordpath.aspl import default_schedule
from wordpath.kernels import HAVE_SPEEDUPS

if HAVE_SPEEDUPS:
    from wordpath import _speedups as ext


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    if not HAVE_SPEEDUPS:
        raise SystemExit("compiled extension not built; nothing to compare "
                         "(pip install -e . rebuilds it)")

    steps = 1000 if args.quick else 3000
    sh_steps = 2000 if args.quick else 8000
    seed = 42

    rows = []

    t_c, tape_c = timed(ext.dm_grow, 7, 2, 0.05, 1.0, 0.0, 0.0, steps, seed)
    t_p, tape_p = timed(_pure.dm_grow, 7, 2, 0.05, 1.0, 0.0, 0.0, steps, seed)
    assert np.array_equal(tape_c[2], tape_p.payload)
    rows.append((f"dm_grow steps={steps}", t_c, t_p))

    t_c, _ = timed(ext.sh_grow, 1, 1.0, 0.075, 0.0, 0.0, 0, sh_steps, 0, seed)
    t_p, _ = timed(_pure.sh_grow, 1, 1.0, 0.075, 0.0, 0.0, False, sh_steps, 0, seed)
    rows.append((f"sh_grow steps={sh_steps}", t_c, t_p))

    t_c, _ = timed(ext.hybrid_grow, 7, 2, 0.05, 1.0, 1.0, 0.075, steps, seed)
    t_p, _ = timed(_pure.hybrid_grow, 7, 2, 0.05, 1.0, 1.0, 0.075, steps, seed)
    rows.append((f"hybrid_grow steps={steps}", t_c, t_p))

    tape = _pure.dm_grow(7, 2, 0.05, 1.0, 0.0, 0.0, steps, seed)
    g = tape.replay()
    indptr, indices = g.to_csr()
    sources = np.arange(g.n_nodes, dtype=np.int64)
    t_c, (rm_c, _) = timed(ext.bfs_rowmeans, indptr, indices, sources)
    t_p, (rm_p, _) = timed(_pure.bfs_rowmeans, indptr, indices, sources)
    assert np.array_equal(rm_c, rm_p)
    rows.append((f"exact ASPL N={g.n_nodes}", t_c, t_p))

    cps = np.asarray(default_schedule(steps + 7), dtype=np.int64)
    empty = np.empty(0, dtype=np.int64)
    t_c, res_c = timed(ext.track_aspl, tape.kinds, tape.offsets, tape.payload,
                       empty, cps, 500, 128, seed)
    t_p, res_p = timed(_pure.track_aspl, tape.kinds, tape.offsets, tape.payload,
                       empty, cps, 500, 128, seed)
    assert np.array_equal(res_c[1], res_p[1])
    rows.append((f"track curve ({len(cps)} checkpoints)", t_c, t_p))

    width = max(len(r[0]) for r in rows)
    print(f"{'task'.ljust(width)}  compiled    pure      speedup")
    for name, t_c, t_p in rows:
        print(f"{name.ljust(width)}  {t_c:8.3f}s  {t_p:8.3f}s  {t_p / t_c:7.1f}x")


if __name__ == "__main__":
    main()
