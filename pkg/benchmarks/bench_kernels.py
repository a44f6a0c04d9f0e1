"""Compare the numba and numpy kernels on the gluing workload of complexity n.

    python3 benchmarks/bench_kernels.py [n] [--repeat R]
"""
import argparse
import time

import numpy as np

from tricrit import _kernels
from tricrit.enumeration import _gluing_array, _point_types, _type_pairs


def workload(n):
    types = _point_types(n)
    out = []
    for i, j in _type_pairs(n):
        a, b = types[i], types[j]
        raw = _gluing_array(a, b)
        out.append((raw, np.array(a.other_index), np.array(b.other_index), np.argsort(a.edge_auts, axis=1), b.edge_auts))
    return out


def run(jobs, n):
    m = 2 * n - 1
    t0 = time.perf_counter()
    masks = [_kernels.admissible_mask(raw, ba, gb, n) for raw, ba, gb, _, _ in jobs]
    t1 = time.perf_counter()
    keys = [_kernels.orbit_keys(raw[mask], ai, beta, m) for (raw, _, _, ai, beta), mask in zip(jobs, masks)]
    t2 = time.perf_counter()
    classes = sum(len(np.unique(k)) for k in keys)
    return t1 - t0, t2 - t1, classes


def main():
    p = argparse.ArgumentParser()
    p.add_argument("n", type=int, nargs="?", default=5)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    jobs = workload(args.n)
    rows = sum(len(j[0]) for j in jobs)
    print(f"n={args.n}: {len(jobs)} type pairs, {rows} raw gluings")
    for backend in _kernels.available_backends():
        _kernels.set_backend(backend)
        run(jobs[:1], args.n)  # compile / warm up
        best = min((run(jobs, args.n) for _ in range(args.repeat)), key=lambda r: r[0] + r[1])
        adm, orb, classes = best
        print(f"{backend:>6}: admissible {adm:8.3f}s  orbit keys {orb:8.3f}s  classes {classes}")


if __name__ == "__main__":
    main()
