"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Both implementations are called directly, so the ARTINLAB_PURE_NUMPY flag
does not matter here. The first numba call per kernel is a warm-up.
"""

import argparse
import time

import numpy as np

from artinlab import _accel, kernels
from artinlab.arrangement import intersection_lattice, reflection_arrangement
from artinlab.labels import parse_label


def best_of(repeat, func, *args):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def walk_lattice(cover_fn, normals):
    """Build every flat rank by rank with the given cover kernel; returns the flat count."""
    n = normals.shape[1]
    seen = {0}
    level = [(np.zeros(len(normals), dtype=bool), np.zeros((n, n), dtype=np.int64))]
    while level:
        nxt = []
        for closed, basis in level:
            cl, bases = cover_fn(basis, normals, closed)
            for row, nb in zip(cl, bases):
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append((row, nb))
        level = nxt
    return len(seen)


def lattice_arrays(label):
    lat = intersection_lattice(reflection_arrangement(parse_label(label)))
    masks = np.array([f.mask for f in lat.flats], dtype=np.uint64)
    ranks = np.array([f.rank for f in lat.flats], dtype=np.int64)
    return masks, ranks


def row(name, case, t_nb, t_np, same):
    speedup = t_np / t_nb if t_nb > 0 else float("inf")
    print(f"{name:<16}{case:<8}{t_nb * 1e3:>12.2f}{t_np * 1e3:>12.2f}{speedup:>10.1f}x  {'ok' if same else 'MISMATCH'}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':<16}{'case':<8}{'numba ms':>12}{'numpy ms':>12}{'speedup':>11}")
    for label in ("B3", "D4", "B4", "D5"):
        normals = reflection_arrangement(parse_label(label)).normals()
        kernels.whitney_counts_nb(normals[:2])
        t_nb, a = best_of(args.repeat, kernels.whitney_counts_nb, normals)
        t_np, b = best_of(args.repeat, kernels.whitney_counts_np, normals)
        row("whitney_counts", label, t_nb, t_np, np.array_equal(a, b))

    for label in ("D5", "F4", "B6"):
        normals = reflection_arrangement(parse_label(label)).normals()
        walk_lattice(kernels.cover_closures_nb, normals[:2])
        t_nb, a = best_of(args.repeat, walk_lattice, kernels.cover_closures_nb, normals)
        t_np, b = best_of(args.repeat, walk_lattice, kernels.cover_closures_np, normals)
        row("cover_closures", label, t_nb, t_np, a == b)

    for label in ("D5", "F4", "B6"):
        masks, ranks = lattice_arrays(label)
        kernels.mobius_nb(masks[:2], ranks[:2])
        t_nb, a = best_of(args.repeat, kernels.mobius_nb, masks, ranks)
        t_np, b = best_of(args.repeat, kernels.mobius_np, masks, ranks)
        row("mobius", label, t_nb, t_np, np.array_equal(a, b))


if __name__ == "__main__":
    main()
