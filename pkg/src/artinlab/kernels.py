"""Exact integer kernels behind the arrangement computations.

Every kernel exists twice: a numba version (``*_nb``) and a vectorised numpy
version (``*_np``). The public names dispatch on :mod:`artinlab._accel`.

Subspaces are tracked through an *echelon basis*: an ``(n, n)`` int64 array
whose row ``c`` is either zero or a vector whose first nonzero entry sits in
column ``c``. Reduction is fraction-free (``v <- p*v - v[c]*row``) followed by
division by the gcd of the row, so all arithmetic stays in small integers.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

# Guard for the numpy path; entries in reflection arrangements stay tiny.
_OVERFLOW_LIMIT = 1 << 40


# --------------------------------------------------------------------------
# numba implementations
# --------------------------------------------------------------------------


@njit
def _gcd_nb(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@njit
def _normalize_nb(v):
    g = 0
    for j in range(v.shape[0]):
        g = _gcd_nb(g, v[j])
    if g > 1:
        for j in range(v.shape[0]):
            v[j] //= g


@njit
def _reduce_nb(basis, v):
    n = v.shape[0]
    for c in range(n):
        p = basis[c, c]
        f = v[c]
        if p == 0 or f == 0:
            continue
        for j in range(n):
            v[j] = p * v[j] - f * basis[c, j]
        _normalize_nb(v)


@njit
def _lead_nb(v):
    for j in range(v.shape[0]):
        if v[j] != 0:
            return j
    return -1


@njit
def whitney_counts_nb(normals):
    m, n = normals.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    counts[0] = 1  # empty subset
    if m == 0:
        return counts
    stack = np.zeros((m + 1, n, n), dtype=np.int64)
    ranks = np.zeros(m + 1, dtype=np.int64)
    nxt = np.zeros(m + 1, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    depth = 0
    while depth >= 0:
        j = nxt[depth]
        if j >= m:
            depth -= 1
            continue
        nxt[depth] = j + 1
        stack[depth + 1, :, :] = stack[depth, :, :]
        for t in range(n):
            v[t] = normals[j, t]
        _reduce_nb(stack[depth + 1], v)
        lead = _lead_nb(v)
        if lead >= 0:
            stack[depth + 1, lead, :] = v
            ranks[depth + 1] = ranks[depth] + 1
        else:
            ranks[depth + 1] = ranks[depth]
        if (depth + 1) % 2 == 0:
            counts[ranks[depth + 1]] += 1
        else:
            counts[ranks[depth + 1]] -= 1
        nxt[depth + 1] = j + 1
        depth += 1
    return counts


@njit
def cover_closures_nb(basis, normals, closed):
    m, n = normals.shape
    covered = closed.copy()
    out_closed = np.zeros((m, m), dtype=np.bool_)
    out_bases = np.zeros((m, n, n), dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    k = 0
    for h in range(m):
        if covered[h]:
            continue
        for t in range(n):
            v[t] = normals[h, t]
        _reduce_nb(basis, v)
        lead = _lead_nb(v)
        if lead < 0:
            raise ValueError("hyperplane missing from closure")
        nb = basis.copy()
        nb[lead, :] = v
        for j in range(m):
            inside = closed[j]
            if not inside:
                for t in range(n):
                    v[t] = normals[j, t]
                _reduce_nb(nb, v)
                inside = _lead_nb(v) < 0
            if inside:
                out_closed[k, j] = True
                covered[j] = True
        out_bases[k] = nb
        k += 1
    return out_closed[:k], out_bases[:k]


@njit
def mobius_nb(masks, ranks):
    f = masks.shape[0]
    mu = np.zeros(f, dtype=np.int64)
    if f == 0:
        return mu
    mu[0] = 1
    for x in range(1, f):
        mx = masks[x]
        s = 0
        for y in range(x):
            if ranks[y] >= ranks[x]:
                break
            if masks[y] & ~mx == 0:
                s += mu[y]
        mu[x] = -s
    return mu


# --------------------------------------------------------------------------
# numpy implementations
# --------------------------------------------------------------------------


def _normalize_rows_np(rows: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(rows, axis=-1, keepdims=True)
    g[g == 0] = 1
    rows //= g
    if np.abs(rows).max(initial=0) > _OVERFLOW_LIMIT:
        raise OverflowError("integer growth in echelon reduction")
    return rows


def _reduce_rows_np(basis: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Reduce each row of ``rows`` against a single echelon basis."""
    rows = rows.astype(np.int64, copy=True)
    n = basis.shape[0]
    for c in range(n):
        p = basis[c, c]
        if p == 0:
            continue
        f = rows[:, c : c + 1]
        hit = f[:, 0] != 0
        if not hit.any():
            continue
        rows[hit] = p * rows[hit] - f[hit] * basis[c]
        rows[hit] = _normalize_rows_np(rows[hit])
    return rows


def _reduce_batched_np(bases: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Reduce one vector against a stack of echelon bases, one result per basis."""
    s, n, _ = bases.shape
    rows = np.broadcast_to(v.astype(np.int64), (s, n)).copy()
    for c in range(n):
        p = bases[:, c, c]
        f = rows[:, c]
        hit = (p != 0) & (f != 0)
        if not hit.any():
            continue
        rows[hit] = p[hit, None] * rows[hit] - f[hit, None] * bases[hit, c, :]
        rows[hit] = _normalize_rows_np(rows[hit])
    return rows


def _insert_np(basis: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, bool]:
    w = _reduce_rows_np(basis, v[None, :])[0]
    nz = np.flatnonzero(w)
    if nz.size == 0:
        return basis, False
    out = basis.copy()
    out[nz[0]] = w
    return out, True


def whitney_counts_np(normals: np.ndarray, block: int = 12) -> np.ndarray:
    normals = np.asarray(normals, dtype=np.int64)
    m, n = normals.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    k = min(m, block)
    head, tail = normals[: m - k], normals[m - k :]

    def expand(basis: np.ndarray, rank: int, parity: int) -> None:
        bases = basis[None].copy()
        ranks = np.array([rank], dtype=np.int64)
        signs = np.array([parity], dtype=np.int64)
        for v in tail:
            red = _reduce_batched_np(bases, v)
            nz = red != 0
            grows = nz.any(axis=1)
            lead = nz.argmax(axis=1)
            inc = bases.copy()
            idx = np.flatnonzero(grows)
            inc[idx, lead[idx], :] = red[idx]
            bases = np.concatenate([bases, inc])
            ranks = np.concatenate([ranks, ranks + grows])
            signs = np.concatenate([signs, -signs])
        np.add.at(counts, ranks, signs)

    def walk(start: int, basis: np.ndarray, rank: int, parity: int) -> None:
        expand(basis, rank, parity)
        for j in range(start, len(head)):
            nb, grew = _insert_np(basis, head[j])
            walk(j + 1, nb, rank + int(grew), -parity)

    walk(0, np.zeros((n, n), dtype=np.int64), 0, 1)
    return counts


def cover_closures_np(
    basis: np.ndarray, normals: np.ndarray, closed: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    m, n = normals.shape
    covered = closed.copy()
    out_closed, out_bases = [], []
    for h in range(m):
        if covered[h]:
            continue
        nb, grew = _insert_np(basis, normals[h])
        if not grew:
            raise ValueError("hyperplane missing from closure")
        red = _reduce_rows_np(nb, normals)
        inside = closed | ~red.any(axis=1)
        covered |= inside
        out_closed.append(inside)
        out_bases.append(nb)
    if not out_closed:
        return np.zeros((0, m), dtype=bool), np.zeros((0, n, n), dtype=np.int64)
    return np.array(out_closed), np.array(out_bases)


def mobius_np(masks: np.ndarray, ranks: np.ndarray) -> np.ndarray:
    f = masks.shape[0]
    mu = np.zeros(f, dtype=np.int64)
    if f == 0:
        return mu
    mu[0] = 1
    # first index of each rank, so y ranges over strictly lower ranks
    starts = np.searchsorted(ranks, ranks, side="left")
    for x in range(1, f):
        lim = starts[x]
        below = (masks[:lim] & ~masks[x]) == 0
        mu[x] = -mu[:lim][below].sum()
    return mu


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------


def whitney_counts(normals: np.ndarray) -> np.ndarray:
    """``counts[r] = sum over subsets S of rank r of (-1)^|S|`` (brute force)."""
    normals = np.ascontiguousarray(normals, dtype=np.int64)
    if USE_NUMBA:
        return whitney_counts_nb(normals)
    return whitney_counts_np(normals)


def cover_closures(basis, normals, closed):
    """Closures of every flat covering the flat spanned by ``basis``.

    ``closed`` marks the hyperplanes already containing that flat. Returns a
    boolean ``(k, m)`` array of cover closures and their echelon bases.
    """
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    normals = np.ascontiguousarray(normals, dtype=np.int64)
    closed = np.ascontiguousarray(closed, dtype=np.bool_)
    if USE_NUMBA:
        return cover_closures_nb(basis, normals, closed)
    return cover_closures_np(basis, normals, closed)


def mobius(masks: np.ndarray, ranks: np.ndarray) -> np.ndarray:
    """Moebius values from the bottom for flats given as closure bitmasks.

    Flats must be sorted by rank with the bottom element first.
    """
    masks = np.ascontiguousarray(masks, dtype=np.uint64)
    ranks = np.ascontiguousarray(ranks, dtype=np.int64)
    if USE_NUMBA:
        return mobius_nb(masks, ranks)
    return mobius_np(masks, ranks)


def echelon_insert(basis: np.ndarray, v) -> tuple[np.ndarray, bool]:
    """Add ``v`` to an echelon basis; the flag says whether the rank grew."""
    return _insert_np(np.asarray(basis, dtype=np.int64), np.asarray(v, dtype=np.int64))


def rank(rows) -> int:
    """Exact rank of an integer matrix."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return 0
    basis = np.zeros((rows.shape[1], rows.shape[1]), dtype=np.int64)
    r = 0
    for v in rows:
        basis, grew = _insert_np(basis, v)
        r += grew
    return r
