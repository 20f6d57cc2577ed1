"""Central hyperplane arrangements, their intersection lattices and polynomials."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .labels import ArtinLabError, Family, GroupLabel, parse_label

DEFAULT_BOUND = 64
WHITNEY_LIMIT = 24


def _primitive(normal: Iterable[int]) -> tuple[int, ...]:
    v = [int(x) for x in normal]
    if not any(v):
        raise ArtinLabError("hyperplane normal must be nonzero")
    g = math.gcd(*v)
    v = [x // g for x in v]
    if next(x for x in v if x) < 0:
        v = [-x for x in v]
    return tuple(v)


@dataclass(frozen=True, order=True)
class Hyperplane:
    """A central hyperplane, stored by its primitive, sign-normalised integer normal."""

    normal: tuple[int, ...]

    def __post_init__(self):
        if _primitive(self.normal) != self.normal:
            raise ArtinLabError(f"normal {self.normal} is not primitive and sign-normalised; use Hyperplane.of")

    @classmethod
    def of(cls, normal: Iterable[int]) -> Hyperplane:
        return cls(_primitive(normal))

    def normalized(self) -> Hyperplane:
        return Hyperplane(_primitive(self.normal))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((Fraction(a) * Fraction(x) for a, x in zip(self.normal, point)), Fraction(0))

    def equation(self) -> str:
        terms = []
        for i, a in enumerate(self.normal, 1):
            if a == 0:
                continue
            coef = "" if abs(a) == 1 else str(abs(a))
            sign = "-" if a < 0 else "+"
            terms.append((sign, f"{coef}z{i}"))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]]) + " = 0"


@dataclass(frozen=True)
class Arrangement:
    """Central arrangement in C^n.

    ``rank2_lines`` marks the combinatorial rank-two arrangement of p concurrent
    lines (the dihedral types), which carries no coordinates.
    """

    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...] = ()
    rank2_lines: int | None = None
    name: str = ""

    def __post_init__(self):
        if self.rank2_lines is not None:
            if self.ambient_dim != 2 or self.hyperplanes:
                raise ArtinLabError("combinatorial rank-two arrangements live in dimension 2 without normals")
            if self.rank2_lines < 1:
                raise ArtinLabError("need at least one line")
            return
        seen = set()
        for h in self.hyperplanes:
            if h.dim != self.ambient_dim:
                raise ArtinLabError(f"hyperplane {h.normal} does not live in dimension {self.ambient_dim}")
            if h in seen:
                raise ArtinLabError(f"duplicate hyperplane {h.normal}")
            seen.add(h)

    @classmethod
    def from_normals(cls, dim: int, normals: Iterable[Iterable[int]], name: str = "") -> Arrangement:
        return cls(dim, tuple(Hyperplane.of(v) for v in normals), name=name)

    @property
    def size(self) -> int:
        if self.rank2_lines is not None:
            return self.rank2_lines
        return len(self.hyperplanes)

    @property
    def is_combinatorial(self) -> bool:
        return self.rank2_lines is not None

    def normals(self) -> np.ndarray:
        if self.is_combinatorial:
            raise ArtinLabError("combinatorial arrangement has no normals")
        return np.array([h.normal for h in self.hyperplanes], dtype=np.int64).reshape(-1, self.ambient_dim)

    @property
    def rank(self) -> int:
        if self.is_combinatorial:
            return min(self.rank2_lines, 2)
        return kernels.rank(self.normals())

    def contains(self, point: Sequence) -> bool:
        """True when the point lies on some hyperplane."""
        if self.is_combinatorial:
            raise ArtinLabError("combinatorial arrangement has no coordinates")
        return any(h.evaluate(point) == 0 for h in self.hyperplanes)

    def to_text(self) -> str:
        if self.is_combinatorial:
            raise ArtinLabError("combinatorial arrangements have no file form")
        lines = [f"dim {self.ambient_dim}"]
        lines += [" ".join(str(x) for x in h.normal) for h in self.hyperplanes]
        return "\n".join(lines) + "\n"


def parse_arrangement(text: str, name: str = "") -> Arrangement:
    """Read ``dim <n>`` followed by one integer normal per line (``#`` starts a comment)."""
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or not rows[0].startswith("dim"):
        raise ArtinLabError("arrangement file must start with 'dim <n>'")
    try:
        dim = int(rows[0].split()[1])
        normals = [[int(x) for x in r.split()] for r in rows[1:]]
    except (IndexError, ValueError):
        raise ArtinLabError("arrangement file: expected integers") from None
    for v in normals:
        if len(v) != dim:
            raise ArtinLabError(f"arrangement file: row {v} has {len(v)} entries, expected {dim}")
    return Arrangement.from_normals(dim, normals, name=name)


def _unit(n: int, i: int, a: int = 1) -> list[int]:
    v = [0] * n
    v[i] = a
    return v


def _pair_normals(n: int, signs: Sequence[int]) -> list[list[int]]:
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for s in signs:
            v = [0] * n
            v[i], v[j] = 1, s
            out.append(v)
    return out


def reflection_arrangement(label: GroupLabel) -> Arrangement:
    """Reflecting hyperplanes of a finite Coxeter group in its standard coordinates.

    ``A_{n-1}`` lives in C^n as ``z_i = z_j``; the dihedral types become the
    combinatorial arrangement of p lines.
    """
    if not label.is_finite:
        raise ArtinLabError(f"{label} is not of finite type")
    f = label.family
    name = str(label)
    if f is Family.A:
        n = label.n + 1
        return Arrangement.from_normals(n, _pair_normals(n, (-1,)), name)
    if f is Family.B:
        n = label.n
        return Arrangement.from_normals(n, [_unit(n, i) for i in range(n)] + _pair_normals(n, (-1, 1)), name)
    if f is Family.D:
        n = label.n
        return Arrangement.from_normals(n, _pair_normals(n, (-1, 1)), name)
    if f is Family.F4:
        quarter = [[1, *s] for s in itertools.product((1, -1), repeat=3)]
        return Arrangement.from_normals(
            4, [_unit(4, i) for i in range(4)] + _pair_normals(4, (-1, 1)) + quarter, name
        )
    return Arrangement(2, rank2_lines=label.dihedral_order, name=name)


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        deg = max(terms, default=-1)
        return cls(tuple(terms.get(k, 0) for k in range(deg + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in parts[1:]])


# --------------------------------------------------------------------------
# intersection lattice
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Flat:
    index: int
    dim: int
    rank: int
    mask: int  # bit j set when hyperplane j contains the flat

    @property
    def hyperplanes(self) -> frozenset[int]:
        return frozenset(j for j in range(self.mask.bit_length()) if self.mask >> j & 1)


@dataclass(frozen=True)
class IntersectionLattice:
    """Flats ordered by reverse inclusion, bottom (the ambient space) first, sorted by rank."""

    ambient_dim: int
    flats: tuple[Flat, ...]
    mobius: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.flats)

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return self.flats[-1]

    def leq(self, x: int, y: int) -> bool:
        """x <= y in the lattice, i.e. the subspace y lies inside x."""
        mx, my = self.flats[x].mask, self.flats[y].mask
        return mx & ~my == 0

    def by_rank(self, r: int) -> list[Flat]:
        return [f for f in self.flats if f.rank == r]


def _check_bound(a: Arrangement, bound: int) -> None:
    if bound > DEFAULT_BOUND:
        raise ArtinLabError(f"hyperplane bound cannot exceed {DEFAULT_BOUND}")
    if a.size > bound:
        raise ArtinLabError(f"arrangement has {a.size} hyperplanes, above the bound {bound}")


def intersection_lattice(a: Arrangement, bound: int = DEFAULT_BOUND) -> IntersectionLattice:
    _check_bound(a, bound)
    n = a.ambient_dim
    if a.is_combinatorial:
        p = a.rank2_lines
        masks = [0] + [1 << i for i in range(p)] + ([(1 << p) - 1] if p >= 2 else [])
        ranks = [0] + [1] * p + ([2] if p >= 2 else [])
        covers = [(0, i) for i in range(1, p + 1)]
        if p >= 2:
            covers += [(i, p + 1) for i in range(1, p + 1)]
    else:
        normals = a.normals()
        m = len(normals)
        bits = [1 << j for j in range(m)]
        masks, ranks, covers = [0], [0], []
        level = [(0, np.zeros((n, n), dtype=np.int64))]
        r = 0
        while level:
            found: dict[int, int] = {}
            nxt = []
            for idx, basis in level:
                closed = np.array([bool(masks[idx] & b) for b in bits], dtype=bool)
                cl, bases = kernels.cover_closures(basis, normals, closed)
                for row, nb in zip(cl, bases):
                    mask = sum(b for b, hit in zip(bits, row) if hit)
                    j = found.get(mask)
                    if j is None:
                        j = len(masks)
                        found[mask] = j
                        masks.append(mask)
                        ranks.append(r + 1)
                        nxt.append((j, nb))
                    covers.append((idx, j))
            level = nxt
            r += 1
    mu = kernels.mobius(np.array(masks, dtype=np.uint64), np.array(ranks, dtype=np.int64))
    flats = tuple(Flat(i, n - rk, rk, mk) for i, (mk, rk) in enumerate(zip(masks, ranks)))
    return IntersectionLattice(n, flats, tuple(int(x) for x in mu), tuple(covers))


def characteristic_polynomial(a: Arrangement, bound: int = DEFAULT_BOUND) -> IntPolynomial:
    lat = intersection_lattice(a, bound)
    terms: dict[int, int] = {}
    for f, mu in zip(lat.flats, lat.mobius):
        terms[f.dim] = terms.get(f.dim, 0) + mu
    return IntPolynomial.from_terms(terms)


def whitney_polynomial(a: Arrangement) -> IntPolynomial:
    """Characteristic polynomial by brute force over all subsets: sum (-1)^|S| t^(n - rank S)."""
    n = a.ambient_dim
    if a.is_combinatorial:
        p = a.rank2_lines
        terms: dict[int, int] = {}
        for k in range(p + 1):
            d = n - min(k, 2)
            terms[d] = terms.get(d, 0) + (-1) ** k * math.comb(p, k)
        return IntPolynomial.from_terms(terms)
    if a.size > WHITNEY_LIMIT:
        raise ArtinLabError(f"subset enumeration limited to {WHITNEY_LIMIT} hyperplanes, got {a.size}")
    counts = kernels.whitney_counts(a.normals())
    return IntPolynomial.from_terms({n - r: int(c) for r, c in enumerate(counts)})


def poincare_polynomial(a: Arrangement, bound: int = DEFAULT_BOUND) -> IntPolynomial:
    """sum |mu(X)| t^codim(X), checked against (-t)^n chi(-1/t)."""
    lat = intersection_lattice(a, bound)
    terms: dict[int, int] = {}
    chi: dict[int, int] = {}
    for f, mu in zip(lat.flats, lat.mobius):
        terms[f.rank] = terms.get(f.rank, 0) + abs(mu)
        chi[f.dim] = chi.get(f.dim, 0) + mu
    pi = IntPolynomial.from_terms(terms)
    n = a.ambient_dim
    via_chi = IntPolynomial.from_terms({n - k: c * (-1) ** (n - k) for k, c in chi.items()})
    if via_chi != pi:
        raise ArtinLabError(f"Poincare polynomial mismatch: {pi} vs {via_chi}")
    return pi


def betti_numbers(a: Arrangement, bound: int = DEFAULT_BOUND) -> list[int]:
    return list(poincare_polynomial(a, bound).coefficients)


@dataclass(frozen=True)
class SuspensionReport:
    hyperplanes: int
    b1: int

    @property
    def passed(self) -> bool:
        return self.hyperplanes == self.b1


def suspension_check(a: Arrangement, bound: int = DEFAULT_BOUND) -> SuspensionReport:
    """Compare the hyperplane count with the first Betti number of the complement.

    A suspension homotopy equivalent to a wedge of N two-spheres forces b1 = N.
    """
    b = betti_numbers(a, bound)
    return SuspensionReport(a.size, b[1] if len(b) > 1 else 0)


# --------------------------------------------------------------------------
# supersolvability
# --------------------------------------------------------------------------


def is_fiber_type(a: Arrangement, bound: int = DEFAULT_BOUND) -> bool:
    """Supersolvability test: is there a maximal chain of modular flats?

    Recurses on modular coatoms. A coatom X of [0, T] is modular exactly when
    every rank-two flat spanned by two atoms outside X meets X in an atom.
    """
    lat = intersection_lattice(a, bound)
    line_of: dict[tuple[int, int], int] = {}
    for f in lat.by_rank(2):
        hs = sorted(f.hyperplanes)
        for i, j in itertools.combinations(hs, 2):
            line_of[(i, j)] = f.mask
    children: dict[int, list[Flat]] = {}
    for lo, hi in lat.covers:
        children.setdefault(hi, []).append(lat.flats[lo])

    @lru_cache(maxsize=None)
    def solvable(t: int) -> bool:
        top = lat.flats[t]
        if top.rank <= 2:
            return True
        for x in children.get(t, ()):
            outside = sorted(top.hyperplanes - x.hyperplanes)
            modular = all(line_of[(i, j)] & x.mask for i, j in itertools.combinations(outside, 2))
            if modular and solvable(x.index):
                return True
        return False

    return solvable(lat.top.index)


# --------------------------------------------------------------------------
# fibration maps
# --------------------------------------------------------------------------


def as_fractions(point: Iterable) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in point)
    except (ValueError, ZeroDivisionError) as exc:
        raise ArtinLabError(f"bad coordinate: {exc}") from None


def z_space_membership(point: Iterable) -> bool:
    """All coordinates nonzero and pairwise distinct."""
    z = as_fractions(point)
    return all(z) and len(set(z)) == len(z)


@dataclass(frozen=True)
class FibrationEval:
    label: GroupLabel
    point: tuple[Fraction, ...]
    in_complement: bool
    image: tuple[Fraction, ...]
    image_in_z: bool


def fibration_map_eval(label: GroupLabel | str, point: Iterable) -> FibrationEval:
    """Evaluate the projection of the D_n or F4 complement onto Z_(n-1) resp. Z_3."""
    if isinstance(label, str):
        label = parse_label(label)
    y = as_fractions(point)
    if label.family is Family.D:
        n = label.n
        if len(y) != n:
            raise ArtinLabError(f"{label} needs a point in dimension {n}, got {len(y)}")
        image = tuple(y[-1] ** 2 - y[i] ** 2 for i in range(n - 1))
    elif label.family is Family.F4:
        if len(y) != 4:
            raise ArtinLabError(f"F4 needs a point in dimension 4, got {len(y)}")
        prod = y[0] * y[1] * y[2] * y[3]
        image = tuple(prod * (y[3] ** 2 - y[i] ** 2) for i in range(3))
    else:
        raise ArtinLabError(f"fibration maps exist only for D_n and F4, not {label}")
    inside = not reflection_arrangement(label).contains(y)
    return FibrationEval(label, y, inside, image, z_space_membership(image))
