"""Coxeter matrices, Coxeter/Artin presentations and exact finite reflection group models."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .labels import ArtinLabError, Family, GroupLabel
from .words import Alphabet, Word, artin_alphabet

INF = math.inf


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        k = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != k:
                raise ArtinLabError("Coxeter matrix must be square")
            for j, m in enumerate(row):
                if m != self.entries[j][i]:
                    raise ArtinLabError(f"Coxeter matrix not symmetric at ({i}, {j})")
                if i == j and m != 1:
                    raise ArtinLabError(f"diagonal entry m({i},{i}) must be 1")
                if i != j and not (m == INF or (m == int(m) and m >= 2)):
                    raise ArtinLabError(f"off-diagonal entry m({i},{j})={m} must be an integer >= 2 or inf")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_bonds(cls, k: int, bonds: dict[tuple[int, int], float]) -> CoxeterMatrix:
        """Build from 1-based bond labels; unlisted pairs commute (m=2)."""
        rows = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
        for (i, j), m in bonds.items():
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = m
        return cls(tuple(tuple(r) for r in rows))

    def to_list(self) -> list[list]:
        return [[("inf" if m == INF else int(m)) for m in row] for row in self.entries]


def rank(label: GroupLabel) -> int:
    """Number of Coxeter generators."""
    if label.family is Family.Gder:
        raise ArtinLabError(f"{label} is a complex reflection group; no Coxeter generators here")
    if label.is_affine:
        return label.n + 1
    return label.n


def _chain(k: int, m: float = 3) -> dict[tuple[int, int], float]:
    return {(i, i + 1): m for i in range(1, k)}


def coxeter_matrix(label: GroupLabel) -> CoxeterMatrix:
    f, k = label.family, rank(label)
    n = label.n
    if f is Family.A:
        bonds = _chain(n)
    elif f is Family.B:
        bonds = _chain(n)
        bonds[(n - 1, n)] = 4
    elif f is Family.D:
        bonds = _chain(n - 1)
        if n >= 3:
            bonds[(n - 2, n)] = 3
    elif f is Family.F4:
        bonds = {(1, 2): 3, (2, 3): 4, (3, 4): 3}
    elif f in (Family.G2, Family.I2):
        bonds = {(1, 2): label.dihedral_order}
    elif f is Family.AffA or (f is Family.AffD and n == 3):
        # ~D3 coincides with ~A3
        if n == 1:
            bonds = {(1, 2): INF}
        else:
            bonds = _chain(n + 1)
            bonds[(1, n + 1)] = 3
    elif f is Family.AffB:
        bonds = _chain(n)
        bonds[(n - 1, n)] = 4
        bonds[(2, n + 1)] = 3
    elif f is Family.AffC:
        bonds = _chain(n)
        bonds[(n - 1, n)] = 4
        bonds[(1, n + 1)] = 4
    elif f is Family.AffD:
        bonds = _chain(n - 1)
        bonds[(n - 2, n)] = 3
        bonds[(2, n + 1)] = 3
    else:  # pragma: no cover - rank() already rejected Gder
        raise ArtinLabError(f"no Coxeter matrix for {label}")
    return CoxeterMatrix.from_bonds(k, bonds)


# --------------------------------------------------------------------------
# presentations
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: tuple[tuple[Word, Word], ...]

    @property
    def generators(self) -> tuple[str, ...]:
        return self.alphabet.generators

    def __post_init__(self):
        for lhs, rhs in self.relations:
            if lhs.alphabet != self.alphabet or rhs.alphabet != self.alphabet:
                raise ArtinLabError("relation uses letters outside the generator list")

    def to_text(self) -> str:
        rels = ", ".join(f"{lhs}={rhs}" for lhs, rhs in self.relations)
        return f"<{','.join(self.generators)} | {rels}>"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [[lhs.signed(), rhs.signed()] for lhs, rhs in self.relations],
        }


def alternating(a: int, b: int, length: int) -> tuple[tuple[int, int], ...]:
    """The positive word abab... with ``length`` letters."""
    return tuple(((a, b)[t % 2], 1) for t in range(length))


def coxeter_presentation(m: CoxeterMatrix) -> Presentation:
    alpha = artin_alphabet(m.size)
    one = Word(alpha)
    rels = [(Word(alpha, ((i, 1), (i, 1))), one) for i in range(m.size)]
    for i in range(m.size):
        for j in range(i + 1, m.size):
            if m[i, j] == INF:
                continue
            rels.append((Word(alpha, alternating(i, j, 2 * int(m[i, j]))), one))
    return Presentation(alpha, tuple(rels))


def artin_presentation(m: CoxeterMatrix) -> Presentation:
    alpha = artin_alphabet(m.size)
    rels = []
    for i in range(m.size):
        for j in range(i + 1, m.size):
            if m[i, j] == INF:
                continue
            length = int(m[i, j])
            rels.append((Word(alpha, alternating(i, j, length)), Word(alpha, alternating(j, i, length))))
    return Presentation(alpha, tuple(rels))


# --------------------------------------------------------------------------
# concrete finite models
# --------------------------------------------------------------------------


def _perm_mul(a: tuple, b: tuple) -> tuple:
    return tuple(a[i] for i in b)


def _signed_mul(a: tuple, b: tuple) -> tuple:
    # entries are +-(j+1): basis vector i goes to sign * e_j
    return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)


def _half_matrix_mul(a: tuple, b: tuple) -> tuple:
    # 4x4 matrices with entries in (1/2)Z, stored doubled
    out = []
    for i in range(4):
        for j in range(4):
            s = sum(a[4 * i + t] * b[4 * t + j] for t in range(4))
            out.append(s // 2)
    return tuple(out)


def _dihedral_mul(p: int) -> Callable[[tuple, tuple], tuple]:
    # (k, f) stands for r^k s^f
    def mul(a, b):
        k = (a[0] + (-b[0] if a[1] else b[0])) % p
        return (k, a[1] ^ b[1])

    return mul


def _reflection_doubled(root: Sequence[int]) -> tuple:
    """Doubled matrix of the reflection orthogonal to an integer vector."""
    norm2 = sum(x * x for x in root)
    return tuple(
        (2 if i == j else 0) - 4 * root[i] * root[j] // norm2 for i in range(4) for j in range(4)
    )


@dataclass(frozen=True)
class _Model:
    identity: Hashable
    generators: tuple
    mul: Callable


def _model(label: GroupLabel) -> _Model:
    if not label.is_finite:
        raise ArtinLabError(f"{label} is not of finite type")
    f, n = label.family, label.n
    if f is Family.A:
        ident = tuple(range(n + 1))
        gens = []
        for i in range(n):
            g = list(ident)
            g[i], g[i + 1] = g[i + 1], g[i]
            gens.append(tuple(g))
        return _Model(ident, tuple(gens), _perm_mul)
    if f in (Family.B, Family.D):
        ident = tuple(range(1, n + 1))
        gens = []
        for i in range(n - 1):
            g = list(ident)
            g[i], g[i + 1] = g[i + 1], g[i]
            gens.append(tuple(g))
        g = list(ident)
        if f is Family.B:
            g[n - 1] = -n
        else:
            g[n - 2], g[n - 1] = -n, -(n - 1)
        gens.append(tuple(g))
        return _Model(ident, tuple(gens), _signed_mul)
    if f is Family.F4:
        ident = tuple(2 if i == j else 0 for i in range(4) for j in range(4))
        # simple roots e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2 (the last one rescaled)
        gens = tuple(
            _reflection_doubled(r) for r in ((0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 0, 1), (1, -1, -1, -1))
        )
        return _Model(ident, gens, _half_matrix_mul)
    p = label.dihedral_order
    return _Model((0, 0), ((0, 1), (1, 1)), _dihedral_mul(p))


@dataclass(frozen=True)
class FiniteGroupModel:
    """All elements of a finite Coxeter group in a faithful concrete model.

    Elements are listed in breadth-first order from the identity, extending by
    generators in index order; ``index`` maps an element to its position.
    """

    label: GroupLabel
    elements: tuple
    generators: tuple
    mul: Callable

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    def __contains__(self, g) -> bool:
        return g in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {g: i for i, g in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, g) -> int:
        return self._index[g]

    def inverse(self, g):
        # g^-1 = g^(k-1) where k is the order of g
        x, prev = g, self.identity
        while x != self.identity:
            prev = x
            x = self.mul(x, g)
        return prev


def enumerate_group(label: GroupLabel) -> FiniteGroupModel:
    model = _model(label)
    seen = {model.identity}
    order = [model.identity]
    queue = deque(order)
    while queue:
        g = queue.popleft()
        for s in model.generators:
            h = model.mul(g, s)
            if h not in seen:
                seen.add(h)
                order.append(h)
                queue.append(h)
    return FiniteGroupModel(label, tuple(order), model.generators, model.mul)


def reflections(label: GroupLabel) -> tuple[int, list]:
    """All conjugates of the simple reflections, found by conjugation closure."""
    model = _model(label)
    found = list(dict.fromkeys(model.generators))
    seen = set(found)
    queue = deque(found)
    while queue:
        r = queue.popleft()
        for s in model.generators:
            t = model.mul(model.mul(s, r), s)
            if t not in seen:
                seen.add(t)
                found.append(t)
                queue.append(t)
    return len(found), found


def reflection_count(label: GroupLabel) -> int:
    """Closed-form number of reflecting hyperplanes."""
    f, n = label.family, label.n
    if f is Family.A:
        return n * (n + 1) // 2
    if f is Family.B:
        return n * n
    if f is Family.D:
        return n * (n - 1)
    if f is Family.F4:
        return 24
    if f in (Family.G2, Family.I2):
        return label.dihedral_order
    raise ArtinLabError(f"{label} is not of finite type")


def group_order(label: GroupLabel) -> int:
    """Closed-form group order for the finite types."""
    f, n = label.family, label.n
    if f is Family.A:
        return math.factorial(n + 1)
    if f is Family.B:
        return 2**n * math.factorial(n)
    if f is Family.D:
        return 2 ** (n - 1) * math.factorial(n)
    if f is Family.F4:
        return 1152
    if f in (Family.G2, Family.I2):
        return 2 * label.dihedral_order
    raise ArtinLabError(f"{label} is not of finite type")


def _check_alphabet(w: Word, label: GroupLabel) -> None:
    k = rank(label)
    if len(w.alphabet) != k:
        raise ArtinLabError(f"word over {w.alphabet.name} does not match the {k} generators of {label}")


def coxeter_image(w: Word, label: GroupLabel):
    """Image of an Artin word in the Coxeter group; inverse letters map like the letters."""
    _check_alphabet(w, label)
    model = _model(label)
    g = model.identity
    for i, _ in w.letters:
        g = model.mul(g, model.generators[i])
    return g


def is_pure(w: Word, label: GroupLabel) -> bool:
    return coxeter_image(w, label) == _model(label).identity


def identity_element(label: GroupLabel):
    return _model(label).identity


def multiply(label: GroupLabel, a, b):
    return _model(label).mul(a, b)
