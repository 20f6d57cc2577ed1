"""Left-greedy Garside normal form in the classical braid group B_n.

A braid is written Delta^k A_1 ... A_l where each A_i is a permutation braid
(a positive braid in which any two strands cross at most once), stored as its
permutation of {0..n-1}. Permutations compose as ``(a*b)[i] = a[b[i]]`` and
sigma_i is the transposition of positions i-1 and i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .labels import ArtinLabError
from .words import Word, braid_alphabet

Perm = tuple[int, ...]


def _compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def _right_mul_gen(a: Perm, i: int) -> Perm:
    a = list(a)
    a[i], a[i + 1] = a[i + 1], a[i]
    return tuple(a)


def _left_mul_gen(b: Perm, i: int) -> Perm:
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in b)


def right_descents(a: Perm) -> frozenset[int]:
    return frozenset(i for i in range(len(a) - 1) if a[i] > a[i + 1])


def left_descents(b: Perm) -> frozenset[int]:
    pos = [0] * len(b)
    for j, x in enumerate(b):
        pos[x] = j
    return frozenset(i for i in range(len(b) - 1) if pos[i] > pos[i + 1])


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _tau(a: Perm, n: int) -> Perm:
    """Conjugation by the half twist: sigma_i -> sigma_(n-i)."""
    d = _delta(n)
    return _compose(_compose(d, a), d)


def _renorm(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Slide generators from the front of b onto a until L(b) is inside R(a)."""
    while True:
        free = left_descents(b) - right_descents(a)
        if not free:
            return a, b
        i = min(free)
        a, b = _right_mul_gen(a, i), _left_mul_gen(b, i)


def reduced_word(a: Perm) -> list[int]:
    """A positive word (0-based generator indices) for a permutation braid."""
    word = []
    a = tuple(a)
    while True:
        desc = right_descents(a)
        if not desc:
            return word[::-1]
        i = min(desc)
        word.append(i)
        a = _right_mul_gen(a, i)


@dataclass(frozen=True)
class GarsideNF:
    n: int
    inf: int
    factors: tuple[Perm, ...]

    @property
    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_dict(self) -> dict:
        # serialised 1-based, as permutations of {1..n}
        return {"n": self.n, "inf": self.inf, "factors": [[x + 1 for x in f] for f in self.factors]}

    def __str__(self) -> str:
        alpha = braid_alphabet(self.n)
        parts = [] if self.inf == 0 else [f"D^{self.inf}"]
        for f in self.factors:
            parts.append("(" + " ".join(alpha.generators[i] for i in reduced_word(f)) + ")")
        return " . ".join(parts) if parts else "1"


def _left_weighted(factors: Sequence[Perm]) -> bool:
    return all(left_descents(b) <= right_descents(a) for a, b in zip(factors, factors[1:]))


def garside_nf(w: Word, n: int) -> GarsideNF:
    if n < 1:
        raise ArtinLabError("braid index must be at least 1")
    ident = tuple(range(n))
    delta = _delta(n)
    inf = 0
    factors: list[Perm] = []
    for g, e in w.letters:
        if g >= n - 1:
            raise ArtinLabError(f"generator index {g + 1} needs at least {g + 2} strands, braid index is {n}")
        if e > 0:
            factors.append(_right_mul_gen(ident, g))
        else:
            # sigma^-1 = Delta^-1 (Delta sigma^-1); pull Delta^-1 to the front
            inf -= 1
            factors = [_tau(f, n) for f in factors]
            factors.append(_right_mul_gen(delta, g))

    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = _renorm(factors[i], factors[i + 1])
            if (a, b) != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = a, b
                changed = True

    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == delta:
        lo += 1
    while hi > lo and factors[hi - 1] == ident:
        hi -= 1
    nf = GarsideNF(n, inf + lo, tuple(factors[lo:hi]))
    assert _left_weighted(nf.factors)
    return nf


def braid_equal(u: Word, v: Word, n: int) -> bool:
    return garside_nf(u, n) == garside_nf(v, n)
