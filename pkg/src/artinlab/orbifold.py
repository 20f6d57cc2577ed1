"""Orbifold braid group presentations and the strand-filling embedding.

``source(n, q)``: braids on n strands in the plane with one puncture and one
cone point of order q, generated by X, A_1..A_(n-1), P.
``target(n, q)``: braids on n strands in the plane with one cone point of
order q, generated by X, A_1..A_(n-1).

The embedding sends source(n, q) into target(n + 1, q): X -> X, A_i -> A_i and
P -> A_n^2, i.e. the puncture becomes an extra strand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .coxeter import Presentation
from .garside import braid_equal
from .labels import ArtinLabError
from .words import Alphabet, Word, braid_alphabet, format_word, free_reduce, torsion_reduce


class Kind(str, enum.Enum):
    SOURCE = "source"
    TARGET = "target"


def _check(n: int, q: int) -> None:
    if n < 2:
        raise ArtinLabError(f"need n >= 2 strands, got n={n}")
    if q < 2:
        raise ArtinLabError(f"need cone order q >= 2, got q={q}")


def source_alphabet(n: int, q: int) -> Alphabet:
    gens = ("x",) + tuple(f"a{i}" for i in range(1, n)) + ("p",)
    return Alphabet(f"source({n},{q})", gens, orders=((0, q),))


def target_alphabet(n: int, q: int) -> Alphabet:
    gens = ("x",) + tuple(f"a{i}" for i in range(1, n))
    return Alphabet(f"target({n},{q})", gens, orders=((0, q),))


@dataclass(frozen=True)
class OrbifoldPresentation:
    kind: Kind
    n: int
    q: int
    presentation: Presentation

    @property
    def alphabet(self) -> Alphabet:
        return self.presentation.alphabet

    @property
    def torsion(self) -> dict[str, int]:
        return {self.alphabet.generators[g]: k for g, k in self.alphabet.orders}

    @property
    def relations(self) -> tuple[tuple[Word, Word], ...]:
        return self.presentation.relations

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "q": self.q,
            "torsion": self.torsion,
            **self.presentation.to_dict(),
            "text": self.presentation.to_text(),
        }


def _w(alpha: Alphabet, *gens: int) -> Word:
    return Word(alpha, tuple((g, 1) for g in gens))


def orbifold_presentation(kind: Kind | str, n: int, q: int) -> OrbifoldPresentation:
    kind = Kind(kind)
    _check(n, q)
    alpha = source_alphabet(n, q) if kind is Kind.SOURCE else target_alphabet(n, q)
    x = 0
    a = list(range(1, n))  # a[i-1] is A_i
    rels = [
        (_w(alpha, *[x] * q), Word(alpha)),
        (_w(alpha, x, a[0], x, a[0]), _w(alpha, a[0], x, a[0], x)),
    ]
    for i in range(len(a) - 1):
        rels.append((_w(alpha, a[i], a[i + 1], a[i]), _w(alpha, a[i + 1], a[i], a[i + 1])))
    for i in range(len(a)):
        for j in range(i + 2, len(a)):
            rels.append((_w(alpha, a[i], a[j]), _w(alpha, a[j], a[i])))
    if kind is Kind.SOURCE:
        p, last = n, a[-1]
        rels.append((_w(alpha, p, last, p, last), _w(alpha, last, p, last, p)))
    return OrbifoldPresentation(kind, n, q, Presentation(alpha, tuple(rels)))


def _source_params(w: Word) -> tuple[int, int]:
    alpha = w.alphabet
    n = len(alpha) - 1
    q = alpha.order_map.get(0)
    if q is None or alpha != source_alphabet(n, q):
        raise ArtinLabError(f"word over {alpha.name} is not over a source(n,q) alphabet")
    return n, q


def embed(w: Word, n: int | None = None) -> Word:
    """Letterwise image of a source(n, q) word in target(n + 1, q)."""
    src_n, q = _source_params(w)
    if n is not None and n != src_n:
        raise ArtinLabError(f"word is over source({src_n},{q}), not source({n},{q})")
    tgt = target_alphabet(src_n + 1, q)
    p = src_n  # index of P in the source alphabet, and of A_n in the target
    out = []
    for g, e in w.letters:
        out.extend([(p, e), (p, e)] if g == p else [(g, e)])
    return Word(tgt, tuple(out))


@dataclass(frozen=True)
class Certificate:
    relation: str
    image: str
    kind: str  # "torsion", "syntactic", "garside" or "none"
    detail: str
    verdict: bool

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "image": self.image,
            "certificate": self.kind,
            "detail": self.detail,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class EmbeddingReport:
    n: int
    q: int
    certificates: tuple[Certificate, ...]

    @property
    def passed(self) -> bool:
        return all(c.verdict for c in self.certificates)

    @property
    def failures(self) -> list[Certificate]:
        return [c for c in self.certificates if not c.verdict]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "passed": self.passed,
            "relators": [c.to_dict() for c in self.certificates],
        }


def _braid_window(w: Word) -> tuple[int, int] | None:
    """Smallest block of A-generators the word uses, or None if X occurs."""
    gens = {g for g, _ in w.letters}
    if 0 in gens:
        return None
    if not gens:
        return (1, 1)
    return min(gens), max(gens)


def _as_braid(w: Word, lo: int, strands: int) -> Word:
    return Word(braid_alphabet(strands), tuple((g - lo, e) for g, e in w.letters))


def certify(lhs: Word, rhs: Word, target: OrbifoldPresentation) -> tuple[str, str, bool]:
    """Show lhs = rhs in the target group; returns (kind, detail, verdict)."""
    relator = lhs * rhs.inverse()
    if not torsion_reduce(relator).letters:
        return "torsion", "relator reduces to the empty word", True

    left, right = torsion_reduce(lhs), torsion_reduce(rhs)
    for i, (tl, tr) in enumerate(target.relations):
        tl, tr = torsion_reduce(tl), torsion_reduce(tr)
        if (left, right) in ((tl, tr), (tr, tl)):
            return "syntactic", f"target relation #{i + 1}: {tl} = {tr}", True

    window = _braid_window(relator)
    if window is not None:
        lo, hi = window
        strands = hi - lo + 2
        bl, br = _as_braid(lhs, lo, strands), _as_braid(rhs, lo, strands)
        ok = braid_equal(bl, br, strands)
        return "garside", f"B_{strands}: {bl} = {br}", ok
    return "none", "no certificate applies", False


def verify_embedding_relators(n: int, q: int) -> EmbeddingReport:
    """Check that every source relation maps to an identity in the target."""
    source = orbifold_presentation(Kind.SOURCE, n, q)
    target = orbifold_presentation(Kind.TARGET, n + 1, q)
    certs = []
    for lhs, rhs in source.relations:
        il, ir = free_reduce(embed(lhs)), free_reduce(embed(rhs))
        kind, detail, ok = certify(il, ir, target)
        certs.append(
            Certificate(
                relation=f"{format_word(lhs)} = {format_word(rhs)}",
                image=f"{format_word(il)} = {format_word(ir)}",
                kind=kind,
                detail=detail,
                verdict=ok,
            )
        )
    return EmbeddingReport(n, q, tuple(certs))


@dataclass(frozen=True)
class TowerLevel:
    level: int
    space: str
    base: str | None
    fiber: str

    @property
    def is_fibration(self) -> bool:
        return self.base is not None

    def to_dict(self) -> dict:
        return {"level": self.level, "space": self.space, "base": self.base, "fiber": self.fiber}


def fadell_neuwirth_tower(n: int, surface: str = "C") -> list[TowerLevel]:
    """Levels of the forget-the-last-point fibrations PB_i(S) -> PB_(i-1)(S)."""
    if n < 1:
        raise ArtinLabError("need n >= 1")
    levels = [TowerLevel(1, f"PB_1({surface})", None, surface)]
    for i in range(2, n + 1):
        k = i - 1
        fiber = f"{surface} minus {k} point" + ("s" if k > 1 else "")
        levels.append(TowerLevel(i, f"PB_{i}({surface})", f"PB_{i - 1}({surface})", fiber))
    return levels
