"""Surgery L-groups of finite-type pure Artin groups and lower K-theory vanishing."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .arrangement import reflection_arrangement
from .coxeter import reflection_count, reflections
from .labels import ArtinLabError, Family, GroupLabel


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """Z^free_rank plus cyclic torsion factors Z/k, torsion kept sorted."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ArtinLabError("free rank must be non-negative")
        if any(k < 2 for k in self.torsion):
            raise ArtinLabError("torsion orders must be >= 2")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    def __add__(self, other: AbelianGroupDescriptor) -> AbelianGroupDescriptor:
        return AbelianGroupDescriptor(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def power(self, k: int) -> AbelianGroupDescriptor:
        return AbelianGroupDescriptor(self.free_rank * k, self.torsion * k)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for k, mult in sorted(Counter(self.torsion).items()):
            parts.append(f"Z/{k}" if mult == 1 else f"Z/{k}^{mult}")
        return " (+) ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> AbelianGroupDescriptor:
        text = text.strip()
        if text == "0":
            return cls()
        free, tors = 0, []
        for part in text.split("(+)"):
            m = re.fullmatch(r"\s*Z(?:/(\d+))?(?:\^(\d+))?\s*", part)
            if m is None:
                raise ArtinLabError(f"cannot parse abelian group {text!r}")
            mult = int(m.group(2) or 1)
            if m.group(1):
                tors += [int(m.group(1))] * mult
            else:
                free += mult
        return cls(free, tuple(tors))

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


Z = AbelianGroupDescriptor(1)
ZERO = AbelianGroupDescriptor()
Z2 = AbelianGroupDescriptor(0, (2,))

# L-groups of the trivial group. The wedge formula below, read against the
# known table (Z, Z^N, Z/2, (Z/2)^N) for every N, has exactly this solution.
_L_POINT = (Z, ZERO, Z2, ZERO)


def l_point(i: int) -> AbelianGroupDescriptor:
    return _L_POINT[i % 4]


def wedge_homology(
    h_point: Callable[[int], AbelianGroupDescriptor] | Sequence[AbelianGroupDescriptor],
    n_spheres: int,
    i: int,
    sphere_dim: int = 2,
) -> AbelianGroupDescriptor:
    """h_i(X) when the suspension of X is a wedge of ``n_spheres`` spheres of dimension ``sphere_dim``.

    Then X is stably a wedge of (sphere_dim - 1)-spheres, so
    h_i(X) = h_i(pt) + h_(i - sphere_dim + 1)(pt)^N.
    ``h_point`` is a function or a 4-periodic sequence.
    """
    if n_spheres < 0:
        raise ArtinLabError("number of spheres must be non-negative")
    h = h_point if callable(h_point) else (lambda k: h_point[k % len(h_point)])
    shift = sphere_dim - 1
    return h(i) + h(i - shift).power(n_spheres)


@dataclass(frozen=True)
class LTable:
    label: GroupLabel
    N: int
    groups: tuple[AbelianGroupDescriptor, ...]

    def L(self, i: int) -> AbelianGroupDescriptor:
        return self.groups[i % 4]

    def to_dict(self) -> dict:
        return {
            "label": str(self.label),
            "N": self.N,
            "L": [str(g) for g in self.groups],
            "structured": [g.to_dict() for g in self.groups],
        }


def hyperplane_count(label: GroupLabel, cross_check: bool = True) -> int:
    """Closed-form N, optionally confirmed by the arrangement and by reflection enumeration."""
    n = reflection_count(label)
    if cross_check:
        by_arrangement = reflection_arrangement(label).size
        by_group = reflections(label)[0]
        if not n == by_arrangement == by_group:
            raise ArtinLabError(
                f"hyperplane counts disagree for {label}: formula {n}, arrangement {by_arrangement}, "
                f"reflections {by_group}"
            )
    return n


def l_groups(label: GroupLabel, cross_check: bool = True) -> LTable:
    if not label.is_finite:
        raise ArtinLabError(
            f"no L-group table for {label}: the closed form covers only the finite types "
            "A_n, B_n, D_n, F4, G2 and I2(p)"
        )
    n = hyperplane_count(label, cross_check)
    return LTable(label, n, tuple(wedge_homology(l_point, n, i) for i in range(4)))


_K_SCOPE = frozenset(
    {Family.A, Family.B, Family.D, Family.F4, Family.G2, Family.I2, Family.AffA, Family.AffB, Family.AffC, Family.Gder}
)


@dataclass(frozen=True)
class KVanishingReport:
    label: GroupLabel

    @property
    def statement(self) -> str:
        return (
            f"For every subgroup H of the Artin group of type {self.label}: "
            "Wh(H) = 0, K~_0(Z[H]) = 0 and K_-i(Z[H]) = 0 for all i >= 1. "
            "This follows from the K-theoretic isomorphism conjecture with coefficients, "
            "which holds for these groups."
        )

    def to_dict(self) -> dict:
        return {
            "label": str(self.label),
            "Wh": "0",
            "K0_reduced": "0",
            "K_negative": "0",
            "statement": self.statement,
        }


def k_vanishing_report(label: GroupLabel) -> KVanishingReport:
    if label.family is Family.AffD:
        raise ArtinLabError(
            f"{label}: the isomorphism conjecture for affine type D is open, so no vanishing is asserted"
        )
    if label.family not in _K_SCOPE:  # pragma: no cover - every other family is in scope
        raise ArtinLabError(f"{label} is outside the known cases")
    return KVanishingReport(label)
