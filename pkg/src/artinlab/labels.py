"""Type designators such as ``A5``, ``C4``, ``I2(7)``, ``~B4`` and ``G(4,2,3)``."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class ArtinLabError(ValueError):
    """Domain error raised by every artinlab operation."""


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    F4 = "F4"
    G2 = "G2"
    I2 = "I2"
    AffA = "~A"
    AffB = "~B"
    AffC = "~C"
    AffD = "~D"
    Gder = "G"


FINITE = frozenset({Family.A, Family.B, Family.D, Family.F4, Family.G2, Family.I2})
AFFINE = frozenset({Family.AffA, Family.AffB, Family.AffC, Family.AffD})

# smallest legal parameter per family
_MIN_RANK = {
    Family.A: 1,
    Family.B: 2,
    Family.D: 2,
    Family.AffA: 1,
    Family.AffB: 3,
    Family.AffC: 2,
    Family.AffD: 3,
}


@dataclass(frozen=True)
class GroupLabel:
    family: Family
    params: tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.family in FINITE

    @property
    def is_affine(self) -> bool:
        return self.family in AFFINE

    @property
    def n(self) -> int:
        """Rank parameter: n for the classical and affine families, 4 for F4, 2 for rank-two types."""
        if self.family is Family.F4:
            return 4
        if self.family in (Family.G2, Family.I2):
            return 2
        if self.family is Family.Gder:
            return self.params[2]
        return self.params[0]

    @property
    def dihedral_order(self) -> int:
        """p for I2(p); 6 for G2."""
        if self.family is Family.G2:
            return 6
        if self.family is Family.I2:
            return self.params[0]
        raise ArtinLabError(f"{self} is not a rank-two dihedral type")

    def __str__(self) -> str:
        f = self.family
        if f in (Family.F4, Family.G2):
            return f.value
        if f is Family.I2:
            return f"I2({self.params[0]})"
        if f is Family.Gder:
            return "G({},{},{})".format(*self.params)
        return f"{f.value}{self.params[0]}"


_GRAMMAR = re.compile(
    r"""^\s*(?:
        (?P<aff>~)?(?P<cls>[ABCD])(?P<n>\d+)
      | (?P<exc>F4|G2)
      | I2\((?P<p>\d+)\)
      | G\((?P<de>\d+),(?P<e>\d+),(?P<r>\d+)\)
    )\s*$""",
    re.VERBOSE,
)


def parse_label(text: str) -> GroupLabel:
    """Parse a type designator; ``C_n`` (finite) is returned as ``B_n``."""
    m = _GRAMMAR.match(text.replace(" ", ""))
    if m is None:
        raise ArtinLabError(f"cannot parse group label {text!r}")
    if m.group("exc"):
        return GroupLabel(Family(m.group("exc")))
    if m.group("p") is not None:
        p = int(m.group("p"))
        if p < 3:
            raise ArtinLabError(f"I2(p) needs p >= 3, got p={p}")
        return GroupLabel(Family.I2, (p,))
    if m.group("de") is not None:
        de, e, r = int(m.group("de")), int(m.group("e")), int(m.group("r"))
        if e < 1 or de % e:
            raise ArtinLabError(f"G(de,e,r) needs e >= 1 dividing de, got de={de}, e={e}")
        d = de // e
        if d < 2:
            raise ArtinLabError(f"G(de,e,r) needs d >= 2, got d={d}")
        if r < 2:
            raise ArtinLabError(f"G(de,e,r) needs r >= 2, got r={r}")
        return GroupLabel(Family.Gder, (de, e, r))

    cls, n = m.group("cls"), int(m.group("n"))
    if m.group("aff"):
        family = Family("~" + cls)
    else:
        family = Family.B if cls == "C" else Family(cls)
    lo = _MIN_RANK[family]
    if n < lo:
        shown = ("~" if m.group("aff") else "") + cls
        raise ArtinLabError(f"{shown}_n needs n >= {lo}, got n={n}")
    return GroupLabel(family, (n,))
