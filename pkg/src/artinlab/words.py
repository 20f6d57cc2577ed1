"""Words over named alphabets, with free and torsion reduction."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .labels import ArtinLabError

Letter = tuple[int, int]  # (generator index, +1 or -1)


@dataclass(frozen=True)
class Alphabet:
    """Generator names plus finite orders for the torsion generators."""

    name: str
    generators: tuple[str, ...]
    orders: tuple[tuple[int, int], ...] = ()
    aliases: tuple[tuple[str, str], ...] = ()
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        lookup = {g: i for i, g in enumerate(self.generators)}
        for alias, target in self.aliases:
            lookup.setdefault(alias, lookup[target])
        object.__setattr__(self, "_lookup", lookup)

    def __len__(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._lookup[name]
        except KeyError:
            raise ArtinLabError(f"unknown generator {name!r} in alphabet {self.name}") from None

    @property
    def order_map(self) -> dict[int, int]:
        return dict(self.orders)


def braid_alphabet(n: int) -> Alphabet:
    """Generators a1..a(n-1) of the braid group on n strands (s1.. accepted too)."""
    gens = tuple(f"a{i}" for i in range(1, n))
    return Alphabet(f"braid{n}", gens, aliases=tuple((f"s{i}", f"a{i}") for i in range(1, n)))


def artin_alphabet(k: int) -> Alphabet:
    """Generators s1..sk of a rank-k Artin group (a1.. accepted too)."""
    gens = tuple(f"s{i}" for i in range(1, k + 1))
    return Alphabet(f"artin{k}", gens, aliases=tuple((f"a{i}", f"s{i}") for i in range(1, k + 1)))


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        k = len(self.alphabet)
        for g, e in self.letters:
            if not 0 <= g < k or e not in (1, -1):
                raise ArtinLabError(f"letter {(g, e)} invalid for alphabet {self.alphabet.name}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        if other.alphabet != self.alphabet:
            raise ArtinLabError(f"cannot multiply words over {self.alphabet.name} and {other.alphabet.name}")
        return Word(self.alphabet, self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(self.alphabet, tuple((g, -e) for g, e in reversed(self.letters)))

    def signed(self) -> list[int]:
        """Letters as signed 1-based generator indices."""
        return [e * (g + 1) for g, e in self.letters]

    @classmethod
    def from_signed(cls, alphabet: Alphabet, seq: Iterable[int]) -> Word:
        return cls(alphabet, tuple((abs(s) - 1, 1 if s > 0 else -1) for s in seq))

    def __str__(self) -> str:
        return format_word(self)


_TOKEN = re.compile(r"^([A-Za-z]+\d*)(?:\^(.*))?$")


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace-separated tokens like ``a3``, ``a3^-1``, ``x^3``.

    Exponents expand to repeated letters; ``1`` or an empty string is the empty word.
    """
    letters: list[Letter] = []
    stripped = text.strip()
    if stripped in ("", "1", "e"):
        return Word(alphabet, ())
    for tok in stripped.replace("*", " ").split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ArtinLabError(f"unknown token {tok!r}")
        g = alphabet.index(m.group(1))
        exp = 1
        if m.group(2) is not None:
            raw = m.group(2).strip("()")
            if not re.fullmatch(r"[+-]?\d+", raw):
                raise ArtinLabError(f"malformed exponent in {tok!r}")
            exp = int(raw)
        sign = 1 if exp >= 0 else -1
        letters.extend([(g, sign)] * abs(exp))
    return Word(alphabet, tuple(letters))


def format_word(w: Word) -> str:
    """Inverse of :func:`parse_word`; runs of one letter collapse to powers."""
    if not w.letters:
        return "1"
    out = []
    names = w.alphabet.generators
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        g, e = letters[i]
        exp = e * (j - i)
        out.append(names[g] if exp == 1 else f"{names[g]}^{exp}")
        i = j
    return " ".join(out)


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for g, e in w.letters:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return Word(w.alphabet, tuple(stack))


def torsion_reduce(w: Word, orders: Mapping[int, int] | None = None) -> Word:
    """Reduce runs of finite-order generators modulo their order, then freely reduce.

    Repeats until stable, since cancellation can merge two runs of the same
    torsion generator.
    """
    if orders is None:
        orders = w.alphabet.order_map
    letters = free_reduce(w).letters
    while True:
        out: list[Letter] = []
        i = 0
        while i < len(letters):
            g = letters[i][0]
            if g not in orders:
                out.append(letters[i])
                i += 1
                continue
            exp = 0
            while i < len(letters) and letters[i][0] == g:
                exp += letters[i][1]
                i += 1
            exp %= orders[g]
            out.extend([(g, 1)] * exp)
        reduced = free_reduce(Word(w.alphabet, tuple(out))).letters
        if reduced == letters:
            return Word(w.alphabet, reduced)
        letters = reduced
