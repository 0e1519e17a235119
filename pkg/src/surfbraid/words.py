"""
Generators, alphabets and freely reduced words.

Letters are written as tokens::

    s<i>   braid generator sigma_i
    z<j>   puncture loop zeta_j
    a<r>   meridian of handle r   (mu_r on the fundamental group side)
    b<r>   longitude of handle r  (lambda_r)
    _s<i>, _a<r>, _b<r>   the barred copies used in the intertwining group

each optionally followed by ``^<signed int>``.  ``"s1 s2^-1 a1"`` is a
three-letter word; ``"s1^2"`` expands to ``s1 s1``; the empty string is the
identity.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Sequence, Tuple

__all__ = [
    "Gen",
    "Kind",
    "Alphabet",
    "Word",
    "WordError",
    "parse_word",
    "format_word",
    "pi_alphabet",
    "BARRED",
    "UNBARRED",
]


class WordError(ValueError):
    """Unknown token, out-of-range index or letter outside the alphabet."""


FAMILIES = ("s", "z", "a", "b", "_s", "_a", "_b")
BARRED = {"s": "_s", "a": "_a", "b": "_b"}
UNBARRED = {v: k for k, v in BARRED.items()}


class Gen(NamedTuple):
    family: str
    index: int

    def __str__(self):
        return f"{self.family}{self.index}"

    @property
    def barred(self) -> bool:
        return self.family.startswith("_")

    def bar(self) -> "Gen":
        return Gen(BARRED[self.family], self.index)

    def unbar(self) -> "Gen":
        return Gen(UNBARRED[self.family], self.index)


Letter = Tuple[Gen, int]


class Kind(enum.Enum):
    BNK = "bnk"                  # B_{n,k}: k points on the n-punctured surface
    B0N_SURFACE = "b0n"          # B_{0,n}: n-strand surface braid group
    INTERTWINING = "intertwining"  # B_{n;k}


@dataclass(frozen=True)
class Alphabet:
    """Generator list of one of the three groups, for fixed ``(g, n, k)``."""

    g: int
    n: int
    k: int
    kind: Kind

    def __post_init__(self):
        if not all(isinstance(x, int) for x in (self.g, self.n, self.k)):
            raise WordError("g, n, k must be integers")
        if self.g < 0 or self.n < 1 or self.k < 1:
            raise WordError(f"invalid bounds g={self.g}, n={self.n}, k={self.k}")
        if not isinstance(self.kind, Kind):
            raise WordError(f"bad alphabet kind {self.kind!r}")

    @property
    def generators(self) -> List[Gen]:
        g, n, k = self.g, self.n, self.k
        handles = [Gen("a", r) for r in range(1, g + 1)] + [Gen("b", r) for r in range(1, g + 1)]
        if self.kind is Kind.BNK:
            return ([Gen("s", i) for i in range(1, k)] + handles
                    + [Gen("z", j) for j in range(1, n + 1)])
        if self.kind is Kind.B0N_SURFACE:
            return [Gen("s", i) for i in range(1, n)] + handles
        x1 = ([Gen("_s", i) for i in range(1, n)]
              + [Gen("_a", r) for r in range(1, g + 1)]
              + [Gen("_b", r) for r in range(1, g + 1)])
        x2 = ([Gen("s", i) for i in range(1, k)]
              + [Gen("z", j) for j in range(1, n + 1)] + handles)
        return x1 + x2

    def __contains__(self, gen: Gen) -> bool:
        return gen in set(self.generators)

    def check(self, gen: Gen):
        if gen not in self:
            raise WordError(f"generator {gen} is not in {self}")

    def __str__(self):
        return f"{self.kind.value}(g={self.g}, n={self.n}, k={self.k})"


def pi_alphabet(g: int, n: int) -> Alphabet:
    """Free generators ``z_j, a_r, b_r`` of the punctured surface group."""
    return Alphabet(g, n, 1, Kind.BNK)


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for gen, e in letters:
        if out and out[-1][0] == gen and out[-1][1] == -e:
            out.pop()
        else:
            out.append((gen, e))
    return tuple(out)


class Word:
    """A freely reduced word; letters are ``(Gen, +1 | -1)`` pairs."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for gen, e in letters:
            if e not in (1, -1):
                raise WordError(f"letter exponent must be +-1, got {e}")
        self.letters = _reduce(letters)

    @classmethod
    def gen(cls, family: str, index: int, power: int = 1) -> "Word":
        e = 1 if power > 0 else -1
        return cls([(Gen(family, index), e)] * abs(power))

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet = None) -> "Word":
        return parse_word(text, alphabet)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.letters))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def bar(self) -> "Word":
        """Send braid letters ``s, a, b`` to their barred copies."""
        return Word((g.bar(), e) for g, e in self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


_TOKEN = re.compile(r"(_?[sab]|z)([1-9][0-9]*)(?:\^([+-]?[0-9]+))?")


def parse_word(text: str, alphabet: Alphabet = None) -> Word:
    letters: List[Letter] = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise WordError(f"unknown token {tok!r}")
        gen = Gen(m.group(1), int(m.group(2)))
        if alphabet is not None:
            alphabet.check(gen)
        power = int(m.group(3)) if m.group(3) is not None else 1
        e = 1 if power > 0 else -1
        letters.extend([(gen, e)] * abs(power))
    return Word(letters)


def format_word(w: Word) -> str:
    return " ".join(str(g) if e == 1 else f"{g}^-1" for g, e in w.letters)


def word_of(*items: Sequence) -> Word:
    """Build a word from ``("s", 1)``, ``("a", 2, -1)``-style tuples or Words."""
    letters: List[Letter] = []
    for it in items:
        if isinstance(it, Word):
            letters.extend(it.letters)
        else:
            fam, idx, *rest = it
            e = rest[0] if rest else 1
            letters.append((Gen(fam, idx), e))
    return Word(letters)
