"""
Bellingeri-type presentations of the surface braid groups.

Three groups are covered, all for a surface of genus g with one boundary
component:

* ``Kind.BNK``          B_{n,k}: k points moving on the n-punctured surface
                        (generators s_1..s_{k-1}, a_r, b_r, z_1..z_n);
* ``Kind.B0N_SURFACE``  B_{0,n}: n strands, no punctures
                        (generators s_1..s_{n-1}, a_r, b_r);
* ``Kind.INTERTWINING`` B_{n;k}: the semidirect product of the two, with
                        the B_{0,n} letters written barred.

Commutator relations ``[u, v] = 1`` are emitted as word pairs ``(uv, vu)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List

from .words import Alphabet, Gen, Kind, Word, WordError, word_of

__all__ = ["Relation", "alphabet", "relations", "LABELS"]

LABELS = ("BR1", "BR2", "CR1", "CR2", "CR3", "SCR", "SEMIDIRECT")


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    label: str

    def __str__(self):
        return f"{self.label}: {self.lhs or '1'} = {self.rhs or '1'}"


def alphabet(g: int, n: int, k: int = 1, kind: Kind = Kind.B0N_SURFACE) -> Alphabet:
    if isinstance(kind, str):
        kind = Kind(kind)
    return Alphabet(g, n, k, kind)


def _comm(label, u: Word, v: Word) -> Relation:
    return Relation(u * v, v * u, label)


def _bellingeri(strands: int, g: int, punctures: int,
                letter: Callable[[str, int, int], Word]) -> List[Relation]:
    """Relations BR1..SCR for ``strands`` moving points, ``g`` handles and
    ``punctures`` fixed punctures.  ``letter(family, index, exp)`` builds a
    one-letter word, which lets the same schema produce barred copies.
    """
    s = lambda i, e=1: letter("s", i, e)
    a = lambda r: letter("a", r, 1)
    b = lambda r: letter("b", r, 1)
    z = lambda j: letter("z", j, 1)
    sig = range(1, strands)
    hand = range(1, g + 1)
    punc = range(1, punctures + 1)
    rels: List[Relation] = []

    for i in sig:
        for j in sig:
            if j - i >= 2:
                rels.append(_comm("BR1", s(i), s(j)))
    for i in sig:
        if i + 1 in sig:
            j = i + 1
            rels.append(Relation(s(i) * s(j) * s(i), s(j) * s(i) * s(j), "BR2"))
    for i in sig:
        if i > 1:
            for r in hand:
                rels.append(_comm("CR1", a(r), s(i)))
            for r in hand:
                rels.append(_comm("CR1", b(r), s(i)))
            for t in punc:
                rels.append(_comm("CR1", z(t), s(i)))
    if strands >= 2:
        for r in hand:
            rels.append(_comm("CR2", a(r), s(1) * a(r) * s(1)))
        for r in hand:
            rels.append(_comm("CR2", b(r), s(1) * b(r) * s(1)))
        for t in punc:
            rels.append(_comm("CR2", z(t), s(1) * z(t) * s(1)))

        conj = lambda w: s(1, -1) * w * s(1)
        for r in hand:
            for t in hand:
                if r < t:
                    rels.append(_comm("CR3", a(r), conj(a(t))))
                    rels.append(_comm("CR3", a(r), conj(b(t))))
                    rels.append(_comm("CR3", b(r), conj(a(t))))
                    rels.append(_comm("CR3", b(r), conj(b(t))))
        for r in hand:
            for u in punc:
                rels.append(_comm("CR3", a(r), conj(z(u))))
            for u in punc:
                rels.append(_comm("CR3", b(r), conj(z(u))))
        for t in punc:
            for u in punc:
                if t < u:
                    rels.append(_comm("CR3", z(t), conj(z(u))))
        for r in hand:
            rels.append(Relation(s(1) * b(r) * s(1) * a(r) * s(1),
                                 a(r) * s(1) * b(r), "SCR"))
    return rels


def _plain(fam, i, e):
    return Word([(Gen(fam, i), e)])


def _barred(fam, i, e):
    return Word([(Gen("_" + fam, i), e)])


def relations(g: int, n: int, k: int = 1, kind: Kind = Kind.B0N_SURFACE) -> List[Relation]:
    """Complete, duplicate-free relation list of the requested group."""
    alpha = alphabet(g, n, k, kind)
    if alpha.kind is Kind.BNK:
        return _bellingeri(k, g, n, _plain)
    if alpha.kind is Kind.B0N_SURFACE:
        return _bellingeri(n, g, 0, _plain)

    from .action import generator_action

    rels = _bellingeri(n, g, 0, _barred)
    rels += _bellingeri(k, g, n, _plain)
    x1 = [x for x in alpha.generators if x.barred]
    x2 = [y for y in alpha.generators if not y.barred]
    for x in x1:
        act = generator_action(x, 1, g)
        xw = Word([(x, 1)])
        for y in x2:
            yw = Word([(y, 1)])
            rels.append(Relation(xw.inverse() * yw * xw, act(yw), "SEMIDIRECT"))
    return rels
