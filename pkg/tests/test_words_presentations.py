from collections import Counter

import pytest

from surfbraid.presentations import relations
from surfbraid.words import Gen, Kind, Word, WordError, parse_word, pi_alphabet
from surfbraid.presentations import alphabet


def test_parse_and_reduce():
    w = parse_word("s1 s2^-1 s2 a1^2")
    assert str(w) == "s1 a1 a1"
    assert parse_word("") == Word()
    assert (w * w.inverse()) == Word()


@pytest.mark.parametrize("bad", ["x1", "s0", "s", "s1^", "_z1"])
def test_parse_rejects(bad):
    with pytest.raises(WordError):
        parse_word(bad)


def test_alphabet_membership():
    with pytest.raises(WordError):
        parse_word("s3", alphabet(2, 3))
    with pytest.raises(WordError):
        parse_word("a3", alphabet(2, 3))
    assert [str(x) for x in pi_alphabet(1, 2).generators] == ["a1", "b1", "z1", "z2"]


def test_b0n_relation_counts():
    rels = relations(2, 3)
    assert len(rels) == 15
    assert Counter(r.label for r in rels) == {"BR2": 1, "CR1": 4, "CR2": 4, "CR3": 4, "SCR": 2}
    assert len(set((r.lhs, r.rhs) for r in rels)) == 15


def test_scr_shape():
    scr = [r for r in relations(1, 2) if r.label == "SCR"]
    assert [str(r.lhs) for r in scr] == ["s1 b1 s1 a1 s1"]
    assert [str(r.rhs) for r in scr] == ["a1 s1 b1"]


@pytest.mark.parametrize("g,n,k,count", [(2, 3, 1, 57), (1, 3, 2, 45)])
def test_intertwining_counts(g, n, k, count):
    rels = relations(g, n, k, Kind.INTERTWINING)
    assert len(rels) == count
    assert all(r.lhs != r.rhs for r in rels)


def test_classical_only_braid_relations():
    labels = Counter(r.label for r in relations(0, 4))
    assert labels == {"BR1": 1, "BR2": 2}
