import random

import pytest
from hypothesis import given, settings, strategies as st

from surfbraid.action import FreeAuto, braid_action, generator_action, lifting_identity_check
from surfbraid.freecalc import fox_phi, phi_eval, psi_eval, sharp_conjugate
from surfbraid.hgroup import HGroupError, RingElem, RingMode
from surfbraid.presentations import alphabet, relations
from surfbraid.suites import fox_identity_holds
from surfbraid.words import Gen, Kind, Word, WordError, pi_alphabet

MODE = RingMode.for_k(2, 2)
PI = pi_alphabet(2, 3).generators
BNK = alphabet(2, 3, 2, Kind.BNK).generators


def words(gens, max_len=20):
    return st.lists(st.tuples(st.sampled_from(gens), st.sampled_from([1, -1])),
                    max_size=max_len).map(Word)


def test_generator_images():
    w = Word.parse("z1 s1 a2 b1")
    assert str(phi_eval(w, MODE)) == "q t l1 m2"
    with pytest.raises(WordError):
        phi_eval(Word.parse("_a1"), MODE)
    assert str(psi_eval(Word.parse("_s1 _a1 _b2"), MODE)) == "M1 L2"


def test_fox_simple():
    x = Gen("z", 1)
    assert fox_phi(Word.parse("z1"), x, MODE).is_one()
    assert fox_phi(Word.parse("z1^-1"), x, MODE) == -RingElem.monomial(MODE.gen("q", -1))
    assert fox_phi(Word.parse("a1 z1"), x, MODE) == RingElem.monomial(MODE.gen("m1"))


@settings(max_examples=200, deadline=None)
@given(words(BNK))
def test_fundamental_identity(w):
    assert fox_identity_holds(w, BNK, MODE)


@pytest.mark.parametrize("g,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_action_relations(g, n):
    for rel in relations(g, n):
        assert braid_action(rel.lhs, g) == braid_action(rel.rhs, g), str(rel)


def test_reverse_composition_breaks_relations():
    # composing letters right to left would be a left action; SCR rules it out
    def left(w, g):
        out = FreeAuto()
        for gen, e in w.letters:
            out = generator_action(gen, e, g).then(out)
        return out

    bad = [r.label for r in relations(1, 2) if left(r.lhs, 1) != left(r.rhs, 1)]
    assert "SCR" in bad


@pytest.mark.parametrize("gen", alphabet(2, 3).generators, ids=str)
def test_generator_inverses(gen):
    f, b = generator_action(gen, 1, 2), generator_action(gen, -1, 2)
    assert f.then(b).is_identity() and b.then(f).is_identity()


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(alphabet(2, 3).generators), words(PI))
def test_lifting_equivariance(gen, w):
    assert lifting_identity_check(gen, w, MODE)


def test_sharp_conjugate_rejects_barred():
    with pytest.raises(HGroupError):
        sharp_conjugate(MODE.gen("M1"), Word.parse("a1"))


def test_sharp_conjugate_value():
    # psi(a1) = M1 and M1^-1 l1 M1 = q^-1 l1
    assert str(sharp_conjugate(MODE.gen("l1"), Word.parse("a1"))) == "q^-1 l1"


@pytest.mark.parametrize("g,n,k", [(1, 2, 1), (2, 3, 1), (1, 3, 2)])
def test_psi_well_defined(g, n, k):
    mode = RingMode.for_k(g, k)
    for rel in relations(g, n, k, Kind.INTERTWINING):
        assert psi_eval(rel.lhs, mode) == psi_eval(rel.rhs, mode), str(rel)
