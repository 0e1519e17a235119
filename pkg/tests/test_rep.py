import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from golden import PRINTED, printed_matrix
from surfbraid.hgroup import KClass, RingElem, RingMode
from surfbraid.matrix import RepMatrix, compose, mat_mul
from surfbraid.presentations import alphabet
from surfbraid.rep import (Character, InvarianceError, RepError, classical_block,
                           fox_oracle_sigma_block, index_set, lkb_compare_sigma1,
                           lkb_sigma, phi1_basis, phi1_generator, phi1_word,
                           phi2_basis, phi2_curated, rank, specialize,
                           substitute_t_sign, twist, v_basis_change, v_block,
                           validate_specialization, verify_relations)
from surfbraid.suites import random_word
from surfbraid.words import Gen, Word

PAIRS = [(1, 2), (1, 3), (2, 2), (2, 3)]


# rank and bases ------------------------------------------------------------

@pytest.mark.parametrize("g,n,k,expected", [(2, 3, 1, 6), (1, 3, 2, 10), (0, 4, 2, 6), (0, 5, 3, 20)])
def test_rank(g, n, k, expected):
    assert rank(g, n, k) == expected


@pytest.mark.parametrize("args", [(-1, 3, 1), (1, 0, 1), (1, 3, 0)])
def test_rank_bounds(args):
    with pytest.raises(RepError):
        rank(*args)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3), st.integers(1, 5), st.integers(1, 3))
def test_index_set_size(g, n, k):
    assert len(index_set(g, n, k)) == rank(g, n, k)


def test_curated_k2_labels_match_index_tuples():
    tuples = set(index_set(1, 3, 2))
    assert {(0, 0, 2, 0), (0, 0, 1, 1), (2, 0, 0, 0), (1, 1, 0, 0)} <= tuples
    assert len(phi2_basis()) == rank(1, 3, 2)


# Phi_1 ---------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(PRINTED))
def test_golden_generators(name):
    built = phi1_generator(2, 3, name)
    assert built.rows == ("g1", "g2", "a1", "a2", "b1", "b2")
    assert built == printed_matrix(name), built.first_difference(printed_matrix(name))


def test_column_convention():
    # the image of beta_1 under sigma_1 is beta_1 + q(1 - l_1) gamma_1
    col = dict(zip(phi1_basis(2, 3), phi1_generator(2, 3, "s1").column("b1")))
    assert str(col["b1"]) == "1" and str(col["g1"]) == "q - q l1"
    assert all(col[k].is_zero() for k in ("g2", "a1", "a2", "b2"))


def test_classical_case():
    assert str(phi1_generator(0, 3, "s1")) == str(fox_oracle_sigma_block(3, "s1"))


@pytest.mark.parametrize("g,n", PAIRS)
def test_relations_hold(g, n):
    report = verify_relations(g, n, lambda w: phi1_word(g, n, w))
    assert report.ok, [c.to_json_obj() for c in report.failures]


def test_plain_matrix_product_fails_relations():
    # multiplying generator matrices with the ordinary product (either order)
    # does not give a homomorphism once entries stop commuting
    def right(w):
        out = RepMatrix.identity(RingMode.for_k(1, 1), phi1_basis(1, 2))
        for gen, e in w.letters:
            out = mat_mul(out, phi1_generator(1, 2, gen, e))
        return out

    def left(w):
        out = RepMatrix.identity(RingMode.for_k(1, 1), phi1_basis(1, 2))
        for gen, e in w.letters:
            out = mat_mul(phi1_generator(1, 2, gen, e), out)
        return out

    assert not verify_relations(1, 2, right).ok
    assert not verify_relations(1, 2, left).ok


def test_corrupted_generator_is_caught():
    bad = phi1_generator(2, 3, "s1")
    bad.entries[0][0] = -bad.entries[0][0]

    def ev(w):
        out = RepMatrix.identity(bad.mode, bad.rows)
        for gen, e in w.letters:
            m = bad if (gen == Gen("s", 1) and e == 1) else phi1_generator(2, 3, gen, e)
            out = compose(out, m)
        return out

    report = verify_relations(2, 3, ev)
    assert not report.ok
    assert report.failures[0].difference is not None


def test_parallel_report_matches_serial():
    ev = lambda w: phi1_word(2, 3, w)
    a = verify_relations(2, 3, ev).to_json_obj()
    b = verify_relations(2, 3, ev, workers=4).to_json_obj()
    assert a == b


def test_prefactor_structure():
    for r in (1, 2):
        for fam, bar in (("a", "M"), ("b", "L")):
            m = phi1_generator(2, 3, f"{fam}{r}")
            mode = m.mode
            strip = RingElem.monomial(mode.gen(f"{bar}{r}", -1))
            for row in m.entries:
                for x in row:
                    assert not any(h.has_barred() for h in (strip * x).monomials())
    for i in (1, 2):
        m = phi1_generator(2, 3, f"s{i}")
        assert not any(h.has_barred() for row in m.entries for x in row for h in x.monomials())


@pytest.mark.parametrize("gen", alphabet(2, 3).generators, ids=str)
def test_inverse_generators(gen):
    a, b = phi1_generator(2, 3, gen, 1), phi1_generator(2, 3, gen, -1)
    assert compose(a, b).is_identity() and compose(b, a).is_identity()
    assert phi1_word(2, 3, Word([(gen, 1), (gen, 1), (gen, -1)])) == a


def test_empty_word_and_errors():
    assert phi1_word(2, 3, "").is_identity()
    with pytest.raises(RepError):
        phi1_generator(2, 3, "s3")
    with pytest.raises(RepError):
        phi1_generator(1, 3, "a2")


# classical block -----------------------------------------------------------

def test_fox_oracle_examples():
    assert str(fox_oracle_sigma_block(3, "s1")) == str(phi1_generator(0, 3, "s1"))
    assert str(fox_oracle_sigma_block(3, "s2")) == str(phi1_generator(0, 3, "s2"))
    assert fox_oracle_sigma_block(3, "s1 s1^-1").is_identity()
    with pytest.raises(RepError):
        fox_oracle_sigma_block(3, "a1")


def test_classical_block_product():
    blk = classical_block(phi1_word(2, 3, "s1 s2"), 3)
    assert blk == compose(fox_oracle_sigma_block(3, "s1", 2), fox_oracle_sigma_block(3, "s2", 2))
    assert classical_block(phi1_word(2, 3, ""), 3).is_identity()


def test_classical_block_detects_leak():
    m = phi1_word(1, 3, "s1")
    m.entries[2][0] = RingElem.one(m.mode)
    with pytest.raises(InvarianceError):
        classical_block(m, 3)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 4]), st.integers(0, 2), st.randoms(use_true_random=False))
def test_classical_block_matches_fox(n, g, rnd):
    w = random_word(rnd, [Gen("s", i) for i in range(1, n)], 12)
    assert classical_block(phi1_word(g, n, w), n) == fox_oracle_sigma_block(n, w, g)


# Phi_2 and LKB ---------------------------------------------------------------

def test_phi2_columns():
    m = phi2_curated("s1")
    assert str(m["w11", "w11"]) == "q^2 t"
    mode = m.mode
    assert [m[r, "w22"] for r in ("w11", "w12", "w22")] == \
        [RingElem.parse(x, mode) for x in ("1", "1 + t^-1", "1")]
    assert all(m[r, c].is_zero() for c in ("w11", "w12", "w22") for r in m.rows[3:])
    assert str(m["z", "z"]) == "1"


def test_phi2_unsupported():
    with pytest.raises(RepError, match="not provided by source data"):
        phi2_curated("s2")


def test_v_basis_columns():
    p = v_basis_change()
    assert [str(x) for x in p.column("v12")] == ["-q^-4 t", "0", "0"]
    assert [str(x) for x in p.column("v13")] == ["-q^-4 t", "q^-3 - q^-3 t", "-q^-2 t"]


def test_lkb_oracle_is_a_braid_representation():
    for n in (3, 4, 5):
        mats = {i: lkb_sigma(n, i) for i in range(1, n)}
        for i in range(1, n - 1):
            a, b = mats[i], mats[i + 1]
            assert a @ b @ a == b @ a @ b
        for i in range(1, n):
            for j in range(i + 2, n):
                assert mats[i] @ mats[j] == mats[j] @ mats[i]


def test_lkb_comparison():
    assert lkb_compare_sigma1() is True
    assert lkb_compare_sigma1(subst=False) is False
    lk = lkb_sigma(3, 1)
    assert [[str(x) for x in row] for row in v_block(True).entries] == \
        [[str(x) for x in row] for row in lk.entries]
    with pytest.raises(RepError):
        v_block(False)


def test_t_sign_substitution():
    mode = RingMode(0, KClass.KGE2)
    x = RingElem.parse("1 + t^-1 - 3 q t^2", mode)
    assert substitute_t_sign(x) == RingElem.parse("1 - t^-1 - 3 q t^2", mode)
    assert substitute_t_sign(substitute_t_sign(x)) == x


# specialization --------------------------------------------------------------

def test_specialization_examples():
    assert validate_specialization({"q": 1, "t": -1, "m1": 3, "L1": 5}, g=1, k=2) == []
    assert "[M1,l1] = q" in validate_specialization({"q": 2}, g=1)
    assert validate_specialization({"q": 2, "t": -1}, g=0, k=2) == []
    assert validate_specialization({"t": 2}, g=1, k=2) == ["[m1,l1] = t^2"]
    with pytest.raises(RepError):
        validate_specialization({"t": -1}, g=1, k=1)


def test_specialize_values():
    s2 = specialize(phi1_generator(2, 3, "s2"), {"q": 1})
    assert s2.tolist() == [[1, 0, 0, 0, 0, 0], [1, -1, 0, 0, 0, 0]] + \
        [[int(i == j) for j in range(6)] for i in range(2, 6)]
    a1 = specialize(phi1_generator(2, 3, "a1"), {"q": 1})
    expected = [[int(i == j) for j in range(6)] for i in range(6)]
    expected[2][0] = 1
    assert a1.tolist() == expected
    assert specialize(RepMatrix.identity(RingMode.for_k(1, 1), ["x"]), {"q": 1}).tolist() == [[1]]


def test_specialize_keeps_exact_fractions():
    m = phi1_generator(1, 2, "a1", -1)
    out = specialize(m, {"q": 1, "m1": 2, "M1": 3})
    assert any(not isinstance(x, int) for x in out.ravel())


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.integers(-3, 3).filter(bool), st.integers(-3, 3).filter(bool),
       st.integers(-3, 3).filter(bool))
def test_specialization_soundness(g, q, t, m):
    bad = validate_specialization({"q": q, "t": t, "m1": m}, g=g, k=2)
    if not bad:
        assert q == 1 and t * t == 1
    if q != 1:
        assert f"[M1,l1] = q" in bad


# characters ----------------------------------------------------------------

def test_character_validation():
    assert Character.parse("s=q", 1).violations(2)
    assert Character.parse("s=q", 0).violations(3) == []
    Character.parse("a1=q, b1=q^-2", 1).validate(2)
    with pytest.raises(RepError):
        Character.parse("a1=m1", 1)


def test_twist_examples():
    m = phi1_generator(1, 2, "a1")
    assert twist(Character.trivial(1), m, "a1") == m
    assert twist(Character.parse("a1=q", 1), m, "a1", n=2) == m.lmul(RingMode.for_k(1, 1).gen("q"))
    with pytest.raises(RepError):
        twist(Character.parse("s=q", 1), m, "a1", n=2)


@pytest.mark.parametrize("g,n", PAIRS)
def test_twisted_evaluator_passes(g, n):
    rng = random.Random(g * 10 + n)
    a = tuple((rng.randint(-2, 2), 0) for _ in range(g))
    b = tuple((rng.randint(-2, 2), 0) for _ in range(g))
    ch = Character(g, (0, 0), a, b).validate(n)
    report = verify_relations(g, n, lambda w: twist(ch, phi1_word(g, n, w), w))
    assert report.ok
