import json

import pytest

from surfbraid.hgroup import RingMode
from surfbraid.matrix import (MatrixError, NotInvertible, RepMatrix, compose,
                              compose_inverse, mat_inverse, mat_mul)
from surfbraid.rep import phi1_generator, phi1_word

MODE = RingMode.for_k(2, 1)


def test_diagonals_do_not_commute():
    a = RepMatrix.diagonal(MODE, ["x"], [MODE.gen("M1")])
    b = RepMatrix.diagonal(MODE, ["x"], [MODE.gen("l1")])
    assert mat_mul(a, b) != mat_mul(b, a)
    assert str(mat_mul(a, b)[0, 0]) == "q l1 M1"


@pytest.mark.parametrize("gen", ["s1", "s2", "a1", "b2"])
def test_inverse_two_sided(gen):
    m = phi1_generator(2, 3, gen)
    inv = mat_inverse(m)
    assert mat_mul(m, inv).is_identity() and mat_mul(inv, m).is_identity()
    cinv = compose_inverse(m)
    assert compose(m, cinv).is_identity() and compose(cinv, m).is_identity()


def test_sigma2_inverse_block():
    inv = mat_inverse(phi1_generator(2, 3, "s2"))
    assert [[str(inv[i, j]) for j in range(2)] for i in range(2)] == [["1", "0"], ["1", "-q^-1"]]


def test_scalar_inverse():
    m = RepMatrix.identity(MODE, ["x", "y"]).lmul(MODE.gen("M1"))
    assert mat_inverse(m) == RepMatrix.identity(MODE, ["x", "y"]).lmul(MODE.gen("M1", -1))


def test_not_invertible():
    m = RepMatrix.identity(MODE, ["x"]).lmul(2)
    with pytest.raises(NotInvertible):
        mat_inverse(m)


def test_shape_errors():
    a = RepMatrix.identity(MODE, ["x"])
    b = RepMatrix.identity(MODE, ["x", "y"])
    with pytest.raises(MatrixError):
        mat_mul(a, b)
    with pytest.raises(MatrixError):
        a + b


def test_compose_differs_from_plain_product():
    a, b = phi1_generator(2, 3, "a1"), phi1_generator(2, 3, "b1")
    assert compose(a, b) != mat_mul(b, a)
    assert compose(a, b) == phi1_word(2, 3, "a1 b1")


def test_json_round_trip():
    m = phi1_word(2, 3, "s1 a1 b2^-1")
    obj = json.loads(m.to_json(2, 3, 1))
    assert obj["basis"] == ["g1", "g2", "a1", "a2", "b1", "b2"]
    assert RepMatrix.from_json_obj(obj) == m
