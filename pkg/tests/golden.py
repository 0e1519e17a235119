"""Hand transcription of the published g=2, n=3 matrices of Phi_1.

Entries are expanded into the canonical ring-element grammar.  Each matrix is
``(prefactor, rows)`` with rows over the basis g1 g2 a1 a2 b1 b2; the
prefactor multiplies every entry on the left.
"""

from surfbraid.hgroup import RingElem, RingMode, h_parse
from surfbraid.matrix import RepMatrix

BASIS = ("g1", "g2", "a1", "a2", "b1", "b2")

_I4_TAIL = [
    ["0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "1"],
]

PRINTED = {
    "s1": ("1", [
        ["-q", "1", "q - q m1", "q - q m2", "q - q l1", "q - q l2"],
        ["0", "1", "0", "0", "0", "0"],
    ] + _I4_TAIL),
    "s2": ("1", [
        ["1", "0", "0", "0", "0", "0"],
        ["q", "-q", "0", "0", "0", "0"],
    ] + _I4_TAIL),
    "a1": ("M1", [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["1", "0", "q m1", "-q + q m2", "-1 + l1", "-q + q l2"],
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "1"],
    ]),
    "a2": ("M2", [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["1", "0", "-1 + m1", "q m2", "-1 + l1", "-1 + l2"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "1"],
    ]),
    "b1": ("L1", [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "q", "0", "0", "0"],
        ["0", "0", "0", "1", "0", "0"],
        ["1", "0", "-q + q^2 m1", "-q + q m2", "q l1", "-q + q l2"],
        ["0", "0", "0", "0", "0", "1"],
    ]),
    "b2": ("L2", [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "q", "0", "0"],
        ["0", "0", "0", "0", "1", "0"],
        ["1", "0", "-1 + m1", "-q + q^2 m2", "-1 + l1", "q l2"],
    ]),
}


def printed_matrix(name: str) -> RepMatrix:
    mode = RingMode.for_k(2, 1)
    pre, rows = PRINTED[name]
    scale = h_parse(pre, mode)
    entries = [[RingElem.monomial(scale) * RingElem.parse(x, mode) for x in row] for row in rows]
    return RepMatrix(mode, BASIS, BASIS, entries)
