"""
Evaluation of words in the coefficient group and Fox derivatives.

``phi_eval`` sends a word of the configuration group to H::

    s_i -> t,  z_j -> q,  a_r -> m_r,  b_r -> l_r

``psi_eval`` extends it to the intertwining group, where the barred braid
letters go to ``_s_i -> 1, _a_r -> M_r, _b_r -> L_r``.

Fox derivatives are pushed through ``phi`` as they are formed, so only
elements of Z[H] are ever built.
"""

from __future__ import annotations

from typing import Dict

from .hgroup import HElem, HGroupError, RingElem, RingMode
from .words import Gen, Word, WordError

__all__ = [
    "phi_eval",
    "psi_eval",
    "fox_phi",
    "fox_jacobian",
    "sharp_conjugate",
    "generator_image",
]


def generator_image(gen: Gen, mode: RingMode) -> HElem:
    fam, i = gen.family, gen.index
    if fam == "z":
        return mode.gen("q")
    if fam == "s":
        return mode.identity() if mode.kills_t else mode.gen("t")
    if fam == "_s":
        return mode.identity()
    name = {"a": "m", "b": "l", "_a": "M", "_b": "L"}.get(fam)
    if name is None:
        raise WordError(f"unknown generator family {fam!r}")
    try:
        return mode.gen(f"{name}{i}")
    except HGroupError as exc:
        raise WordError(str(exc)) from None


def _eval(w: Word, mode: RingMode) -> HElem:
    cache: Dict = {}
    out = mode.identity()
    for gen, e in w.letters:
        key = (gen, e)
        h = cache.get(key)
        if h is None:
            h = generator_image(gen, mode)
            if e < 0:
                h = h.inverse()
            cache[key] = h
        out = out * h
    return out


def phi_eval(w: Word, mode: RingMode) -> HElem:
    """Image of a configuration-group word (no barred letters)."""
    for gen, _ in w.letters:
        if gen.barred:
            raise WordError(f"barred generator {gen} in phi_eval; use psi_eval")
    return _eval(w, mode)


def psi_eval(w: Word, mode: RingMode) -> HElem:
    """Image of an intertwining-group word."""
    return _eval(w, mode)


def fox_phi(w: Word, x: Gen, mode: RingMode) -> RingElem:
    """``phi`` applied to the Fox derivative of ``w`` with respect to ``x``."""
    out = RingElem.zero(mode)
    prefix = mode.identity()
    for gen, e in w.letters:
        img = generator_image(gen, mode)
        if gen == x:
            if e > 0:
                out = out + RingElem.monomial(prefix)
            else:
                out = out - RingElem.monomial(prefix * img.inverse())
        prefix = prefix * (img if e > 0 else img.inverse())
    return out


def fox_jacobian(images, gens, mode: RingMode):
    """``J[i][j] = phi(d images[i] / d gens[j])`` as a list of lists."""
    return [[fox_phi(w, x, mode) for x in gens] for w in images]


def sharp_conjugate(h: HElem, beta: Word) -> HElem:
    """``psi(beta)^-1 h psi(beta)`` with braid letters read as barred ones."""
    if h.has_barred():
        raise HGroupError(f"{h} has barred exponents; expected an element of G")
    p = psi_eval(beta.bar(), h.mode)
    return p.inverse() * h * p
