"""
The action of the surface braid group B_{0,n} on the free group
pi_1(Sigma_n) = <z_1..z_n, a_1..a_g, b_1..b_g>.

Each braid generator acts by a fixed automorphism (``s_i`` permutes and
conjugates punctures, ``a_r``/``b_r`` drag the first puncture around the
meridian/longitude of handle r).  Letters ``s_i`` of the configuration
group with k >= 2 points are fixed by every generator.

Composition order: the action is read off conjugation in the semidirect
product, ``x^-1 y x = x_*(y)``, hence for a braid word ``w = x_1 ... x_m``::

    w_* = (x_m)_* o ... o (x_1)_*

i.e. letters are applied left to right.  This is a right action.  It is the
only one of the two orders under which the defining relations of B_{0,n}
hold (checked for every relation in ``tests/test_freecalc_action.py``).
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping

from .words import Gen, Word, WordError, word_of, UNBARRED

__all__ = [
    "FreeAuto",
    "generator_action",
    "braid_action",
    "lifting_identity_check",
]


class FreeAuto:
    """Endomorphism of a free group given by generator images.

    Generators without an explicit image are fixed.
    """

    __slots__ = ("images",)

    def __init__(self, images: Mapping[Gen, Word] = None):
        self.images: Dict[Gen, Word] = {
            g: w for g, w in (images or {}).items() if w != Word([(g, 1)])
        }

    def image(self, gen: Gen) -> Word:
        return self.images.get(gen) or Word([(gen, 1)])

    def __call__(self, w: Word) -> Word:
        letters = []
        for gen, e in w.letters:
            img = self.images.get(gen)
            if img is None:
                letters.append((gen, e))
            elif e == 1:
                letters.extend(img.letters)
            else:
                letters.extend(img.inverse().letters)
        return Word(letters)

    def then(self, other: "FreeAuto") -> "FreeAuto":
        """The map ``other o self`` (apply ``self`` first)."""
        gens = set(self.images) | set(other.images)
        return FreeAuto({g: other(self.image(g)) for g in gens})

    def is_identity(self) -> bool:
        return not self.images

    def table(self, gens: Iterable[Gen]) -> Dict[Gen, Word]:
        return {g: self.image(g) for g in gens}

    def __eq__(self, other):
        return isinstance(other, FreeAuto) and self.images == other.images

    def __hash__(self):
        return hash(frozenset(self.images.items()))

    def __repr__(self):
        body = ", ".join(f"{g} -> {w}" for g, w in sorted(self.images.items()))
        return f"FreeAuto({body})"


def _w(*items) -> Word:
    return word_of(*items)


def _sigma_action(i: int, sign: int) -> FreeAuto:
    zi, zj = ("z", i), ("z", i + 1)
    if sign > 0:
        return FreeAuto({
            Gen("z", i): _w(zi, zj, ("z", i, -1)),
            Gen("z", i + 1): _w(zi),
        })
    return FreeAuto({
        Gen("z", i): _w(zj),
        Gen("z", i + 1): _w(("z", i + 1, -1), zi, zj),
    })


def _handle_action(fam: str, r: int, g: int, sign: int) -> FreeAuto:
    # x is the handle curve the first puncture is dragged along (a_r or b_r),
    # y the dual curve of the same handle.
    other = "b" if fam == "a" else "a"
    x, xi = (fam, r), (fam, r, -1)
    y = (other, r)
    z, zi = ("z", 1), ("z", 1, -1)
    images = {}
    if sign > 0:
        comm = _w(x, z, xi, zi)
        images[Gen("z", 1)] = _w(x, z, xi)
        images[Gen(fam, r)] = _w(x, z, x, zi, xi)
        if fam == "a":
            images[Gen("b", r)] = _w(y, x, zi, xi)
        else:
            images[Gen("a", r)] = _w(x, z, xi, y, z, x, zi, xi)
    else:
        comm = _w(zi, xi, z, x)
        images[Gen("z", 1)] = _w(zi, xi, z, x, z)
        images[Gen(fam, r)] = _w(zi, x, z)
        if fam == "a":
            images[Gen("b", r)] = _w(y, z)
        else:
            images[Gen("a", r)] = _w(zi, y, xi, zi, x, z)
    for s in range(r + 1, g + 1):
        for f in ("a", "b"):
            images[Gen(f, s)] = comm * _w((f, s)) * comm.inverse()
    return FreeAuto(images)


def generator_action(gen: Gen, sign: int = 1, g: int = None) -> FreeAuto:
    """Automorphism induced by one braid generator (barred names accepted).

    ``g`` (the genus) is needed for handle generators so that the handles
    with larger index can be conjugated.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +-1, got {sign}")
    fam = UNBARRED.get(gen.family, gen.family)
    if fam == "s":
        return _sigma_action(gen.index, sign)
    if fam in ("a", "b"):
        if g is None:
            g = gen.index
        if not 1 <= gen.index <= g:
            raise WordError(f"handle index {gen.index} out of range 1..{g}")
        return _handle_action(fam, gen.index, g, sign)
    raise WordError(f"{gen} is not a braid generator")


def braid_action(w: Word, g: int) -> FreeAuto:
    """Automorphism of a braid word; letters act left to right."""
    cache = {}
    out = FreeAuto()
    for gen, e in w.letters:
        key = (gen, e)
        if key not in cache:
            cache[key] = generator_action(gen, e, g)
        out = out.then(cache[key])
    return out


def lifting_identity_check(gen: Gen, w: Word, mode) -> bool:
    """Equivariance ``phi(gen_*(w)) == psi(gen)^-1 phi(w) psi(gen)``."""
    from .freecalc import phi_eval, sharp_conjugate

    moved = generator_action(gen, 1, mode.genus)(w)
    lhs = phi_eval(moved, mode)
    rhs = sharp_conjugate(phi_eval(w, mode), Word([(gen, 1)]))
    return lhs == rhs
