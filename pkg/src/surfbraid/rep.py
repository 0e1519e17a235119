"""
Matrix representations of the surface braid group B_{0,n} over Z[H].

``phi1_generator`` builds the k = 1 matrices in the fork basis
``g1..g_{n-1}, a1..a_g, b1..b_g`` (gamma, alpha, beta classes) from closed
templates; ``phi1_word`` composes them.  Matrices follow the columns-are-
images convention of :mod:`surfbraid.matrix`, so words are composed with
:func:`~surfbraid.matrix.compose` in reading order (the braid group acts on
the right, see :mod:`surfbraid.action`).

Also here:

* an independent Fox-calculus oracle for the classical gamma block;
* the curated k = 2 matrix of sigma_1 for g = 1, n = 3, its v-basis change
  and a comparison against the Lawrence-Krammer-Bigelow matrix;
* commutative specializations, central character twists and the relation
  verifier used by the test suites and the CLI.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .hgroup import HElem, HGroupError, KClass, RingElem, RingMode, h_parse
from .matrix import (MatrixError, RepMatrix, compose, compose_inverse, mat_eq)
from .presentations import Relation, relations
from .words import Gen, Kind, Word, WordError

__all__ = [
    "RepError",
    "InvarianceError",
    "rank",
    "index_set",
    "phi1_basis",
    "phi1_generator",
    "phi1_word",
    "fox_oracle_sigma_block",
    "classical_block",
    "PHI2_BASIS",
    "phi2_basis",
    "phi2_curated",
    "substitute_t_sign",
    "v_basis_change",
    "v_block",
    "lkb_sigma",
    "lkb_compare_sigma1",
    "validate_specialization",
    "specialize",
    "Character",
    "twist",
    "RelationCheck",
    "RelationReport",
    "verify_relations",
]


class RepError(ValueError):
    """Bad generator, bounds or unsupported request."""


class InvarianceError(RepError):
    """The gamma span is not invariant under a sigma-only word."""


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

def rank(g: int, n: int, k: int) -> int:
    """Rank of the k-th homology module: ``C(2g + n + k - 2, k)``."""
    for name, v in (("g", g), ("n", n), ("k", k)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise RepError(f"{name} must be an integer")
    if g < 0 or n < 1 or k < 1:
        raise RepError(f"invalid bounds g={g}, n={n}, k={k}")
    return math.comb(2 * g + n + k - 2, k)


def index_set(g: int, n: int, k: int) -> List[Tuple[int, ...]]:
    """Tuples of ``2g + n - 1`` non-negative ints summing to k.

    The slots are alpha_1..alpha_g, beta_1..beta_g, gamma_1..gamma_{n-1}: a
    tuple records how many of the k points sit on each fork.
    """
    rank(g, n, k)
    slots = 2 * g + n - 1
    out: List[Tuple[int, ...]] = []

    def rec(prefix, left, remaining):
        if remaining == 1:
            out.append(prefix + (left,))
            return
        for v in range(left, -1, -1):
            rec(prefix + (v,), left - v, remaining - 1)

    if slots > 0:
        rec((), k, slots)
    return out


def phi1_basis(g: int, n: int) -> List[str]:
    return ([f"g{j}" for j in range(1, n)] + [f"a{r}" for r in range(1, g + 1)]
            + [f"b{r}" for r in range(1, g + 1)])


# ---------------------------------------------------------------------------
# Phi_1
# ---------------------------------------------------------------------------

def _b0n_gen(g: int, n: int, gen: Gen) -> Gen:
    if isinstance(gen, str):
        w = Word.parse(gen)
        if len(w) != 1 or w.letters[0][1] != 1:
            raise RepError(f"expected a single generator, got {gen!r}")
        gen = w.letters[0][0]
    if gen.barred:
        gen = gen.unbar()
    ok = ((gen.family == "s" and 1 <= gen.index < n)
          or (gen.family in ("a", "b") and 1 <= gen.index <= g))
    if not ok:
        raise RepError(f"{gen} is not a generator of B_0,{n} in genus {g}")
    return gen


def _phi1_template(g: int, n: int, gen: Gen) -> RepMatrix:
    mode = RingMode.for_k(g, 1)
    labels = phi1_basis(g, n)
    idx = {lab: i for i, lab in enumerate(labels)}
    m = RepMatrix.identity(mode, labels)
    e = m.entries
    zero_row = [RingElem.zero(mode)] * len(labels)
    one = RingElem.one(mode)
    q = RingElem.monomial(mode.gen("q"))
    mm = lambda s: RingElem.monomial(mode.gen(f"m{s}"))
    ll = lambda s: RingElem.monomial(mode.gen(f"l{s}"))
    fam, i = gen.family, gen.index

    if fam == "s":
        row = idx[f"g{i}"]
        e[row] = list(zero_row)
        if i > 1:
            e[row][idx[f"g{i - 1}"]] = q
        e[row][row] = -q
        if i + 1 <= n - 1:
            e[row][idx[f"g{i + 1}"]] = one
        if i == 1:
            # only sigma_1 touches the handles
            for s in range(1, g + 1):
                e[row][idx[f"a{s}"]] = q * (one - mm(s))
                e[row][idx[f"b{s}"]] = q * (one - ll(s))
        return m

    r = i
    if fam == "a":
        row = idx[f"a{r}"]
        e[row] = list(zero_row)
        if n >= 2:
            e[row][idx["g1"]] = one
        for s in range(1, g + 1):
            qs = q if s > r else one
            e[row][idx[f"a{s}"]] = mm(r) * q if s == r else qs * (mm(s) - one)
            e[row][idx[f"b{s}"]] = qs * (ll(s) - one)
        return m.lmul(mode.gen(f"M{r}"))

    e[idx[f"a{r}"]][idx[f"a{r}"]] = q
    row = idx[f"b{r}"]
    e[row] = list(zero_row)
    if n >= 2:
        e[row][idx["g1"]] = one
    for s in range(1, g + 1):
        if s < r:
            e[row][idx[f"a{s}"]] = mm(s) - one
            e[row][idx[f"b{s}"]] = ll(s) - one
        elif s == r:
            e[row][idx[f"a{s}"]] = q * (mm(s) * q - one)
            e[row][idx[f"b{s}"]] = ll(s) * q
        else:
            e[row][idx[f"a{s}"]] = q * (mm(s) - one)
            e[row][idx[f"b{s}"]] = q * (ll(s) - one)
    return m.lmul(mode.gen(f"L{r}"))


@lru_cache(maxsize=None)
def _phi1_cached(g: int, n: int, gen: Gen, sign: int) -> RepMatrix:
    m = _phi1_template(g, n, gen)
    return m if sign > 0 else compose_inverse(m)


def phi1_generator(g: int, n: int, gen, sign: int = 1) -> RepMatrix:
    """Matrix of one generator (``sign=-1`` for its inverse).

    >>> print(phi1_generator(0, 3, "s1"))
        g1  g2
    g1 [-q   1]
    g2 [ 0   1]
    """
    if sign not in (1, -1):
        raise RepError(f"sign must be +-1, got {sign}")
    if g < 0 or n < 1:
        raise RepError(f"invalid bounds g={g}, n={n}")
    return _phi1_cached(g, n, _b0n_gen(g, n, gen), sign).copy()


def phi1_word(g: int, n: int, w) -> RepMatrix:
    """Image of a braid word; letters are applied left to right."""
    if isinstance(w, str):
        w = Word.parse(w)
    out = RepMatrix.identity(RingMode.for_k(g, 1), phi1_basis(g, n))
    for gen, e in w.letters:
        out = compose(out, _phi1_cached(g, n, _b0n_gen(g, n, gen), e))
    return out


# ---------------------------------------------------------------------------
# classical block and its Fox oracle
# ---------------------------------------------------------------------------

def fox_oracle_sigma_block(n: int, w, g: int = 0) -> RepMatrix:
    """Reduced Burau matrix of a sigma-only word via Fox calculus.

    The Jacobian ``J[i][j] = phi(d w_*(z_i) / d z_j)`` is read in the basis
    ``e_j = dz_j - dz_{j+1}``: the image of ``e_j`` has coordinates
    ``row_j - row_{j+1}``, whose partial sums are its e-coordinates.
    Entries live in the ring of genus ``g`` so the result can be compared
    with :func:`classical_block` directly.
    """
    from .action import braid_action
    from .freecalc import fox_jacobian

    if isinstance(w, str):
        w = Word.parse(w)
    for gen, _ in w.letters:
        if gen.family != "s" or not 1 <= gen.index < n:
            raise RepError(f"{gen} is not a sigma letter for n={n}")
    mode = RingMode.for_k(g, 1)
    act = braid_action(w, g)
    zs = [Gen("z", j) for j in range(1, n + 1)]
    jac = fox_jacobian([act.image(z) for z in zs], zs, mode)
    labels = [f"g{j}" for j in range(1, n)]
    out = RepMatrix.zeros(mode, labels)
    for j in range(n - 1):
        diff = [x - y for x, y in zip(jac[j], jac[j + 1])]
        acc = RingElem.zero(mode)
        for i in range(n - 1):
            acc = acc + diff[i]
            out.entries[i][j] = acc
        if not (acc + diff[n - 1]).is_zero():
            raise RepError("image of e_j has nonzero augmentation")
    return out


def classical_block(m: RepMatrix, n: int) -> RepMatrix:
    """The gamma block of a sigma-only image, after checking invariance."""
    gam = [f"g{j}" for j in range(1, n)]
    if list(m.rows[:n - 1]) != gam or list(m.cols[:n - 1]) != gam:
        raise RepError("matrix does not start with the gamma basis")
    rest = m.rows[n - 1:]
    for r in rest:
        for c in gam:
            if not m[r, c].is_zero():
                raise InvarianceError(f"entry ({r}, {c}) = {m[r, c]} should vanish")
    return m.block(gam, gam)


# ---------------------------------------------------------------------------
# Phi_2, g = 1, n = 3
# ---------------------------------------------------------------------------

PHI2_BASIS = ("w11", "w12", "w22", "a00", "a01", "a02", "b00", "b01", "b02", "z")

# image of each basis vector under sigma_1, as {target: entry}
_PHI2_S1 = {
    "w11": {"w11": "q^2 t"},
    "w12": {"w11": "-q t", "w12": "-q"},
    "w22": {"w11": "1", "w12": "1 + t^-1", "w22": "1"},
    "a00": {"a00": "1", "a01": ("q (1 + t^-1)", "1 - t m1"),
            "w11": ("q^2", "m1 m1 - (1 + t) m1 + 1")},
    "a01": {"a01": "-q", "w11": ("q^2 t", "m1 - 1")},
    "a02": {"a01": "1", "a02": "1", "w11": ("q t", "1 - m1"), "w12": ("q", "1 - m1")},
    "b00": {"b00": "1", "b01": ("q (1 + t^-1)", "1 - t l1"),
            "w11": ("q^2", "l1 l1 - (1 + t) l1 + 1")},
    "b01": {"b01": "-q", "w11": ("q^2 t", "l1 - 1")},
    "b02": {"b01": "1", "b02": "1", "w11": ("q t", "1 - l1"), "w12": ("q", "1 - l1")},
    "z": {"a01": ("q", "t^-1 - t l1"), "b01": ("q", "1 - m1"),
          "w11": ("q^2", "1 + m1 (l1 - 1) - t l1"), "z": "1"},
}


def _expr(text: str, mode: RingMode) -> RingElem:
    """Tiny evaluator for the curated entries: sums, products, parentheses."""
    import re

    tokens = re.findall(r"\(|\)|[+-]|[0-9]+|[a-zA-Z][0-9]*(?:\^-?[0-9]+)?", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        pos += 1
        return tokens[pos - 1]

    def atom():
        tok = take()
        if tok == "(":
            v = total()
            if take() != ")":
                raise RepError(f"unbalanced expression {text!r}")
            return v
        if tok.isdigit():
            return RingElem.from_int(mode, int(tok))
        return RingElem.monomial(h_parse(tok, mode))

    def product():
        v = atom()
        while peek() not in (None, "+", "-", ")"):
            v = v * atom()
        return v

    def total():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        v = product() * sign
        while peek() in ("+", "-"):
            s = take()
            p = product()
            v = v + p if s == "+" else v - p
        return v

    out = total()
    if pos != len(tokens):
        raise RepError(f"trailing tokens in {text!r}")
    return out


def _entry(cell, mode) -> RingElem:
    if isinstance(cell, tuple):
        out = RingElem.one(mode)
        for part in cell:
            out = out * _expr(part, mode)
        return out
    return _expr(cell, mode)


def phi2_basis() -> List[str]:
    return list(PHI2_BASIS)


def phi2_curated(gen="s1") -> RepMatrix:
    """The 10x10 k = 2 matrix for g = 1, n = 3; only ``s1`` is available."""
    name = str(gen)
    if name != "s1":
        raise RepError(f"phi2 image of {name!r} is not provided by source data")
    mode = RingMode.for_k(1, 2)
    m = RepMatrix.zeros(mode, PHI2_BASIS)
    for j, col in enumerate(PHI2_BASIS):
        for row, cell in _PHI2_S1[col].items():
            m.entries[PHI2_BASIS.index(row)][j] = _entry(cell, mode)
    return m


def substitute_t_sign(x: RingElem) -> RingElem:
    """The ring map ``t -> -t``."""
    out = {k: (-c if k[1] % 2 else c) for k, c in x.terms.items()}
    return RingElem(x.mode, out)


def _to_central(x: RingElem, mode: RingMode) -> RingElem:
    """Move an element of Z[<q, t>] into another ring mode."""
    out = RingElem.zero(mode)
    for h, c in x.items():
        if any(h.exps[2:]):
            raise RepError(f"{x} is not central")
        mono = mode.gen("q", h.q) * (mode.gen("t", h.t) if h.t else mode.identity())
        out = out + RingElem.monomial(mono, c)
    return out


_W = ("w11", "w12", "w22")
_V = ("v12", "v13", "v23")
_LKB_MODE = RingMode(0, KClass.KGE2)


def _phi2_w_block(subst: bool) -> RepMatrix:
    blk = phi2_curated("s1").block(_W, _W)
    blk = RepMatrix(_LKB_MODE, _W, _W,
                    [[_to_central(x, _LKB_MODE) for x in row] for row in blk.entries])
    return blk.map_entries(substitute_t_sign) if subst else blk


def v_basis_change() -> RepMatrix:
    """Columns express v12, v13, v23 in the basis w11, w12, w22.

    Its determinant contains the factor ``1 - t^-1``, which is not a unit,
    so the matrix has no inverse over the Laurent ring; :func:`v_block` and
    :func:`lkb_compare_sigma1` avoid inverting it.
    """
    mode = _LKB_MODE
    cols = {
        "v12": {"w11": "-q^-4 t"},
        "v13": {"w11": "-q^-4 t", "w12": "-q^-3 t + q^-3", "w22": "-q^-2 t"},
        "v23": {"w22": "-q^-2 t"},
    }
    m = RepMatrix.zeros(mode, _W, _V)
    for j, v in enumerate(_V):
        for row, text in cols[v].items():
            m.entries[_W.index(row)][j] = RingElem.parse(text, mode)
    return m


def lkb_sigma(n: int, i: int) -> RepMatrix:
    """Lawrence-Krammer-Bigelow matrix of sigma_i on v_{j,k}, 1 <= j < k <= n.

    Classical generator formulas, columns are images, entries in
    Z[q^+-1, t^+-1].
    """
    if not 1 <= i < n:
        raise RepError(f"sigma_{i} is not a generator for n={n}")
    mode = _LKB_MODE
    labels = [f"v{j}{k}" for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    if n > 9:
        labels = [f"v{j},{k}" for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    pairs = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    pos = {p: x for x, p in enumerate(pairs)}
    q = RingElem.monomial(mode.gen("q"))
    t = RingElem.monomial(mode.gen("t"))
    one = RingElem.one(mode)
    m = RepMatrix.zeros(mode, labels)

    def put(col, j, k, val):
        m.entries[pos[(j, k)]][col] = m.entries[pos[(j, k)]][col] + val

    for col, (j, k) in enumerate(pairs):
        if i not in (j - 1, j, k - 1, k):
            put(col, j, k, one)
        elif i == j - 1:
            put(col, i, k, q)
            put(col, i, j, q * q - q)
            put(col, j, k, one - q)
        elif i == j and j != k - 1:
            put(col, j + 1, k, one)
        elif i == k - 1 and i != j:
            put(col, j, i, q)
            put(col, j, k, one - q)
            put(col, i, k, -(q * q - q) * t)
        elif i == k:
            put(col, j, k + 1, one)
        else:  # i == j == k - 1
            put(col, j, k, -t * q * q)
    return m


def v_block(subst: bool = True) -> RepMatrix:
    """The w-block of Phi_2(sigma_1) rewritten in the v-basis.

    Solving ``P X = W P`` needs fractions, so this goes through sympy and
    fails unless the result is again a Laurent polynomial matrix.
    """
    import sympy as sp

    qs, ts = sp.symbols("q t")
    mode = _LKB_MODE

    def to_sym(x: RingElem):
        return sum((c * qs ** h.q * ts ** h.t for h, c in x.items()), sp.Integer(0))

    def to_ring(expr):
        num, den = sp.fraction(sp.cancel(sp.together(expr)))
        den_poly = sp.Poly(den, qs, ts)
        if len(den_poly.terms()) != 1:
            raise RepError(f"entry {sp.simplify(expr)} is not a Laurent polynomial")
        (dq, dt), dc = den_poly.terms()[0]
        out = RingElem.zero(mode)
        for (a, b), c in sp.Poly(sp.expand(num), qs, ts).terms():
            c = sp.Rational(c, dc)
            if c.q != 1:
                raise RepError(f"entry {expr} has non-integer coefficients")
            mono = mode.gen("q", a - dq) * mode.gen("t", b - dt)
            out = out + RingElem.monomial(mono, int(c))
        return out

    w = sp.Matrix(3, 3, lambda i, j: to_sym(_phi2_w_block(subst).entries[i][j]))
    p = sp.Matrix(3, 3, lambda i, j: to_sym(v_basis_change().entries[i][j]))
    x = p.inv() * w * p
    return RepMatrix(mode, _V, _V, [[to_ring(x[i, j]) for j in range(3)] for i in range(3)])


def lkb_compare_sigma1(subst: bool = True) -> bool:
    """Does the v-basis form of Phi_2(sigma_1) agree with LKB(sigma_1), n = 3?

    Checked as ``W P == P L``, which needs no inversion; P is injective
    over the Laurent domain, so this is the same as ``P^-1 W P == L``.
    """
    w = _phi2_w_block(subst)
    p = v_basis_change()
    lkb = lkb_sigma(3, 1)
    lkb = RepMatrix(lkb.mode, _V, _V, lkb.entries)
    from .matrix import mat_mul

    return mat_eq(mat_mul(w, p), mat_mul(p, lkb))


# ---------------------------------------------------------------------------
# specialization
# ---------------------------------------------------------------------------

def _norm_assign(mode: RingMode, assignments: Mapping[str, object]) -> Dict[str, object]:
    names = ["q"] + ([] if mode.kills_t else ["t"]) + mode.slot_names()[2:]
    out = {}
    for key in assignments:
        if key not in names:
            raise RepError(f"unknown generator {key!r} for genus {mode.genus}"
                           + (" with k = 1" if mode.kills_t and key == "t" else ""))
    for name in names:
        v = assignments.get(name, 1)
        if isinstance(v, bool) or v == 0:
            raise RepError(f"{name} must be assigned a nonzero value, got {v!r}")
        out[name] = Fraction(v) if isinstance(v, int) else v
    return out


def validate_specialization(assignments: Mapping[str, object], g: int = 0, k: int = 1,
                            mode: RingMode = None) -> List[str]:
    """Relations of H broken by a commutative assignment (empty list: ok).

    Generators left out of ``assignments`` are sent to 1.  In a commutative
    target every commutator is 1, so ``[m_r, l_r] = t^2`` needs ``t^2 = 1``
    and the two relations with value q need ``q = 1``.
    """
    mode = mode or RingMode.for_k(g, k)
    vals = _norm_assign(mode, assignments)
    q = vals["q"]
    t = vals.get("t", 1)
    bad = []
    for r in range(1, mode.genus + 1):
        if not mode.kills_t and t * t != 1:
            bad.append(f"[m{r},l{r}] = t^2")
        if q != 1:
            bad.append(f"[M{r},l{r}] = q")
            bad.append(f"[m{r},L{r}] = q")
    return bad


def _numeric(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def specialize(m: RepMatrix, assignments: Mapping[str, object]) -> np.ndarray:
    """Evaluate every entry; returns an object array of exact numbers.

    Integer and Fraction values stay exact.  Raises :class:`RepError` if the
    assignment is not a ring map.
    """
    bad = validate_specialization(assignments, mode=m.mode)
    if bad:
        raise RepError("assignment violates " + ", ".join(bad))
    vals = _norm_assign(m.mode, assignments)
    names = m.mode.slot_names()
    out = np.empty(m.shape, dtype=object)
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            acc = 0
            for h, c in x.items():
                term = c
                for slot, e in enumerate(h.exps):
                    if e:
                        term = term * vals[names[slot]] ** e
                acc = acc + term
            out[i, j] = _numeric(acc)
    return out


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """A homomorphism to the centre ``<q> + <t>``, stored as exponent pairs.

    ``sigma`` is shared by all sigma_i (they are conjugate); ``a`` and ``b``
    hold one pair per handle.
    """

    g: int
    sigma: Tuple[int, int] = (0, 0)
    a: Tuple[Tuple[int, int], ...] = ()
    b: Tuple[Tuple[int, int], ...] = ()
    k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "a", tuple(tuple(p) for p in self.a) or ((0, 0),) * self.g)
        object.__setattr__(self, "b", tuple(tuple(p) for p in self.b) or ((0, 0),) * self.g)
        if len(self.a) != self.g or len(self.b) != self.g:
            raise RepError("need one image per handle")
        if self.k == 1 and any(p[1] for p in (self.sigma,) + self.a + self.b):
            raise RepError("t is not available when k = 1")

    @classmethod
    def trivial(cls, g: int, k: int = 1) -> "Character":
        return cls(g, k=k)

    @classmethod
    def parse(cls, text: str, g: int, k: int = 1) -> "Character":
        """``"s=q, a1=q^-1 t"``; unnamed generators go to 1."""
        mode = RingMode.for_k(g, k)
        sigma, a, b = (0, 0), [(0, 0)] * g, [(0, 0)] * g
        for item in filter(None, (p.strip() for p in text.split(","))):
            key, _, val = item.partition("=")
            key = key.strip()
            try:
                h = h_parse(val.strip(), mode)
            except HGroupError as exc:
                raise RepError(str(exc)) from None
            if not h.is_central():
                raise RepError(f"{val.strip()!r} is not in <q, t>")
            pair = (h.q, h.t)
            if key in ("s", "s1"):
                sigma = pair
            elif key[:1] in ("a", "b") and key[1:].isdigit() and 1 <= int(key[1:]) <= g:
                (a if key[0] == "a" else b)[int(key[1:]) - 1] = pair
            else:
                raise RepError(f"unknown character key {key!r}")
        return cls(g, sigma, tuple(a), tuple(b), k)

    @property
    def mode(self) -> RingMode:
        return RingMode.for_k(self.g, self.k)

    def pair(self, gen: Gen) -> Tuple[int, int]:
        fam = gen.unbar().family if gen.barred else gen.family
        if fam == "s":
            return self.sigma
        if fam in ("a", "b"):
            return (self.a if fam == "a" else self.b)[gen.index - 1]
        raise RepError(f"{gen} is not a braid generator")

    def exponents(self, w: Word) -> Tuple[int, int]:
        qe = te = 0
        for gen, e in w.letters:
            p = self.pair(gen)
            qe += e * p[0]
            te += e * p[1]
        return qe, te

    def value(self, w) -> HElem:
        if isinstance(w, str):
            w = Word.parse(w)
        qe, te = self.exponents(w)
        h = self.mode.gen("q", qe)
        return h * self.mode.gen("t", te) if te else h

    def violations(self, n: int) -> List[Relation]:
        """Relations of B_{0,n} whose two sides get different values."""
        return [rel for rel in relations(self.g, n)
                if self.exponents(rel.lhs) != self.exponents(rel.rhs)]

    def validate(self, n: int) -> "Character":
        bad = self.violations(n)
        if bad:
            raise RepError("character violates " + "; ".join(str(r) for r in bad[:3]))
        return self


def twist(character: Character, m: RepMatrix, w, n: Optional[int] = None) -> RepMatrix:
    """``chi(w) * m``.  With ``n`` given, the character is validated first."""
    if n is not None:
        character.validate(n)
    return m.lmul(character.value(w))


# ---------------------------------------------------------------------------
# relation verification
# ---------------------------------------------------------------------------

@dataclass
class RelationCheck:
    relation: Relation
    passed: bool
    difference: Optional[Tuple] = None

    def to_json_obj(self):
        obj = {"label": self.relation.label, "lhs": str(self.relation.lhs),
               "rhs": str(self.relation.rhs), "passed": self.passed}
        if self.difference is not None:
            obj["first_difference"] = [str(x) for x in self.difference]
        return obj


@dataclass
class RelationReport:
    checks: List[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def __len__(self):
        return len(self.checks)

    def to_json_obj(self):
        return {"ok": self.ok, "total": len(self.checks),
                "failed": len(self.failures),
                "relations": [c.to_json_obj() for c in self.checks]}


def _compare(a, b):
    if isinstance(a, RepMatrix):
        if a.shape != b.shape or a.rows != b.rows or a.cols != b.cols:
            return False, ("shape", a.shape, b.shape)
        d = a.first_difference(b)
        return d is None, d
    return a == b, (None if a == b else (a, b))


def verify_relations(g: int, n: int, evaluator: Callable, k: int = 1,
                     kind: Kind = Kind.B0N_SURFACE, workers: int = 1) -> RelationReport:
    """Evaluate both sides of every relation and compare exactly.

    ``evaluator`` maps a Word to anything with exact equality (a RepMatrix,
    HElem or FreeAuto).  With ``workers > 1`` relations are checked in a
    thread pool; the report order is the presentation order either way.
    """
    rels = relations(g, n, k, kind)

    def one(rel):
        ok, diff = _compare(evaluator(rel.lhs), evaluator(rel.rhs))
        return RelationCheck(rel, ok, diff)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(one, rels))
    else:
        checks = [one(rel) for rel in rels]
    return RelationReport(checks)
