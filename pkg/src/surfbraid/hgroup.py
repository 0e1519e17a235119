"""
The coefficient group H and its integral group ring Z[H].

H is generated by two central elements ``q``, ``t`` and, for every handle
``r = 1..g``, four generators ``m_r, l_r, M_r, L_r`` (``M``/``L`` are the
barred ``m``/``l``).  All generators commute except::

    [m_r, l_r] = t^2,    [M_r, l_r] = [m_r, L_r] = q

with ``[x, y] = x y x^-1 y^-1``.  When the number of configuration points
is one, ``t`` is killed (``t = 1``).

Every element has a unique normal form::

    q^c t^d  prod_r  m_r^a  l_r^b  M_r^A  L_r^B

which is stored as a flat exponent tuple
``(c, d, a_1, b_1, A_1, B_1, a_2, ...)``.

Typical usage::

    >>> mode = RingMode.for_k(genus=1, k=2)
    >>> m, l = mode.gen("m1"), mode.gen("l1")
    >>> str(m * l * m.inverse() * l.inverse())
    't^2'
    >>> str((RingElem.one(mode) - RingElem.monomial(mode.gen("q"))) * m)
    'm1 - q m1'
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Tuple

__all__ = [
    "KClass",
    "RingMode",
    "HElem",
    "RingElem",
    "HGroupError",
    "h_identity",
    "h_mul",
    "h_inv",
    "h_parse",
    "h_format",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "ring_scalar_mul",
    "collect_naive",
]

Exps = Tuple[int, ...]

# position of each per-handle generator inside its block of four
_HANDLE_NAMES = ("m", "l", "M", "L")


class HGroupError(ValueError):
    """Malformed monomial text, bad index or mixed modes."""


class KClass(enum.Enum):
    K1 = "k1"      # one point: t = 1
    KGE2 = "kge2"  # two or more points: t free and central


@dataclass(frozen=True)
class RingMode:
    """Which H we are in: the genus and whether ``t`` survives."""

    genus: int
    k_class: KClass = KClass.KGE2

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise HGroupError(f"genus must be a non-negative integer, got {self.genus!r}")
        if not isinstance(self.k_class, KClass):
            raise HGroupError(f"bad k_class {self.k_class!r}")

    @classmethod
    def for_k(cls, genus: int, k: int) -> "RingMode":
        if k < 1:
            raise HGroupError(f"k must be >= 1, got {k}")
        return cls(genus, KClass.K1 if k == 1 else KClass.KGE2)

    @property
    def kills_t(self) -> bool:
        return self.k_class is KClass.K1

    @property
    def width(self) -> int:
        return 2 + 4 * self.genus

    def identity(self) -> "HElem":
        return HElem(self, (0,) * self.width)

    def gen(self, name: str, power: int = 1) -> "HElem":
        """The generator called ``name`` (``q``, ``t``, ``m2``, ``L1``, ...)."""
        exps = [0] * self.width
        exps[self.slot(name)] = power
        if self.kills_t:
            exps[1] = 0
        return HElem(self, tuple(exps))

    def slot(self, name: str) -> int:
        if name == "q":
            return 0
        if name == "t":
            if self.kills_t:
                raise HGroupError("t is not available when k = 1")
            return 1
        m = re.fullmatch(r"([mlML])([1-9][0-9]*)", name)
        if m is None:
            raise HGroupError(f"unknown generator name {name!r}")
        r = int(m.group(2))
        if r > self.genus:
            raise HGroupError(f"handle index {r} out of range 1..{self.genus}")
        return 2 + 4 * (r - 1) + _HANDLE_NAMES.index(m.group(1))

    def slot_names(self) -> list:
        names = ["q", "t"]
        for r in range(1, self.genus + 1):
            names.extend(f"{c}{r}" for c in _HANDLE_NAMES)
        return names


# ---------------------------------------------------------------------------
# exponent-tuple kernels (the hot path)
# ---------------------------------------------------------------------------

def _mul_exps(a: Exps, b: Exps, genus: int, kills_t: bool) -> Exps:
    # Moving the right factor's letters left past the left factor's letters:
    #   l m = t^-2 m l,   M l = q l M,   L m = q^-1 m L
    # so x^e y^f picks up the central factor c^(e f) for each such pair.
    c = a[0] + b[0]
    d = a[1] + b[1]
    out = [0, 0]
    for i in range(2, 2 + 4 * genus, 4):
        am, al, aM, aL = a[i], a[i + 1], a[i + 2], a[i + 3]
        bm, bl = b[i], b[i + 1]
        c += aM * bl - aL * bm
        d -= 2 * al * bm
        out.append(am + bm)
        out.append(al + bl)
        out.append(aM + b[i + 2])
        out.append(aL + b[i + 3])
    out[0] = c
    out[1] = 0 if kills_t else d
    return tuple(out)


def _inv_exps(a: Exps, genus: int, kills_t: bool) -> Exps:
    neg = tuple(-x for x in a)
    p = _mul_exps(a, neg, genus, kills_t)  # central
    return (neg[0] - p[0], neg[1] - p[1]) + neg[2:]


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------

class HElem:
    """An element of H stored as its normal-form exponent record."""

    __slots__ = ("mode", "exps", "_hash")

    def __init__(self, mode: RingMode, exps: Iterable[int]):
        exps = tuple(int(x) for x in exps)
        if len(exps) != mode.width:
            raise HGroupError(f"expected {mode.width} exponents, got {len(exps)}")
        if mode.kills_t and exps[1] != 0:
            raise HGroupError("t exponent must be 0 when k = 1")
        self.mode = mode
        self.exps = exps
        self._hash = None

    # exponent accessors -------------------------------------------------
    @property
    def q(self) -> int:
        return self.exps[0]

    @property
    def t(self) -> int:
        return self.exps[1]

    def handle(self, r: int) -> Tuple[int, int, int, int]:
        """Exponents ``(m_r, l_r, M_r, L_r)``."""
        i = 2 + 4 * (r - 1)
        return self.exps[i:i + 4]

    def is_identity(self) -> bool:
        return not any(self.exps)

    def is_central(self) -> bool:
        return not any(self.exps[2:])

    def has_barred(self) -> bool:
        return any(self.exps[i + 2] or self.exps[i + 3] for i in range(2, self.mode.width, 4))

    # group operations ---------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, HElem):
            return h_mul(self, other)
        return NotImplemented

    def inverse(self) -> "HElem":
        return h_inv(self)

    def __pow__(self, n: int) -> "HElem":
        base = self if n >= 0 else self.inverse()
        out = self.mode.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        if not isinstance(other, HElem):
            return NotImplemented
        return self.mode == other.mode and self.exps == other.exps

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mode, self.exps))
        return self._hash

    def __str__(self):
        return h_format(self)

    def __repr__(self):
        return f"HElem({h_format(self)!r})"


def _check_modes(x, y):
    if x.mode != y.mode:
        raise HGroupError(f"mode mismatch: {x.mode} vs {y.mode}")


def h_identity(mode: RingMode) -> HElem:
    return mode.identity()


def h_mul(a: HElem, b: HElem) -> HElem:
    """Normal form of ``a * b``."""
    _check_modes(a, b)
    return HElem(a.mode, _mul_exps(a.exps, b.exps, a.mode.genus, a.mode.kills_t))


def h_inv(a: HElem) -> HElem:
    return HElem(a.mode, _inv_exps(a.exps, a.mode.genus, a.mode.kills_t))


def collect_naive(mode: RingMode, letters: Iterable[Tuple[str, int]]) -> HElem:
    """Collect a word letter by letter with single adjacent swaps.

    ``letters`` is a sequence of ``(name, power)``.  Each power is expanded
    into unit letters which are then bubble sorted into normal-form order;
    every swap of ``y^f x^e`` into ``x^e y^f`` emits the central factor
    given directly by the defining commutators.  This is deliberately slow
    and serves as an independent check on :func:`h_mul`.
    """
    central = [0, 0]
    seq = []
    for name, power in letters:
        slot = mode.slot(name)
        step = 1 if power > 0 else -1
        for _ in range(abs(power)):
            if slot < 2:
                central[slot] += step
            else:
                seq.append((slot, step))

    # (y, x) with y after x in normal-form order -> (central slot, power c)
    # such that y x = z^c x y
    swap = {}
    for i in range(2, mode.width, 4):
        m, l, M, L = i, i + 1, i + 2, i + 3
        swap[(l, m)] = (1, -2)   # l m = t^-2 m l
        swap[(M, l)] = (0, 1)    # M l = q l M
        swap[(L, m)] = (0, -1)   # L m = q^-1 m L

    changed = True
    while changed:
        changed = False
        for j in range(len(seq) - 1):
            (y, f), (x, e) = seq[j], seq[j + 1]
            if y > x:
                rule = swap.get((y, x))
                if rule is not None:
                    central[rule[0]] += rule[1] * e * f
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                changed = True

    exps = [0] * mode.width
    exps[0], exps[1] = central
    for slot, step in seq:
        exps[slot] += step
    if mode.kills_t:
        exps[1] = 0
    return HElem(mode, exps)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_FACTOR = re.compile(r"(q|t|[mlML][1-9][0-9]*)(?:\^([+-]?[0-9]+))?")


def h_format(h: HElem) -> str:
    names = h.mode.slot_names()
    parts = []
    for name, e in zip(names, h.exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def h_parse(text: str, mode: RingMode) -> HElem:
    """Parse a monomial written in canonical order, e.g. ``"q^2 m1 L2^-1"``.

    Factors out of canonical order or repeated are rejected rather than
    normalized, so that parsing and formatting are inverse bijections.
    """
    tokens = text.split()
    if tokens == ["1"]:
        return mode.identity()
    if not tokens:
        raise HGroupError("empty monomial (write '1' for the identity)")
    exps = [0] * mode.width
    last = -1
    for tok in tokens:
        m = _FACTOR.fullmatch(tok)
        if m is None:
            raise HGroupError(f"malformed factor {tok!r}")
        slot = mode.slot(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise HGroupError(f"zero exponent in factor {tok!r}")
        if slot <= last:
            raise HGroupError(f"factor {tok!r} is repeated or out of canonical order")
        last = slot
        exps[slot] = power
    return HElem(mode, exps)


# ---------------------------------------------------------------------------
# group ring
# ---------------------------------------------------------------------------

class RingElem:
    """A finite Z-linear combination of elements of H.

    Terms are kept as ``{exponent tuple: nonzero int}``; coefficients are
    Python ints and never overflow.
    """

    __slots__ = ("mode", "terms", "_hash")

    def __init__(self, mode: RingMode, terms: Mapping[Exps, int] = None):
        self.mode = mode
        self.terms: Dict[Exps, int] = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, mode, terms):
        obj = cls.__new__(cls)
        obj.mode = mode
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, mode: RingMode) -> "RingElem":
        return cls._raw(mode, {})

    @classmethod
    def one(cls, mode: RingMode) -> "RingElem":
        return cls._raw(mode, {(0,) * mode.width: 1})

    @classmethod
    def monomial(cls, h: HElem, coeff: int = 1) -> "RingElem":
        return cls._raw(h.mode, {h.exps: coeff} if coeff else {})

    @classmethod
    def from_int(cls, mode: RingMode, n: int) -> "RingElem":
        return cls._raw(mode, {(0,) * mode.width: n} if n else {})

    @classmethod
    def parse(cls, text: str, mode: RingMode) -> "RingElem":
        """Parse the output of ``str()``, e.g. ``"1 - q"`` or ``"-2 q m1 + t"``."""
        s = text.strip()
        if s == "0":
            return cls.zero(mode)
        if not s:
            raise HGroupError("empty ring element")
        pieces = re.split(r"\s+([+-])\s+", s)
        signs = [1]
        bodies = [pieces[0]]
        for sign, body in zip(pieces[1::2], pieces[2::2]):
            signs.append(1 if sign == "+" else -1)
            bodies.append(body)
        out = cls.zero(mode)
        for sign, body in zip(signs, bodies):
            body = body.strip()
            if body.startswith("-"):
                sign, body = -sign, body[1:]
            m = re.fullmatch(r"([0-9]+)(?:\s+(.*))?", body)
            if m and (m.group(2) is not None or body.isdigit()):
                coeff = int(m.group(1))
                mono = h_parse(m.group(2), mode) if m.group(2) else mode.identity()
            else:
                coeff = 1
                mono = h_parse(body, mode)
            out = out + cls.monomial(mono, sign * coeff)
        return out

    # inspection ---------------------------------------------------------
    def items(self) -> Iterator[Tuple[HElem, int]]:
        for k in sorted(self.terms):
            yield HElem(self.mode, k), self.terms[k]

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * self.mode.width) == 1

    def unit_monomial(self):
        """``(coeff, HElem)`` if this is ``+-h`` for a single h, else None."""
        if len(self.terms) != 1:
            return None
        (k, v), = self.terms.items()
        if v not in (1, -1):
            return None
        return v, HElem(self.mode, k)

    def monomials(self) -> Iterator[HElem]:
        for k in self.terms:
            yield HElem(self.mode, k)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RingElem):
            _check_modes(self, other)
            return other
        if isinstance(other, HElem):
            _check_modes(self, other)
            return RingElem.monomial(other)
        if isinstance(other, int):
            return RingElem.from_int(self.mode, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                del out[k]
        return RingElem._raw(self.mode, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElem._raw(self.mode, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return ring_scalar_mul(other, self)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return ring_scalar_mul(other, self)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_mul(other, self)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElem.from_int(self.mode, other)
        elif isinstance(other, HElem):
            other = RingElem.monomial(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mode, frozenset(self.terms.items())))
        return self._hash

    def map_monomials(self, fn) -> "RingElem":
        """Apply a map H -> H to every monomial (linearly extended)."""
        out = RingElem.zero(self.mode)
        for h, c in self.items():
            out = out + RingElem.monomial(fn(h), c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for i, (h, c) in enumerate(self.items()):
            mono = h_format(h)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if i == 0:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"RingElem({str(self)!r})"


def ring_add(x: RingElem, y: RingElem) -> RingElem:
    _check_modes(x, y)
    return x + y


def ring_neg(x: RingElem) -> RingElem:
    return -x


def ring_scalar_mul(n: int, x: RingElem) -> RingElem:
    if not n:
        return RingElem.zero(x.mode)
    return RingElem._raw(x.mode, {k: n * v for k, v in x.terms.items()})


def ring_mul(x: RingElem, y: RingElem) -> RingElem:
    """Convolution product; monomials of ``x`` multiply on the left."""
    _check_modes(x, y)
    g, kill = x.mode.genus, x.mode.kills_t
    out: Dict[Exps, int] = {}
    for ka, va in x.terms.items():
        for kb, vb in y.terms.items():
            k = _mul_exps(ka, kb, g, kill)
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                del out[k]
    return RingElem._raw(x.mode, out)
