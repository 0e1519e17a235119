"""
Dense matrices over Z[H] with labelled rows and columns.

Entries are :class:`~surfbraid.hgroup.RingElem`; products keep the left
matrix's entries on the left.  Inversion works by Gauss-Jordan elimination
with unit pivots (the units of Z[H] are the signed monomials).

Representation matrices use the "columns are images" convention for a left
Z[H]-module: column j lists the coordinates of the image of basis vector j,
and a coefficient vector ``x`` is sent to ``x'_i = sum_j x_j M[i, j]`` with
scalars on the left.  Composing such maps is *not* the ordinary matrix
product once entries stop commuting.  Doing ``A`` first and then ``B`` gives::

    compose(A, B)[i, j] = sum_k A[k, j] * B[i, k]

which is ``mat_mul(B, A)`` computed in the opposite ring; see
:func:`compose` and :func:`compose_inverse`.
"""

from __future__ import annotations

import json
from typing import Callable, List, Sequence

from .hgroup import HElem, RingElem, RingMode, h_format

__all__ = ["RepMatrix", "MatrixError", "NotInvertible", "mat_mul", "mat_eq",
           "mat_identity", "mat_inverse", "compose", "compose_inverse"]


class MatrixError(ValueError):
    """Shape or mode mismatch."""


class NotInvertible(ArithmeticError):
    """No unit pivot was found; the matrix may still be invertible."""


class RepMatrix:
    """A rectangular matrix over Z[H]."""

    __slots__ = ("mode", "rows", "cols", "entries")

    def __init__(self, mode: RingMode, rows: Sequence[str], cols: Sequence[str],
                 entries: Sequence[Sequence[RingElem]]):
        self.mode = mode
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = [list(r) for r in entries]
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise MatrixError("entry grid does not match the labels")
        for row in self.entries:
            for x in row:
                if x.mode != mode:
                    raise MatrixError("entry mode differs from matrix mode")

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, mode, rows, cols=None):
        cols = rows if cols is None else cols
        z = RingElem.zero(mode)
        return cls(mode, rows, cols, [[z] * len(cols) for _ in rows])

    @classmethod
    def identity(cls, mode, labels):
        m = cls.zeros(mode, labels)
        one = RingElem.one(mode)
        for i in range(len(labels)):
            m.entries[i][i] = one
        return m

    @classmethod
    def diagonal(cls, mode, labels, values):
        m = cls.zeros(mode, labels)
        for i, v in enumerate(values):
            m.entries[i][i] = _as_ring(mode, v)
        return m

    def copy(self) -> "RepMatrix":
        return RepMatrix(self.mode, self.rows, self.cols, self.entries)

    # access ---------------------------------------------------------------
    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if isinstance(i, str):
            i = self.rows.index(i)
        if isinstance(j, str):
            j = self.cols.index(j)
        return self.entries[i][j]

    def block(self, rows: Sequence[str], cols: Sequence[str]) -> "RepMatrix":
        ri = [self.rows.index(r) for r in rows]
        ci = [self.cols.index(c) for c in cols]
        return RepMatrix(self.mode, rows, cols, [[self.entries[i][j] for j in ci] for i in ri])

    def column(self, label: str) -> List[RingElem]:
        j = self.cols.index(label)
        return [row[j] for row in self.entries]

    def transpose(self) -> "RepMatrix":
        return RepMatrix(self.mode, self.cols, self.rows,
                         [list(col) for col in zip(*self.entries)])

    def map_entries(self, fn: Callable[[RingElem], RingElem]) -> "RepMatrix":
        return RepMatrix(self.mode, self.rows, self.cols,
                         [[fn(x) for x in row] for row in self.entries])

    # arithmetic -------------------------------------------------------------
    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        self._check_same_shape(other)
        return RepMatrix(self.mode, self.rows, self.cols,
                         [[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return RepMatrix(self.mode, self.rows, self.cols,
                         [[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def lmul(self, scalar) -> "RepMatrix":
        """``scalar * self`` with the scalar on the left of every entry."""
        s = _as_ring(self.mode, scalar)
        return self.map_entries(lambda x: s * x)

    def rmul(self, scalar) -> "RepMatrix":
        s = _as_ring(self.mode, scalar)
        return self.map_entries(lambda x: x * s)

    def inverse(self) -> "RepMatrix":
        return mat_inverse(self)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(x.is_one() if i == j else x.is_zero()
                   for i, row in enumerate(self.entries) for j, x in enumerate(row))

    def _check_same_shape(self, other):
        if self.mode != other.mode:
            raise MatrixError("mode mismatch")
        if self.rows != other.rows or self.cols != other.cols:
            raise MatrixError(f"shape mismatch {self.shape} vs {other.shape}")

    def first_difference(self, other):
        """``(row, col, mine, theirs)`` of the first differing entry, or None."""
        self._check_same_shape(other)
        for i, (r, s) in enumerate(zip(self.entries, other.entries)):
            for j, (x, y) in enumerate(zip(r, s)):
                if x != y:
                    return self.rows[i], self.cols[j], x, y
        return None

    def __eq__(self, other):
        return isinstance(other, RepMatrix) and mat_eq(self, other)

    __hash__ = None

    # output -------------------------------------------------------------
    def pretty(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = [max([len(c)] + [len(r[j]) for r in cells]) for j, c in enumerate(self.cols)]
        lw = max((len(r) for r in self.rows), default=0)
        lines = [" " * (lw + 2) + "  ".join(c.rjust(w) for c, w in zip(self.cols, width))]
        for label, row in zip(self.rows, cells):
            lines.append(f"{label.rjust(lw)} [" + "  ".join(x.rjust(w) for x, w in zip(row, width)) + "]")
        return "\n".join(lines)

    __str__ = pretty

    def __repr__(self):
        return f"RepMatrix({self.shape[0]}x{self.shape[1]}, genus={self.mode.genus})"

    def to_json_obj(self, g: int, n: int, k: int) -> dict:
        if self.rows != self.cols:
            raise MatrixError("JSON export expects a square matrix with one basis")
        return {
            "g": g,
            "n": n,
            "k": k,
            "basis": list(self.rows),
            "entries": [
                [[{"coeff": str(c), "mono": h_format(h)} for h, c in x.items()] for x in row]
                for row in self.entries
            ],
        }

    def to_json(self, g: int, n: int, k: int, **kw) -> str:
        return json.dumps(self.to_json_obj(g, n, k), **kw)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RepMatrix":
        from .hgroup import h_parse

        mode = RingMode.for_k(obj["g"], obj["k"])
        entries = []
        for row in obj["entries"]:
            out_row = []
            for terms in row:
                x = RingElem.zero(mode)
                for term in terms:
                    x = x + RingElem.monomial(h_parse(term["mono"], mode), int(term["coeff"]))
                out_row.append(x)
            entries.append(out_row)
        return cls(mode, obj["basis"], obj["basis"], entries)


def _as_ring(mode, v) -> RingElem:
    if isinstance(v, RingElem):
        return v
    if isinstance(v, HElem):
        return RingElem.monomial(v)
    if isinstance(v, int):
        return RingElem.from_int(mode, v)
    raise TypeError(f"cannot use {v!r} as a ring element")


def mat_identity(mode: RingMode, labels: Sequence[str]) -> RepMatrix:
    return RepMatrix.identity(mode, labels)


def mat_mul(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    if a.mode != b.mode:
        raise MatrixError("mode mismatch")
    if a.cols != b.rows:
        raise MatrixError(f"cannot multiply {a.shape} by {b.shape}")
    zero = RingElem.zero(a.mode)
    bcols = list(zip(*b.entries))
    out = []
    for row in a.entries:
        out_row = []
        for col in bcols:
            acc = zero
            for x, y in zip(row, col):
                if x.terms and y.terms:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return RepMatrix(a.mode, a.rows, b.cols, out)


def mat_eq(a: RepMatrix, b: RepMatrix) -> bool:
    if a.mode != b.mode or a.rows != b.rows or a.cols != b.cols:
        return False
    return all(x == y for r, s in zip(a.entries, b.entries) for x, y in zip(r, s))


def mat_inverse(a: RepMatrix) -> RepMatrix:
    """Two-sided inverse by Gauss-Jordan elimination over Z[H].

    The result is a product of invertible elementary matrices with
    ``X @ a == I``, hence also ``a @ X == I``.
    """
    n, m = a.shape
    if n != m:
        raise MatrixError("only square matrices can be inverted")
    mode = a.mode
    work = [list(r) for r in a.entries]
    inv = [list(r) for r in RepMatrix.identity(mode, a.rows).entries]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            u = work[r][col].unit_monomial()
            if u is not None:
                pivot = (r, u)
                break
        if pivot is None:
            raise NotInvertible(f"no unit pivot in column {a.cols[col]!r}")
        r, (sign, h) = pivot
        work[col], work[r] = work[r], work[col]
        inv[col], inv[r] = inv[r], inv[col]
        scale = RingElem.monomial(h.inverse(), sign)
        work[col] = [scale * x for x in work[col]]
        inv[col] = [scale * x for x in inv[col]]
        for r2 in range(n):
            f = work[r2][col]
            if r2 == col or f.is_zero():
                continue
            work[r2] = [x - f * y for x, y in zip(work[r2], work[col])]
            inv[r2] = [x - f * y for x, y in zip(inv[r2], inv[col])]
    return RepMatrix(mode, a.cols, a.rows, inv)


def compose(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    """Matrix of the left-linear map "first ``a``, then ``b``"."""
    if a.mode != b.mode:
        raise MatrixError("mode mismatch")
    if b.cols != a.rows:
        raise MatrixError(f"cannot compose {a.shape} with {b.shape}")
    zero = RingElem.zero(a.mode)
    acols = list(zip(*a.entries))
    out = []
    for brow in b.entries:
        out_row = []
        for acol in acols:
            acc = zero
            for x, y in zip(acol, brow):
                if x.terms and y.terms:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return RepMatrix(a.mode, b.rows, a.cols, out)


def compose_inverse(a: RepMatrix) -> RepMatrix:
    """Inverse of ``a`` with respect to :func:`compose`."""
    return mat_inverse(a.transpose()).transpose()
