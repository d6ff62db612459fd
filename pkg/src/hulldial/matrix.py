"""Dense linear algebra over a Field.

A FieldMatrix wraps a read-only numpy int array of element codes plus the
field they live in.  Row reduction, rank, null spaces, conjugate transpose
and row-space intersection are all exact; pivoting is positional (first
nonzero entry top-to-bottom in the leftmost unscanned column), so every
result is deterministic.  Matrices with zero rows are legal values and
represent the zero subspace.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import (
    BadPermutationError,
    OddExtensionError,
    RankDeficientError,
    ShapeMismatchError,
    VerificationFailedError,
)
from .field import Field, ensure_same_field


class FieldMatrix:
    """Immutable rows x cols matrix of field elements (stored as ints)."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        arr = np.array(data, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(arr.shape if arr.ndim == 2 else (0, 0))
        if arr.ndim != 2:
            raise ShapeMismatchError(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError("matrix entries outside the field's element range")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    # -- construction -----------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, n: int) -> "FieldMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if not rows:
            if cols is None:
                raise ShapeMismatchError("empty matrix needs an explicit column count")
            return cls(field, np.zeros((0, cols), dtype=np.int64))
        return cls(field, rows)

    # -- basics ----------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and np.array_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols} over GF({self.field.order}))"

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return matmul(self, other)

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.data[i])

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def to_dict(self) -> dict:
        coeffs = [list(self.field.coeffs(int(x))) for x in self.data.reshape(-1)]
        return {"rows": self.rows, "cols": self.cols, "entries": coeffs}

    @classmethod
    def from_dict(cls, field: Field, d: dict) -> "FieldMatrix":
        rows, cols = int(d["rows"]), int(d["cols"])
        entries = [field.element(c) for c in d["entries"]]
        if len(entries) != rows * cols:
            raise ShapeMismatchError("entry count does not match rows*cols")
        arr = np.array(entries, dtype=np.int64).reshape(rows, cols)
        return cls(field, arr)


# ---------------------------------------------------------------------------
# elementwise helpers
# ---------------------------------------------------------------------------


def _mul(field: Field, a, b):
    if field.has_tables():
        return field.mul_array(a, b)
    return np.vectorize(field.mul, otypes=[np.int64])(a, b)


def _add(field: Field, a, b):
    if field.has_tables():
        return field.add_array(a, b)
    return np.vectorize(field.add, otypes=[np.int64])(a, b)


def _neg(field: Field, a):
    if field.has_tables():
        return field.neg_array(a)
    return np.vectorize(field.neg, otypes=[np.int64])(a)


def frobenius_entrywise(m: FieldMatrix, l: int) -> FieldMatrix:
    """Apply a -> a^(p^l) to every entry."""
    if m.data.size == 0:
        return m
    if m.field.has_tables():
        return FieldMatrix(m.field, m.field.frobenius_array(m.data, l))
    return FieldMatrix(m.field, np.vectorize(lambda x: m.field.frobenius(int(x), l))(m.data))


def scale_columns(m: FieldMatrix, v: Sequence[int]) -> FieldMatrix:
    """Multiply column j by v[j]."""
    if len(v) != m.cols:
        raise ShapeMismatchError(f"weight vector length {len(v)} != cols {m.cols}")
    if m.rows == 0:
        return m
    vec = np.array(v, dtype=np.int64)
    return FieldMatrix(m.field, _mul(m.field, m.data, vec[None, :]))


def permute_columns(m: FieldMatrix, perm: Sequence[int]) -> FieldMatrix:
    """Column j of the result is column perm[j] of the input."""
    if sorted(perm) != list(range(m.cols)):
        raise BadPermutationError(f"{perm} is not a permutation of 0..{m.cols - 1}")
    return FieldMatrix(m.field, m.data[:, list(perm)])


def vstack(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    ensure_same_field(a.field, b.field)
    if a.cols != b.cols:
        raise ShapeMismatchError(f"column counts differ: {a.cols} vs {b.cols}")
    return FieldMatrix(a.field, np.vstack([a.data, b.data]))


def hstack(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    ensure_same_field(a.field, b.field)
    if a.rows != b.rows:
        raise ShapeMismatchError(f"row counts differ: {a.rows} vs {b.rows}")
    return FieldMatrix(a.field, np.hstack([a.data, b.data]))


# ---------------------------------------------------------------------------
# core operations
# ---------------------------------------------------------------------------


def matmul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Matrix product over the shared field."""
    ensure_same_field(a.field, b.field)
    if a.cols != b.rows:
        raise ShapeMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    field = a.field
    out = np.zeros((a.rows, b.cols), dtype=np.int64)
    for t in range(a.cols):
        out = _add(field, out, _mul(field, a.data[:, t][:, None], b.data[t, :][None, :]))
    return FieldMatrix(field, out)


def transpose(m: FieldMatrix) -> FieldMatrix:
    return FieldMatrix(m.field, m.data.T)


def conj_transpose(m: FieldMatrix) -> FieldMatrix:
    """Transpose with every entry conjugated (a -> a^q)."""
    if m.field.e % 2 != 0:
        raise OddExtensionError("conjugate transpose needs an even extension degree")
    return frobenius_entrywise(transpose(m), m.field.e // 2)


def rref(m: FieldMatrix) -> tuple[FieldMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns.

    Pivot choice is positional: leftmost unscanned column, topmost nonzero
    entry, so the result is unique and bit-reproducible.
    """
    field = m.field
    R = m.data.copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        pivot = int(R[r, c])
        if pivot != 1:
            inv_p = field.inv(pivot)
            R[r] = _mul(field, R[r], np.int64(inv_p))
        col_vals = R[:, c].copy()
        col_vals[r] = 0
        if np.any(col_vals):
            factors = _neg(field, col_vals)
            R = _add(field, R, _mul(field, factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    out = FieldMatrix(field, R)
    return out, tuple(pivots)


def rank(m: FieldMatrix) -> int:
    """Number of pivots of the reduced row echelon form."""
    return len(rref(m)[1])


def null_space(m: FieldMatrix) -> FieldMatrix:
    """Basis (as rows) of {x : m @ x^T = 0}; cols - rank(m) rows."""
    field = m.field
    R, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), m.cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for pr, pc in enumerate(pivots):
            val = int(R.data[pr, fc])
            if val:
                basis[i, pc] = field.neg(val)
    return FieldMatrix(field, basis)


def row_space_contains(m: FieldMatrix, vec: Sequence[int]) -> bool:
    """True iff vec lies in the row space of m."""
    v = FieldMatrix(m.field, np.array(vec, dtype=np.int64).reshape(1, -1))
    if v.cols != m.cols:
        raise ShapeMismatchError("vector length does not match column count")
    return rank(vstack(m, v)) == rank(m)


def same_row_space(a: FieldMatrix, b: FieldMatrix) -> bool:
    """True iff the two row spaces are equal."""
    ensure_same_field(a.field, b.field)
    if a.cols != b.cols:
        return False
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(vstack(a, b)) == ra


def intersect_row_spaces(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Basis of rowspace(a) intersected with rowspace(b).

    Computed as the null space of the stacked dual bases: U and V have
    U cap V = (U0 + V0)^perp where U0, V0 are the Euclidean-orthogonal
    complements.  Every returned row is membership-checked against both
    input row spaces.
    """
    ensure_same_field(a.field, b.field)
    if a.cols != b.cols:
        raise ShapeMismatchError(f"column counts differ: {a.cols} vs {b.cols}")
    stacked = vstack(null_space(a), null_space(b))
    inter = null_space(stacked)
    for i in range(inter.rows):
        row = inter.data[i]
        if not (row_space_contains(a, row) and row_space_contains(b, row)):
            raise VerificationFailedError(
                "row-space intersection produced a vector outside an input space"
            )  # pragma: no cover
    return inter


def standard_form(g: FieldMatrix) -> tuple[FieldMatrix, tuple[int, ...]]:
    """Column-permute a full-row-rank matrix into (I_k | P).

    Returns the permuted matrix and the applied permutation: output column
    j is input column perm[j].  The pivot columns of the reduced echelon
    form (leftmost admissible) are moved to the front in order.
    """
    R, pivots = rref(g)
    if len(pivots) != g.rows:
        raise RankDeficientError(f"matrix has rank {len(pivots)}, expected {g.rows}")
    pivot_set = set(pivots)
    perm = list(pivots) + [c for c in range(g.cols) if c not in pivot_set]
    return FieldMatrix(g.field, R.data[:, perm]), tuple(perm)
