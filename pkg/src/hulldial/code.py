"""Linear codes over GF(p^e): duals, hulls, distances, equivalence maps.

A LinearCode is a full-row-rank generator matrix together with its field.
Codes are stored non-canonically (the generator as given); code equality
is row-space equality, tested by mutual rank checks, because equivalence
transforms deliberately produce different generators for the same code.

Minimum distance is exact or an error: the message space is enumerated in
deterministic chunks, and anything past the enumeration cap raises rather
than estimating.  For duals of low-dimensional codes an exact
column-dependency search is available, which terminates by weight k+1.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BadGaloisIndexError,
    OddExtensionError,
    RankDeficientError,
    ShapeMismatchError,
    TooLargeToEnumerateError,
    ZeroMultiplierError,
)
from .field import Field, ensure_same_field
from .matrix import (
    FieldMatrix,
    frobenius_entrywise,
    intersect_row_spaces,
    matmul,
    null_space,
    permute_columns,
    rank,
    row_space_contains,
    rref,
    same_row_space,
    scale_columns,
    standard_form,
    transpose,
)

#: Default cap on exact codeword enumeration (number of messages).
DEFAULT_ENUM_CAP = 10**7

#: Environment variable overriding the enumeration cap.
ENUM_CAP_ENV = "HULLDIAL_ENUM_CAP"

#: Budget for the column-dependency dual-distance search (subsets examined).
SUPPORT_SEARCH_BUDGET = 2 * 10**6

_CHUNK = 1 << 15


def enumeration_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ENUM_CAP_ENV)
    return int(env) if env else DEFAULT_ENUM_CAP


class LinearCode:
    """An [n, k] linear code over a field, held as a generator matrix.

    The zero code (k = 0) is legal and represented by an empty generator
    with an explicit column count.
    """

    def __init__(self, field: Field, gen, check: bool = True):
        if not isinstance(gen, FieldMatrix):
            gen = FieldMatrix(field, gen)
        ensure_same_field(field, gen.field)
        if check and gen.rows and rank(gen) != gen.rows:
            raise RankDeficientError(
                f"generator has {gen.rows} rows but rank {rank(gen)}"
            )
        self.field = field
        self.gen = gen

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.order}))"

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, FieldMatrix.zeros(field, 0, n))

    @classmethod
    def full(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, FieldMatrix.identity(field, n))

    def same_code(self, other: "LinearCode") -> bool:
        """Row-space equality (the right notion of code equality)."""
        return same_row_space(self.gen, other.gen)

    def contains(self, vec: Sequence[int]) -> bool:
        return row_space_contains(self.gen, vec)

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "n": self.n,
            "k": self.k,
            "generator": self.gen.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LinearCode":
        field = Field.from_dict(d["field"])
        gen = FieldMatrix.from_dict(field, d["generator"])
        code = cls(field, gen)
        if code.n != int(d["n"]) or code.k != int(d["k"]):
            raise ShapeMismatchError("declared [n, k] disagree with the generator")
        return code


@dataclass(frozen=True)
class HullReport:
    """Basis and dimension of the intersection of a code with one of its duals."""

    kind: str  # "euclidean", "hermitian", or "galois"
    l: int | None
    basis: FieldMatrix
    dim: int


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------


def euclidean_dual(c: LinearCode) -> LinearCode:
    """The dual under the standard inner product; dimension n - k."""
    return LinearCode(c.field, null_space(c.gen), check=False)


def hermitian_dual(c: LinearCode) -> LinearCode:
    """The dual under the Hermitian form; equals the entrywise q-th power
    of the Euclidean dual."""
    if c.field.e % 2 != 0:
        raise OddExtensionError("Hermitian dual needs an even extension degree")
    dual_gen = frobenius_entrywise(null_space(c.gen), c.field.e // 2)
    return LinearCode(c.field, dual_gen, check=False)


def galois_dual(c: LinearCode, l: int) -> LinearCode:
    """The dual twisted by a -> a^(p^l); l = 0 is Euclidean, l = e/2 Hermitian."""
    if not 0 <= l <= c.field.e - 1:
        raise BadGaloisIndexError(f"l must be in [0, {c.field.e - 1}], got {l}")
    dual_gen = frobenius_entrywise(null_space(c.gen), l)
    return LinearCode(c.field, dual_gen, check=False)


def dual_of_kind(c: LinearCode, kind: str, l: int | None = None) -> LinearCode:
    if kind == "euclidean":
        return euclidean_dual(c)
    if kind == "hermitian":
        return hermitian_dual(c)
    if kind == "galois":
        if l is None:
            raise BadGaloisIndexError("galois dual needs an index l")
        return galois_dual(c, l)
    raise ValueError(f"unknown dual kind {kind!r}")


def hull(c: LinearCode, kind: str = "hermitian", l: int | None = None) -> HullReport:
    """Intersection of the code with the named dual of itself."""
    dual = dual_of_kind(c, kind, l)
    basis = intersect_row_spaces(c.gen, dual.gen)
    return HullReport(kind=kind, l=(l if kind == "galois" else None), basis=basis, dim=basis.rows)


def gram_matrix(c: LinearCode, l: int | None = None) -> FieldMatrix:
    """G @ sigma(G)^T where sigma raises entries to p^l (default: conjugation)."""
    if l is None:
        if c.field.e % 2 != 0:
            raise OddExtensionError("Hermitian Gram matrix needs an even extension degree")
        l = c.field.e // 2
    return matmul(c.gen, transpose(frobenius_entrywise(c.gen, l)))


def is_hermitian_self_orthogonal(c: LinearCode) -> bool:
    """True iff the Hermitian Gram matrix of the generator vanishes."""
    return not np.any(gram_matrix(c).data)


def is_galois_self_orthogonal(c: LinearCode, l: int) -> bool:
    """True iff the code is contained in its l-Galois dual."""
    if not 0 <= l <= c.field.e - 1:
        raise BadGaloisIndexError(f"l must be in [0, {c.field.e - 1}], got {l}")
    return not np.any(gram_matrix(c, l).data)


# ---------------------------------------------------------------------------
# equivalence maps
# ---------------------------------------------------------------------------


def check_weight_vector(field: Field, v: Sequence[int], n: int) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) != n:
        raise ShapeMismatchError(f"weight vector length {len(v)} != n = {n}")
    for x in v:
        field._check(x)
        if x == 0:
            raise ZeroMultiplierError("weight vector entries must all be nonzero")
    return v


def scale(c: LinearCode, v: Sequence[int]) -> LinearCode:
    """Multiply coordinate j of every codeword by v[j] (all v[j] nonzero)."""
    v = check_weight_vector(c.field, v, c.n)
    return LinearCode(c.field, scale_columns(c.gen, v), check=False)


def permute(c: LinearCode, perm: Sequence[int]) -> LinearCode:
    """Reorder coordinates: new coordinate j is old coordinate perm[j]."""
    return LinearCode(c.field, permute_columns(c.gen, perm), check=False)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for j, pj in enumerate(perm):
        inv[pj] = j
    return tuple(inv)


def weight_vector_inverse_conj(field: Field, v: Sequence[int]) -> tuple[int, ...]:
    """Entrywise v -> v^(-q); conj(inv(x)) and inv(conj(x)) agree."""
    return tuple(field.conj(field.inv(int(x))) for x in v)


def code_standard_form(c: LinearCode) -> tuple[LinearCode, tuple[int, ...]]:
    """Permutation-equivalent code with generator literally (I_k | P)."""
    sf, perm = standard_form(c.gen)
    return LinearCode(c.field, sf, check=False), perm


# ---------------------------------------------------------------------------
# distance
# ---------------------------------------------------------------------------


def _message_chunks(order: int, k: int, total: int) -> Iterator[np.ndarray]:
    """Yield (chunk, k) arrays of base-`order` digit rows for messages 1..total-1."""
    start = 1
    while start < total:
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((stop - start, k), dtype=np.int64)
        for j in range(k):
            idx, digits[:, j] = np.divmod(idx, order)
        yield digits
        start = stop


def min_distance(c: LinearCode, cap: int | None = None) -> int:
    """Exact minimum Hamming weight via message-space enumeration.

    Raises TooLargeToEnumerateError when order^k exceeds the cap; never
    returns an estimate.
    """
    if c.k < 1:
        raise ValueError("the zero code has no nonzero codeword")
    field = c.field
    total = field.order**c.k
    if total > enumeration_cap(cap):
        raise TooLargeToEnumerateError(
            f"{total} codewords exceed the enumeration cap {enumeration_cap(cap)}"
        )
    G = c.gen.data
    best = c.n + 1
    if field.has_tables():
        for digits in _message_chunks(field.order, c.k, total):
            cw = np.zeros((digits.shape[0], c.n), dtype=np.int64)
            for j in range(c.k):
                cw = field.add_array(cw, field.mul_array(digits[:, j][:, None], G[j][None, :]))
            w = int(np.count_nonzero(cw, axis=1).min())
            best = min(best, w)
    else:  # scalar fallback for large fields
        for msg in itertools.product(field.elements(), repeat=c.k):
            if not any(msg):
                continue
            weight = 0
            for col in range(c.n):
                acc = 0
                for j in range(c.k):
                    acc = field.add(acc, field.mul(msg[j], int(G[j, col])))
                if acc:
                    weight += 1
            best = min(best, weight)
    return best


def dual_min_distance(c: LinearCode, cap: int | None = None) -> int:
    """Exact minimum distance of the dual of c (all dual kinds share it).

    Two exact routes: message-space enumeration of the dual, or an
    exhaustive search for the smallest linearly dependent column set of
    the generator (a weight-w dual codeword exists iff some w columns are
    dependent), which is guaranteed to stop by weight k+1.  The cheaper
    feasible route is taken; both are enumeration-exact, never estimates.
    """
    if c.k == c.n:
        raise ValueError("the dual of the full space is the zero code")
    if c.k == 0:
        return 1  # dual is the full space
    field = c.field
    dual_total = field.order ** (c.n - c.k)
    subsets = sum(math.comb(c.n, w) for w in range(1, c.k + 2))
    support_ok = subsets <= SUPPORT_SEARCH_BUDGET
    enum_ok = dual_total <= enumeration_cap(cap)
    if support_ok and (not enum_ok or dual_total > 10**5):
        for w in range(1, c.k + 2):
            for cols in itertools.combinations(range(c.n), w):
                sub = FieldMatrix(field, c.gen.data[:, list(cols)])
                if rank(sub) < w:
                    return w
        raise AssertionError(
            "k+1 columns of a rank-k matrix are always dependent"
        )  # pragma: no cover
    if enum_ok:
        return min_distance(euclidean_dual(c), cap)
    raise TooLargeToEnumerateError(
        f"dual enumeration ({dual_total} messages) and support search "
        f"({subsets} subsets) both exceed their budgets"
    )


def is_mds(c: LinearCode, cap: int | None = None) -> bool:
    """True iff the minimum distance meets the Singleton bound n - k + 1."""
    return min_distance(c, cap) == c.n - c.k + 1


def shorten(c: LinearCode, i: int) -> LinearCode:
    """Codewords vanishing at coordinate i, with that coordinate deleted."""
    if not 0 <= i < c.n:
        raise IndexError(f"coordinate {i} outside [0, {c.n})")
    field = c.field
    col = FieldMatrix(field, c.gen.data[:, i].reshape(1, -1))
    kernel = null_space(col)  # messages whose codeword is 0 at position i
    sub = matmul(kernel, c.gen)
    kept = np.delete(sub.data, i, axis=1)
    reduced, pivots = rref(FieldMatrix(field, kept))
    return LinearCode(field, FieldMatrix(field, reduced.data[: len(pivots)]), check=False)
