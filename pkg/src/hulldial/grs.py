"""Hermitian self-orthogonal generalized Reed-Solomon codes.

A GRS code is fixed by distinct evaluation points, nonzero column
multipliers and a dimension; an extended code appends an extra column
carrying the top polynomial coefficient.  The full-field code with unit
multipliers is self-orthogonal outright for k <= q - 1.  For every other
evaluation set the forge solves for multipliers: the code is Hermitian
self-orthogonal iff sum_l v_l^(q+1) a_l^(i+jq) = 0 for all 0 <= i, j < k,
which after substituting w_l = v_l^(q+1) (a nonzero subfield value) and
splitting each GF(q^2) equation into two GF(q) component equations becomes
a linear system over GF(q).  The solver scans the null space of that
system for a vector with every entry nonzero, exhaustively when the space
is small (so "no solution" is a proof), otherwise with a deterministic
prefix scan followed by seeded random sampling (so the failure mode is
"not found within budget", never a nonexistence claim).

Every constructed code is re-verified self-orthogonal before it is
returned; no construction is trusted.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BadDimensionError,
    BadFamilyParamsError,
    DuplicateEvalPointsError,
    NotADivisorError,
    ShapeMismatchError,
    TooLargeToEnumerateError,
    VerificationFailedError,
    ZeroMultiplierError,
)
from .field import Field
from .code import LinearCode, is_hermitian_self_orthogonal, is_mds
from .matrix import FieldMatrix, null_space

DEFAULT_SEED = 1

#: Null spaces with at most this many coefficient vectors are scanned
#: exhaustively, making a "no solution" outcome sound.
EXHAUSTIVE_SCAN_LIMIT = 6 * 10**5

#: Deterministic prefix scanned before random sampling on large spaces.
PREFIX_SCAN_BUDGET = 10**5

#: Seeded random attempts after the prefix scan.
RANDOM_BUDGET = 10**5

_CHUNK = 4096

STATUS_FOUND = "found"
STATUS_NO_SOLUTION = "no-solution"
STATUS_NOT_FOUND = "not-found-within-budget"


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points, column multipliers and dimension of a GRS code.

    ``multipliers`` has one entry per evaluation point, plus a final entry
    for the extension column when ``extended`` is set.
    """

    field: Field
    eval_points: tuple[int, ...]
    multipliers: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self):
        pts = tuple(int(a) for a in self.eval_points)
        mults = tuple(int(v) for v in self.multipliers)
        object.__setattr__(self, "eval_points", pts)
        object.__setattr__(self, "multipliers", mults)
        for a in pts:
            self.field._check(a)
        if len(set(pts)) != len(pts):
            raise DuplicateEvalPointsError("evaluation points must be pairwise distinct")
        if len(mults) != len(pts) + (1 if self.extended else 0):
            raise ShapeMismatchError(
                f"expected {len(pts) + (1 if self.extended else 0)} multipliers, got {len(mults)}"
            )
        for v in mults:
            self.field._check(v)
            if v == 0:
                raise ZeroMultiplierError("multipliers must be nonzero")
        if not 1 <= self.k <= self.length:
            raise BadDimensionError(f"k = {self.k} outside [1, {self.length}]")

    @property
    def n_points(self) -> int:
        return len(self.eval_points)

    @property
    def length(self) -> int:
        return len(self.eval_points) + (1 if self.extended else 0)

    def code(self) -> LinearCode:
        return grs_generator(self)

    def to_dict(self) -> dict:
        f = self.field
        return {
            "eval_points": [list(f.coeffs(a)) for a in self.eval_points],
            "multipliers": [list(f.coeffs(v)) for v in self.multipliers],
            "k": self.k,
            "extended": self.extended,
        }

    @classmethod
    def from_dict(cls, field: Field, d: dict) -> "GrsSpec":
        return cls(
            field=field,
            eval_points=tuple(field.element(c) for c in d["eval_points"]),
            multipliers=tuple(field.element(c) for c in d["multipliers"]),
            k=int(d["k"]),
            extended=bool(d["extended"]),
        )


def grs_generator(spec: GrsSpec) -> LinearCode:
    """The k x N generator: row i, column l is v_l * a_l^i (0^0 = 1).

    The extension column, when present, is zero except for v_inf in the
    last row, so it carries the degree-(k-1) coefficient.
    """
    f = spec.field
    rows = []
    for i in range(spec.k):
        row = [f.mul(v, f.pow(a, i)) for v, a in zip(spec.multipliers, spec.eval_points)]
        if spec.extended:
            row.append(spec.multipliers[-1] if i == spec.k - 1 else 0)
        rows.append(row)
    return LinearCode(f, rows)


def full_field_rs(field: Field, k: int) -> GrsSpec:
    """Unit-multiplier RS code on all q^2 points; self-orthogonal for k <= q-1."""
    q = field.subfield_order
    if not 1 <= k <= q - 1:
        raise BadDimensionError(f"full-field construction needs 1 <= k <= q-1 = {q - 1}")
    spec = GrsSpec(
        field=field,
        eval_points=tuple(field.elements()),
        multipliers=(1,) * field.order,
        k=k,
        extended=False,
    )
    if not is_hermitian_self_orthogonal(spec.code()):
        raise VerificationFailedError(
            "full-field code failed the self-orthogonality check"
        )  # pragma: no cover
    return spec


# ---------------------------------------------------------------------------
# evaluation sets
# ---------------------------------------------------------------------------


def eval_poly(field: Field, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(list(coeffs)):
        acc = field.add(field.mul(acc, x), int(c))
    return acc


def trace_nonzero_eval_set(field: Field, g: Sequence[int]) -> tuple[int, ...]:
    """Points x of GF(q^2) where g(x) + g(x)^q is nonzero.

    Any polynomial g of degree at most (q - k)q - 1 whose pointwise
    g + g^q vanishes on exactly q^2 - n points certifies that an
    [n, k] Hermitian self-orthogonal MDS code exists on the complement.
    The zero polynomial yields an empty set (returned with a warning).
    """
    q = field.subfield_order
    points = []
    for x in field.elements():
        gx = eval_poly(field, g, x)
        if field.add(gx, field.pow(gx, q)) != 0:
            points.append(x)
    if not points:
        warnings.warn("g + g^q vanishes everywhere; evaluation set is empty", stacklevel=2)
    return tuple(points)


def norm_substituted_polys(field: Field, max_f_degree: int) -> Iterator[tuple[int, ...]]:
    """All g(x) = f(x^(q+1)) with deg f <= max_f_degree, f over GF(q^2).

    These are the standard shapes whose trace zero sets are unions of norm
    fibers; enumerated in canonical coefficient order.
    """
    q = field.subfield_order
    for deg in range(max_f_degree + 1):
        for f_coeffs in itertools.product(field.elements(), repeat=deg + 1):
            if deg > 0 and f_coeffs[-1] == 0:
                continue
            g = [0] * ((q + 1) * deg + 1)
            for j, c in enumerate(f_coeffs):
                g[(q + 1) * j] = c
            yield tuple(g)


def subgroup_eval_set(field: Field, m: int, cosets: Iterable[int] = (0,)) -> tuple[int, ...]:
    """Union of cosets of the index-m subgroup of the multiplicative group.

    Coset j is g^j * H where g generates GF(q^2)* and H = {g^(m t)}; the
    default is the subgroup itself, of size (q^2 - 1)/m.  Points come back
    sorted in canonical element order.
    """
    o = field.order - 1
    if m < 1 or o % m != 0:
        raise NotADivisorError(f"m = {m} does not divide the group order {o}")
    g = field.primitive_element()
    gm = field.pow(g, m)
    size = o // m
    subgroup = []
    x = 1
    for _ in range(size):
        subgroup.append(x)
        x = field.mul(x, gm)
    points: set[int] = set()
    for j in set(int(j) % m for j in cosets):
        shift = field.pow(g, j)
        points.update(field.mul(shift, s) for s in subgroup)
    return tuple(sorted(points))


def subgroup_union_eval_set(field: Field, m1: int, m2: int) -> tuple[int, ...]:
    """Union of the index-m1 and index-m2 subgroups, canonically sorted.

    For coprime m1, m2 the size is (q^2-1)/m1 + (q^2-1)/m2 - (q^2-1)/(m1 m2).
    """
    a = set(subgroup_eval_set(field, m1))
    b = set(subgroup_eval_set(field, m2))
    return tuple(sorted(a | b))


# ---------------------------------------------------------------------------
# the multiplier solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplierProblem:
    """Find multipliers making GRS_k(eval_points) Hermitian self-orthogonal."""

    field: Field
    eval_points: tuple[int, ...]
    k: int
    extended: bool = False


@dataclass(frozen=True)
class MultiplierSearch:
    """Solver outcome: a verified GrsSpec, a sound nonexistence, or a budget miss."""

    status: str
    grs: GrsSpec | None
    null_dim: int
    attempts: int

    @property
    def found(self) -> bool:
        return self.status == STATUS_FOUND


def _orthogonality_system(problem: MultiplierProblem) -> FieldMatrix:
    """The GF(q)-linear system on w_l = v_l^(q+1), two rows per (i, j) pair.

    Each GF(q^2) equation sum_l w_l a_l^(i+jq) = 0 splits along the basis
    {1, x} into two subfield-coefficient equations.  The extension column
    adds an unknown w_inf appearing only in the (k-1, k-1) equation.
    """
    f = problem.field
    q = f.subfield_order
    pts = problem.eval_points
    ncols = len(pts) + (1 if problem.extended else 0)
    rows = []
    for i in range(problem.k):
        for j in range(problem.k):
            row0, row1 = [], []
            for a in pts:
                z0, z1 = f.subfield_coordinates(f.pow(a, i + j * q))
                row0.append(z0)
                row1.append(z1)
            if problem.extended:
                is_last = i == problem.k - 1 and j == problem.k - 1
                row0.append(1 if is_last else 0)
                row1.append(0)
            rows.append(row0)
            rows.append(row1)
    return FieldMatrix(f, np.array(rows, dtype=np.int64).reshape(-1, ncols))


def _all_nonzero_combination(
    field: Field, basis: np.ndarray, seed: int
) -> tuple[np.ndarray | None, int, bool]:
    """Search GF(q)-combinations of basis rows for an all-nonzero vector.

    Returns (vector or None, attempts, exhausted): ``exhausted`` means every
    nonzero coefficient vector was tried, so None is a proof of absence.
    """
    nu, ncols = basis.shape
    q_sub = field.subfield_order
    subfield_els = np.array(
        [a for a in field.elements() if field.in_subfield(a)], dtype=np.int64
    )
    assert len(subfield_els) == q_sub

    def scan(indices: np.ndarray) -> np.ndarray | None:
        digits = np.empty((len(indices), nu), dtype=np.int64)
        rem = indices.copy()
        for t in range(nu):
            rem, digits[:, t] = np.divmod(rem, q_sub)
        coeff = subfield_els[digits]
        w = np.zeros((len(indices), ncols), dtype=np.int64)
        for t in range(nu):
            w = field.add_array(w, field.mul_array(coeff[:, t][:, None], basis[t][None, :]))
        hits = np.nonzero(np.all(w != 0, axis=1))[0]
        return w[hits[0]] if hits.size else None

    total = q_sub**nu
    attempts = 0
    if total <= EXHAUSTIVE_SCAN_LIMIT:
        for start in range(1, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            attempts += len(idx)
            hit = scan(idx)
            if hit is not None:
                return hit, attempts, True
        return None, attempts, True
    prefix = min(PREFIX_SCAN_BUDGET, total - 1)
    for start in range(1, prefix + 1, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, prefix + 1), dtype=np.int64)
        attempts += len(idx)
        hit = scan(idx)
        if hit is not None:
            return hit, attempts, False
    rng = np.random.default_rng(seed)
    remaining = RANDOM_BUDGET
    while remaining > 0:
        take = min(_CHUNK, remaining)
        digits = rng.integers(0, q_sub, size=(take, nu))
        keep = np.any(digits != 0, axis=1)
        digits = digits[keep]
        attempts += take
        remaining -= take
        if digits.size == 0:
            continue
        coeff = subfield_els[digits]
        w = np.zeros((digits.shape[0], ncols), dtype=np.int64)
        for t in range(nu):
            w = field.add_array(w, field.mul_array(coeff[:, t][:, None], basis[t][None, :]))
        hits = np.nonzero(np.all(w != 0, axis=1))[0]
        if hits.size:
            return w[hits[0]], attempts, False
    return None, attempts, False


def solve_multipliers(problem: MultiplierProblem, seed: int = DEFAULT_SEED) -> MultiplierSearch:
    """Search for multipliers making the GRS code Hermitian self-orthogonal.

    The subfield-valued unknowns w_l are found in the null space of the
    orthogonality system; each is then lifted to v_l through a norm
    preimage.  The returned code is always re-verified.
    """
    f = problem.field
    pts = tuple(int(a) for a in problem.eval_points)
    if len(set(pts)) != len(pts):
        raise DuplicateEvalPointsError("evaluation points must be pairwise distinct")
    if problem.k < 1:
        raise BadDimensionError("k must be at least 1")
    system = _orthogonality_system(problem)
    basis = null_space(system)
    if not all(f.in_subfield(int(x)) for x in basis.data.reshape(-1)):
        raise VerificationFailedError("null-space basis left the subfield")  # pragma: no cover
    nu = basis.rows
    if nu == 0:
        return MultiplierSearch(STATUS_NO_SOLUTION, None, 0, 0)
    w, attempts, exhausted = _all_nonzero_combination(f, basis.data, seed)
    if w is None:
        status = STATUS_NO_SOLUTION if exhausted else STATUS_NOT_FOUND
        return MultiplierSearch(status, None, nu, attempts)
    mults = tuple(f.norm_preimage(int(x)) for x in w)
    for v, want in zip(mults, w):
        if f.norm(v) != int(want):
            raise VerificationFailedError("norm preimage lift failed")  # pragma: no cover
    spec = GrsSpec(
        field=f, eval_points=pts, multipliers=mults, k=problem.k, extended=problem.extended
    )
    if not is_hermitian_self_orthogonal(spec.code()):
        raise VerificationFailedError(
            "solver output failed the self-orthogonality re-check"
        )  # pragma: no cover
    return MultiplierSearch(STATUS_FOUND, spec, nu, attempts)


# ---------------------------------------------------------------------------
# family driver
# ---------------------------------------------------------------------------

FAMILIES = (
    "full-field",
    "q2plus1",
    "trace-poly",
    "subgroup",
    "two-subgroup",
    "even-subgroup",
)


def construct_family(
    field: Field,
    family: str,
    *,
    k: int,
    m: int | None = None,
    m1: int | None = None,
    m2: int | None = None,
    g: Sequence[int] | None = None,
    seed: int = DEFAULT_SEED,
    verify_mds: bool = True,
) -> MultiplierSearch:
    """Build the evaluation set for a named family and run the solver.

    Family parameters are validated against the family's constraints
    before any search starts.  A found code is re-verified Hermitian
    self-orthogonal always, and MDS whenever enumeration is feasible.
    """
    q = field.subfield_order
    if k < 1:
        raise BadFamilyParamsError("k must be at least 1")
    if family == "full-field":
        spec = full_field_rs(field, k)
        result = MultiplierSearch(STATUS_FOUND, spec, 0, 0)
    elif family == "q2plus1":
        if k > q or k == q - 1:
            raise BadFamilyParamsError(f"needs 1 <= k <= q = {q} and k != q-1")
        problem = MultiplierProblem(field, tuple(field.elements()), k, extended=True)
        result = solve_multipliers(problem, seed)
    elif family == "trace-poly":
        if g is None:
            raise BadFamilyParamsError("trace-poly needs the polynomial g")
        if k > q - 1:
            raise BadFamilyParamsError(f"needs k <= q-1 = {q - 1}")
        deg = len([c for c in g]) - 1
        while deg >= 0 and int(g[deg]) == 0:
            deg -= 1
        if deg > (q - k) * q - 1:
            raise BadFamilyParamsError(f"deg g = {deg} exceeds (q-k)q-1 = {(q - k) * q - 1}")
        pts = trace_nonzero_eval_set(field, g)
        if len(pts) < max(k, 1):
            raise BadFamilyParamsError("evaluation set smaller than k")
        result = solve_multipliers(MultiplierProblem(field, pts, k), seed)
    elif family == "subgroup":
        if m is None:
            raise BadFamilyParamsError("subgroup family needs m")
        if m % 2 == 0 or (q + 1) % m != 0:
            raise BadFamilyParamsError(f"m = {m} must be an odd divisor of q+1 = {q + 1}")
        k0 = (m - 1) // 2
        if not k * m < (k0 + 1) * (q - 1):
            raise BadFamilyParamsError(
                f"dimension w = {k} violates w < (k0+1)(q-1)/m with k0 = {k0}"
            )
        pts = subgroup_eval_set(field, m)
        result = solve_multipliers(MultiplierProblem(field, pts, k), seed)
    elif family == "two-subgroup":
        if m1 is None or m2 is None:
            raise BadFamilyParamsError("two-subgroup family needs m1 and m2")
        if m1 % 2 == 0 or m2 % 2 == 0:
            raise BadFamilyParamsError("m1, m2 must be odd")
        if (q + 1) % m1 != 0 or (q + 1) % m2 != 0:
            raise BadFamilyParamsError(f"m1, m2 must divide q+1 = {q + 1}")
        if math.gcd(m1, m2) != 1:
            raise BadFamilyParamsError("m1 and m2 must be coprime")
        if 2 * k > q - 1:
            raise BadFamilyParamsError(f"needs k <= (q-1)/2 = {(q - 1) / 2:g}")
        pts = subgroup_union_eval_set(field, m1, m2)
        result = solve_multipliers(MultiplierProblem(field, pts, k), seed)
    elif family == "even-subgroup":
        if m is None:
            raise BadFamilyParamsError("even-subgroup family needs m")
        if q % 2 == 0 or m % 2 != 0 or m < 6 or (q - 1) % m != 0:
            raise BadFamilyParamsError(
                f"m = {m} must be an even divisor >= 6 of q-1 = {q - 1} with q odd"
            )
        big_h = ((q - 1) & -(q - 1)).bit_length() - 1  # 2-adic valuation of q-1
        h1 = (m & -m).bit_length() - 1
        a = (q - 1) >> big_h
        a1 = m >> h1
        bound = (q + 1) // 2 + 2 ** (big_h - h1) * (a // a1) - 1
        if k > bound:
            raise BadFamilyParamsError(f"needs k <= {bound}")
        pts = subgroup_eval_set(field, m)
        result = solve_multipliers(MultiplierProblem(field, pts, k), seed)
    else:
        raise BadFamilyParamsError(f"unknown family {family!r}; choose from {FAMILIES}")

    if result.found and verify_mds:
        try:
            if not is_mds(result.grs.code()):
                raise VerificationFailedError("family output is not MDS")  # pragma: no cover
        except TooLargeToEnumerateError:
            pass
    return result
