"""Exact arithmetic in GF(p^e).

Elements are represented as integers in [0, p^e): the integer's base-p
digits, least significant first, are the coefficients of the polynomial
representative (constant term first).  This encoding is lossless and
canonical, so equality of integers is equality of elements, and the
integer order 0, 1, 2, ... is the canonical enumeration order used by
every "first qualifying element" rule in the toolkit.

Arithmetic is polynomial arithmetic modulo a monic irreducible modulus.
For fields up to ``TABLE_LIMIT`` elements the field builds dense add/mul
lookup tables (derived from the same polynomial arithmetic), which both
the scalar fast path and the matrix layer's vectorised numpy operations
use.  Results are identical either way.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapExceededError,
    NoSuchElementError,
    NotPrimeError,
    OddExtensionError,
    SpecMismatchError,
)

#: Largest field order the toolkit will construct.
FIELD_ORDER_CAP = 2**20

#: Largest field order for which dense lookup tables are built.
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (fine below the cap)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division, as {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Coefficient tuples, constant term first,
# no trailing zeros; the zero polynomial is ().
# ---------------------------------------------------------------------------


def _ptrim(a: Iterable[int]) -> tuple[int, ...]:
    a = tuple(a)
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim(
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)
    )


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    """Remainder of a modulo the polynomial f (any nonzero leading coeff)."""
    a = [x % p for x in a]
    f = _ptrim(x % p for x in f)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while True:
        a = list(_ptrim(a))
        if not a or len(a) - 1 < df:
            break
        shift = len(a) - 1 - df
        factor = (a[-1] * inv_lead) % p
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - factor * fi) % p
    return _ptrim(a)


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(base, exponent, f, p):
    result = (1,)
    base = _pmod(base, f, p)
    while exponent > 0:
        if exponent & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        exponent >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(x % p for x in a), _ptrim(x % p for x in b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = _ptrim((x * inv_lead) % p for x in a)
    return a


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    f = _ptrim(c % p for c in coeffs)
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    x = (0, 1)
    minus_x = (0, p - 1)
    # x^(p^e) must equal x mod f
    if _padd(_ppowmod(x, p**e, f, p), minus_x, p) != ():
        return False
    for r in factorize(e):
        d = e // r
        g = _padd(_ppowmod(x, p**d, f, p), minus_x, p)  # x^(p^d) - x
        if _pgcd(g, f, p) != (1,):
            return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible degree-e polynomial.

    Candidates are compared by their coefficient sequences, constant term
    first.  Returns e+1 coefficients, constant term first.
    """
    for low in itertools.product(range(p), repeat=e):
        cand = low + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise NoSuchElementError(
        f"no irreducible polynomial of degree {e} over GF({p})"
    )  # pragma: no cover


# ---------------------------------------------------------------------------
# The field itself
# ---------------------------------------------------------------------------


class Field:
    """The finite field GF(p^e) with a fixed monic irreducible modulus.

    Parameters
    ----------
    p:
        Prime characteristic.
    e:
        Extension degree, at least 1.
    modulus:
        Optional e+1 coefficients of the modulus, constant term first.
        Defaults to the lexicographically smallest monic irreducible
        polynomial, which is deterministic for a given (p, e).

    Instances are immutable and safe to share between threads.  Elements
    are plain ints in [0, p^e).
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrimeError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        order = p**e
        if order > FIELD_ORDER_CAP:
            raise CapExceededError(f"p^e = {order} exceeds the cap {FIELD_ORDER_CAP}")
        if modulus is None:
            modulus = smallest_irreducible(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e, constant term first")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.order = order
        self.modulus = modulus
        self._tables: dict | None = None
        self._frob_arrays: dict[int, np.ndarray] = {}
        self._primitive: int | None = None

    # -- identity -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    @property
    def subfield_order(self) -> int:
        """q such that this field is GF(q^2); requires even extension degree."""
        if self.e % 2 != 0:
            raise OddExtensionError(f"GF({self.p}^{self.e}) is not a quadratic extension")
        return self.p ** (self.e // 2)

    # -- element representation -------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, constant term first, length e."""
        self._check(a)
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def element(self, coeffs: Iterable[int]) -> int:
        """Encode a coefficient sequence (constant term first) as an element."""
        coeffs = list(coeffs)
        if len(coeffs) > self.e:
            raise ValueError(f"expected at most {self.e} coefficients, got {len(coeffs)}")
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + (int(c) % self.p)
        return value

    def elements(self) -> range:
        """All field elements in canonical (counting) order."""
        return range(self.order)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF({self.p}^{self.e})")
        return a

    # -- raw (table-free) arithmetic, used during table construction -------------

    def _mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        return self.element(_pmulmod(self.coeffs(a), self.coeffs(b), self.modulus, self.p))

    def _pow_raw(self, a: int, n: int) -> int:
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.order - 1
        result, base = 1, a
        while n:
            if n & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            n >>= 1
        return result

    # -- scalar arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.e == 1:
            return (a + b) % self.p
        if self.has_tables():
            return int(self._ensure_tables()["add"][a, b])
        return self.element(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        self._check(a)
        if self.e == 1:
            return (-a) % self.p
        if self.has_tables():
            return int(self._ensure_tables()["neg"][a])
        return self.element(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.has_tables():
            return int(self._ensure_tables()["mul"][a, b])
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.has_tables():
            return int(self._ensure_tables()["inv"][a])
        return self._pow_raw(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """a**n with the convention 0**0 = 1; negative n inverts a first."""
        self._check(a)
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        if self.has_tables():
            t = self._ensure_tables()
            if self.order == 2:
                return 1
            return int(t["exp"][(int(t["log"][a]) * n) % (self.order - 1)])
        return self._pow_raw(a, n)

    # -- Galois structure -----------------------------------------------------------

    def frobenius(self, a: int, l: int = 1) -> int:
        """The Galois map a -> a^(p^l); l is reduced mod e."""
        l %= self.e
        return self.pow(a, self.p**l)

    def conj(self, a: int) -> int:
        """Conjugation a -> a^q over GF(q^2); requires even extension degree."""
        return self.pow(a, self.subfield_order)

    def norm(self, a: int) -> int:
        """The norm a -> a^(q+1), landing in the subfield GF(q)."""
        w = self.pow(a, self.subfield_order + 1)
        if not self.in_subfield(w):
            raise AssertionError("norm left the subfield")  # pragma: no cover
        return w

    def in_subfield(self, a: int) -> bool:
        """True iff a lies in GF(q), the fixed field of conjugation."""
        return self.conj(a) == a

    def find_power_non_one(self, exponent: int, count: int) -> tuple[int, ...]:
        """First ``count`` nonzero elements x with x**exponent != 1.

        Scans the canonical enumeration order; repeats cyclically if fewer
        than ``count`` distinct elements qualify.  Raises NoSuchElementError
        when no element qualifies at all.
        """
        if count < 1:
            return ()
        found: list[int] = []
        for a in range(1, self.order):
            if self.pow(a, exponent) != 1:
                found.append(a)
                if len(found) == count:
                    return tuple(found)
        if not found:
            raise NoSuchElementError(
                f"every nonzero element of GF({self.p}^{self.e}) has x^{exponent} = 1"
            )
        return tuple(found[i % len(found)] for i in range(count))

    def find_norm_non_one(self, count: int) -> tuple[int, ...]:
        """First ``count`` nonzero elements whose norm differs from 1.

        For GF(4) (q = 2) every nonzero element has norm 1, so
        NoSuchElementError is raised.
        """
        return self.find_power_non_one(self.subfield_order + 1, count)

    def norm_preimage(self, w: int) -> int:
        """First element v in canonical order with v^(q+1) = w.

        ``w`` must be a nonzero subfield element; the norm maps GF(q^2)*
        onto GF(q)*, so a preimage always exists.
        """
        q = self.subfield_order
        self._check(w)
        if w == 0:
            raise ValueError("0 has no norm preimage among nonzero multipliers")
        if not self.in_subfield(w):
            raise ValueError(f"{w} is not in the subfield GF({q})")
        for v in range(1, self.order):
            if self.pow(v, q + 1) == w:
                return v
        raise NoSuchElementError(f"no norm preimage of {w} found")  # pragma: no cover

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group, canonical order."""
        if self._primitive is not None:
            return self._primitive
        o = self.order - 1
        if o == 1:
            self._primitive = 1
            return 1
        prime_divs = list(factorize(o))
        for g in range(2, self.order):
            if all(self._pow_raw(g, o // r) != 1 for r in prime_divs):
                self._primitive = g
                return g
        raise NoSuchElementError("no primitive element found")  # pragma: no cover

    # -- quadratic-extension coordinates ----------------------------------------------

    def extension_generator(self) -> int:
        """The canonical generator x of the field over GF(p), as an element.

        For even e the pair {1, x} is a GF(q)-basis of GF(q^2), because x
        generates the whole field over GF(p) and so cannot lie in GF(q).
        """
        if self.e == 1:
            raise ValueError("prime field has no extension generator")
        return self.element((0, 1))

    def subfield_coordinates(self, z: int) -> tuple[int, int]:
        """Coordinates (z0, z1) of z in the GF(q)-basis {1, x}: z = z0 + z1*x."""
        beta = self.extension_generator()
        denom = self.sub(beta, self.conj(beta))
        z1 = self.div(self.sub(z, self.conj(z)), denom)
        z0 = self.sub(z, self.mul(z1, beta))
        if not (self.in_subfield(z0) and self.in_subfield(z1)):
            raise AssertionError("subfield decomposition failed")  # pragma: no cover
        return z0, z1

    # -- vectorised arithmetic (numpy arrays of element ints) ---------------------------

    def has_tables(self) -> bool:
        return self.order <= TABLE_LIMIT

    def _ensure_tables(self) -> dict:
        if self._tables is None:
            if not self.has_tables():
                raise CapExceededError(
                    f"field order {self.order} exceeds the table limit {TABLE_LIMIT}"
                )
            self._tables = self._build_tables()
        return self._tables

    def _build_tables(self) -> dict:
        q, p, e = self.order, self.p, self.e
        digits = np.empty((q, e), dtype=np.int64)
        vals = np.arange(q, dtype=np.int64)
        for i in range(e):
            vals, digits[:, i] = np.divmod(vals, p)
        weights = p ** np.arange(e, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        g = self.primitive_element()
        exp = np.empty(max(q - 1, 1), dtype=np.int64)
        val = 1
        for i in range(q - 1):
            exp[i] = val
            val = self._mul_raw(val, g)
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1, dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        nz = np.arange(1, q)
        if q > 1:
            mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        inv = np.zeros(q, dtype=np.int64)
        inv[nz] = exp[(-log[nz]) % (q - 1)]
        return {"add": add, "neg": neg, "mul": mul, "inv": inv, "exp": exp, "log": log}

    def add_array(self, a, b) -> np.ndarray:
        return self._ensure_tables()["add"][a, b]

    def mul_array(self, a, b) -> np.ndarray:
        return self._ensure_tables()["mul"][a, b]

    def neg_array(self, a) -> np.ndarray:
        return self._ensure_tables()["neg"][a]

    def inv_array(self, a) -> np.ndarray:
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._ensure_tables()["inv"][a]

    def frobenius_array(self, a, l: int) -> np.ndarray:
        l %= self.e
        if l not in self._frob_arrays:
            self._frob_arrays[l] = np.fromiter(
                (self.frobenius(v, l) for v in range(self.order)),
                dtype=np.int64,
                count=self.order,
            )
        return self._frob_arrays[l][a]

    def conj_array(self, a) -> np.ndarray:
        if self.e % 2 != 0:
            raise OddExtensionError("conjugation needs an even extension degree")
        return self.frobenius_array(a, self.e // 2)

    # -- serialization ---------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "Field":
        return cls(int(d["p"]), int(d["e"]), [int(c) for c in d["modulus"]])


def make_field(p: int, e: int) -> Field:
    """GF(p^e) with the canonical (lexicographically smallest) modulus."""
    return Field(p, e)


def make_quadratic_field(q: int) -> Field:
    """GF(q^2) for a prime power q: the alphabet of Hermitian constructions."""
    fact = factorize(q)
    if len(fact) != 1:
        raise NotPrimeError(f"q = {q} is not a prime power")
    ((p, r),) = fact.items()
    return Field(p, 2 * r)


def ensure_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise SpecMismatchError(f"field mismatch: {a!r} vs {b!r}")
