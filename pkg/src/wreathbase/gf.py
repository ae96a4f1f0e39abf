"""Exact arithmetic in finite fields GF(p^e).

An element of GF(p^e) is held as an integer in [0, p^e): its base-p digits
are the coefficients of the polynomial representation, least significant
digit = constant coefficient.  The modulus is the monic irreducible
polynomial of degree e over GF(p) whose coefficient vector, read as a
base-p integer, is smallest, so construction is deterministic: the same
(p, e) always yields the same field.  Prime fields (e = 1) are plain
modular arithmetic.

Fields are immutable after construction and all operations are pure, so
instances may be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

DEFAULT_MAX_FIELD_ORDER = 256


def is_prime(n: int) -> bool:
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


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p^e with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    for f in range(2, q + 1):
        if f * f > q:
            break
        if q % f == 0:
            p = f
            break
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _digits(value: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(value % p)
        value //= p
    return tuple(out)


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = list(a)
    _poly_trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i in range(dm + 1):
            a[shift + i] = (a[shift + i] - lead * m[i]) % p
        _poly_trim(a)
    return a


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive check: no monic divisor of degree 1 .. deg/2."""
    deg = len(poly) - 1
    for k in range(1, deg // 2 + 1):
        for c in range(p**k):
            div = list(_digits(c, p, k)) + [1]
            if not _poly_mod(poly, div, p):
                return False
    # degree-1 polynomials have no candidate divisors and are irreducible
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e minimizing the base-p coefficient value."""
    for low in range(p**e):
        cand = _digits(low, p, e) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class FiniteField:
    """The field GF(p^e) with table-backed arithmetic on integer-coded elements."""

    def __init__(self, p: int, e: int, max_order: int = DEFAULT_MAX_FIELD_ORDER):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > max_order:
            raise ValueError(f"field order {q} exceeds the configured limit {max_order}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus: tuple[int, ...] = _smallest_irreducible(p, e)

    # -- raw integer-coded arithmetic -------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        prod = _poly_mul(list(_digits(a, self.p, self.e)), list(_digits(b, self.p, self.e)), self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        return self.encode(tuple(red) + (0,) * (self.e - len(red)))

    @cached_property
    def _add_table(self) -> list[list[int]]:
        p, e, q = self.p, self.e, self.q
        if e == 1:
            return [[(a + b) % p for b in range(q)] for a in range(q)]
        table = []
        for a in range(q):
            da = _digits(a, p, e)
            row = []
            for b in range(q):
                db = _digits(b, p, e)
                row.append(self.encode(tuple((x + y) % p for x, y in zip(da, db))))
            table.append(row)
        return table

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        return [[self._mul_raw(a, b) for b in range(self.q)] for a in range(self.q)]

    @cached_property
    def _inv_table(self) -> list[int]:
        inv = [0] * self.q
        for a in range(1, self.q):
            row = self._mul_table[a]
            inv[a] = row.index(1)
        return inv

    @cached_property
    def _neg_table(self) -> list[int]:
        p, e = self.p, self.e
        return [self.encode(tuple((-c) % p for c in _digits(a, p, e))) for a in range(self.q)]

    def add(self, a: int, b: int) -> int:
        return self._add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add_table[a][self._neg_table[b]]

    def neg(self, a: int) -> int:
        return self._neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in {self!r}")
        return self._inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self._mul_table[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    # -- element objects and conversions ----------------------------------

    def coeffs(self, value: int) -> tuple[int, ...]:
        return _digits(value, self.p, self.e)

    def encode(self, coeffs) -> int:
        out = 0
        for c in reversed(tuple(coeffs)):
            out = out * self.p + c % self.p
        return out

    def elem(self, value: int) -> FieldElem:
        if not 0 <= value < self.q:
            raise ValueError(f"element code {value} out of range for {self!r}")
        return FieldElem(self, value)

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    def elements(self) -> list[FieldElem]:
        """All q elements in a fixed order: 0 first, 1 second, then by code."""
        return [FieldElem(self, v) for v in range(self.q)]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash(("FiniteField", self.p, self.e))

    def __repr__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElem:
    """An element of a specific FiniteField; operations never mix fields."""

    field: FiniteField
    val: int

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"element of {other.field!r} used in {self.field!r} arithmetic")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.add(self.val, other.val))

    def __sub__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.sub(self.val, other.val))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.val))

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.mul(self.val, other.val))

    def __truediv__(self, other):
        self._check(other)
        return FieldElem(self.field, self.field.div(self.val, other.val))

    def __pow__(self, n: int):
        return FieldElem(self.field, self.field.pow(self.val, n))

    def inv(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.val))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.val)

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"{self.val}:{self.field!r}"


_FIELD_CACHE: dict[tuple[int, int], FiniteField] = {}


def make_field(p: int, e: int, max_order: int = DEFAULT_MAX_FIELD_ORDER) -> FiniteField:
    """GF(p^e) with the deterministic smallest-modulus construction (cached)."""
    key = (p, e)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FiniteField(p, e, max_order=max_order)
        _FIELD_CACHE[key] = field
        return field
    if field.q > max_order:
        raise ValueError(f"field order {field.q} exceeds the configured limit {max_order}")
    return field


def field_of_order(q: int, max_order: int = DEFAULT_MAX_FIELD_ORDER) -> FiniteField:
    p, e = prime_power(q)
    return make_field(p, e, max_order=max_order)


def multiplicative_order(field: FiniteField, value: int) -> int:
    if value == 0:
        raise ValueError("0 has no multiplicative order")
    n = 1
    acc = value
    while acc != 1:
        acc = field.mul(acc, value)
        n += 1
    return n
