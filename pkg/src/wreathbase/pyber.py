"""Certified base-size-vs-order inequalities for affine groups over
wreath-product stabilizers.

Everything here decides logarithmic inequalities exactly.  For a rational
constant C = u/v the comparisons clear denominators into big-integer power
comparisons (a log x <= b log y iff x^a <= y^b); only genuinely irrational
constants of the shape log(a)/log(b) fall back to interval arithmetic with
width-driven precision refinement, and a tie that refinement cannot split
raises instead of guessing.

The certified statement: if log d(L) <= C log(|L|^(1/ell)) + (C-1) log 2
for some C > 1, then the affine group G = V : X0 with X0 = GL_d(q) wr L
and n = |V| = q^(d*ell) satisfies  b(G) <= C log|G| / log n + C + 2, where
b(G) <= b(X0) + 1 and b(X0) comes from the closed-form base size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, log

import mpmath

from .errors import PrecisionExhaustedError
from .basesize import WreathSpec, base_size_closed_form
from .distinguishing import distinguishing_number_exact
from .linalg import gl_order


def _factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; fine for the desk-scale integers used here."""
    if n < 2:
        raise ValueError("can only factor integers >= 2")
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


@dataclass(frozen=True)
class LogRatio:
    """The exact value log(top) / log(bottom) for integers top, bottom >= 2."""

    top: int
    bottom: int

    def __post_init__(self):
        if self.top < 2 or self.bottom < 2:
            raise ValueError("LogRatio arguments must be >= 2")

    def to_fraction(self) -> Fraction | None:
        """The exact rational value, when one exists (multiplicative dependence)."""
        ft = _factorize(self.top)
        fb = _factorize(self.bottom)
        gt = gcd(*ft.values())
        gb = gcd(*fb.values())
        root_t = 1
        for p, e in ft.items():
            root_t *= p ** (e // gt)
        root_b = 1
        for p, e in fb.items():
            root_b *= p ** (e // gb)
        if root_t != root_b:
            return None
        return Fraction(gt, gb)

    def __float__(self) -> float:
        return log(self.top) / log(self.bottom)

    def interval(self, iv):
        return iv.log(self.top) / iv.log(self.bottom)

    def __repr__(self) -> str:
        return f"log({self.top})/log({self.bottom})"


PyberC = int | Fraction | LogRatio


def _c_as_fraction(c: PyberC) -> Fraction | None:
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    return c.to_fraction()


def _c_interval(c: PyberC, iv):
    if isinstance(c, LogRatio):
        return c.interval(iv)
    f = Fraction(c)
    return iv.mpf(f.numerator) / iv.mpf(f.denominator)


def _c_float(c: PyberC) -> float:
    return float(c)


def _iv_le(lhs_builder, rhs_builder, max_bits: int = 2048) -> bool:
    """Decide lhs <= rhs by interval evaluation at increasing precision."""
    bits = 64
    while bits <= max_bits:
        old = mpmath.iv.prec
        mpmath.iv.prec = bits
        try:
            a = lhs_builder(mpmath.iv)
            b = rhs_builder(mpmath.iv)
        finally:
            mpmath.iv.prec = old
        if a.b <= b.a:
            return True
        if a.a > b.b:
            return False
        bits *= 2
    raise PrecisionExhaustedError(
        f"could not separate the two sides within {max_bits} bits of precision"
    )


def _c_greater_than_one(c: PyberC) -> bool:
    frac = _c_as_fraction(c)
    if frac is not None:
        return frac > 1
    return c.top > c.bottom  # log ratio > 1 iff top > bottom (both >= 2)


def hypothesis_holds(c: PyberC, ell: int, order_l: int, dist_num: int) -> bool:
    """log d(L) <= C log(|L|^(1/ell)) + (C - 1) log 2, decided exactly."""
    if ell < 1 or order_l < 1 or dist_num < 1:
        raise ValueError("ell, |L| and d(L) must all be >= 1")
    if not _c_greater_than_one(c):
        raise ValueError(f"the constant must exceed 1, got {c}")
    frac = _c_as_fraction(c)
    if frac is not None:
        u, v = frac.numerator, frac.denominator
        return dist_num ** (v * ell) <= order_l**u * 2 ** (ell * (u - v))
    return _iv_le(
        lambda iv: iv.log(dist_num),
        lambda iv: _c_interval(c, iv) * iv.log(order_l) / ell
        + (_c_interval(c, iv) - 1) * iv.log(2),
    )


def conclusion_holds(c: PyberC, base_size_x0: int, n: int, order_g: int) -> bool:
    """b(X0) + 1 <= C log|G| / log n + C + 2, decided exactly."""
    if n < 2 or order_g < 1:
        raise ValueError("need degree n >= 2 and |G| >= 1")
    frac = _c_as_fraction(c)
    if frac is not None:
        u, v = frac.numerator, frac.denominator
        k = v * (base_size_x0 - 1) - u
        if k <= 0:
            return True
        return n**k <= order_g**u
    return _iv_le(
        lambda iv: iv.mpf(base_size_x0 + 1),
        lambda iv: _c_interval(c, iv) * iv.log(order_g) / iv.log(n)
        + _c_interval(c, iv) + 2,
    )


def minimal_pyber_C(ell: int, order_l: int, dist_num: int) -> PyberC | None:
    """The least C > 1 satisfying the hypothesis, or None when every C > 1 works.

    The minimum is log((2 d(L))^ell) / log(2^ell |L|); it is returned as an
    exact Fraction when that ratio is rational and as a LogRatio otherwise.
    None signals the d(L) = 1 (or otherwise sub-unit) case where the
    hypothesis holds for every C > 1 and only the infimum 1 exists.
    """
    if ell < 1 or order_l < 1 or dist_num < 1:
        raise ValueError("ell, |L| and d(L) must all be >= 1")
    top = (2 * dist_num) ** ell
    bottom = 2**ell * order_l
    if top <= bottom:
        return None
    ratio = LogRatio(top, bottom)
    frac = ratio.to_fraction()
    return frac if frac is not None else ratio


def pyber_c_le(a: PyberC, b: PyberC) -> bool:
    """Exact comparison of two constants (power comparison, interval fallback)."""
    fa, fb = _c_as_fraction(a), _c_as_fraction(b)
    if fa is not None and fb is not None:
        return fa <= fb
    if fa is not None:
        # fa <= log(top)/log(bottom) iff bottom^num <= top^den
        return b.bottom**fa.numerator <= b.top**fa.denominator
    if fb is not None:
        return a.top**fb.denominator <= a.bottom**fb.numerator
    if (a.top, a.bottom) == (b.top, b.bottom):
        return True
    return _iv_le(lambda iv: a.interval(iv), lambda iv: b.interval(iv))


def family_constant(
    family: str,
    *,
    c: int | None = None,
    m: int | None = None,
    r: int | None = None,
    alt_or_sym: bool = False,
) -> PyberC:
    """The certified constant for each family of top groups L.

    small_dl:    d(L) <= c         ->  max{2, log(2c)/log 2}
    primitive:   L primitive       ->  3 (2 when L is the full symmetric or
                                        alternating group)
    semiregular: L semiregular     ->  2
    wreath:      L = S_m wr S_r    ->  2   (m, r >= 2)
    """
    if family == "small_dl":
        if c is None or c < 1:
            raise ValueError("small_dl requires the bound c >= 1")
        if 2 * c <= 4:
            return 2
        ratio = LogRatio(2 * c, 2)
        frac = ratio.to_fraction()
        value: PyberC = frac if frac is not None else ratio
        if isinstance(value, Fraction) and value.denominator == 1:
            value = int(value)
        return value
    if family == "primitive":
        return 2 if alt_or_sym else 3
    if family == "semiregular":
        return 2
    if family == "wreath":
        if m is None or r is None or m < 2 or r < 2:
            raise ValueError("wreath requires m, r >= 2")
        return 2
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class PyberCertificate:
    """Record of one certified instance of the base-size inequality chain."""

    d: int
    q: int
    ell: int
    dist_num: int
    base_size_x0: int
    constant: PyberC
    order_l: int
    order_x0: int
    n: int
    order_g: int
    lhs: int
    rhs_lower_bound: Fraction
    hypothesis_ok: bool
    conclusion_ok: bool

    def __post_init__(self):
        if self.conclusion_ok and not self.hypothesis_ok:
            raise AssertionError("a certificate may not assert the conclusion without the hypothesis")


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    frac = Fraction(man) * Fraction(2) ** exp
    return -frac if sign else frac


def _rhs_lower_bound(c: PyberC, n: int, order_g: int, bits: int = 160) -> Fraction:
    old = mpmath.iv.prec
    mpmath.iv.prec = bits
    try:
        rhs = _c_interval(c, mpmath.iv) * mpmath.iv.log(order_g) / mpmath.iv.log(n) \
            + _c_interval(c, mpmath.iv) + 2
    finally:
        mpmath.iv.prec = old
    return _mpf_to_fraction(rhs.a)


def certify(spec: WreathSpec, constant: PyberC, *, seed: int = 0, **search_kwargs) -> PyberCertificate:
    """Certify the inequality chain for G = V : X0 with X0 = GL_d(q) wr L.

    d(L) is computed exactly, b(X0) from the closed form; the hypothesis is
    verified first and the conclusion is only tested (and can only be
    asserted) when the hypothesis holds.  Failures are recorded in the
    certificate, not raised.
    """
    d, q, ell = spec.d, spec.q, spec.ell
    dist_num = distinguishing_number_exact(spec.L, seed=seed, **search_kwargs)
    b = base_size_closed_form(d, q, dist_num)
    order_l = spec.L.order
    order_x0 = gl_order(d, q) ** ell * order_l
    n = q ** (d * ell)
    order_g = n * order_x0
    hyp = hypothesis_holds(constant, ell, order_l, dist_num)
    concl = conclusion_holds(constant, b, n, order_g) if hyp else False
    return PyberCertificate(
        d=d,
        q=q,
        ell=ell,
        dist_num=dist_num,
        base_size_x0=b,
        constant=constant,
        order_l=order_l,
        order_x0=order_x0,
        n=n,
        order_g=order_g,
        lhs=b + 1,
        rhs_lower_bound=_rhs_lower_bound(constant, n, order_g),
        hypothesis_ok=hyp,
        conclusion_ok=concl,
    )


def kk_factorial_check(kmax: int) -> bool:
    """k^k <= (k!)^2 for all 1 <= k <= kmax, by exact big integers."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    return all(k**k <= factorial(k) ** 2 for k in range(1, kmax + 1))
