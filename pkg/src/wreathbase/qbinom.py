"""Gaussian binomial coefficients and their two-sided q-power bounds.

All values are exact integers / rationals; the near-tight comparisons at
small q leave no room for floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .errors import BudgetExceededError
from .gf import prime_power

DEFAULT_MAX_PROFILES = 10**7


def gaussian_binomial(m: int, d: int, q: int) -> int:
    """The number of d-dimensional subspaces of F_q^m; 0 when d > m.

    Computed by the exact product formula
    (q^m - 1)(q^(m-1) - 1)...(q^(m-d+1) - 1) / ((q^d - 1)...(q - 1));
    the division is always exact.
    """
    if m < 0 or d < 0:
        raise ValueError("m and d must be non-negative")
    prime_power(q)
    if d > m:
        return 0
    num = 1
    den = 1
    for i in range(d):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"inexact division in gaussian_binomial({m}, {d}, {q})")
    return value


def count_subspaces_oracle(m: int, d: int, q: int, max_profiles: int = DEFAULT_MAX_PROFILES) -> int:
    """Count d-dimensional subspaces of F_q^m by direct RREF enumeration.

    Every subspace has a unique RREF basis matrix; for a fixed set of pivot
    columns p_1 < ... < p_d, the free entries are the positions to the right
    of each pivot that are not pivot columns themselves, so that pivot
    profile contributes q^(#free) matrices.  Summing over the C(m, d)
    profiles counts the subspaces without touching the product formula.
    """
    if m < 0 or d < 0:
        raise ValueError("m and d must be non-negative")
    prime_power(q)
    if d > m:
        return 0
    profiles = 1
    for i in range(d):
        profiles = profiles * (m - i) // (i + 1)
    if profiles > max_profiles:
        raise BudgetExceededError(
            f"C({m}, {d}) = {profiles} pivot profiles exceed the budget {max_profiles}"
        )
    total = 0
    for pivots in combinations(range(m), d):
        pivot_set = set(pivots)
        free = 0
        for p in pivots:
            free += sum(1 for col in range(p + 1, m) if col not in pivot_set)
        total += q**free
    return total


class QBinomBounds(NamedTuple):
    lower_ok: bool
    upper_ok: bool
    c_of_q: Fraction


def check_qbinom_bounds(d: int, s: int, q: int) -> QBinomBounds:
    """Check q^(ds) <= binom(d+s, d)_q <= c(q)^-1 q^(ds) with c(q) = 1 - 1/q - 1/q^2.

    Both comparisons are exact rational arithmetic; returns the two truth
    values together with c(q).
    """
    if d < 1 or s < 1:
        raise ValueError("d and s must be >= 1")
    value = gaussian_binomial(d + s, d, q)
    power = q ** (d * s)
    c = 1 - Fraction(1, q) - Fraction(1, q * q)
    lower_ok = power <= value
    upper_ok = value * c <= power
    return QBinomBounds(lower_ok, upper_ok, c)
