"""Orbit counting oracles for GL_d(q) on spanning m-tuples, plus a generic
counter for orbits on ordered multi-bases.

The two spanning-tuple counters are deliberately independent of each other:

* the canonical route maps each rank-d tuple to the unique reduced-echelon
  basis of its column space (an invariant that separates orbits exactly);
* the partition route builds the explicit orbit partition by applying every
  group element to every spanning tuple, sweeping unvisited tuples and
  painting the full orbit of each; the spanning test there is a subspace
  closure count, not an echelon computation.

Tuples of m row vectors in F_q^d are encoded as integers with m base-(q^d)
digits, digit i = encoded row i.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BudgetExceededError
from .gf import field_of_order
from .linalg import VectorTables, _rref_rows, gl_order, gl_row_tuples

DEFAULT_MAX_TUPLES = 10**7
DEFAULT_MAX_GROUP_ORDER = 10**6


def _check_tuple_budget(d: int, q: int, m: int, max_tuples: int) -> int:
    total = (q**d) ** m
    if total > max_tuples:
        raise BudgetExceededError(
            f"enumerating q^(d*m) = {total} tuples exceeds the budget {max_tuples}"
        )
    return total


def count_spanning_orbits_canonical(
    d: int,
    q: int,
    m: int,
    *,
    max_tuples: int = DEFAULT_MAX_TUPLES,
    position_perm: Sequence[int] | None = None,
) -> int:
    """Number of GL_d(q)-orbits on spanning m-tuples, via column-space canon forms.

    Enumerates all q^(d*m) tuples, keeps those of rank d, and counts distinct
    canonical column-space forms.  position_perm optionally reorders the
    tuple slots before processing (the count is invariant; used as a
    determinism check).
    """
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    field = field_of_order(q)
    total = _check_tuple_budget(d, q, m, max_tuples)
    vt = VectorTables(field, d)
    digits = vt.digits
    qd = vt.size
    order = list(position_perm) if position_perm is not None else list(range(m))
    if sorted(order) != list(range(m)):
        raise ValueError("position_perm must be a permutation of the slots")

    keys: set[tuple[tuple[int, ...], ...]] = set()
    rows = [0] * m
    # odometer over the m digits; avoids itertools.product tuple churn
    for code in range(total):
        x = code
        for i in range(m):
            rows[i] = x % qd
            x //= qd
        cols = [[digits[rows[order[i]]][j] for i in range(m)] for j in range(d)]
        reduced, rank, _ = _rref_rows(field, cols, m)
        if rank == d:
            keys.add(tuple(tuple(r) for r in reduced))
    return len(keys)


def _spanning_orbit_ids(
    d: int,
    q: int,
    m: int,
    max_tuples: int,
    max_group_order: int,
    position_perm: Sequence[int] | None = None,
) -> tuple[int, list[int]]:
    """Orbit partition of the spanning tuples; returns (count, id per tuple code).

    id[code] = orbit index for spanning tuples, -1 otherwise.  Every group
    element is applied to a representative of each orbit, which paints the
    whole orbit because the element list is the full group.
    """
    field = field_of_order(q)
    total = _check_tuple_budget(d, q, m, max_tuples)
    if gl_order(d, q) > max_group_order:
        raise BudgetExceededError(
            f"|GL_{d}({q})| = {gl_order(d, q)} exceeds the budget {max_group_order}"
        )
    vt = VectorTables(field, d)
    qd = vt.size
    rowmaps = [vt.mat_rowmap(tuple(vt.digits[v] for v in rows)) for rows in gl_row_tuples(field, d)]
    order = list(position_perm) if position_perm is not None else list(range(m))
    if sorted(order) != list(range(m)):
        raise ValueError("position_perm must be a permutation of the slots")

    powers = [qd**i for i in range(m)]
    ids = [-1] * total
    visited = bytearray(total)
    count = 0
    rows = [0] * m
    for code in range(total):
        if visited[code]:
            continue
        x = code
        for i in range(m):
            rows[i] = x % qd
            x //= qd
        if not vt.spans_all(rows[order[i]] for i in range(m)):
            visited[code] = 1
            continue
        orbit_id = count
        count += 1
        for rmap in rowmaps:
            img = 0
            for i in range(m):
                img += rmap[rows[i]] * powers[i]
            visited[img] = 1
            ids[img] = orbit_id
    return count, ids


def count_spanning_orbits_partition(
    d: int,
    q: int,
    m: int,
    *,
    max_tuples: int = DEFAULT_MAX_TUPLES,
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
    position_perm: Sequence[int] | None = None,
) -> int:
    """Number of GL_d(q)-orbits on spanning m-tuples, via the explicit partition."""
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    count, _ = _spanning_orbit_ids(d, q, m, max_tuples, max_group_order, position_perm)
    return count


def spanning_orbit_ids(
    d: int,
    q: int,
    m: int,
    *,
    max_tuples: int = DEFAULT_MAX_TUPLES,
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
) -> list[int]:
    """Orbit id per encoded tuple (-1 for non-spanning); for exhaustive cross-checks."""
    _, ids = _spanning_orbit_ids(d, q, m, max_tuples, max_group_order)
    return ids


def encode_tuple(rows: Sequence[int], qd: int) -> int:
    code = 0
    for v in reversed(tuple(rows)):
        code = code * qd + v
    return code


def count_multibase_orbits(
    action: Sequence[Sequence[int]],
    m: int,
    *,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> int:
    """Orbits of a group (given as an explicit closed list of point
    permutations) on m-tuples whose underlying point set is a base.

    A set is a base when no non-identity permutation of the action fixes it
    pointwise.  Degenerate actions are fine: for the trivial group every
    tuple is a multi-base.
    """
    if m < 0:
        raise ValueError("tuple length must be >= 0")
    perms = [tuple(p) for p in action]
    if not perms:
        raise ValueError("the action must contain at least the identity")
    omega = len(perms[0])
    ident = tuple(range(omega))
    if ident not in perms:
        raise ValueError("the action does not contain the identity permutation")
    nontrivial = [p for p in perms if p != ident]
    total = omega**m
    if total > max_tuples:
        raise BudgetExceededError(f"|Omega|^m = {total} exceeds the budget {max_tuples}")

    base_memo: dict[frozenset[int], bool] = {}

    def is_base(points: frozenset[int]) -> bool:
        cached = base_memo.get(points)
        if cached is None:
            cached = not any(all(p[x] == x for x in points) for p in nontrivial)
            base_memo[points] = cached
        return cached

    powers = [omega**i for i in range(m)]
    visited = bytearray(total)
    count = 0
    pts = [0] * m
    for code in range(total):
        if visited[code]:
            continue
        x = code
        for i in range(m):
            pts[i] = x % omega
            x //= omega
        if not is_base(frozenset(pts)):
            visited[code] = 1
            continue
        count += 1
        for p in perms:
            img = 0
            for i in range(m):
                img += p[pts[i]] * powers[i]
            visited[img] = 1
    return count


def gl_point_action(d: int, q: int, max_group_order: int = DEFAULT_MAX_GROUP_ORDER):
    """GL_d(q) acting on the q^d vectors of F_q^d, as a list of point permutations."""
    field = field_of_order(q)
    vt = VectorTables(field, d)
    return [
        vt.mat_rowmap(tuple(vt.digits[v] for v in rows))
        for rows in gl_row_tuples(field, d, max_order=max_group_order)
    ]
