"""Permutation groups on {0, ..., l-1} given by generators.

Groups are enumerated by breadth-first closure under generator
multiplication (no stabilizer chains); the element list is cached and the
group is immutable afterwards, so concurrent reads are safe.  The named
constructions (symmetric, alternating, cyclic, dihedral, imprimitive
wreath) additionally know their order and a direct membership test, which
lets searches over very large S_l / A_l avoid materializing elements.

External text format: first line ``degree N``, then one generator per line
in cycle notation, 1-indexed, e.g. ``(1 2 3)(4 5)``; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from functools import cached_property
from math import factorial
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import GroupTooLargeError

Perm = tuple[int, ...]

DEFAULT_MAX_GROUP_ORDER = 10**6


# -- permutation primitives -------------------------------------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def is_perm(images: Sequence[int], n: int) -> bool:
    return len(images) == n and sorted(images) == list(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """Apply a, then b: (a*b)[i] = b[a[i]]."""
    return tuple(b[x] for x in a)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def support(p: Perm) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(p) if x != i)


def perm_sign(p: Perm) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycles_of(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Perm) -> str:
    """Cycle notation, 1-indexed; identity prints as '()'."""
    cycs = cycles_of(p)
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in cycs)


_CYCLE_RE = re.compile(r"\(\s*((?:\d+[\s,]*)*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-indexed disjoint cycle notation like '(1 2 3)(4 5)' into images."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation string")
    leftover = "".join(_CYCLE_RE.sub("", stripped).split())
    if leftover:
        raise ValueError(f"could not parse permutation {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for match in _CYCLE_RE.finditer(stripped):
        body = match.group(1).replace(",", " ").split()
        points = [int(tok) - 1 for tok in body]
        for x in points:
            if not 0 <= x < degree:
                raise ValueError(f"point {x + 1} out of range for degree {degree}")
            if x in used:
                raise ValueError(f"point {x + 1} appears in two cycles of {text!r}")
            used.add(x)
        for i, x in enumerate(points):
            images[x] = points[(i + 1) % len(points)]
    return tuple(images)


# -- the group class ----------------------------------------------------------


class PermGroup:
    """A permutation group of fixed degree, defined by its generators."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Sequence[int]],
        *,
        name: str | None = None,
        order_hint: int | None = None,
        contains_hint: Callable[[Perm], bool] | None = None,
        max_order: int = DEFAULT_MAX_GROUP_ORDER,
    ):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        gens = []
        for g in generators:
            g = tuple(g)
            if not is_perm(g, degree):
                raise ValueError(f"{g} is not a permutation of degree {degree}")
            if g != identity_perm(degree) and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.name = name
        self.max_order = max_order
        self._order_hint = order_hint
        self._contains_hint = contains_hint

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} gens>"
        return f"PermGroup({label}, degree={self.degree})"

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        """All elements, by breadth-first closure from the identity (deterministic)."""
        if self._order_hint is not None and self._order_hint > self.max_order:
            raise GroupTooLargeError(
                f"group order {self._order_hint} exceeds the enumeration cap {self.max_order}"
            )
        ident = identity_perm(self.degree)
        elems = [ident]
        seen = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = compose(x, g)
                    if y not in seen:
                        seen.add(y)
                        elems.append(y)
                        new.append(y)
                        if len(elems) > self.max_order:
                            raise GroupTooLargeError(
                                f"closure exceeds the enumeration cap {self.max_order}"
                            )
            frontier = new
        if self._order_hint is not None and len(elems) != self._order_hint:
            raise AssertionError(
                f"closure produced {len(elems)} elements, expected {self._order_hint}"
            )
        return tuple(elems)

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        if self._order_hint is not None:
            return self._order_hint
        return len(self.elements)

    @property
    def enumerable(self) -> bool:
        return self.order <= self.max_order

    def contains(self, p: Sequence[int]) -> bool:
        p = tuple(p)
        if not is_perm(p, self.degree):
            return False
        if self._contains_hint is not None:
            return self._contains_hint(p)
        return p in self.element_set

    @cached_property
    def elements_by_support(self) -> tuple[Perm, ...]:
        """Non-identity elements sorted by (support size, images); good scan order."""
        ident = identity_perm(self.degree)
        rest = [p for p in self.elements if p != ident]
        rest.sort(key=lambda p: (len(support(p)), p))
        return tuple(rest)

    @cached_property
    def elements_array(self) -> np.ndarray:
        """(order, degree) int array of images, element order matching .elements."""
        return np.array(self.elements, dtype=np.int64)

    # -- orbits, blocks, predicates ---------------------------------------

    def orbit(self, point: int) -> tuple[int, ...]:
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def orbits(self) -> list[tuple[int, ...]]:
        out = []
        remaining = set(range(self.degree))
        while remaining:
            orb = self.orbit(min(remaining))
            out.append(orb)
            remaining -= set(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def _min_block_is_all(self, a: int, b: int) -> bool:
        """Does the smallest block system with a, b in one block collapse to one block?"""
        n = self.degree
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> int:
            rx, ry = find(x), find(y)
            if rx == ry:
                return rx
            parent[ry] = rx
            return rx

        union(a, b)
        queue = [(a, b)]
        size = 2
        while queue:
            x, y = queue.pop()
            for g in self.generators:
                gx, gy = find(g[x]), find(g[y])
                if gx != gy:
                    union(gx, gy)
                    queue.append((gx, gy))
                    size += 1
                    if size >= n:
                        break
        classes = {find(x) for x in range(n)}
        return len(classes) == 1

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial block system (minimal-block test per pair)."""
        if not self.is_transitive():
            return False
        n = self.degree
        if n <= 2:
            return True
        return all(self._min_block_is_all(0, b) for b in range(1, n))

    def is_semiregular(self) -> bool:
        """Every point stabilizer trivial: no non-identity element has a fixed point."""
        ident = identity_perm(self.degree)
        for p in self.elements:
            if p != ident and any(p[i] == i for i in range(self.degree)):
                return False
        return True

    def point_stabilizer_order(self, point: int) -> int:
        return sum(1 for p in self.elements if p[point] == point)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)


class Predicates(NamedTuple):
    is_transitive: bool
    is_primitive: bool
    is_semiregular: bool


def predicates(group: PermGroup) -> Predicates:
    return Predicates(group.is_transitive(), group.is_primitive(), group.is_semiregular())


# -- standard constructions ---------------------------------------------------


def group_from_generators(
    degree: int, gens: Iterable[Sequence[int]], *, name: str | None = None,
    max_order: int = DEFAULT_MAX_GROUP_ORDER,
) -> PermGroup:
    return PermGroup(degree, gens, name=name, max_order=max_order)


def trivial_group(degree: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    return PermGroup(degree, [], name=f"1 (degree {degree})", order_hint=1,
                     contains_hint=lambda p: p == identity_perm(degree), max_order=max_order)


def symmetric_group(n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    gens: list[Perm] = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens, name=f"S{n}", order_hint=factorial(n),
                     contains_hint=lambda p: True, max_order=max_order)


def alternating_group(n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    gens = []
    if n >= 3:
        gens.append(tuple([1, 2, 0] + list(range(3, n))))
    if n >= 4:
        if n % 2 == 1:
            gens.append(tuple(list(range(1, n)) + [0]))
        else:
            gens.append(tuple([0] + list(range(2, n)) + [1]))
    order = factorial(n) // 2 if n >= 2 else 1
    return PermGroup(n, gens, name=f"A{n}", order_hint=max(order, 1),
                     contains_hint=lambda p: perm_sign(p) == 1, max_order=max_order)


def cyclic_group(n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    gens = [tuple(list(range(1, n)) + [0])] if n >= 2 else []

    def _contains(p: Perm) -> bool:
        k = p[0]
        return all(p[i] == (i + k) % n for i in range(n))

    return PermGroup(n, gens, name=f"C{n}", order_hint=n,
                     contains_hint=_contains, max_order=max_order)


def dihedral_group(n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    """Dihedral group of order 2n acting on the vertices of an n-gon (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral construction needs n >= 3")
    rot = tuple(list(range(1, n)) + [0])
    refl = tuple((n - i) % n for i in range(n))

    def _contains(p: Perm) -> bool:
        k = p[0]
        return all(p[i] == (k + i) % n for i in range(n)) or all(
            p[i] == (k - i) % n for i in range(n)
        )

    return PermGroup(n, [rot, refl], name=f"D{n}", order_hint=2 * n,
                     contains_hint=_contains, max_order=max_order)


def wreath_imprimitive(m: int, r: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    """S_m wr S_r on [m] x [r] flattened as point (i, j) = j*m + i.

    The blocks are {(., j)}; the group is exactly the full stabilizer of
    that block system in S_{m*r}, of order (m!)^r * r!.
    """
    if m < 1 or r < 1:
        raise ValueError("wreath parameters must be >= 1")
    n = m * r
    gens: list[Perm] = []
    if m >= 2:
        base = list(range(n))
        base[0], base[1] = base[1], base[0]
        gens.append(tuple(base))
        if m >= 3:
            cyc = list(range(n))
            for i in range(m):
                cyc[i] = (i + 1) % m
            gens.append(tuple(cyc))
    if r >= 2:
        swap = list(range(n))
        for i in range(m):
            swap[i], swap[m + i] = swap[m + i], swap[i]
        gens.append(tuple(swap))
        if r >= 3:
            rot = [((j + 1) % r) * m + i for j in range(r) for i in range(m)]
            gens.append(tuple(rot))

    def _contains(p: Perm) -> bool:
        for j in range(r):
            target = p[j * m] // m
            if any(p[j * m + i] // m != target for i in range(1, m)):
                return False
        return True

    order = factorial(m) ** r * factorial(r)
    return PermGroup(n, gens, name=f"S{m}wrS{r}", order_hint=order,
                     contains_hint=_contains, max_order=max_order)


_BUILTIN_RE = re.compile(r"^(?:S(\d+)wrS(\d+)|S(\d+)|A(\d+)|C(\d+))$")


def builtin_group(name: str, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    """Resolve a builtin group name: Sn, An, Cn, or SmwrSr (imprimitive)."""
    match = _BUILTIN_RE.match(name.strip())
    if not match:
        raise ValueError(f"unknown builtin group {name!r} (expected Sn, An, Cn, or SmwrSr)")
    wm, wr, s, a, c = match.groups()
    if wm is not None:
        return wreath_imprimitive(int(wm), int(wr), max_order=max_order)
    if s is not None:
        return symmetric_group(int(s), max_order=max_order)
    if a is not None:
        return alternating_group(int(a), max_order=max_order)
    return cyclic_group(int(c), max_order=max_order)


def parse_group_text(text: str, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    """Parse the generator file format (see module docstring)."""
    degree: int | None = None
    gens: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            match = re.match(r"^degree\s+(\d+)$", line)
            if not match:
                raise ValueError(f"line {lineno}: expected 'degree N' before generators")
            degree = int(match.group(1))
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be >= 1")
            continue
        gens.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError("no 'degree N' line found")
    return PermGroup(degree, gens, name=f"file group (degree {degree})", max_order=max_order)


def load_group_file(path, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_text(fh.read(), max_order=max_order)
