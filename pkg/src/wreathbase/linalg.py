"""Exact linear algebra over GF(q): RREF, rank, subspace canonical forms,
and enumeration of GL_d(q).

Matrices store integer-coded field elements (see gf) in a row-major grid.
Row vectors of length d are also handled in an encoded form, as integers in
[0, q^d) whose base-q digits are the coordinates; VectorTables holds the
lookup tables for that encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from .errors import BudgetExceededError
from .gf import FieldElem, FiniteField, field_of_order

DEFAULT_MAX_GL_ORDER = 10**6


class MatGF:
    """A rectangular matrix over a FiniteField; entries are element codes."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FiniteField, entries, rows: int | None = None, cols: int | None = None):
        grid = tuple(tuple(row) for row in entries)
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError("ragged or mis-sized entry grid")
        q = field.q
        for row in grid:
            for v in row:
                if not 0 <= v < q:
                    raise ValueError(f"entry code {v} out of range for {field!r}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = grid

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> "MatGF":
        return cls(field, [[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "MatGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def elem(self, i: int, j: int) -> FieldElem:
        return self.field.elem(self.entries[i][j])

    def transpose(self) -> "MatGF":
        return MatGF(
            self.field,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def mul(self, other: "MatGF") -> "MatGF":
        if other.field != self.field:
            raise ValueError("matrix product across different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}")
        f = self.field
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    acc = f.add(acc, f.mul(self.entries[i][k], other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return MatGF(f, out, self.rows, other.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatGF)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"MatGF({self.field!r}, {self.rows}x{self.cols}: [{body}])"


def _rref_rows(field: FiniteField, rows: list[list[int]], ncols: int):
    """Gauss-Jordan on a list of row lists (mutated); returns (rows, rank, pivots)."""
    mul = field.mul
    sub = field.sub
    inv = field.inv
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        scale = inv(rows[r][c])
        if scale != 1:
            rr = rows[r]
            for j in range(c, ncols):
                rr[j] = mul(scale, rr[j])
        rr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = sub(ri[j], mul(factor, rr[j]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, r, pivots


@dataclass(frozen=True)
class RrefResult:
    matrix: MatGF
    rank: int
    pivots: tuple[int, ...]


def rref(a: MatGF) -> RrefResult:
    """Reduced row echelon form, rank, and pivot columns of a."""
    rows = [list(row) for row in a.entries]
    rows, rank, pivots = _rref_rows(a.field, rows, a.cols)
    return RrefResult(MatGF(a.field, rows, a.rows, a.cols), rank, tuple(pivots))


@dataclass(frozen=True)
class SubspaceCanon:
    """Canonical form of a subspace of F_q^m: its unique RREF basis matrix.

    Two SubspaceCanon values compare equal exactly when they describe the
    same subspace.
    """

    ambient_dim: int
    dim: int
    basis: MatGF
    pivots: tuple[int, ...]


def column_space_canon(a: MatGF) -> SubspaceCanon:
    """Canonical form of the column space of a, invariant under a -> a*g for g in GL."""
    rows = [[a.entries[i][j] for i in range(a.rows)] for j in range(a.cols)]
    rows, rank, pivots = _rref_rows(a.field, rows, a.rows)
    basis = MatGF(a.field, rows[:rank], rank, a.rows)
    return SubspaceCanon(ambient_dim=a.rows, dim=rank, basis=basis, pivots=tuple(pivots))


class VectorTables:
    """Lookup tables for F_q^d row vectors encoded as base-q integers.

    digit i of the code = coordinate i.  Supports vector addition, scalar
    multiplication, and right multiplication by a d x d matrix as table maps.
    """

    MAX_TABLE_SPACE = 1 << 13

    def __init__(self, field: FiniteField, d: int):
        self.field = field
        self.d = d
        self.q = field.q
        self.size = field.q**d
        self.digits: list[tuple[int, ...]] = []
        q = field.q
        for v in range(self.size):
            digs = []
            x = v
            for _ in range(d):
                digs.append(x % q)
                x //= q
            self.digits.append(tuple(digs))

    def encode(self, digs) -> int:
        out = 0
        for c in reversed(tuple(digs)):
            out = out * self.q + c
        return out

    @cached_property
    def add(self) -> list[list[int]]:
        if self.size > self.MAX_TABLE_SPACE:
            raise BudgetExceededError(f"vector addition table for q^d = {self.size} is too large")
        fadd = self.field.add
        enc = self.encode
        digs = self.digits
        return [
            [enc([fadd(x, y) for x, y in zip(digs[a], digs[b])]) for b in range(self.size)]
            for a in range(self.size)
        ]

    @cached_property
    def smul(self) -> list[list[int]]:
        fmul = self.field.mul
        enc = self.encode
        return [
            [enc([fmul(c, x) for x in self.digits[v]]) for v in range(self.size)]
            for c in range(self.q)
        ]

    def mat_rowmap(self, mat_rows: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
        """The map v -> v*M on encoded vectors, for M given as d rows of codes."""
        f = self.field
        d = self.d
        out = []
        for v in range(self.size):
            digs = self.digits[v]
            img = [0] * d
            for i in range(d):
                vi = digs[i]
                if vi:
                    row = mat_rows[i]
                    for j in range(d):
                        img[j] = f.add(img[j], f.mul(vi, row[j]))
            out.append(self.encode(img))
        return tuple(out)

    def spans_all(self, rows) -> bool:
        """True iff the encoded row vectors span F_q^d (subspace closure, no elimination)."""
        vadd = self.add
        smul = self.smul
        covered = bytearray(self.size)
        covered[0] = 1
        members = [0]
        target = self.size
        for v in rows:
            if covered[v]:
                continue
            current = list(members)
            for c in range(1, self.q):
                cv = smul[c][v]
                add_row = vadd[cv]
                for s in current:
                    w = add_row[s]
                    if not covered[w]:
                        covered[w] = 1
                        members.append(w)
            if len(members) == target:
                return True
        return len(members) == target


def gl_order(d: int, q: int) -> int:
    """|GL_d(q)| as an exact integer."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    field_of_order(q)  # validates q is a prime power
    qd = q**d
    out = 1
    for i in range(d):
        out *= qd - q**i
    return out


def sl_order(d: int, q: int) -> int:
    return gl_order(d, q) // (q - 1)


def a_factor(d: int, q: int) -> Fraction:
    """The exact rational a(d, q) = prod_{i=1}^{d} (1 - 1/q^i)."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    out = Fraction(1)
    for i in range(1, d + 1):
        out *= 1 - Fraction(1, q**i)
    return out


def gl_row_tuples(
    field: FiniteField, d: int, max_order: int = DEFAULT_MAX_GL_ORDER
) -> Iterator[tuple[int, ...]]:
    """Yield each invertible d x d matrix over the field exactly once, as a
    tuple of encoded rows, in row-lexicographic order.

    Rows are chosen one at a time and a partial-span check prunes dependent
    prefixes, so only q^d candidates are inspected per position instead of
    filtering all q^(d*d) full matrices.
    """
    order = gl_order(d, field.q)
    if order > max_order:
        raise BudgetExceededError(f"|GL_{d}({field.q})| = {order} exceeds the cap {max_order}")
    vt = VectorTables(field, d)
    size = vt.size
    vadd = vt.add
    smul = vt.smul
    q = field.q

    covered = bytearray(size)
    covered[0] = 1
    members = [0]
    chosen: list[int] = []

    def extend(v: int) -> int:
        added = 0
        current = list(members)
        for c in range(1, q):
            cv = smul[c][v]
            add_row = vadd[cv]
            for s in current:
                w = add_row[s]
                if not covered[w]:
                    covered[w] = 1
                    members.append(w)
                    added += 1
        return added

    def retract(added: int) -> None:
        for _ in range(added):
            covered[members.pop()] = 0

    def rec() -> Iterator[tuple[int, ...]]:
        if len(chosen) == d:
            yield tuple(chosen)
            return
        for v in range(1, size):
            if covered[v]:
                continue
            added = extend(v)
            chosen.append(v)
            yield from rec()
            chosen.pop()
            retract(added)

    yield from rec()


def enumerate_GL(d: int, q: int, max_order: int = DEFAULT_MAX_GL_ORDER) -> Iterator[MatGF]:
    """Stream the elements of GL_d(q) as MatGF values in a deterministic order."""
    field = field_of_order(q)
    vt = VectorTables(field, d)
    for rows in gl_row_tuples(field, d, max_order=max_order):
        yield MatGF(field, [vt.digits[v] for v in rows], d, d)
