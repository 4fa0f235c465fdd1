"""Integer lattice primitives.

Points are plain tuples of Python ints, so all arithmetic is exact at any
size. The module provides the coordinatewise partial order, the lex and
graded-lex term orders, box and predecessor enumeration, and Hermite normal
form for subgroup membership and intersection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import DimensionMismatch, OrderNotPredecessorFinite

Point = tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def check_same_dimension(p: Sequence[int], q: Sequence[int]) -> None:
    if len(p) != len(q):
        raise DimensionMismatch(f"dimension {len(p)} vs {len(q)}")


def add(p: Point, q: Point) -> Point:
    check_same_dimension(p, q)
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Point, q: Point) -> Point:
    """Componentwise difference; may leave N^d (callers check is_natural)."""
    check_same_dimension(p, q)
    return tuple(a - b for a, b in zip(p, q))


def scale(k: int, p: Point) -> Point:
    return tuple(k * a for a in p)


def is_natural(p: Sequence[int]) -> bool:
    return all(a >= 0 for a in p)


def is_zero(p: Sequence[int]) -> bool:
    return all(a == 0 for a in p)


def zero(dimension: int) -> Point:
    return (0,) * dimension


def unit(dimension: int, axis: int) -> Point:
    return tuple(1 if i == axis else 0 for i in range(dimension))


def partial_leq(p: Point, q: Point) -> bool:
    """Coordinatewise order: p <= q iff p_i <= q_i for every i."""
    check_same_dimension(p, q)
    return all(a <= b for a, b in zip(p, q))


def enumerate_box(lo: Point, hi: Point) -> Iterator[Point]:
    """All points lo <= p <= hi, in row-major order (last coordinate fastest)."""
    check_same_dimension(lo, hi)
    if not partial_leq(lo, hi):
        raise ValueError(f"box is empty: {lo} is not below {hi}")
    return itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)])


def compositions(total: int, parts: int) -> Iterator[Point]:
    """All tuples in N^parts with coordinate sum ``total``, first coordinate ascending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class TermOrder:
    """A total order on N^d compatible with addition.

    kind "lex" compares permuted coordinates left to right; "grlex" compares
    coordinate sums first and breaks ties by lex. ``perm`` lists coordinate
    indices from most to least significant (identity when None).
    """

    kind: str
    perm: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.perm is not None:
            object.__setattr__(self, "perm", tuple(self.perm))

    def _permuted(self, p: Point) -> Point:
        if self.perm is None:
            return p
        if sorted(self.perm) != list(range(len(p))):
            raise DimensionMismatch(
                f"permutation {self.perm} does not match dimension {len(p)}"
            )
        return tuple(p[i] for i in self.perm)

    def key(self, p: Point):
        """Sort key: orders points exactly as the term order does."""
        base = self._permuted(p)
        return base if self.kind == "lex" else (sum(p),) + base

    def cmp(self, p: Point, q: Point) -> int:
        check_same_dimension(p, q)
        kp, kq = self.key(p), self.key(q)
        return LESS if kp < kq else GREATER if kp > kq else EQUAL

    def max(self, points) -> Point:
        return max(points, key=self.key)

    def is_predecessor_finite(self, dimension: int) -> bool:
        """True when every point has finitely many predecessors (grlex; lex only in d=1)."""
        return self.kind == "grlex" or dimension <= 1

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.perm is not None:
            d["perm"] = list(self.perm)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "TermOrder":
        return cls(data["kind"], tuple(data["perm"]) if "perm" in data else None)


GRLEX = TermOrder("grlex")
LEX = TermOrder("lex")


def order_cmp(order: TermOrder, p: Point, q: Point) -> int:
    """-1, 0 or 1 as p precedes, equals or follows q under the order."""
    return order.cmp(p, q)


def enumerate_preceding(order: TermOrder, p: Point) -> Iterator[Point]:
    """All q in N^d with q strictly preceding p, each exactly once.

    Only defined for predecessor-finite orders (checked eagerly). For grlex
    the predecessors are every point of lower degree plus the lex-smaller
    points of equal degree; yielded degree by degree.
    """
    d = len(p)
    if not order.is_predecessor_finite(d):
        raise OrderNotPredecessorFinite(f"{order.kind} in dimension {d}")

    def generate():
        if d == 1:
            for v in range(p[0]):
                yield (v,)
            return
        deg = sum(p)
        for s in range(deg + 1):
            for q in compositions(s, d):
                if s < deg or order.cmp(q, p) == LESS:
                    yield q

    return generate()


# ---------------------------------------------------------------------------
# Integer lattices (subgroups of Z^d) via row Hermite normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegerLattice:
    """Subgroup of Z^d stored as a row-HNF basis; rank = number of rows."""

    dimension: int
    basis: tuple[Point, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def _reduce_rows(rows: list[list[int]], ncols: int, transform: Optional[list[list[int]]]):
    """In-place row HNF; returns the rank. ``transform`` tracks row operations."""

    def combine(i, j, q):
        # row_i -= q * row_j
        ri, rj = rows[i], rows[j]
        for c in range(ncols):
            ri[c] -= q * rj[c]
        if transform is not None:
            ti, tj = transform[i], transform[j]
            for c in range(len(ti)):
                ti[c] -= q * tj[c]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        if transform is not None:
            transform[i], transform[j] = transform[j], transform[i]

    def negate(i):
        rows[i] = [-v for v in rows[i]]
        if transform is not None:
            transform[i] = [-v for v in transform[i]]

    m = len(rows)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][c]))
            swap(r, i0)
            done = True
            for i in range(r + 1, m):
                if rows[i][c] != 0:
                    combine(i, r, rows[i][c] // rows[r][c])
                    if rows[i][c] != 0:
                        done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            negate(r)
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                combine(i, r, q)
        r += 1
    return r


def hermite_normal_form(vectors: Sequence[Sequence[int]], dimension: int) -> tuple[Point, ...]:
    """Canonical row-HNF basis (nonzero rows, positive pivots, reduced above)."""
    rows = [list(v) for v in vectors]
    for v in rows:
        if len(v) != dimension:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {dimension}")
    rank = _reduce_rows(rows, dimension, None)
    return tuple(tuple(r) for r in rows[:rank])


def lattice_from(vectors: Sequence[Sequence[int]], dimension: Optional[int] = None) -> IntegerLattice:
    """The subgroup of Z^d spanned by the given vectors."""
    vectors = [tuple(v) for v in vectors]
    if dimension is None:
        if not vectors:
            raise ValueError("dimension required for an empty generating set")
        dimension = len(vectors[0])
    return IntegerLattice(dimension, hermite_normal_form(vectors, dimension))


def lattice_member(lattice: IntegerLattice, p: Sequence[int]) -> bool:
    """Decide p in L by successive reduction against the HNF rows."""
    if len(p) != lattice.dimension:
        raise DimensionMismatch(f"point of length {len(p)} in dimension {lattice.dimension}")
    res = list(p)
    for row in lattice.basis:
        c = next(i for i, v in enumerate(row) if v != 0)
        q, rem = divmod(res[c], row[c])
        if rem:
            return False
        for i in range(c, lattice.dimension):
            res[i] -= q * row[i]
    return all(v == 0 for v in res)


def lattice_intersect(l1: IntegerLattice, l2: IntegerLattice) -> IntegerLattice:
    """Intersection subgroup, via the left kernel of the stacked bases.

    A vector lies in both lattices iff it equals u*A = v*B for integer row
    vectors u, v, i.e. (u, v) is in the left kernel of rows(A) + rows(-B).
    """
    if l1.dimension != l2.dimension:
        raise DimensionMismatch(f"dimension {l1.dimension} vs {l2.dimension}")
    d = l1.dimension
    r1, r2 = l1.rank, l2.rank
    if r1 == 0 or r2 == 0:
        return IntegerLattice(d, ())
    stacked = [list(row) for row in l1.basis] + [[-v for v in row] for row in l2.basis]
    transform = [[1 if i == j else 0 for j in range(r1 + r2)] for i in range(r1 + r2)]
    rank = _reduce_rows(stacked, d, transform)
    gens = []
    for u in transform[rank:]:
        vec = [0] * d
        for coef, row in zip(u[:r1], l1.basis):
            for i in range(d):
                vec[i] += coef * row[i]
        gens.append(tuple(vec))
    return lattice_from(gens, d) if gens else IntegerLattice(d, ())
