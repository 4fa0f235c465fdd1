"""Pseudo-Frobenius analytics on finite-gap semigroups.

Covers the pseudo-Frobenius set and Betti-type, the term-order Frobenius
element, gap cover certificates, the ideal-quotient route to the same set,
Apery sets for finite witness sets, the symmetry classifier, and the
gap-count identity used by the Wilf report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import lattice
from .errors import (
    DimensionMismatch,
    EmptyGapSet,
    IdealBaseMismatch,
    InfiniteApery,
    NotNatural,
)
from .gapsemigroup import GapSemigroup
from .lattice import GRLEX, Point, TermOrder


def _sorted_points(points) -> tuple[Point, ...]:
    return tuple(sorted(points, key=GRLEX.key))


def pseudo_frobenius(gs: GapSemigroup) -> tuple[Point, ...]:
    """Gaps f with f + a in S for every Hilbert-basis element a.

    Checking the basis suffices: any nonzero member is a basis element plus a
    member, and S is closed under addition.
    """
    basis = gs.hilbert_basis
    return _sorted_points(
        f for f in gs.gaps if all(gs.contains(lattice.add(f, a)) for a in basis)
    )


def betti_type(gs: GapSemigroup) -> int:
    return len(pseudo_frobenius(gs))


def frobenius_element(gs: GapSemigroup, order: TermOrder = GRLEX) -> Point:
    """The order-maximum gap; exists whenever the gap set is nonempty."""
    if not gs.gaps:
        raise EmptyGapSet("no gaps, so no Frobenius element")
    return order.max(gs.gaps)


def cover_witness(gs: GapSemigroup, x: Sequence[int]) -> Optional[Point]:
    """For a gap x, some pseudo-Frobenius f with f - x in S; None for members."""
    x = tuple(x)
    if not lattice.is_natural(x):
        raise NotNatural(x)
    if gs.contains(x):
        return None
    for f in pseudo_frobenius(gs):
        diff = lattice.sub(f, x)
        if lattice.is_natural(diff) and gs.contains(diff):
            return f
    return None


def omega_extra(gs: GapSemigroup, order: TermOrder = GRLEX) -> tuple[Point, ...]:
    """The non-member part of the ideal {z : F - z not in S}.

    Every member z belongs to that ideal (else F would be a member), so the
    ideal is S plus exactly these gaps; points with F - z outside N^d count
    as F - z not in S.
    """
    F = frobenius_element(gs, order)
    out = []
    for g in gs.gaps:
        diff = lattice.sub(F, g)
        if not (lattice.is_natural(diff) and gs.contains(diff)):
            out.append(g)
    return _sorted_points(out)


@dataclass(frozen=True)
class FrobeniusReport:
    """Classification of a finite-gap semigroup under one term order."""

    pf: tuple[Point, ...]
    betti_type: int
    frobenius: Point
    pf_prime: tuple[Point, ...]
    omega_extra: tuple[Point, ...]
    symmetric: bool
    pseudo_symmetric: bool
    almost_symmetric: bool
    irreducible: bool
    # Whether every f in pf_prime is coordinatewise below the Frobenius
    # element; the converse classification results assume it, so it is
    # reported instead of guessed.
    pf_prime_dominated: bool

    def to_json(self) -> dict:
        return {
            "pf": [list(p) for p in self.pf],
            "betti_type": self.betti_type,
            "frobenius": list(self.frobenius),
            "pf_prime": [list(p) for p in self.pf_prime],
            "omega_extra": [list(p) for p in self.omega_extra],
            "classification": {
                "symmetric": self.symmetric,
                "pseudo_symmetric": self.pseudo_symmetric,
                "almost_symmetric": self.almost_symmetric,
                "irreducible": self.irreducible,
                "pf_prime_dominated": self.pf_prime_dominated,
            },
        }


def classify(gs: GapSemigroup, order: TermOrder = GRLEX) -> FrobeniusReport:
    """Symmetry flags from the pseudo-Frobenius set and the Frobenius element.

    symmetric: PF = {F}. pseudo-symmetric: PF = {F, F/2} with F/2 a lattice
    point. almost symmetric: PF' nonempty and closed under g -> F - g.
    irreducible: symmetric or pseudo-symmetric. The symmetric case has empty
    PF', so it is deliberately not counted as almost symmetric.
    """
    pf = pseudo_frobenius(gs)
    F = frobenius_element(gs, order)
    pf_prime = tuple(p for p in pf if p != F)
    prime_set = set(pf_prime)
    symmetric = pf == (F,)
    half = tuple(v // 2 for v in F) if all(v % 2 == 0 for v in F) else None
    pseudo_symmetric = half is not None and set(pf) == {F, half}
    almost = bool(pf_prime) and all(lattice.sub(F, g) in prime_set for g in pf_prime)
    return FrobeniusReport(
        pf=pf,
        betti_type=len(pf),
        frobenius=F,
        pf_prime=pf_prime,
        omega_extra=omega_extra(gs, order),
        symmetric=symmetric,
        pseudo_symmetric=pseudo_symmetric,
        almost_symmetric=almost,
        irreducible=symmetric or pseudo_symmetric,
        pf_prime_dominated=all(lattice.partial_leq(f, F) for f in pf_prime),
    )


def apery(gs: GapSemigroup, witnesses: Sequence[Sequence[int]]) -> tuple[Point, ...]:
    """Members b with b - a outside S for every a in the witness set E.

    Finiteness holds iff every axis j carries a pure positive multiple in E:
    such a multiple m_j * e_j forces b_j < m_j or b - m_j*e_j to be a gap, so
    b_j < max(a_j) + conductor_j; without one, members far along axis j stay
    in the set. The criterion is checked first and the finite case is a box
    scan under that exclusive bound.
    """
    E = [tuple(a) for a in witnesses]
    if not E:
        raise ValueError("the witness set must be nonempty")
    d = gs.dimension
    for a in E:
        if len(a) != d:
            raise DimensionMismatch(f"witness {a} in dimension {d}")
        if lattice.is_zero(a) or not gs.contains(a):
            raise ValueError(f"witness {a} is not a nonzero member")
    for j in range(d):
        if not any(a[j] > 0 and all(v == 0 for i, v in enumerate(a) if i != j) for a in E):
            raise InfiniteApery(j)
    hi = tuple(max(a[j] for a in E) + gs.conductor[j] - 1 for j in range(d))
    out = []
    for b in lattice.enumerate_box(lattice.zero(d), hi):
        if not gs.contains(b):
            continue
        if all(
            not (lattice.is_natural(diff := lattice.sub(b, a)) and gs.contains(diff))
            for a in E
        ):
            out.append(b)
    return _sorted_points(out)


@dataclass(frozen=True)
class RelativeIdeal:
    """Ideal of a finite-gap semigroup, generated by finitely many points.

    The ideal is the union of generator + S over its generators, so
    membership reduces to one subtraction per generator.
    """

    base: GapSemigroup
    generators: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", _sorted_points(self.generators))
        for g in self.generators:
            if len(g) != self.base.dimension:
                raise DimensionMismatch(f"ideal generator {g}")
            if not lattice.is_natural(g):
                raise ValueError(f"ideal generator {g} is outside N^d")

    def contains(self, z: Sequence[int]) -> bool:
        z = tuple(z)
        if not lattice.is_natural(z):
            return False
        for g in self.generators:
            diff = lattice.sub(z, g)
            if lattice.is_natural(diff) and self.base.contains(diff):
                return True
        return False


def ideal_difference_member(ideal: RelativeIdeal, other: RelativeIdeal, z: Sequence[int]) -> bool:
    """Decide z in (I - J), i.e. z + J inside I.

    Because I is closed under adding members of S and J is the union of
    g + S over its generators, z + J lies in I iff z + g does for each
    generator g of J.
    """
    if ideal.base is not other.base and ideal.base != other.base:
        raise IdealBaseMismatch("ideal difference needs ideals over the same base")
    z = tuple(z)
    if not lattice.is_natural(z):
        return False
    return all(ideal.contains(lattice.add(z, g)) for g in other.generators)


def pf_via_ideal(gs: GapSemigroup) -> tuple[Point, ...]:
    """The pseudo-Frobenius set computed as (S - S*) minus S.

    S is the ideal generated by 0 and S* the ideal generated by the Hilbert
    basis. Any point of (S - S*) outside S is a gap, so gaps are the only
    candidates to test.
    """
    if not gs.gaps:
        return ()
    s_ideal = RelativeIdeal(gs, (lattice.zero(gs.dimension),))
    star = RelativeIdeal(gs, gs.hilbert_basis)
    return _sorted_points(
        g for g in gs.gaps if ideal_difference_member(s_ideal, star, g)
    )


def cardinality_identity(gs: GapSemigroup, order: TermOrder = GRLEX) -> tuple[int, int]:
    """(gaps outside PF', members coordinatewise below F) as a countable pair."""
    F = frobenius_element(gs, order)
    pf_prime = classify(gs, order).pf_prime  # always a subset of the gaps
    lhs = gs.genus - len(pf_prime)
    rhs = sum(
        1
        for p in lattice.enumerate_box(lattice.zero(gs.dimension), F)
        if gs.contains(p)
    )
    return lhs, rhs
