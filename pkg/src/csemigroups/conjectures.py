"""Wilf-inequality reports and the Buchsbaum gap test.

The Wilf report counts the members strictly preceding the Frobenius element
under a predecessor-finite term order and checks

    sporadic * embedding_dimension >= genus + sporadic + 1.

The Buchsbaum test compares the pseudo-Frobenius set with the set of gaps
(inside the group generated by S) that land in S after adding twice either
of two distinct extremal rays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import lattice
from .errors import DimensionOne, EmptyGapSet, NotFullCone, OrderNotPredecessorFinite
from .frobenius import frobenius_element, pseudo_frobenius
from .gapsemigroup import GapSemigroup
from .lattice import (
    GRLEX,
    Point,
    TermOrder,
    enumerate_preceding,
    lattice_from,
    lattice_member,
)


@dataclass(frozen=True)
class WilfReport:
    embedding_dimension: int
    genus: int
    sporadic: int
    n_frobenius: int
    holds: bool
    frobenius: Point

    def to_json(self) -> dict:
        return {
            "embedding_dimension": self.embedding_dimension,
            "genus": self.genus,
            "sporadic": self.sporadic,
            "n_frobenius": self.n_frobenius,
            "holds": self.holds,
            "frobenius": list(self.frobenius),
        }


def wilf_report(gs: GapSemigroup, order: TermOrder = GRLEX) -> WilfReport:
    """Count sporadic members by degree shells and evaluate the inequality."""
    if not gs.gaps:
        raise EmptyGapSet("the Wilf report needs at least one gap")
    if not order.is_predecessor_finite(gs.dimension):
        raise OrderNotPredecessorFinite(f"{order.kind} in dimension {gs.dimension}")
    F = frobenius_element(gs, order)
    sporadic = sum(1 for q in enumerate_preceding(order, F) if gs.contains(q))
    e = len(gs.hilbert_basis)
    n_frobenius = gs.genus + sporadic
    return WilfReport(
        embedding_dimension=e,
        genus=gs.genus,
        sporadic=sporadic,
        n_frobenius=n_frobenius,
        holds=sporadic * e >= n_frobenius + 1,
        frobenius=F,
    )


@dataclass(frozen=True)
class BuchsbaumReport:
    d_set: tuple[Point, ...]
    pf: tuple[Point, ...]
    is_buchsbaum: bool
    extremal_rays: tuple[Point, ...]

    def to_json(self) -> dict:
        return {
            "d_set": [list(p) for p in self.d_set],
            "pf": [list(p) for p in self.pf],
            "is_buchsbaum": self.is_buchsbaum,
            "extremal_rays": [list(p) for p in self.extremal_rays],
        }


def _extremal_rays(gs: GapSemigroup) -> tuple[Point, ...]:
    """Minimal pure axis multiples in the Hilbert basis, one per axis.

    A cofinite submonoid of N^d contains large multiples of every axis, and
    the least one per axis is indecomposable, so these always exist here.
    """
    rays = [None] * gs.dimension
    for b in gs.hilbert_basis:
        support = [i for i, v in enumerate(b) if v != 0]
        if len(support) == 1:
            i = support[0]
            if rays[i] is None or b[i] < rays[i][i]:
                rays[i] = b
    for i, r in enumerate(rays):
        if r is None:
            raise NotFullCone(i)
    return tuple(rays)


def buchsbaum_report(gs: GapSemigroup) -> BuchsbaumReport:
    """Test whether the doubled-ray translate set equals the PF set.

    A candidate gap g qualifies when it lies in the group generated by S and
    g + 2r_i and g + 2r_j are members for two distinct rays. Restricting
    candidates to gaps is sound: the two shift conditions force every
    coordinate of a qualifying group element to be nonnegative, and members
    are excluded by definition.
    """
    if gs.dimension < 2:
        raise DimensionOne("the Buchsbaum test needs ambient dimension >= 2")
    if not gs.gaps:
        raise EmptyGapSet("the Buchsbaum test needs at least one gap")
    rays = _extremal_rays(gs)
    group = lattice_from(gs.hilbert_basis, gs.dimension)
    doubled = [lattice.scale(2, r) for r in rays]
    d_set = []
    for g in sorted(gs.gaps, key=GRLEX.key):
        if not lattice_member(group, g):
            continue
        shifted_in = [gs.contains(lattice.add(g, t)) for t in doubled]
        if any(
            shifted_in[i] and shifted_in[j]
            for i, j in itertools.combinations(range(len(rays)), 2)
        ):
            d_set.append(g)
    pf = pseudo_frobenius(gs)
    return BuchsbaumReport(
        d_set=tuple(d_set),
        pf=pf,
        is_buchsbaum=tuple(d_set) == pf,
        extremal_rays=rays,
    )
