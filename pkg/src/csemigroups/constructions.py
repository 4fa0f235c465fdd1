"""Gluings and parametric families.

Provides gluing validation with the pseudo-Frobenius product formula, the
two-parameter four-generator family with its certified pseudo-Frobenius
subset, windowed Apery verification for that family, the glued extension of
the family to every embedding dimension >= 4, and scaled numerical
semigroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

from . import lattice
from .errors import BadParams, DimensionMismatch, EmptyPF, NotAGluing, NotMinimal
from .frobenius import pseudo_frobenius
from .gapsemigroup import from_generators
from .lattice import GRLEX, Point, lattice_from, lattice_intersect
from .membership import AffineSemigroup, minimalize


@dataclass(frozen=True)
class GluingSpec:
    """Two semigroups in the same N^d and the proposed gluing element."""

    s1: AffineSemigroup
    s2: AffineSemigroup
    s: Point

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        if self.s1.dimension != self.s2.dimension or len(self.s) != self.s1.dimension:
            raise DimensionMismatch("gluing inputs must share one ambient dimension")


def glue(spec: GluingSpec) -> AffineSemigroup:
    """Validate the gluing conditions and return the union-generated semigroup.

    The element s must belong to both factors, and the groups they generate
    must intersect in exactly the multiples of s (rank-1 lattice whose
    canonical basis vector is s itself).
    """
    if not spec.s1.is_member(spec.s):
        raise NotAGluing("sNotInS1")
    if not spec.s2.is_member(spec.s):
        raise NotAGluing("sNotInS2")
    meet = lattice_intersect(
        lattice_from(spec.s1.generators, spec.s1.dimension),
        lattice_from(spec.s2.generators, spec.s2.dimension),
    )
    if meet.rank != 1:
        raise NotAGluing("LatticeRankNot1")
    if meet.basis[0] != spec.s:
        raise NotAGluing("LatticeGeneratorMismatch")
    return minimalize(spec.s1.generators + spec.s2.generators, spec.s1.dimension)


class GluedPF(NamedTuple):
    points: tuple[Point, ...]
    collisions: int


def glued_pf(pf1: Sequence[Sequence[int]], pf2: Sequence[Sequence[int]], s: Sequence[int]) -> GluedPF:
    """Pseudo-Frobenius set of a gluing: all sums f + g + s over the factors.

    The cardinality is the product of the factor cardinalities unless sums
    collide; the collision count is reported alongside.
    """
    pf1 = [tuple(f) for f in pf1]
    pf2 = [tuple(g) for g in pf2]
    if not pf1:
        raise EmptyPF(1)
    if not pf2:
        raise EmptyPF(2)
    s = tuple(s)
    sums = {lattice.add(lattice.add(f, g), s) for f in pf1 for g in pf2}
    return GluedPF(
        points=tuple(sorted(sums, key=GRLEX.key)),
        collisions=len(pf1) * len(pf2) - len(sums),
    )


def _check_family_params(a: int, p: int) -> None:
    if a < 3 or a % 2 == 0 or p < 1:
        raise BadParams(f"need odd a >= 3 and p >= 1, got a={a}, p={p}")


def _family_generators(a: int, p: int) -> list[Point]:
    q = a**p
    return [(a, 0), (0, q), (a + 2, 2), (2, 2 + q)]


def family_sap(a: int, p: int) -> AffineSemigroup:
    """The four-generator plane semigroup with parameters (a, p), a odd >= 3."""
    _check_family_params(a, p)
    return AffineSemigroup(2, _family_generators(a, p))


def delta_set(a: int, p: int) -> tuple[Point, ...]:
    """The a^p - 1 certified pseudo-Frobenius elements of the (a, p) family."""
    _check_family_params(a, p)
    q = a**p
    return tuple(
        (q * (a + 2) - (l + 2) * a - 2, q * (l + 2) - 2) for l in range(q - 1)
    )


class DeltaWitness(NamedTuple):
    element: Point
    outside: bool
    shifts_inside: tuple[bool, bool, bool, bool]
    closed_forms_match: bool


class DeltaVerification(NamedTuple):
    ok: bool
    witnesses: tuple[DeltaWitness, ...]


def verify_delta_pf(a: int, p: int) -> DeltaVerification:
    """Check each family element of the certified set pointwise.

    For each candidate f: f itself is outside the semigroup, f plus every
    generator is inside, and the four closed-form representations of those
    shifts hold as integer identities:

        f + (a,0)       = (a^p-l-1)(a+2,2) + l(2,a^p+2)
        f + (0,a^p)     = (a^p-l-2)(a+2,2) + (l+1)(2,a^p+2)
        f + (a+2,2)     = (a^{p-1}(a+2)-l-1)(a,0) + (l+2)(0,a^p)
        f + (2,2+a^p)   = (a^{p-1}(a+2)-l-2)(a,0) + (l+3)(0,a^p)
    """
    sem = family_sap(a, p)
    q = a**p
    r = a ** (p - 1) * (a + 2)
    g1, g2, g3, g4 = _family_generators(a, p)
    witnesses = []
    for l, f in enumerate(delta_set(a, p)):
        outside = not sem.is_member(f)
        shifts = tuple(sem.is_member(lattice.add(f, g)) for g in (g1, g2, g3, g4))
        forms = (
            lattice.add(f, g1)
            == lattice.add(lattice.scale(q - l - 1, g3), lattice.scale(l, g4)),
            lattice.add(f, g2)
            == lattice.add(lattice.scale(q - l - 2, g3), lattice.scale(l + 1, g4)),
            lattice.add(f, g3)
            == lattice.add(lattice.scale(r - l - 1, g1), lattice.scale(l + 2, g2)),
            lattice.add(f, g4)
            == lattice.add(lattice.scale(r - l - 2, g1), lattice.scale(l + 3, g2)),
        )
        witnesses.append(DeltaWitness(f, outside, shifts, all(forms)))
    ok = all(w.outside and all(w.shifts_inside) and w.closed_forms_match for w in witnesses)
    return DeltaVerification(ok, tuple(witnesses))


class AperyWindowReport(NamedTuple):
    formula_side: tuple[Point, ...]
    window_scan: tuple[Point, ...]
    consistent: bool


def apery_sap_window(a: int, p: int, window: Sequence[int]) -> AperyWindowReport:
    """Compare the closed-form Apery set of the axis pair with a window scan.

    formula_side lists every combination alpha*(a+2,2) + alpha'*(2,2+a^p)
    with alpha + alpha' < a^p; each is verified to be a member whose two
    axis-differences leave the semigroup. window_scan lists every point
    below ``window`` satisfying the Apery condition directly. The two agree
    inside the window; the formula side may extend beyond it.
    """
    sem = family_sap(a, p)
    window = tuple(window)
    if len(window) != 2:
        raise DimensionMismatch("window must be a plane point")
    q = a**p
    g1, g2, g3, g4 = _family_generators(a, p)

    def is_apery(b: Point) -> bool:
        if not sem.is_member(b):
            return False
        for axis_gen in (g1, g2):
            diff = lattice.sub(b, axis_gen)
            if lattice.is_natural(diff) and sem.is_member(diff):
                return False
        return True

    formula = []
    formula_verified = True
    for alpha in range(q):
        for alpha2 in range(q - alpha):
            b = lattice.add(lattice.scale(alpha, g3), lattice.scale(alpha2, g4))
            formula.append(b)
            if not is_apery(b):
                formula_verified = False
    formula_set = set(formula)
    scan = [
        b
        for b in lattice.enumerate_box((0, 0), window)
        if is_apery(b)
    ]
    consistent = formula_verified and all(b in formula_set for b in scan)
    return AperyWindowReport(
        formula_side=tuple(sorted(formula_set, key=GRLEX.key)),
        window_scan=tuple(sorted(scan, key=GRLEX.key)),
        consistent=consistent,
    )


class SapsFamily(NamedTuple):
    semigroup: AffineSemigroup
    pf_lower_bound: int
    mu: int
    nu: int
    gluing_element: Point


def family_saps(a: int, p: int, numerical_gens: Sequence[int]) -> SapsFamily:
    """Glued family member of embedding dimension len(numerical_gens) + 4.

    Scales the (a, p) family by mu = sum of the numerical generators and
    adjoins the numerical semigroup pushed onto the ray through (a, a^p).
    The gluing conditions are verified, not assumed. The certified
    pseudo-Frobenius lower bound is nu * (a^p - 1) where nu counts the
    pseudo-Frobenius elements of the numerical factor.
    """
    _check_family_params(a, p)
    ngens = sorted({int(n) for n in numerical_gens})
    if not ngens or ngens[0] < 1:
        raise BadParams("numerical generators must be positive integers")
    g = 0
    for n in ngens:
        g = gcd(g, n)
    if g != 1:
        raise BadParams(f"numerical generators must have gcd 1, got {g}")
    minimal = minimalize([(n,) for n in ngens], 1)
    if len(minimal.generators) != len(ngens):
        raise NotMinimal(f"{ngens} is not a minimal generating set")
    q = a**p
    mu = sum(ngens)
    ray = (a, q)
    scaled_family = AffineSemigroup(2, [lattice.scale(mu, v) for v in _family_generators(a, p)])
    scaled_numerical = AffineSemigroup(2, [lattice.scale(n, ray) for n in ngens])
    s = lattice.scale(mu, ray)
    glued = glue(GluingSpec(scaled_family, scaled_numerical, s))
    if len(glued.generators) != len(ngens) + 4:
        raise RuntimeError(
            f"glued family has embedding dimension {len(glued.generators)},"
            f" expected {len(ngens) + 4}"
        )
    nu = len(pseudo_frobenius(from_generators([(n,) for n in ngens])))
    return SapsFamily(
        semigroup=glued,
        pf_lower_bound=nu * (q - 1),
        mu=mu,
        nu=nu,
        gluing_element=s,
    )


def scale_numerical(numerical_gens: Sequence[int], a: Sequence[int]) -> AffineSemigroup:
    """Push a numerical semigroup onto the ray through a: generators n_i * a."""
    a = tuple(a)
    if lattice.is_zero(a) or not lattice.is_natural(a):
        raise ValueError("the ray vector must be a nonzero point of N^d")
    gens = [lattice.scale(int(n), a) for n in numerical_gens]
    return AffineSemigroup(len(a), gens)
