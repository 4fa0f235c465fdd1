"""Shared fixtures: worked example semigroups and independent oracles.

The oracles here deliberately avoid the library's own algorithms: membership
is forward closure from zero, gap sets come from window scans over that
closure, and Arf witnesses are searched by raw triple loops.
"""

import functools
import itertools

import pytest

from csemigroups import AffineSemigroup, from_generators

# Worked example generator lists used across the suite.
GENS_S2 = [(0, 1), (3, 0), (4, 0), (1, 4), (5, 0), (2, 7)]
GENS_S3 = [(1, 0), (1, 1), (1, 2), (0, 3), (0, 4), (0, 5)]
GENS_S4 = [(0, 1), (3, 0), (4, 0), (1, 5), (5, 0), (2, 9)]
GENS_S5 = [(0, 1), (4, 0), (5, 0), (6, 0), (7, 0), (1, 4), (2, 7), (3, 10)]
GENS_ARF = [(0, 1), (3, 0), (5, 0), (1, 3), (2, 3)]
GENS_PI = [(6, 12), (8, 16), (9, 18), (10, 20), (11, 22), (13, 26)]
GENS_SAP31 = [(3, 0), (0, 3), (5, 2), (2, 5)]

ALL_PAPER_GENS = {
    "s2": GENS_S2,
    "s3": GENS_S3,
    "s4": GENS_S4,
    "s5": GENS_S5,
    "arf77": GENS_ARF,
    "pi": GENS_PI,
    "sap31": GENS_SAP31,
}


def closure_in_box(gens, hi):
    """Forward-closure membership oracle: all generator sums inside [0, hi]."""
    d = len(hi)
    members = {(0,) * d}
    frontier = [(0,) * d]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(a + b for a, b in zip(p, g))
                if all(x <= h for x, h in zip(q, hi)) and q not in members:
                    members.add(q)
                    nxt.append(q)
        frontier = nxt
    return members


def box_points(hi):
    return itertools.product(*[range(h + 1) for h in hi])


def arf_violation(member, window):
    """Raw triple scan: a chain x <= y <= z of members with y+z-x outside."""
    pts = [p for p in box_points(window) if member(p)]
    for x in pts:
        for y in pts:
            if not all(a <= b for a, b in zip(x, y)):
                continue
            for z in pts:
                if not all(a <= b for a, b in zip(y, z)):
                    continue
                v = tuple(yi + zi - xi for xi, yi, zi in zip(x, y, z))
                if not member(v):
                    return (x, y, z)
    return None


@functools.lru_cache(maxsize=None)
def gap_universe(bound):
    """All complement-closed gap sets inside the box [0, bound], as bitmasks.

    Returns (points, valid_masks): ``points`` indexes the nonzero box points
    and ``valid_masks`` lists every subset whose complement is a monoid. A
    subset is valid iff each of its gaps has, in every split into two
    nonzero parts, at least one part inside the subset.
    """
    points = sorted(p for p in box_points(bound) if any(p))
    index = {p: i for i, p in enumerate(points)}
    pair_table = []
    for g in points:
        pairs = []
        for x in box_points(g):
            if x == (0,) * len(g) or x == g:
                continue
            y = tuple(a - b for a, b in zip(g, x))
            if index[x] <= index[y]:
                pairs.append((index[x], index[y]))
        pair_table.append(pairs)
    valid = []
    for mask in range(1 << len(points)):
        ok = True
        probe = mask
        while probe and ok:
            i = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            for j, k in pair_table[i]:
                if not (mask >> j & 1 or mask >> k & 1):
                    ok = False
                    break
        if ok:
            valid.append(mask)
    return tuple(points), tuple(valid)


def mask_to_points(points, mask):
    return frozenset(p for i, p in enumerate(points) if mask >> i & 1)


@pytest.fixture(scope="session")
def s2():
    return from_generators(AffineSemigroup(2, GENS_S2))


@pytest.fixture(scope="session")
def s3():
    return from_generators(AffineSemigroup(2, GENS_S3))


@pytest.fixture(scope="session")
def s4():
    return from_generators(AffineSemigroup(2, GENS_S4))


@pytest.fixture(scope="session")
def s5():
    return from_generators(AffineSemigroup(2, GENS_S5))


@pytest.fixture(scope="session")
def s77():
    return from_generators(AffineSemigroup(2, GENS_ARF))
