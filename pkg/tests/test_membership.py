import random

import pytest

from conftest import ALL_PAPER_GENS, GENS_PI, GENS_S2, GENS_S5, GENS_SAP31, closure_in_box, box_points
from csemigroups.errors import BudgetExceeded, DimensionOne
from csemigroups.membership import (
    AffineSemigroup,
    minimalize,
    multiplicity,
    slice_decomposition,
)


class TestIsMember:
    def test_family_delta_element_outside(self):
        sem = AffineSemigroup(2, GENS_SAP31)
        assert not sem.is_member((7, 4))
        # independent route: exhaustive combination search inside the box
        assert (7, 4) not in closure_in_box(GENS_SAP31, (7, 4))

    def test_zero_is_identity(self):
        for gens in ALL_PAPER_GENS.values():
            assert AffineSemigroup(len(gens[0]), gens).is_member((0,) * len(gens[0]))

    def test_pf_element_outside_generator_inside(self):
        sem = AffineSemigroup(2, GENS_S2)
        assert not sem.is_member((2, 6))
        assert sem.is_member((2, 7))

    def test_negative_coordinates(self):
        sem = AffineSemigroup(2, GENS_S2)
        assert not sem.is_member((-1, 0))

    def test_contains_operator(self):
        sem = AffineSemigroup(2, GENS_S2)
        assert (3, 0) in sem and (1, 0) not in sem

    @pytest.mark.parametrize("name", sorted(ALL_PAPER_GENS))
    def test_agrees_with_forward_closure(self, name):
        gens = ALL_PAPER_GENS[name]
        sem = AffineSemigroup(2, gens)
        window = (12, 12)
        # forward closure needs headroom so box-boundary points are reached
        oracle = closure_in_box(gens, (40, 40))
        for p in box_points(window):
            assert sem.is_member(p) == (p in oracle), p

    def test_additivity(self):
        rng = random.Random(3)
        sem = AffineSemigroup(2, GENS_S5)
        members = [p for p in box_points((14, 14)) if sem.is_member(p)]
        for _ in range(200):
            p, q = rng.choice(members), rng.choice(members)
            assert sem.is_member(tuple(a + b for a, b in zip(p, q)))

    def test_rejects_zero_generator(self):
        with pytest.raises(ValueError):
            AffineSemigroup(2, [(0, 0), (1, 0)])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            AffineSemigroup(2, [])


class TestMinimalize:
    def test_drops_decomposable(self):
        sem = minimalize([(1, 0), (2, 0), (0, 1)])
        assert sem.generators == ((0, 1), (1, 0))

    def test_worked_eight_generator_list_is_minimal(self):
        sem = minimalize(GENS_S5)
        assert set(sem.generators) == set(GENS_S5)
        assert len(sem.generators) == 8

    def test_ray_pair_is_minimal(self):
        sem = minimalize([(2, 4), (3, 6)])
        assert set(sem.generators) == {(2, 4), (3, 6)}

    def test_duplicates_collapse(self):
        sem = minimalize([(1, 1), (1, 1), (2, 2)])
        assert sem.generators == ((1, 1),)

    def test_order_independent(self):
        gens = [(4,), (6,), (9,), (10,), (13,), (15,)]
        rng = random.Random(5)
        reference = minimalize(gens).generators
        for _ in range(5):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert minimalize(shuffled).generators == reference

    @pytest.mark.parametrize("name", sorted(ALL_PAPER_GENS))
    def test_no_minimal_generator_splits(self, name):
        sem = minimalize(ALL_PAPER_GENS[name])
        for g in sem.generators:
            for x in box_points(g):
                if x == (0,) * sem.dimension or x == g:
                    continue
                rest = tuple(a - b for a, b in zip(g, x))
                assert not (sem.is_member(x) and sem.is_member(rest)), (g, x)


class TestMultiplicity:
    def test_ray_semigroup(self):
        m, attained = multiplicity(AffineSemigroup(2, GENS_PI))
        assert m == (6, 12) and attained

    def test_axes_infimum_not_attained(self):
        m, attained = multiplicity(AffineSemigroup(2, [(1, 0), (0, 1)]))
        assert m == (0, 0) and not attained

    def test_numerical(self):
        m, attained = multiplicity(AffineSemigroup(1, [(4,), (6,), (9,)]))
        assert m == (4,) and attained

    def test_lower_bound_on_members(self):
        sem = AffineSemigroup(2, GENS_PI)
        m, _ = multiplicity(sem)
        members = [p for p in box_points((30, 30)) if p != (0, 0) and sem.is_member(p)]
        assert members
        for p in members:
            assert all(a >= b for a, b in zip(p, m))


class TestSliceDecomposition:
    def test_level_one_single_shift(self):
        dec = slice_decomposition(AffineSemigroup(2, GENS_S2), 0, 1)
        assert dec.shifts == ((4,),)
        assert dec.face.generators == ((1,),)

    def test_level_zero_is_face(self):
        dec = slice_decomposition(AffineSemigroup(2, GENS_S2), 0, 0)
        assert dec.shifts == ((0,),)

    def test_level_two_shifts(self):
        dec = slice_decomposition(AffineSemigroup(2, GENS_S2), 0, 2)
        assert dec.shifts == ((7,), (8,))

    def test_empty_when_unreachable(self):
        dec = slice_decomposition(AffineSemigroup(2, [(3, 0), (0, 1)]), 0, 2)
        assert dec.shifts == ()

    def test_dimension_one_rejected(self):
        with pytest.raises(DimensionOne):
            slice_decomposition(AffineSemigroup(1, [(2,), (3,)]), 0, 1)

    def test_budget(self):
        sem = AffineSemigroup(2, [(1, 0), (1, 1), (1, 2), (0, 1)])
        with pytest.raises(BudgetExceeded):
            slice_decomposition(sem, 0, 40, budget=10)

    @pytest.mark.parametrize("axis,level", [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (1, 7)])
    def test_union_reproduces_column(self, axis, level):
        sem = AffineSemigroup(2, GENS_S2)
        dec = slice_decomposition(sem, axis, level)

        def in_union(y):
            for s in dec.shifts:
                rest = tuple(a - b for a, b in zip(y, s))
                if all(v >= 0 for v in rest):
                    if dec.face is None:
                        if all(v == 0 for v in rest):
                            return True
                    elif dec.face.is_member(rest):
                        return True
            return False

        for w in range(25):
            point = (level, w) if axis == 0 else (w, level)
            assert sem.is_member(point) == in_union((w,)), point
