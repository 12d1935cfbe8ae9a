import itertools
import random
from fractions import Fraction

import pytest

from supersplit.algebra import SuperPolynomial, SuperRing, Substitution, apply, render
from supersplit.errors import WeightError
from supersplit.models import (
    ModelSpec,
    chart_transition,
    check_all_cocycles,
    check_weight_preserving,
    cocycle_check,
    framed_coefficient_dim,
    linear_part,
    linear_substitution,
    product_model,
    segre_coordinate_map,
    segre_data,
    split_model,
)


def spec(m, b, a=None):
    return ModelSpec.create(m, len(b), a, b)


class TestSpec:
    def test_weight_length_checked(self):
        with pytest.raises(ValueError):
            ModelSpec.create(2, 2, b=(1,))

    def test_odd_dominates_even(self):
        assert spec(2, (1, 1)).eq43
        assert not spec(2, (1, 1), a=(1, 1, 2)).eq43
        assert spec(2, (2, 3), a=(1, 1, 2)).eq43

    def test_json(self):
        assert spec(1, (2, 5)).to_json() == {"m": 1, "n": 2, "a": [1, 1], "b": [2, 5]}


class TestSplitModel:
    def test_standard(self):
        d = split_model(spec(3, (1, 1, 1, 1)))
        assert d.reduced == "P^3" and d.odd_cotangent == (-1, -1, -1, -1)

    def test_weighted_odd(self):
        assert split_model(spec(1, (2, 5))).odd_cotangent == (-2, -5)

    def test_cubic_mirror_pattern(self):
        assert split_model(spec(6, (1, 2))).odd_cotangent == (-1, -2)

    def test_weighted_even(self):
        assert split_model(spec(2, (1,), a=(1, 1, 2))).reduced == "P^2(1,1,2)"


class TestCharts:
    def test_projective_line(self):
        t = chart_transition(spec(1, (1,)), 0, 1)
        assert [render(p) for p in t.even_images] == ["1", "x1^-1"]
        assert [render(p) for p in t.odd_images] == ["x1^-1*t1"]

    def test_weight_two_odd(self):
        t = chart_transition(spec(1, (2,)), 0, 1)
        assert render(t.odd_images[0]) == "x1^-2*t1"

    def test_same_chart_is_identity(self):
        assert chart_transition(spec(2, (1, 3)), 1, 1) == Substitution.identity(3, 2, laurent=True)

    def test_weighted_even_rejected(self):
        with pytest.raises(WeightError, match="unit even weights"):
            chart_transition(spec(2, (1,), a=(1, 1, 2)), 0, 1)

    def test_all_triples_standard(self):
        assert all(ok for _, ok in check_all_cocycles(spec(2, (1, 1))))

    def test_all_triples_weighted_odd(self):
        assert all(ok for _, ok in check_all_cocycles(spec(3, (1, 2))))

    def test_degenerate_triple(self):
        assert cocycle_check(spec(2, (1, 1)), 0, 0, 2)

    def test_transition_inverse(self):
        s = spec(2, (1, 2))
        there = chart_transition(s, 0, 2)
        back = chart_transition(s, 2, 0)
        f = SuperPolynomial(3, 2, {((0, 2, 1), (0,)): 3}, laurent=True)
        assert apply(back, apply(there, f)) == f


class TestProducts:
    def test_two_lines(self):
        p = product_model(spec(1, (1,)), spec(1, (1,)))
        assert p.twists == ((-1, 1), (-1, 2))
        assert p.reduced == "P^1 x P^1"

    def test_point_factor(self):
        x = spec(2, (1, 2))
        p = product_model(x, ModelSpec.create(0, 0))
        assert [t for t, _ in p.twists] == list(split_model(x).odd_cotangent)
        assert p.reduced == split_model(x).reduced

    def test_mirror_pair(self):
        assert len(product_model(spec(3, (1, 1, 1)), spec(3, (1, 1, 1))).twists) == 6


class TestSegre:
    def test_two_lines(self):
        d = segre_data(spec(1, (1,)), spec(1, (1,)))
        assert (d.m2, d.n2, d.b2) == (3, 4, (1, 1, 1, 1))

    def test_mirror_pair(self):
        d = segre_data(spec(3, (1, 1, 1)), spec(3, (1, 1, 1)))
        assert (d.m2, d.n2) == (15, 24) and set(d.b2) == {1}

    def test_weight_two(self):
        d = segre_data(spec(1, (2,)), spec(1, (2,)))
        assert (d.m2, d.n2, d.b2) == (3, 6, (2,) * 6)

    def test_unit_weight_count(self):
        for m, n, mp, np_ in itertools.product(range(1, 4), range(0, 3), range(1, 4), range(0, 3)):
            d = segre_data(ModelSpec.create(m, n), ModelSpec.create(mp, np_))
            assert d.n2 == n * (mp + 1) + np_ * (m + 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(WeightError):
            segre_data(spec(1, (0,)), spec(1, (1,)))
        with pytest.raises(WeightError):
            segre_data(spec(1, (1,), a=(1, 2)), spec(1, (1,)))

    def test_coordinate_map_two_lines(self):
        s = segre_coordinate_map(1, 1, 1, 1)
        assert [render(p) for p in s.even_images] == ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]
        assert [render(p) for p in s.odd_images] == ["x1*t2", "x2*t2", "x3*t1", "x4*t1"]

    def test_coordinate_map_points(self):
        s = segre_coordinate_map(0, 1, 0, 1)
        assert [render(p) for p in s.even_images] == ["x1*x2"]
        assert [render(p) for p in s.odd_images] == ["x1*t2", "x2*t1"]

    def test_classical_only(self):
        s = segre_coordinate_map(2, 0, 1, 0)
        assert len(s.even_images) == 6 and s.odd_images == ()

    @pytest.mark.parametrize("m, mp", [(1, 1), (2, 1), (2, 3)])
    def test_quadric_relations(self, m, mp):
        z = segre_coordinate_map(m, 1, mp, 2).even_images
        idx = lambda mu, nu: mu * (mp + 1) + nu  # noqa: E731
        for mu, rho in itertools.product(range(m + 1), repeat=2):
            for nu, sg in itertools.product(range(mp + 1), repeat=2):
                assert z[idx(mu, nu)] * z[idx(rho, sg)] == z[idx(mu, sg)] * z[idx(rho, nu)]


class TestAutomorphisms:
    def test_weighted_absorption_preserves_weight(self):
        s = spec(2, (1, 1), a=(1, 1, 2))
        R = SuperRing(3, 2)
        phi = R.identity().replace(even={2: R.x(2) - R.t(0) * R.t(1)})
        assert check_weight_preserving(s, phi)

    def test_weight_mismatch(self):
        R = SuperRing(3, 2)
        phi = R.identity().replace(even={0: R.x(0) + R.t(0) * R.t(1)})
        assert not check_weight_preserving(spec(2, (1, 1)), phi)

    def test_negative_weight_allows_more(self):
        R = SuperRing(3, 3)
        phi = R.identity().replace(even={0: R.x(0) + R.x(1) * R.t(0) * R.t(2)})
        assert check_weight_preserving(spec(2, (1, 1, -1)), phi)

    def test_zero_image_not_weight_preserving(self):
        R = SuperRing(2, 1)
        phi = R.identity().replace(odd={0: R.zero})
        assert not check_weight_preserving(spec(1, (1,)), phi)

    def test_framed_dimension_vanishes(self):
        assert framed_coefficient_dim(spec(2, (1, 1))) == 0
        assert framed_coefficient_dim(spec(3, (1, 1, 1, 1))) == 0

    def test_framed_dimension_negative_weight(self):
        # t1 t3 has weight 0, so x^mu -> x^mu + c x^nu t1 t3 etc. are allowed
        assert framed_coefficient_dim(spec(2, (1, 1, -1))) > 0

    def test_framed_dimension_heavy_odd_weight(self):
        # t4 -> t4 + c t1 t2 t3 preserves weight when b4 = b1 + b2 + b3
        assert framed_coefficient_dim(spec(2, (1, 1, 1, 3))) == 1

    def test_identity_linear_part(self):
        s = spec(1, (1, 1, 1))
        A = linear_part(s, Substitution.identity(2, 3))
        assert A == [[1 if i == j else 0 for j in range(3)] for i in range(3)]

    def test_linear_round_trip(self):
        rng = random.Random(7)
        for d in (1, 2, 3):
            s = spec(1, (d, d, d))
            A = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)]
            phi = linear_substitution(s, A)
            assert check_weight_preserving(s, phi)
            assert linear_part(s, phi) == A

    def test_cross_weight_rejected(self):
        s = spec(1, (1, 2))
        R = SuperRing(2, 2)
        phi = R.identity().replace(odd={0: R.t(1)})
        with pytest.raises(WeightError, match="t1"):
            linear_part(s, phi)

    def test_block_entries_checked(self):
        # weight preserving, but the coefficient of t1 in t2's image is not constant
        s = spec(1, (1, 2))
        R = SuperRing(2, 2)
        phi = R.identity().replace(odd={1: R.t(1) + R.x(0) * R.t(0)})
        assert check_weight_preserving(s, phi)
        with pytest.raises(WeightError, match="not constant"):
            linear_part(s, phi)

    def test_even_part_must_be_identity(self):
        s = spec(1, (1, 1))
        R = SuperRing(2, 2)
        phi = R.identity().replace(even={0: R.x(1)})
        with pytest.raises(WeightError, match="x1"):
            linear_part(s, phi)
