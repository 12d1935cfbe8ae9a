import pytest

from supersplit.cohomology import (
    binom,
    cohomology_table,
    h_line,
    h_omega,
    h_tangent,
    normal_section_h0,
    normality_certificate,
    obstruction_decomposition,
    quadric_normal_h0,
)

from oracles import euler_characteristic_polynomial, h_line_oracle, h_omega1_oracle, h_tangent_oracle


def test_binom_outside_range():
    assert binom(3, 5) == 0
    assert binom(-1, 2) == 0
    assert binom(5, 2) == 10


class TestLineBundles:
    def test_constants(self):
        assert h_line(1, 0, 0) == 1

    def test_top_cohomology(self):
        assert h_line(2, 2, -3) == 1

    def test_cubics_in_four_variables(self):
        assert h_line(3, 0, 2) == 10

    def test_middle_vanishes(self):
        assert all(h_line(4, q, k) == 0 for q in (1, 2, 3) for k in range(-8, 9))

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_against_oracle(self, m):
        for k in range(-8, 9):
            for q in range(m + 1):
                assert h_line(m, q, k) == h_line_oracle(m, q, k), (m, q, k)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_euler_characteristic(self, m):
        for k in range(-8, 9):
            chi = sum((-1) ** q * h_line(m, q, k) for q in range(m + 1))
            assert chi == euler_characteristic_polynomial(m, k)


class TestForms:
    def test_hodge_diagonal(self):
        assert h_omega(2, 1, 1, 0) == 1

    def test_twisted_one_forms_on_plane(self):
        # oracle value; 8 would be h^0 of the tangent sheaf
        assert h_omega(2, 1, 0, 2) == h_omega1_oracle(2, 0, 2) == 3

    def test_serre_dual_pair(self):
        # h^3(P^3, Omega^2(-2)) = h^0(P^3, Omega^1(2))
        assert h_omega1_oracle(3, 0, 2) == 6
        assert h_omega(3, 2, 3, -2) == 6

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_one_forms_against_oracle(self, m):
        for k in range(-8, 9):
            for q in range(m + 1):
                assert h_omega(m, 1, q, k) == h_omega1_oracle(m, q, k), (m, q, k)

    def test_p_out_of_range(self):
        with pytest.raises(ValueError):
            h_omega(2, 3, 0, 0)


class TestTangent:
    def test_global_vector_fields(self):
        assert h_tangent(3, 0, 0) == 15

    def test_projective_line(self):
        assert h_tangent(1, 0, -2) == 1

    def test_negative_even_twists_vanish(self):
        for m in range(2, 5):
            for k in range(1, 5):
                assert h_tangent(m, 0, -2 * k) == 0

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_against_euler_oracle(self, m):
        for k in range(-8, 9):
            for q in range(m + 1):
                assert h_tangent(m, q, k) == h_tangent_oracle(m, q, k), (m, q, k)

    def test_only_nonzero_h1(self):
        hits = [(m, k) for m in range(2, 5) for k in range(-8, 9) if h_tangent(m, 1, k)]
        assert hits == [(2, -3)]


class TestObstructionSheaf:
    def test_single_pair(self):
        (s,) = obstruction_decomposition(2, (1, 1), 2)
        assert s.index_set == (0, 1) and s.twist == -2

    def test_count(self):
        summands = obstruction_decomposition(3, (1, 1, 1, 1), 2)
        assert len(summands) == 6 and {s.twist for s in summands} == {-2}

    def test_mixed_weights(self):
        twists = [s.twist for s in obstruction_decomposition(3, (1, 2, 1, 2), 2)]
        assert twists == [-3, -2, -3, -3, -4, -3]

    def test_odd_degree_rejected(self):
        with pytest.raises(ValueError):
            obstruction_decomposition(2, (1, 1, 1), 3)


class TestNormality:
    def test_plane_conic(self):
        cert = normality_certificate(2, (1, 1), 2)
        assert cert.overall == "Normal"
        (r,) = cert.records
        assert (r.h0_ambient, r.h1_twisted_ambient) == (0, 0)

    def test_quadric_surface(self):
        assert normality_certificate(3, (1, 1, 1, 1), 2).is_normal

    def test_lines_in_plane_not_provable(self):
        # h^1(P^2, T(-3)) = h^1(Omega^1) = 1 blocks the vanishing chain
        cert = normality_certificate(2, (1, 1), 1)
        assert cert.overall == "NotProvable"
        assert [r.h1_twisted_ambient for r in cert.failing()] == [1]

    def test_json(self):
        js = normality_certificate(2, (1, 2), 3).to_json()
        assert js["overall"] == "Normal"
        assert js["summands"][0]["I"] == [1, 2]

    def test_preconditions(self):
        with pytest.raises(ValueError):
            normality_certificate(2, (1, 1), 0)


class TestNormalSections:
    def test_conic(self):
        assert quadric_normal_h0(2, (1, 1), 2) == 1

    def test_weighted_pair(self):
        assert quadric_normal_h0(3, (1, 2), 3) == 1

    def test_no_sections(self):
        assert quadric_normal_h0(2, (2, 2), 2) == 0

    def test_general_order(self):
        assert normal_section_h0(2, (1, 1, 1, 1), 4, 4) == 1
        assert normal_section_h0(2, (1, 1, 1, 1), 2, 2) == quadric_normal_h0(2, (1, 1, 1, 1), 2)


def test_table_shape():
    t = cohomology_table(2, range(-3, 1), "tangent")
    assert t["m"] == 2 and len(t["entries"]) == 4 * 3
    assert {"q": 1, "k": -3, "dim": 1} in t["entries"]
