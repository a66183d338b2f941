"""Seeded scenario generators: reproducibility, genericity, frozen reports."""

from fractions import Fraction

import pytest

from qfiber.excess import q_module
from qfiber.groebner import Ideal
from qfiber.invariants import corank_fiber_lower_bound
from qfiber.parser import parse_session
from qfiber.scenarios import (
    Seed,
    _roots_scan,
    gen_EI_model,
    gen_ci_secant,
    gen_fatpoint_model,
    gen_quadric_graph,
    gen_reye,
    reye_trisecant,
    scenario_text,
    secant_through_point,
)


class TestSeed:
    def test_default_prime(self):
        assert Seed(3).p.p == 32003

    def test_stream_reproducible(self):
        a, b = Seed(9).stream(), Seed(9).stream()
        assert [a.randrange(100) for _ in range(5)] == \
            [b.randrange(100) for _ in range(5)]


class TestQuadricGraph:
    def test_reproducible(self):
        a = gen_quadric_graph(2, Seed(5))
        b = gen_quadric_graph(2, Seed(5))
        assert list(a.I_Y.gens) == list(b.I_Y.gens)
        assert list(a.I_X.gens) == list(b.I_X.gens)

    def test_range_checked(self):
        with pytest.raises(ValueError):
            gen_quadric_graph(0, Seed(0))
        with pytest.raises(ValueError):
            gen_quadric_graph(9, Seed(0))

    def test_linear_witness(self):
        # graph generators read x_i - f_i(a); the linear part is the witness
        sc = gen_quadric_graph(3, Seed(1))
        for i, g in enumerate(sc.I_X.gens):
            assert g.homogeneous_part(1) == sc.ring.var(i)

    def test_length_matches_central_binomial(self):
        for n in (1, 2, 3):
            sc = gen_quadric_graph(n, Seed(n))
            assert sc.Z.dim == corank_fiber_lower_bound(n)

    def test_n1_report(self):
        r = q_module(gen_quadric_graph(1, Seed(0)))
        assert (r.deg_z, r.c, r.dim_q, r.mu_q) == (2, 1, 2, 1)
        assert r.q == 2
        assert r.per_component == ((2, 2, 1),)

    def test_n2_report(self):
        r = q_module(gen_quadric_graph(2, Seed(0)))
        assert (r.deg_z, r.dim_q, r.mu_q) == (3, 3, 3)
        assert r.q == 3
        assert r.hilb_tangent_dim == 6

    def test_n3_report(self):
        r = q_module(gen_quadric_graph(3, Seed(0)))
        assert (r.deg_z, r.dim_q, r.mu_q) == (6, 6, 3)
        assert r.q == 6
        assert (r.dim_m_big, r.dim_m_small) == (24, 19)

    def test_chart_matches_ambient(self):
        sc = gen_quadric_graph(2, Seed(4))
        assert sc.chart_ring.nvars == 2
        assert sc.Z.dim == 3


class TestFatpointModel:
    def test_intersection_ideal_exact(self):
        sc = gen_fatpoint_model(Seed(3))
        R = sc.ring
        monos = [(2, 0, 0), (0, 2, 0), (0, 0, 2),
                 (1, 1, 0), (1, 0, 1), (0, 1, 1)]
        want = Ideal(R, [R.poly({m + (0,) * 6: 1}) for m in monos]
                     + [R.var(3 + i) for i in range(6)])
        assert (sc.I_X + sc.I_Y).equals(want)

    def test_report_independent_of_seed(self):
        # the random linear forms never change the intersection invariants
        for seed in (0, 11):
            r = q_module(gen_fatpoint_model(Seed(seed)))
            assert (r.deg_z, r.c, r.dim_m_big, r.dim_m_small) == (4, 3, 24, 16)
            assert (r.hilb_tangent_dim, r.dim_q, r.mu_q) == (18, 6, 6)
            assert r.q == 2
            assert r.per_component == ((4, 6, 6),)


class TestEIModel:
    def test_report(self):
        r = q_module(gen_EI_model(Seed(0)))
        assert (r.deg_z, r.c) == (8, 3)
        assert (r.hilb_tangent_dim, r.dim_q, r.mu_q) == (25, 31, 7)
        assert r.q == Fraction(31, 3)


class TestReye:
    def test_matrix_and_minors(self):
        d = gen_reye(Seed(0))
        assert len(d.I_X.gens) == 10
        assert d.detA.degree() == 4
        for i in range(4):
            for j in range(4):
                assert d.A[i][j] == d.A[j][i]

    def test_trisecant_degree_three(self):
        for seed in (0, 1):
            d = gen_reye(Seed(seed))
            chk = reye_trisecant(d, Seed(seed))
            assert chk.point_on_line
            assert chk.intersection_degree == 3
            assert chk.passed

    def test_json_shape(self):
        d = gen_reye(Seed(2))
        chk = reye_trisecant(d, Seed(2))
        js = chk.to_json_dict()
        assert js["det_degree"] == 4
        assert js["passed"] is True


class TestCISecant:
    def test_parameter_filter(self):
        with pytest.raises(ValueError):
            gen_ci_secant(1, 3, Seed(0))
        with pytest.raises(ValueError):
            gen_ci_secant(3, 2, Seed(0))

    def test_conic_case(self):
        scen = gen_ci_secant(1, 2, Seed(0))
        assert scen.r == 3
        assert len(scen.gens) == 2
        chk = secant_through_point(scen)
        assert chk.cone_nonempty
        if chk.direction is not None:
            assert chk.line_degree >= 2
        assert chk.passed

    def test_cubic_case(self):
        scen = gen_ci_secant(2, 3, Seed(0))
        assert scen.r == 4
        chk = secant_through_point(scen)
        assert chk.cone_nonempty
        if chk.direction is not None:
            assert chk.line_degree >= 3
        assert chk.passed

    def test_reproducible(self):
        a = gen_ci_secant(2, 3, Seed(7))
        b = gen_ci_secant(2, 3, Seed(7))
        assert list(a.gens) == list(b.gens)


class TestScenarioText:
    def test_round_trip(self):
        sc = gen_quadric_graph(2, Seed(6))
        ring, ideals, loose = parse_session(scenario_text(sc))
        assert ring.variables == sc.ring.variables
        assert ring.order == sc.ring.order
        assert not loose
        assert Ideal(ring, ideals["X"]).equals(sc.I_X)
        assert Ideal(ring, ideals["Y"]).equals(sc.I_Y)

    def test_fatpoint_round_trip(self):
        sc = gen_fatpoint_model(Seed(6))
        ring, ideals, _ = parse_session(scenario_text(sc))
        assert Ideal(ring, ideals["Y"]).equals(sc.I_Y)


class TestRootsScan:
    def test_quadratic(self):
        p = 32003
        assert _roots_scan([p - 1, 0, 1], p) == [1, p - 1]

    def test_rootless(self):
        # t^2 + t + 1 has no roots mod 5
        assert _roots_scan([1, 1, 1], 5) == []
