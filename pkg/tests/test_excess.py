"""Conormal modules, Hom duals, and the defect-module invariants."""

from fractions import Fraction

import numpy as np
import pytest

from qfiber.algebra import FieldSpec, PolyRing
from qfiber.excess import (
    ExcessIntersection,
    FinModule,
    conormal_in_X,
    conormal_restricted,
    hilbert_tangent_dim,
    hom_dim_commutant,
    hom_module,
    make_scenario,
    minimal_generators,
    module_mu,
    q_affine_pair,
    q_module,
    qbar,
    symmetry_check,
    _algebra_appliers,
    _hom_rows,
    _poly_action_vec,
    _quotient_rep,
)
from qfiber.groebner import Ideal
from qfiber.linalg import mat_mul, rank
from qfiber.parser import parse_ideal
from qfiber.rng import Stream
from qfiber.zerodim import (
    ArtinianAlgebra,
    _eval_matrix_poly,
    derivations_dim,
    minpoly_of_vector,
    semisimple_poly,
    t1_dim,
    tangent_data,
)

P = 32003


def ring(names="x,y", p=P):
    return PolyRing(FieldSpec(p), tuple(names.split(",")))


def idl(R, text):
    return Ideal(R, parse_ideal(text, R))


def scenario(R, xtext, ytext, dim_x, codim_y, **kw):
    return make_scenario(R, idl(R, xtext), idl(R, ytext), dim_x, codim_y, **kw)


def graph2():
    """Graph of three spanning quadrics on A^2 against its linear axis space."""
    R = ring("x1,x2,x3,a,b")
    chart = ring("a,b")
    return scenario(R, "x1 - a^2, x2 - a*b, x3 - b^2", "x1, x2, x3", 2, 3,
                    chart_ring=chart, chart_ideal=idl(chart, "a^2, a*b, b^2"))


def fatpoint():
    """Square of the maximal ideal on a 3-plane, cut by a graph-style CI."""
    names = "x,y,z," + ",".join(f"u{i}" for i in range(1, 7))
    R = ring(names)
    quads = ["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]
    ytext = ", ".join(f"{q} - u{i}" for i, q in enumerate(quads, start=1))
    xtext = ", ".join(f"u{i}" for i in range(1, 7))
    chart = ring("x,y,z")
    return scenario(R, xtext, ytext, 3, 6, chart_ring=chart,
                    chart_ideal=idl(chart, ", ".join(quads)))


def multipoint():
    """Graph scenario whose intersection splits into two rational points."""
    R = ring("x1,x2,a")
    return scenario(R, "x1 - a^2 + 1, x2", "x1, x2", 1, 2)


def nonresidue():
    c = 2
    while pow(c, (P - 1) // 2, P) == 1:
        c += 1
    return c


def q_space(s):
    """Defect-module actions straight from the internals, for oracles."""
    big, small = conormal_restricted(s), conormal_in_X(s)
    nb = _hom_rows(big._kernel, big.ngens, s.Z)
    ns = _hom_rows(small._kernel, small.ngens, s.Z)
    dim, mats, _, _ = _quotient_rep(nb, ns, _algebra_appliers(s.Z, P), P)
    return dim, mats


def free_rank_one(A):
    return FinModule(A.dim, tuple(A.actions()), A.one.reshape(1, -1), A,
                     annihilator=A.ideal)


class TestConormal:
    def test_cotangent_of_point(self):
        # X the whole plane: the restricted conormal module is m/m^2
        R = ring()
        s = make_scenario(R, Ideal(R, []), idl(R, "x, y"), 2, 2)
        big = conormal_restricted(s)
        assert big.basis_dim == 2
        assert rank(big.generator_images, P) == 2

    def test_ci_freeness(self):
        s = graph2()
        big = conormal_restricted(s)
        assert big.basis_dim == 3 * 3
        assert big._kernel.shape[0] == 0
        f = fatpoint()
        bigf = conormal_restricted(f)
        assert bigf.basis_dim == 6 * 4

    def test_small_module_dims(self):
        # over the chart the small side is m^2/m^4: 3 + 4 = 7 for the plane,
        # 6 + 10 = 16 for three variables
        assert conormal_in_X(graph2()).basis_dim == 7
        assert conormal_in_X(fatpoint()).basis_dim == 16

    def test_small_module_on_curve(self):
        R = ring("x1,a")
        s = scenario(R, "x1 - a^2", "x1", 1, 1)
        assert conormal_in_X(s).basis_dim == 2

    def test_small_module_transversal_point(self):
        R = ring("x,y,z")
        s = scenario(R, "z", "x, y - z", 2, 2)
        assert conormal_in_X(s).basis_dim == 2

    def test_restriction_is_onto(self):
        s = graph2()
        rho = conormal_in_X(s).restriction
        assert rho.shape == (7, 9)
        assert rank(rho, P) == 7

    def test_actions_commute(self):
        small = conormal_in_X(graph2())
        for A in small.actions:
            for B in small.actions:
                assert np.array_equal(mat_mul(A, B, P), mat_mul(B, A, P))

    def test_annihilated_by_intersection_ideal(self):
        s = graph2()
        big = conormal_restricted(s)
        st = Stream(3)
        for f in (s.I_X + s.I_Y).gens:
            v = st.vector(big.basis_dim, P)
            assert not np.any(_poly_action_vec(big.actions, f, v, P))


class TestHom:
    def test_hom_of_free_rank_one(self):
        R = ring()
        A = ArtinianAlgebra.from_ideal(idl(R, "x^2, y^2"))
        h = hom_module(free_rank_one(A), A)
        assert h.basis_dim == A.dim
        # the dual of the free cover is again free: one generator suffices
        assert module_mu(h) == (1, ((4, 4, 1),))

    def test_hom_into_socle(self):
        R = ring("x")
        A = ArtinianAlgebra.from_ideal(idl(R, "x^2"))
        residue = FinModule(1, (np.zeros((1, 1), dtype=np.int64),),
                            np.array([[1]], dtype=np.int64), A)
        h = hom_module(residue, A)
        assert h.basis_dim == 1
        assert module_mu(h) == (1, ((2, 1, 1),))

    def test_dual_routes_agree(self):
        for s, expected in ((graph2(), 6), (fatpoint(), 18)):
            small = conormal_in_X(s)
            assert hom_module(small, s.Z).basis_dim == expected
            assert hom_dim_commutant(small, s.Z) == expected

    def test_free_dual_has_full_rank(self):
        s = fatpoint()
        big = conormal_restricted(s)
        assert hom_module(big, s.Z).basis_dim == 6 * 4
        assert hom_dim_commutant(big, s.Z) == 6 * 4

    def test_wrong_annihilator_rejected(self):
        R = ring("x")
        A = ArtinianAlgebra.from_ideal(idl(R, "x^2"))
        bad = FinModule(A.dim, tuple(A.actions()), A.one.reshape(1, -1), A,
                        annihilator=idl(R, "x"))
        with pytest.raises(RuntimeError):
            hom_module(bad, A)

    def test_hilbert_tangent(self):
        R = ring("x,y,z")
        assert hilbert_tangent_dim(idl(R, "x^2, y^2, z^2, x*y, x*z, y*z")) == 18
        R1 = ring("x")
        assert hilbert_tangent_dim(idl(R1, "x^2")) == 2
        R2 = ring()
        assert hilbert_tangent_dim(idl(R2, "x, y")) == 2


class TestQModule:
    def test_graph_report(self):
        rep = q_module(graph2())
        assert rep.to_json_dict() == {
            "deg_Z": 3, "c": 1, "dim_M_big": 9, "dim_M_small": 7,
            "hilb_tangent_dim": 6, "dim_Q": 3, "q": "3/1", "mu_Q": 3,
            "components": [{"length": 3, "dim_Q": 3, "mu": 3}],
        }
        assert rep.q == Fraction(3)

    def test_fatpoint_report(self):
        rep = q_module(fatpoint())
        assert (rep.deg_z, rep.dim_m_big, rep.dim_m_small) == (4, 24, 16)
        assert rep.hilb_tangent_dim == 18
        assert rep.dim_q == 6
        assert rep.q == Fraction(2)
        assert rep.mu_q == 6
        assert rep.per_component == ((4, 6, 6),)

    def test_formula_paths_agree(self):
        # route 2: deg Z * codim Y - embedded tangent dimension;
        # route 3: deg Z * c - t1 + derivations, both over the chart
        for s in (graph2(), fatpoint()):
            rep = q_module(s)
            assert rep.dim_q == rep.deg_z * s.dims[1] - rep.hilb_tangent_dim
            td = tangent_data(s.chart_ideal)
            assert td.hilb_tangent_dim == rep.hilb_tangent_dim
            assert rep.dim_q == (rep.deg_z * s.c - td.t1_dim
                                 + td.derivations_dim)

    def test_two_rational_points(self):
        rep = q_module(multipoint())
        assert (rep.deg_z, rep.dim_m_big, rep.dim_m_small) == (2, 4, 2)
        assert rep.dim_q == 2 and rep.q == Fraction(2)
        assert rep.per_component == ((1, 1, 1), (1, 1, 1))

    def test_conjugate_point_pair(self):
        R = ring("x1,x2,a")
        s = scenario(R, f"x1 - a^2 + {nonresidue()}, x2", "x1, x2", 1, 2)
        rep = q_module(s)
        assert rep.deg_z == 2
        assert rep.dim_q == 2
        # one irreducible component; lengths count F_p dimensions
        assert rep.per_component == ((2, 2, 2),)

    def test_lines_meeting_at_point(self):
        # two lines through the origin of A^3: expected dimension is -1,
        # so the meeting itself is the excess; by hand M_big = <z, x - y>
        # and M_small = <z> over the reduced point
        R = ring("x,y,z")
        rep = q_module(scenario(R, "x, y", "z, x - y", 1, 2))
        assert (rep.deg_z, rep.dim_m_big, rep.dim_m_small) == (1, 2, 1)
        assert rep.hilb_tangent_dim == 1
        assert rep.dim_q == 1 and rep.q == Fraction(1)
        assert rep.per_component == ((1, 1, 1),)

    def test_no_excess_codimension_raises(self):
        R = ring()
        s = scenario(R, "x", "y", 1, 1)
        with pytest.raises(ExcessIntersection) as info:
            q_module(s)
        rep = info.value.report
        assert rep.q is None and rep.dim_q == 0 and rep.deg_z == 1

    def test_mu_against_global_radical_route(self):
        for s in (graph2(), multipoint(), fatpoint()):
            rep = q_module(s)
            dim, mats = q_space(s)
            assert dim == rep.dim_q
            blocks = []
            for v in range(s.Z.nvars):
                h = semisimple_poly(
                    minpoly_of_vector(s.Z.action(v), s.Z.one, P), P)
                blocks.append(np.mod(
                    mats[v] - _eval_matrix_poly(list(h), mats[v], P), P))
            mu = dim - rank(np.concatenate(blocks, axis=1), P)
            assert mu == rep.mu_q

    def test_hom_dims_assemble(self):
        s = graph2()
        rep = q_module(s)
        big_dual = hom_module(conormal_restricted(s), s.Z)
        assert big_dual.basis_dim == rep.dim_q + rep.hilb_tangent_dim


class TestQbar:
    def test_complete_intersections_vanish(self):
        R = ring("x")
        assert qbar(ArtinianAlgebra.from_ideal(idl(R, "x^2"))).basis_dim == 0
        R2 = ring()
        assert qbar(ArtinianAlgebra.from_ideal(idl(R2, "x, y"))).basis_dim == 0

    def test_fat_point_intrinsic(self):
        R = ring("x,y,z")
        zbar = qbar(ArtinianAlgebra.from_ideal(
            idl(R, "x^2, y^2, z^2, x*y, x*z, y*z")))
        assert zbar.basis_dim == 6
        assert zbar.ngens == 6
        assert module_mu(zbar) == (6, ((4, 6, 6),))

    def test_embedding_dimension_reduction(self):
        R = ring()
        zbar = qbar(ArtinianAlgebra.from_ideal(idl(R, "x - y^2, y^3")))
        assert zbar.basis_dim == 0
        assert zbar.algebra.nvars == 1
        assert zbar.ngens == 1

    def test_independence_relation(self):
        s = graph2()
        rep = q_module(s)
        zbar = qbar(ArtinianAlgebra.from_ideal(s.chart_ideal))
        gap = rep.dim_q - zbar.basis_dim
        assert gap % rep.deg_z == 0
        m = gap // rep.deg_z
        assert m >= 0
        assert m == s.dims[1] - zbar.ngens
        assert rep.mu_q == module_mu(zbar)[0] + m

    def test_nonlocal_rejected(self):
        R = ring("x")
        with pytest.raises(ValueError):
            qbar(ArtinianAlgebra.from_ideal(idl(R, "x^2 - 1")))

    def test_minimal_generators(self):
        R = ring()
        assert len(minimal_generators(idl(R, "x^2, x*y, y^2"))) == 3
        assert len(minimal_generators(idl(R, "x, y^2"))) == 2
        # redundant spanning sets collapse
        assert len(minimal_generators(idl(R, "x^2, y^2, x^2 + y^2"))) == 2


class TestAffinePairs:
    def test_frozen_oracle(self):
        R = ring()
        rep = q_affine_pair(R, idl(R, "y"), idl(R, "x^2, x*y"))
        assert rep.to_json_dict() == {
            "deg_Z": 2, "c": None, "dim_M_big": 3, "dim_M_small": 2,
            "hilb_tangent_dim": 2, "dim_Q": 1, "q": None, "mu_Q": 1,
            "components": [{"length": 2, "dim_Q": 1, "mu": 1}],
        }

    def test_transversal_pair_vanishes(self):
        R = ring()
        L, I = idl(R, "x"), idl(R, "y")
        assert I.intersect(L).equals(I * L)
        assert q_affine_pair(R, L, I).dim_q == 0

    def test_equal_pair(self):
        # I = L = (x) in one variable: the source Hom module is zero while
        # the target is the dual of a free rank-one module
        R = ring("x")
        rep = q_affine_pair(R, idl(R, "x"), idl(R, "x"))
        assert rep.dim_m_small == 0
        assert rep.dim_q == 1

    def test_reduction_modulo_product(self):
        # L' = I*L always satisfies I cap L' = I*L', so the defect module
        # is unchanged after passing to the quotient by L'
        R = ring()
        L, I = idl(R, "y"), idl(R, "x^2, x*y")
        prod = I * L
        assert I.intersect(prod).equals(prod)
        plain = q_affine_pair(R, L, I)
        reduced = q_affine_pair(R, L, I, modulus=prod)
        assert plain.dim_q == reduced.dim_q
        assert plain.mu_q == reduced.mu_q

    def test_monotone_in_modulus(self):
        R = ring()
        L, I = idl(R, "y"), idl(R, "x^2, x*y")
        sub = idl(R, "x^2")
        assert I.contains_ideal(sub)
        assert q_affine_pair(R, L, I, modulus=sub).dim_q <= \
            q_affine_pair(R, L, I).dim_q

    def test_additive_decomposition(self):
        # split generators over disjoint variables; both hypotheses are
        # verified computationally before the additivity assertion
        R = ring("x,y,u,v")
        Ia, Ib = idl(R, "x^2"), idl(R, "u^2")
        L = idl(R, "y, v")
        I = Ia + Ib
        assert Ia.intersect(Ib).equals(Ia * Ib)
        assert Ia.intersect(Ib + L).equals(Ia * (Ib + L))
        whole = q_affine_pair(R, L, I)
        parta = q_affine_pair(R, L, I, modulus=Ia)
        partb = q_affine_pair(R, L, I, modulus=Ib)
        assert whole.dim_q == parta.dim_q + partb.dim_q


class TestSymmetry:
    def test_graph_scenario(self):
        rep = symmetry_check(graph2())
        assert rep.agree
        assert rep.forward.dim_q == rep.reverse.dim_q == 3
        assert rep.forward.mu_q == rep.reverse.mu_q == 3

    def test_crossing_lines(self):
        R = ring("x,y,z")
        rep = symmetry_check(scenario(R, "x, y", "z, x - y", 1, 2))
        assert rep.agree
        assert rep.forward.dim_q == rep.reverse.dim_q == 1


class TestTangentData:
    def test_double_point_on_line(self):
        R = ring("x")
        td = tangent_data(idl(R, "x^2"))
        assert (td.zariski_dim, td.derivations_dim) == (1, 1)
        assert (td.t1_dim, td.hilb_tangent_dim) == (1, 2)

    def test_reduced_point(self):
        R = ring("x,y,z")
        assert t1_dim(idl(R, "x, y, z")) == 0

    def test_fat_point(self):
        R = ring("x,y,z")
        td = tangent_data(idl(R, "x^2, y^2, z^2, x*y, x*z, y*z"))
        assert (td.zariski_dim, td.derivations_dim) == (3, 9)
        assert (td.t1_dim, td.hilb_tangent_dim) == (15, 18)
