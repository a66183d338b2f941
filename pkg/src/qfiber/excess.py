"""Excess intersection modules over artinian coordinate algebras.

The central object is the defect module of a finite intersection X cap Y
inside affine space: the cokernel of the restriction map between the duals
of the two conormal modules, taken over the finite-dimensional coordinate
algebra of the intersection.  Its length, the exact rational invariant
q = length / excess codimension, and its minimal number of generators mu
are all computed by exact linear algebra over F_p on top of Groebner
normal forms.

A module generated by g elements over an algebra of dimension d is handled
as a quotient of k^(g*d): the only Groebner work is the g*d normal forms of
generator-times-basis-monomial products, after which every action, Hom
space, and quotient is numpy on int64 residues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import GREVLEX, PolyRing, Polynomial
from .groebner import Ideal
from .linalg import (RowBasis, as_mod_array, identity, kernel_intersection,
                     mat_mul, mat_vec, nullspace, rank, rref)
from .rng import Stream
from .zerodim import (ArtinianAlgebra, _eval_matrix_poly, _image_basis,
                      _restrict, local_decompose, minpoly_of_vector,
                      semisimple_poly)

# Local decompositions inside reports use a fixed stream so that repeated
# runs of the same scenario agree bit for bit.
_REPORT_SEED = 0x51B7


class ExcessIntersection(Exception):
    """The intersection has no excess codimension, so q is undefined.

    The report computed so far (with q = None) rides along in .report.
    """

    def __init__(self, message: str, report: "QReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass
class FinModule:
    """Finite-length module over an artinian algebra, in an explicit basis.

    actions holds one square matrix per ambient variable of the algebra;
    generator_images the coordinates of the distinguished generators, one
    row each.  Modules born from an ideal presentation keep their relation
    space (a k-basis of the kernel of (u_ij) -> sum u_ij * gen_i * mono_j),
    which is what the fast Hom path consumes.  restriction, when present,
    is the matrix of the natural surjection from the companion restricted
    conormal module onto this one.
    """

    basis_dim: int
    actions: tuple
    generator_images: np.ndarray
    algebra: ArtinianAlgebra
    annihilator: Ideal | None = None
    restriction: np.ndarray | None = field(default=None, repr=False)
    _kernel: np.ndarray | None = field(default=None, repr=False)
    _span: np.ndarray | None = field(default=None, repr=False)

    @property
    def ngens(self) -> int:
        return self.generator_images.shape[0]


@dataclass
class IntersectionScenario:
    """An intersection X cap Y in affine space, finite by construction.

    dims holds (dim X, codim Y, dim Z); smoothness of X is the caller's
    responsibility (generators build graphs and linear spaces, smooth by
    construction).  chart_ring/chart_ideal, when present, re-present the
    intersection inside a coordinate chart of X and feed the intrinsic
    tangent computations.
    """

    ring: PolyRing
    I_X: Ideal
    I_Y: Ideal
    dims: tuple
    Z: ArtinianAlgebra
    chart_ring: PolyRing | None = None
    chart_ideal: Ideal | None = None
    _big: FinModule | None = field(default=None, repr=False, compare=False)
    _small: FinModule | None = field(default=None, repr=False, compare=False)

    @property
    def c(self) -> int:
        """Excess codimension codim Y - dim X."""
        return self.dims[1] - self.dims[0]


def make_scenario(ring: PolyRing, ideal_x: Ideal, ideal_y: Ideal,
                  dim_x: int, codim_y: int, chart_ring: PolyRing | None = None,
                  chart_ideal: Ideal | None = None) -> IntersectionScenario:
    """Bundle the data of an intersection, checking finiteness up front."""
    alg = ArtinianAlgebra.from_ideal(ideal_x + ideal_y)
    return IntersectionScenario(ring, ideal_x, ideal_y, (dim_x, codim_y, 0),
                                alg, chart_ring, chart_ideal)


@dataclass(frozen=True)
class QReport:
    """Sizes and invariants of the defect module of one intersection.

    per_component lists (local length of Z, local defect length, local mu)
    over the local factors of the coordinate algebra; q is exact or None
    when the excess codimension is not positive (affine pairs never set it).
    """

    deg_z: int
    c: int | None
    dim_m_big: int
    dim_m_small: int
    hilb_tangent_dim: int
    dim_q: int
    q: Fraction | None
    mu_q: int
    per_component: tuple

    def to_json_dict(self) -> dict:
        return {
            "deg_Z": self.deg_z,
            "c": self.c,
            "dim_M_big": self.dim_m_big,
            "dim_M_small": self.dim_m_small,
            "hilb_tangent_dim": self.hilb_tangent_dim,
            "dim_Q": self.dim_q,
            "q": None if self.q is None else
                 f"{self.q.numerator}/{self.q.denominator}",
            "mu_Q": self.mu_q,
            "components": [
                {"length": ln, "dim_Q": dq, "mu": mu}
                for ln, dq, mu in self.per_component
            ],
        }


@dataclass(frozen=True)
class SymmetryReport:
    forward: QReport
    reverse: QReport
    agree: bool
    note: str


# --- presentation engine ----------------------------------------------------


def _spanning_kernel(gens, relations: Ideal, alg: ArtinianAlgebra) -> np.ndarray:
    """Relation space of the module spanned by {gen_i * mono_j} mod relations.

    The module is the image of k^(g*d) under (i, j) -> gen_i * mono_j over
    the standard monomials mono_j of the algebra; the rows returned are a
    k-basis of the kernel of that spanning map, read off from the normal
    forms modulo the relation ideal.
    """
    ring = relations.ring
    gb = relations.groebner()
    cols: dict = {}
    sparse = []
    for f in gens:
        for m in alg.std:
            nf = gb.normal_form(f * ring.monomial(m))
            sparse.append([(cols.setdefault(t, len(cols)), c) for t, c in nf.terms])
    E = np.zeros((len(sparse), max(len(cols), 1)), dtype=np.int64)
    for i, row in enumerate(sparse):
        for j, c in row:
            E[i, j] = c
    return nullspace(E.T, alg.p)


def _block_apply(X: np.ndarray, rows: np.ndarray, p: int) -> np.ndarray:
    """One algebra action on rows of k^(g*d), blockwise on each d-chunk."""
    r, w = rows.shape
    d = X.shape[0]
    if r == 0 or w == 0:
        return rows
    return mat_mul(rows.reshape(-1, d), X.T, p).reshape(r, w)


def _quotient_rep(big_rows: np.ndarray, small_rows: np.ndarray, appliers, p: int):
    """Basis, action matrices, and coordinates for span(big)/span(small).

    Assumes span(small) <= span(big) and both stable under the appliers.
    coordize sends any rows inside span(big) to their coordinates in the
    quotient basis (the rref rows of big reduced modulo small).
    """
    R_s, piv_s = rref(small_rows, p)
    R_s = R_s[: len(piv_s)]

    def _mod_small(rows):
        rows = as_mod_array(rows, p)
        if piv_s and rows.shape[0]:
            rows = np.mod(rows - mat_mul(rows[:, piv_s], R_s, p), p)
        return rows

    R_q, piv_q = rref(_mod_small(big_rows), p)
    dim = len(piv_q)
    R_q = R_q[:dim]

    def coordize(rows):
        if dim == 0:
            return np.zeros((np.asarray(rows).shape[0], 0), dtype=np.int64)
        return _mod_small(rows)[:, piv_q]

    mats = tuple(coordize(apply(R_q)).T.copy() for apply in appliers)
    return dim, mats, coordize, R_q


def _hom_rows(kernel: np.ndarray, g: int, alg: ArtinianAlgebra) -> np.ndarray:
    """Solution space of the Hom constraints of a presented module.

    A homomorphism into the algebra is a block vector (phi_1, ..., phi_g);
    each relation row kappa imposes sum_i mult(kappa_i) @ phi_i = 0, and a
    k-basis of relations is enough because the constraint is linear in
    kappa.
    """
    d, p = alg.dim, alg.p

    def blocks():
        for row in kernel:
            k = row.reshape(g, d)
            yield np.concatenate([alg.element_matrix(k[i]) for i in range(g)],
                                 axis=1)

    return kernel_intersection(blocks(), g * d, p)


def _poly_action_vec(actions, f: Polynomial, v: np.ndarray, p: int) -> np.ndarray:
    """Image of the vector v under the action of the polynomial f."""
    out = np.zeros_like(v)
    for m, c in f.terms:
        w = v
        for i, e in enumerate(m):
            for _ in range(e):
                w = mat_vec(actions[i], w, p)
        out = (out + c * w) % p
    return out


def _check_annihilates(mod: FinModule, ideal: Ideal):
    """Spot check that the stated annihilator kills the module."""
    p = mod.algebra.p
    st = Stream(_REPORT_SEED ^ 0x5A)
    for f in ideal.gens:
        v = st.vector(mod.basis_dim, p)
        if np.any(_poly_action_vec(mod.actions, f, v, p)):
            raise RuntimeError("annihilator check failed: inconsistent module")


def _algebra_appliers(alg: ArtinianAlgebra, p: int):
    return [lambda rows, X=X: _block_apply(X, rows, p) for X in alg.actions()]


def _conormal_module(gens, relations: Ideal, alg: ArtinianAlgebra,
                     annihilator: Ideal | None):
    """Module spanned by the given ideal generators modulo relations.

    Returns the module together with its coordinate map on rows of the
    spanning space k^(g*d).
    """
    kernel = _spanning_kernel(gens, relations, alg)
    g, d, p = len(gens), alg.dim, alg.p
    dim, mats, coordize, span = _quotient_rep(identity(g * d), kernel,
                                              _algebra_appliers(alg, p), p)
    images = np.zeros((g, g * d), dtype=np.int64)
    for i in range(g):
        images[i, i * d:(i + 1) * d] = alg.one
    mod = FinModule(dim, mats, coordize(images), alg, annihilator,
                    _kernel=kernel, _span=span)
    return mod, coordize


# --- conormal modules of a scenario ----------------------------------------


def conormal_restricted(s: IntersectionScenario) -> FinModule:
    """Conormal module of Y restricted to the intersection.

    Spanned by the generators of I_Y times the monomial basis of the
    coordinate algebra, with relations I_Y^2 + I_X*I_Y.  For a complete
    intersection Y of codimension g the module is free of rank g.
    """
    if s._big is None:
        relations = s.I_Y.power(2) + s.I_X * s.I_Y
        s._big, _ = _conormal_module(s.I_Y.gens, relations, s.Z,
                                     annihilator=s.I_X + s.I_Y)
    return s._big


def conormal_in_X(s: IntersectionScenario) -> FinModule:
    """Conormal module of the intersection inside X.

    Same generators as the restricted conormal module (the I_X part dies in
    the quotient), with relations I_X + I_Y^2; carries the matrix of the
    natural surjection from the restricted module in .restriction.
    """
    if s._small is None:
        big = conormal_restricted(s)
        relations = s.I_X + s.I_Y.power(2)
        small, coordize = _conormal_module(s.I_Y.gens, relations, s.Z,
                                           annihilator=s.I_X + s.I_Y)
        rho = coordize(big._span).T.copy()
        if rank(rho, s.Z.p) != small.basis_dim:
            raise RuntimeError("restriction map failed to be onto")
        small.restriction = rho
        s._small = small
    return s._small


# --- Hom --------------------------------------------------------------------


def hom_module(M: FinModule, A: ArtinianAlgebra) -> FinModule:
    """Hom_A(M, A) with its induced module structure.

    Presentation-born modules over A use the relation-space constraints;
    anything else falls back to the literal commutant system.  The induced
    action is (a*phi)(m) = a*phi(m).
    """
    if M.annihilator is not None:
        _check_annihilates(M, M.annihilator)
    p = A.p
    if M._kernel is not None and M.algebra is A:
        g = M.ngens
        rows = _hom_rows(M._kernel, g, A)
        appliers = _algebra_appliers(A, p)
    else:
        rows = _commutant_rows(M, A)
        m = M.basis_dim
        appliers = [lambda r, X=X: _left_apply(X, r, m, p) for X in A.actions()]
    dim, mats, _, _ = _quotient_rep(rows, np.zeros((0, rows.shape[1]),
                                                   dtype=np.int64), appliers, p)
    return FinModule(dim, mats, identity(dim), A, annihilator=A.ideal)


def _commutant_rows(M: FinModule, A: ArtinianAlgebra) -> np.ndarray:
    """Hom space as the commutant: k-linear phi with phi o x_v = x_v o phi."""
    m, d, p = M.basis_dim, A.dim, A.p
    acts = A.actions()
    if len(acts) != len(M.actions):
        raise ValueError("module and algebra live over different rings")
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    blocks = [np.mod(np.kron(X, identity(m)) - np.kron(identity(d), B.T), p)
              for X, B in zip(acts, M.actions)]
    stacked = np.vstack(blocks) if blocks else np.zeros((0, d * m), dtype=np.int64)
    return nullspace(stacked, p)


def hom_dim_commutant(M: FinModule, A: ArtinianAlgebra) -> int:
    """dim Hom_A(M, A) by the commutant route; a cross-check on hom_module."""
    return _commutant_rows(M, A).shape[0]


def _left_apply(X: np.ndarray, rows: np.ndarray, m: int, p: int) -> np.ndarray:
    """Post-compose flattened (d x m) maps with the action matrix X."""
    r = rows.shape[0]
    d = X.shape[0]
    if r == 0:
        return rows
    V = rows.reshape(r, d, m).transpose(1, 0, 2).reshape(d, r * m)
    out = mat_mul(X, V, p)
    return out.reshape(d, r, m).transpose(1, 0, 2).reshape(r, d * m)


def hilbert_tangent_dim(ideal: Ideal) -> int:
    """dim Hom(I/I^2, A/I): first-order deformations of the finite scheme
    V(I) inside its ambient affine space."""
    alg = ArtinianAlgebra.from_ideal(ideal)
    kernel = _spanning_kernel(ideal.gens, ideal.power(2), alg)
    return _hom_rows(kernel, len(ideal.gens), alg).shape[0]


# --- minimal generator counts ----------------------------------------------


def _factor_mu(factor, actions, p: int):
    """(local length of the module, local mu) on one local factor.

    The maximal ideal of the factor is generated by the nilpotent parts
    x_v - h_v(x_v) of the variables, with h_v the squarefree-projection
    polynomial of the minimal polynomial of x_v on the factor; mu is the
    codimension of the span of their images.
    """
    E = factor.projector(actions, p)
    B, piv = _image_basis(E, p)
    dim_c = len(piv)
    if dim_c == 0:
        return 0, 0
    nil = []
    for v, X in enumerate(actions):
        Xc = _restrict(B, piv, X, p)
        mp = minpoly_of_vector(np.asarray(factor.actions[v], dtype=np.int64),
                               np.asarray(factor.one, dtype=np.int64), p)
        h = semisimple_poly(mp, p)
        nil.append(np.mod(Xc - _eval_matrix_poly(list(h), Xc, p), p))
    radical = np.concatenate(nil, axis=1)
    return dim_c, dim_c - rank(radical, p)


def module_mu(mod: FinModule, stream: Stream | None = None):
    """Minimal number of generators of the module, with its per-component
    breakdown over the local factors of the base algebra.

    Returns (mu, components) with components a tuple of (local length of
    the algebra, local module length, local mu).
    """
    A = mod.algebra
    factors = local_decompose(A, stream or Stream(_REPORT_SEED))
    per = []
    for f in factors:
        dim_c, mu_c = _factor_mu(f, mod.actions, A.p)
        per.append((f.length, dim_c, mu_c))
    return sum(t[2] for t in per), tuple(per)


# --- the defect module ------------------------------------------------------


def _defect_report(big: FinModule, small: FinModule, alg: ArtinianAlgebra,
                   c: int | None, dim_z: int,
                   stream: Stream | None) -> QReport:
    """Assemble the report from the two conormal modules.

    The two Hom spaces live in the same spanning coordinates and the
    smaller one embeds in the bigger (its relation space contains the
    other), so the defect module is a genuine quotient of subspaces.
    """
    p = alg.p
    g = big.ngens
    n_big = _hom_rows(big._kernel, g, alg)
    n_small = _hom_rows(small._kernel, g, alg)
    if rank(np.vstack([n_big, n_small]), p) != n_big.shape[0]:
        raise RuntimeError("dual of the restriction map failed to embed")
    appliers = _algebra_appliers(alg, p)
    dim_q, q_actions, _, _ = _quotient_rep(n_big, n_small, appliers, p)
    factors = local_decompose(alg, stream or Stream(_REPORT_SEED))
    per = []
    for f in factors:
        dim_c, mu_c = _factor_mu(f, q_actions, p)
        per.append((f.length, dim_c, mu_c))
    if sum(t[1] for t in per) != dim_q:
        raise RuntimeError("local defect lengths do not add up")
    q = None
    if c is not None and c - dim_z >= 1:
        q = Fraction(dim_q, c - dim_z)
    return QReport(deg_z=alg.dim, c=c, dim_m_big=big.basis_dim,
                   dim_m_small=small.basis_dim,
                   hilb_tangent_dim=n_small.shape[0], dim_q=dim_q, q=q,
                   mu_q=sum(t[2] for t in per), per_component=tuple(per))


def q_module(s: IntersectionScenario, stream: Stream | None = None) -> QReport:
    """Defect module report of a scenario; q = dim_Q / (c - dim Z) exactly.

    Raises ExcessIntersection (carrying the report, q = None) when the
    excess codimension c - dim Z is not positive.
    """
    big = conormal_restricted(s)
    small = conormal_in_X(s)
    report = _defect_report(big, small, s.Z, s.c, s.dims[2], stream)
    if report.q is None:
        raise ExcessIntersection(
            "q undefined: codim Y - dim X - dim Z <= 0", report)
    return report


def q_affine_pair(A: PolyRing, L: Ideal, I: Ideal,
                  modulus: Ideal | None = None,
                  stream: Stream | None = None) -> QReport:
    """Two-ideal defect module over A (or A/modulus), with no smoothness
    or complete-intersection hypotheses.

    The big side is I/(I^2 + I*L), the small side (I+L)/(I^2 + L); both are
    generated by the images of the generators of I, because L dies in the
    small quotient.  c and q are not defined for a bare pair and stay None.
    """
    extra = Ideal(A, []) if modulus is None else modulus
    alg = ArtinianAlgebra.from_ideal(I + L + extra)
    isq = I.power(2)
    ann = I + L + extra
    big, _ = _conormal_module(I.gens, isq + I * L + extra, alg, ann)
    small, _ = _conormal_module(I.gens, isq + L + extra, alg, ann)
    return _defect_report(big, small, alg, None, 0, stream)


# --- intrinsic defect module of the intersection algebra --------------------


def _is_nilpotent(X: np.ndarray, p: int) -> bool:
    steps = max(1, X.shape[0]).bit_length() + 1
    N = np.mod(X, p)
    for _ in range(steps):
        if not N.any():
            return True
        N = mat_mul(N, N, p)
    return not N.any()


def _drop_variables(ideal: Ideal, doomed: list) -> Ideal:
    """Image of the ideal in the polynomial ring on the surviving variables."""
    ring = ideal.ring
    kept = [nm for nm in ring.variables if nm not in set(doomed)]
    small = PolyRing(ring.field, tuple(kept), GREVLEX)
    keep_idx = [ring.var_index(nm) for nm in kept]
    out = []
    for f in ideal.eliminate(doomed):
        terms = {tuple(m[i] for i in keep_idx): c for m, c in f.terms}
        out.append(small.poly(terms))
    return Ideal(small, out)


def minimal_generators(ideal: Ideal) -> list:
    """Minimal generating subset of the Groebner basis of an ideal supported
    at the origin, by span selection modulo (maximal ideal) * ideal."""
    ring = ideal.ring
    gb_polys = ideal.groebner().polys
    mvars = [ring.var(nm) for nm in ring.variables]
    m_ideal = Ideal(ring, [v * f for v in mvars for f in gb_polys])
    amod = ArtinianAlgebra.from_ideal(m_ideal)
    quot = ArtinianAlgebra.from_ideal(ideal)
    basis = RowBasis(amod.dim, amod.p)
    out = []
    for f in gb_polys:
        idx, _ = basis.insert(amod.coords(f))
        if idx >= 0:
            out.append(f)
    if len(out) != amod.dim - quot.dim:
        raise RuntimeError("generator count disagrees with the length drop")
    return out


def minimal_presentation(ideal: Ideal) -> Ideal:
    """Image of an origin-supported ideal in its minimal chart.

    Eliminates every variable that carries a linear part in the ideal,
    keeping one variable when all of them would go (a reduced point), and
    verifies the quotient length survives the move.
    """
    ring = ideal.ring
    n = ring.nvars
    p = ring.p
    gb = ideal.groebner().polys
    lin = np.zeros((len(gb), n), dtype=np.int64)
    for i, f in enumerate(gb):
        part = f.homogeneous_part(1)
        for v in range(n):
            lin[i, v] = part.coeff_of(tuple(1 if j == v else 0 for j in range(n)))
    _, piv = rref(lin, p)
    doomed = [ring.variables[j] for j in piv]
    if len(doomed) == n:
        # a reduced point; keep one variable so the re-presented ring is
        # nontrivial (the ideal becomes principal on it)
        doomed = doomed[:-1]
    if not doomed:
        return ideal
    before = ArtinianAlgebra.from_ideal(ideal).dim
    J = _drop_variables(ideal, doomed)
    if ArtinianAlgebra.from_ideal(J).dim != before:
        raise RuntimeError("minimal re-presentation changed the length")
    return J


def qbar(Z: ArtinianAlgebra, stream: Stream | None = None) -> FinModule:
    """Intrinsic defect module of a local finite algebra at the origin.

    Re-presents the algebra minimally (eliminating every variable with a
    linear part in the defining ideal, checking the length survives), takes
    a minimal generating set of the re-presented ideal, and returns the
    cokernel of Hom(I/I^2, A/I) inside the dual of the minimal free cover.
    The result has no free summand.
    """
    p = Z.p
    if Z.ideal is None:
        raise ValueError("needs an ideal-born algebra")
    for X in Z.actions():
        if not _is_nilpotent(X, p):
            raise ValueError("algebra is not local at the origin")
    J = minimal_presentation(Z.ideal)
    alg = ArtinianAlgebra.from_ideal(J)
    if alg.dim != Z.dim:
        raise RuntimeError("minimal re-presentation changed the length")
    gens = minimal_generators(J)
    mu, d = len(gens), alg.dim
    Jmin = Ideal(alg.ring, gens)
    kernel = _spanning_kernel(gens, Jmin.power(2), alg)
    hom_rows = _hom_rows(kernel, mu, alg)
    dim, mats, coordize, _ = _quotient_rep(identity(mu * d), hom_rows,
                                           _algebra_appliers(alg, p), p)
    images = np.zeros((mu, mu * d), dtype=np.int64)
    for i in range(mu):
        images[i, i * d:(i + 1) * d] = alg.one
    return FinModule(dim, mats, coordize(images), alg, annihilator=J)


# --- symmetry ----------------------------------------------------------------


def symmetry_check(s: IntersectionScenario,
                   stream: Stream | None = None) -> SymmetryReport:
    """Defect reports of the scenario and of its swapped orientation.

    Both orientations share the intersection algebra, so the excess
    codimension is the same on both sides; agreement of lengths, mu, and
    the per-component breakdown is what the report records.  Smoothness of
    both sides is assumed, not verified.
    """
    st = stream or Stream(_REPORT_SEED)
    r = s.ring.nvars
    swapped = IntersectionScenario(s.ring, s.I_Y, s.I_X,
                                   (r - s.dims[1], r - s.dims[0], s.dims[2]),
                                   s.Z)
    forward = q_module(s, st.fork(1))
    reverse = q_module(swapped, st.fork(2))
    agree = (forward.dim_q == reverse.dim_q
             and forward.mu_q == reverse.mu_q
             and sorted(forward.per_component) == sorted(reverse.per_component))
    return SymmetryReport(forward, reverse, agree,
                          "smoothness of both sides is assumed, not checked")
