"""Seeded generators for the worked intersection scenarios and experiments.

Every construction is a pure function of its parameters and a Seed, so a
(seed, prime) pair reproduces a run bit for bit.  Degenerate random draws
are redrawn up to a fixed budget and then raised with the seed attached;
silent retries would hide genericity failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .algebra import (
    FieldSpec,
    PolyRing,
    Polynomial,
    poly_to_string,
    random_poly,
)
from .excess import IntersectionScenario, make_scenario
from .groebner import Ideal, hilbert_data
from .linalg import nullspace, rank, solve
from .rng import Stream

_BUDGET = 8


@dataclass(frozen=True)
class Seed:
    """Reproducibility token: 64-bit seed plus the coefficient field."""

    seed: int
    p: FieldSpec = field(default_factory=lambda: FieldSpec(32003))

    def stream(self) -> Stream:
        return Stream(self.seed)


def _transplant(poly: Polynomial, target: PolyRing, index_map) -> Polynomial:
    """Re-home a polynomial along an injective variable index map."""
    terms = {}
    for m, c in poly.terms:
        e = [0] * target.nvars
        for src, dst in enumerate(index_map):
            e[dst] = m[src]
        terms[tuple(e)] = c
    return target.poly(terms)


def _graph_scenario(s: Seed, graph_count: int, base_count: int, label: str,
                    expected: int, graph_is_x: bool) -> IntersectionScenario:
    """Graph of random quadrics against its axis plane.

    The chart ring carries the quadrics themselves; the ambient ring lists
    the graph variables first, then the base variables.  Which side plays
    the smooth first argument is the only difference between the two
    published models built this way.
    """
    chart = PolyRing(s.p, tuple(f"a{i}" for i in range(1, base_count + 1)))
    stream = s.stream()
    for trial in range(_BUDGET):
        st = stream.fork(trial)
        quads = [random_poly(chart, 2, st.fork(i), homogeneous=True)
                 for i in range(graph_count)]
        hd = hilbert_data(Ideal(chart, quads))
        if hd.krull_dim == 0 and hd.degree == expected:
            break
    else:
        raise RuntimeError(
            f"degenerate quadrics for {label} from seed {s.seed}")
    names = tuple(f"x{i}" for i in range(1, graph_count + 1)) + chart.variables
    R = PolyRing(s.p, names)
    amap = list(range(graph_count, graph_count + base_count))
    graph_gens = []
    for i, f in enumerate(quads):
        g = R.var(i) - _transplant(f, R, amap)
        if g.homogeneous_part(1) != R.var(i):
            raise RuntimeError("graph generator lost its linear witness")
        graph_gens.append(g)
    graph = Ideal(R, graph_gens)
    axis = Ideal(R, [R.var(i) for i in range(graph_count)])
    chart_ideal = Ideal(chart, quads)
    if graph_is_x:
        return make_scenario(R, graph, axis, base_count, graph_count,
                             chart_ring=chart, chart_ideal=chart_ideal)
    return make_scenario(R, axis, graph, base_count, graph_count,
                         chart_ring=chart, chart_ideal=chart_ideal)


def gen_quadric_graph(n: int, s: Seed) -> IntersectionScenario:
    """Graph of n+1 random quadrics on A^n against the axis n-plane.

    The intersection is supported at the origin with length
    C(n+1, ceil(n/2)); draws missing that length are redrawn.
    """
    if not 1 <= n <= 8:
        raise ValueError("supported range is 1 <= n <= 8")
    expected = comb(n + 1, (n + 1) // 2)
    scen = _graph_scenario(s, n + 1, n, f"quadric graph n={n}", expected,
                           graph_is_x=True)
    if scen.Z.dim != expected:
        raise RuntimeError(f"intersection length drifted from seed {s.seed}")
    return scen


def gen_EI_model(s: Seed) -> IntersectionScenario:
    """Four-fold axis plane meeting the graph of 7 random quadrics on A^4."""
    scen = _graph_scenario(s, 7, 4, "excess model", 8, graph_is_x=False)
    if scen.Z.dim != 8:
        raise RuntimeError(f"intersection length drifted from seed {s.seed}")
    return scen


def gen_fatpoint_model(s: Seed) -> IntersectionScenario:
    """Square of a point on a 3-plane, cut out by a codim-6 graph CI.

    The second argument maps each degree-2 monomial in x, y, z to an
    independent random linear form in the u variables; the intersection
    ideal is exactly (x,y,z)^2 + (u).
    """
    R = PolyRing(s.p, ("x", "y", "z") + tuple(f"u{i}" for i in range(1, 7)))
    chart = PolyRing(s.p, ("x", "y", "z"))
    p = R.p
    monos = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    stream = s.stream()
    for trial in range(_BUDGET):
        st = stream.fork(trial)
        M = np.array([[st.randrange(p) for _ in range(6)] for _ in range(6)],
                     dtype=np.int64)
        if rank(M, p) == 6:
            break
    else:
        raise RuntimeError(f"degenerate linear forms from seed {s.seed}")
    ygens = []
    for j, m in enumerate(monos):
        quad = R.poly({m + (0,) * 6: 1})
        ell = R.poly({tuple(0 if k != 3 + i else 1 for k in range(9)):
                      int(M[j][i]) for i in range(6) if M[j][i]})
        ygens.append(quad - ell)
    I_X = Ideal(R, [R.var(3 + i) for i in range(6)])
    I_Y = Ideal(R, ygens)
    reference = Ideal(R, [R.poly({m + (0,) * 6: 1}) for m in monos]
                      + [R.var(3 + i) for i in range(6)])
    if not (I_X + I_Y).equals(reference):
        raise RuntimeError(f"intersection ideal drifted from seed {s.seed}")
    chart_ideal = Ideal(chart, [chart.poly({m: 1}) for m in monos])
    return make_scenario(R, I_X, I_Y, 3, 6, chart_ring=chart,
                         chart_ideal=chart_ideal)


# --- determinantal surface and its trisecant lines ----------------------------


@dataclass(frozen=True)
class ReyeData:
    """Symmetric 4x4 of random linear forms on P^5 with its minor surface."""

    ring: PolyRing
    A: tuple
    I_X: Ideal
    detA: Polynomial


@dataclass(frozen=True)
class ReyeCheck:
    """One trisecant-line verification at a sampled quartic point."""

    point: tuple
    det_degree: int
    point_on_line: bool
    intersection_degree: int
    attempts: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "point": list(self.point),
            "det_degree": self.det_degree,
            "point_on_line": self.point_on_line,
            "line_degree": self.intersection_degree,
            "attempts": self.attempts,
            "passed": self.passed,
        }


def _det(rows, ring: PolyRing) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = ring.zero()
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(minor, ring)
        acc = acc - term if j % 2 else acc + term
    return acc


def gen_reye(s: Seed) -> ReyeData:
    """Symmetric matrix model of a surface in P^5 swept by trisecants."""
    ring = PolyRing(s.p, tuple(f"y{i}" for i in range(6)))
    st = s.stream()
    entries = {}
    k = 0
    for i in range(4):
        for j in range(i, 4):
            f = random_poly(ring, 1, st.fork(k), homogeneous=True)
            entries[(i, j)] = entries[(j, i)] = f
            k += 1
    A = tuple(tuple(entries[(i, j)] for j in range(4)) for i in range(4))
    minors = []
    seen = set()
    for i in range(4):
        for j in range(4):
            sub = [[A[a][b] for b in range(4) if b != j]
                   for a in range(4) if a != i]
            m = _det(sub, ring)
            if m not in seen:
                seen.add(m)
                minors.append(m)
    det = _det([list(row) for row in A], ring)
    if det.degree() != 4:
        raise RuntimeError(f"degenerate symmetric matrix from seed {s.seed}")
    return ReyeData(ring, A, Ideal(ring, minors), det)


def _roots_scan(coeffs, p: int):
    """All roots in F_p of sum coeffs[k] t^k, by vectorized evaluation."""
    t = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed([int(c) % p for c in coeffs]):
        acc = (acc * t + c) % p
    return [int(r) for r in t[acc == 0]]


def reye_trisecant(d: ReyeData, s: Seed) -> ReyeCheck:
    """Sample a point of det A = 0 and verify the trisecant line through it.

    The left kernel of the scalar matrix at the point gives a row-space
    vector of 4 linear forms; their zero locus is a line through the point
    meeting the minor surface in a projective scheme of degree 3.
    """
    ring = d.ring
    p = ring.p
    st = s.stream().fork(7)
    irrelevant = Ideal(ring, [ring.var(i) for i in range(6)])
    attempts = 0
    for trial in range(_BUDGET):
        attempts += 1
        tr = st.fork(trial)
        u = [tr.randrange(p) for _ in range(6)]
        w = [tr.randrange(p) for _ in range(6)]
        # restrict det A to the line u + t*w and interpolate the quartic
        ys = [d.detA.evaluate([(a + t * b) % p for a, b in zip(u, w)])
              for t in range(5)]
        V = np.array([[pow(t, k, p) for k in range(5)] for t in range(5)],
                     dtype=np.int64)
        coeffs = solve(V, np.array(ys, dtype=np.int64), p)
        if not np.any(coeffs % p):
            continue
        for t0 in _roots_scan(coeffs, p):
            pt = [(a + t0 * b) % p for a, b in zip(u, w)]
            if not any(pt):
                continue
            Ap = np.array([[d.A[i][j].evaluate(pt) for j in range(4)]
                           for i in range(4)], dtype=np.int64)
            ker = nullspace(Ap, p)
            if ker.shape[0] != 1:
                continue
            gs = []
            for j in range(4):
                g = ring.zero()
                for i in range(4):
                    if ker[0][i]:
                        g = g + ring.constant(int(ker[0][i])) * d.A[i][j]
                gs.append(g)
            unit = lambda v: tuple(1 if k == v else 0 for k in range(6))
            rows = np.array([[g.coeff_of(unit(v)) for v in range(6)]
                             for g in gs], dtype=np.int64)
            if rank(rows, p) != 4:
                continue
            on_line = not any(g.evaluate(pt) % p for g in gs)
            sat, _ = (d.I_X + Ideal(ring, gs)).saturate(irrelevant)
            hd = hilbert_data(sat)
            if hd.krull_dim != 1:
                continue
            return ReyeCheck(tuple(pt), d.detA.degree(), on_line, hd.degree,
                             attempts, on_line and hd.degree == 3
                             and d.detA.degree() == 4)
    raise RuntimeError(f"no usable quartic point from seed {s.seed}")


# --- secant lines of complete intersections -----------------------------------


_ACCEPTED = {(1, 2), (2, 3)}


@dataclass(frozen=True)
class CISecantScenario:
    """Complete intersection of r-n degree-l forms in P^r, r = nl/(l-1)+1."""

    ring: PolyRing
    gens: tuple
    n: int
    l: int
    r: int
    seed: Seed


@dataclass(frozen=True)
class SecantCheck:
    """Line-through-a-point verification for the secant sweep."""

    point: tuple
    cone_nonempty: bool
    direction: tuple | None
    line_degree: int | None
    attempts: int
    passed: bool
    note: str

    def to_json_dict(self) -> dict:
        return {
            "point": list(self.point),
            "cone_nonempty": self.cone_nonempty,
            "direction": None if self.direction is None
            else list(self.direction),
            "line_degree": self.line_degree,
            "attempts": self.attempts,
            "passed": self.passed,
            "note": self.note,
        }


def gen_ci_secant(n: int, l: int, s: Seed) -> CISecantScenario:
    """Complete intersection whose l-secant lines sweep all of P^r."""
    if (n, l) not in _ACCEPTED:
        raise ValueError("accepted (n, l) pairs: (1, 2) and (2, 3); other "
                         "parameters degenerate or exceed desk scale")
    r = (n * l) // (l - 1) + 1
    ring = PolyRing(s.p, tuple(f"y{i}" for i in range(r + 1)))
    stream = s.stream()
    expected = l ** (r - n)
    for trial in range(_BUDGET):
        st = stream.fork(trial)
        gens = [random_poly(ring, l, st.fork(i), homogeneous=True)
                for i in range(r - n)]
        hd = hilbert_data(Ideal(ring, gens))
        if hd.krull_dim == n + 1 and hd.degree == expected:
            return CISecantScenario(ring, tuple(gens), n, l, r, s)
    raise RuntimeError(
        f"degenerate forms for (n,l)=({n},{l}) from seed {s.seed}")


def _cone_forms(hp: Polynomial, l: int, dring: PolyRing) -> list:
    """Coefficient forms of the t-expansion about the 0th coordinate point."""
    buckets = [dict() for _ in range(l + 1)]
    for m, c in hp.terms:
        j = l - m[0]
        if j > 0:
            buckets[j][tuple(m[1:])] = c
    return [dring.poly(b) for b in buckets[1:] if b]


def _common_binary_roots(gens, active, p: int):
    """Common projective roots (a:b) over F_p in the two active variables."""
    i, j = active
    t = np.arange(p, dtype=np.int64)
    ok = np.ones(p, dtype=bool)
    inf_ok = True
    for g in gens:
        acc = np.zeros(p, dtype=np.int64)
        deg = max(m[j] for m, _ in g.terms)
        coeffs = [0] * (deg + 1)
        at_inf = 0
        for m, c in g.terms:
            coeffs[m[j]] = c
            if m[i] == 0:
                at_inf = c
        for c in reversed(coeffs):
            acc = (acc * t + int(c)) % p
        ok &= acc == 0
        inf_ok = inf_ok and at_inf % p == 0
    out = [(1, int(r)) for r in t[ok]]
    if inf_ok:
        out.append((0, 1))
    return out


def _rational_cone_point(cone, dring: PolyRing):
    """A projective F_p-point of the direction cone, or None.

    Solves the linear layer exactly, then the two shapes the accepted
    parameter set produces: a binary system, or a surface pair reduced by
    eliminating the last parameter.
    """
    p = dring.p
    linear = [g for g in cone if g.degree() == 1]
    higher = [g for g in cone if g.degree() > 1]
    unit = lambda v: tuple(1 if k == v else 0 for k in range(dring.nvars))
    rows = np.array([[g.coeff_of(unit(v)) for v in range(dring.nvars)]
                     for g in linear], dtype=np.int64)
    B = nullspace(rows, p) if linear else np.eye(dring.nvars, dtype=np.int64)
    w = B.shape[0]
    if w == 0 or w > 3:
        return None
    sring = PolyRing(dring.field, tuple(f"s{k}" for k in range(1, w + 1)))
    images = {
        name: sring.poly({tuple(1 if t == k else 0 for t in range(w)):
                          int(B[k][v]) for k in range(w) if B[k][v]})
        for v, name in enumerate(dring.variables)
    }
    restricted = [g.substitute(images) for g in higher]
    restricted = [g for g in restricted if not g.is_zero()]
    sol = None
    if not restricted:
        sol = (1,) + (0,) * (w - 1)
    elif w == 1:
        sol = None
    elif w == 2:
        cands = _common_binary_roots(restricted, (0, 1), p)
        sol = cands[0] if cands else None
    else:
        elim = Ideal(sring, restricted).eliminate([sring.variables[2]])
        elim = [g for g in elim if not g.is_zero()]
        if not elim:
            return None
        for a, b in _common_binary_roots(elim, (0, 1), p):
            subs = {sring.variables[0]: a, sring.variables[1]: b}
            slices = [g.substitute(subs) for g in restricted]
            slices = [g for g in slices if not g.is_zero()]
            if not slices:
                sol = (a, b, 0)
                break
            deg = max(max(m[2] for m, _ in g.terms) for g in slices)
            t = np.arange(p, dtype=np.int64)
            ok = np.ones(p, dtype=bool)
            for g in slices:
                coeffs = [0] * (deg + 1)
                for m, c in g.terms:
                    coeffs[m[2]] = c
                acc = np.zeros(p, dtype=np.int64)
                for c in reversed(coeffs):
                    acc = (acc * t + int(c)) % p
                ok &= acc == 0
            hits = t[ok]
            if hits.size:
                sol = (a, b, int(hits[0]))
                break
    if sol is None:
        return None
    v = np.zeros(dring.nvars, dtype=np.int64)
    for k, c in enumerate(sol):
        v = (v + c * B[k]) % p
    if not np.any(v):
        return None
    for g in cone:
        if g.evaluate([int(x) for x in v]) % p:
            raise RuntimeError("cone point fails to satisfy a cone form")
    return v


def _frame(pt, p: int) -> np.ndarray:
    """Invertible matrix whose first column is pt (unit columns elsewhere)."""
    m = len(pt)
    pivot = next(i for i, x in enumerate(pt) if x % p)
    cols = [np.array(pt, dtype=np.int64) % p]
    cols += [np.eye(m, dtype=np.int64)[:, j] for j in range(m) if j != pivot]
    return np.stack(cols, axis=1)


def secant_through_point(scen: CISecantScenario, stream: Stream | None = None
                         ) -> SecantCheck:
    """Find an l-secant line of the CI through a random point.

    Asserts that the cone of directions is nonempty over the closure; the
    rational-direction leg is best effort (a finite field may lack one),
    and when a direction exists the line's intersection degree with the
    CI is verified to be at least l.
    """
    st = stream if stream is not None else scen.seed.stream().fork(101)
    ring, l, r = scen.ring, scen.l, scen.r
    p = ring.p
    dring = PolyRing(ring.field, tuple(f"d{i}" for i in range(1, r + 1)))
    irrelevant = Ideal(ring, [ring.var(i) for i in range(r + 1)])
    fallback = None
    for trial in range(_BUDGET):
        tr = st.fork(trial)
        pt = [tr.randrange(p) for _ in range(r + 1)]
        vals = np.array([[g.evaluate(pt) for g in scen.gens]], dtype=np.int64)
        if not np.any(vals % p) or not any(pt):
            continue
        members = []
        for lam in nullspace(vals, p):
            h = ring.zero()
            for i, c in enumerate(lam):
                if c:
                    h = h + ring.constant(int(c)) * scen.gens[i]
            members.append(h)
        M = _frame(pt, p)
        images = {
            name: ring.poly({tuple(1 if t == j else 0 for t in range(r + 1)):
                             int(M[i][j]) for j in range(r + 1) if M[i][j]})
            for i, name in enumerate(ring.variables)
        }
        cone = []
        for h in members:
            cone.extend(_cone_forms(h.substitute(images), l, dring))
        nonempty = Ideal(dring, cone).krull_dim() >= 1
        v = _rational_cone_point(cone, dring)
        if v is None:
            fallback = SecantCheck(
                tuple(pt), nonempty, None, None, trial + 1, nonempty,
                "no rational direction; existence holds over the closure")
            continue
        q = (M @ np.concatenate([[0], v])) % p
        lin = nullspace(np.array([pt, q], dtype=np.int64) % p, p)
        forms = [ring.poly({tuple(1 if t == j else 0 for t in range(r + 1)):
                            int(row[j]) for j in range(r + 1) if row[j]})
                 for row in lin]
        if any(f.evaluate(pt) % p or f.evaluate([int(x) for x in q]) % p
               for f in forms):
            raise RuntimeError("line forms fail at their defining points")
        sat, _ = (Ideal(ring, list(scen.gens))
                  + Ideal(ring, forms)).saturate(irrelevant)
        hd = hilbert_data(sat)
        deg = hd.degree if hd.krull_dim == 1 else None
        return SecantCheck(tuple(pt), nonempty,
                           tuple(int(x) for x in v), deg, trial + 1,
                           nonempty and deg is not None and deg >= l, "")
    if fallback is not None:
        return fallback
    raise RuntimeError(f"no usable sample point from seed {scen.seed.seed}")


def _order_token(order) -> str:
    if order.kind == "block":
        return f"block({order.split})"
    return order.kind


def scenario_text(s: IntersectionScenario) -> str:
    """Dump a scenario in the parser's session format for reproduction."""
    R = s.ring
    head = (f"ring R = Fp({R.p})[{', '.join(R.variables)}], "
            f"{_order_token(R.order)}")
    xs = ", ".join(poly_to_string(g) for g in s.I_X.gens) or "0"
    ys = ", ".join(poly_to_string(g) for g in s.I_Y.gens) or "0"
    return f"{head};\nideal X = {xs};\nideal Y = {ys};\n"
