"""Groebner bases over F_p and the ideal calculus built on them.

The engine packs exponent vectors into single python integers, one bit field
per variable with a guard bit on top, so divisibility, quotients and lcm are
a few integer operations.  Monomial order keys are additive integers: the
key of a product is the sum of keys, which lets normal-form reduction shift
whole polynomials by pure adds.  Field overflow trips a guard bit and the
computation restarts with wider fields.

Pair handling is Buchberger with the Gebauer-Moller update and sugar-first
selection.  Reduced bases are unique, monic, and sorted by leading term, so
ideal equality is tuple equality.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    GREVLEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    block_order,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_MAX_PAIRS = 1_000_000


class ResourceAbort(RuntimeError):
    """The pair budget ran out before the basis stabilized."""

    def __init__(self, pairs_done: int, basis_size: int, max_pairs: int):
        super().__init__(
            f"groebner run aborted after {pairs_done} S-pairs "
            f"(budget {max_pairs}, partial basis size {basis_size})"
        )
        self.pairs_done = pairs_done
        self.basis_size = basis_size
        self.max_pairs = max_pairs


class _Repack(Exception):
    """Internal: an exponent field overflowed, re-encode with wider fields."""


class _Enc:
    """Packed-monomial codec for a fixed ring and field width."""

    __slots__ = ("n", "B", "order", "pmax", "gmask", "fullmask", "_shifts", "_degslot", "_tailbits")

    def __init__(self, nvars: int, order: MonomialOrder, bits: int):
        self.n = nvars
        self.B = bits
        self.order = order
        self.pmax = (1 << (bits - 1)) - 1
        self.gmask = 0
        for i in range(nvars):
            self.gmask |= 1 << ((i + 1) * bits - 1)
        self.fullmask = (1 << (nvars * bits)) - 1
        # variable i sits at shift (n-1-i)*B: leading variables most significant
        self._shifts = tuple((nvars - 1 - i) * bits for i in range(nvars))
        # within a grevlex key, the degree slot sits above n*B reversed-packed bits
        self._degslot = nvars * bits
        if order.kind == "block":
            k = order.split
            self._tailbits = (nvars - k) * bits + bits + nvars.bit_length() + 1
        else:
            self._tailbits = 0

    def pack(self, e) -> int:
        m = 0
        pmax = self.pmax
        for v, s in zip(e, self._shifts):
            if v > pmax:
                raise _Repack
            m |= v << s
        return m

    def unpack(self, m: int):
        B, mask = self.B, (1 << self.B) - 1
        out = [0] * self.n
        for i, s in enumerate(self._shifts):
            out[i] = (m >> s) & mask
        return tuple(out)

    def deg(self, m: int) -> int:
        B, mask = self.B, (1 << self.B) - 1
        d = 0
        while m:
            d += m & mask
            m >>= B
        return d

    def divides(self, a: int, b: int) -> bool:
        return ((b | self.gmask) - a) & self.gmask == self.gmask

    def lcm(self, a: int, b: int) -> int:
        t = ((b | self.gmask) - a) & self.gmask
        pm = t - (t >> (self.B - 1))
        return (b & pm) | (a & (self.fullmask ^ pm))

    def coprime(self, a: int, b: int) -> bool:
        return self.lcm(a, b) == a + b

    def _gkey(self, e, lo: int, hi: int) -> int:
        # grevlex on the slice: (degree, negated reverse-packed exponents)
        d = 0
        rev = 0
        B = self.B
        for i in range(lo, hi):
            d += e[i]
            rev |= e[i] << ((i - lo) * B)
        return (d << ((hi - lo) * B)) - rev

    def key_of_tuple(self, e) -> int:
        kind = self.order.kind
        if kind == "grevlex":
            return self._gkey(e, 0, self.n)
        if kind == "lex":
            m = 0
            for v, s in zip(e, self._shifts):
                m |= v << s
            return m
        k = self.order.split
        return (self._gkey(e, 0, k) << self._tailbits) + self._gkey(e, k, self.n)

    def key(self, m: int) -> int:
        return self.key_of_tuple(self.unpack(m))

    def encode_poly(self, f: Polynomial):
        """Polynomial -> list of (key, packed, coeff), descending by key."""
        out = [(self.key_of_tuple(m), self.pack(m), c) for m, c in f.terms]
        out.sort(reverse=True)
        return out

    def decode_poly(self, terms, ring: PolyRing) -> Polynomial:
        return Polynomial(ring, tuple((self.unpack(m), c) for _, m, c in terms))


def _initial_bits(gens) -> int:
    maxe = 1
    for f in gens:
        for m, _ in f.terms:
            for e in m:
                if e > maxe:
                    maxe = e
    return max(5, (2 * maxe + 2).bit_length() + 1)


def _monic_terms(terms, p: int):
    inv = pow(terms[0][2], p - 2, p)
    return [(k, m, c * inv % p) for k, m, c in terms]


def _nf_terms(terms, basis, enc: _Enc, p: int):
    """Full normal form of a term list against monic engine polynomials.

    basis entries are (ltkey, ltpacked, tail) with tail the non-leading
    terms.  Work queue is a max-heap with lazy deletion backed by a coeff
    dict; keys are additive so shifted tails cost one add per term.
    """
    coeff: dict = {}
    heap: list = []
    for k, m, c in terms:
        prev = coeff.get(m)
        if prev is None:
            coeff[m] = c % p
            heap.append((-k, m))
        else:
            coeff[m] = (prev + c) % p
    heapq.heapify(heap)
    gmask = enc.gmask
    out = []
    while heap:
        negk, m = heapq.heappop(heap)
        c = coeff.pop(m, None)
        if c is None or c == 0:
            continue
        hit = None
        for ltk, ltm, tail in basis:
            if ((m | gmask) - ltm) & gmask == gmask:
                hit = (ltk, ltm, tail)
                break
        if hit is None:
            out.append((-negk, m, c))
            continue
        ltk, ltm, tail = hit
        q = m - ltm
        qk = -negk - ltk
        for tk, tm, tc in tail:
            mm = q + tm
            if mm & gmask:
                raise _Repack
            prev = coeff.get(mm)
            if prev is None:
                coeff[mm] = (-c * tc) % p
                heapq.heappush(heap, (-(qk + tk), mm))
            else:
                coeff[mm] = (prev - c * tc) % p
    return out


def _spoly_terms(f, g, enc: _Enc, p: int):
    fk, fm, _ = f[0]
    gk, gm, _ = g[0]
    L = enc.lcm(fm, gm)
    Lk = enc.key(L)
    uf, ufk = L - fm, Lk - fk
    ug, ugk = L - gm, Lk - gk
    gmask = enc.gmask
    d: dict = {}
    keys: dict = {}
    for tk, tm, tc in f:
        mm = uf + tm
        if mm & gmask:
            raise _Repack
        d[mm] = (d.get(mm, 0) + tc) % p
        keys[mm] = ufk + tk
    for tk, tm, tc in g:
        mm = ug + tm
        if mm & gmask:
            raise _Repack
        d[mm] = (d.get(mm, 0) - tc) % p
        keys.setdefault(mm, ugk + tk)
    out = [(keys[m], m, c) for m, c in d.items() if c]
    out.sort(reverse=True)
    return out


def _buchberger(enc: _Enc, inputs, p: int, max_pairs: int):
    """Reduced Groebner basis of the encoded inputs; raises ResourceAbort."""
    G: list = []       # engine polys, monic, lt first
    lts: list = []     # (ltkey, ltpacked, tail) view for the reducer search
    sugars: list = []
    pairs: dict = {}   # (i, j) -> (sugar, lcmkey, lcmpacked)
    heap: list = []

    def add_element(terms, sugar):
        t = len(G)
        ltk, ltm, _ = terms[0]
        # Gebauer-Moller update: prune old pairs made redundant by lt(t)
        for ij in list(pairs):
            i, j = ij
            L = pairs[ij][2]
            if enc.divides(ltm, L) and enc.lcm(lts[i][1], ltm) != L and enc.lcm(lts[j][1], ltm) != L:
                del pairs[ij]
        # candidate pairs (i, t), filtered so only minimal lcms survive
        cand = [(i, enc.lcm(lts[i][1], ltm)) for i in range(t)]
        kept: list = []
        while cand:
            i, L = cand.pop()
            if enc.coprime(lts[i][1], ltm) or (
                all(not enc.divides(L2, L) for _, L2 in cand)
                and all(not enc.divides(L2, L) for _, L2 in kept)
            ):
                kept.append((i, L))
        G.append(terms)
        lts.append((ltk, ltm, terms[1:]))
        sugars.append(sugar)
        for i, L in kept:
            if enc.coprime(lts[i][1], ltm):
                continue
            Lk = enc.key(L)
            sug = max(
                sugars[i] + enc.deg(L - lts[i][1]),
                sugar + enc.deg(L - ltm),
            )
            pairs[(i, t)] = (sug, Lk, L)
            heapq.heappush(heap, (sug, Lk, i, t))

    seen = set()
    for terms in sorted(inputs, key=lambda ts: ts[0][0]):
        if not terms:
            continue
        terms = _monic_terms(terms, p)
        sig = tuple((m, c) for _, m, c in terms)
        if sig in seen:
            continue
        seen.add(sig)
        add_element(terms, max(enc.deg(m) for _, m, _ in terms))

    done = 0
    while heap:
        sug, Lk, i, j = heapq.heappop(heap)
        cur = pairs.pop((i, j), None)
        if cur is None:
            continue
        done += 1
        if done > max_pairs:
            raise ResourceAbort(done, len(G), max_pairs)
        s = _spoly_terms(G[i], G[j], enc, p)
        if not s:
            continue
        h = _nf_terms(s, lts, enc, p)
        if h:
            add_element(_monic_terms(h, p), sug)

    # minimalize: keep only elements whose lt no other kept lt divides
    order = sorted(range(len(G)), key=lambda t: lts[t][0])
    keep: list = []
    for t in order:
        if not any(enc.divides(lts[s][1], lts[t][1]) for s in keep):
            keep.append(t)
    basis = [G[t] for t in keep]
    # interreduce: full normal form of each against the others
    for idx in range(len(basis)):
        others = [
            (b[0][0], b[0][1], b[1:])
            for s, b in enumerate(basis)
            if s != idx
        ]
        red = _nf_terms(basis[idx], others, enc, p)
        basis[idx] = _monic_terms(red, p)
    basis.sort(key=lambda ts: ts[0][0])
    return basis


class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, sorted by leading term."""

    __slots__ = ("ring", "polys", "_enc", "_engine")

    def __init__(self, ring: PolyRing, polys: tuple, enc: _Enc, engine: list):
        self.ring = ring
        self.polys = polys
        self._enc = enc
        self._engine = engine

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.polys == other.polys
        )

    def __hash__(self):
        return hash((self.ring, self.polys))

    def leading_monomials(self):
        return tuple(g.leading_monomial() for g in self.polys)

    def is_trivial(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].degree() == 0

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if not f.terms or not self.polys:
            return f
        enc = self._enc
        while True:
            try:
                terms = enc.encode_poly(f)
                red = _nf_terms(terms, self._engine, enc, self.ring.p)
                return enc.decode_poly(red, self.ring)
            except _Repack:
                enc = _Enc(self.ring.nvars, self.ring.order, enc.B * 2)
                self._enc = enc
                self._engine = [
                    (t[0][0], t[0][1], t[1:])
                    for t in (enc.encode_poly(g) for g in self.polys)
                ]

    def reduces_to_zero(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


def groebner(ring: PolyRing, gens, max_pairs: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the generators in the ring's own order."""
    gens = [g for g in gens if not g.is_zero()]
    budget = DEFAULT_MAX_PAIRS if max_pairs is None else max_pairs
    if not gens:
        enc = _Enc(ring.nvars, ring.order, 5)
        return GroebnerBasis(ring, (), enc, [])
    bits = _initial_bits(gens)
    while True:
        enc = _Enc(ring.nvars, ring.order, bits)
        try:
            encoded = [enc.encode_poly(g) for g in gens]
            basis = _buchberger(enc, encoded, ring.p, budget)
            polys = tuple(enc.decode_poly(t, ring) for t in basis)
            engine = [(t[0][0], t[0][1], t[1:]) for t in basis]
            return GroebnerBasis(ring, polys, enc, engine)
        except _Repack:
            bits *= 2


# --- polynomial division -------------------------------------------------


def poly_divmod(f: Polynomial, g: Polynomial):
    """Quotient and remainder of f by a single nonzero g (lt cancellation)."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    p = ring.p
    ltm, ltc = g.leading_monomial(), g.leading_coeff()
    inv = pow(ltc, p - 2, p)
    q: dict = {}
    r: dict = {}
    work = dict(f.terms)
    keyf = ring.order.key
    while work:
        m = max(work, key=keyf)
        c = work.pop(m)
        if c == 0:
            continue
        if mono_divides(ltm, m):
            u = mono_div(m, ltm)
            cu = c * inv % p
            q[u] = (q.get(u, 0) + cu) % p
            for tm, tc in g.terms[1:]:
                mm = mono_mul(u, tm)
                work[mm] = (work.get(mm, 0) - cu * tc) % p
        else:
            r[m] = c
    return ring.poly(q), ring.poly(r)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = poly_divmod(f, g)
    if not r.is_zero():
        raise ValueError("division is not exact")
    return q


# --- ideal calculus -------------------------------------------------------


def _fresh_name(taken, base: str) -> str:
    if base not in taken:
        return base
    i = 0
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def _extend_ring_front(ring: PolyRing, extra: int = 1, base: str = "_t"):
    """Ring with extra fresh variables in front and a block order killing them."""
    taken = set(ring.variables)
    names = []
    for _ in range(extra):
        nm = _fresh_name(taken, base)
        names.append(nm)
        taken.add(nm)
    big = PolyRing(ring.field, tuple(names) + ring.variables, block_order(extra))
    return big, names


def _lift_front(f: Polynomial, big: PolyRing, extra: int) -> Polynomial:
    pad = (0,) * extra
    return Polynomial(big, tuple((pad + m, c) for m, c in f.terms))


def _drop_front(f: Polynomial, small: PolyRing, extra: int) -> Polynomial:
    return Polynomial(small, tuple((m[extra:], c) for m, c in f.terms))


class Ideal:
    """Ideal of a polynomial ring, with a cached reduced Groebner basis."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self._gb = None

    def groebner(self, max_pairs: int | None = None) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner(self.ring, self.gens, max_pairs)
        return self._gb

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.groebner().normal_form(f)

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().reduces_to_zero(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner()
        return all(gb.reduces_to_zero(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.groebner().polys == other.groebner().polys

    def is_trivial(self) -> bool:
        return self.groebner().is_trivial()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.groebner().polys)

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        gens = [f * g for f in self.gens for g in other.gens]
        return Ideal(self.ring, gens)

    def power(self, k: int) -> "Ideal":
        if k < 1:
            raise ValueError("power wants k >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def _check(self, other: "Ideal"):
        if self.ring != other.ring:
            raise ValueError("ideals live in different rings")

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J via a tag variable: (t I + (1-t) J) cap k[x]."""
        self._check(other)
        ring = self.ring
        big, (tname,) = _extend_ring_front(ring)
        t = big.var(tname)
        one_minus_t = big.one() - t
        gens = [t * _lift_front(f, big, 1) for f in self.gens]
        gens += [one_minus_t * _lift_front(g, big, 1) for g in other.gens]
        gb = groebner(big, gens)
        out = []
        for h in gb.polys:
            if all(m[0] == 0 for m, _ in h.terms):
                out.append(_drop_front(h, ring, 1))
        return Ideal(ring, out)

    def quotient(self, other) -> "Ideal":
        """Ideal quotient (I : J); other may be a Polynomial or an Ideal."""
        if isinstance(other, Polynomial):
            if other.is_zero():
                raise ZeroDivisionError("quotient by the zero polynomial")
            meet = self.intersect(Ideal(self.ring, [other]))
            return Ideal(self.ring, [exact_div(h, other) for h in meet.groebner().polys])
        self._check(other)
        out = None
        for g in other.gens:
            part = self.quotient(g)
            out = part if out is None else out.intersect(part)
        if out is None:
            raise ValueError("quotient by the zero ideal")
        return out

    def saturate(self, other) -> tuple:
        """Saturation (I : J^infty); returns (ideal, steps).

        steps == 0 means the input was already saturated.
        """
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        cur = self
        steps = 0
        while True:
            nxt = cur.quotient(other)
            if nxt.groebner().polys == cur.groebner().polys:
                return cur, steps
            cur = nxt
            steps += 1

    def eliminate(self, names) -> list:
        """Generators of I cap k[remaining variables].

        The computation runs in an internal ring that permutes the doomed
        variables to the front under a block order; results are mapped back
        to the original ring (so they are generators, not necessarily a
        Groebner basis for the original order).
        """
        ring = self.ring
        doomed = [ring.var_index(nm) for nm in names]
        if not doomed:
            return list(self.groebner().polys)
        dset = set(doomed)
        rest = [i for i in range(ring.nvars) if i not in dset]
        perm = doomed + rest  # position j in the big ring holds old index perm[j]
        big = PolyRing(
            ring.field,
            tuple(ring.variables[i] for i in perm),
            block_order(len(doomed)) if rest else GREVLEX,
        )
        inv = [0] * ring.nvars
        for j, i in enumerate(perm):
            inv[i] = j

        def to_big(f):
            return Polynomial(
                big,
                tuple((tuple(m[i] for i in perm), c) for m, c in f.terms),
            )

        gb = groebner(big, [to_big(g) for g in self.gens])
        k = len(doomed)
        out = []
        for h in gb.polys:
            if all(all(m[j] == 0 for j in range(k)) for m, _ in h.terms):
                back = {}
                for m, c in h.terms:
                    mm = [0] * ring.nvars
                    for j, e in enumerate(m):
                        mm[perm[j]] = e
                    back[tuple(mm)] = c
                out.append(ring.poly(back))
        return out

    # -- dimension and leading-term combinatorics

    def leading_monomials(self):
        return self.groebner().leading_monomials()

    def krull_dim(self) -> int:
        """Krull dimension of the quotient ring (affine)."""
        gb = self.groebner()
        if gb.is_trivial():
            return -1
        supports = []
        for m in gb.leading_monomials():
            supports.append(frozenset(i for i, e in enumerate(m) if e))
        return _max_independent(self.ring.nvars, supports)

    def is_zero_dimensional(self) -> bool:
        """True when the quotient is a finite-dimensional vector space."""
        gb = self.groebner()
        if gb.is_trivial():
            return True  # the empty scheme
        seen = [False] * self.ring.nvars
        for m in gb.leading_monomials():
            nz = [i for i, e in enumerate(m) if e]
            if len(nz) == 1:
                seen[nz[0]] = True
        return all(seen)

    def __repr__(self):
        return f"<ideal with {len(self.gens)} generators in {self.ring}>"


def _max_independent(nvars: int, supports) -> int:
    """Largest set of variables meeting no leading-term support entirely.

    This equals the Krull dimension of the quotient by the leading-term
    ideal, hence of the quotient itself.
    """
    supports = [s for s in supports if s]
    best = 0

    def extend(i: int, chosen: frozenset):
        nonlocal best
        if nvars - i + len(chosen) <= best:
            return
        if i == nvars:
            best = max(best, len(chosen))
            return
        cand = chosen | {i}
        if not any(s <= cand for s in supports):
            extend(i + 1, cand)
        extend(i + 1, chosen)

    if any(not s for s in supports):
        return -1
    extend(0, frozenset())
    return best


# --- Hilbert series of monomial ideals ------------------------------------


def _hs_minimalize(gens):
    gens = sorted(set(gens), key=mono_deg)
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly1_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly1_sub_shift(a, b, s):
    """a - t^s * b over Z."""
    out = list(a) + [0] * max(0, s + len(b) - len(a))
    for j, y in enumerate(b):
        out[s + j] -= y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _hilbert_numerator(gens, nvars: int):
    """Numerator of the Hilbert series of S/(monomial ideal), over (1-t)^nvars."""
    gens = _hs_minimalize(gens)
    if not gens:
        return [1]
    if any(mono_deg(g) == 0 for g in gens):
        return [0]
    # split into connected components on shared variables
    comps = _hs_components(gens)
    if len(comps) > 1:
        out = [1]
        for comp in comps:
            out = _poly1_mul(out, _hilbert_numerator_connected(comp, nvars))
        return out
    return _hilbert_numerator_connected(gens, nvars)


def _hs_components(gens):
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for gi in range(len(gens)):
        parent[gi] = gi
    var_owner: dict = {}
    for gi, g in enumerate(gens):
        for i, e in enumerate(g):
            if e:
                if i in var_owner:
                    ra, rb = find(var_owner[i]), find(gi)
                    if ra != rb:
                        parent[ra] = rb
                else:
                    var_owner[i] = gi
    buckets: dict = {}
    for gi in range(len(gens)):
        buckets.setdefault(find(gi), []).append(gens[gi])
    return list(buckets.values())


def _hilbert_numerator_connected(gens, nvars: int):
    pure = [g for g in gens if sum(1 for e in g if e) == 1]
    if len(pure) == len(gens):
        out = [1]
        for g in gens:
            out = _poly1_sub_shift(out, out, mono_deg(g))
        return out
    if len(gens) == 1:
        return _poly1_sub_shift([1], [1], mono_deg(gens[0]))
    if len(gens) == 2:
        a, b = gens
        out = _poly1_sub_shift([1], [1], mono_deg(a))
        out = _poly1_sub_shift(out, [1], mono_deg(b))
        return _poly1_sub_shift(out, [-1], mono_deg(mono_lcm(a, b)))
    # pivot on the most shared variable
    counts = [0] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    v = max(range(nvars), key=lambda i: counts[i])
    # M + (x_v): drop gens using x_v, add x_v itself
    plus = [g for g in gens if g[v] == 0]
    xv = tuple(1 if i == v else 0 for i in range(nvars))
    plus.append(xv)
    # M : x_v: reduce the x_v exponent by one where positive
    colon = []
    for g in gens:
        if g[v] > 0:
            colon.append(tuple(e - 1 if i == v else e for i, e in enumerate(g)))
        else:
            colon.append(g)
    return _poly1_sub_shift(_hilbert_numerator(plus, nvars), [-c for c in _hilbert_numerator(colon, nvars)], 1)


@lru_cache(maxsize=None)
def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series data of S/I for a homogeneous ideal I.

    numerator is over (1-t)^nvars; krull_dim is the dimension of the affine
    cone; degree is the normalized leading coefficient (the number of points
    counted with multiplicity when krull_dim == 1).
    """

    nvars: int
    numerator: tuple

    def _reduced(self):
        """Divide out all (1 - t) factors; returns (reduced numerator, count)."""
        num = list(self.numerator)
        s = 0
        while num and any(num) and sum(num) == 0:
            acc = 0
            q = [0] * (len(num) - 1)
            for i in range(len(num) - 1):
                acc += num[i]
                q[i] = acc
            num = q
            s += 1
        return num, s

    @property
    def krull_dim(self) -> int:
        """Dimension of the affine cone; -1 for the zero quotient."""
        num, s = self._reduced()
        if not num or not any(num):
            return -1
        return self.nvars - s

    @property
    def degree(self) -> int:
        """Value of the reduced numerator at t = 1; 0 for the zero quotient."""
        num, _ = self._reduced()
        return sum(num)

    def hf(self, d: int) -> int:
        """Hilbert function of S/I in degree d."""
        if d < 0:
            return 0
        n = self.nvars
        out = 0
        for k, c in enumerate(self.numerator):
            if c and k <= d:
                out += c * _binom(n - 1 + d - k, n - 1)
        return out


def hilbert_data(ideal: Ideal) -> HilbertData:
    gb = ideal.groebner()
    if not all(g.is_homogeneous() for g in gb.polys):
        raise ValueError("hilbert series needs a homogeneous ideal")
    lms = list(gb.leading_monomials())
    num = _hilbert_numerator(lms, ideal.ring.nvars)
    return HilbertData(ideal.ring.nvars, tuple(num))
