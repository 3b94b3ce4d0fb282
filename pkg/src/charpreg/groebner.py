"""Buchberger's algorithm over F_p for ideals and submodules of free modules.

The engine works on *vectors*: dictionaries ``{(position, exponents): coeff}``.
An ideal is the rank-one case.  Pairs are chosen by the normal strategy
(smallest sugar degree, then smallest lcm) with the Gebauer-Moeller criteria;
the coprime-lead criterion is only used for ideals.  Input generators are fed
in interleaved by degree, after the S-pairs of the same degree, so for graded
input the engine also reports which generators are minimal.
"""
from __future__ import annotations

import heapq
import operator
import os
from typing import Iterable, Sequence

from .ringcore import Polynomial, PolynomialRing, frobenius_pow

__all__ = [
    "DegreeGuardError",
    "ModuleOrder",
    "Ideal",
    "normal_form",
    "s_polynomial",
    "buchberger",
    "ideal_membership",
    "bracket_power",
    "colon",
    "quotient_by_element",
    "intersect",
    "homogenize",
    "dehomogenize",
    "lead_term_ideal",
    "degree_cap_for",
    "division",
    "divide_exact",
]

GUARD_ENV = "CHARPREG_DEGREE_GUARD"

_add = operator.add
_sub = operator.sub
_le = operator.le


class DegreeGuardError(RuntimeError):
    """A computation tried to work above the configured degree cap."""

    def __init__(self, degree: int, cap: int, context: str = ""):
        self.degree = degree
        self.cap = cap
        self.context = context
        msg = f"degree guard: reached degree {degree} > cap {cap}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


def degree_cap_for(input_degree: int, cap: int | None = None) -> int:
    """Explicit cap, else ``$CHARPREG_DEGREE_GUARD``, else 8 * input degree."""
    if cap is not None:
        return cap
    env = os.environ.get(GUARD_ENV)
    if env:
        return int(env)
    return 8 * max(input_degree, 1)


class ModuleOrder:
    """Term order on ``R^r``: ring order first (``top``) or position first (``pot``).

    Smaller positions are larger.  ``elim=k`` makes every term in positions
    ``< k`` larger than every term in positions ``>= k``.
    """

    def __init__(self, ring: PolynomialRing, kind: str = "top", elim: int = 0):
        if kind not in ("top", "pot"):
            raise ValueError(f"unknown module order {kind!r}")
        self.ring = ring
        self.kind = kind
        self.elim = elim
        self._cache: dict = {}
        self._mk = ring.order.sortkey

    def sortkey(self, term):
        try:
            return self._cache[term]
        except KeyError:
            pass
        pos, exps = term
        mk = self._mk(exps)
        key = (mk, pos) if self.kind == "top" else (pos, mk)
        if self.elim:
            key = (pos >= self.elim,) + key
        self._cache[term] = key
        return key


def _mask(exps) -> int:
    m = 0
    bit = 1
    for e in exps:
        if e:
            m |= bit
        bit <<= 1
    return m


def _divides(a, b) -> bool:
    return all(map(_le, a, b))


class _Engine:
    """State of one Buchberger run; also usable as a plain reducer set."""

    def __init__(self, ring: PolynomialRing, order: ModuleOrder,
                 twists: Sequence[int] = (0,), product_criterion: bool = False,
                 degree_cap: int | None = None, context: str = ""):
        self.ring = ring
        self.p = ring.p
        self.sortkey = order.sortkey
        self.twists = list(twists)
        self.product_criterion = product_criterion
        self.degree_cap = degree_cap
        self.context = context
        self.polys: list = []
        self.leads: list = []
        self.masks: list = []
        self.sugars: list = []
        self.reducers: dict = {}      # position -> indices of active elements
        self.pairs: list = []         # heap of (sugar, lcm key, i, j)
        self.alive: dict = {}         # (i, j) -> lcm term

    # -- degrees
    def term_degree(self, term) -> int:
        return sum(term[1]) + self.twists[term[0]]

    def vec_sugar(self, vec) -> int:
        return max(self.term_degree(t) for t in vec)

    # -- reduction
    def find_reducer(self, term, exclude=-1):
        pos, exps = term
        cands = self.reducers.get(pos)
        if not cands:
            return -1
        m = _mask(exps)
        masks, leads = self.masks, self.leads
        for i in cands:
            if i != exclude and not masks[i] & ~m and _divides(leads[i][1], exps):
                return i
        return -1

    def reduce(self, vec: dict, full: bool = True, exclude: int = -1) -> dict:
        f = dict(vec)
        if not f:
            return f
        sk = self.sortkey
        p = self.p
        heap = [(sk(t), t) for t in f]
        heapq.heapify(heap)
        out: dict = {}
        push, pop = heapq.heappush, heapq.heappop
        polys, leads = self.polys, self.leads
        while heap:
            t = pop(heap)[1]
            c = f.get(t)
            if c is None:
                continue
            gi = self.find_reducer(t, exclude)
            if gi < 0:
                if not full:
                    return f
                out[t] = c
                del f[t]
                continue
            glead = leads[gi]
            mono = tuple(map(_sub, t[1], glead[1]))
            del f[t]
            for gt, gc in polys[gi].items():
                if gt == glead:
                    continue
                nt = (gt[0], tuple(map(_add, gt[1], mono)))
                old = f.get(nt)
                if old is None:
                    f[nt] = (-c * gc) % p
                    push(heap, (sk(nt), nt))
                else:
                    v = (old - c * gc) % p
                    if v:
                        f[nt] = v
                    else:
                        del f[nt]
        return out

    # -- basis maintenance
    def _monic(self, vec: dict):
        lead = min(vec, key=self.sortkey)
        c = vec[lead]
        if c != 1:
            inv = pow(c, -1, self.p)
            p = self.p
            vec = {t: v * inv % p for t, v in vec.items()}
        return vec, lead

    def add_reducer(self, vec: dict, sugar: int | None = None) -> int:
        """Append without pair bookkeeping (division by an arbitrary list)."""
        vec, lead = self._monic(vec)
        idx = len(self.polys)
        self.polys.append(vec)
        self.leads.append(lead)
        self.masks.append(_mask(lead[1]))
        self.sugars.append(self.vec_sugar(vec) if sugar is None else sugar)
        self.reducers.setdefault(lead[0], []).append(idx)
        return idx

    def add_element(self, vec: dict, sugar: int) -> int:
        vec, lead = self._monic(vec)
        t = len(self.polys)
        self.polys.append(vec)
        self.leads.append(lead)
        self.masks.append(_mask(lead[1]))
        self.sugars.append(sugar)
        self._update_pairs(t)
        same = self.reducers.setdefault(lead[0], [])
        lexp = lead[1]
        # drop active elements whose leads the new one divides
        same[:] = [i for i in same if not _divides(lexp, self.leads[i][1])]
        same.append(t)
        return t

    def _update_pairs(self, t: int):
        pos, lt = self.leads[t]
        cand = []
        for i in self.reducers.get(pos, ()):
            li = self.leads[i][1]
            cand.append((i, tuple(map(max, li, lt))))
        # M: drop (i,t) when another (j,t) has a strictly smaller lcm dividing it
        keep = []
        for i, l in cand:
            if any(l2 != l and _divides(l2, l) for _, l2 in cand):
                continue
            keep.append((i, l))
        groups: dict = {}
        for i, l in keep:
            groups.setdefault(l, []).append(i)
        new = []
        for l, idxs in groups.items():
            if self.product_criterion and any(
                    all(not (a and b) for a, b in zip(self.leads[i][1], lt))
                    for i in idxs):
                continue
            new.append((idxs[0], l))
        # B: old pairs whose lcm is divisible by the new lead, strictly
        leads = self.leads
        for key, (ppos, l) in list(self.alive.items()):
            if ppos != pos or not _divides(lt, l):
                continue
            i, j = key
            if (tuple(map(max, leads[i][1], lt)) != l
                    and tuple(map(max, leads[j][1], lt)) != l):
                del self.alive[key]
        for i, l in new:
            term = (pos, l)
            li = leads[i][1]
            sug = max(self.sugars[i] + sum(l) - sum(li),
                      self.sugars[t] + sum(l) - sum(lt))
            self.alive[(i, t)] = term
            heapq.heappush(self.pairs, (sug, self.sortkey(term), i, t))

    def _spoly(self, i: int, j: int, lterm) -> dict:
        pos, l = lterm
        p = self.p
        mi = tuple(map(_sub, l, self.leads[i][1]))
        mj = tuple(map(_sub, l, self.leads[j][1]))
        out = {(tp, tuple(map(_add, te, mi))): c for (tp, te), c in self.polys[i].items()}
        for (tp, te), c in self.polys[j].items():
            nt = (tp, tuple(map(_add, te, mj)))
            v = (out.get(nt, 0) - c) % p
            if v:
                out[nt] = v
            else:
                out.pop(nt, None)
        return out

    def _check_guard(self, degree: int):
        if self.degree_cap is not None and degree > self.degree_cap:
            raise DegreeGuardError(degree, self.degree_cap, self.context)

    def run(self, inputs: Sequence[dict], priorities: Sequence[int] | None = None):
        """Complete a Groebner basis containing ``inputs``.

        Returns the indices of inputs that were not in the span of what came
        before them (the minimal generators, for graded input).
        """
        order = []
        for k, vec in enumerate(inputs):
            if vec:
                pr = priorities[k] if priorities is not None else 0
                order.append((self.vec_sugar(vec), pr, k))
        order.sort()
        minimal = []
        ii = 0
        pairs, alive = self.pairs, self.alive
        while True:
            while pairs and (pairs[0][2], pairs[0][3]) not in alive:
                heapq.heappop(pairs)
            psug = pairs[0][0] if pairs else None
            if ii < len(order) and (psug is None or order[ii][0] < psug):
                sug, _, k = order[ii]
                ii += 1
                self._check_guard(sug)
                r = self.reduce(inputs[k])
                if r:
                    minimal.append(k)
                    self.add_element(r, sug)
                continue
            if psug is None:
                break
            sug, _, i, j = heapq.heappop(pairs)
            lterm = alive.pop((i, j))
            self._check_guard(sug)
            r = self.reduce(self._spoly(i, j, lterm))
            if r:
                self.add_element(r, sug)
        return minimal

    def reduced_basis(self) -> list:
        active = sorted((i for idxs in self.reducers.values() for i in idxs),
                        key=lambda i: self.sortkey(self.leads[i]))
        out = []
        for i in active:
            r = self.reduce(self.polys[i], exclude=i)
            out.append(self._monic(r)[0])
        # ascending by leading term
        out.reverse()
        return out


# --------------------------------------------------------------------------
# conversions


def _poly_vec(f: Polynomial, pos: int = 0) -> dict:
    return {(pos, e): c for e, c in f._terms.items()}


def _vec_poly(ring: PolynomialRing, vec: dict, pos: int = 0) -> Polynomial:
    return Polynomial(ring, {e: c for (tp, e), c in vec.items() if tp == pos})


def _common_ring(polys) -> PolynomialRing:
    rings = {f.ring for f in polys}
    if len(rings) != 1:
        raise ValueError("polynomials from different rings")
    return rings.pop()


def _ideal_engine(ring, degree_cap=None, context=""):
    return _Engine(ring, ModuleOrder(ring), (0,), product_criterion=True,
                   degree_cap=degree_cap, context=context)


# --------------------------------------------------------------------------
# public operations


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of multivariate division of ``f`` by the list ``G``.

    No term of the result is divisible by a leading term of ``G``.  ``G`` need
    not be a Groebner basis; earlier elements are preferred as reducers.
    """
    G = [g for g in G if g]
    if not G:
        raise ValueError("normal_form needs a nonempty list of divisors")
    ring = _common_ring(list(G) + [f])
    eng = _ideal_engine(ring)
    for g in G:
        eng.add_reducer(_poly_vec(g), 0)
    return _vec_poly(ring, eng.reduce(_poly_vec(f)))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/lt(f)) f - (L/lt(g)) g`` for ``L`` the lcm of the leading monomials."""
    lf, lg = f.lead_exp, g.lead_exp
    l = tuple(map(max, lf, lg))
    cf, cg = f.lead_coeff, g.lead_coeff
    p = f.ring.p
    a = f.mul_term(tuple(map(_sub, l, lf)), pow(cf, -1, p))
    b = g.mul_term(tuple(map(_sub, l, lg)), pow(cg, -1, p))
    return a - b


def buchberger(gens: Iterable[Polynomial], degree_cap: int | None = None,
               context: str = "") -> list:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Sorted ascending by leading term.  Raises ``ValueError`` when every input is
    zero and :class:`DegreeGuardError` past the degree cap.
    """
    gens = [g for g in gens]
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    ring = _common_ring(gens)
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("all generators are zero; the zero ideal has no basis")
    cap = degree_cap_for(max(g.degree() for g in gens), degree_cap)
    eng = _ideal_engine(ring, cap, context)
    eng.run([_poly_vec(g) for g in gens])
    return [_vec_poly(ring, v) for v in eng.reduced_basis()]


class Ideal:
    """An ideal given by generators, with a lazily cached reduced Groebner basis."""

    def __init__(self, generators: Iterable[Polynomial], ring: PolynomialRing | None = None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty generator list")
            ring = _common_ring(gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.generators = tuple(g for g in gens if g)
        self.homogeneous = all(g.is_homogeneous() for g in self.generators)
        self._gb = None

    @classmethod
    def unit(cls, ring):
        return cls([ring.one()], ring)

    def gb(self, degree_cap: int | None = None) -> list:
        if self._gb is None:
            if not self.generators:
                self._gb = []
            else:
                self._gb = buchberger(self.generators, degree_cap)
        return self._gb

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb())

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        G = self.gb()
        if not G:
            return False
        return normal_form(f, G).is_zero()

    __contains__ = contains

    def reduce(self, f: Polynomial) -> Polynomial:
        G = self.gb()
        return normal_form(f, G) if G and f else f

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal([other], self.ring)
        return Ideal(self.generators + other.generators, self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal([a * b for a in self.generators for b in other.generators],
                     self.ring)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb() == other.gb()

    __hash__ = None

    def max_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=-1)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    return I.contains(f)


def bracket_power(I: Ideal, e: int) -> Ideal:
    """Frobenius power: generated by the ``p^e``-th powers of the generators."""
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e == 0:
        return I
    return Ideal([frobenius_pow(g, e) for g in I.generators], I.ring)


def lead_term_ideal(I: Ideal) -> list:
    """Exponent vectors of the leading monomials of the reduced Groebner basis."""
    return [g.lead_exp for g in I.gb()]


def quotient_by_element(I: Ideal, f: Polynomial, degree_cap: int | None = None) -> Ideal:
    """``(I : f)``, read off the syzygies of ``[f, g_1, ..., g_m]``.

    A relation ``a f + sum b_i g_i = 0`` has first coordinate ``a`` in
    ``(I : f)``, and every element arises that way.  The relations are found by
    an elimination Groebner basis of the vectors ``(f, 1)`` and ``(g_i, 0)``.
    """
    ring = I.ring
    if not f:
        return Ideal.unit(ring)
    if I.is_zero():
        return Ideal([], ring)
    d = f.degree()
    twists = (0, d) if f.is_homogeneous() else (0, 0)
    cap = degree_cap_for(max(d, I.max_degree()), degree_cap)
    eng = _Engine(ring, ModuleOrder(ring, "top", elim=1), twists,
                  degree_cap=cap, context="colon")
    vecs = [_poly_vec(g) for g in I.generators]
    fv = _poly_vec(f)
    fv[(1, ring._zero_exp)] = 1
    vecs.append(fv)
    eng.run(vecs)
    gens = [_vec_poly(ring, v, 1) for v in eng.reduced_basis()
            if all(t[0] == 1 for t in v)]
    return Ideal(gens, ring)


def intersect(*ideals: Ideal, degree_cap: int | None = None) -> Ideal:
    """Intersection via syzygies of ``e_0 + ... + e_k`` against ``I_j e_j``."""
    if not ideals:
        raise ValueError("nothing to intersect")
    ring = ideals[0].ring
    if len(ideals) == 1:
        return ideals[0]
    if any(I.is_zero() for I in ideals):
        return Ideal([], ring)
    k = len(ideals)
    zero = ring._zero_exp
    vecs = [{(j, zero): 1 for j in range(k + 1)}]
    for j, I in enumerate(ideals):
        vecs.extend(_poly_vec(g, j) for g in I.generators)
    cap = degree_cap_for(max(I.max_degree() for I in ideals), degree_cap)
    eng = _Engine(ring, ModuleOrder(ring, "top", elim=k), (0,) * (k + 1),
                  degree_cap=cap, context="intersection")
    eng.run(vecs)
    gens = [_vec_poly(ring, v, k) for v in eng.reduced_basis()
            if all(t[0] == k for t in v)]
    return Ideal(gens, ring)


def colon(I: Ideal, J: Ideal, degree_cap: int | None = None) -> Ideal:
    """``(I : J) = {r : rJ in I}`` as the intersection of ``(I : f_j)``."""
    if J.ring != I.ring:
        raise ValueError("ideals live in different rings")
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    parts = [quotient_by_element(I, f, degree_cap) for f in J.generators]
    if any(P.is_unit() for P in parts):
        parts = [P for P in parts if not P.is_unit()] or parts[:1]
    return intersect(*parts, degree_cap=degree_cap)


def homogenize(I: Ideal, name: str = "Z", via_gb: bool = False) -> Ideal:
    """Homogenize generators with a fresh last variable ``name``.

    With ``via_gb`` the generators are first replaced by a Groebner basis for a
    degree order, which yields the homogenization of the ideal itself rather
    than the ideal of homogenized generators.
    """
    ring = I.ring
    if name in ring.variables:
        raise ValueError(f"variable {name!r} already exists in the ring")
    big = ring.extend(name)
    gens = I.generators
    if via_gb and gens:
        if ring.order.is_graded:
            gens = I.gb()
        else:
            graded = PolynomialRing(ring.p, ring.variables, "grevlex")
            gens = buchberger([Polynomial(graded, dict(g._terms)) for g in gens])
    out = []
    for g in gens:
        d = g.degree()
        out.append(Polynomial(big, {e + (d - sum(e),): c for e, c in g._terms.items()}))
    return Ideal(out, big)


def dehomogenize(I: Ideal) -> Ideal:
    """Set the last variable to 1 and drop it from the ring."""
    ring = I.ring
    if ring.nvars < 2:
        raise ValueError("no variable to dehomogenize")
    small = PolynomialRing(ring.p, ring.variables[:-1], ring.order.kind,
                           ring.order.block)
    p = ring.p
    out = []
    for g in I.generators:
        terms: dict = {}
        for e, c in g._terms.items():
            k = e[:-1]
            v = (terms.get(k, 0) + c) % p
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        out.append(Polynomial(small, terms))
    return Ideal(out, small)


def division(f: Polynomial, G: Sequence[Polynomial]):
    """Multivariate division: ``f = sum q_i G[i] + r`` with ``r`` fully reduced.

    Returns ``(quotients, remainder)``; earlier divisors are tried first.
    """
    ring = f.ring
    p = ring.p
    key = ring.order.sortkey
    leads = [(g.lead_exp, pow(g.lead_coeff, -1, p)) for g in G]
    quots = [dict() for _ in G]
    rem: dict = {}
    work = dict(f._terms)
    while work:
        t = min(work, key=key)
        c = work[t]
        for i, (le, inv) in enumerate(leads):
            if _divides(le, t):
                m = tuple(map(_sub, t, le))
                k = c * inv % p
                quots[i][m] = (quots[i].get(m, 0) + k) % p
                for e, v in G[i]._terms.items():
                    ne = tuple(map(_add, e, m))
                    w = (work.get(ne, 0) - k * v) % p
                    if w:
                        work[ne] = w
                    else:
                        work.pop(ne, None)
                break
        else:
            rem[t] = c
            del work[t]
    return ([Polynomial(ring, {m: c for m, c in q.items() if c}) for q in quots],
            Polynomial(ring, rem))


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g``; raises ``ArithmeticError`` when ``g`` does not divide ``f``."""
    (quo,), rem = division(f, [g])
    if rem:
        raise ArithmeticError(f"{g} does not divide {f}")
    return quo
