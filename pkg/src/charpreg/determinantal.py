"""The 2x2 minors of a generic 2x3 matrix and their Frobenius-power resolution.

Fixed data over ``R = F_p[x,y,z,u,v,w]`` with grevlex ``x>y>z>u>v>w``::

    g1 = y*u - x*v,   g2 = z*u - x*w,   g3 = z*v - y*w
    h_j = x^j z^q u^(q-j) v^j - x^q y^j w^q          (0 <= j <= q)

The quotient ``R/(g1, g2^q, g3^q)`` is studied through the hypersurface
``S = R/g1 R`` and the ``S``-module ``S/(g2^q, g3^q)``.  Indices below are
0-based: ``M`` has columns ``c_0..c_q`` and ``W_i = x e_i - u e_{i+1}``,
``U_i = y e_i - v e_{i+1}`` for ``0 <= i < q``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import Ideal, ModuleOrder, divide_exact, s_polynomial
from .hypersurface import HypersurfaceContext
from .resolution import FreeVector, GradedFreeModule, GradedMap
from .ringcore import Polynomial, PolynomialRing, frobenius_pow

__all__ = [
    "VARIABLES",
    "DeterminantalFamily",
    "determinantal_family",
    "determinantal_ring",
    "determinantal_ideal",
    "IdentityReport",
    "verify_section4_identities",
    "g_syzygy_generators",
]

VARIABLES = ("x", "y", "z", "u", "v", "w")


def determinantal_ring(p: int) -> PolynomialRing:
    return PolynomialRing(p, VARIABLES, "grevlex")


def determinantal_ideal(ring: PolynomialRing) -> Ideal:
    x, y, z, u, v, w = ring.gens()
    return Ideal([y * u - x * v, z * u - x * w, z * v - y * w], ring)


@dataclass
class DeterminantalFamily:
    ring: PolynomialRing
    p: int
    e: int
    q: int
    g1: Polynomial
    g2: Polynomial
    g3: Polynomial
    g2q: Polynomial
    g3q: Polynomial
    h: list = field(default_factory=list)

    @property
    def gens(self):
        return self.ring.gens()

    @property
    def G(self) -> list:
        """``[h_0, ..., h_{q-1}, g3^q, g1]``."""
        return self.h[:self.q] + [self.g3q, self.g1]

    @property
    def ideal(self) -> Ideal:
        """``g1 R + g2^q R + g3^q R``."""
        return Ideal([self.g1, self.g2q, self.g3q], self.ring)

    @property
    def hypersurface(self) -> HypersurfaceContext:
        return HypersurfaceContext(self.g1)

    def presentation(self) -> GradedMap:
        """``S <- S(-2q)^2`` given by ``[g2^q, g3^q]``."""
        return GradedMap.from_matrix([[self.g2q, self.g3q]])

    def T(self) -> list:
        """The 3 x (q+2) matrix with ``G = [g2^q, g3^q, g1] T``.

        The third row is forced by ``h_{j+1} = y h_j - x^j z^q u^(q-j-1) v^j g1``.
        """
        ring, q = self.ring, self.q
        x, y, z, u, v, w = self.gens
        zero, one = ring.zero(), ring.one()
        row0 = [y ** j for j in range(q)] + [zero, zero]
        row1 = [zero] * q + [one, zero]
        t = [zero]
        for j in range(q - 1):
            t.append(y * t[j] - ring.monomial((j, 0, q, q - j - 1, j, 0)))
        row2 = t + [zero, one]
        return [row0, row1, row2]

    def M(self) -> GradedMap:
        """Columns ``c_j = [y^j v^(q-j); -x^j u^(q-j)]``, ``0 <= j <= q``."""
        q = self.q
        x, y, z, u, v, w = self.gens
        top = [y ** j * v ** (q - j) for j in range(q + 1)]
        bot = [-(x ** j * u ** (q - j)) for j in range(q + 1)]
        return GradedMap.from_matrix([top, bot], source=[3 * q] * (q + 1),
                                     target=[2 * q, 2 * q])

    def WU(self) -> GradedMap:
        """``W_0, U_0, W_1, U_1, ...`` as columns in ``S^(q+1)(-3q)``."""
        q = self.q
        x, y, z, u, v, w = self.gens
        zero = self.ring.zero()
        cols = []
        for i in range(q):
            for a, b in ((x, u), (y, v)):
                col = [zero] * (q + 1)
                col[i] = a
                col[i + 1] = -b
                cols.append(col)
        rows = [[cols[c][r] for c in range(len(cols))] for r in range(q + 1)]
        return GradedMap.from_matrix(rows, source=[3 * q + 1] * (2 * q),
                                     target=[3 * q] * (q + 1))

    def expected_betti_head(self, length: int = 6) -> list:
        """Twist lists of the periodic minimal ``S``-resolution, ``F_0..F_{length-1}``."""
        q = self.q
        out = [[0], [2 * q] * 2, [3 * q] * (q + 1)]
        k = 1
        while len(out) < length:
            out.append([3 * q + k] * (2 * q))
            k += 1
        return [tuple(t) for t in out[:length]]


def determinantal_family(p: int, e: int) -> DeterminantalFamily:
    ring = determinantal_ring(p)
    x, y, z, u, v, w = ring.gens()
    q = p ** e
    g1, g2, g3 = y * u - x * v, z * u - x * w, z * v - y * w
    h = [ring.monomial((j, 0, q, q - j, j, 0)) - ring.monomial((q, j, 0, 0, 0, q))
         for j in range(q + 1)]
    return DeterminantalFamily(ring, p, e, q, g1, g2, g3, frobenius_pow(g2, e),
                               frobenius_pow(g3, e), h)


# --------------------------------------------------------------------------
# identity checks


@dataclass
class IdentityReport:
    q: int
    families: list = field(default_factory=list)   # (name, passed, failures)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.families)

    def failures(self) -> list:
        return [(name, fails) for name, passed, fails in self.families if not passed]

    def summary(self) -> str:
        n = len(self.families)
        if self.ok:
            return f"all {n} identity families pass (q={self.q})"
        bad = "; ".join(f"{name}: {fails[0]}" for name, fails in self.failures())
        return f"{len(self.failures())} of {n} identity families FAIL (q={self.q}): {bad}"


class _Family:
    def __init__(self, name):
        self.name = name
        self.fails = []

    def eq(self, a, b, label):
        if a != b:
            self.fails.append(label)

    def result(self):
        return (self.name, not self.fails, self.fails)


def _mono(ring, x=0, y=0, z=0, u=0, v=0, w=0):
    return ring.monomial((x, y, z, u, v, w))


def _vsub(a, b):
    return [s - t for s, t in zip(a, b)]


def _vscale(f, a):
    return [f * s for s in a]


def _s_vector(ring, a: list, b: list) -> list:
    """S-vector of two vectors under term-over-position (earlier rows larger)."""
    order = ModuleOrder(ring, "top")

    def lead(vec):
        terms = [((pos, e), c) for pos, f in enumerate(vec) for e, c in f.items()]
        return min(terms, key=lambda t: order.sortkey(t[0]))

    (pa, ea), ca = lead(a)
    (pb, eb), cb = lead(b)
    if pa != pb:
        return [ring.zero() for _ in a]
    l = tuple(map(max, ea, eb))
    ma = ring.monomial(tuple(i - j for i, j in zip(l, ea)))
    mb = ring.monomial(tuple(i - j for i, j in zip(l, eb)), ca * pow(cb, -1, ring.p) % ring.p)
    return _vsub(_vscale(ma, a), _vscale(mb, b))


def verify_section4_identities(p: int, e: int) -> IdentityReport:
    """Check the S-polynomial, factorization and telescoping identities exactly."""
    df = determinantal_family(p, e)
    q = df.q
    if q < 2:
        raise ValueError("need q = p^e >= 2")
    ring = df.ring
    x, y, z, u, v, w = df.gens
    g1, g3q, h = df.g1, df.g3q, df.h
    rep = IdentityReport(q)
    m = lambda **k: _mono(ring, **k)   # noqa: E731

    fam = _Family("(a)(i) S(h_j, h_i)")
    for i in range(q + 1):
        for j in range(i, q + 1):
            d = j - i
            lhs = u ** d * h[j] - x ** d * v ** d * h[i]
            closed = m(x=q, w=q) * (m(x=d, y=i, v=d) - m(y=j, u=d))
            tele = sum((m(x=k - 1, y=j - k, u=d - k, v=k - 1) for k in range(1, d + 1)),
                       ring.zero())
            fam.eq(s_polynomial(h[j], h[i]) if d else ring.zero(), lhs, f"S-poly i={i} j={j}")
            fam.eq(lhs, closed, f"closed form i={i} j={j}")
            fam.eq(tele * g1, m(y=j, u=d) - m(x=d, y=i, v=d), f"telescoping i={i} j={j}")
            fam.eq(closed, -(m(x=q, w=q) * tele * g1), f"g1-combination i={i} j={j}")
    rep.families.append(fam.result())

    fam = _Family("(a)(ii) S(h_j, g3^q)")
    for j in range(q + 1):
        lhs = v ** (q - j) * h[j] - x ** j * u ** (q - j) * g3q
        closed = w ** q * (m(x=j, y=q, u=q - j) - m(x=q, y=j, v=q - j))
        tele = sum((m(x=j - 1 + k, y=q - k, u=q - j - k, v=k - 1)
                    for k in range(1, q - j + 1)), ring.zero())
        fam.eq(s_polynomial(h[j], g3q), lhs, f"S-poly j={j}")
        fam.eq(lhs, closed, f"closed form j={j}")
        fam.eq(tele * g1, m(x=j, y=q, u=q - j) - m(x=q, y=j, v=q - j), f"telescoping j={j}")
        fam.eq(closed, w ** q * tele * g1, f"g1-combination j={j}")
    rep.families.append(fam.result())

    fam = _Family("(a)(iii) S(h_j, g1) = h_{j+1}")
    for j in range(q - 1):
        lhs = y * h[j] - m(x=j, z=q, u=q - j - 1, v=j) * g1
        fam.eq(s_polynomial(h[j], g1), lhs, f"S-poly j={j}")
        fam.eq(lhs, h[j + 1], f"equals h_{j + 1}")
    rep.families.append(fam.result())

    fam = _Family("(a)(iv) S(h_{q-1}, g1) = x^q g3^q")
    lhs = y * h[q - 1] - m(x=q - 1, z=q, v=q - 1) * g1
    fam.eq(s_polynomial(h[q - 1], g1), lhs, "S-poly")
    fam.eq(lhs, x ** q * g3q, "equals x^q g3^q")
    fam.eq(h[q], x ** q * g3q, "h_q = x^q g3^q")
    fam.eq(h[0], df.g2q, "h_0 = g2^q")
    rep.families.append(fam.result())

    fam = _Family("(a)(v) S(g3^q, g1)")
    fam.eq(s_polynomial(g3q, g1), y * u * g3q - m(z=q, v=q) * g1, "S-poly")
    rep.families.append(fam.result())

    fam = _Family("(c) G = [g2^q, g3^q, g1] T")
    T = df.T()
    gens3 = [df.g2q, g3q, g1]
    G = df.G
    for c in range(q + 2):
        fam.eq(sum((gens3[r] * T[r][c] for r in range(3)), ring.zero()), G[c], f"column {c}")
    for j in range(q):
        fam.eq(T[0][j], y ** j, f"first row entry {j}")
        try:
            star = divide_exact(h[j] - y ** j * df.g2q, g1)
            fam.eq(star, T[2][j], f"third row entry {j}")
        except ArithmeticError:
            fam.fails.append(f"h_{j} - y^{j} g2^q not divisible by g1")
    fam.eq([T[0][q], T[0][q + 1], T[1][q], T[1][q + 1], T[2][q], T[2][q + 1]],
           [0, 0, 1, 0, 0, 1], "last two columns")
    rep.families.append(fam.result())

    fam = _Family("syzygies of M: S-vectors and telescoping sums")
    zero = ring.zero()
    cols = [[y ** j * v ** (q - j), -(x ** j * u ** (q - j))] for j in range(q + 1)]
    g1top, g1bot = [g1, zero], [zero, g1]
    for i in range(q + 1):
        for j in range(i + 1, q + 1):
            d = j - i
            lhs = _vsub(_vscale(u ** d, cols[j]), _vscale(x ** d, cols[i]))
            coef = sum((m(x=k - 1, y=j - k, u=d - k, v=q - j + k - 1) for k in range(1, d + 1)),
                       zero)
            fam.eq(_s_vector(ring, cols[j], cols[i]), lhs, f"S-vector i={i} j={j}")
            fam.eq(lhs, _vscale(coef, g1top), f"telescoping i={i} j={j}")
            fam.eq(coef * g1, m(y=j, u=d, v=q - j) - m(x=d, y=i, v=q - i),
                   f"series i={i} j={j}")
            # u^d e_j - x^d e_i = -sum x^(d-k) u^(k-1) W_{i+k-1}
            ev = [zero] * (q + 1)
            for k in range(1, d + 1):
                c = m(x=d - k, u=k - 1)
                ev[i + k - 1] = ev[i + k - 1] + c * x
                ev[i + k] = ev[i + k] - c * u
            target = [zero] * (q + 1)
            target[j] = u ** d
            target[i] = -(x ** d)
            fam.eq(target, [-a for a in ev], f"W-combination i={i} j={j}")
        fam.eq(_s_vector(ring, cols[i], g1top), [zero, zero], f"S(c_{i}, g1 e_1)")
    for i in range(q):
        lhs = _vsub(_vscale(y, cols[i]), _vscale(-m(x=i, u=q - i - 1), g1bot))
        fam.eq(_s_vector(ring, cols[i], g1bot), lhs, f"S(c_{i}, g1 e_2)")
        fam.eq(lhs, _vscale(v, cols[i + 1]), f"S(c_{i}, g1 e_2) = v c_{i + 1}")
    last = [a + b for a, b in zip(_vscale(y * u, cols[q]), _vscale(x ** q, g1bot))]
    fam.eq(_s_vector(ring, cols[q], g1bot), last, "S(c_q, g1 e_2)")
    fam.eq(last, [a + b for a, b in zip(_vscale(x * v, cols[q]), _vscale(y ** q, g1top))],
           "S(c_q, g1 e_2) rewritten")
    rep.families.append(fam.result())
    return rep


def g_syzygy_generators(fam: DeterminantalFamily) -> list:
    """Generators of the syzygies of ``G``, with the unspecified last entries solved.

    0-based: position ``i < q`` holds ``h_i``, ``q`` holds ``g3^q``, ``q+1``
    holds ``g1``.  Each family is fixed by its first two entries; the ``g1``
    coordinate is the exact quotient that makes the relation hold.
    """
    q, ring = fam.q, fam.ring
    x, y, z, u, v, w = fam.gens
    G = fam.G
    n = q + 2
    twists = [g.degree() for g in G]
    out = []

    def finish(entries: dict):
        vec = [ring.zero()] * n
        for k, f in entries.items():
            vec[k] = f
        partial = sum((vec[k] * G[k] for k in range(n - 1)), ring.zero())
        vec[n - 1] = vec[n - 1] - divide_exact(partial, fam.g1)
        out.append(FreeVector(vec, GradedFreeModule(twists)))

    for i in range(q):
        for j in range(i + 1, q):
            finish({i: x ** (j - i) * v ** (j - i), j: -(u ** (j - i))})
    for i in range(q):
        finish({i: v ** (q - i), q: -(x ** i * u ** (q - i))})
    for i in range(q - 1):
        finish({i: y, i + 1: -ring.one()})
    finish({q - 1: y, q: -(x ** q)})
    vec = [ring.zero()] * n
    vec[q], vec[q + 1] = fam.g1, -fam.g3q
    out.append(FreeVector(vec, GradedFreeModule(twists)))
    return out
