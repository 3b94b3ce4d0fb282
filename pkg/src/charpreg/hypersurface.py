"""Minimal resolutions over a hypersurface ring ``S = R/fR``.

Elements of ``S`` are represented by polynomials reduced modulo ``f``.  Syzygies
over ``S`` of columns ``c_1..c_k`` in ``S^r`` are computed over ``R``: adjoin
``f e_1, ..., f e_r``, take the ``R``-syzygies, drop the coordinates of the
adjoined columns and reduce the rest modulo ``f``.  Such resolutions never end;
they become 2-periodic, which is detected on the Betti data.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import ModuleOrder, _Engine, _poly_vec, degree_cap_for
from .resolution import (BettiTable, GradedFreeModule, GradedMap, Resolution,
                         _syzygy_basis, _vec_degree, minimal_columns)
from .ringcore import Polynomial, PolynomialRing

__all__ = [
    "HypersurfaceContext",
    "PeriodicResolution",
    "syz_over_hypersurface",
    "resolve_over_hypersurface",
    "detect_period",
]


class HypersurfaceContext:
    """The ring ``R/fR`` for a nonzero homogeneous ``f``."""

    def __init__(self, f: Polynomial):
        if not f:
            raise ValueError("hypersurface equation must be nonzero")
        if not f.is_homogeneous():
            raise ValueError("hypersurface equation must be homogeneous")
        self.ring: PolynomialRing = f.ring
        self.f = f.monic()
        self.degree = f.degree()

    def _reducer(self, rank: int) -> _Engine:
        eng = _Engine(self.ring, ModuleOrder(self.ring), (0,) * max(rank, 1))
        fv = _poly_vec(self.f)
        for s in range(rank):
            eng.add_reducer({(s, e): c for (_, e), c in fv.items()}, 0)
        return eng

    def reduce_poly(self, g: Polynomial) -> Polynomial:
        eng = self._reducer(1)
        return Polynomial(self.ring, {e: c for (_, e), c in eng.reduce(_poly_vec(g)).items()})

    def reduce_vec(self, vec: dict, rank: int) -> dict:
        return self._reducer(rank).reduce(vec) if vec else {}

    def reduce_map(self, m: GradedMap) -> GradedMap:
        eng = self._reducer(m.target.rank)
        return GradedMap(m.ring, m.source, m.target,
                         [eng.reduce(c) if c else {} for c in m.columns])

    def f_columns(self, twists) -> list:
        """``f e_s`` for each position, as vectors."""
        fv = _poly_vec(self.f)
        return [{(s, e): c for (_, e), c in fv.items()} for s in range(len(twists))]

    def is_zero_map(self, m: GradedMap) -> bool:
        return all(not c for c in self.reduce_map(m).columns)

    def span_contains(self, gens, vec: dict, twists) -> bool:
        """Is ``vec`` in the ``S``-span of ``gens`` (vectors in ``S^r``)?"""
        allv = [g for g in gens if g] + self.f_columns(twists)
        eng = _Engine(self.ring, ModuleOrder(self.ring), twists,
                      degree_cap=degree_cap_for(_max_degree(allv + [vec], twists)))
        eng.run(allv)
        return not eng.reduce(vec)

    def same_span(self, a, b, twists) -> bool:
        return (all(self.span_contains(b, v, twists) for v in a if v)
                and all(self.span_contains(a, v, twists) for v in b if v))

    def __repr__(self):
        return f"HypersurfaceContext(f={self.f})"


def _max_degree(vecs, twists) -> int:
    return max((sum(e) + twists[pos] for v in vecs for (pos, e) in v), default=1)


def syz_over_hypersurface(ctx: HypersurfaceContext, columns: GradedMap,
                          degree_cap: int | None = None) -> GradedMap:
    """Minimal generators of the ``S``-syzygies of the columns of ``columns``."""
    if not columns.is_degree_compatible():
        raise ValueError("columns are not homogeneous with the given twists")
    ring = ctx.ring
    m = ctx.reduce_map(columns)
    k = m.source.rank
    tgt = m.target.twists
    src = list(m.source.twists)
    lifted = list(m.columns) + ctx.f_columns(tgt)
    lifted_src = src + [t + ctx.degree for t in tgt]
    syz = _syzygy_basis(ring, lifted, tgt, lifted_src, degree_cap)
    eng = ctx._reducer(k)
    cands = []
    for v in syz:
        proj = {(pos, e): c for (pos, e), c in v.items() if pos < k}
        proj = eng.reduce(proj) if proj else {}
        if proj:
            cands.append(proj)
    forced = ctx.f_columns(src)
    keep = minimal_columns(ring, cands, src, forced=forced, degree_cap=degree_cap)
    cols = [cands[i] for i in keep]
    degs = [_vec_degree(c, src) for c in cols]
    return GradedMap(ring, GradedFreeModule(degs), m.source, cols)


@dataclass
class PeriodicResolution:
    """Head of a minimal resolution over ``S``, with its detected period.

    For ``i >= period_start`` the module ``F_{i+2}`` is ``F_i`` with every twist
    raised by ``period_shift``; both are ``None`` when no period was found.
    """

    context: HypersurfaceContext
    head: Resolution
    period_start: int | None = None
    period_shift: int | None = None

    @property
    def period(self):
        return 2 if self.period_start is not None else None

    @property
    def period_shift_increment(self):
        """Twist growth per single step, ``period_shift / 2``."""
        if self.period_shift is None:
            return None
        s = self.period_shift
        return s // 2 if s % 2 == 0 else Fraction(s, 2)

    def betti(self) -> BettiTable:
        return self.head.betti()

    def predicted_twists(self, i: int) -> tuple:
        """Twists of ``F_i``, extrapolated past the head through the period."""
        mods = self.head.modules
        if i < len(mods):
            return tuple(sorted(mods[i].twists))
        if self.period_start is None:
            raise ValueError("no period detected; cannot extrapolate")
        base = i
        shifts = 0
        while base >= len(mods):
            base -= 2
            shifts += 1
        if base < self.period_start:
            raise ValueError("head too short to extrapolate")
        return tuple(sorted(t + shifts * self.period_shift for t in mods[base].twists))

    def is_complex(self) -> bool:
        maps = self.head.maps
        return all(self.context.is_zero_map(a @ b) for a, b in zip(maps, maps[1:]))


def detect_period(modules) -> tuple:
    """Smallest ``i`` (and shift) with ``F_{j+2} = F_j(-shift)`` for all ``j >= i``.

    Needs both parities checked, i.e. ``F_i, F_{i+1}`` reappearing as
    ``F_{i+2}, F_{i+3}``.  Returns ``(None, None)`` otherwise.
    """
    tw = [tuple(sorted(m.twists)) for m in modules]
    L = len(tw) - 1
    for i in range(0, L - 2):
        if not tw[i]:
            continue
        shift = None
        ok = True
        for j in range(i, L - 1):
            a, b = tw[j], tw[j + 2]
            if len(a) != len(b) or not a:
                ok = False
                break
            s = b[0] - a[0]
            if any(y - x != s for x, y in zip(a, b)) or (shift is not None and s != shift):
                ok = False
                break
            shift = s
        if ok and shift is not None:
            return i, shift
    return None, None


def resolve_over_hypersurface(ctx: HypersurfaceContext, presentation: GradedMap,
                              steps: int = 6,
                              degree_cap: int | None = None) -> PeriodicResolution:
    """Minimal ``S``-resolution of the cokernel of ``presentation``.

    Computes ``steps`` maps (modules ``F_0..F_steps``) unless the resolution
    stops earlier, then looks for 2-periodicity on the Betti data.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    ring = ctx.ring
    m = ctx.reduce_map(presentation)
    if not m.is_degree_compatible():
        raise ValueError("presentation is not degree compatible")
    F0 = m.target
    nz = [(c, m.source.twists[i]) for i, c in enumerate(m.columns) if c]
    keep = minimal_columns(ring, [c for c, _ in nz], F0.twists,
                           forced=ctx.f_columns(F0.twists), degree_cap=degree_cap)
    d = GradedMap(ring, GradedFreeModule([nz[k][1] for k in keep]), F0,
                  [nz[k][0] for k in keep])
    modules = [F0]
    maps = []
    finished = False
    while True:
        if not d.source.rank:
            finished = True
            break
        maps.append(d)
        modules.append(d.source)
        if len(maps) == steps:
            break
        d = syz_over_hypersurface(ctx, d, degree_cap)
    head = Resolution(ring, modules, maps, complete=finished)
    if finished:
        return PeriodicResolution(ctx, head)
    start, shift = detect_period(modules)
    return PeriodicResolution(ctx, head, start, shift)
