"""Graded free modules, syzygies, minimal free resolutions and regularity.

Twists are stored as positive shifts: ``GradedFreeModule((0, 2, 2))`` is
``R ⊕ R(-2) ⊕ R(-2)``.  A :class:`GradedMap` keeps its columns as engine
vectors ``{(row, exponents): coeff}``.

Syzygies of columns ``c_1..c_k`` in ``F`` are read off a Groebner basis of the
vectors ``(c_j, e_j)`` in ``F ⊕ R^k`` under an order eliminating ``F``; the
basis elements with no ``F`` part generate the syzygy module.  At every step
the generating set is pruned to a minimal one by a degree-by-degree run that
feeds the candidates in after all lower-degree work is finished.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .groebner import (Ideal, ModuleOrder, _Engine, _poly_vec, _vec_poly,
                       degree_cap_for)
from .ringcore import NEG_INF, Polynomial, PolynomialRing

__all__ = [
    "GradedFreeModule",
    "FreeVector",
    "GradedMap",
    "BettiTable",
    "Resolution",
    "module_gb",
    "syzygies",
    "minimal_columns",
    "free_resolution",
    "minimalize",
    "regularity",
    "minimal_generator_degrees",
    "minimal_generators",
    "quotient_presentation",
    "resolve_quotient",
    "quotient_regularity",
    "ideal_regularity",
    "hilbert_function_from_betti",
    "hilbert_function_by_counting",
]


@dataclass(frozen=True)
class GradedFreeModule:
    twists: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __repr__(self):
        if not self.twists:
            return "0"
        parts = []
        for t in sorted(set(self.twists)):
            k = self.twists.count(t)
            parts.append(f"R^{k}(-{t})" if t else f"R^{k}")
        return " ⊕ ".join(parts)


class FreeVector:
    """Element of a graded free module, as a tuple of coordinates."""

    def __init__(self, coordinates: Sequence[Polynomial],
                 ambient: GradedFreeModule | None = None):
        coords = tuple(coordinates)
        if not coords:
            raise ValueError("a free vector needs at least one coordinate")
        self.ring = coords[0].ring
        if ambient is None:
            ambient = GradedFreeModule((0,) * len(coords))
        if ambient.rank != len(coords):
            raise ValueError("coordinate count differs from the ambient rank")
        self.coordinates = coords
        self.ambient = ambient

    @classmethod
    def from_vec(cls, ring, vec: dict, ambient: GradedFreeModule) -> "FreeVector":
        rows: list = [dict() for _ in range(ambient.rank)]
        for (pos, e), c in vec.items():
            rows[pos][e] = c
        return cls([Polynomial(ring, r) for r in rows], ambient)

    def to_vec(self) -> dict:
        out = {}
        for pos, f in enumerate(self.coordinates):
            for e, c in f._terms.items():
                out[(pos, e)] = c
        return out

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.coordinates)

    def degree(self):
        """Degree in the graded module, or ``None`` if zero or not homogeneous."""
        return _vec_degree(self.to_vec(), self.ambient.twists)

    def __eq__(self, other):
        return (isinstance(other, FreeVector) and self.ambient == other.ambient
                and self.coordinates == other.coordinates)

    def __hash__(self):
        return hash(self.coordinates)

    def __add__(self, other):
        return FreeVector([a + b for a, b in zip(self.coordinates, other.coordinates)],
                          self.ambient)

    def __sub__(self, other):
        return FreeVector([a - b for a, b in zip(self.coordinates, other.coordinates)],
                          self.ambient)

    def __rmul__(self, f):
        return FreeVector([f * a for a in self.coordinates], self.ambient)

    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.coordinates) + "]"


def _vec_degree(vec: dict, twists):
    degs = {sum(e) + twists[pos] for pos, e in vec}
    if len(degs) != 1:
        return None
    return degs.pop()


class GradedMap:
    """Matrix of polynomials ``source -> target`` (columns are images)."""

    def __init__(self, ring: PolynomialRing, source: GradedFreeModule,
                 target: GradedFreeModule, columns: Sequence[dict]):
        if len(columns) != source.rank:
            raise ValueError("column count differs from the source rank")
        self.ring = ring
        self.source = source
        self.target = target
        self.columns = [dict(c) for c in columns]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Polynomial]],
                    source: Sequence[int] | None = None,
                    target: Sequence[int] | None = None,
                    ring: PolynomialRing | None = None) -> "GradedMap":
        """Build from rows of polynomials; missing twists are inferred."""
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if ring is None:
            ring = rows[0][0].ring
        if target is None:
            target = (0,) * nrows
        cols = []
        for c in range(ncols):
            vec = {}
            for r in range(nrows):
                for e, v in rows[r][c]._terms.items():
                    vec[(r, e)] = v
            cols.append(vec)
        if source is None:
            source = []
            for vec in cols:
                d = _vec_degree(vec, target) if vec else 0
                if d is None:
                    raise ValueError("column is not homogeneous; pass source twists")
                source.append(d)
        return cls(ring, GradedFreeModule(source), GradedFreeModule(target), cols)

    @classmethod
    def from_vectors(cls, vectors: Sequence[FreeVector],
                     source: Sequence[int] | None = None) -> "GradedMap":
        if not vectors:
            raise ValueError("no vectors")
        target = vectors[0].ambient
        if source is None:
            source = [v.degree() if not v.is_zero() else 0 for v in vectors]
            if any(d is None for d in source):
                raise ValueError("non-homogeneous column")
        return cls(vectors[0].ring, GradedFreeModule(source), target,
                   [v.to_vec() for v in vectors])

    def entry(self, r: int, c: int) -> Polynomial:
        return Polynomial(self.ring, {e: v for (pos, e), v in self.columns[c].items()
                                      if pos == r})

    def matrix(self) -> list:
        return [[self.entry(r, c) for c in range(self.source.rank)]
                for r in range(self.target.rank)]

    def column(self, c: int) -> FreeVector:
        return FreeVector.from_vec(self.ring, self.columns[c], self.target)

    def column_vectors(self) -> list:
        return [self.column(c) for c in range(self.source.rank)]

    @property
    def shape(self):
        return (self.target.rank, self.source.rank)

    def is_degree_compatible(self) -> bool:
        tt = self.target.twists
        for c, vec in enumerate(self.columns):
            d = self.source.twists[c]
            if any(sum(e) + tt[pos] != d for pos, e in vec):
                return False
        return True

    def has_unit_entry(self) -> bool:
        return any(not any(e) for vec in self.columns for (_, e) in vec)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def apply(self, vec: dict) -> dict:
        """Image of a source vector given as ``{(pos, exps): c}``."""
        p = self.ring.p
        out: dict = {}
        for (pos, e), c in vec.items():
            for (tp, te), tc in self.columns[pos].items():
                k = (tp, tuple(a + b for a, b in zip(e, te)))
                v = (out.get(k, 0) + c * tc) % p
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition ``self ∘ other``."""
        if other.target.rank != self.source.rank:
            raise ValueError("maps do not compose")
        return GradedMap(self.ring, other.source, self.target,
                         [self.apply(c) for c in other.columns])

    def __repr__(self):
        return f"GradedMap({self.target} <- {self.source})"

    def pretty(self) -> str:
        rows = [[str(f) for f in row] for row in self.matrix()]
        if not rows or not rows[0]:
            return "0"
        width = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        return "\n".join("| " + "  ".join(s.rjust(w) for s, w in zip(r, width)) + " |"
                         for r in rows)


# --------------------------------------------------------------------------
# Betti tables


@dataclass
class BettiTable:
    """Shifts ``d_ij`` per homological degree ``i``.

    ``complete`` is False for truncated heads (e.g. over a hypersurface),
    which have no regularity in the polynomial-ring sense.
    """

    twists: list = field(default_factory=list)
    complete: bool = True

    def __post_init__(self):
        self.twists = [tuple(sorted(t)) for t in self.twists]

    @property
    def ranks(self) -> list:
        return [len(t) for t in self.twists]

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    def graded(self) -> dict:
        """``{(i, d): multiplicity}``."""
        out: dict = {}
        for i, ts in enumerate(self.twists):
            for d in ts:
                out[(i, d)] = out.get((i, d), 0) + 1
        return out

    def regularity(self):
        return regularity(self)

    def to_json(self) -> list:
        return [{"homological_degree": i, "twists": list(ts)}
                for i, ts in enumerate(self.twists)]

    def summary(self) -> str:
        """``1, 2(-4), 3(-6)`` style listing; mixed shifts are joined by ``+``."""
        parts = []
        for ts in self.twists:
            if not ts:
                parts.append("0")
                continue
            groups = []
            for d in sorted(set(ts)):
                k = ts.count(d)
                groups.append(f"{k}" if d == 0 else f"{k}(-{d})")
            parts.append("+".join(groups))
        return ", ".join(parts)

    def __str__(self):
        """Macaulay2-style table: row ``d - i``, column ``i``."""
        g = self.graded()
        if not g:
            return "(zero module)"
        rows = sorted({d - i for i, d in g})
        ncol = len(self.twists)
        head = "      " + " ".join(f"{i:>4}" for i in range(ncol))
        lines = [head, "total:" + " ".join(f"{len(t):>4}" for t in self.twists)]
        for r in rows:
            cells = []
            for i in range(ncol):
                k = g.get((i, r + i), 0)
                cells.append(f"{k:>4}" if k else "   .")
            lines.append(f"{r:>5}:" + " ".join(cells))
        return "\n".join(lines)


def regularity(betti: BettiTable):
    """``max(d_ij - i)``; ``NEG_INF`` for the zero module."""
    if not betti.complete:
        raise ValueError("regularity needs a complete (finite) minimal resolution")
    vals = [d - i for i, ts in enumerate(betti.twists) for d in ts]
    return max(vals) if vals else NEG_INF


# --------------------------------------------------------------------------
# engine wrappers


def _default_cap(vecs, twists):
    degs = [sum(e) + twists[pos] for v in vecs for (pos, e) in v]
    return degree_cap_for(max(degs, default=1))


def module_gb(columns: Sequence[FreeVector], kind: str = "top",
              degree_cap: int | None = None) -> list:
    """Reduced Groebner basis of the submodule spanned by ``columns``."""
    columns = [c for c in columns if not c.is_zero()]
    if not columns:
        return []
    amb = columns[0].ambient
    ring = columns[0].ring
    vecs = [c.to_vec() for c in columns]
    cap = degree_cap if degree_cap is not None else _default_cap(vecs, amb.twists)
    eng = _Engine(ring, ModuleOrder(ring, kind), amb.twists, degree_cap=cap,
                  context="module gb")
    eng.run(vecs)
    return [FreeVector.from_vec(ring, v, amb) for v in eng.reduced_basis()]


def minimal_columns(ring, vecs: Sequence[dict], twists: Sequence[int],
                    forced: Sequence[dict] = (), degree_cap: int | None = None) -> list:
    """Indices of a minimal generating subset of graded ``vecs``.

    Elements of ``forced`` are treated as already present in the submodule
    (they are fed first within each degree and never reported).
    """
    allv = list(forced) + list(vecs)
    if not any(allv):
        return []
    cap = degree_cap if degree_cap is not None else _default_cap(allv, twists)
    eng = _Engine(ring, ModuleOrder(ring, "top"), twists, degree_cap=cap,
                  context="minimal generators")
    prio = [0] * len(forced) + [1] * len(vecs)
    kept = eng.run(allv, prio)
    nf = len(forced)
    return sorted(k - nf for k in kept if k >= nf)


def _syzygy_basis(ring, columns: Sequence[dict], target_twists: Sequence[int],
                  source_twists: Sequence[int], degree_cap: int | None = None) -> list:
    """Groebner basis of the syzygies of ``columns`` (vectors in ``R^k``)."""
    r = len(target_twists)
    k = len(columns)
    zero = ring._zero_exp
    twists = list(target_twists) + list(source_twists)
    vecs = []
    for j, c in enumerate(columns):
        v = dict(c)
        v[(r + j, zero)] = 1
        vecs.append(v)
    cap = degree_cap if degree_cap is not None else _default_cap(vecs, twists)
    eng = _Engine(ring, ModuleOrder(ring, "top", elim=r), twists,
                  degree_cap=cap, context="syzygies")
    eng.run(vecs)
    out = []
    for v in eng.reduced_basis():
        if all(pos >= r for pos, _ in v):
            out.append({(pos - r, e): c for (pos, e), c in v.items()})
    return out


def _check_graded(m: GradedMap):
    if not m.is_degree_compatible():
        raise ValueError("map is not degree compatible with its twists")


def syzygies(columns, degree_cap: int | None = None) -> GradedMap:
    """Minimal generators of the relations among homogeneous ``columns``.

    ``columns`` is a :class:`GradedMap` or a sequence of :class:`FreeVector`.
    The result maps onto the source of the columns.
    """
    m = columns if isinstance(columns, GradedMap) else GradedMap.from_vectors(columns)
    _check_graded(m)
    return _syzygy_map(m, degree_cap)


def _syzygy_map(m: GradedMap, degree_cap=None) -> GradedMap:
    src = m.source.twists
    syz = _syzygy_basis(m.ring, m.columns, m.target.twists, src, degree_cap)
    keep = minimal_columns(m.ring, syz, src, degree_cap=degree_cap)
    cols = [syz[k] for k in keep]
    degs = [_vec_degree(c, src) for c in cols]
    return GradedMap(m.ring, GradedFreeModule(degs), m.source, cols)


# --------------------------------------------------------------------------
# resolutions


class Resolution:
    """``F_0 <- F_1 <- ... <- F_L`` given by ``maps[i]: F_{i+1} -> F_i``."""

    def __init__(self, ring, modules: list, maps: list, complete: bool = True):
        self.ring = ring
        self.modules = modules
        self.maps = maps
        self.complete = complete

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __getitem__(self, i):
        return self.maps[i]

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def betti(self) -> BettiTable:
        return BettiTable([m.twists for m in self.modules], complete=self.complete)

    def is_complex(self) -> bool:
        return all((a @ b).is_zero() for a, b in zip(self.maps, self.maps[1:]))

    def is_minimal(self) -> bool:
        return not any(m.has_unit_entry() for m in self.maps)


def free_resolution(presentation: GradedMap, max_length: int | None = None,
                    degree_cap: int | None = None) -> Resolution:
    """Minimal graded free resolution of the cokernel of ``presentation``."""
    _check_graded(presentation)
    ring = presentation.ring
    if max_length is None:
        max_length = ring.nvars + 1
    F0 = presentation.target
    nz = [c for c in presentation.columns if c]
    nz_src = [presentation.source.twists[i] for i, c in enumerate(presentation.columns) if c]
    keep = minimal_columns(ring, nz, F0.twists, degree_cap=degree_cap)
    d = GradedMap(ring, GradedFreeModule([nz_src[k] for k in keep]), F0,
                  [nz[k] for k in keep])
    modules = [F0]
    maps = []
    while d.source.rank:
        if len(maps) >= max_length:
            raise RuntimeError(
                f"resolution longer than {max_length} over a polynomial ring "
                f"in {ring.nvars} variables; this is a bug")
        maps.append(d)
        modules.append(d.source)
        d = _syzygy_map(d, degree_cap)
    res = Resolution(ring, modules, maps)
    if any(m.has_unit_entry() for m in maps):
        res = minimalize(res)
    return res


def minimalize(res: Resolution) -> Resolution:
    """Cancel unit entries until none remain; homology and Betti data agree.

    A unit ``a`` at ``(r, c)`` of ``d_i`` splits off ``R e_c -> R f_r``: the
    entries of ``d_i`` become ``d_i[s,t] - d_i[s,c] d_i[r,t] / a``, row ``c``
    of ``d_{i+1}`` and column ``r`` of ``d_{i-1}`` are dropped.  Pivots are
    taken in ascending twist order.
    """
    ring = res.ring
    p = ring.p
    mats = [m.matrix() for m in res.maps]
    twists = [list(m.twists) for m in res.modules]
    while True:
        best = None
        for i, M in enumerate(mats):
            for r, row in enumerate(M):
                for c, f in enumerate(row):
                    if f and f.is_constant():
                        key = (twists[i + 1][c], i, c, r)
                        if best is None or key < best[0]:
                            best = (key, i, r, c)
        if best is None:
            break
        _, i, r, c = best
        M = mats[i]
        inv = pow(M[r][c].lead_coeff, -1, p)
        colc = [M[s][c] for s in range(len(M))]
        rowr = [M[r][t].scale(inv) for t in range(len(M[r]))]
        mats[i] = [[M[s][t] - colc[s] * rowr[t] for t in range(len(M[s])) if t != c]
                   for s in range(len(M)) if s != r]
        if i + 1 < len(mats):
            mats[i + 1] = [row for s, row in enumerate(mats[i + 1]) if s != c]
        if i > 0:
            mats[i - 1] = [[f for t, f in enumerate(row) if t != r] for row in mats[i - 1]]
        del twists[i + 1][c]
        del twists[i][r]
    modules = [GradedFreeModule(t) for t in twists]
    while len(modules) > 1 and modules[-1].rank == 0:
        modules.pop()
    maps = []
    for i in range(len(modules) - 1):
        cols = []
        M = mats[i]
        for c in range(modules[i + 1].rank):
            vec = {}
            for r in range(modules[i].rank):
                for e, v in M[r][c]._terms.items():
                    vec[(r, e)] = v
            cols.append(vec)
        maps.append(GradedMap(ring, modules[i + 1], modules[i], cols))
    return Resolution(ring, modules, maps, res.complete)


# --------------------------------------------------------------------------
# ideals


def quotient_presentation(I: Ideal) -> GradedMap:
    """``R <- ⊕ R(-deg g_i)`` with the generators of ``I`` as the row."""
    if not I.homogeneous:
        raise ValueError("ideal is not homogeneous")
    ring = I.ring
    gens = I.generators
    return GradedMap(ring, GradedFreeModule([g.degree() for g in gens]),
                     GradedFreeModule((0,)), [_poly_vec(g) for g in gens])


def resolve_quotient(I: Ideal, degree_cap: int | None = None) -> Resolution:
    """Minimal free resolution of ``R/I``."""
    return free_resolution(quotient_presentation(I), degree_cap=degree_cap)


def quotient_regularity(I: Ideal, degree_cap: int | None = None):
    return resolve_quotient(I, degree_cap).betti().regularity()


def ideal_regularity(I: Ideal, degree_cap: int | None = None):
    """``reg(I)`` as a module: ``reg(R/I) + 1``, or 0 for the unit ideal."""
    if I.is_unit():
        return 0
    return quotient_regularity(I, degree_cap) + 1


def minimal_generators(I: Ideal) -> list:
    if not I.homogeneous:
        raise ValueError("minimal generators need a homogeneous ideal")
    gens = list(I.generators)
    keep = minimal_columns(I.ring, [_poly_vec(g) for g in gens], (0,))
    return [gens[k] for k in keep]


def minimal_generator_degrees(I: Ideal) -> list:
    """Degrees of a minimal homogeneous generating set, ascending."""
    return sorted(g.degree() for g in minimal_generators(I))


# --------------------------------------------------------------------------
# Hilbert functions


def hilbert_function_from_betti(betti: BettiTable, nvars: int, d: int) -> int:
    """``dim_k M_d`` from the alternating sum of twisted free modules."""
    total = 0
    for i, ts in enumerate(betti.twists):
        sign = -1 if i % 2 else 1
        for t in ts:
            k = d - t
            if k >= 0:
                total += sign * comb(k + nvars - 1, nvars - 1)
    return total


def _monomials(nvars: int, d: int):
    for bars in itertools.combinations(range(d + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + nvars - 1 - prev - 1)
        yield tuple(exps)


def hilbert_function_by_counting(leads: Iterable, twists: Sequence[int], nvars: int,
                                 d: int) -> int:
    """Count standard monomials of ``R^r / <leads>`` in degree ``d``.

    ``leads`` are ``(position, exponents)`` pairs (or bare exponent tuples for
    ``r = 1``).  This enumerates monomials directly and shares no code with the
    resolution machinery.
    """
    by_pos: dict = {}
    for L in leads:
        if len(L) == 2 and isinstance(L[1], tuple):
            by_pos.setdefault(L[0], []).append(L[1])
        else:
            by_pos.setdefault(0, []).append(tuple(L))
    count = 0
    for pos, t in enumerate(twists):
        k = d - t
        if k < 0:
            continue
        ls = by_pos.get(pos, [])
        for m in _monomials(nvars, k):
            if not any(all(a <= b for a, b in zip(L, m)) for L in ls):
                count += 1
    return count
