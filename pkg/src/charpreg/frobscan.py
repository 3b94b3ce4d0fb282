"""Growth scans for Frobenius powers of a fixed homogeneous ideal.

For ``q = p^e`` and a generator list ``g_1..g_n`` of ``I`` the scan records

* ``reg_i(e) = reg R/(I^[q] + g_i R)`` for every ``i``;
* the degrees of minimal generators of ``(I^[q] : I)`` and ``reg (I^[q] : I)``.

Linear growth of both in ``q`` is the hypothesis of the discreteness criterion
for F-jumping numbers.  A finite scan can only be evidence for it: constants
are the largest ratios seen, and a large ratio is never read as a disproof.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .groebner import (DegreeGuardError, Ideal, bracket_power, colon, homogenize,
                       lead_term_ideal)
from .resolution import ideal_regularity, minimal_generators, quotient_regularity
from .ringcore import NEG_INF, Polynomial, gauge

__all__ = [
    "RegRow",
    "ColonRow",
    "ScanReport",
    "GaugeVerdict",
    "reg_growth_scan",
    "colon_degree_scan",
    "gauge_bound_report",
    "singular_locus_dim",
    "krull_dimension",
    "CSV_HEADER",
]

CSV_HEADER = ("e", "q", "i", "reg_i", "colon_max_deg", "reg_ratio", "deg_ratio")

CAVEAT = ("finite evidence on the scanned range only; constants are the largest "
          "observed ratios, not proven bounds")


@dataclass(frozen=True)
class RegRow:
    e: int
    q: int
    i: int          # 1-based generator index
    reg: int

    @property
    def ratio(self) -> float:
        return self.reg / self.q


@dataclass(frozen=True)
class ColonRow:
    e: int
    q: int
    degrees: tuple          # minimal generator degrees, ascending
    max_degree: int
    reg: int                # reg of the colon ideal as a module
    max_gauge: int          # largest gauge of a minimal generator
    certified: bool         # every generator r has r*I inside I^[q]

    @property
    def ratio(self) -> float:
        return self.max_degree / self.q

    @property
    def remark_holds(self) -> bool:
        return self.max_degree <= self.reg


def _as_float(x):
    return float(x) if x is not None else None


@dataclass
class ScanReport:
    p: int
    e_max: int
    ngens: int
    reg_rows: list = field(default_factory=list)
    colon_rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def C(self):
        return max((r.ratio for r in self.reg_rows), default=None)

    @property
    def K(self):
        return max((r.ratio for r in self.colon_rows), default=None)

    def colon_row(self, e: int):
        for r in self.colon_rows:
            if r.e == e:
                return r
        return None

    def reg_value(self, e: int, i: int):
        for r in self.reg_rows:
            if r.e == e and r.i == i:
                return r.reg
        raise KeyError((e, i))

    def rows(self) -> list:
        """One flat record per ``(e, i)``; colon fields repeat across ``i``."""
        out = []
        for r in self.reg_rows:
            c = self.colon_row(r.e)
            out.append({
                "e": r.e, "q": r.q, "i": r.i, "reg_i": r.reg,
                "colon_max_deg": c.max_degree if c else None,
                "reg_ratio": r.ratio,
                "deg_ratio": c.ratio if c else None,
            })
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in self.rows():
            w.writerow(["" if row[k] is None else
                        (f"{row[k]:.6g}" if isinstance(row[k], float) else row[k])
                        for k in CSV_HEADER])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e_max": self.e_max,
            "rows": [{"e": r.e, "q": r.q, "i": r.i, "reg": r.reg, "ratio": r.ratio}
                     for r in self.reg_rows],
            "colon": [{"e": c.e, "q": c.q, "degrees": list(c.degrees),
                       "max_degree": c.max_degree, "reg": c.reg,
                       "max_gauge": c.max_gauge, "certified": c.certified,
                       "ratio": c.ratio} for c in self.colon_rows],
            "C": _as_float(self.C),
            "K": _as_float(self.K),
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _prepare(I: Ideal, report_notes: list) -> Ideal:
    if I.is_zero():
        raise ValueError("cannot scan the zero ideal")
    if not I.homogeneous:
        name = "Z"
        while name in I.ring.variables:
            name += "_"
        I = homogenize(I, name, via_gb=True)
        report_notes.append(
            f"input was not homogeneous; scanned its homogenization in the extra "
            f"variable {name}, generators taken from a graded Groebner basis")
    return I


def _reg_task(args):
    I, e, i, cap = args
    g = I.generators[i - 1]
    J = bracket_power(I, e) + g
    try:
        return RegRow(e, I.ring.p ** e, i, quotient_regularity(J, cap))
    except DegreeGuardError as exc:
        raise DegreeGuardError(exc.degree, exc.cap, f"reg scan at e={e}, i={i}") from exc


def _colon_task(args):
    I, e, cap = args
    q = I.ring.p ** e
    Iq = bracket_power(I, e)
    try:
        C = colon(Iq, I, cap)
        gens = minimal_generators(C)
        reg = ideal_regularity(C, cap)
    except DegreeGuardError as exc:
        raise DegreeGuardError(exc.degree, exc.cap, f"colon scan at e={e}") from exc
    certified = all(Iq.contains(r * g) for r in gens for g in I.generators)
    degs = tuple(sorted(r.degree() for r in gens))
    gmax = max((gauge(r) for r in gens), default=NEG_INF)
    return ColonRow(e, q, degs, max(degs, default=0), reg,
                    gmax if gmax is not NEG_INF else 0, certified)


def _run(fn, tasks, workers):
    if workers and workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def reg_growth_scan(I: Ideal, e_max: int, *, degree_cap: int | None = None,
                    workers: int = 0, report: ScanReport | None = None) -> ScanReport:
    """``reg R/(I^[p^e] + g_i R)`` for ``0 <= e <= e_max`` and every generator."""
    if e_max < 0:
        raise ValueError("e_max must be nonnegative")
    notes: list = [] if report is None else report.notes
    I = _prepare(I, notes) if report is None else I
    if report is None:
        report = ScanReport(I.ring.p, e_max, len(I.generators), notes=notes)
    tasks = [(I, e, i, degree_cap) for e in range(e_max + 1)
             for i in range(1, len(I.generators) + 1)]
    report.reg_rows = sorted(_run(_reg_task, tasks, workers), key=lambda r: (r.e, r.i))
    return report


def colon_degree_scan(I: Ideal, e_max: int, *, degree_cap: int | None = None,
                      workers: int = 0, report: ScanReport | None = None) -> ScanReport:
    """Minimal generator degrees and regularity of ``(I^[p^e] : I)``."""
    if e_max < 0:
        raise ValueError("e_max must be nonnegative")
    notes: list = [] if report is None else report.notes
    I = _prepare(I, notes) if report is None else I
    if report is None:
        report = ScanReport(I.ring.p, e_max, len(I.generators), notes=notes)
    tasks = [(I, e, degree_cap) for e in range(e_max + 1)]
    report.colon_rows = sorted(_run(_colon_task, tasks, workers), key=lambda r: r.e)
    return report


@dataclass
class GaugeVerdict:
    report: ScanReport
    satisfied: bool
    violations: list

    @property
    def C(self):
        return self.report.C

    @property
    def K(self):
        return self.report.K

    def text(self) -> str:
        C, K = self.C, self.K
        if self.satisfied:
            head = (f"criterion satisfied on scanned range e <= {self.report.e_max} "
                    f"with constants (C, K) = ({C:.4g}, {K:.4g})")
        else:
            head = ("inconclusive on scanned range: "
                    + "; ".join(self.violations))
        return (f"{head}\nnote: {CAVEAT}\n"
                "note: gauges are those of the normal-form representatives, an "
                "upper bound for gauges in the quotient")

    def to_json(self) -> dict:
        out = self.report.to_json()
        out["satisfied"] = self.satisfied
        out["violations"] = list(self.violations)
        out["caveat"] = CAVEAT
        return out


def gauge_bound_report(I: Ideal, e_max: int, *, degree_cap: int | None = None,
                       workers: int = 0) -> GaugeVerdict:
    """Run both scans and check the per-row consistency conditions."""
    notes: list = []
    I = _prepare(I, notes)
    report = ScanReport(I.ring.p, e_max, len(I.generators), notes=notes)
    reg_growth_scan(I, e_max, degree_cap=degree_cap, workers=workers, report=report)
    colon_degree_scan(I, e_max, degree_cap=degree_cap, workers=workers, report=report)
    bad = []
    for c in report.colon_rows:
        if not c.remark_holds:
            bad.append(f"e={c.e}: colon generator degree {c.max_degree} exceeds "
                       f"regularity {c.reg}")
        if not c.certified:
            bad.append(f"e={c.e}: colon generator failed membership certificate")
    return GaugeVerdict(report, not bad, bad)


# --------------------------------------------------------------------------
# singular locus


def krull_dimension(leads, nvars: int) -> int:
    """Krull dimension of ``k[x]/(monomials)``; ``-1`` for the unit ideal.

    Largest set of variables containing the support of no generator.
    """
    supports = [frozenset(k for k, a in enumerate(e) if a) for e in leads]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for U in combinations(range(nvars), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return size
    return 0


def singular_locus_dim(I: Ideal, g: Polynomial) -> int:
    """Dimension of the affine cone over ``Sing(R/gR) ∩ V(I)``; ``-1`` if empty.

    The locus is cut out by ``I``, ``g`` and the partial derivatives of ``g``.
    When ``p`` divides every exponent the derivatives vanish and the whole
    hypersurface is reported as singular.
    """
    ring = I.ring
    if g.ring != ring:
        raise ValueError("g must live in the ring of I")
    parts = [g.derivative(k) for k in range(ring.nvars)]
    J = I + Ideal([g] + [d for d in parts if d], ring)
    if J.is_zero():
        return ring.nvars
    return krull_dimension(lead_term_ideal(J), ring.nvars)
