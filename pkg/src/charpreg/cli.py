"""``charpreg`` command line.

Exit codes: 0 success, 1 usage, 2 parse error, 3 degree guard abort,
4 invariant violation.  ``--json`` output follows ``output.schema.json``.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from .determinantal import determinantal_family, verify_section4_identities
from .frobscan import gauge_bound_report
from .groebner import DegreeGuardError, Ideal, bracket_power, colon
from .hypersurface import resolve_over_hypersurface
from .idealfile import (EmptyIdealError, IdealFileError, format_polynomial,
                        parse_ideal_file, parse_polynomial)
from .resolution import minimal_generator_degrees, resolve_quotient
from .ringcore import NEG_INF, is_prime

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_GUARD, EXIT_INVARIANT = 0, 1, 2, 3, 4

COMMANDS = ("gb", "member", "colon", "frobpow", "res", "reg", "scan",
            "demo-determinantal", "verify-identities")


class UsageError(Exception):
    pass


class InvariantError(Exception):
    pass


def output_schema() -> dict:
    text = resources.files("charpreg").joinpath("output.schema.json").read_text()
    return json.loads(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ring_json(ring) -> dict:
    return {"p": ring.p, "vars": list(ring.variables), "order": ring.order.kind}


def _int_or_none(x):
    return None if x is NEG_INF else x


# --------------------------------------------------------------------------
# input helpers


def _load(args):
    path = args.file
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_ideal_file(text)


def _ideal(doc, name) -> Ideal:
    if name not in doc.ideals:
        known = ", ".join(sorted(doc.ideals)) or "none"
        raise UsageError(f"no ideal named {name!r} (defined: {known})")
    return Ideal(doc.ideals[name], doc.ring)


def _polys(gens) -> list:
    return [format_polynomial(g) for g in gens]


# --------------------------------------------------------------------------
# subcommands; each returns (ring, result dict, text lines)


def cmd_gb(args):
    doc = _load(args)
    I = _ideal(doc, args.ideal)
    G = I.gb(args.degree_cap)
    lines = [f"# reduced Groebner basis of {args.ideal} ({len(G)} elements)"]
    lines += _polys(G)
    return doc.ring, {"generators": _polys(G)}, lines


def cmd_member(args):
    doc = _load(args)
    I = _ideal(doc, args.ideal)
    f = parse_polynomial(args.poly, doc.ring)
    r = I.reduce(f)
    member = r.is_zero()
    text = [f"{'member' if member else 'not a member'} of {args.ideal}",
            f"normal form: {format_polynomial(r)}"]
    return doc.ring, {"member": member, "normal_form": format_polynomial(r)}, text


def cmd_colon(args):
    doc = _load(args)
    I, J = _ideal(doc, args.ideal), _ideal(doc, args.by)
    if J.is_zero():
        raise UsageError("colon by the zero ideal")
    C = colon(I, J, args.degree_cap)
    gens = C.gb()
    res = {"generators": _polys(gens)}
    lines = [f"# ({args.ideal} : {args.by}), reduced Groebner basis"] + _polys(gens)
    if C.homogeneous:
        degs = minimal_generator_degrees(C)
        res["minimal_generator_degrees"] = degs
        lines.append("minimal generator degrees: " + " ".join(map(str, degs)))
    return doc.ring, res, lines


def cmd_frobpow(args):
    doc = _load(args)
    I = _ideal(doc, args.ideal)
    q = doc.ring.p ** args.e
    J = bracket_power(I, args.e)
    lines = [f"# {args.ideal}^[{q}]"] + _polys(J.generators)
    return doc.ring, {"e": args.e, "q": q, "generators": _polys(J.generators)}, lines


def _resolve(args):
    doc = _load(args)
    I = _ideal(doc, args.ideal)
    res = resolve_quotient(I, args.degree_cap)
    if not res.is_complex():
        raise InvariantError("consecutive maps do not compose to zero")
    if not res.is_minimal():
        raise InvariantError("resolution is not minimal")
    return doc, res


def cmd_res(args):
    doc, res = _resolve(args)
    b = res.betti()
    reg = b.regularity()
    lines = [f"# minimal free resolution of R/{args.ideal}", str(b),
             f"betti: {b.summary()}", f"reg(R/{args.ideal}) = {reg}"]
    return doc.ring, {"betti": b.to_json(), "regularity": _int_or_none(reg)}, lines


def cmd_reg(args):
    doc, res = _resolve(args)
    reg = res.betti().regularity()
    return doc.ring, {"regularity": _int_or_none(reg)}, [f"reg(R/{args.ideal}) = {reg}"]


def cmd_scan(args):
    doc = _load(args)
    I = _ideal(doc, args.ideal)
    emax = args.emax if args.emax is not None else (2 if doc.ring.p == 2 else 1)
    verdict = gauge_bound_report(I, emax, degree_cap=args.degree_cap,
                                 workers=args.workers)
    rep = verdict.report
    if args.csv:
        lines = rep.to_csv().rstrip("\n").split("\n")
    else:
        lines = [f"{'e':>3} {'q':>4} {'i':>3} {'reg_i':>6} {'colon_max_deg':>14} "
                 f"{'reg_ratio':>10} {'deg_ratio':>10}"]
        for row in rep.rows():
            lines.append(f"{row['e']:>3} {row['q']:>4} {row['i']:>3} {row['reg_i']:>6} "
                         f"{row['colon_max_deg']:>14} {row['reg_ratio']:>10.4g} "
                         f"{row['deg_ratio']:>10.4g}")
        lines += [f"note: {n}" for n in rep.notes]
        lines += verdict.text().split("\n")
    if not verdict.satisfied:
        args._invariant = "; ".join(verdict.violations)
    return doc.ring, verdict.to_json(), lines


def _check_q(args):
    if not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not prime")
    if args.e < 1:
        raise UsageError("--e must be at least 1")


def cmd_demo(args):
    _check_q(args)
    if args.steps < 4:
        raise UsageError("--steps must be at least 4 to see a period")
    fam = determinantal_family(args.p, args.e)
    ctx = fam.hypersurface
    pr = resolve_over_hypersurface(ctx, fam.presentation(), args.steps, args.degree_cap)
    b = pr.betti()
    if not pr.is_complex():
        raise InvariantError("maps over S do not compose to zero")
    expected = fam.expected_betti_head(len(b.twists))
    if b.twists != expected:
        raise InvariantError(f"Betti head {b.summary()} differs from the expected shape")
    shown = b.twists if pr.period_start is None else b.twists[:pr.period_start + 2]
    head = type(b)(list(shown), complete=False)
    lines = [f"q = {fam.q}, S = R/({format_polynomial(fam.g1)})",
             f"module S/({format_polynomial(fam.g2q)}, {format_polynomial(fam.g3q)})",
             f"betti: {head.summary()}",
             f"period={pr.period}" if pr.period else "period=none"]
    if pr.period:
        lines.append(f"period_start={pr.period_start} shift={pr.period_shift}")
    if args.matrices:
        for k, m in enumerate(pr.head.maps, 1):
            lines += [f"phi_{k}:", m.pretty()]
    result = {"q": fam.q, "betti": b.to_json(), "period": pr.period,
              "period_start": pr.period_start, "period_shift": pr.period_shift}
    return fam.ring, result, lines


def cmd_verify(args):
    _check_q(args)
    rep = verify_section4_identities(args.p, args.e)
    lines = [rep.summary()]
    if args.verbose or not rep.ok:
        for name, ok, fails in rep.families:
            lines.append(f"  {'ok  ' if ok else 'FAIL'} {name}"
                         + ("" if ok else f": {', '.join(fails[:5])}"))
    if not rep.ok:
        args._invariant = rep.summary()
    fams = [{"name": n, "passed": ok, "failures": f} for n, ok, f in rep.families]
    return determinantal_family(args.p, args.e).ring, {"q": rep.q, "ok": rep.ok, "families": fams}, lines


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="charpreg",
                 description="Groebner bases, resolutions and Frobenius-power scans over F_p.")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--degree-cap", type=int, default=None,
                        help="abort when a reducer exceeds this degree")
        if file:
            sp.add_argument("-f", "--file", required=True, help="ideal file ('-' for stdin)")
            sp.add_argument("-i", "--ideal", required=True, help="ideal name in the file")
        return sp

    add("gb", cmd_gb, "reduced Groebner basis")
    sp = add("member", cmd_member, "ideal membership test")
    sp.add_argument("--poly", required=True, help="polynomial in infix syntax")
    sp = add("colon", cmd_colon, "colon ideal (I : J)")
    sp.add_argument("-j", "--by", required=True, help="name of J")
    sp = add("frobpow", cmd_frobpow, "Frobenius bracket power I^[p^e]")
    sp.add_argument("--e", type=int, required=True)
    add("res", cmd_res, "minimal free resolution and Betti table of R/I")
    add("reg", cmd_reg, "Castelnuovo-Mumford regularity of R/I")
    sp = add("scan", cmd_scan, "regularity and colon-degree growth over e")
    sp.add_argument("--emax", type=int, default=None,
                    help="largest e (default 2 for p=2, else 1)")
    sp.add_argument("--csv", action="store_true", help="CSV rows instead of a table")
    sp.add_argument("--workers", type=int, default=0, help="process pool size")
    sp = add("demo-determinantal", cmd_demo,
             "periodic resolution of S/(g2^q, g3^q) over S = R/g1", file=False)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("--steps", type=int, default=6)
    sp.add_argument("--matrices", action="store_true", help="also print the maps")
    sp = add("verify-identities", cmd_verify,
             "check the S-polynomial and syzygy identities for q = p^e", file=False)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "csv", False) and args.json:
        ap.error("--csv and --json are mutually exclusive")
    if getattr(args, "e", 0) < 0 or (getattr(args, "emax", 0) or 0) < 0:
        ap.error("exponents must be nonnegative")
    args._invariant = None
    t0 = time.perf_counter()
    try:
        ring, result, lines = args.func(args)
    except (UsageError, EmptyIdealError) as exc:
        print(f"charpreg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IdealFileError as exc:
        print(f"charpreg: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegreeGuardError as exc:
        print(f"charpreg: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantError as exc:
        print(f"charpreg: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    elapsed = (time.perf_counter() - t0) * 1000
    if args.json:
        out = {"command": args.command, "ring": _ring_json(ring), "result": result,
               "timing_ms": round(elapsed, 3)}
        print(json.dumps(out, indent=2))
    else:
        print("\n".join(lines))
    if args._invariant:
        print(f"charpreg: invariant violated: {args._invariant}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
