"""Ideal files and infix polynomial syntax.

File format (one statement per line, ``#`` starts a comment, a line ending in
``,`` continues onto the next)::

    ring p=2 vars=x,y,z,u,v,w order=grevlex
    ideal I = y*u - x*v, z*u - x*w, z*v - y*w

Expressions use ``+ - * ^``, parentheses and integer coefficients.  ``*`` is
mandatory between factors, so multi-letter variable names are unambiguous.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .ringcore import Polynomial, PolynomialRing, is_prime

__all__ = [
    "IdealFileError",
    "EmptyIdealError",
    "IdealFile",
    "parse_polynomial",
    "format_polynomial",
    "parse_ideal_file",
]


class IdealFileError(ValueError):
    """Syntax or semantic error, located at ``line``:``column`` (1-based)."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class EmptyIdealError(IdealFileError):
    """An ideal block without generators (a usage error, not a syntax error)."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str, line: int = 1, col0: int = 0):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^(),":
                raise IdealFileError(f"unexpected character {ch!r}", line,
                                     col0 + start + 1)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _ExprParser:
    def __init__(self, text: str, ring: PolynomialRing, line: int, col0: int):
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.ring = ring
        self.line = line
        self.col0 = col0

    def err(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise IdealFileError(msg, self.line, self.col0 + tok[2] + 1)

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.err(f"expected {kind!r}, found {tok[1]!r}" if tok[0] != "end"
                     else f"expected {kind!r}, found end of input")
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take("int")
            base = base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.toks[self.i]
        kind = tok[0]
        if kind == "int":
            self.take()
            return self.ring.constant(tok[1])
        if kind == "name":
            self.take()
            if tok[1] not in self.ring.variables:
                self.err(f"unknown variable {tok[1]!r}", tok)
            return self.ring.gen(tok[1])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "-":
            self.take()
            return -self.atom()
        if kind == "end":
            self.err("unexpected end of expression")
        self.err(f"unexpected token {tok[1]!r}")


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1,
                     column: int = 0) -> Polynomial:
    parser = _ExprParser(text, ring, line, column)
    if parser.peek() == "end":
        parser.err("empty expression")
    f = parser.expr()
    if parser.peek() != "end":
        parser.err(f"unexpected token {parser.toks[parser.i][1]!r}")
    return f


def parse_polynomial_list(text: str, ring: PolynomialRing, line: int = 1,
                          column: int = 0) -> list:
    parser = _ExprParser(text, ring, line, column)
    out = []
    if parser.peek() == "end":
        return out
    while True:
        out.append(parser.expr())
        if parser.peek() == ",":
            parser.take()
            continue
        if parser.peek() != "end":
            parser.err(f"unexpected token {parser.toks[parser.i][1]!r}")
        return out


def _format_monomial(exps, names) -> str:
    parts = []
    for e, n in zip(exps, names):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Infix form that :func:`parse_polynomial` maps back to ``f``."""
    if f.is_zero():
        return "0"
    p = f.ring.p
    names = f.ring.variables
    out = []
    for e in sorted(f._terms, key=f.ring.order.sortkey):
        c = f._terms[e]
        neg = c > p // 2 and p > 2
        mag = p - c if neg else c
        mono = _format_monomial(e, names)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


@dataclass
class IdealFile:
    ring: PolynomialRing
    ideals: dict = field(default_factory=dict)   # name -> list[Polynomial]


_RING_KEYS = ("p", "vars", "order")


def _parse_ring(body: str, line: int, col0: int) -> PolynomialRing:
    opts = {}
    for m in re.finditer(r"(\S+)", body):
        word = m.group(1)
        col = col0 + m.start() + 1
        if "=" not in word:
            raise IdealFileError(f"expected key=value, found {word!r}", line, col)
        k, v = word.split("=", 1)
        if k not in _RING_KEYS:
            raise IdealFileError(f"unknown ring option {k!r}", line, col)
        opts[k] = (v, col)
    for k in ("p", "vars"):
        if k not in opts:
            raise IdealFileError(f"ring header is missing {k}=", line, col0 + 1)
    pv, pcol = opts["p"]
    if not pv.isdigit():
        raise IdealFileError(f"p must be an integer, found {pv!r}", line, pcol)
    p = int(pv)
    if not is_prime(p) or p >= 2 ** 31:
        raise IdealFileError(f"p={p} is not a prime below 2^31", line, pcol)
    names, vcol = opts["vars"]
    names = names.split(",")
    for n in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", n):
            raise IdealFileError(f"bad variable name {n!r}", line, vcol)
    order, ocol = opts.get("order", ("grevlex", 0))
    try:
        return PolynomialRing(p, names, order)
    except ValueError as exc:
        raise IdealFileError(str(exc), line, ocol or vcol) from None


def _logical_lines(text: str):
    buf, start = None, 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if buf is None:
            if not line.strip():
                continue
            buf, start = line, lineno
        else:
            buf += " " + line.strip()
        if not buf.endswith(","):
            yield start, buf
            buf = None
    if buf is not None:
        yield start, buf


def parse_ideal_file(text: str) -> IdealFile:
    """Parse a ring header plus named ideal blocks.

    Continuation lines are joined, so error columns past the first physical
    line refer to the joined statement.
    """
    ring = None
    ideals: dict = {}
    for lineno, line in _logical_lines(text):
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        head, _, rest = stripped.partition(" ")
        if head == "ring":
            if ring is not None:
                raise IdealFileError("only one ring per file", lineno, indent + 1)
            ring = _parse_ring(rest, lineno, indent + len(head) + 1)
        elif head == "ideal":
            if ring is None:
                raise IdealFileError("ideal declared before ring header",
                                     lineno, indent + 1)
            m = re.match(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*=", rest)
            if m is None:
                raise IdealFileError("expected 'ideal NAME = ...'", lineno,
                                     indent + len(head) + 2)
            name = m.group(1)
            if name in ideals:
                raise IdealFileError(f"ideal {name!r} defined twice", lineno,
                                     indent + 1)
            col0 = indent + len(head) + 1 + m.end()
            body = rest[m.end():]
            gens = parse_polynomial_list(body, ring, lineno, col0)
            if not gens:
                raise EmptyIdealError(f"ideal {name!r} has no generators",
                                     lineno, col0 + 1)
            ideals[name] = gens
        else:
            raise IdealFileError(f"unknown statement {head!r}", lineno,
                                 indent + 1)
    if ring is None:
        raise IdealFileError("missing ring header", 1, 1)
    return IdealFile(ring, ideals)
