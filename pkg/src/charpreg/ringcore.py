"""Prime fields, monomials, monomial orders and sparse polynomials over F_p.

Polynomials are stored as dictionaries ``{exponent tuple: residue}`` with the
residues kept in ``[1, p)``.  The monomial order of the ambient ring turns every
exponent tuple into a *sort key*: ascending sort keys enumerate terms in
descending order, so the leading term is always ``min(terms, key=sortkey)``.
"""
from __future__ import annotations

import enum
import operator
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Sequence

__all__ = [
    "NEG_INF",
    "Ordering",
    "PrimeFieldElement",
    "Monomial",
    "MonomialOrder",
    "PolynomialRing",
    "Polynomial",
    "RingMismatchError",
    "is_prime",
    "monomial_compare",
    "poly_arith",
    "frobenius_pow",
    "gauge",
]

MAX_PRIME = 2 ** 31


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings or have different arity."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@total_ordering
class _NegInf:
    """The gauge of the zero element: below every integer, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("charpreg.NEG_INF")

    def __lt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# --------------------------------------------------------------------------
# prime field


@dataclass(frozen=True)
class PrimeFieldElement:
    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise RingMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return PrimeFieldElement((self.value + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return PrimeFieldElement((self.value - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return PrimeFieldElement((o - self.value) % self.p, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return PrimeFieldElement(self.value * o % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value % self.p, self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_%d" % self.p)
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * PrimeFieldElement(o, self.p).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# --------------------------------------------------------------------------
# monomials and orders


class Monomial:
    """Exponent vector with cached total degree."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        self.exponents = exps
        self.degree = sum(exps)

    @property
    def arity(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_arity(self, other)
        return Monomial(map(operator.add, self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        _check_arity(self, other)
        return all(map(operator.le, self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_arity(self, other)
        return Monomial(map(max, self.exponents, other.exponents))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial({self.exponents})"


def _check_arity(a: Monomial, b: Monomial) -> None:
    if len(a.exponents) != len(b.exponents):
        raise RingMismatchError(
            f"arity mismatch: {len(a.exponents)} vs {len(b.exponents)}")


ORDER_KINDS = ("grevlex", "lex", "elimination")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on ``nvars`` variables, highest priority first.

    ``elimination`` is the block order grevlex(first ``block`` variables)
    followed by grevlex(remaining variables); it eliminates the first block.
    """

    kind: str
    nvars: int
    block: int = 0
    _cache: dict = field(default_factory=dict, init=False, repr=False,
                         compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elimination" and not 0 < self.block < self.nvars:
            raise ValueError("elimination order needs 0 < block < nvars")

    def sortkey(self, exps: tuple) -> tuple:
        """Ascending sort key: a smaller key means a larger monomial."""
        try:
            return self._cache[exps]
        except KeyError:
            pass
        if self.kind == "grevlex":
            key = (-sum(exps),) + exps[::-1]
        elif self.kind == "lex":
            key = tuple(-e for e in exps)
        else:
            a, b = exps[:self.block], exps[self.block:]
            key = (-sum(a),) + a[::-1] + (-sum(b),) + b[::-1]
        self._cache[exps] = key
        return key

    @property
    def is_graded(self) -> bool:
        return self.kind == "grevlex"

    def __getstate__(self):
        return {"kind": self.kind, "nvars": self.nvars, "block": self.block}

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)
        object.__setattr__(self, "_cache", {})


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Ordering:
    _check_arity(a, b)
    if a.arity != order.nvars:
        raise RingMismatchError("monomial arity differs from the order's")
    ka, kb = order.sortkey(a.exponents), order.sortkey(b.exponents)
    if ka == kb:
        return Ordering.EQ
    return Ordering.GT if ka < kb else Ordering.LT


# --------------------------------------------------------------------------
# rings and polynomials


class PolynomialRing:
    """``F_p[vars]`` with a fixed monomial order."""

    def __init__(self, p: int, variables: Sequence[str], order: str = "grevlex",
                 block: int = 0):
        if not is_prime(p) or p >= MAX_PRIME:
            raise ValueError(f"p={p} is not a prime below 2^31")
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.p = p
        self.variables = variables
        self.nvars = len(variables)
        self.order = MonomialOrder(order, self.nvars, block)
        self._zero_exp = (0,) * self.nvars

    # identity is structural so rings rebuilt in worker processes still match
    def _ident(self):
        return (self.p, self.variables, self.order.kind, self.order.block)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return (f"PolynomialRing(p={self.p}, vars={','.join(self.variables)}, "
                f"order={self.order.kind})")

    def __reduce__(self):
        return (PolynomialRing, (self.p, self.variables, self.order.kind,
                                 self.order.block))

    def field(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value, self.p)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, {self._zero_exp: c} if c else {})

    def gen(self, name_or_index) -> "Polynomial":
        i = (self.variables.index(name_or_index)
             if isinstance(name_or_index, str) else int(name_or_index))
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise RingMismatchError("exponent vector has wrong length")
        c = coeff % self.p
        return Polynomial(self, {exps: c} if c else {})

    def from_terms(self, terms) -> "Polynomial":
        """Build from ``{exps: coeff}`` or an iterable of ``(exps, coeff)``."""
        items = terms.items() if isinstance(terms, dict) else terms
        p = self.p
        out: dict = {}
        for e, c in items:
            e = tuple(e.exponents if isinstance(e, Monomial) else e)
            c = (out.get(e, 0) + int(c)) % p
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        return Polynomial(self, out)

    def __call__(self, text: str) -> "Polynomial":
        from .idealfile import parse_polynomial
        return parse_polynomial(text, self)

    def extend(self, name: str) -> "PolynomialRing":
        """Same ring with one fresh variable appended (lowest priority)."""
        if name in self.variables:
            raise ValueError(f"variable {name!r} already exists")
        return PolynomialRing(self.p, self.variables + (name,), self.order.kind,
                              self.order.block)

    def sortkey(self, exps):
        return self.order.sortkey(exps)


class Polynomial:
    """Immutable sparse polynomial; treat ``_terms`` as read-only."""

    __slots__ = ("ring", "_terms", "_lead")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self._terms = terms
        self._lead = None

    # -- structure
    @property
    def terms(self) -> list:
        """``(Monomial, PrimeFieldElement)`` pairs, descending in the ring order."""
        key = self.ring.order.sortkey
        p = self.ring.p
        return [(Monomial(e), PrimeFieldElement(self._terms[e], p))
                for e in sorted(self._terms, key=key)]

    def items(self):
        return self._terms.items()

    def coefficient(self, exps) -> int:
        if isinstance(exps, Monomial):
            exps = exps.exponents
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def lead_exp(self) -> tuple:
        if self._lead is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = min(self._terms, key=self.ring.order.sortkey)
        return self._lead

    @property
    def lead_monomial(self) -> Monomial:
        return Monomial(self.lead_exp)

    @property
    def lead_coeff(self) -> int:
        return self._terms[self.lead_exp]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def homogeneous_components(self) -> dict:
        out: dict = {}
        for e, c in self._terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(self.ring, t) for d, t in out.items()}

    # -- arithmetic
    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, PrimeFieldElement)):
            return self.ring.constant(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _add_scaled(self._terms, other._terms, 1,
                                                 self.ring.p))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _add_scaled(self._terms, other._terms, -1,
                                                 self.ring.p))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: p - c for e, c in self._terms.items()})

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c = int(c) % p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {e: v * c % p for e, v in self._terms.items()})

    def mul_term(self, exps: tuple, c: int = 1) -> "Polynomial":
        p = self.ring.p
        add = operator.add
        return Polynomial(self.ring, {tuple(map(add, e, exps)): v * c % p
                                      for e, v in self._terms.items()})

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        add = operator.add
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                v = (out.get(e, 0) + ca * cb) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(pow(self.lead_coeff, -1, self.ring.p))

    def substitute(self, values: dict) -> "Polynomial":
        """Replace variables (by index) with polynomials."""
        ring = self.ring
        out = ring.zero()
        for e, c in self._terms.items():
            term = ring.constant(c)
            rest = list(e)
            for i, val in values.items():
                if rest[i]:
                    term = term * (val ** rest[i])
                    rest[i] = 0
            out = out + term.mul_term(tuple(rest))
        return out

    def derivative(self, var) -> "Polynomial":
        i = self.ring.variables.index(var) if isinstance(var, str) else int(var)
        p = self.ring.p
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                v = c * e[i] % p
                if v:
                    ne = list(e)
                    ne[i] -= 1
                    out[tuple(ne)] = v
        return Polynomial(self.ring, out)

    def __str__(self):
        from .idealfile import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def _add_scaled(a: dict, b: dict, c: int, p: int) -> dict:
    out = dict(a)
    for e, v in b.items():
        w = (out.get(e, 0) + c * v) % p
        if w:
            out[e] = w
        else:
            out.pop(e, None)
    return out


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (``g`` an int for scale)."""
    if op == "scale":
        return f.scale(int(g))
    if not isinstance(g, Polynomial) or f.ring != g.ring:
        raise RingMismatchError("operands are not in the same ring")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def frobenius_pow(f: Polynomial, e: int) -> Polynomial:
    """``f^(p^e)``: exponents scale by ``p^e``, coefficients are fixed by Frobenius."""
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e == 0:
        return f
    q = f.ring.p ** e
    return Polynomial(f.ring, {tuple(q * x for x in ex): c
                               for ex, c in f._terms.items()})


def gauge(f: Polynomial):
    """Least ``d`` with every exponent of every monomial of ``f`` at most ``d``."""
    if not f._terms:
        return NEG_INF
    return max(max(e) for e in f._terms)
