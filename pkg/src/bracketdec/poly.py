"""Exact multivariate polynomials over Q in the variables x, y, z.

Coefficients are `fractions.Fraction` values, so every operation in this
module is exact.  A polynomial is stored as a tuple of (monomial,
coefficient) pairs with no zero coefficients, sorted descending in the
lexicographic order; monomials are plain exponent triples (e_x, e_y, e_z).

Both monomial orders compare the z exponent first and the x exponent last.
Reduction modulo a curve ideal therefore eliminates z and y before x, and
quotient-ring representatives collect in the x coordinate (the twisted cubic
ideal, for example, rewrites y and z as powers of x).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import ParseError, StepBudgetExceeded

VARIABLES = ("x", "y", "z")
_VAR_INDEX = {"x": 0, "y": 1, "z": 2}

# A monomial is an exponent triple (e_x, e_y, e_z).
Mono = tuple

Scalar = Union[int, Fraction]


def mono_mul(a: Mono, b: Mono) -> Mono:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def mono_divides(a: Mono, b: Mono) -> bool:
    """True when a divides b, exponentwise."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b; the caller guarantees divisibility."""
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def mono_coprime(a: Mono, b: Mono) -> bool:
    return min(a[0], b[0]) == 0 and min(a[1], b[1]) == 0 and min(a[2], b[2]) == 0


def mono_degree(a: Mono) -> int:
    return a[0] + a[1] + a[2]


def _lex_key(m: Mono):
    # z first, x last: elimination pushes representatives into x
    return (m[2], m[1], m[0])


class MonomialOrder(Enum):
    """Monomial orders compatible with multiplication.

    LEX compares exponents of z, then y, then x.  GRLEX compares total
    degree first and breaks ties the same way.
    """

    LEX = "lex"
    GRLEX = "grlex"

    def key(self, mono: Mono):
        if self is MonomialOrder.LEX:
            return _lex_key(mono)
        return (mono[0] + mono[1] + mono[2], mono[2], mono[1], mono[0])


class Poly:
    """An exact polynomial in Q[x, y, z].

    `terms` is a tuple of (monomial, coefficient) pairs sorted descending in
    the lexicographic order, with no zero coefficients; the zero polynomial
    has an empty tuple.  Instances are immutable and hashable, and equality
    is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        acc: dict = {}
        for mono, coeff in terms:
            mono = (int(mono[0]), int(mono[1]), int(mono[2]))
            if mono[0] < 0 or mono[1] < 0 or mono[2] < 0:
                raise ValueError("monomial exponents must be nonnegative")
            c = acc.get(mono, 0) + Fraction(coeff)
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        self.terms = tuple(sorted(acc.items(), key=lambda t: _lex_key(t[0]), reverse=True))

    @classmethod
    def _raw(cls, terms: tuple) -> "Poly":
        """Wrap terms already in canonical form, skipping normalization."""
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def _from_dict(cls, acc: dict) -> "Poly":
        items = tuple(sorted(((m, c) for m, c in acc.items() if c),
                             key=lambda t: _lex_key(t[0]), reverse=True))
        return cls._raw(items)

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _ONE

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        c = Fraction(value)
        if not c:
            return _ZERO
        return cls._raw((((0, 0, 0), c),))

    @classmethod
    def variable(cls, name: str) -> "Poly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}")
        mono = tuple(1 if i == _VAR_INDEX[name] else 0 for i in range(3))
        return cls._raw(((mono, Fraction(1)),))

    @classmethod
    def monomial(cls, mono: Mono, coeff: Scalar = 1) -> "Poly":
        return cls([(mono, coeff)])

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == (0, 0, 0))

    def as_constant(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return self.terms[0][1]
        raise ValueError(f"{self} is not constant")

    def total_degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        return max((mono_degree(m) for m, _ in self.terms), default=-1)

    def degree_in(self, var: str) -> int:
        """Maximal exponent of var; -1 for the zero polynomial."""
        idx = _VAR_INDEX[var]
        return max((m[idx] for m, _ in self.terms), default=-1)

    def variables(self) -> frozenset:
        used = set()
        for m, _ in self.terms:
            for i, name in enumerate(VARIABLES):
                if m[i]:
                    used.add(name)
        return frozenset(used)

    def uses_only(self, names: Sequence[str]) -> bool:
        allowed = {_VAR_INDEX[n] for n in names}
        banned = [i for i in range(3) if i not in allowed]
        return all(all(m[i] == 0 for i in banned) for m, _ in self.terms)

    def coefficient(self, mono: Mono) -> Fraction:
        for m, c in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    def leading_term(self, order: MonomialOrder = MonomialOrder.LEX):
        """(monomial, coefficient) maximal under order; errors on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if order is MonomialOrder.LEX:
            return self.terms[0]
        return max(self.terms, key=lambda t: order.key(t[0]))

    def leading_monomial(self, order: MonomialOrder = MonomialOrder.LEX) -> Mono:
        return self.leading_term(order)[0]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m)
            if v is None:
                acc[m] = c
            else:
                v = v + c
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        return Poly._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return _ZERO
            return Poly._raw(tuple((m, c * q) for m, c in self.terms))
        if not isinstance(other, Poly):
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                v = acc.get(m)
                acc[m] = c1 * c2 if v is None else v + c1 * c2
        return Poly._from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (mono, coeff) in enumerate(self.terms):
            mstr = _format_mono(mono)
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if not mstr:
                body = str(mag)
            elif mag == 1:
                body = mstr
            else:
                body = f"{mag}*{mstr}"
            if i == 0:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f'Poly("{self}")'


_ZERO = Poly._raw(())
_ONE = Poly._raw((((0, 0, 0), Fraction(1)),))


def _format_mono(mono: Mono) -> str:
    parts = []
    for name, e in zip(VARIABLES, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


# -- calculus --------------------------------------------------------------


def partial_derivative(p: Poly, var: str) -> Poly:
    """d p / d var, exactly."""
    idx = _VAR_INDEX[var]
    terms = []
    for m, c in p.terms:
        e = m[idx]
        if e:
            m2 = tuple(v - 1 if i == idx else v for i, v in enumerate(m))
            terms.append((m2, c * e))
    return Poly(terms)


def antiderivative(p: Poly, var: str) -> Poly:
    """The antiderivative of p in var with zero constant term."""
    idx = _VAR_INDEX[var]
    terms = []
    for m, c in p.terms:
        e = m[idx]
        m2 = tuple(v + 1 if i == idx else v for i, v in enumerate(m))
        terms.append((m2, c / (e + 1)))
    return Poly(terms)


def apply_derivation(components: Sequence[Poly], p: Poly) -> Poly:
    """Apply the derivation sum_i components[i] * d/dv_i, v = (x, y, z).

    Two components are read as (x, y) with a zero z component.
    """
    acc = Poly.zero()
    for comp, var in zip(components, VARIABLES):
        if comp.is_zero():
            continue
        acc = acc + comp * partial_derivative(p, var)
    return acc


# -- division ---------------------------------------------------------------


class StepBudget:
    """Countdown of elementary reduction steps shared across a computation."""

    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = int(limit)

    def spend(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise StepBudgetExceeded("reduction step budget exhausted")


def divide_multivariate(p: Poly, divisors: Sequence[Poly],
                        order: MonomialOrder = MonomialOrder.LEX,
                        budget: StepBudget | None = None):
    """Divide p by an ordered list of nonzero divisors.

    Returns (quotients, remainder) with p equal to
    sum(quotients[i] * divisors[i]) + remainder and no remainder term
    divisible by any divisor's leading monomial.  Each step reduces by the
    earliest-listed divisor whose leading monomial divides the current
    leading term, so the result is deterministic in the divisor order.
    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("divisors must be nonempty")
    if any(d.is_zero() for d in divisors):
        raise ValueError("cannot divide by the zero polynomial")
    lts = [d.leading_term(order) for d in divisors]
    quotients: list[dict] = [{} for _ in divisors]
    rem_terms: list = []
    cur = p
    while not cur.is_zero():
        if budget is not None:
            budget.spend()
        lm, lc = cur.leading_term(order)
        for i, (dm, dc) in enumerate(lts):
            if mono_divides(dm, lm):
                qm = mono_div(lm, dm)
                qc = lc / dc
                q = quotients[i]
                q[qm] = q.get(qm, Fraction(0)) + qc
                cur = cur - Poly._raw(((qm, qc),)) * divisors[i]
                break
        else:
            rem_terms.append((lm, lc))
            if order is MonomialOrder.LEX:
                # canonical storage is descending lex, so terms[0] is lm
                cur = Poly._raw(cur.terms[1:])
            else:
                cur = cur - Poly._raw(((lm, lc),))
    return [Poly._from_dict(q) for q in quotients], Poly(rem_terms)


def gcd_univariate(p: Poly, q: Poly, var: str = "x") -> Poly:
    """Monic gcd of two polynomials in the single variable var."""
    for item in (p, q):
        if not item.uses_only((var,)):
            raise ValueError(f"gcd_univariate needs polynomials in {var} only")
    a, b = p, q
    while not b.is_zero():
        _, r = divide_multivariate(a, [b])
        a, b = b, r
    if a.is_zero():
        return a
    return a * (1 / a.leading_term()[1])


# -- parsing ----------------------------------------------------------------


def _tokenize(text: str):
    text = text.replace("−", "-").replace("·", "*")
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
            continue
        if ch in "xyz":
            tokens.append(("var", ch))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} in polynomial text")
    return tokens


class _PolyParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        if self.peek() != kind:
            raise ParseError(f"expected {kind!r} at token {self.pos}")
        return self.take()

    def parse(self) -> Poly:
        e = self.expr()
        if self.pos != len(self.tokens):
            kind = self.tokens[self.pos][1]
            raise ParseError(f"unexpected {kind!r} after polynomial")
        return e

    def expr(self) -> Poly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            nxt = self.peek()
            if nxt == "*":
                self.take()
                acc = acc * self.factor()
            elif nxt in ("int", "var", "("):
                # juxtaposition multiplies: 2xy, 3(x+1)
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            kind, text = self.take() if self.pos < len(self.tokens) else (None, "")
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer")
            base = base ** int(text)
        return base

    def atom(self) -> Poly:
        if self.peek() is None:
            raise ParseError("unexpected end of polynomial text")
        kind, text = self.take()
        if kind == "int":
            # int '/' int is a rational literal, e.g. 3/2
            if self.peek() == "/" and self.pos + 1 < len(self.tokens) \
                    and self.tokens[self.pos + 1][0] == "int":
                self.take()
                denom = int(self.take()[1])
                if denom == 0:
                    raise ParseError("zero denominator in rational literal")
                return Poly.constant(Fraction(int(text), denom))
            return Poly.constant(int(text))
        if kind == "var":
            return Poly.variable(text)
        if kind == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {text!r} in polynomial text")


def parse_poly(text: str) -> Poly:
    """Parse polynomial text over variables x, y, z.

    Accepted syntax: integer and p/q rational coefficients, + - * ^,
    parentheses, and juxtaposition for products (2xy means 2*x*y).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    return _PolyParser(tokens).parse()
