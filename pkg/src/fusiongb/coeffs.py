"""Exact coefficients: the rational function field Q(a).

Values are stored as reduced fractions ``num/den`` of integer polynomials
in ``a`` (tuples of ints, constant term first).  Lowest terms are taken in
Z[a], so integer content and polynomial gcd are both removed and the
denominator has a positive leading coefficient.  That makes the stored form
unique: two values are equal iff their tuples are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

__all__ = [
    "ParamRat",
    "SpecializationPole",
    "ParseError",
    "parse_paramrat",
    "ZERO",
    "ONE",
    "A",
]

IntPoly = tuple  # tuple[int, ...], constant term first, no trailing zeros


class SpecializationPole(ZeroDivisionError):
    """Raised when a denominator vanishes at the requested value of ``a``."""


class ParseError(ValueError):
    pass


# --------------------------------------------------------------------------
# integer polynomial kernel
# --------------------------------------------------------------------------

def _trim(c: list) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(p: IntPoly, q: IntPoly) -> IntPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, v in enumerate(q):
        out[i] += v
    return _trim(out)


def _pneg(p: IntPoly) -> IntPoly:
    return tuple(-v for v in p)


def _pscale(p: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return ()
    return tuple(v * k for v in p)


def _pmul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ()
    if len(p) == 1:
        return _pscale(q, p[0])
    if len(q) == 1:
        return _pscale(p, q[0])
    out = [0] * (len(p) + len(q) - 1)
    for i, u in enumerate(p):
        if u:
            for j, v in enumerate(q):
                out[i + j] += u * v
    return tuple(out)


def _content(p: IntPoly) -> int:
    g = 0
    for v in p:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _valuation(p: IntPoly) -> int:
    for i, v in enumerate(p):
        if v:
            return i
    return 0


def _pdiv_exact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact quotient p/q in Z[a]; q must divide p."""
    if len(q) == 1:
        d = q[0]
        return tuple(v // d for v in p)
    p = list(p)
    dq = len(q) - 1
    lq = q[-1]
    out = [0] * (len(p) - dq)
    for k in range(len(p) - 1, dq - 1, -1):
        c = p[k]
        if c == 0:
            continue
        coef, rem = divmod(c, lq)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[k - dq] = coef
        for j in range(dq + 1):
            p[k - dq + j] -= coef * q[j]
    if any(p):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


def _prem(p: IntPoly, q: IntPoly) -> IntPoly:
    """Pseudo-remainder of p by q (deg p >= deg q)."""
    p = list(p)
    dq = len(q) - 1
    lq = q[-1]
    while len(p) - 1 >= dq and p:
        c = p[-1]
        shift = len(p) - 1 - dq
        p = [v * lq for v in p]
        for j in range(dq + 1):
            p[shift + j] -= c * q[j]
        p = list(_trim(p))
    return tuple(p)


def _primitive(p: IntPoly) -> IntPoly:
    c = _content(p)
    if c in (0, 1):
        return p
    return tuple(v // c for v in p)


def _pgcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """gcd in Z[a], normalised to a positive leading coefficient."""
    if not p:
        return _pabs(q) if q else ()
    if not q:
        return _pabs(p)
    c = gcd(_content(p), _content(q))
    if len(p) == 1 or len(q) == 1:
        return (c,)
    v = min(_valuation(p), _valuation(q))
    p = _primitive(p[_valuation(p):])
    q = _primitive(q[_valuation(q):])
    if len(p) < len(q):
        p, q = q, p
    while len(q) > 1:
        r = _prem(p, q)
        p, q = q, _primitive(r)
        if not q:
            break
    g = p if not q else (1,)
    g = _pabs(_primitive(g))
    return (0,) * v + tuple(c * x for x in g)


def _pabs(p: IntPoly) -> IntPoly:
    return _pneg(p) if p and p[-1] < 0 else p


def _peval(p: IntPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for v in reversed(p):
        acc = acc * x + v
    return acc


def _pstr(p: IntPoly) -> str:
    """Integer polynomial in a, highest degree first, no spaces."""
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if k == 0:
            body = str(m)
        else:
            mono = "a" if k == 1 else f"a^{k}"
            body = mono if m == 1 else f"{m}*{mono}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += sign + body
    return s


def _nterms(p: IntPoly) -> int:
    return sum(1 for v in p if v)


# --------------------------------------------------------------------------
# ParamRat
# --------------------------------------------------------------------------

Number = Union[int, Fraction, "ParamRat"]


class ParamRat:
    """An element of Q(a) in lowest terms.

    Construct from ints, Fractions, or strings::

        >>> ParamRat.parse("(2*a^2-1)/(a+3)")
        ParamRat('(2*a^2-1)/(a+3)')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value: Union[int, Fraction, str, "ParamRat"] = 0):
        if isinstance(value, ParamRat):
            self.num, self.den = value.num, value.den
        elif isinstance(value, str):
            other = parse_paramrat(value)
            self.num, self.den = other.num, other.den
        else:
            f = Fraction(value)
            self.num = (f.numerator,) if f.numerator else ()
            self.den = (f.denominator,)
        self._hash = None

    @classmethod
    def _raw(cls, num: IntPoly, den: IntPoly) -> "ParamRat":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num: Sequence[int], den: Sequence[int] = (1,)) -> "ParamRat":
        """Build ``num(a)/den(a)`` from integer coefficient lists (constant first)."""
        n, d = _trim(list(num)), _trim(list(den))
        if not d:
            raise ZeroDivisionError("zero denominator")
        return cls._normalize(n, d)

    @classmethod
    def _normalize(cls, n: IntPoly, d: IntPoly) -> "ParamRat":
        if not n:
            return ZERO
        g = _pgcd(n, d)
        if g != (1,):
            n, d = _pdiv_exact(n, g), _pdiv_exact(d, g)
        if d[-1] < 0:
            n, d = _pneg(n), _pneg(d)
        return cls._raw(n, d)

    @staticmethod
    def parse(text: str) -> "ParamRat":
        return parse_paramrat(text)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on a")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    @property
    def monic_parts(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """(numerator, denominator) over Q with the denominator made monic."""
        lc = self.den[-1]
        return (tuple(Fraction(v, lc) for v in self.num),
                tuple(Fraction(v, lc) for v in self.den))

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(x) -> "ParamRat":
        if isinstance(x, ParamRat):
            return x
        if isinstance(x, (int, Fraction)):
            return ParamRat(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            n = _padd(self.num, other.num)
            if d1 == (1,):
                return ParamRat._raw(n, d1) if n else ZERO
            return ParamRat._normalize(n, d1)
        n = _padd(_pmul(self.num, d2), _pmul(other.num, d1))
        return ParamRat._normalize(n, _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return ParamRat._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return ParamRat._raw(_pmul(self.num, other.num), (1,))
        # cross-cancel so the product is already in lowest terms
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = _pgcd(n1, d2)
        if g1 != (1,):
            n1, d2 = _pdiv_exact(n1, g1), _pdiv_exact(d2, g1)
        g2 = _pgcd(n2, d1)
        if g2 != (1,):
            n2, d1 = _pdiv_exact(n2, g2), _pdiv_exact(d1, g2)
        n, d = _pmul(n1, n2), _pmul(d1, d2)
        if d[-1] < 0:
            n, d = _pneg(n), _pneg(d)
        return ParamRat._raw(n, d)

    __rmul__ = __mul__

    def inverse(self) -> "ParamRat":
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(a)")
        n, d = self.den, self.num
        if d[-1] < 0:
            n, d = _pneg(n), _pneg(d)
        return ParamRat._raw(n, d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, ParamRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == ParamRat(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- specialisation ----------------------------------------------------
    def specialize(self, a0) -> Fraction:
        a0 = Fraction(a0)
        d = _peval(self.den, a0)
        if d == 0:
            raise SpecializationPole(f"specialization pole: {self} at a = {a0}")
        return _peval(self.num, a0) / d

    # -- printing ----------------------------------------------------------
    def __str__(self) -> str:
        ns = _pstr(self.num)
        if self.den == (1,):
            return ns
        if _nterms(self.num) > 1:
            ns = f"({ns})"
        ds = _pstr(self.den)
        if len(self.den) > 1 and not (_nterms(self.den) == 1 and self.den[-1] == 1):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"ParamRat({str(self)!r})"

    def needs_parens(self) -> bool:
        """True if the printed form must be bracketed when used as a factor."""
        return _nterms(self.num) > 1


ZERO = ParamRat._raw((), (1,))
ONE = ParamRat._raw((1,), (1,))
A = ParamRat._raw((0, 1), (1,))


def specialize(x: ParamRat, a0) -> Fraction:
    """Evaluate ``x`` at ``a = a0``; raises :class:`SpecializationPole`."""
    return x.specialize(a0)


# --------------------------------------------------------------------------
# parser: integers, the symbol a, + - * / ^ and parentheses
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-")
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        if m.group(1) is not None:
            toks.append(("int", m.group(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                continue
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r} in {text!r}")
            toks.append(("op", ch))
    return toks


class ExprParser:
    """Recursive-descent evaluator over a ring with a name table.

    ``atom`` maps an identifier to a ring element and ``lift`` maps a
    ParamRat scalar into the ring.  Precedence: ``^`` > unary minus >
    ``* /`` > ``+ -``; ``*`` and ``/`` associate left.
    """

    def __init__(self, text: str, atom, lift, divide=None):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.atom = atom
        self.lift = lift
        self.divide = divide

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        val = self._sum()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _sum(self):
        val = self._product()
        while self._peek() in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self._product()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _product(self):
        val = self._unary()
        while self._peek() in (("op", "*"), ("op", "/")):
            op = self._take()[1]
            rhs = self._unary()
            if op == "*":
                val = val * rhs
            else:
                if self.divide is None:
                    raise ParseError("division not supported here")
                val = self.divide(val, rhs)
        return val

    def _unary(self):
        if self._peek() == ("op", "-"):
            self._take()
            return -self._unary()
        if self._peek() == ("op", "+"):
            self._take()
            return self._unary()
        return self._power()

    def _power(self):
        base = self._primary()
        if self._peek() == ("op", "^"):
            self._take()
            kind, val = self._take()
            if kind != "int":
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** int(val)
        return base

    def _primary(self):
        kind, val = self._take()
        if kind == "int":
            return self.lift(ParamRat(int(val)))
        if kind == "name":
            return self.atom(val)
        if (kind, val) == ("op", "("):
            inner = self._sum()
            if self._take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {self.text!r}")
            return inner
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def _paramrat_atom(name: str) -> ParamRat:
    if name != "a":
        raise ParseError(f"unknown symbol {name!r} (only 'a' is allowed)")
    return A


def parse_paramrat(text: str) -> ParamRat:
    """Parse a rational function in ``a`` such as ``"(2*a^2-1)/(a+3)"``."""
    return ExprParser(text, _paramrat_atom, lambda c: c, lambda x, y: x / y).parse()


def as_paramrat(x) -> ParamRat:
    if isinstance(x, ParamRat):
        return x
    if isinstance(x, str):
        return parse_paramrat(x)
    return ParamRat(x)
