"""PBW algebras (G-algebras): monomial orders, normal-form products, commutators.

An algebra on generators ``x_0 .. x_{n-1}`` is given by relations

    x_j x_i = q_ij x_i x_j + d_ij        (i < j)

and elements are kept in the standard-monomial basis ``x_0^k0 ... x_{n-1}^kn``.
Exponent vectors are plain tuples of ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .coeffs import ONE, ZERO, A, ExprParser, ParamRat, ParseError, as_paramrat

ExpVec = Tuple[int, ...]
Terms = Dict[ExpVec, ParamRat]

__all__ = [
    "MonomialOrder",
    "GAlgebra",
    "NcPoly",
    "PBWReport",
    "compare",
    "normal_form_product",
    "multiply",
    "commutator",
    "pbw_consistency_check",
]


def _add(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x + y for x, y in zip(a, b))


class MonomialOrder:
    """Weighted degree, ties broken lexicographically in ``priority`` sequence.

    ``priority`` lists generator indices from most to least significant;
    a larger exponent on an earlier index makes the monomial larger.
    """

    def __init__(self, weights: Sequence[int], priority: Sequence[int]):
        weights = tuple(int(w) for w in weights)
        priority = tuple(int(p) for p in priority)
        if any(w <= 0 for w in weights):
            raise ValueError("monomial order weights must be positive")
        if sorted(priority) != list(range(len(weights))):
            raise ValueError("priority must be a permutation of generator indices")
        self.weights = weights
        self.priority = priority
        self._unit = all(w == 1 for w in weights)

    @classmethod
    def deglex(cls, n: int, priority: Optional[Sequence[int]] = None) -> "MonomialOrder":
        """Total degree, ties by the last generator first unless told otherwise."""
        if priority is None:
            priority = range(n - 1, -1, -1)
        return cls([1] * n, priority)

    @property
    def width(self) -> int:
        return len(self.weights)

    def key(self, alpha: ExpVec) -> tuple:
        if self._unit:
            deg = sum(alpha)
        else:
            deg = sum(w * e for w, e in zip(self.weights, alpha))
        return (deg,) + tuple(alpha[p] for p in self.priority)

    def compare(self, alpha: ExpVec, beta: ExpVec) -> int:
        if len(alpha) != self.width or len(beta) != self.width:
            raise ValueError("exponent width mismatch")
        ka, kb = self.key(alpha), self.key(beta)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.weights == other.weights
                and self.priority == other.priority)

    def __hash__(self):
        return hash((self.weights, self.priority))

    def __repr__(self):
        return f"MonomialOrder(weights={self.weights}, priority={self.priority})"


def compare(order: MonomialOrder, alpha: ExpVec, beta: ExpVec) -> str:
    """Return ``"less"``, ``"equal"`` or ``"greater"``."""
    return ("less", "equal", "greater")[order.compare(tuple(alpha), tuple(beta)) + 1]


@dataclass(frozen=True)
class PBWReport:
    ok: bool
    failing_triple: Optional[Tuple[int, int, int]] = None
    failures: Tuple[Tuple[int, int, int], ...] = ()
    obstructions: Dict[Tuple[int, int, int], str] = field(default_factory=dict)


class GAlgebra:
    """A G-algebra over Q(a).

    ``relations`` maps ``(i, j)`` with ``i < j`` to either ``d_ij`` or a pair
    ``(q_ij, d_ij)``; ``d_ij`` is a term dict ``{exp: coeff}`` or a string in
    the generator names.  Missing pairs commute.
    """

    def __init__(self, names: Sequence[str], relations: Optional[Mapping] = None,
                 order: Optional[MonomialOrder] = None):
        self.names = tuple(names)
        self.n = n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("generator names must be distinct")
        if "a" in self.names:
            raise ValueError("'a' is reserved for the parameter")
        self.order = order if order is not None else MonomialOrder.deglex(n)
        if self.order.width != n:
            raise ValueError(f"order width {self.order.width} != generator count {n}")
        self._index = {nm: i for i, nm in enumerate(self.names)}
        self.q: Dict[Tuple[int, int], ParamRat] = {}
        self.d: Dict[Tuple[int, int], Terms] = {}
        for (i, j), rel in (relations or {}).items():
            i, j = self.index(i), self.index(j)
            if not i < j:
                raise ValueError(f"relation keys need i < j, got ({i}, {j})")
            if isinstance(rel, tuple) and len(rel) == 2 and not isinstance(rel[0], tuple):
                qv, dv = rel
            else:
                qv, dv = ONE, rel
            qv = as_paramrat(qv)
            if qv.is_zero():
                raise ValueError(f"q_{i}{j} must be nonzero")
            if qv != ONE:
                self.q[(i, j)] = qv
            terms = self._terms_from(dv)
            if terms:
                self.d[(i, j)] = terms
        self.is_lie_type = not self.q
        self.is_commutative = self.is_lie_type and not self.d
        self._check_admissible()
        self._mono_cache: Dict[Tuple[ExpVec, ExpVec], tuple] = {}
        self._swap_cache: Dict[tuple, tuple] = {}
        self._zero_exp = (0,) * n

    # -- construction helpers ---------------------------------------------
    def _terms_from(self, dv) -> Terms:
        if dv is None:
            return {}
        if isinstance(dv, NcPoly):
            return dict(dv.terms)
        if isinstance(dv, str):
            return _parse_commutative(self.names, dv)
        if isinstance(dv, Mapping):
            out = {}
            for e, c in dv.items():
                e = tuple(e)
                if len(e) != self.n:
                    raise ValueError("exponent width mismatch in relation")
                c = as_paramrat(c)
                if c:
                    out[e] = c
            return out
        if isinstance(dv, (int, ParamRat)):
            c = as_paramrat(dv)
            return {(0,) * self.n: c} if c else {}
        raise TypeError(f"cannot interpret relation {dv!r}")

    def _check_admissible(self):
        for (i, j), terms in self.d.items():
            xij = tuple(int(k in (i, j)) for k in range(self.n))
            top = max(terms, key=self.order.key)
            if self.order.key(top) > self.order.key(xij):
                raise ValueError(
                    f"d_{self.names[i]}{self.names[j]} has leading monomial above "
                    f"{self.names[i]}*{self.names[j]}; order is not admissible for it")

    def index(self, g: Union[int, str]) -> int:
        if isinstance(g, str):
            try:
                return self._index[g]
            except KeyError:
                raise ValueError(f"unknown generator {g!r}") from None
        if not 0 <= g < self.n:
            raise ValueError(f"generator index {g} out of range")
        return g

    def unit(self, i: Union[int, str]) -> ExpVec:
        i = self.index(i)
        return tuple(int(k == i) for k in range(self.n))

    # -- element constructors --------------------------------------------
    def zero(self) -> "NcPoly":
        return NcPoly(self, {})

    def one(self) -> "NcPoly":
        return NcPoly(self, {self._zero_exp: ONE})

    def scalar(self, c) -> "NcPoly":
        c = as_paramrat(c)
        return NcPoly(self, {self._zero_exp: c} if c else {})

    def gen(self, g: Union[int, str]) -> "NcPoly":
        return NcPoly(self, {self.unit(g): ONE})

    def gens(self) -> Tuple["NcPoly", ...]:
        return tuple(self.gen(i) for i in range(self.n))

    def monomial(self, exp: Sequence[int], coeff=ONE) -> "NcPoly":
        exp = tuple(exp)
        if len(exp) != self.n or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp}")
        c = as_paramrat(coeff)
        return NcPoly(self, {exp: c} if c else {})

    def poly(self, terms: Mapping) -> "NcPoly":
        return NcPoly(self, self._terms_from(terms))

    def parse(self, text: str) -> "NcPoly":
        """Parse e.g. ``"2*f1^2*f0 - a*h1"``; products are evaluated in the algebra."""
        def atom(name):
            if name == "a":
                return self.scalar(A)
            if name in self._index:
                return self.gen(name)
            raise ParseError(f"unknown generator {name!r}")

        def divide(x, y):
            if not y.is_scalar():
                raise ParseError("can only divide by scalars")
            return x * y.constant_coeff().inverse()

        return ExprParser(text, atom, self.scalar, divide).parse()

    # -- the rewriting kernel --------------------------------------------
    def _rel(self, j: int, i: int):
        """Terms of x_i x_j for i > j (out of order pair)."""
        q = self.q.get((j, i), ONE)
        out = {_add(self.unit(j), self.unit(i)): q}
        for e, c in self.d.get((j, i), {}).items():
            out[e] = out.get(e, ZERO) + c
        return tuple((e, c) for e, c in out.items() if c)

    def _swap(self, i: int, p: int, j: int, r: int) -> tuple:
        """Normal form of x_i^p x_j^r for i > j."""
        key = (i, p, j, r)
        hit = self._swap_cache.get(key)
        if hit is not None:
            return hit
        if p == 1 and r == 1:
            res = self._rel(j, i)
        elif r > 1:
            acc: Terms = {}
            ej = self.unit(j)
            for e, c in self._swap(i, p, j, r - 1):
                for e2, c2 in self._mono(e, ej):
                    acc[e2] = acc.get(e2, ZERO) + c * c2
            res = tuple((e, c) for e, c in acc.items() if c)
        else:
            acc = {}
            ei = self.unit(i)
            for e, c in self._swap(i, p - 1, j, 1):
                for e2, c2 in self._mono(ei, e):
                    acc[e2] = acc.get(e2, ZERO) + c * c2
            res = tuple((e, c) for e, c in acc.items() if c)
        self._swap_cache[key] = res
        return res

    def _mono(self, alpha: ExpVec, beta: ExpVec) -> tuple:
        """Normal form of x^alpha * x^beta as a tuple of (exp, coeff)."""
        key = (alpha, beta)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        n = self.n
        i = n - 1
        while i >= 0 and alpha[i] == 0:
            i -= 1
        j = 0
        while j < n and beta[j] == 0:
            j += 1
        if i <= j or self.is_commutative:
            res = ((_add(alpha, beta), ONE),)
        else:
            p, r = alpha[i], beta[j]
            a_rest = alpha[:i] + (0,) + alpha[i + 1:]
            b_rest = beta[:j] + (0,) + beta[j + 1:]
            acc: Terms = {}
            for e, c in self._swap(i, p, j, r):
                for e2, c2 in self._mono(a_rest, e):
                    cc = c * c2
                    for e3, c3 in self._mono(e2, b_rest):
                        acc[e3] = acc.get(e3, ZERO) + cc * c3
            res = tuple((e, c) for e, c in acc.items() if c)
        self._mono_cache[key] = res
        return res

    def mul_terms(self, f: Mapping[ExpVec, ParamRat], g: Mapping[ExpVec, ParamRat]) -> Terms:
        acc: Terms = {}
        for ea, ca in f.items():
            for eb, cb in g.items():
                cab = ca * cb
                for e, c in self._mono(ea, eb):
                    acc[e] = acc.get(e, ZERO) + cab * c
        return {e: c for e, c in acc.items() if c}

    def left_mul_monomial(self, gamma: ExpVec, g: Mapping[ExpVec, ParamRat]) -> Terms:
        """x^gamma * g."""
        acc: Terms = {}
        for eb, cb in g.items():
            for e, c in self._mono(gamma, eb):
                acc[e] = acc.get(e, ZERO) + cb * c
        return {e: c for e, c in acc.items() if c}

    # -- specialisation ------------------------------------------------------
    def specialize(self, a0) -> "GAlgebra":
        """The same presentation with the parameter replaced by ``a0``."""
        rel = {}
        keys = set(self.q) | set(self.d)
        for k in keys:
            qv = ParamRat(self.q.get(k, ONE).specialize(a0))
            dv = {e: ParamRat(c.specialize(a0)) for e, c in self.d.get(k, {}).items()}
            rel[k] = (qv, dv)
        return GAlgebra(self.names, rel, self.order)

    def relation_table(self) -> Dict[Tuple[str, str], str]:
        out = {}
        for k in sorted(set(self.q) | set(self.d)):
            i, j = k
            q = self.q.get(k, ONE)
            rhs = NcPoly(self, {_add(self.unit(i), self.unit(j)): q})
            rhs = rhs + NcPoly(self, self.d.get(k, {}))
            out[(self.names[j], self.names[i])] = str(rhs)
        return out

    def pbw_consistency_check(self) -> PBWReport:
        return pbw_consistency_check(self)

    def __repr__(self):
        return f"GAlgebra({', '.join(self.names)})"


def _parse_commutative(names: Sequence[str], text: str) -> Terms:
    """Parse ``text`` treating generators as commuting variables."""
    comm = GAlgebra(names)
    return dict(comm.parse(text).terms)


class NcPoly:
    """Immutable element of a G-algebra in PBW normal form."""

    __slots__ = ("algebra", "terms", "_sorted")

    def __init__(self, algebra: GAlgebra, terms: Mapping[ExpVec, ParamRat]):
        self.algebra = algebra
        self.terms: Terms = dict(terms)
        self._sorted = None

    # -- structure -------------------------------------------------------------
    def sorted_terms(self) -> Tuple[Tuple[ExpVec, ParamRat], ...]:
        """Terms in descending monomial order."""
        if self._sorted is None:
            key = self.algebra.order.key
            self._sorted = tuple(sorted(self.terms.items(), key=lambda t: key(t[0]),
                                        reverse=True))
        return self._sorted

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self) -> bool:
        z = self.algebra._zero_exp
        return all(e == z for e in self.terms)

    def constant_coeff(self) -> ParamRat:
        return self.terms.get(self.algebra._zero_exp, ZERO)

    def lexp(self) -> ExpVec:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.sorted_terms()[0][0]

    def lc(self) -> ParamRat:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.sorted_terms()[0][1]

    def lm(self) -> "NcPoly":
        return self.algebra.monomial(self.lexp())

    def support(self) -> set:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def monic(self) -> "NcPoly":
        if not self.terms:
            return self
        c = self.lc()
        if c.is_one():
            return self
        return self * c.inverse()

    def specialize(self, a0, algebra: Optional[GAlgebra] = None) -> "NcPoly":
        alg = algebra if algebra is not None else self.algebra.specialize(a0)
        out = {}
        for e, c in self.terms.items():
            v = ParamRat(c.specialize(a0))
            if v:
                out[e] = v
        return NcPoly(alg, out)

    def involves_parameter(self) -> bool:
        return any(not c.is_constant() for c in self.terms.values())

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "NcPoly"):
        if other.algebra is not self.algebra:
            raise ValueError("polynomials live in different algebras")

    def _lift(self, other) -> Optional["NcPoly"]:
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, ParamRat)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return NcPoly(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.algebra, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            return NcPoly(self.algebra, self.algebra.mul_terms(self.terms, other.terms))
        try:
            c = as_paramrat(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return self.algebra.zero()
        return NcPoly(self.algebra, {e: v * c for e, v in self.terms.items()})

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def __truediv__(self, other):
        c = as_paramrat(other)
        return self * c.inverse()

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.algebra is other.algebra and self.terms == other.terms
        if isinstance(other, (int, ParamRat)):
            return self.terms == self.algebra.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- printing -------------------------------------------------------------
    def _mono_str(self, e: ExpVec) -> str:
        parts = []
        for nm, k in zip(self.algebra.names, e):
            if k == 1:
                parts.append(nm)
            elif k > 1:
                parts.append(f"{nm}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            neg = c.num[-1] < 0
            if neg:
                c = -c
            mono = self._mono_str(e)
            cs = str(c)
            if c.den == (1,) and c.needs_parens():
                cs = f"({cs})"
            if not mono:
                body = cs
            elif c.is_one():
                body = mono
            else:
                body = f"{cs}*{mono}"
            pieces.append((neg, body))
        s = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            s += (" - " if neg else " + ") + body
        return s

    def __repr__(self):
        return f"NcPoly({str(self)!r})"


# --------------------------------------------------------------------------
# functional interface
# --------------------------------------------------------------------------

def normal_form_product(A: GAlgebra, alpha: Sequence[int], beta: Sequence[int]) -> NcPoly:
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != A.n or len(beta) != A.n:
        raise ValueError("exponent width mismatch")
    return NcPoly(A, dict(A._mono(alpha, beta)))


def multiply(A: GAlgebra, f: NcPoly, g: NcPoly) -> NcPoly:
    return NcPoly(A, A.mul_terms(f.terms, g.terms))


def commutator(A: GAlgebra, f: NcPoly, g: NcPoly) -> NcPoly:
    return multiply(A, f, g) - multiply(A, g, f)


def pbw_consistency_check(A: GAlgebra) -> PBWReport:
    """Check the non-degeneracy conditions on every triple i < j < k.

    With ``x_j x_i = q_ij x_i x_j + d_ij`` the two rewritings of
    ``x_k x_j x_i`` agree iff

        q_ik q_jk d_ij x_k - x_k d_ij + q_jk x_j d_ik - q_ij d_ik x_j
            + d_jk x_i - q_ij q_ik x_i d_jk = 0.
    """
    failures = []
    obstructions = {}
    zero = A.zero()
    for i, j, k in combinations(range(A.n), 3):
        qij = A.q.get((i, j), ONE)
        qik = A.q.get((i, k), ONE)
        qjk = A.q.get((j, k), ONE)
        dij = NcPoly(A, A.d.get((i, j), {}))
        dik = NcPoly(A, A.d.get((i, k), {}))
        djk = NcPoly(A, A.d.get((j, k), {}))
        if not (dij or dik or djk) and A.is_lie_type:
            continue
        xi, xj, xk = A.gen(i), A.gen(j), A.gen(k)
        ndc = (dij * xk * (qik * qjk) - xk * dij
               + xj * dik * qjk - dik * xj * qij
               + djk * xi - xi * djk * (qij * qik))
        if ndc != zero:
            failures.append((i, j, k))
            obstructions[(i, j, k)] = str(ndc)
    return PBWReport(ok=not failures, failing_triple=failures[0] if failures else None,
                     failures=tuple(failures), obstructions=obstructions)
