"""Left Gröbner bases in G-algebras, leading-term ideals and staircases."""

from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .coeffs import ZERO
from .galgebra import ExpVec, GAlgebra, NcPoly

log = logging.getLogger(__name__)

__all__ = [
    "LeftGB",
    "MonomialIdeal",
    "Staircase",
    "left_normal_form",
    "spoly",
    "left_buchberger",
    "interreduce",
    "leading_term_ideal",
    "staircase",
    "graded_dimensions",
    "is_member",
    "ideals_equal",
]


def _divides(a: ExpVec, b: ExpVec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(b: ExpVec, a: ExpVec) -> ExpVec:
    return tuple(y - x for x, y in zip(a, b))


def _lcm(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class LeftGB:
    algebra: GAlgebra
    elements: Tuple[NcPoly, ...]
    reduced: bool = False

    def lexps(self) -> List[ExpVec]:
        return [g.lexp() for g in self.elements]

    def strings(self) -> List[str]:
        return [str(g) for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, LeftGB):
            return NotImplemented
        return self.algebra is other.algebra and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)


@dataclass(frozen=True)
class MonomialIdeal:
    """Commutative monomial ideal given by a minimal set of exponent vectors."""

    generators: Tuple[ExpVec, ...]
    width: int
    names: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_exponents(cls, exps: Sequence[Sequence[int]], width: Optional[int] = None,
                       names: Optional[Sequence[str]] = None) -> "MonomialIdeal":
        exps = sorted({tuple(e) for e in exps}, key=lambda e: (sum(e), e))
        if width is None:
            if not exps and names is None:
                raise ValueError("width needed for the empty ideal")
            width = len(exps[0]) if exps else len(names)
        minimal = []
        for e in exps:
            if len(e) != width:
                raise ValueError("exponent width mismatch")
            if not any(_divides(m, e) for m in minimal):
                minimal.append(e)
        return cls(tuple(sorted(minimal)), width, tuple(names) if names else None)

    def contains(self, exp: Sequence[int]) -> bool:
        exp = tuple(exp)
        return any(_divides(g, exp) for g in self.generators)

    def monomial_strings(self) -> List[str]:
        names = self.names or tuple(f"x{i}" for i in range(self.width))
        out = []
        for g in self.generators:
            parts = [nm if k == 1 else f"{nm}^{k}" for nm, k in zip(names, g) if k]
            out.append("*".join(parts) or "1")
        return out


@dataclass(frozen=True)
class Staircase:
    finite: bool
    count: Optional[int]
    monomials: Tuple[ExpVec, ...]


# --------------------------------------------------------------------------
# reduction
# --------------------------------------------------------------------------

def _nf_terms(A: GAlgebra, terms: Dict[ExpVec, object], G: Sequence[NcPoly],
              full: bool = True) -> Dict[ExpVec, object]:
    """Left normal form on raw term dicts.

    Terms are processed from the top down; each reducible term is cancelled by
    the first element of ``G`` whose leading exponent divides it.
    """
    if not terms or not G:
        return dict(terms)
    key = A.order.key
    lead = [(g.lexp(), g.terms) for g in G]
    r = dict(terms)
    heap = [tuple(-k for k in key(e)) + (e,) for e in r]
    heapq.heapify(heap)
    queued = set(r)
    out: Dict[ExpVec, object] = {}
    while heap:
        item = heapq.heappop(heap)
        e = item[-1]
        queued.discard(e)
        c = r.pop(e, None)
        if c is None:
            continue
        for lg, gt in lead:
            if _divides(lg, e):
                break
        else:
            out[e] = c
            if not full:
                out.update(r)
                return out
            continue
        prod = A.left_mul_monomial(_sub(e, lg), gt)
        factor = c / prod[e]
        for e2, v in prod.items():
            if e2 == e:
                continue
            nv = r.get(e2, ZERO) - factor * v
            if nv:
                r[e2] = nv
                if e2 not in queued:
                    queued.add(e2)
                    heapq.heappush(heap, tuple(-k for k in key(e2)) + (e2,))
            else:
                r.pop(e2, None)
    return out


def left_normal_form(A: GAlgebra, f: NcPoly, G: Sequence[NcPoly]) -> NcPoly:
    """Remainder of ``f`` under left division by ``G`` (full reduction)."""
    G = list(G.elements) if isinstance(G, LeftGB) else list(G)
    if any(g.is_zero() for g in G):
        raise ValueError("divisors must be nonzero")
    return NcPoly(A, _nf_terms(A, f.terms, G))


def spoly(A: GAlgebra, f: NcPoly, g: NcPoly) -> NcPoly:
    """Left s-polynomial: the monic multiples of f and g at the lcm, subtracted."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s-polynomial of the zero polynomial")
    a, b = f.lexp(), g.lexp()
    gamma = _lcm(a, b)
    u = NcPoly(A, A.left_mul_monomial(_sub(gamma, a), f.terms))
    v = NcPoly(A, A.left_mul_monomial(_sub(gamma, b), g.terms))
    return u * u.terms[gamma].inverse() - v * v.terms[gamma].inverse()


def _disjoint(a: ExpVec, b: ExpVec) -> bool:
    return not any(x and y for x, y in zip(a, b))


def left_buchberger(A: GAlgebra, gens: Sequence[NcPoly], use_product_criterion: bool = True,
                    reduce: bool = True) -> LeftGB:
    """Left Gröbner basis of the left ideal generated by ``gens``.

    Critical pairs are processed smallest lcm first.  With the product
    criterion, pairs whose leading monomials share no variable are handled
    through the commutator ``[g, f]`` in Lie type and skipped outright when
    the algebra is commutative.
    """
    key = A.order.key
    G: List[NcPoly] = []
    pairs: list = []
    counter = itertools.count()

    def add(p: NcPoly):
        p = p.monic()
        j = len(G)
        G.append(p)
        for i in range(j):
            lcm = _lcm(G[i].lexp(), p.lexp())
            heapq.heappush(pairs, (key(lcm), next(counter), i, j))

    for g in gens:
        if g.algebra is not A:
            raise ValueError("generator from a different algebra")
        r = NcPoly(A, _nf_terms(A, g.terms, G))
        if r:
            add(r)
    if not G:
        if not gens:
            raise ValueError("no generators given")
        return LeftGB(A, (), True)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        f, g = G[i], G[j]
        if use_product_criterion and A.is_lie_type and _disjoint(f.lexp(), g.lexp()):
            if A.is_commutative:
                continue
            h = g * f - f * g
        else:
            h = spoly(A, f, g)
        r = NcPoly(A, _nf_terms(A, h.terms, G))
        if r:
            log.debug("new basis element %s from pair (%d, %d)", r.lexp(), i, j)
            add(r)
    if reduce:
        return interreduce(A, G)
    return LeftGB(A, tuple(G), False)


def interreduce(A: GAlgebra, G: Sequence[NcPoly], check: bool = False) -> LeftGB:
    """Reduced, monic, sorted basis; ``G`` must already be a Gröbner basis.

    With ``check=True`` every s-polynomial of the input is verified to
    reduce to zero first and a ``ValueError`` is raised otherwise.
    """
    G = [g for g in (G.elements if isinstance(G, LeftGB) else G) if g]
    if check:
        for f, g in itertools.combinations(G, 2):
            if left_normal_form(A, spoly(A, f, g), G):
                raise ValueError("input is not a Gröbner basis")
    key = A.order.key
    G = sorted((g.monic() for g in G), key=lambda g: key(g.lexp()))
    minimal: List[NcPoly] = []
    for g in G:
        if not any(_divides(m.lexp(), g.lexp()) for m in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        out.append(NcPoly(A, _nf_terms(A, g.terms, others)).monic())
    out.sort(key=lambda g: key(g.lexp()))
    return LeftGB(A, tuple(out), True)


# --------------------------------------------------------------------------
# leading terms and staircases
# --------------------------------------------------------------------------

def leading_term_ideal(G) -> MonomialIdeal:
    elems = G.elements if isinstance(G, LeftGB) else tuple(G)
    if not elems:
        raise ValueError("empty basis")
    A = elems[0].algebra
    return MonomialIdeal.from_exponents([g.lexp() for g in elems], A.n, A.names)


def _pure_power_bounds(M: MonomialIdeal) -> List[Optional[int]]:
    bounds: List[Optional[int]] = [None] * M.width
    for g in M.generators:
        nz = [i for i, k in enumerate(g) if k]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    return bounds


def _standard_monomials(M: MonomialIdeal, bounds: Sequence[int]) -> Iterator[ExpVec]:
    n = M.width

    def rec(prefix: Tuple[int, ...]):
        i = len(prefix)
        if i == n:
            yield prefix
            return
        for k in range(bounds[i]):
            cand = prefix + (k,)
            # prune using generators supported on the first i+1 variables
            if any(all(x <= y for x, y in zip(g[: i + 1], cand)) and not any(g[i + 1:])
                   for g in M.generators):
                break
            yield from rec(cand)

    yield from rec(())


def staircase(M: MonomialIdeal, max_degree: Optional[int] = None) -> Staircase:
    """Standard monomials of ``M``.

    Finite iff every variable has a pure power among the generators.  For
    an infinite staircase the monomials up to ``max_degree`` are listed when
    a bound is given.
    """
    bounds = _pure_power_bounds(M)
    if all(b is not None for b in bounds):
        mons = tuple(m for m in _standard_monomials(M, bounds) if not M.contains(m))
        return Staircase(True, len(mons), mons)
    if max_degree is None:
        return Staircase(False, None, ())
    cap = [max_degree + 1 if b is None else min(b, max_degree + 1) for b in bounds]
    mons = tuple(m for m in itertools.product(*(range(c) for c in cap))
                 if sum(m) <= max_degree and not M.contains(m))
    return Staircase(False, None, mons)


def graded_dimensions(M: MonomialIdeal, weights: Sequence[int]) -> Dict[int, int]:
    """Count standard monomials by weighted degree."""
    if len(weights) != M.width:
        raise ValueError("weight vector width mismatch")
    st = staircase(M)
    if not st.finite:
        raise ValueError("staircase is infinite; graded dimensions are undefined")
    out: Dict[int, int] = {}
    for m in st.monomials:
        d = sum(w * k for w, k in zip(weights, m))
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def is_member(A: GAlgebra, f: NcPoly, G) -> bool:
    if f.is_zero():
        return True
    return left_normal_form(A, f, G).is_zero()


def ideals_equal(A: GAlgebra, gens1: Sequence[NcPoly], gens2: Sequence[NcPoly]) -> bool:
    """Equality of left ideals via mutual membership."""
    g1 = [g for g in gens1 if g]
    g2 = [g for g in gens2 if g]
    if not g1 or not g2:
        return not g1 and not g2
    G1 = left_buchberger(A, g1)
    G2 = left_buchberger(A, g2)
    return all(is_member(A, f, G2) for f in g1) and all(is_member(A, f, G1) for f in g2)
