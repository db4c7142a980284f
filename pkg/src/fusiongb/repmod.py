"""Brute-force module side: sl2 irreps, evaluation tensor modules, filtrations.

Everything is exact.  Vectors are tuples of Fractions; spans are kept as
integer row-echelon bases (fraction-free elimination), so rank and
membership questions are decided without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .coeffs import ParamRat
from .current import sl2_truncated
from .galgebra import GAlgebra, NcPoly

__all__ = [
    "Irrep",
    "EvalModule",
    "GradedDims",
    "Span",
    "irrep",
    "evaluation_tensor_module",
    "check_brackets",
    "apply_poly",
    "annihilates",
    "cyclic_dimension",
    "fusion_graded_dims_oracle",
    "f_independence",
]

Matrix = Tuple[Tuple[Fraction, ...], ...]
Vector = Tuple[Fraction, ...]

GENERATORS = ("e0", "e1", "h0", "h1", "f0", "f1")


# --------------------------------------------------------------------------
# small exact linear algebra
# --------------------------------------------------------------------------

def _zeros(n: int) -> List[List[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _freeze(m: List[List[Fraction]]) -> Matrix:
    return tuple(tuple(r) for r in m)


def _identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matmul(x: Matrix, y: Matrix) -> Matrix:
    cols = list(zip(*y))
    return tuple(tuple(sum((a * b for a, b in zip(row, c)), Fraction(0)) for c in cols)
                 for row in x)


def matvec(x: Matrix, v: Vector) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v) if b), Fraction(0)) for row in x)


def kron(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(a * b for a in rx for b in ry) for rx in x for ry in y)


def _madd(x: Matrix, y: Matrix, s=1) -> Matrix:
    return tuple(tuple(a + s * b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def _mscale(x: Matrix, s) -> Matrix:
    return tuple(tuple(a * s for a in r) for r in x)


def _primitive(v: Sequence[int]) -> Tuple[int, ...]:
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def _integral(v: Sequence[Fraction]) -> Tuple[int, ...]:
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    return _primitive([int(Fraction(x) * den) for x in v])


class Span:
    """Incrementally built subspace of Q^n with an integer echelon basis."""

    def __init__(self, n: int):
        self.n = n
        self._rows: Dict[int, Tuple[int, ...]] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, v: Tuple[int, ...]) -> Tuple[int, ...]:
        v = list(v)
        for p in sorted(self._rows):
            if v[p]:
                r = self._rows[p]
                a, b = r[p], v[p]
                g = gcd(a, b)
                a, b = a // g, b // g
                v = [a * x - b * y for x, y in zip(v, r)]
        return _primitive(v)

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert ``vec``; True iff it enlarged the span."""
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        v = self._reduce(_integral(vec))
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        self._rows[piv] = v
        return True

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return not any(self._reduce(_integral(vec)))


def rank(vectors: Iterable[Sequence[Fraction]]) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    s = Span(len(vectors[0]))
    for v in vectors:
        s.add(v)
    return s.dim


# --------------------------------------------------------------------------
# modules
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Irrep:
    n: int
    E: Matrix
    F: Matrix
    H: Matrix

    @property
    def dim(self) -> int:
        return self.n + 1


def irrep(n: int) -> Irrep:
    """V(n) on the weight basis v_0..v_n with v_0 highest.

    H v_k = (n-2k) v_k, F v_k = v_(k+1), E v_k = k(n-k+1) v_(k-1).
    """
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    d = n + 1
    E, F, H = _zeros(d), _zeros(d), _zeros(d)
    for k in range(d):
        H[k][k] = Fraction(n - 2 * k)
        if k + 1 < d:
            F[k + 1][k] = Fraction(1)
        if k > 0:
            E[k - 1][k] = Fraction(k * (n - k + 1))
    return Irrep(n, _freeze(E), _freeze(F), _freeze(H))


@dataclass(frozen=True)
class EvalModule:
    """V(lambda) evaluated at 0 tensored with V(mu) evaluated at a0."""

    lam: int
    mu: int
    a0: Fraction
    action: Dict[str, Matrix] = field(repr=False)
    hw_vector: int = 0

    @property
    def dim(self) -> int:
        return (self.lam + 1) * (self.mu + 1)

    @property
    def degenerate(self) -> bool:
        # both points coincide: the tensor product is no longer simple
        return self.a0 == 0

    @property
    def algebra(self) -> GAlgebra:
        return sl2_truncated(self.a0)

    def hw(self) -> Vector:
        return tuple(Fraction(int(i == self.hw_vector)) for i in range(self.dim))


def check_brackets(M: EvalModule) -> List[Tuple[str, str]]:
    """Pairs (x_i, x_j) whose defining relation fails as a matrix identity."""
    A = M.algebra
    bad = []
    for i in range(A.n):
        for j in range(i + 1, A.n):
            xi, xj = M.action[A.names[i]], M.action[A.names[j]]
            lhs = _madd(matmul(xj, xi), matmul(xi, xj), -1)
            rhs = _poly_matrix(NcPoly(A, A.d.get((i, j), {})), M)
            if lhs != rhs:
                bad.append((A.names[i], A.names[j]))
    return bad


def evaluation_tensor_module(lam: int, mu: int, a0) -> EvalModule:
    """x0 acts by X⊗1 + 1⊗X and x1 by a0 (1⊗X), for X in {E, H, F}."""
    a0 = Fraction(a0)
    V, W = irrep(lam), irrep(mu)
    I_V, I_W = _identity(V.dim), _identity(W.dim)
    action = {}
    for name, X, Y in (("e", V.E, W.E), ("h", V.H, W.H), ("f", V.F, W.F)):
        action[name + "0"] = _madd(kron(X, I_W), kron(I_V, Y))
        action[name + "1"] = _mscale(kron(I_V, Y), a0)
    M = EvalModule(lam, mu, a0, action, 0)
    bad = check_brackets(M)
    if bad:
        raise RuntimeError(f"bracket relations fail on {bad}")
    return M


def _monomial_images(M: EvalModule, A: GAlgebra, v: Vector, cache: dict, exp) -> Vector:
    # x^exp v with the rightmost factor acting first
    if exp in cache:
        return cache[exp]
    i = next(k for k, e in enumerate(exp) if e)
    rest = exp[:i] + (exp[i] - 1,) + exp[i + 1:]
    out = matvec(M.action[A.names[i]], _monomial_images(M, A, v, cache, rest))
    cache[exp] = out
    return out


def _coeff_at(c: ParamRat, a0: Fraction) -> Fraction:
    return c.specialize(a0)


def apply_poly(f: NcPoly, M: EvalModule, v: Optional[Vector] = None,
               cache: Optional[dict] = None) -> Vector:
    """f·v with a specialised to M.a0 (``v`` defaults to the highest weight vector)."""
    A = f.algebra
    if set(A.names) != set(GENERATORS):
        raise ValueError(f"expected generators {GENERATORS}, got {A.names}")
    v = M.hw() if v is None else tuple(v)
    if cache is None:
        cache = {}
    cache.setdefault((0,) * A.n, v)
    out = [Fraction(0)] * M.dim
    for e, c in f.terms.items():
        s = _coeff_at(c, M.a0)
        if s:
            w = _monomial_images(M, A, v, cache, e)
            out = [x + s * y for x, y in zip(out, w)]
    return tuple(out)


def _poly_matrix(f: NcPoly, M: EvalModule) -> Matrix:
    cols = []
    for k in range(M.dim):
        ek = tuple(Fraction(int(i == k)) for i in range(M.dim))
        cols.append(apply_poly(f, M, ek))
    return tuple(zip(*cols))


def annihilates(gens: Sequence[NcPoly], M: EvalModule) -> bool:
    """True iff every element of ``gens`` kills the highest weight vector.

    Coefficients are specialised at a = M.a0; a pole raises
    ``SpecializationPole``.
    """
    cache: dict = {}
    return all(not any(apply_poly(g, M, cache=cache)) for g in gens)


def cyclic_dimension(M: EvalModule) -> int:
    """Dimension of U·v for the highest weight vector v."""
    span = Span(M.dim)
    frontier = [M.hw()]
    span.add(frontier[0])
    while frontier:
        nxt = []
        for v in frontier:
            for g in GENERATORS:
                w = matvec(M.action[g], v)
                if span.add(w):
                    nxt.append(w)
        frontier = nxt
    return span.dim


@dataclass(frozen=True)
class GradedDims:
    dims: Dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def as_dict(self) -> Dict[int, int]:
        return dict(self.dims)

    def to_json_map(self) -> Dict[str, int]:
        return {str(k): v for k, v in sorted(self.dims.items())}


def _closure(M: EvalModule, span: Span, seeds: List[Vector], gens: Sequence[str]) -> None:
    # close ``span`` under the given generators, starting from ``seeds``
    frontier = [v for v in seeds if span.add(v)]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = matvec(M.action[g], v)
                if span.add(w):
                    nxt.append(w)
        frontier = nxt


def fusion_graded_dims_oracle(lam: int, mu: int, a0=1) -> GradedDims:
    """Graded pieces of the t-degree filtration on U·(v_lam ⊗ v_mu).

    S_0 is the span under the degree-0 generators; S_r is the closure under
    those of S_(r-1) and x1·S_(r-1) for x in {e, h, f}.
    """
    a0 = Fraction(a0)
    if a0 == 0:
        raise ValueError("a0 = 0 collapses both evaluation points; the filtration degenerates")
    M = evaluation_tensor_module(lam, mu, a0)
    deg0 = ("e0", "h0", "f0")
    deg1 = ("e1", "h1", "f1")
    span = Span(M.dim)
    basis: List[Vector] = []

    def grow(seeds):
        before = span.dim
        added = []
        frontier = list(seeds)
        while frontier:
            nxt = []
            for v in frontier:
                if span.add(v):
                    added.append(v)
                    nxt.extend(matvec(M.action[g], v) for g in deg0)
            frontier = nxt
        return span.dim - before, added

    dims: Dict[int, int] = {}
    gained, layer = grow([M.hw()])
    basis.extend(layer)
    dims[0] = gained
    r = 0
    total = cyclic_dimension(M)
    while span.dim < total:
        r += 1
        seeds = [matvec(M.action[g], v) for v in basis for g in deg1]
        gained, layer = grow(seeds)
        if gained == 0:
            break
        basis.extend(layer)
        dims[r] = gained
    return GradedDims(dims)


@dataclass(frozen=True)
class IndependenceCheck:
    i: int
    ell: int
    p: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.rank == self.p + 1


def f_independence(lam: int, mu: int, a0=1) -> List[IndependenceCheck]:
    """Ranks of {f1^k f0^(ell-k)·v : 0 <= k <= p} for p <= i <= mu, p <= ell < lam+mu+1-i."""
    a0 = Fraction(a0)
    M = evaluation_tensor_module(lam, mu, a0)
    f0, f1 = M.action["f0"], M.action["f1"]
    top = lam + mu + 1
    # images f1^k f0^j v, built on demand
    memo: Dict[Tuple[int, int], Vector] = {(0, 0): M.hw()}

    def img(k, j):
        if (k, j) not in memo:
            memo[(k, j)] = matvec(f1, img(k - 1, j)) if k else matvec(f0, img(0, j - 1))
        return memo[(k, j)]

    out = []
    for i in range(mu + 1):
        for p in range(i + 1):
            for ell in range(p, top - i):
                r = rank(img(k, ell - k) for k in range(p + 1))
                out.append(IndependenceCheck(i, ell, p, r))
    return out
