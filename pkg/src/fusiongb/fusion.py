"""Fusion ideals for sl2 and the explicit Gröbner basis built from the F_i.

All elements live in ``sl2_truncated()``: generators (e0, e1, h0, h1, f0, f1)
of U(sl2 ⊗ Q(a)[t]/(t^2 - a t)).  Passing ``a0`` to the constructors gives
the same elements in the algebra specialised at ``a = a0``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple

from .coeffs import A as PARAM, ONE, ParamRat
from .current import sl2_truncated
from .galgebra import GAlgebra, MonomialOrder, NcPoly, commutator
from .groebner import (
    LeftGB,
    graded_dimensions,
    ideals_equal,
    interreduce,
    leading_term_ideal,
    left_buchberger,
    left_normal_form,
    staircase,
)

log = logging.getLogger(__name__)

# t-degree of each generator of sl2_truncated()
T_WEIGHTS = (0, 1, 0, 1, 0, 1)


@dataclass(frozen=True)
class WeightPair:
    lam: int
    mu: int

    def __post_init__(self):
        if self.mu < 0 or self.lam < 0:
            raise ValueError("weights must be non-negative")
        if self.lam < self.mu:
            raise ValueError(
                f"need lambda >= mu, got ({self.lam}, {self.mu}); the ideal is not "
                "symmetric in the two weights, swap them explicitly if intended")

    @property
    def top(self) -> int:
        """lambda + mu + 1, the exponent of F_0 = f0^(lambda+mu+1)."""
        return self.lam + self.mu + 1


def _pair(w) -> WeightPair:
    return w if isinstance(w, WeightPair) else WeightPair(*w)


def _binom(n: int, k: int) -> int:
    # generalised binomial: binom(-1, 0) = 1 is needed for c_{mu+1, mu+1}
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(-n + k - 1, k)


@dataclass(frozen=True)
class FusionCoefficients:
    m: Tuple[int, ...]                      # m_i, 0 <= i <= mu+1
    c: Dict[Tuple[int, int], int]           # c[(j, i)], 0 <= j <= i <= mu+1
    p: Tuple[Fraction, ...]                 # p_i, 0 <= i <= mu
    q: Tuple[Fraction, ...]                 # q_i, 0 <= i <= mu


def fusion_coefficients(w) -> FusionCoefficients:
    w = _pair(w)
    lam, mu = w.lam, w.mu
    m = tuple(lam + mu + 1 - i for i in range(mu + 2))
    c = {(j, i): comb(m[i], j) * _binom(mu - j, i - j)
         for i in range(mu + 2) for j in range(i + 1)}
    p, q = [], []
    for i in range(mu + 1):
        if lam == mu == i:
            p.append(Fraction(0))
            q.append(Fraction(0))
        else:
            den = m[i] - i - 1
            p.append(Fraction(-2 * m[i] * (i + 1), den))
            q.append(Fraction(-2 * m[i] * (mu - i), den))
    return FusionCoefficients(m, c, tuple(p), tuple(q))


# --------------------------------------------------------------------------
# elements
# --------------------------------------------------------------------------

def _algebra(a0=None, algebra: Optional[GAlgebra] = None) -> GAlgebra:
    return algebra if algebra is not None else sl2_truncated(a0)


def _f_monomial(alg: GAlgebra, s: int, t: int, coeff=ONE) -> NcPoly:
    """coeff * f1^s f0^t (zero if an exponent is negative)."""
    if s < 0 or t < 0:
        return alg.zero()
    e = [0] * alg.n
    e[alg.index("f1")] += s
    e[alg.index("f0")] += t
    return alg.monomial(e, coeff)


def _param(alg: GAlgebra, a0=None) -> ParamRat:
    return PARAM if a0 is None else ParamRat(a0)


def f_polynomial(w, i: int, a0=None, algebra: Optional[GAlgebra] = None) -> NcPoly:
    """F_i = sum_k c_ki (-a)^(i-k) f1^k f0^(m_i-k), for 0 <= i <= mu+1.

    ``algebra`` may be any algebra with commuting generators named f0, f1
    (e.g. the commutative ring Q(a)[f0, f1]).
    """
    w = _pair(w)
    if not 0 <= i <= w.mu + 1:
        raise ValueError(f"F_i needs 0 <= i <= mu+1, got i = {i}")
    alg = _algebra(a0, algebra)
    a = _param(alg, a0)
    co = fusion_coefficients(w)
    out = alg.zero()
    for k in range(i + 1):
        ck = co.c[(k, i)]
        if ck:
            out = out + _f_monomial(alg, k, co.m[i] - k, (-a) ** (i - k) * ck)
    return out


def formal_partial(f: NcPoly, var) -> NcPoly:
    """Term-wise partial derivative; ``f`` must involve only commuting generators."""
    A = f.algebra
    v = A.index(var)
    supp = sorted(f.support())
    for x in supp:
        for y in supp:
            if x < y and ((x, y) in A.d or (x, y) in A.q):
                raise ValueError(
                    f"{A.names[x]} and {A.names[y]} do not commute; formal partials "
                    "are only defined on commuting generators")
    out = {}
    for e, c in f.terms.items():
        k = e[v]
        if k:
            e2 = e[:v] + (k - 1,) + e[v + 1:]
            out[e2] = c * k
    return NcPoly(A, out)


def _hw_part(alg: GAlgebra, w: WeightPair, a: ParamRat) -> List[NcPoly]:
    e0, e1, h0, h1 = (alg.gen(x) for x in ("e0", "e1", "h0", "h1"))
    return [e0, e1, h0 - (w.lam + w.mu), h1 - a * w.mu]


def ideal_Ia(w, a0=None) -> List[NcPoly]:
    """Generators of I_a(lambda, mu) in the truncated algebra."""
    w = _pair(w)
    alg = _algebra(a0)
    a = _param(alg, a0)
    f0, f1 = alg.gen("f0"), alg.gen("f1")
    return _hw_part(alg, w, a) + [f0 ** w.top, f1 ** (w.mu + 1), (f1 - a * f0) ** (w.lam + 1)]


def ideal_I(w) -> List[NcPoly]:
    """Generators of I(lambda, mu) in the a = 0 truncated algebra."""
    w = _pair(w)
    alg = sl2_truncated(0)
    f0, f1 = alg.gen("f0"), alg.gen("f1")
    e0, e1, h0, h1 = (alg.gen(x) for x in ("e0", "e1", "h0", "h1"))
    return [e0, e1, h0 - (w.lam + w.mu), h1, f0 ** w.top, f1 ** (w.mu + 1)]


def claimed_groebner_basis(w, a0=None) -> List[NcPoly]:
    w = _pair(w)
    alg = _algebra(a0)
    a = _param(alg, a0)
    Fs = [f_polynomial(w, i, a0) for i in range(w.mu + 1)]
    return _hw_part(alg, w, a) + Fs + [alg.gen("f1") ** (w.mu + 1)]


def degenerate_basis(w) -> List[NcPoly]:
    """The monomial basis expected at a = 0."""
    w = _pair(w)
    alg = sl2_truncated(0)
    mons = [_f_monomial(alg, i, w.top - 2 * i) for i in range(w.mu + 1)]
    return _hw_part(alg, w, ParamRat(0)) + mons + [alg.gen("f1") ** (w.mu + 1)]


def commutative_f_ring() -> GAlgebra:
    """Q(a)[f0, f1] with f1 > f0, as a (commutative) G-algebra."""
    return GAlgebra(("f0", "f1"), {}, MonomialOrder.deglex(2))


# --------------------------------------------------------------------------
# commutator identities
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    """One bracket identity instance.

    ``printed_holds`` compares against the published closed form.  Three of
    those closed forms are wrong for some indices; for them ``holds`` uses
    the corrected right side (``corrected_rhs``) and ``note`` says why.
    """

    name: str
    printed_holds: bool
    lhs: str
    rhs: str
    corrected_rhs: Optional[str] = None
    corrected_holds: Optional[bool] = None
    note: str = ""

    @property
    def holds(self) -> bool:
        if self.corrected_holds is None:
            return self.printed_holds
        return self.corrected_holds


@dataclass
class IdentityReport:
    lam: int
    mu: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """All identities hold, misprinted ones in their corrected form."""
        return all(c.holds for c in self.checks)

    @property
    def printed_ok(self) -> bool:
        """All identities hold exactly as printed."""
        return all(c.printed_holds for c in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.holds]

    def printed_failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.printed_holds]

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "mu": self.mu,
            "ok": self.ok,
            "printed_ok": self.printed_ok,
            "count": len(self.checks),
            "failed": [c.name for c in self.failures()],
            "errata": [
                {"name": c.name, "printed_rhs": c.rhs, "printed_holds": c.printed_holds,
                 "corrected_rhs": c.corrected_rhs, "note": c.note}
                for c in self.checks if c.corrected_rhs is not None and not c.printed_holds
            ],
        }


_NOTE_E1F = ("coefficient of F_(i+1) is -(i+1)*m_i, not (i+1)*(m_i-1): the ratio "
             "c_(j,i+1)/c_(j,i) has m_i, not m_i-1, in its denominator")
_NOTE_H1F = ("for lambda = mu = i the right side is -2(mu+1) f1^(mu+1), "
             "not 0; it still lies in the ideal")
_NOTE_E1H1 = ("[e1, h1] = -2a e1 in the truncated algebra; the printed 0 holds only "
              "at a = 0, and -2a e1 still lies in the left ideal")


def verify_commutators(w, st_max: int = 8) -> IdentityReport:
    """Check every bracket identity used for the sl2 basis, exactly over Q(a).

    Left sides come from :func:`commutator`; right sides are assembled from
    the closed forms.  ``st_max`` bounds s, t in the identities on
    ``f1^s f0^t``.
    """
    w = _pair(w)
    alg = sl2_truncated()
    a = PARAM
    lam, mu = w.lam, w.mu
    e0, e1, h0, h1, f0, f1 = alg.gens()
    co = fusion_coefficients(w)
    F = [f_polynomial(w, i) for i in range(mu + 2)]
    f1mu = f1 ** (mu + 1)
    H0 = h0 - (lam + mu)
    H1 = h1 - a * mu
    report = IdentityReport(lam, mu)

    def br(x, y):
        return commutator(alg, x, y)

    def check(name, lhs, rhs, corrected=None, note=""):
        report.checks.append(IdentityCheck(
            name, lhs == rhs, str(lhs), str(rhs),
            None if corrected is None else str(corrected),
            None if corrected is None else lhs == corrected,
            note if corrected is not None else ""))

    def fm(s, t):
        return _f_monomial(alg, s, t)

    def e1_F(i):
        d0, d1 = formal_partial(F[i], "f0"), formal_partial(F[i], "f1")
        base = (d0 + d1 * a) * H1
        return (base + F[i + 1] * ((i + 1) * (co.m[i] - 1)),
                base - F[i + 1] * ((i + 1) * co.m[i]))

    def h1_F(i):
        printed = f0 * F[i + 1] * co.p[i] + F[i] * (a * co.q[i])
        if lam == mu == i:
            return printed, f1mu * (-2 * (mu + 1))
        return printed, None

    for s in range(st_max + 1):
        for t in range(st_max + 1):
            x = fm(s, t)
            check(f"[h0,f1^{s}*f0^{t}]", br(h0, x), x * (-2 * (s + t)))
            check(f"[h1,f1^{s}*f0^{t}]", br(h1, x),
                  x * (a * (-2 * s)) + fm(s + 1, t - 1) * (-2 * t))
            check(f"[e0,f1^{s}*f0^{t}]", br(e0, x),
                  fm(s - 1, t) * (h1 - a * (s - 1)) * s
                  + fm(s, t - 1) * (h0 - (2 * s + t - 1)) * t)
            check(f"[e1,f1^{s}*f0^{t}]", br(e1, x),
                  fm(s - 1, t) * (h1 - a * (s - 1)) * (a * s)
                  + fm(s, t - 1) * (h1 - a * (2 * s)) * t
                  - fm(s + 1, t - 2) * (t * (t - 1)))

    for i in range(mu + 1):
        d0, d1 = formal_partial(F[i], "f0"), formal_partial(F[i], "f1")
        check(f"[h0,F_{i}]", br(h0, F[i]), F[i] * (-2 * co.m[i]))
        printed, corrected = h1_F(i)
        check(f"[h1,F_{i}]", br(h1, F[i]), printed, corrected, _NOTE_H1F)
        check(f"[e0,F_{i}]", br(e0, F[i]), d0 * H0 + d1 * H1)
        printed, corrected = e1_F(i)
        check(f"[e1,F_{i}]", br(e1, F[i]), printed, corrected, _NOTE_E1F)
    check("[h0,f1^(mu+1)]", br(h0, f1mu), f1mu * (-2 * (mu + 1)))
    check("[h1,f1^(mu+1)]", br(h1, f1mu), f1mu * (a * (-2 * (mu + 1))))
    check("[e0,f1^(mu+1)]", br(e0, f1mu), f1 ** mu * H1 * (mu + 1))
    check("[e1,f1^(mu+1)]", br(e1, f1mu), f1 ** mu * H1 * (a * (mu + 1)))

    # bracket list for the basis elements, pairs with disjoint leading monomials
    z = alg.zero()
    check("(1) [e0,e1]", br(e0, e1), z)
    check("(2) [e0,h0-(l+m)]", br(e0, H0), e0 * -2)
    check("(3) [e0,h1-m*a]", br(e0, H1), e1 * -2)
    for i in range(mu + 1):
        d0, d1 = formal_partial(F[i], "f0"), formal_partial(F[i], "f1")
        check(f"(4) [e0,F_{i}]", br(e0, F[i]), d0 * H0 + d1 * H1)
    check("(5) [e0,f1^(mu+1)]", br(e0, f1mu), f1 ** mu * H1 * (mu + 1))
    check("(6) [e1,h0-(l+m)]", br(e1, H0), e1 * -2)
    check("(7) [e1,h1-m*a]", br(e1, H1), z, e1 * (a * -2), _NOTE_E1H1)
    for i in range(mu + 1):
        printed, corrected = e1_F(i)
        check(f"(8) [e1,F_{i}]", br(e1, F[i]), printed, corrected, _NOTE_E1F)
    check("(9) [e1,f1^(mu+1)]", br(e1, f1mu), f1 ** mu * H1 * (a * (mu + 1)))
    check("(10) [h0-(l+m),h1-m*a]", br(H0, H1), z)
    for i in range(mu + 1):
        check(f"(11) [h0-(l+m),F_{i}]", br(H0, F[i]), F[i] * (-2 * co.m[i]))
    check("(12) [h0-(l+m),f1^(mu+1)]", br(H0, f1mu), f1mu * (-2 * (mu + 1)))
    for i in range(mu + 1):
        printed, corrected = h1_F(i)
        check(f"(13) [h1-m*a,F_{i}]", br(H1, F[i]), printed, corrected, _NOTE_H1F)
    check("(14) [h1-m*a,f1^(mu+1)]", br(H1, f1mu), f1mu * (a * (-2 * (mu + 1))))
    return report


# --------------------------------------------------------------------------
# the Gröbner basis theorem, flatness and the a = 0 endpoint
# --------------------------------------------------------------------------

@dataclass
class TheoremReport:
    lam: int
    mu: int
    checks: Dict[str, bool] = field(default_factory=dict)
    dimension: Optional[int] = None
    graded: Dict[int, int] = field(default_factory=dict)
    basis: List[str] = field(default_factory=list)
    lt_ideal: List[List[int]] = field(default_factory=list)
    certificates: Dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "mu": self.mu,
            "ok": self.ok,
            "checks": dict(self.checks),
            "dimension": self.dimension,
            "graded": {str(k): v for k, v in sorted(self.graded.items())},
            "basis": list(self.basis),
            "lt_ideal": [list(e) for e in self.lt_ideal],
            "certificates": self.certificates,
        }


def reduced_basis(w, a0=None) -> LeftGB:
    """Reduced left Gröbner basis of I_a(lambda, mu), generic or at a = a0."""
    alg = sl2_truncated(a0)
    return left_buchberger(alg, ideal_Ia(w, a0))


def expected_graded(w) -> Dict[int, int]:
    w = _pair(w)
    return {k: w.top - 2 * k for k in range(w.mu + 1)}


def verify_theorem(w, a_samples: Sequence = (1, -2, Fraction(5, 3), 0)) -> TheoremReport:
    """Run the full Gröbner verification for one weight pair.

    Checks, each recorded under its own key:
      ``generic_basis``   reduced basis over Q(a) equals the interreduced claim;
      ``lc_free_of_a``    all leading coefficients of that basis are constants;
      ``flat_<a0>``       leading exponents at a = a0 equal the generic ones;
      ``degenerate_basis`` / ``degenerate_ideal``  the a = 0 endpoint (if 0 sampled);
      ``dimension`` / ``graded``  staircase count and t-graded counts.
    """
    w = _pair(w)
    rep = TheoremReport(w.lam, w.mu)
    alg = sl2_truncated()
    gb = reduced_basis(w)
    claim = interreduce(alg, claimed_groebner_basis(w))
    rep.checks["generic_basis"] = gb.elements == claim.elements
    rep.basis = gb.strings()
    if not rep.checks["generic_basis"]:
        rep.certificates["generic_basis"] = {"computed": gb.strings(), "claimed": claim.strings()}
    rep.checks["lc_free_of_a"] = all(g.lc().is_constant() for g in gb.elements)
    lt = leading_term_ideal(gb)
    rep.lt_ideal = [list(e) for e in lt.generators]

    for a0 in a_samples:
        a0 = Fraction(a0)
        if a0 == 0:
            continue
        gb0 = reduced_basis(w, a0)
        lt0 = leading_term_ideal(gb0)
        ok = lt0.generators == lt.generators
        rep.checks[f"flat_{a0}"] = ok
        if not ok:
            rep.certificates[f"flat_{a0}"] = [list(e) for e in lt0.generators]

    if any(Fraction(a0) == 0 for a0 in a_samples):
        alg0 = sl2_truncated(0)
        gb0 = reduced_basis(w, 0)
        expect = interreduce(alg0, degenerate_basis(w))
        rep.checks["degenerate_basis"] = gb0.elements == expect.elements
        if not rep.checks["degenerate_basis"]:
            rep.certificates["degenerate_basis"] = gb0.strings()
        rep.checks["degenerate_ideal"] = ideals_equal(alg0, ideal_Ia(w, 0), ideal_I(w))

    st = staircase(lt)
    rep.dimension = st.count
    rep.checks["dimension"] = st.finite and st.count == (w.lam + 1) * (w.mu + 1)
    if st.finite:
        rep.graded = graded_dimensions(lt, T_WEIGHTS)
    rep.checks["graded"] = rep.graded == expected_graded(w)
    return rep


def verify_commutative_basis(w) -> dict:
    """Buchberger in Q(a)[f0, f1] on the nonzero F_i adds no new leading exponents."""
    w = _pair(w)
    R = commutative_f_ring()
    Fs = [f for f in (f_polynomial(w, i, algebra=R) for i in range(w.mu + 2)) if f]
    gb = left_buchberger(R, Fs)
    before = leading_term_ideal(Fs).generators
    after = leading_term_ideal(gb).generators
    return {"ok": before == after, "input_lt": [list(e) for e in before],
            "gb_lt": [list(e) for e in after]}


# --------------------------------------------------------------------------
# (ad e1)^k f0^(lambda+mu+1) at a = 0
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AdReport:
    lam: int
    mu: int
    k: int
    result: str
    monomial_ok: bool
    scalar: Fraction
    expected_magnitude: int
    sign: int

    @property
    def ok(self) -> bool:
        return self.monomial_ok and abs(self.scalar) == self.expected_magnitude

    def to_dict(self) -> dict:
        return {"lambda": self.lam, "mu": self.mu, "k": self.k, "result": self.result,
                "monomial_ok": self.monomial_ok, "scalar": str(self.scalar),
                "expected_magnitude": self.expected_magnitude, "sign": self.sign,
                "ok": self.ok}


def ad_e1_identity(w, k: int) -> AdReport:
    """Apply ad(e1) k times to f0^(lambda+mu+1) at a = 0 and reduce mod J = A{e1, h1}."""
    w = _pair(w)
    if not 0 <= k <= w.mu:
        raise ValueError(f"k must satisfy 0 <= k <= mu, got {k}")
    alg = sl2_truncated(0)
    e1, h1 = alg.gen("e1"), alg.gen("h1")
    x = alg.gen("f0") ** w.top
    for _ in range(k):
        x = commutator(alg, e1, x)
    r = left_normal_form(alg, x, [e1, h1])
    target = _f_monomial(alg, k, w.top - 2 * k).lexp()
    mono_ok = len(r.terms) == 1 and target in r.terms
    scalar = r.terms[target].to_fraction() if mono_ok else Fraction(0)
    expected = 2 ** k * prod(comb(w.top - 2 * l, 2) for l in range(k))
    sign = (scalar > 0) - (scalar < 0)
    return AdReport(w.lam, w.mu, k, str(r), mono_ok, scalar, expected, sign)
