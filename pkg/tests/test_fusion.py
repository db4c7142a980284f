from fractions import Fraction

import pytest

from fusiongb.coeffs import ParamRat
from fusiongb.current import sl2_truncated
from fusiongb.fusion import (
    WeightPair,
    ad_e1_identity,
    claimed_groebner_basis,
    commutative_f_ring,
    degenerate_basis,
    f_polynomial,
    formal_partial,
    fusion_coefficients,
    ideal_I,
    ideal_Ia,
    verify_commutative_basis,
    verify_commutators,
    verify_theorem,
)
from fusiongb.galgebra import commutator
from fusiongb.groebner import is_member, left_buchberger


def strs(ps):
    return [str(p) for p in ps]


def test_weight_pair_guard():
    with pytest.raises(ValueError, match="lambda >= mu"):
        WeightPair(1, 2)
    assert WeightPair(3, 2).top == 6


def test_coefficients_examples():
    co = fusion_coefficients((2, 1))
    assert co.m == (4, 3, 2)
    assert co.c[(0, 1)] == 1 and co.c[(1, 1)] == 3
    assert co.p[0] == Fraction(-8, 3) and co.q[0] == Fraction(-8, 3)
    co = fusion_coefficients((1, 1))
    assert co.p[1] == 0 and co.q[1] == 0
    co = fusion_coefficients((0, 0))
    assert co.m[0] == 1 and co.p == (0,) and co.q == (0,)


def test_f_polynomial_examples(sl2):
    A = sl2
    assert f_polynomial((3, 1), 0) == A.gen("f0") ** 5
    assert f_polynomial((1, 1), 1) == A.parse("2*f1*f0 - a*f0^2")
    assert f_polynomial((1, 1), 2).is_zero()
    assert f_polynomial((2, 1), 1) == A.parse("3*f1*f0^2 - a*f0^3")
    assert f_polynomial((2, 1), 2) == A.parse("f1^2")
    with pytest.raises(ValueError):
        f_polynomial((2, 1), 3)


@pytest.mark.parametrize("w", [(3, 2), (5, 1), (4, 4)])
def test_f_polynomial_shape(w):
    A0 = sl2_truncated(0)
    co = fusion_coefficients(w)
    for i in range(w[1] + 1):
        F = f_polynomial(w, i)
        assert {sum(e) for e in F.terms} == {co.m[i]}
        assert F.lexp() == (0, 0, 0, 0, co.m[i] - i, i)
        assert F.specialize(0, algebra=A0) == A0.monomial((0, 0, 0, 0, co.m[i] - i, i), co.c[(i, i)])


def test_formal_partial(sl2):
    assert formal_partial(sl2.parse("f0^3"), "f0") == sl2.parse("3*f0^2")
    assert formal_partial(sl2.parse("2*f1*f0 - a*f0^2"), "f1") == sl2.parse("2*f0")
    assert formal_partial(sl2.parse("f0^4"), "f1").is_zero()
    with pytest.raises(ValueError):
        formal_partial(sl2.parse("e0*f0"), "f0")


def test_ideal_examples(sl2):
    assert strs(ideal_Ia((1, 1))) == strs([sl2.parse(s) for s in
                                           ("e0", "e1", "h0-2", "h1-a", "f0^3", "f1^2", "(f1-a*f0)^2")])
    assert strs(ideal_Ia((0, 0))) == strs([sl2.parse(s) for s in
                                           ("e0", "e1", "h0", "h1", "f0", "f1", "f1-a*f0")])
    assert strs(ideal_Ia((2, 0))) == strs([sl2.parse(s) for s in
                                           ("e0", "e1", "h0-2", "h1", "f0^3", "f1", "(f1-a*f0)^3")])
    A0 = sl2_truncated(0)
    assert strs(ideal_I((2, 1))) == strs([A0.parse(s) for s in
                                          ("e0", "e1", "h0-3", "h1", "f0^4", "f1^2")])
    assert strs(ideal_I((0, 0))) == ["e0", "e1", "h0", "h1", "f0", "f1"]


def test_claimed_basis_examples(sl2):
    assert strs(claimed_groebner_basis((1, 1))) == strs([sl2.parse(s) for s in (
        "e0", "e1", "h0-2", "h1-a", "f0^3", "2*f1*f0-a*f0^2", "f1^2")])
    assert strs(claimed_groebner_basis((0, 0))) == ["e0", "e1", "h0", "h1", "f0", "f1"]


@pytest.mark.parametrize("w", [(1, 1), (3, 1), (4, 3)])
def test_f_polynomials_in_ideal(sl2, w):
    gb = left_buchberger(sl2, ideal_Ia(w))
    for g in claimed_groebner_basis(w):
        assert is_member(sl2, g, gb)


def test_commutator_examples(sl2):
    co = fusion_coefficients((2, 1))
    F0, F1 = f_polynomial((2, 1), 0), f_polynomial((2, 1), 1)
    lhs = commutator(sl2, sl2.gen("h1"), F0)
    rhs = sl2.gen("f0") * F1 * co.p[0] + F0 * (ParamRat("a") * co.q[0])
    assert lhs == rhs == sl2.parse("-8*f1*f0^3")
    rep = verify_commutators((1, 1))
    by = {c.name: c for c in rep.checks}
    assert by["[h0,F_1]"].printed_holds
    assert by["(1) [e0,e1]"].printed_holds


@pytest.mark.parametrize("w", [(0, 0), (1, 0), (1, 1), (2, 1), (3, 3), (4, 2)])
def test_identities_corrected_forms(w):
    rep = verify_commutators(w, st_max=4)
    assert rep.ok, [c.name for c in rep.failures()]


def test_printed_misprints_are_exactly_the_known_ones():
    rep = verify_commutators((2, 2), st_max=3)
    bad = {c.name.split(" ")[-1].split("_")[0] for c in rep.printed_failures()}
    assert bad <= {"[e1,F", "[h1,F", "[h1-m*a,F", "[e1,h1-m*a]"}
    assert all(c.corrected_rhs is not None for c in rep.printed_failures())


@pytest.mark.parametrize("w,dim,graded", [((1, 1), 4, {0: 3, 1: 1}),
                                          ((3, 2), 12, {0: 6, 1: 4, 2: 2}),
                                          ((0, 0), 1, {0: 1})])
def test_verify_theorem_examples(w, dim, graded):
    rep = verify_theorem(w)
    assert rep.ok, rep.checks
    assert rep.dimension == dim and rep.graded == graded
    assert set(rep.checks) >= {"generic_basis", "lc_free_of_a", "flat_1", "flat_-2", "flat_5/3",
                               "degenerate_basis", "degenerate_ideal", "dimension", "graded"}


def test_degenerate_basis_shape():
    assert strs(degenerate_basis((2, 1))) == ["e0", "e1", "h0 - 3", "h1", "f0^4", "f0^2*f1", "f1^2"]


def test_commutative_basis():
    assert commutative_f_ring().is_commutative
    assert verify_commutative_basis((3, 1))["ok"]


def test_ad_identity_examples():
    r = ad_e1_identity((1, 1), 1)
    assert r.monomial_ok and abs(r.scalar) == 6 and r.sign == -1
    r = ad_e1_identity((3, 2), 0)
    assert r.scalar == 1 and r.ok
    r = ad_e1_identity((2, 2), 2)
    assert r.expected_magnitude == 120 and r.ok
    with pytest.raises(ValueError):
        ad_e1_identity((2, 1), 2)
