from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from skewrad.errors import InvalidArgument
from skewrad.poly import (
    IntPoly,
    T,
    check_coefficient_constraints,
    compare_largest_roots,
    count_real_roots_in,
    divides,
    exact_quotient,
    is_reciprocal,
    is_skew_reciprocal,
    is_squarefree,
    largest_real_root,
    max_root_modulus,
    poly_gcd,
    real_root_brackets,
    reciprocal_transform,
    root_count,
    skew_star,
    squarefree_factors,
    squarefree_part,
)

from .strategies import int_polys, monic_unit_polys, skew_polys

P = IntPoly.parse
MU6 = P("-1,-1,0,0,0,-1,1")
GOLDEN = P("-1,-1,1")
PHI = (1 + 5**0.5) / 2


# --- representation


def test_zero_is_empty():
    assert IntPoly((0, 0)).coeffs == ()
    assert IntPoly().degree == -1


def test_parse_format():
    p = P("1,0,-3,0,1")
    assert p == T**4 - 3 * T**2 + 1
    assert p.to_text() == "1,0,-3,0,1"
    assert str(MU6) == "t^6 - t^5 - t - 1"


@given(int_polys(nonzero=False))
def test_text_roundtrip(p):
    assert P(p.to_text()) == p if p else p.coeffs == ()


@given(int_polys(), int_polys(), st.fractions(max_denominator=50))
def test_product_evaluates(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_big_coefficients_exact():
    p = (T + 1) ** 60
    assert p.coeff(30) == 118264581564861424
    assert p(Fraction(-1)) == 0


def test_from_terms_accumulates_nothing_silently():
    assert IntPoly.from_terms({0: 1, 4: -2}) == 1 - 2 * T**4


# --- reciprocity


@pytest.mark.parametrize("p, n, want", [
    (P("1,0,-1,0,-1"), 4, P("-1,0,-1,0,1")),
    (P("1"), 3, T**3),
    (P("1,0,0,-1,0,0,-1"), 6, P("-1,0,0,-1,0,0,1")),
])
def test_reciprocal_transform(p, n, want):
    assert reciprocal_transform(p, n) == want


def test_reciprocal_transform_bound():
    with pytest.raises(InvalidArgument):
        reciprocal_transform(T**3, 2)


@pytest.mark.parametrize("p, want", [
    (GOLDEN, -T**2 + T + 1),
    (T**2 + 1, T**2 + 1),
    (MU6, -(MU6)),
])
def test_skew_star(p, want):
    assert skew_star(p) == want


def test_skew_star_zero():
    with pytest.raises(InvalidArgument):
        skew_star(IntPoly())
    with pytest.raises(InvalidArgument):
        is_skew_reciprocal(IntPoly())


@given(int_polys())
def test_skew_star_involution(p):
    assume(p.constant != 0)
    # applying the star twice multiplies by (-1)^deg, so it is an involution in even degree
    assert skew_star(skew_star(p)) == (-1) ** p.degree * p
    if p.degree % 2 == 0:
        assert skew_star(skew_star(p)) == p


@pytest.mark.parametrize("p, want", [
    (MU6, True),
    (P("1,0,-3,0,1"), True),
    (P("-1,0,-1,-1,1"), False),
])
def test_is_skew_reciprocal(p, want):
    assert is_skew_reciprocal(p) is want


@pytest.mark.parametrize("p, want", [
    # roots phi, -1/phi, i, -i: not closed under inversion
    (P("-1,-1,0,-1,1"), False),
    (GOLDEN, False),
    (T**2 + 1, True),
    (P("1,-3,1"), True),
])
def test_is_reciprocal(p, want):
    assert is_reciprocal(p) is want


def _numerically_skew(p, tol=1e-6):
    z = np.roots(list(reversed(p.coeffs)))
    if np.any(np.abs(z) < 1e-12):
        return False
    image = -1 / z
    used = set()
    for w in image:
        d = np.abs(z - w)
        d[list(used)] = np.inf
        k = int(np.argmin(d))
        if d[k] > tol * max(1.0, abs(w)):
            return False
        used.add(k)
    return True


@given(st.one_of(skew_polys(), monic_unit_polys()))
def test_skew_predicate_matches_root_symmetry(p):
    assume(is_squarefree(p))
    assert is_skew_reciprocal(p) == _numerically_skew(p)


# --- coefficient constraints


def test_constraints_odd_g():
    rep = check_coefficient_constraints(P("-1,0,0,-1,0,0,1"), 3)
    assert rep.case_id == "odd-g/f(0)=-1"
    assert [c.relation for c in rep.checks] == ["sign-flip", "equal", "sign-flip"]
    assert rep.verdict and not rep.middle_must_vanish


def test_constraints_even_g_middle():
    ok = check_coefficient_constraints(P("-1,-1,0,-1,1"), 2)
    assert ok.middle_must_vanish and ok.verdict
    bad = check_coefficient_constraints(P("-1,-1,-1,-1,1"), 2)
    assert bad.pairs_ok and not bad.verdict


def test_constraint_report_schema():
    d = check_coefficient_constraints(MU6, 3).as_dict()
    assert set(d) == {"case", "checks", "middle_must_vanish", "verdict"}
    assert set(d["checks"][0]) == {"d", "relation", "ok"}


@pytest.mark.parametrize("p, g", [(P("-1,1,2"), 1), (P("-2,0,1"), 1), (MU6, 2), (P("-1,0,2"), 1)])
def test_constraints_preconditions(p, g):
    with pytest.raises(InvalidArgument):
        check_coefficient_constraints(p, g)


@given(skew_polys())
def test_case_determined_by_parity_and_sign(p):
    g = p.degree // 2
    rep = check_coefficient_constraints(p, g)
    parity = "even" if g % 2 == 0 else "odd"
    assert rep.case_id == f"{parity}-g/f(0)={p.constant}"
    assert rep.verdict


@given(monic_unit_polys(min_degree=2, max_degree=8))
def test_constraints_agree_with_identity(p):
    assume(p.degree % 2 == 0)
    assert check_coefficient_constraints(p, p.degree // 2).verdict == is_skew_reciprocal(p)


# --- division


@pytest.mark.parametrize("d, p, want", [
    (GOLDEN, P("1,0,-3,0,1"), True),
    (T**2 + 1, P("-1,-1,0,-1,1"), True),
    (T**2 + 1, MU6, False),
])
def test_divides(d, p, want):
    assert divides(d, p) is want


def test_exact_quotient_example():
    assert exact_quotient(P("-1,-1,0,-1,1"), T**2 + 1) == GOLDEN
    with pytest.raises(InvalidArgument):
        divides(IntPoly(), MU6)


@given(monic_unit_polys(max_degree=4), int_polys(max_degree=4), int_polys(max_degree=2))
def test_divides_iff_multiple(d, q, r):
    p = d * q
    assert divides(d, p)
    assert exact_quotient(p, d) * d == p
    p2 = p + r
    if divides(d, p2):
        assert exact_quotient(p2, d) * d == p2


def test_gcd_and_squarefree():
    p = GOLDEN**3 * (T**2 + 1)
    assert not is_squarefree(p)
    assert squarefree_part(p) == GOLDEN * (T**2 + 1)
    assert sorted(squarefree_factors(p), key=lambda fm: fm[1]) == [(T**2 + 1, 1), (GOLDEN, 3)]
    assert poly_gcd(p, GOLDEN * (T - 3)) == GOLDEN


# --- real roots


def test_golden_bracket():
    b = largest_real_root(GOLDEN, Fraction(1, 10**12))
    assert b.lo < Fraction(PHI) < b.hi or abs(float(b) - PHI) < 1e-12
    assert b.width <= Fraction(1, 10**12)


def test_mu6_bracket():
    b = largest_real_root(MU6, Fraction(1, 10**6))
    assert Fraction(14195, 10000) < b.lo < b.hi < Fraction(14197, 10000)


def test_no_positive_root():
    assert largest_real_root(T**2 + 1) is None
    assert largest_real_root(T + 3) is None


def test_tolerance_must_be_positive():
    with pytest.raises(InvalidArgument):
        largest_real_root(GOLDEN, 0)


@given(int_polys(max_degree=7), st.sampled_from([Fraction(1, 10), Fraction(1, 1000), Fraction(1, 10**9)]))
def test_brackets_are_sound(p, tol):
    assume(p.degree >= 1)
    brackets = real_root_brackets(p, tol)
    for b in brackets:
        assert b.lo < b.hi and b.width <= tol
        assert b.poly.sign_at(b.lo) == b.sign_lo != b.sign_hi == b.poly.sign_at(b.hi)
    for b0, b1 in zip(brackets, brackets[1:]):
        assert b0.hi <= b1.lo
    reals = [z.real for z in np.roots(list(reversed(squarefree_part(p).coeffs))) if abs(z.imag) < 1e-7]
    assert len(brackets) <= len(np.roots(list(reversed(p.coeffs))))
    for x in reals:
        assert any(float(b.lo) - 1e-6 <= x <= float(b.hi) + 1e-6 for b in brackets)


@pytest.mark.parametrize("p, lo, hi, want", [
    (GOLDEN, 1, 2, 1),
    (MU6, "1.41", "1.42", 1),
    (P("1,0,-3,0,1"), 0, 1, 1),
])
def test_count_real_roots(p, lo, hi, want):
    assert count_real_roots_in(p, lo, hi) == want


def test_count_degenerate_interval():
    with pytest.raises(InvalidArgument):
        count_real_roots_in(GOLDEN, 2, 2)


def test_endpoint_root_recorded():
    p = (T - 1) * (T - 2) * (T - 3)
    c = root_count(p, 1, 3)
    assert c.count == 1 and c.adjusted
    assert set(c.endpoint_roots) == {1, 3}


def test_compare_largest_roots():
    assert compare_largest_roots(MU6, GOLDEN) < 0
    assert compare_largest_roots(P("-1,-1,0,-1,1"), P("1,0,-3,0,1")) == 0


def test_max_modulus():
    m = max_root_modulus(MU6)
    assert m.certified and m.attained_by == "positive-real"
    assert abs(float(m.value) - 1.4196327628) < 1e-9
    neg = max_root_modulus(P("-1,1,0,0,0,1,1"))
    assert neg.certified and neg.attained_by == "negative-real"
    i = max_root_modulus(T**2 + 1)
    assert not i.certified and abs(float(i.value) - 1) < 1e-9


@given(monic_unit_polys(max_degree=7))
def test_max_modulus_matches_numpy(p):
    m = max_root_modulus(p)
    # numpy is inaccurate on repeated roots, so compare on the square-free part
    ref = max(abs(np.roots(list(reversed(squarefree_part(p).coeffs)))))
    assert abs(float(m.value) - ref) < 1e-5 * max(1, ref)
