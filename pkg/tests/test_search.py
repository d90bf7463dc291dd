from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewrad import search
from skewrad.errors import InvalidArgument, VerificationFailure
from skewrad.families import lambda_poly, mu_poly
from skewrad.poly import (
    IntPoly,
    T,
    check_coefficient_constraints,
    compare_largest_roots,
    divides,
    is_skew_reciprocal,
)
from skewrad.search import (
    G3Candidate,
    enumerate_skew_reciprocal,
    g3_candidates,
    g3_case_enumeration,
    g3_determinant_analysis,
    monotonicity_check,
    sequence_table,
    verify_minimum,
)

P = IntPoly.parse
GOLDEN = P("-1,-1,1")


# --- enumeration


def test_enumerate_degree_two():
    got = list(enumerate_skew_reciprocal(1, 1))
    pool = [GOLDEN, T**2 + T - 1, T**2 + 1, T**2 - 1, T**2 + T + 1, T**2 - T + 1]
    assert set(got) == {p for p in pool if is_skew_reciprocal(p)}
    assert [p.coeffs for p in got] == sorted(p.coeffs for p in got)


def test_enumerate_g2_support():
    got = set(enumerate_skew_reciprocal(2, 1, support_bound=3))
    assert P("-1,-1,0,-1,1") in got and P("-1,1,0,1,1") in got
    assert all(sum(1 for c in p.coeffs[:-1] if c) <= 3 for p in got)


def test_enumerate_g3_box_count():
    box = [p for p in enumerate_skew_reciprocal(3, 8)
           if p.constant == -1 and -2 <= p.coeff(5) <= 0 and -8 <= p.coeff(4) <= 2
           and abs(p.coeff(3) + 2 * p.coeff(5)) <= 3]
    assert len(box) == 231
    assert set(box) == {c.poly for c in g3_candidates()}


@pytest.mark.parametrize("args", [(0, 1), (2, None), (2, 11), (2, 0), (2, 1, 0)])
def test_enumerate_rejects(args):
    with pytest.raises(InvalidArgument):
        list(enumerate_skew_reciprocal(*args))


@given(st.integers(1, 3), st.integers(1, 2))
def test_enumerate_sound_and_deterministic(g, bound):
    first = list(enumerate_skew_reciprocal(g, bound))
    assert first == list(enumerate_skew_reciprocal(g, bound))
    for p in first:
        assert p.degree == 2 * g and p.is_monic() and abs(p.constant) == 1
        assert check_coefficient_constraints(p, g).verdict
        assert max(map(abs, p.coeffs)) <= bound


# --- g = 3


def test_g3_candidate_invariants():
    cands = g3_candidates()
    assert len(cands) == len(set(cands)) == 3 * 7 * 11
    for c in cands:
        assert c.a in (-2, -1, 0) and -8 <= c.b <= 2 and -2 * c.a - 3 <= c.c <= -2 * c.a + 3
        assert is_skew_reciprocal(c.poly) and c.poly.constant == -1
    assert G3Candidate(-1, 0, 0).poly == mu_poly(3)


def test_g3_enumeration():
    r = g3_case_enumeration()
    assert len(r.candidates) == 231 and len(r.stage1) == 3
    assert [c.poly for c in r.stage2] == [mu_poly(3)]
    survivors = {c.poly for c, _ in r.stage1}
    assert survivors == {P("-1,-1,7,5,-7,-1,1"), P("-1,-1,0,0,0,-1,1"), P("-1,-1,0,5,0,-1,1")}
    d = r.as_dict()
    assert d["stage1_count"] == 3 and d["survivor"] == "-1,-1,0,0,0,-1,1"


def test_g3_enumeration_is_deterministic():
    assert g3_case_enumeration().as_dict() == g3_case_enumeration().as_dict()


def test_determinant_mu6():
    o = g3_determinant_analysis(mu_poly(3))
    assert len(o.quadruples) == 1 and len(o.real_pairs) == 1 and o.imaginary_pairs == 0
    assert o.determinant == -1 and o.consistent


def test_determinant_with_imaginary_pair():
    p = (T**2 + 1) * GOLDEN * (T**2 + T - 1)
    o = g3_determinant_analysis(p)
    assert o.imaginary_pairs == 1 and len(o.real_pairs) == 2
    assert o.determinant == 1 == p.constant


def test_determinant_repeated_pairs():
    o = g3_determinant_analysis(GOLDEN**3)
    assert len(o.real_pairs) == 3 and o.determinant == -1 and o.consistent


def test_determinant_rejects():
    with pytest.raises(InvalidArgument):
        g3_determinant_analysis(P("-1,-1,-1,0,0,-1,1"))
    with pytest.raises(InvalidArgument):
        g3_determinant_analysis(lambda_poly(2))


@pytest.mark.parametrize("c", g3_candidates()[::7])
def test_determinant_consistent_on_candidates(c):
    assert g3_determinant_analysis(c.poly).consistent


# --- minimality


def test_verify_g2_irreducible_tie():
    r = verify_minimum(2, "irreducible")
    assert set(r.minimizers) == {P("-1,-1,0,-1,1"), P("1,0,-3,0,1")}
    assert all(divides(GOLDEN, p) for p in r.minimizers)
    assert r.candidate_matched


def test_verify_g3_irreducible_unique():
    r = verify_minimum(3, "irreducible")
    assert r.minimizers == [lambda_poly(3)]
    assert r.realizability["irreducible"] and not r.realizability["primitive"]


def test_verify_g3_primitive():
    r = verify_minimum(3, "primitive")
    assert r.candidate == mu_poly(3) and r.minimizers == [mu_poly(3)]
    assert r.supplementary["g3_case"]["survivor"] == mu_poly(3).to_text()
    assert r.exclusions["2A1"].get(search.IMPRIMITIVE, 0) >= 1


def test_verify_g4_primitive_certificate():
    r = verify_minimum(4, "primitive")
    assert r.candidate == P("-1,0,0,-1,0,-1,0,0,1")
    assert r.realizability["certificate"]["lengths"] == [3, 5, 8]


def test_verify_findings_carry_reasons():
    r = verify_minimum(4, "irreducible")
    reasons = {k for counts in r.exclusions.values() for k in counts}
    assert {search.PARITY, search.MIDDLE} <= reasons
    cases = {f.case for f in r.findings}
    assert {search.EDGE_DELETION, search.RECIPROCAL} <= cases
    assert all(f.cited_bound for f in r.findings if f.case == search.RECIPROCAL)
    for f in r.findings:
        assert is_skew_reciprocal(f.poly)


@pytest.mark.parametrize("g", range(1, 6))
def test_irreducible_min_below_primitive(g):
    irr = verify_minimum(g, "irreducible")
    prim = verify_minimum(g, "primitive")
    cmp = compare_largest_roots(irr.candidate, prim.candidate)
    if g % 2 and g > 1:
        assert cmp < 0
    else:
        assert cmp == 0


def test_verify_rejects():
    with pytest.raises(InvalidArgument):
        verify_minimum(0, "irreducible")
    with pytest.raises(InvalidArgument):
        verify_minimum(13, "primitive")
    with pytest.raises(InvalidArgument):
        verify_minimum(2, "reducible")


def test_verify_detects_a_smaller_shape(monkeypatch):
    # pretend the primitive candidate were the irreducible one: lambda_6 beats it
    monkeypatch.setattr(search, "candidate_poly", lambda g, mode: mu_poly(3))
    with pytest.raises(VerificationFailure) as exc:
        verify_minimum(3, "irreducible")
    assert any(f.poly == lambda_poly(3) for f in exc.value.witness)


# --- monotonicity


def test_monotonicity_examples():
    r = monotonicity_check(4)
    assert [d for d, _ in r.rows] == [1, 2, 3]
    assert all(b0.hi < b1.lo for (_, b0), (_, b1) in zip(r.rows, r.rows[1:]))
    assert len(monotonicity_check(5).rows) == 4
    assert len(monotonicity_check(2).rows) == 1


def test_monotonicity_rejects():
    with pytest.raises(InvalidArgument):
        monotonicity_check(1)
    with pytest.raises(InvalidArgument):
        monotonicity_check(4, [0, 1])


def test_monotonicity_failure_is_reported():
    # an unreachable separation forces the failure path
    with pytest.raises(VerificationFailure):
        monotonicity_check(3, [1, 2], separation=Fraction(1))


# --- sequences


def test_sequence_rows():
    t = sequence_table(12)
    rows = {r.g: r for r in t.rows}
    phi4 = float(t.constants["phi^4"])
    assert abs(float(rows[2].lam_norm[0]) - phi4) < 1e-9 and abs(float(rows[2].mu_norm[1]) - phi4) < 1e-9
    assert 8.18 < float(rows[3].mu_norm[0]) < 8.2
    assert 6.41 < float(rows[5].mu_norm[0]) <= float(rows[5].mu_norm[1]) < 6.43
    assert rows[1].mu is None


def test_sequence_monotone_within_parity():
    t = sequence_table(20)
    for parity in (0, 1):
        mus = [r.mu_norm for r in t.rows if r.mu and r.g % 2 == parity]
        assert all(b[1] < a[0] for a, b in zip(mus, mus[1:]))
    lams = [r.lam_norm for r in t.rows if r.g % 2 == 0]
    assert all(b[1] < a[0] for a, b in zip(lams, lams[1:]))


def test_sequence_phi4_tie_is_exact():
    assert divides(GOLDEN, lambda_poly(2))
    assert search._below_phi4(2, lambda_poly(2), search.reference_value(lambda_poly(2)),
                              search.reference_value(lambda_poly(2)).power_bounds(4),
                              search.reference_value(search.PHI_FOURTH)) == "equal"


def test_sequence_rejects():
    with pytest.raises(InvalidArgument):
        sequence_table(51)
    with pytest.raises(InvalidArgument):
        sequence_table(0)


def test_sequence_csv_fields():
    row = sequence_table(2).rows[0]
    f = row.csv_fields()
    assert len(f) == len(search.CSV_HEADER) and f[4:] == ["", "", ""]


# --- cross-checks


@pytest.mark.parametrize("g", [1, 2])
def test_constraints_exhaustive(g):
    n, bad = search.constraints_exhaustive(g, 2)
    assert n == 2 * 5 ** (2 * g - 1) and bad == []


def test_random_duality_small():
    assert search.random_duality(40, 5, seed=3) == []


def test_edge_deletion_small():
    res = search.edge_deletion_check(4)
    assert res and all(r.ok for r in res)
