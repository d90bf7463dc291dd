import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from skewrad.errors import InvalidArgument
from skewrad.families import lambda_poly, mu_poly
from skewrad.matrix import (
    IntMatrix,
    char_poly,
    companion,
    cycle_gcd_certificate,
    det,
    is_irreducible,
    is_primitive,
    power_iteration,
    spectral_radius,
    wielandt_bound,
    wielandt_exponent,
)
from skewrad.poly import IntPoly

from .strategies import nonneg_matrices

P = IntPoly.parse
FIB = IntMatrix(((1, 1), (1, 0)))


def test_companion_layout():
    C = companion(P("-1,-1,1"))
    assert C.rows == ((0, 1), (1, 1))
    assert char_poly(C) == P("-1,-1,1")


@pytest.mark.parametrize("text", ["-1,0,0,-1,0,0,1", "-1,-1,0,-1,1"])
def test_family_companions_are_01(text):
    C = companion(P(text))
    assert all(x in (0, 1) for r in C.rows for x in r)
    assert char_poly(C) == P(text)


def test_companion_needs_monic():
    with pytest.raises(InvalidArgument):
        companion(P("1,1,2"))


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=20))
def test_companion_roundtrip(low):
    p = IntPoly((*low, 1))
    C = companion(p)
    assert char_poly(C) == p
    assert det(C) == (-1) ** p.degree * p.constant


@pytest.mark.parametrize("A, want", [
    (IntMatrix.identity(2), P("1,-2,1")),
    (FIB, P("-1,-1,1")),
    (companion(P("-1,-1,0,0,0,-1,1")), P("-1,-1,0,0,0,-1,1")),
])
def test_char_poly_examples(A, want):
    assert char_poly(A) == want


@given(nonneg_matrices(max_n=6, entries=(-2, -1, 0, 1, 2)))
def test_char_poly_matches_numpy(A):
    ref = np.round(np.poly(A.to_numpy())).astype(int)[::-1]
    assert char_poly(A).coeffs == tuple(int(x) for x in ref)


@given(nonneg_matrices(max_n=6, entries=(-3, -1, 0, 1, 2, 5)))
def test_det_matches_numpy_and_char_poly(A):
    assert det(A) == round(np.linalg.det(A.to_numpy()))
    assert det(A) == (-1) ** A.n * char_poly(A).constant


@pytest.mark.parametrize("p, want", [("-1,-1,0,0,0,-1,1", -1), ("1,0,-3,0,1", 1)])
def test_det_examples(p, want):
    assert det(companion(P(p))) == want
    assert det(IntMatrix.identity(4)) == 1


@pytest.mark.parametrize("A, want", [
    (companion(P("-1,0,0,-1,0,0,1")), True),
    (IntMatrix(((1, 1), (0, 1))), False),
    (IntMatrix(((0, 1), (1, 0))), True),
])
def test_irreducible(A, want):
    assert is_irreducible(A) is want


def test_negative_entries_rejected():
    A = IntMatrix(((0, -1), (1, 0)))
    for f in (is_irreducible, is_primitive, spectral_radius):
        with pytest.raises(InvalidArgument):
            f(A)


def test_primitive_examples():
    ok, cert = is_primitive(companion(P("-1,-1,0,-1,1")))
    assert ok and cert.witness[0] == (1, 3, 4) and cert.gcd == 1
    ok, cert = is_primitive(companion(P("-1,0,0,-1,0,0,1")))
    assert not ok and cert.witness[0] == (3, 6) and cert.gcd == 3
    ok, cert = is_primitive(IntMatrix(((0, 1), (1, 0))))
    assert not ok and cert.gcd == 2


def _period(A):
    """Index of imprimitivity from BFS levels, independent of cycle listing."""
    n = A.n
    level = {0: 0}
    queue = [0]
    for v in queue:
        for w in range(n):
            if A[v, w] and w not in level:
                level[w] = level[v] + 1
                queue.append(w)
    g = 0
    for v in range(n):
        for w in range(n):
            if A[v, w]:
                g = math.gcd(g, level[v] + 1 - level[w])
    return g


@given(nonneg_matrices(max_n=7, entries=(0, 0, 1, 2)))
def test_primitivity_oracles(A):
    ok, cert = is_primitive(A)
    if ok:
        assert is_irreducible(A)
    k = wielandt_exponent(A)
    assert ok == (k is not None)
    if k is not None:
        assert k <= wielandt_bound(A.n)
        assert (np.linalg.matrix_power(A.to_numpy(dtype=np.int64) > 0, k)).all()
    if is_irreducible(A):
        assert cert.gcd == _period(A)
        assert ok == (cert.gcd == 1)


def test_cycle_certificate_cycles_exist():
    A = companion(mu_poly(5))
    cert = cycle_gcd_certificate(A)
    lengths, g, reps = cert.witness
    assert g == 1
    for k, cyc in zip(lengths, reps):
        assert len(cyc) == k
        assert all(A[u, v] > 0 for u, v in zip(cyc, cyc[1:] + cyc[:1]))


def test_spectral_radius_examples():
    phi = (1 + 5**0.5) / 2
    assert abs(float(spectral_radius(FIB)) - phi) < 1e-12
    assert abs(float(spectral_radius(companion(mu_poly(3)))) - 1.4196327628) < 1e-9
    b = spectral_radius(companion(mu_poly(5)))
    lo, hi = b.power_bounds(10)
    assert 6.41 < float(lo) < float(hi) < 6.43


def test_spectral_radius_needs_irreducible():
    with pytest.raises(InvalidArgument):
        spectral_radius(IntMatrix(((1, 1), (0, 1))))
    with pytest.raises(InvalidArgument):
        spectral_radius(IntMatrix.zeros(1))


@given(nonneg_matrices(max_n=6, entries=(0, 1, 2)))
def test_power_iteration_inside_bracket(A):
    assume(is_irreducible(A) and A != IntMatrix.zeros(1))
    b = spectral_radius(A, Fraction(1, 10**12))
    est, lo, hi = power_iteration(A)
    assert lo - 1e-9 <= float(b) <= hi + 1e-9
    assert abs(est - float(b)) < 1e-9 * max(1, float(b))
    assert abs(max(abs(np.linalg.eigvals(A.to_numpy()))) - float(b)) < 1e-6 * max(1, float(b))


def test_matrix_text_roundtrip():
    A = companion(lambda_poly(4))
    assert IntMatrix.parse(A.to_text()) == A
    with pytest.raises(InvalidArgument):
        IntMatrix.parse("3\n1 2 3\n")
    with pytest.raises(InvalidArgument):
        IntMatrix(((1, 2),))
