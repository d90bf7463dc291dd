from hypothesis import strategies as st

from skewrad.matrix import IntMatrix
from skewrad.poly import IntPoly


def int_polys(max_degree=8, bound=5, nonzero=True):
    coeffs = st.lists(st.integers(-bound, bound), min_size=1, max_size=max_degree + 1)
    polys = coeffs.map(lambda c: IntPoly(tuple(c)))
    return polys.filter(lambda p: bool(p)) if nonzero else polys


@st.composite
def monic_unit_polys(draw, min_degree=1, max_degree=8, bound=3):
    n = draw(st.integers(min_degree, max_degree))
    mid = draw(st.lists(st.integers(-bound, bound), min_size=n - 1, max_size=n - 1))
    e = draw(st.sampled_from((-1, 1)))
    return IntPoly((e, *mid, 1))


@st.composite
def skew_polys(draw, max_g=4, bound=3):
    """Monic skew-reciprocal polynomials built from their lower half."""
    g = draw(st.integers(1, max_g))
    e = draw(st.sampled_from((-1, 1)))
    a = [e] + draw(st.lists(st.integers(-bound, bound), min_size=g, max_size=g)) + [0] * g
    if (-1) ** g == -e:
        a[g] = 0
    for d in range(g):
        a[2 * g - d] = a[d] * e * (-1) ** d
    return IntPoly(tuple(a))


@st.composite
def nonneg_matrices(draw, max_n=6, entries=(0, 1, 2)):
    n = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.sampled_from(entries), min_size=n * n, max_size=n * n))
    return IntMatrix(tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n)))
