"""Exact integer polynomials, (skew-)reciprocity and certified real roots.

Polynomials are dense tuples of Python integers in ascending order, so
``IntPoly((1, 0, -3, 0, 1))`` is ``t^4 - 3t^2 + 1``.  Every root-related
answer is backed by exact sign evaluations at rational points: real roots
are isolated with Descartes' rule of signs or a Sturm sequence of the
square-free part, then narrowed by rational bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import InvalidArgument

Rational = Union[int, Fraction, float, str]

DEFAULT_TOL = Fraction(1, 10**12)
NUMERIC_TOL = 1e-8

# Mersenne prime used for the fast modular square-free test.
_PRIME = (1 << 61) - 1


def as_rational(x: Rational) -> Fraction:
    """Convert user input to an exact rational; floats go through their repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InvalidArgument("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise InvalidArgument(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"cannot parse rational {x!r}") from exc
    raise InvalidArgument(f"cannot interpret {x!r} as a rational")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        out = []
        for x in self.coeffs:
            ix = int(x)
            if ix != x:
                raise InvalidArgument(f"non-integral coefficient {x!r}")
            out.append(ix)
        object.__setattr__(self, "coeffs", tuple(_strip(out)))

    # construction ---------------------------------------------------------

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise InvalidArgument("negative exponent")
        return cls((0,) * k + (c,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> IntPoly:
        if not terms:
            return cls()
        if min(terms) < 0:
            raise InvalidArgument("negative exponent")
        c = [0] * (max(terms) + 1)
        for k, v in terms.items():
            c[k] += v
        return cls(tuple(c))

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Parse the ascending comma-separated format, e.g. ``1,0,-3,0,1``."""
        parts = [s.strip() for s in text.strip().split(",")]
        if parts == [""]:
            return cls()
        try:
            return cls(tuple(int(s) for s in parts))
        except ValueError as exc:
            raise InvalidArgument(f"bad polynomial text {text!r}") from exc

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPoly(tuple(x // c for x in self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise InvalidArgument("negative power")
        out = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        """Exact sign of the value at a rational point."""
        x = as_rational(x)
        return _sign_at(self.coeffs, x.numerator, x.denominator)

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def mirror(self) -> IntPoly:
        """p(-t)."""
        return IntPoly(tuple(-c if k % 2 else c for k, c in enumerate(self.coeffs)))

    def inflate(self, k: int) -> IntPoly:
        """p(t^k)."""
        if k < 1:
            raise InvalidArgument("inflation factor must be positive")
        return IntPoly.from_terms({k * i: c for i, c in enumerate(self.coeffs) if c})

    def terms(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"IntPoly({self})"


def _lift(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPoly((x,))
    return NotImplemented


T = IntPoly((0, 1))


# --------------------------------------------------------------------------
# exact division and gcd


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(coeffs: Sequence[int], num: int, den: int) -> int:
    # sign of sum c_i num^i den^(n-i); den > 0 so this is the sign of p(num/den)
    acc = 0
    dpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return _sign(acc)


def _divmod_q(p: Sequence, d: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    r = [Fraction(x) for x in p]
    dd = len(d) - 1
    lead = Fraction(d[-1])
    if len(r) - 1 < dd:
        return [], _strip(r)
    q = [Fraction(0)] * (len(r) - dd)
    for k in range(len(r) - 1 - dd, -1, -1):
        c = r[k + dd] / lead
        q[k] = c
        if c:
            for i, di in enumerate(d):
                r[k + i] -= c * di
    return _strip(q), _strip(r[:dd])


def _clear(c: Sequence[Fraction]) -> IntPoly:
    """Scale rational coefficients to a primitive integer polynomial."""
    if not c:
        return IntPoly()
    den = 1
    for x in c:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return IntPoly(tuple(int(x * den) for x in c)).primitive()


def divmod_rational(p: IntPoly, d: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of ``p / d`` over the rationals."""
    if not d:
        raise InvalidArgument("division by the zero polynomial")
    return _divmod_q(p.coeffs, d.coeffs)


def divides(d: IntPoly, p: IntPoly) -> bool:
    """True iff ``d`` divides ``p`` exactly (zero remainder)."""
    return not divmod_rational(p, d)[1]


def exact_quotient(p: IntPoly, d: IntPoly) -> IntPoly:
    """The integer quotient ``p / d``; raises unless division is exact over Z."""
    q, r = divmod_rational(p, d)
    if r or any(x.denominator != 1 for x in q):
        raise InvalidArgument(f"{d} does not divide {p} over the integers")
    return IntPoly(tuple(int(x) for x in q))


def _prem_pos(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Remainder of ``a`` by ``b`` times a *positive* constant."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    slb, alb = _sign(lb), abs(lb)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [alb * x for x in r]
        for i, bi in enumerate(b):
            r[i + k] -= slb * lr * bi
        _strip(r)
    return r


def _reduce_content(c: list[int]) -> list[int]:
    g = math.gcd(*c) if c else 1
    return [x // g for x in c] if g > 1 else c


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    x, y = list(a.coeffs), list(b.coeffs)
    if not x:
        return b.primitive()
    if not y:
        return a.primitive()
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _reduce_content(_prem_pos(x, y))
        x, y = y, r
    return IntPoly(tuple(x)).primitive()


def _mod_poly(c: Sequence[int], m: int) -> list[int]:
    return _strip([x % m for x in c])


def _gcd_mod(a: list[int], b: list[int], m: int) -> list[int]:
    while b:
        inv = pow(b[-1], -1, m)
        r = list(a)
        db = len(b) - 1
        while r and len(r) - 1 >= db:
            f = r[-1] * inv % m
            k = len(r) - 1 - db
            for i, bi in enumerate(b):
                r[i + k] = (r[i + k] - f * bi) % m
            _strip(r)
        a, b = b, r
    return a


def is_squarefree(p: IntPoly) -> bool:
    if p.degree <= 0:
        return True
    if p.leading % _PRIME:
        g = _gcd_mod(_mod_poly(p.coeffs, _PRIME), _mod_poly(p.derivative().coeffs, _PRIME), _PRIME)
        if len(g) == 1:
            return True
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_part(p: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors, primitive, same leading sign as ``p``."""
    if not p:
        raise InvalidArgument("the zero polynomial has no square-free part")
    sgn = _sign(p.leading)
    if p.degree == 0:
        return IntPoly((sgn,))
    prim = p.primitive()
    if is_squarefree(prim):
        q = prim
    else:
        g = poly_gcd(prim, prim.derivative())
        q = _clear(divmod_rational(prim, g)[0])
    return q if sgn > 0 else -q


def squarefree_factors(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Square-free factorisation: pairs ``(f_i, i)`` with p ~ prod f_i^i."""
    if not p:
        raise InvalidArgument("the zero polynomial has no factorisation")
    out: list[tuple[IntPoly, int]] = []
    f = p.primitive()
    if f.degree <= 0:
        return out
    g = poly_gcd(f, f.derivative())
    w = _clear(divmod_rational(f, g)[0])
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        fi = _clear(divmod_rational(w, y)[0])
        if fi.degree > 0:
            out.append((fi, i))
        if g.degree > 0:
            g = _clear(divmod_rational(g, y)[0])
        w = y
        i += 1
    return out


# --------------------------------------------------------------------------
# reciprocity


def reciprocal_transform(p: IntPoly, n: int) -> IntPoly:
    """``t^n p(1/t)`` for ``n >= deg p``."""
    if n < p.degree:
        raise InvalidArgument(f"degree bound {n} is below deg p = {p.degree}")
    return IntPoly(tuple(p.coeff(n - k) for k in range(n + 1)))


def _require_nonzero(p: IntPoly):
    if not p:
        raise InvalidArgument("operation undefined for the zero polynomial")


def skew_star(p: IntPoly) -> IntPoly:
    """``t^deg(p) p(-1/t)``."""
    _require_nonzero(p)
    n = p.degree
    return IntPoly(tuple((-1) ** (n - k) * p.coeffs[n - k] for k in range(n + 1)))


def is_skew_reciprocal(p: IntPoly) -> bool:
    s = skew_star(p)
    return s == p or s == -p


def is_reciprocal(p: IntPoly) -> bool:
    _require_nonzero(p)
    r = reciprocal_transform(p, p.degree)
    return r == p or r == -p


@dataclass(frozen=True)
class ConstraintCheck:
    d: int
    relation: str  # "equal" or "sign-flip"
    ok: bool


@dataclass(frozen=True)
class ConstraintReport:
    """Outcome of the coefficient-pairing test for a monic degree-2g polynomial."""

    case_id: str
    checks: tuple[ConstraintCheck, ...]
    middle_must_vanish: bool
    middle_ok: bool

    @property
    def pairs_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def verdict(self) -> bool:
        return self.pairs_ok and self.middle_ok

    @property
    def case_number(self) -> int:
        return {"even-g/f(0)=1": 2, "even-g/f(0)=-1": 3, "odd-g/f(0)=1": 4, "odd-g/f(0)=-1": 5}[
            self.case_id
        ]

    def as_dict(self) -> dict:
        return {
            "case": self.case_id,
            "checks": [{"d": c.d, "relation": c.relation, "ok": c.ok} for c in self.checks],
            "middle_must_vanish": self.middle_must_vanish,
            "verdict": self.verdict,
        }


def check_coefficient_constraints(p: IntPoly, g: int) -> ConstraintReport:
    """Classify ``p`` by parity of ``g`` and sign of ``p(0)``, then test the pairings.

    With ``e = p(0)`` the constraint reads ``a[2g-d] = e * (-1)^d * a[d]``,
    so pairs agree when ``(-1)^d = e`` and flip sign otherwise; the middle
    coefficient is forced to zero when ``(-1)^g = -e``.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise InvalidArgument(f"g must be a positive integer, got {g!r}")
    if p.degree != 2 * g:
        raise InvalidArgument(f"expected degree {2 * g}, got {p.degree}")
    if not p.is_monic():
        raise InvalidArgument("polynomial is not monic")
    e = p.constant
    if abs(e) != 1:
        raise InvalidArgument(f"constant coefficient must be +-1, got {e}")
    a = p.coeffs
    checks = []
    for d in range(g):
        relation = "equal" if (-1) ** d == e else "sign-flip"
        want = a[d] if relation == "equal" else -a[d]
        checks.append(ConstraintCheck(d, relation, a[2 * g - d] == want))
    must_vanish = (-1) ** g == -e
    parity = "even" if g % 2 == 0 else "odd"
    return ConstraintReport(
        case_id=f"{parity}-g/f(0)={e}",
        checks=tuple(checks),
        middle_must_vanish=must_vanish,
        middle_ok=(a[g] == 0) if must_vanish else True,
    )


# --------------------------------------------------------------------------
# real roots


@dataclass(frozen=True)
class RootBracket:
    """Rational interval around a simple real root of ``poly``.

    ``poly`` is the square-free part of the polynomial the root was asked
    for, and the endpoint signs are exact signs of ``poly``.
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int
    poly: IntPoly = field(compare=False, repr=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)

    def contains(self, x: Rational) -> bool:
        x = as_rational(x)
        return self.lo <= x <= self.hi

    def overlaps(self, other: RootBracket) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def refine(self, tol: Rational) -> RootBracket:
        tol = _check_tol(tol)
        if self.width <= tol:
            return self
        return _refine(self.poly, self.lo, self.hi, self.sign_lo, tol)

    def power_bounds(self, k: int) -> tuple[Fraction, Fraction]:
        """Exact enclosure of ``root^k`` for a positive root."""
        if self.lo < 0:
            raise InvalidArgument("power bounds are only defined for positive brackets")
        return self.lo**k, self.hi**k

    def as_dict(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "decimal": f"{float(self.mid):.15g}",
        }


@dataclass(frozen=True)
class RootCount:
    count: int
    lo: Fraction
    hi: Fraction
    endpoint_roots: tuple[Fraction, ...] = ()

    @property
    def adjusted(self) -> bool:
        return bool(self.endpoint_roots)


def _check_tol(tol: Rational) -> Fraction:
    t = as_rational(tol)
    if t <= 0:
        raise InvalidArgument(f"tolerance must be positive, got {tol!r}")
    return t


def descartes_variations(coeffs: Iterable[int]) -> int:
    signs = [_sign(c) for c in coeffs if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: IntPoly) -> int:
    """Integer B with every complex root of ``p`` strictly inside |z| < B."""
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lead)


def sturm_sequence(p: IntPoly) -> list[list[int]]:
    """Sturm chain of a square-free polynomial, each member scaled positively."""
    seq = [list(p.coeffs), list(p.derivative().coeffs)]
    if not seq[1]:
        return seq[:1]
    while True:
        r = _prem_pos(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_reduce_content([-x for x in r]))
    return seq


def _variations_at(seq: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x.numerator, x.denominator) for c in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _pick_split(q: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of ``q``."""
    mid = (lo + hi) / 2
    step = (hi - lo) / 8
    s = mid
    while q.sign_at(s) == 0:
        s = mid + step
        step /= 3
    return s


def _refine(q: IntPoly, lo: Fraction, hi: Fraction, slo: int, tol: Fraction) -> RootBracket:
    """Bisect a sign-change interval holding exactly one root of ``q``."""
    shi = -slo
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = q.sign_at(mid)
        if s == 0:
            e = min(tol / 2, (mid - lo) / 2, (hi - mid) / 2)
            lo, hi = mid - e, mid + e
            slo, shi = q.sign_at(lo), q.sign_at(hi)
            break
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RootBracket(lo, hi, slo, shi, q)


def largest_real_root(p: IntPoly, tol: Rational = DEFAULT_TOL) -> RootBracket | None:
    """Certified bracket of the largest positive real root, or None if there is none."""
    tol = _check_tol(tol)
    _require_nonzero(p)
    q = squarefree_part(p)
    if q.degree < 1:
        return None
    shift = next(k for k, c in enumerate(q.coeffs) if c)
    q0 = IntPoly(q.coeffs[shift:])
    if q0.degree < 1:
        return None
    bound = Fraction(cauchy_bound(q0))
    v = descartes_variations(q0.coeffs)
    if v == 0:
        return None
    lo, hi = Fraction(0), bound
    if v > 1:
        seq = sturm_sequence(q0)
        count = _variations_at(seq, lo) - _variations_at(seq, hi)
        if count == 0:
            return None
        while count > 1:
            s = _pick_split(q0, lo, hi)
            c = _variations_at(seq, s) - _variations_at(seq, hi)
            if c >= 1:
                lo, count = s, c
            else:
                hi = s
    b = _refine(q0, lo, hi, q0.sign_at(lo), tol)
    return RootBracket(b.lo, b.hi, b.sign_lo, b.sign_hi, q)


def real_root_brackets(p: IntPoly, tol: Rational = DEFAULT_TOL) -> list[RootBracket]:
    """Brackets around every distinct real root, in increasing order."""
    tol = _check_tol(tol)
    _require_nonzero(p)
    q = squarefree_part(p)
    if q.degree < 1:
        return []
    bound = Fraction(cauchy_bound(q))
    seq = sturm_sequence(q)
    out: list[RootBracket] = []
    todo = [(-bound, bound, _variations_at(seq, -bound) - _variations_at(seq, bound))]
    while todo:
        lo, hi, c = todo.pop()
        if c == 0:
            continue
        if c == 1:
            out.append(_refine(q, lo, hi, q.sign_at(lo), tol))
            continue
        s = _pick_split(q, lo, hi)
        vs = _variations_at(seq, s)
        todo.append((lo, s, _variations_at(seq, lo) - vs))
        todo.append((s, hi, vs - _variations_at(seq, hi)))
    out.sort(key=lambda b: b.lo)
    return out


def root_count(p: IntPoly, lo: Rational, hi: Rational) -> RootCount:
    """Distinct real roots in the open interval (lo, hi).

    Endpoints that happen to be roots are divided out exactly before
    counting, and reported in ``endpoint_roots``.
    """
    _require_nonzero(p)
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise InvalidArgument(f"degenerate interval ({lo}, {hi})")
    q = squarefree_part(p)
    if q.degree < 1:
        return RootCount(0, lo, hi)
    hits = []
    for e in (lo, hi):
        if q.sign_at(e) == 0:
            hits.append(e)
            q = exact_quotient(q, IntPoly((-e.numerator, e.denominator)))
    if q.degree < 1:
        return RootCount(0, lo, hi, tuple(hits))
    seq = sturm_sequence(q)
    return RootCount(_variations_at(seq, lo) - _variations_at(seq, hi), lo, hi, tuple(hits))


def count_real_roots_in(p: IntPoly, lo: Rational, hi: Rational) -> int:
    return root_count(p, lo, hi).count


def compare_largest_roots(p: IntPoly, q: IntPoly, tol: Rational = Fraction(1, 10**9)) -> int:
    """Exact sign of ``root(p) - root(q)`` for the largest positive roots.

    Equal roots are detected through the gcd; distinct ones by refining
    until the brackets separate.
    """
    bp, bq = largest_real_root(p, tol), largest_real_root(q, tol)
    if bp is None or bq is None:
        raise InvalidArgument("both polynomials need a positive real root")
    common = poly_gcd(bp.poly, bq.poly)
    while bp.overlaps(bq):
        if common.degree > 0:
            lo, hi = max(bp.lo, bq.lo), min(bp.hi, bq.hi)
            if lo == hi and common.sign_at(lo) == 0:
                return 0
            if lo < hi and root_count(common, lo, hi).count + sum(
                1 for e in (lo, hi) if common.sign_at(e) == 0
            ):
                return 0
        w = min(bp.width, bq.width) / 1024
        bp, bq = bp.refine(w), bq.refine(w)
    return 1 if bp.lo > bq.hi else -1


# --------------------------------------------------------------------------
# complex roots and the maximal modulus


def numeric_roots(p: IntPoly, polish: int = 3) -> np.ndarray:
    """Floating-point roots via companion eigenvalues, Newton-polished."""
    _require_nonzero(p)
    if p.degree < 1:
        return np.array([], dtype=complex)
    c = np.array([float(x) for x in reversed(p.coeffs)])
    z = np.roots(c).astype(complex)
    dc = np.polyder(c)
    for _ in range(polish):
        f = np.polyval(c, z)
        df = np.polyval(dc, z)
        ok = df != 0
        step = np.where(ok, f / np.where(ok, df, 1), 0)
        z = z - step
    return z


def _sqrt_bounds(x: Fraction, bits: int = 96) -> tuple[Fraction, Fraction]:
    scale = 1 << (2 * bits)
    v = x * scale
    fl = v.numerator // v.denominator
    ce = -(-v.numerator // v.denominator)
    s = math.isqrt(fl)
    t = math.isqrt(ce)
    if t * t < ce:
        t += 1
    return Fraction(s, 1 << bits), Fraction(t, 1 << bits)


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cabs2(a) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def _ceval(coeffs, z):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _cmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


@dataclass(frozen=True)
class ModulusReport:
    """Largest root modulus, with a flag telling whether dominance is proven."""

    value: Fraction
    certified: bool
    attained_by: str  # "positive-real", "negative-real" or "complex"
    bracket: RootBracket | None
    max_residual: float
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "value": format_rational(self.value),
            "decimal": f"{float(self.value):.15g}",
            "certified": self.certified,
            "attained_by": self.attained_by,
            "bracket": self.bracket.as_dict() if self.bracket else None,
            "max_residual": f"{self.max_residual:.3e}",
            "note": self.note,
        }


def max_root_modulus(
    p: IntPoly, tol: Rational = DEFAULT_TOL, residual: float = NUMERIC_TOL
) -> ModulusReport:
    """Maximum modulus over all complex roots of ``p``.

    Real roots are isolated exactly.  Non-real roots come from companion
    eigenvalues, and every approximation z_i gets the inclusion disk of
    radius n|W_i| (W_i the Weierstrass correction, computed in exact
    rationals).  All roots lie in the union of those disks; when the disks
    are pairwise disjoint each holds exactly one root, so the real-centred
    ones hold the real roots.  ``certified`` means a real root strictly
    dominates every other root in modulus under this enclosure.
    """
    tol = _check_tol(tol)
    _require_nonzero(p)
    if p.degree < 1:
        raise InvalidArgument("constant polynomial has no roots")
    q = squarefree_part(p)
    n = q.degree
    # disk centres need double precision whatever the caller asked for
    reals = real_root_brackets(q, min(tol, Fraction(1, 2**52)))
    approx = numeric_roots(q)
    nonreal_count = n - len(reals)

    def numeric_report(note: str, res: float = float("inf")) -> ModulusReport:
        mods = np.abs(approx)
        k = int(np.argmax(mods))
        z = approx[k]
        kind = "complex"
        if abs(z.imag) <= 1e-9 * max(1.0, abs(z)):
            kind = "positive-real" if z.real > 0 else "negative-real"
        return ModulusReport(as_rational(float(mods[k])), False, kind, None, res, note)

    order = np.argsort(-np.abs(approx.imag))
    picked = approx[order[:nonreal_count]] if nonreal_count else np.array([], dtype=complex)
    upper = [z for z in picked if z.imag > 0]
    if nonreal_count % 2 or len(upper) * 2 != nonreal_count:
        return numeric_report("numeric roots do not match the exact real-root count")

    centers = [(b.mid, Fraction(0)) for b in reals]
    for z in upper:
        re, im = as_rational(float(z.real)), as_rational(float(z.imag))
        centers += [(re, im), (re, -im)]
    lead = q.leading
    rad2 = []
    for i, zi in enumerate(centers):
        den = (Fraction(lead), Fraction(0))
        for j, zj in enumerate(centers):
            if j != i:
                den = _cmul(den, (zi[0] - zj[0], zi[1] - zj[1]))
        num = _ceval(q.coeffs, zi)
        d2 = _cabs2(den)
        if d2 == 0:
            return numeric_report("coincident root approximations")
        rad2.append(n * n * _cabs2(num) / d2)
    radii_hi = [_sqrt_bounds(r)[1] for r in rad2]
    max_res = float(max(radii_hi)) if radii_hi else 0.0

    if not reals:
        return numeric_report("no real roots", max_res)
    if max_res > residual:
        return numeric_report("inclusion radii exceed the residual threshold", max_res)
    for i in range(n):
        for j in range(i + 1, n):
            dist2 = _cabs2((centers[i][0] - centers[j][0], centers[i][1] - centers[j][1]))
            if _sqrt_bounds(dist2)[0] <= radii_hi[i] + radii_hi[j]:
                return numeric_report("inclusion disks overlap", max_res)

    def mod_bounds(b: RootBracket) -> tuple[Fraction, Fraction]:
        if b.lo > 0:
            return b.lo, b.hi
        if b.hi < 0:
            return -b.hi, -b.lo
        return Fraction(0), max(-b.lo, b.hi)

    dom = max(range(len(reals)), key=lambda k: abs(reals[k].mid))
    refinements = 0
    while True:
        low, _ = mod_bounds(reals[dom])
        rivals = [mod_bounds(b)[1] for k, b in enumerate(reals) if k != dom]
        rivals += [
            _sqrt_bounds(_cabs2(centers[len(reals) + k]))[1] + radii_hi[len(reals) + k]
            for k in range(nonreal_count)
        ]
        if all(r < low for r in rivals):
            b = reals[dom]
            kind = "positive-real" if b.mid > 0 else "negative-real"
            return ModulusReport(abs(b.mid), True, kind, b, max_res)
        if refinements >= 8:
            break
        reals = [b.refine(b.width / 64) for b in reals]
        refinements += 1
    report = numeric_report("dominance of a real root could not be proven", max_res)
    return report
