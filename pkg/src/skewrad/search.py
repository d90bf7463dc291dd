"""Finite enumerations and verification pipelines.

Every pipeline raises :class:`VerificationFailure` with the divergent data
as ``witness`` when a checked claim does not hold, and otherwise returns a
report object with an ``as_dict`` method for serialization.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import InvalidArgument, VerificationFailure
from .families import ShapeId, lambda_poly, mu_poly, shape_clique_poly, trinomial_pair
from .matrix import companion, is_irreducible, is_primitive
from .poly import (
    DEFAULT_TOL,
    IntPoly,
    ModulusReport,
    Rational,
    RootBracket,
    as_rational,
    check_coefficient_constraints,
    compare_largest_roots,
    divides,
    format_rational,
    is_reciprocal,
    is_skew_reciprocal,
    largest_real_root,
    max_root_modulus,
    numeric_roots,
    real_root_brackets,
    reciprocal_transform,
    root_count,
    squarefree_factors,
)

PARITY = "parity-contradiction"
MIDDLE = "middle-coefficient-contradiction"
RECIPROCAL = "reciprocal-deferral-with-cited-bound"
EDGE_DELETION = "edge-deletion-reduction"
DEGENERATE = "monomial-degenerate"
NOT_UNIT = "determinant-not-unit"
IMPRIMITIVE = "imprimitive-cycle-gcd"

GOLDEN = IntPoly((-1, -1, 1))
PHI_SQUARED = IntPoly((1, -3, 1))  # root (3 + sqrt 5) / 2
PHI_FOURTH = IntPoly((1, -7, 1))  # root (7 + 3 sqrt 5) / 2
SILVER_SQUARED = IntPoly((1, -6, 1))  # root 3 + 2 sqrt 2
RECIPROCAL_G3 = Fraction(757, 100)
RECIPROCAL_G3_SPREAD = Fraction(1, 100)
MU6_NORM_FLOOR = Fraction(818, 100)

# cited lower bounds for the reciprocal sub-cases, as minimal polynomials or values
CITED_BOUNDS = {
    "A2*": ("phi^4", PHI_FOURTH),
    "A2**": ("(2+sqrt3)^2", IntPoly((1, -14, 1))),  # 7 + 4 sqrt 3
    "A3*": ("12.5", IntPoly((-25, 2))),
}

WINDOW = (Fraction(141, 100), Fraction(142, 100))


def enclosure(lo: Fraction, hi: Fraction, digits: int = 15) -> dict:
    """Outward-rounded decimal enclosure, still exact rationals."""
    scale = 10**digits
    lo_r = Fraction(math.floor(lo * scale), scale)
    hi_r = Fraction(math.ceil(hi * scale), scale)
    return {
        "lo": format_rational(lo_r),
        "hi": format_rational(hi_r),
        "decimal": f"{float((lo + hi) / 2):.12f}",
    }


def _working(tol: Rational) -> Fraction:
    # decisions below compare against fixed thresholds, so never work coarser than this
    return min(as_rational(tol), Fraction(1, 2**60))


def reference_value(p: IntPoly, tol: Rational = Fraction(1, 10**30)) -> RootBracket:
    b = largest_real_root(p, tol)
    assert b is not None
    return b


# --------------------------------------------------------------------------
# enumeration of coefficient-constrained polynomials


def enumerate_skew_reciprocal(
    g: int, coeff_bound: int | None, support_bound: int | None = None
) -> Iterator[IntPoly]:
    """Monic degree-2g skew-reciprocal polynomials with |p(0)| = 1.

    Coefficients are bounded by ``coeff_bound`` in absolute value; at most
    ``support_bound`` non-leading coefficients are nonzero.  Output is in
    lexicographic order of the ascending coefficient tuple.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise InvalidArgument(f"g must be a positive integer, got {g!r}")
    if coeff_bound is None:
        raise InvalidArgument("an explicit coefficient bound is required")
    if not 1 <= coeff_bound <= 10:
        raise InvalidArgument("coefficient bound must be in 1..10")
    if support_bound is not None and support_bound < 1:
        raise InvalidArgument("support bound must be positive")
    free = range(-coeff_bound, coeff_bound + 1)
    for e in (-1, 1):
        middle = (0,) if (-1) ** g == -e else free
        for low in itertools.product(free, repeat=g - 1):
            for mid in middle:
                a = [e, *low, mid] + [0] * g
                for d in range(g):
                    a[2 * g - d] = a[d] * e * (-1) ** d
                if support_bound is not None and sum(1 for x in a[:-1] if x) > support_bound:
                    continue
                yield IntPoly(tuple(a))


# --------------------------------------------------------------------------
# g = 3


@dataclass(frozen=True)
class G3Candidate:
    """P(t) = t^6 + a t^5 + b t^4 + c t^3 - b t^2 + a t - 1."""

    a: int
    b: int
    c: int

    @property
    def poly(self) -> IntPoly:
        return IntPoly((-1, self.a, -self.b, self.c, self.b, self.a, 1))


def g3_candidates() -> list[G3Candidate]:
    out = []
    for a in (-2, -1, 0):
        for b in range(-8, 3):
            for c in range(-2 * a - 3, -2 * a + 4):
                out.append(G3Candidate(a, b, c))
    return out


def _window_roots(p: IntPoly, tol: Fraction) -> list[RootBracket]:
    lo, hi = WINDOW
    expected = root_count(p, lo, hi).count + root_count(p, -hi, -lo).count
    found = []
    for b in real_root_brackets(p, tol):
        while True:
            small, big = sorted((abs(b.lo), abs(b.hi)))
            if b.lo * b.hi <= 0:
                inside, outside = False, big <= lo
            else:
                inside = lo < small and big < hi
                outside = big <= lo or small >= hi
            if inside or outside:
                break
            b = b.refine(b.width / 16)
        if inside:
            found.append(b)
    if len(found) != expected:
        raise VerificationFailure("window root isolation disagrees with the exact count", witness=p)
    return found


@dataclass
class G3Report:
    candidates: list[G3Candidate]
    stage1: list[tuple[G3Candidate, list[RootBracket]]]
    moduli: dict[G3Candidate, ModulusReport]
    stage2: list[G3Candidate]

    @property
    def survivor(self) -> G3Candidate:
        return self.stage2[0]

    def as_dict(self) -> dict:
        return {
            "stage0_count": len(self.candidates),
            "stage1": [
                {
                    "a": c.a, "b": c.b, "c": c.c, "poly": c.poly.to_text(), "pretty": str(c.poly),
                    "window_roots": [r.as_dict() for r in roots],
                    "max_modulus": self.moduli[c].as_dict(),
                    "window_root_is_maximal": c in self.stage2,
                }
                for c, roots in self.stage1
            ],
            "stage1_count": len(self.stage1),
            "stage2_count": len(self.stage2),
            "survivor": self.survivor.poly.to_text() if self.stage2 else None,
        }


def g3_case_enumeration(tol: Rational = DEFAULT_TOL) -> G3Report:
    """Run the three filtering stages over the 231 bounded candidates."""
    tol = _working(tol)
    cands = g3_candidates()
    if len(cands) != 231:
        raise VerificationFailure("stage 0 count is not 231", witness=cands)
    for c in cands:
        if not is_skew_reciprocal(c.poly) or c.poly.constant != -1:
            raise VerificationFailure("candidate is not skew-reciprocal with p(0) = -1", witness=c)
    stage1 = []
    for c in cands:
        roots = _window_roots(c.poly, tol)
        if roots:
            stage1.append((c, roots))
    moduli: dict[G3Candidate, ModulusReport] = {}
    stage2 = []
    for c, roots in stage1:
        m = max_root_modulus(c.poly, tol)
        moduli[c] = m
        best = max(abs(r.mid) for r in roots)
        if m.certified:
            if any(r.overlaps(m.bracket) for r in roots):
                stage2.append(c)
        elif abs(float(m.value) - float(best)) <= 1e-6:
            raise VerificationFailure("maximal-modulus comparison is uncertified near a tie", witness=(c, m))
    if len(stage1) != 3:
        raise VerificationFailure(f"stage 1 kept {len(stage1)} polynomials, expected 3",
                                  witness=[c for c, _ in stage1])
    if len(stage2) != 1 or stage2[0].poly != mu_poly(3):
        raise VerificationFailure("stage 2 did not single out t^6 - t^5 - t - 1", witness=stage2)
    return G3Report(cands, stage1, moduli, stage2)


@dataclass(frozen=True)
class OrbitSummary:
    quadruples: tuple[tuple[complex, ...], ...]
    real_pairs: tuple[tuple[float, float], ...]
    imaginary_pairs: int
    determinant: int
    constant: int

    @property
    def consistent(self) -> bool:
        return self.determinant == self.constant

    def as_dict(self) -> dict:
        return {
            "quadruples": len(self.quadruples),
            "real_pairs": [[f"{x:.12g}", f"{y:.12g}"] for x, y in self.real_pairs],
            "imaginary_pairs": self.imaginary_pairs,
            "determinant": self.determinant,
            "constant": self.constant,
            "consistent": self.consistent,
        }


def g3_determinant_analysis(p: IntPoly, tol: float = 1e-6) -> OrbitSummary:
    """Group the roots of a skew-reciprocal sextic into orbits under
    z -> -1/z and conjugation and multiply their determinant contributions."""
    if p.degree != 6 or not p.is_monic():
        raise InvalidArgument("expected a monic sextic")
    if not is_skew_reciprocal(p):
        raise InvalidArgument(f"{p} is not skew-reciprocal")
    pool: list[complex] = []
    for f, mult in squarefree_factors(p):
        pool += [complex(z) for z in numeric_roots(f)] * mult

    def take(target: complex) -> complex:
        k = min(range(len(pool)), key=lambda i: abs(pool[i] - target))
        if abs(pool[k] - target) > tol * max(1.0, abs(target)):
            raise VerificationFailure("root orbit is incomplete", witness=(p, target))
        return pool.pop(k)

    quads, pairs, imag = [], [], 0
    while pool:
        z = pool.pop(0)
        if abs(z - 1j) <= tol or abs(z + 1j) <= tol:
            take(-z)
            imag += 1
        elif abs(z.imag) <= tol * max(1.0, abs(z)):
            w = take(-1 / z)
            pairs.append(tuple(sorted((z.real, w.real))))
        else:
            quads.append((z, take(-1 / z), take(z.conjugate()), take(-1 / z.conjugate())))
    return OrbitSummary(tuple(quads), tuple(pairs), imag, (-1) ** len(pairs), p.constant)


# --------------------------------------------------------------------------
# minimality over the classified curve graphs


def _nA1_weights(n: int, g: int) -> Iterator[tuple[int, ...]]:
    yield from itertools.combinations_with_replacement(range(1, 2 * g + 1), n)


def _shape_weights(name: str, g: int) -> Iterator[tuple[int, ...]]:
    top = 2 * g
    r = range(1, top + 1)
    if name == "A2*":
        for a in r:
            for b in range(a, top - a + 1):
                for c in r:
                    yield (a, b, c)
    elif name == "A2**":
        for a in r:
            for b in range(a, top - a + 1):
                for c in r:
                    for d in range(c, top + 1):
                        yield (a, b, c, d)
    elif name == "A3*":
        for a in r:
            for b in range(1, top - a + 1):
                for c in range(a, top - b + 1):
                    for d in r:
                        yield (a, b, c, d)


def shape_space(g: int) -> Iterator[ShapeId]:
    """Every weighted shape that could be the curve graph of a 2g x 2g matrix."""
    for n in range(2, 8):
        for w in _nA1_weights(n, g):
            yield ShapeId(f"{n}A1", w)
    for name in ("A2*", "A2**", "A3*"):
        for w in _shape_weights(name, g):
            yield ShapeId(name, w)


@dataclass(frozen=True)
class Finding:
    shape: str
    weights: tuple[int, ...]
    poly: IntPoly
    normalized: tuple[Fraction, Fraction] | None
    status: str  # "minimizer", "above", or an exclusion reason
    case: str | None = None
    cited_bound: str | None = None

    def as_dict(self) -> dict:
        return {
            "shape": self.shape,
            "weights": list(self.weights),
            "poly": self.poly.to_text(),
            "skew_reciprocal": True,
            "normalized": enclosure(*self.normalized) if self.normalized else None,
            "status": self.status,
            "case": self.case,
            "cited_bound": self.cited_bound,
        }


@dataclass
class VerificationReport:
    g: int
    mode: str
    candidate: IntPoly
    candidate_bracket: RootBracket
    realizability: dict
    findings: list[Finding]
    exclusions: dict[str, dict[str, int]]
    minimizers: list[IntPoly]
    candidate_matched: bool
    supplementary: dict = field(default_factory=dict)

    @property
    def minimum(self) -> tuple[Fraction, Fraction]:
        return self.candidate_bracket.power_bounds(2 * self.g)

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "mode": self.mode,
            "candidate": self.candidate.to_text(),
            "candidate_pretty": str(self.candidate),
            "root": self.candidate_bracket.as_dict(),
            "minimum_normalized": enclosure(*self.minimum),
            "realizability": self.realizability,
            "minimizers": [p.to_text() for p in self.minimizers],
            "candidate_matched": self.candidate_matched,
            "exclusions": self.exclusions,
            "findings": [f.as_dict() for f in self.findings],
            "supplementary": self.supplementary,
        }


def candidate_poly(g: int, mode: str) -> IntPoly:
    if mode == "irreducible":
        return lambda_poly(g)
    if mode == "primitive":
        # the primitive family starts at g = 2; for g = 1 the golden companion is primitive
        return mu_poly(g) if g >= 2 else lambda_poly(1)
    raise InvalidArgument(f"unknown mode {mode!r}")


def _constraint_reason(chi: IntPoly, g: int) -> str | None:
    rep = check_coefficient_constraints(chi, g)
    if rep.verdict:
        return None
    if rep.pairs_ok and not rep.middle_ok:
        return MIDDLE
    return PARITY


def _has_growth(chi: IntPoly, b: RootBracket | None) -> bool:
    if b is None:
        return False
    while b.lo <= 1 <= b.hi:
        if chi.sign_at(1) == 0:
            return False
        b = b.refine(b.width / 16)
    return b.lo > 1


def verify_minimum(g: int, mode: str, tol: Rational = DEFAULT_TOL) -> VerificationReport:
    """Confirm the minimal normalized spectral radius over the classified shapes.

    (i) the candidate's companion matrix is nonnegative, irreducible and,
    in primitive mode, primitive; (ii) every weighted shape whose reciprocal
    clique polynomial is skew-reciprocal of degree 2g has largest root at
    least the candidate's, or is excluded (primitive mode: shapes whose
    cycle lengths share a factor; any mode: no root above 1).  Ties must be
    exactly the expected minimizers.
    """
    if isinstance(g, bool) or not isinstance(g, int) or not 1 <= g <= 12:
        raise InvalidArgument("verify_minimum supports 1 <= g <= 12")
    tol = as_rational(tol)
    cand = candidate_poly(g, mode)
    cand_bracket = largest_real_root(cand, tol)
    C = companion(cand)
    prim, cert = is_primitive(C)
    realizability = {
        "nonnegative": C.is_nonnegative(),
        "irreducible": is_irreducible(C),
        "primitive": prim,
        "certificate": cert.as_dict() if cert else None,
    }
    if not (realizability["nonnegative"] and realizability["irreducible"]):
        raise VerificationFailure("candidate companion is not nonnegative irreducible", witness=C)
    if mode == "primitive" and not prim:
        raise VerificationFailure("candidate companion is not primitive", witness=cert)

    exclusions: dict[str, dict[str, int]] = {}
    findings: list[Finding] = []
    minimizers: list[IntPoly] = []
    below: list[Finding] = []
    root_cache: dict[IntPoly, tuple] = {}

    for shape in shape_space(g):
        label = shape.label
        Q = shape_clique_poly(shape)
        counts = exclusions.setdefault(label, {})
        if Q.degree > 2 * g or abs(Q.coeff(2 * g)) != 1:
            counts[NOT_UNIT] = counts.get(NOT_UNIT, 0) + 1
            continue
        chi = reciprocal_transform(Q, 2 * g)
        reason = _constraint_reason(chi, g)
        if reason:
            counts[reason] = counts.get(reason, 0) + 1
            continue
        case = cited = None
        if shape.name in CITED_BOUNDS and is_reciprocal(chi):
            case, cited = RECIPROCAL, CITED_BOUNDS[shape.name][0]
        elif shape.name == "nA1" and len(shape.weights) >= 4:
            case = EDGE_DELETION
        if chi not in root_cache:
            b = largest_real_root(chi, tol)
            if not _has_growth(chi, b):
                root_cache[chi] = (None, None)
            else:
                root_cache[chi] = (b, compare_largest_roots(chi, cand))
        b, cmp = root_cache[chi]
        if b is None:
            status = DEGENERATE
        elif mode == "primitive" and math.gcd(*shape.weights) > 1:
            status = IMPRIMITIVE
        elif cmp == 0:
            status = "minimizer"
        elif cmp > 0:
            status = "above"
        else:
            status = "below"
        if status in (DEGENERATE, IMPRIMITIVE):
            counts[status] = counts.get(status, 0) + 1
        normalized = b.power_bounds(2 * g) if b is not None else None
        f = Finding(label, shape.weights, chi, normalized, status, case, cited)
        findings.append(f)
        if status == "below":
            below.append(f)
        elif status == "minimizer" and chi not in minimizers:
            minimizers.append(chi)

    if below:
        raise VerificationFailure(f"{len(below)} shapes beat the candidate", witness=below)
    expected = [cand]
    if g == 2 and mode == "irreducible":
        expected.append(IntPoly((1, 0, -3, 0, 1)))
    if sorted(minimizers, key=lambda p: p.coeffs) != sorted(expected, key=lambda p: p.coeffs):
        raise VerificationFailure("minimizing polynomials differ from the expected set",
                                  witness=[str(p) for p in minimizers])
    report = VerificationReport(g, mode, cand, cand_bracket, realizability, findings,
                                exclusions, minimizers, cand in minimizers)
    if g == 3 and mode == "primitive":
        # the normalized minimum exceeds 8, beyond the classified shapes
        report.supplementary["g3_case"] = g3_case_enumeration(tol).as_dict()
    if g == 2 and mode == "irreducible":
        report.supplementary["golden_divisibility"] = {
            p.to_text(): divides(GOLDEN, p) for p in minimizers
        }
    return report


# --------------------------------------------------------------------------
# monotonicity in d


@dataclass
class MonotonicityReport:
    g: int
    rows: list[tuple[int, RootBracket]]

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "rows": [{"d": d, "poly": trinomial_pair(self.g, d).to_text(), "root": b.as_dict()}
                     for d, b in self.rows],
        }


def monotonicity_check(
    g: int, d_values: list[int] | None = None, tol: Rational = DEFAULT_TOL,
    separation: Rational = Fraction(1, 10**9),
) -> MonotonicityReport:
    """Largest root of t^{2g} - t^{g+d} - t^{g-d} - 1 strictly increases in d."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise InvalidArgument("monotonicity needs g >= 2")
    ds = list(range(1, g)) if d_values is None else sorted(d_values)
    if any(not 1 <= d <= g - 1 for d in ds):
        raise InvalidArgument("d must lie in 1..g-1")
    sep = as_rational(separation)
    rows = [(d, largest_real_root(trinomial_pair(g, d), _working(tol))) for d in ds]
    for (d0, b0), (d1, b1) in zip(rows, rows[1:]):
        if not b1.lo - b0.hi > sep:
            raise VerificationFailure(f"roots for d={d0} and d={d1} are not separated increasing",
                                      witness=(b0, b1))
    return MonotonicityReport(g, rows)


# --------------------------------------------------------------------------
# normalized sequences


@dataclass(frozen=True)
class SequenceRow:
    g: int
    lam: RootBracket
    lam_norm: tuple[Fraction, Fraction]
    mu: RootBracket | None
    mu_norm: tuple[Fraction, Fraction] | None

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "lambda": self.lam.as_dict(),
            "lambda_norm": enclosure(*self.lam_norm),
            "mu": self.mu.as_dict() if self.mu else None,
            "mu_norm": enclosure(*self.mu_norm) if self.mu_norm else None,
        }

    def csv_fields(self) -> list[str]:
        def dec(pair):
            return f"{float((pair[0] + pair[1]) / 2):.12f}" if pair else ""
        return [
            str(self.g),
            format_rational(self.lam.lo), format_rational(self.lam.hi), dec(self.lam_norm),
            format_rational(self.mu.lo) if self.mu else "",
            format_rational(self.mu.hi) if self.mu else "",
            dec(self.mu_norm),
        ]


CSV_HEADER = ["g", "lambda_lo", "lambda_hi", "lambda_norm", "mu_lo", "mu_hi", "mu_norm"]


@dataclass
class SequenceTable:
    rows: list[SequenceRow]
    constants: dict[str, RootBracket]

    def as_dict(self) -> dict:
        return {
            "rows": [r.as_dict() for r in self.rows],
            "constants": {k: v.as_dict() for k, v in self.constants.items()},
            "reciprocal_g3": {"value": format_rational(RECIPROCAL_G3),
                              "spread": format_rational(RECIPROCAL_G3_SPREAD)},
        }


def _below_phi4(g: int, poly: IntPoly, b: RootBracket, norm: tuple[Fraction, Fraction],
                phi4: RootBracket) -> str:
    """'below', 'equal' or 'above' for root^{2g} against phi^4, decided exactly."""
    lo, hi = norm
    for _ in range(60):
        if hi < phi4.lo:
            return "below"
        if lo > phi4.hi:
            return "above"
        if divides(GOLDEN, poly) and b.overlaps(reference_value(GOLDEN)):
            # the root is phi itself, so root^{2g} = phi^{2g}
            return "equal" if g == 2 else ("below" if g < 2 else "above")
        b = b.refine(b.width / 1024)
        phi4 = phi4.refine(phi4.width / 1024)
        lo, hi = b.power_bounds(2 * g)
    raise VerificationFailure("could not separate a normalized value from phi^4", witness=(g, poly))


def sequence_table(g_max: int, tol: Rational = DEFAULT_TOL) -> SequenceTable:
    """Normalized values root^{2g} of the two minimizing families for g <= g_max."""
    if isinstance(g_max, bool) or not isinstance(g_max, int) or not 1 <= g_max <= 50:
        raise InvalidArgument("g_max must lie in 1..50")
    tol = _working(tol)
    consts = {
        "phi^2": reference_value(PHI_SQUARED),
        "phi^4": reference_value(PHI_FOURTH),
        "3+2sqrt2": reference_value(SILVER_SQUARED),
    }
    rows = []
    for g in range(1, g_max + 1):
        lam = largest_real_root(lambda_poly(g), tol)
        mu = largest_real_root(mu_poly(g), tol) if g >= 2 else None
        rows.append(SequenceRow(g, lam, lam.power_bounds(2 * g),
                                mu, mu.power_bounds(2 * g) if mu else None))
    table = SequenceTable(rows, consts)

    eps = Fraction(1, 10**9)
    phi2 = consts["phi^2"]
    for r in rows:
        if r.g % 2 and not (abs(r.lam_norm[0] - phi2.mid) < eps and abs(r.lam_norm[1] - phi2.mid) < eps):
            raise VerificationFailure("odd-g lambda^{2g} differs from phi^2", witness=r)

    def decreasing(seq: list[tuple[int, tuple[Fraction, Fraction]]], what: str):
        for (g0, n0), (g1, n1) in zip(seq, seq[1:]):
            if not n1[1] < n0[0]:
                raise VerificationFailure(f"{what} is not strictly decreasing at g={g1}", witness=(g0, g1))

    decreasing([(r.g, r.lam_norm) for r in rows if r.g % 2 == 0], "even-g lambda sequence")
    decreasing([(r.g, r.mu_norm) for r in rows if r.mu and r.g % 2 == 0], "even-g mu sequence")
    decreasing([(r.g, r.mu_norm) for r in rows if r.mu and r.g % 2 == 1], "odd-g mu sequence")
    for r in rows:
        if r.g == 3 and not r.mu_norm[0] > MU6_NORM_FLOOR:
            raise VerificationFailure("mu_6^6 does not exceed 8.18", witness=r)
        entries = [("lambda", lambda_poly(r.g), r.lam, r.lam_norm)]
        if r.mu and r.g != 3:
            entries.append(("mu", mu_poly(r.g), r.mu, r.mu_norm))
        for what, poly, b, norm in entries:
            verdict = _below_phi4(r.g, poly, b, norm, consts["phi^4"])
            if verdict == "above" or (verdict == "equal" and r.g != 2):
                raise VerificationFailure(f"{what}_{2 * r.g}^{2 * r.g} is not below phi^4", witness=r)
    return table


# --------------------------------------------------------------------------
# cross-checks used by the orchestrator


def constraints_exhaustive(g: int, bound: int = 2) -> tuple[int, list[IntPoly]]:
    """Compare the coefficient-constraint verdict with the functional identity
    on every monic degree-2g polynomial with |p(0)| = 1 and coefficients
    in [-bound, bound].  Returns (number checked, disagreements)."""
    if bound < 1 or bound > 10:
        raise InvalidArgument("bound must lie in 1..10")
    free = range(-bound, bound + 1)
    checked, bad = 0, []
    for e in (-1, 1):
        for mid in itertools.product(free, repeat=2 * g - 1):
            p = IntPoly((e, *mid, 1))
            checked += 1
            if check_coefficient_constraints(p, g).verdict != is_skew_reciprocal(p):
                bad.append(p)
    return checked, bad


def random_duality(count: int, n_max: int = 6, seed: int = 0, entries=(0, 1, 2)) -> list:
    """Matrices (drawn reproducibly) on which the duality identity fails."""
    from .digraph import duality_check
    from .matrix import IntMatrix

    rng = np.random.default_rng(seed)
    bad = []
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        A = IntMatrix(tuple(tuple(int(x) for x in row) for row in rng.choice(entries, size=(n, n))))
        if not duality_check(A):
            bad.append(A)
    return bad


@dataclass(frozen=True)
class DeletionResult:
    gadget: str
    params: tuple[int, ...]
    clique_ok: bool
    reduced_ok: bool
    root_drops: bool

    @property
    def ok(self) -> bool:
        return self.clique_ok and self.reduced_ok and self.root_drops

    def as_dict(self) -> dict:
        return {"gadget": self.gadget, "params": list(self.params), "clique_ok": self.clique_ok,
                "reduced_ok": self.reduced_ok, "root_drops": self.root_drops}


def edge_deletion_check(g_max: int = 6) -> list[DeletionResult]:
    """Delete the distinguished unit edge of every gadget with g <= g_max:
    the Perron root must drop strictly and both clique polynomials must
    have the closed forms."""
    from .digraph import clique_polynomial, curve_graph, expand
    from .families import gamma_abd, gamma_abd_instances, gamma_prime_abc, gamma_prime_instances
    from .matrix import char_poly

    out = []
    for tag, maker, params in (("gamma", gamma_abd, gamma_abd_instances(g_max)),
                               ("gamma-prime", gamma_prime_abc, gamma_prime_instances(g_max))):
        for prm in params:
            G = maker(*prm)
            R = G.reduced()
            before = clique_polynomial(curve_graph(G.graph))
            after = clique_polynomial(curve_graph(R))
            drops = compare_largest_roots(char_poly(expand(R)), char_poly(expand(G.graph))) < 0
            out.append(DeletionResult(tag, prm, before == G.clique_poly, after == G.reduced_clique_poly, drops))
    return out
