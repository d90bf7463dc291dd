"""Command-line entry point.

Exit status: 0 when every assertion passes, 1 on a usage error, 2 when a
verification fails (the witness is printed as JSON on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass, field, is_dataclass
from fractions import Fraction
from pathlib import Path

from . import search
from .digraph import (
    DEFAULT_CYCLE_CAP,
    Digraph,
    clique_polynomial,
    curve_graph,
    duality_check,
    iter_cliques,
)
from .errors import InvalidArgument, ResourceLimit, SkewradError, VerificationFailure
from .families import FamilyId, lambda_poly, mu_poly
from .matrix import IntMatrix, char_poly, companion, det, is_irreducible, is_primitive, spectral_radius
from .poly import (
    DEFAULT_TOL,
    IntPoly,
    as_rational,
    check_coefficient_constraints,
    format_rational,
    is_reciprocal,
    is_skew_reciprocal,
    is_squarefree,
    largest_real_root,
    max_root_modulus,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    tol: Fraction = DEFAULT_TOL
    cap: int = DEFAULT_CYCLE_CAP
    fmt: str = "text"
    out: Path | None = None

    def __post_init__(self):
        if self.tol <= 0:
            raise UsageError("--tol must be positive")
        if self.cap <= 0:
            raise UsageError("--cap must be positive")
        if self.fmt not in ("text", "json", "csv"):
            raise UsageError(f"unknown output format {self.fmt!r}")


# --------------------------------------------------------------------------
# serialization


def to_jsonable(obj):
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if isinstance(obj, IntPoly):
        return obj.to_text()
    if isinstance(obj, IntMatrix):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if is_dataclass(obj):
        return {k: to_jsonable(v) for k, v in vars(obj).items()}
    return str(obj)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


@dataclass
class Output:
    payload: dict
    text: str
    csv: str | None = None
    status: int = EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dumps(self.payload)
        if fmt == "csv":
            if self.csv is None:
                raise UsageError("this command has no CSV output")
            return self.csv
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _bracket_text(b) -> str:
    return f"[{float(b.lo):.12f}, {float(b.hi):.12f}]"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


# --------------------------------------------------------------------------
# commands


def cmd_check_poly(cfg: RunConfig) -> Output:
    p = IntPoly.parse(cfg.params["poly"])
    rep: dict = {
        "poly": p.to_text(),
        "pretty": str(p),
        "degree": p.degree,
        "skew_reciprocal": is_skew_reciprocal(p) if p.degree >= 0 and p.coeffs else False,
        "reciprocal": is_reciprocal(p) if p.coeffs else False,
        "squarefree": is_squarefree(p) if p.degree >= 1 else True,
        "constraints": None,
        "largest_real_root": None,
        "max_modulus": None,
    }
    lines = [f"{p}", f"skew-reciprocal: {rep['skew_reciprocal']}", f"reciprocal: {rep['reciprocal']}"]
    if p.degree >= 2 and p.degree % 2 == 0 and p.is_monic() and abs(p.constant) == 1:
        c = check_coefficient_constraints(p, p.degree // 2)
        rep["constraints"] = c.as_dict()
        lines.append(f"constraint case {c.case_id}: {'satisfied' if c.verdict else 'violated'}")
    if p.degree >= 1:
        b = largest_real_root(p, cfg.tol)
        rep["largest_real_root"] = b.as_dict() if b else None
        lines.append(f"largest real root: {_bracket_text(b) if b else 'none'}")
        m = max_root_modulus(p, cfg.tol)
        rep["max_modulus"] = m.as_dict()
        lines.append(f"max modulus: {m.value} ({'certified' if m.certified else 'uncertified'})")
    return Output(rep, "\n".join(lines))


def _load_matrix(cfg: RunConfig) -> IntMatrix:
    if cfg.params.get("matrix"):
        return IntMatrix.parse(_read(cfg.params["matrix"]))
    if cfg.params.get("poly"):
        return companion(IntPoly.parse(cfg.params["poly"]))
    raise UsageError("charpoly needs --matrix FILE or --poly COEFFS")


def cmd_charpoly(cfg: RunConfig) -> Output:
    A = _load_matrix(cfg)
    chi = char_poly(A)
    rep: dict = {"n": A.n, "char_poly": chi.to_text(), "pretty": str(chi), "det": det(A)}
    lines = [chi.to_text(), f"# {chi}"]
    if A.is_nonnegative():
        irr = is_irreducible(A)
        prim, cert = is_primitive(A)
        rep.update(irreducible=irr, primitive=prim, certificate=cert.as_dict() if cert else None,
                   duality=duality_check(A, cfg.cap, cfg.cap))
        if irr:
            b = spectral_radius(A, cfg.tol)
            rep["spectral_radius"] = b.as_dict()
            rep["normalized"] = search.enclosure(*b.power_bounds(A.n))
            lines.append(f"# spectral radius {_bracket_text(b)}")
        lines.append(f"# irreducible {irr}, primitive {prim}, duality {rep['duality']}")
    return Output(rep, "\n".join(lines))


def cmd_cliquepoly(cfg: RunConfig) -> Output:
    if not cfg.params.get("graph"):
        raise UsageError("cliquepoly needs --graph FILE")
    G = Digraph.parse(_read(cfg.params["graph"]))
    CG = curve_graph(G, cfg.cap)
    Q = clique_polynomial(CG, cfg.cap)
    rep: dict = {"clique_poly": Q.to_text(), "pretty": str(Q), "curves": CG.size}
    if cfg.params.get("explain"):
        rep["cycles"] = [{"vertices": list(c.vertices), "weight": c.weight} for c in CG.cycles]
        rep["cliques"] = [
            {"members": list(K), "weight": sum(CG.weights[i] for i in K), "sign": (-1) ** len(K)}
            for K in iter_cliques(CG, cfg.cap)
        ]
    fmt_explain = cfg.params.get("explain") and cfg.fmt == "text"
    text = dumps(rep) if fmt_explain else Q.to_text()
    return Output(rep, text)


def cmd_family(cfg: RunConfig) -> Output:
    fam = FamilyId(cfg.params["tag"], cfg.params["g"])
    p, g = fam.poly, fam.g
    b = largest_real_root(p, cfg.tol)
    rep = {
        "tag": fam.tag,
        "g": g,
        "poly": p.to_text(),
        "pretty": str(p),
        "skew_reciprocal": is_skew_reciprocal(p),
        "perron": b.as_dict(),
        "normalized": search.enclosure(*b.power_bounds(2 * g)),
    }
    return Output(rep, dumps(rep))


def cmd_verify(cfg: RunConfig) -> Output:
    r = search.verify_minimum(cfg.params["g"], cfg.params["mode"], cfg.tol)
    counts: dict[str, int] = {}
    for f in r.findings:
        counts[f.status] = counts.get(f.status, 0) + 1
    lines = [
        f"g={r.g} mode={r.mode}",
        f"minimum polynomial: {r.candidate}",
        f"root: {_bracket_text(r.candidate_bracket)}",
        f"normalized: {float(sum(r.minimum) / 2):.12f}",
        f"minimizers: {', '.join(str(p) for p in r.minimizers)}",
        f"surviving shapes by status: {dict(sorted(counts.items()))}",
    ]
    return Output(r.as_dict(), "\n".join(lines))


def cmd_monotonicity(cfg: RunConfig) -> Output:
    r = search.monotonicity_check(cfg.params["g"], tol=cfg.tol)
    lines = [f"g={r.g}: largest root strictly increasing in d"]
    lines += [f"  d={d}: {_bracket_text(b)}" for d, b in r.rows]
    return Output(r.as_dict(), "\n".join(lines))


def cmd_g3_case(cfg: RunConfig) -> Output:
    r = search.g3_case_enumeration(cfg.tol)
    rep = r.as_dict()
    lines = [f"stage 0: {len(r.candidates)} candidates", f"stage 1: {len(r.stage1)} with a root in the window"]
    rows = []
    for c, roots in r.stage1:
        m = r.moduli[c]
        lines.append(f"  {c.poly}: window root {float(roots[0].mid):.6f}, max modulus {m.value}")
        rows.append([c.a, c.b, c.c, c.poly.to_text(), format_rational(roots[0].lo),
                     format_rational(roots[0].hi), m.value, m.certified, c in r.stage2])
    lines.append(f"stage 2: {len(r.stage2)} survivor, {r.survivor.poly}")
    header = ["a", "b", "c", "poly", "root_lo", "root_hi", "max_modulus", "certified", "maximal"]
    return Output(rep, "\n".join(lines), _csv(header, rows))


def cmd_sequence(cfg: RunConfig) -> Output:
    t = search.sequence_table(cfg.params["g_max"], cfg.tol)
    rows = [r.csv_fields() for r in t.rows]
    lines = [f"{'g':>3} {'lambda^2g':>16} {'mu^2g':>16}"]
    for r in t.rows:
        mu = f"{float(sum(r.mu_norm) / 2):16.12f}" if r.mu_norm else " " * 16
        lines.append(f"{r.g:>3} {float(sum(r.lam_norm) / 2):16.12f} {mu}")
    return Output(t.as_dict(), "\n".join(lines), _csv(search.CSV_HEADER, rows))


# --------------------------------------------------------------------------
# reproduce


def _claim_duality(cfg):
    bad = search.random_duality(200, 6, seed=0)
    fam = [companion(lambda_poly(g)) for g in range(1, 9)] + [companion(mu_poly(g)) for g in range(2, 9)]
    bad += [A for A in fam if not duality_check(A, cfg.cap, cfg.cap)]
    return not bad, f"200 random matrices and {len(fam)} family companions", bad


def _claim_constraints(cfg):
    total, bad = 0, []
    for g in (1, 2, 3):
        n, b = search.constraints_exhaustive(g, 2)
        total += n
        bad += b
    return not bad, f"{total} polynomials with coefficients in [-2, 2]", bad


def _claim_realizability(cfg):
    bad = []
    for g in range(1, 9):
        L = companion(lambda_poly(g))
        prim, cert = is_primitive(L)
        if not (L.is_nonnegative() and is_irreducible(L)):
            bad.append(("lambda", g, "not nonnegative irreducible"))
        # odd g: polynomial in t^g, so the period is g (g = 1 is primitive)
        if g % 2 and (cert.gcd != g or prim != (g == 1)):
            bad.append(("lambda", g, "expected period g"))
        if g >= 2:
            ok, _ = is_primitive(companion(mu_poly(g)))
            if not ok:
                bad.append(("mu", g, "not primitive"))
    return not bad, "companions of both families for g <= 8", bad


def _claim_verify(cfg):
    for g in range(1, 9):
        for mode in ("irreducible", "primitive"):
            search.verify_minimum(g, mode, cfg.tol)
    return True, "g = 1..8 in both modes", None


def _claim_monotonicity(cfg):
    for g in range(2, 9):
        search.monotonicity_check(g, tol=cfg.tol)
    return True, "g = 2..8", None


def _claim_g3(cfg):
    r = search.g3_case_enumeration(cfg.tol)
    return True, f"231 -> {len(r.stage1)} -> {len(r.stage2)}: {r.survivor.poly}", None


def _claim_sequence(cfg):
    search.sequence_table(30, cfg.tol)
    return True, "g <= 30", None


def _claim_deletion(cfg):
    res = search.edge_deletion_check(6)
    bad = [r for r in res if not r.ok]
    return not bad, f"{len(res)} gadget instances", bad


CLAIMS = [
    ("duality spot-checks", _claim_duality),
    ("coefficient constraints, exhaustive g <= 3", _claim_constraints),
    ("family realizability", _claim_realizability),
    ("minimality by shape", _claim_verify),
    ("monotonicity in d", _claim_monotonicity),
    ("g=3 enumeration", _claim_g3),
    ("normalized sequences", _claim_sequence),
    ("edge-deletion gadgets", _claim_deletion),
]


def cmd_reproduce(cfg: RunConfig) -> Output:
    claims, lines = [], []
    for i, (name, fn) in enumerate(CLAIMS, 1):
        t0 = time.perf_counter()
        try:
            ok, detail, witness = fn(cfg)
        except VerificationFailure as exc:
            ok, detail, witness = False, str(exc), exc.witness
        secs = time.perf_counter() - t0
        claims.append({"index": i, "claim": name, "status": "PASS" if ok else "FAIL", "detail": detail,
                       "witness": to_jsonable(witness) if not ok else None})
        lines.append(f"{'PASS' if ok else 'FAIL'}  {i}. {name}: {detail} ({secs:.1f}s)")
    passed = all(c["status"] == "PASS" for c in claims)
    # timings are left out of the JSON so reruns are byte-identical
    return Output({"claims": claims, "passed": passed}, "\n".join(lines),
                  status=EXIT_OK if passed else EXIT_FAIL)


COMMANDS = {
    "check-poly": cmd_check_poly,
    "charpoly": cmd_charpoly,
    "cliquepoly": cmd_cliquepoly,
    "family": cmd_family,
    "verify": cmd_verify,
    "monotonicity": cmd_monotonicity,
    "g3-case": cmd_g3_case,
    "sequence": cmd_sequence,
    "reproduce-paper": cmd_reproduce,
}


# --------------------------------------------------------------------------
# parsing


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # coefficient lists such as -1,-1,1 are values, not options
        self._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)*$|^-\d*\.\d+$")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--tol", default=d, help="root bracket width, as a rational (default 1/10^12)")
    p.add_argument("--cap", type=int, default=d, help="cap on enumerated cycles and cliques")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json", default=d)
    g.add_argument("--csv", dest="fmt", action="store_const", const="csv", default=d)
    p.add_argument("--out", default=d, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewrad", description="Minimal spectral radii of skew-reciprocal integer matrices.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        s = sub.add_parser(name, help=help_)
        _global_flags(s, suppress=True)
        return s

    s = add("check-poly", "constraint report and root data for a polynomial")
    s.add_argument("poly", help="ascending coefficients, e.g. -1,-1,0,0,0,-1,1")
    s = add("charpoly", "characteristic polynomial and Perron data of a matrix")
    s.add_argument("--matrix")
    s.add_argument("--poly", help="use the companion matrix of these coefficients")
    s = add("cliquepoly", "clique polynomial of a weighted digraph")
    s.add_argument("--graph", required=True)
    s.add_argument("--explain", action="store_true")
    s = add("family", "a member of a minimizing family")
    s.add_argument("--tag", required=True, choices=["lambda", "mu"])
    s.add_argument("--g", type=int, required=True)
    s = add("verify", "minimality over the classified curve-graph shapes")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--mode", required=True, choices=["irreducible", "primitive"])
    s = add("monotonicity", "largest root of t^2g - t^(g+d) - t^(g-d) - 1 against d")
    s.add_argument("--g", type=int, required=True)
    add("g3-case", "the bounded g=3 candidate enumeration")
    s = add("sequence", "normalized values of both families")
    s.add_argument("--gmax", dest="g_max", type=int, required=True)
    add("reproduce-paper", "run every claim check and print a summary")
    return parser


_GLOBAL = ("tol", "cap", "fmt", "out", "command")


def parse_config(argv: list[str]) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    try:
        tol = as_rational(ns["tol"]) if ns.get("tol") is not None else DEFAULT_TOL
    except (ValueError, ZeroDivisionError, InvalidArgument) as exc:
        raise UsageError(f"bad --tol: {ns['tol']}") from exc
    return RunConfig(
        command=ns["command"],
        params={k: v for k, v in ns.items() if k not in _GLOBAL},
        tol=tol,
        cap=ns["cap"] if ns.get("cap") is not None else DEFAULT_CYCLE_CAP,
        fmt=ns.get("fmt") or "text",
        out=Path(ns["out"]) if ns.get("out") else None,
    )


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute a command; returns (exit status, rendered report)."""
    out = COMMANDS[cfg.command](cfg)
    return out.status, out.render(cfg.fmt)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        status, text = run(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        sys.stderr.write(dumps({"witness": exc.witness}))
        return EXIT_FAIL
    except (InvalidArgument, ResourceLimit) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SkewradError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
