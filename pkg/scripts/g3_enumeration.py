#!/usr/bin/env python3
"""Dump the g=3 bounded search: every candidate with its window roots and modulus verdict."""
import argparse
import csv
import sys

from skewrad.search import g3_case_enumeration

ap = argparse.ArgumentParser()
ap.add_argument("--all", action="store_true", help="list all 231 candidates, not just the window survivors")
ap.add_argument("--out", default="-")
args = ap.parse_args()

rep = g3_case_enumeration()
kept = {c: roots for c, roots in rep.stage1}
out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
w = csv.writer(out)
w.writerow(["a", "b", "c", "poly", "window_roots", "max_modulus", "certified", "maximal"])
for c in rep.candidates:
    if c not in kept and not args.all:
        continue
    roots = ";".join(f"{float(r.mid):.12f}" for r in kept.get(c, []))
    m = rep.moduli.get(c)
    w.writerow([c.a, c.b, c.c, c.poly.to_text(), roots,
                f"{float(m.value):.12f}" if m else "", m.certified if m else "", c in rep.stage2])
if out is not sys.stdout:
    out.close()
print(f"{len(rep.candidates)} candidates, {len(rep.stage1)} in window, survivor {rep.survivor.poly}",
      file=sys.stderr)
