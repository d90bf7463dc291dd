#!/usr/bin/env python3
"""Normalized values root^{2g} of both minimizing families, with a crude text plot."""
import argparse

from skewrad.search import sequence_table

ap = argparse.ArgumentParser()
ap.add_argument("--gmax", type=int, default=30)
args = ap.parse_args()

t = sequence_table(args.gmax)
phi4 = float(t.constants["phi^4"])
silver = float(t.constants["3+2sqrt2"])
print(f"{'g':>3} {'lambda^2g':>14} {'mu^2g':>14}")
for r in t.rows:
    lam = float(r.lam_norm[0])
    mu = float(r.mu_norm[0]) if r.mu else None
    bar = "#" * int(round(10 * ((mu or lam) - 2.5)))
    print(f"{r.g:>3} {lam:14.9f} {mu if mu is not None else float('nan'):14.9f}  {bar}")
print(f"phi^4 = {phi4:.9f}, limit 3+2sqrt2 = {silver:.9f}")
