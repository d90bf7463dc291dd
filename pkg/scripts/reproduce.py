#!/usr/bin/env python3
"""Run every checked claim in order and print one line per claim.

Extra flags go to the CLI, e.g. ``--json --out results.json``.
"""
import sys

from skewrad.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-paper", *sys.argv[1:]]))
