#!/usr/bin/env python3
"""Standalone grid sweep of the signed-multiplicity-free classification.

Compares the computed verdict of every G(k,m)*p_n against the closed form,
verifies a collision witness for each flagged triple, and prints the
deterministic report.  Nonzero exit on any disagreement.

Usage: python3 scripts/run_smf_sweep.py [k_max] [m_max] [n_max] [--jobs N]
"""

import argparse
import sys

from petrie import sweep_smf


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("k_max", type=int, nargs="?", default=7)
    parser.add_argument("m_max", type=int, nargs="?", default=14)
    parser.add_argument("n_max", type=int, nargs="?", default=9)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    report = sweep_smf(args.k_max, args.m_max, args.n_max, jobs=args.jobs)
    print(report.to_text())
    return 1 if report.disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
