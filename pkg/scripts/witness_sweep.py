#!/usr/bin/env python3
"""Sweep witness counts across (N, L) cells and print a CSV table.

Rows past L = 2N+1 are exploratory: no closed-form count is known there.

Usage: python scripts/witness_sweep.py [--n-min 3] [--n-max 5] [--offset 1] [--jobs 4]
"""

import argparse
import csv
import sys

from setsort.enumeration import witness_table


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--offset", type=int, default=1,
                        help="scan L up to 2N + offset")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    writer = csv.writer(sys.stdout)
    writer.writerow(["n_letters", "length", "total_classes", "witness_count"])
    for row in witness_table(args.n_min, args.n_max, args.offset, jobs=args.jobs):
        writer.writerow(row)


if __name__ == "__main__":
    main()
