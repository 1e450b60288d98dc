#!/usr/bin/env python3
"""Tabulate graded invariant dimensions over a range of n.

Product tables list every split 0 <= q <= n/2; even n adds the extension
row.  Output is a flat CSV on stdout so downstream plotting stays trivial.

    python3 scripts/dimension_tables.py --max-n 12
    python3 scripts/dimension_tables.py --max-n 20 --ext-only
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from braidinv import ext_dimension, product_dimension


@dataclass
class Config:
    max_n: int
    ext_only: bool


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--ext-only", action="store_true")
    args = parser.parse_args(argv)
    if args.max_n < 1:
        parser.error("--max-n must be positive")
    return Config(max_n=args.max_n, ext_only=args.ext_only)


def main(argv=None) -> int:
    config = parse_args(argv)
    print("group,n,q,degree,dim")
    for n in range(1, config.max_n + 1):
        if not config.ext_only:
            for q in range(n // 2 + 1):
                table = product_dimension(n, q)
                for i in range(table.max_degree + 1):
                    if table[i]:
                        print("prod,%d,%d,%d,%d" % (n, q, i, table[i]))
        if n % 2 == 0:
            _, table = ext_dimension(n)
            for i in range(table.max_degree + 1):
                if table[i]:
                    print("ext,%d,%d,%d,%d" % (n, n // 2, i, table[i]))
        print("progress n=%d done" % n, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
