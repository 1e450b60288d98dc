#!/usr/bin/env python3
"""Full cross-validation sweep: formula vs catalog vs brute-force oracle.

Covers every product split and the extension for each n in range.  The
oracle is the expensive leg; --long raises its ceiling from 8 to 10.

    python3 scripts/cross_validate.py --max-n 8
    python3 scripts/cross_validate.py --max-n 10 --long --workers 8
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from braidinv import (
    GroupSpec,
    ext_dimension,
    oracle_dimension,
    product_dimension,
    total_rank_check,
)


@dataclass
class Config:
    max_n: int
    long_running: bool
    workers: int


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--long", action="store_true", dest="long_running")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args(argv)
    limit = 10 if args.long_running else 8
    if not 1 <= args.max_n <= limit:
        parser.error("--max-n must be in 1..%d" % limit)
    return Config(args.max_n, args.long_running, args.workers)


def check(name: str, formula, catalog, oracle) -> bool:
    ok = formula.as_dict() == catalog.as_dict() == oracle.as_dict()
    print("%-18s %s" % (name, "OK" if ok else "MISMATCH"))
    if not ok:
        print("  formula: %s" % formula.as_dict())
        print("  catalog: %s" % catalog.as_dict())
        print("  oracle:  %s" % oracle.as_dict())
    return ok


def main(argv=None) -> int:
    config = parse_args(argv)
    ok = True
    for n in range(2, config.max_n + 1):
        t0 = time.monotonic()
        for q in range(n // 2 + 1):
            group = GroupSpec.product(n, q)
            ok &= check(
                group.describe(),
                product_dimension(n, q, method="formula"),
                product_dimension(n, q, method="catalog"),
                oracle_dimension(
                    n, group, long_running=config.long_running, workers=config.workers
                ),
            )
        if n % 2 == 0:
            group = GroupSpec.extension(n // 2)
            ok &= check(
                group.describe(),
                ext_dimension(n, method="formula")[1],
                ext_dimension(n, method="catalog")[1],
                oracle_dimension(
                    n, group, long_running=config.long_running, workers=config.workers
                ),
            )
        rank_ok = total_rank_check(n, long_running=config.long_running)
        ok &= rank_ok
        print(
            "n=%d rank-identity %s (%.1fs)"
            % (n, "OK" if rank_ok else "MISMATCH", time.monotonic() - t0),
            file=sys.stderr,
        )
    print("all checks %s" % ("passed" if ok else "FAILED"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
