"""Command-line front end: dimension tables, cross-checks, set listings.

Exit codes are a stable contract: 0 success, 1 verification mismatch,
2 usage error, 3 internal consistency failure, 4 beyond supported size.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from .character_oracle import GroupSpec, oracle_dimension
from .cycle_invariants import (
    enumerate_Pi,
    enumerate_selfdual,
    selfdual_count_closed_form,
)
from .errors import CapabilityError, InternalConsistencyError
from .extension_catalog import (
    _ep_members,
    count_EP_closed_form,
    count_KP_closed_form,
    epsilon_sign,
    ext_dimension,
)
from .product_catalog import PoincareTable, product_dimension

SPIN_NOTE = "upper container for H*(S(Σ_g;c))"

VERIFY_PLAIN_LIMIT = 8


@dataclass
class RunConfig:
    """Parsed invocation: one command plus its knobs."""

    command: str
    n: int = 0
    q: Optional[int] = None
    group: str = "prod"
    degree: Optional[int] = None
    fmt: str = "table"
    verbose: bool = False
    workers: int = 1
    long_running: bool = False
    method: str = "formula"
    necklace_kind: str = "pi"
    lam: int = 0
    d: int = 0
    genus: int = 0
    notes: List[str] = field(default_factory=list)

    def resolved_q(self) -> int:
        if self.group == "ext":
            if self.n % 2:
                raise ValueError("the extension group needs even n")
            if self.q is not None and self.q != self.n // 2:
                raise ValueError("the extension group fixes q = n/2")
            return self.n // 2
        if self.q is None:
            raise ValueError("--q is required for the product group")
        if not 0 <= self.q <= self.n // 2:
            raise ValueError("need 0 <= q <= n/2")
        return self.q


def _filtered(table: PoincareTable, degree: Optional[int]) -> List[tuple]:
    rows = [(i, table[i]) for i in range(table.max_degree + 1) if table[i]]
    if degree is not None:
        rows = [(i, d) for i, d in rows if i == degree]
    return rows


def render_table(config: RunConfig, table: PoincareTable) -> str:
    """One fixed-width line per degree, then the total."""
    lines = list(config.notes)
    rows = _filtered(table, config.degree)
    width = max([len(str(i)) for i, _ in rows] + [6])
    lines.append("%*s  %s" % (width, "degree", "dim"))
    for i, d in rows:
        lines.append("%*d  %d" % (width, i, d))
    lines.append("total %d" % sum(d for _, d in rows))
    return "\n".join(lines)


def render_json(config: RunConfig, table: PoincareTable) -> str:
    rows = _filtered(table, config.degree)
    doc = {
        "n": config.n,
        "q": config.resolved_q(),
        "group": config.group,
        "graded": [{"degree": i, "dim": d} for i, d in rows],
        "total": sum(d for _, d in rows),
        "provenance": {"method": config.method},
    }
    if config.notes:
        doc["annotation"] = " ".join(config.notes)
    return json.dumps(doc, indent=2)


def render_csv_rows(rows) -> str:
    return "\n".join(["degree,dim"] + ["%d,%d" % (i, d) for i, d in rows])


def _emit_dim(config: RunConfig, table: PoincareTable) -> None:
    if config.fmt == "json":
        print(render_json(config, table))
    elif config.fmt == "csv":
        for note in config.notes:
            print(note, file=sys.stderr)
        print(render_csv_rows(_filtered(table, config.degree)))
    else:
        print(render_table(config, table))


def _dim_table(config: RunConfig) -> PoincareTable:
    q = config.resolved_q()
    if config.group == "ext":
        _, table = ext_dimension(config.n, method=config.method)
        return table
    return product_dimension(config.n, q, method=config.method)


def cmd_dim(config: RunConfig) -> int:
    _emit_dim(config, _dim_table(config))
    return 0


def cmd_spin(config: RunConfig) -> int:
    """Dimension table reindexed by genus; an upper bound, not the spin
    mapping class group computation itself."""
    if config.genus < 0:
        raise ValueError("genus must be non-negative")
    config.n = 2 * config.genus + 2
    config.group = "ext"
    config.q = None
    config.notes.append("# genus %d (n = %d): %s" % (config.genus, config.n, SPIN_NOTE))
    return cmd_dim(config)


def _verify_one(config: RunConfig, q: int) -> bool:
    if config.group == "ext":
        formula = ext_dimension(config.n, method="formula")[1]
        catalog = ext_dimension(config.n, method="catalog")[1]
        group = GroupSpec.extension(q)
    else:
        formula = product_dimension(config.n, q, method="formula")
        catalog = product_dimension(config.n, q, method="catalog")
        group = GroupSpec.product(config.n, q)
    oracle = oracle_dimension(
        config.n, group, long_running=config.long_running, workers=config.workers
    )
    top = max(formula.max_degree, catalog.max_degree, oracle.max_degree)
    print("%s  %6s %7s %7s %6s" % (group.describe(), "degree", "formula", "catalog", "oracle"))
    ok = True
    for i in range(top + 1):
        f, c, o = formula[i], catalog[i], oracle[i]
        verdict = "OK" if f == c == o else "MISMATCH"
        ok = ok and f == c == o
        if f or c or o:
            print("%s  %6d %7d %7d %6d  %s" % (" " * len(group.describe()), i, f, c, o, verdict))
    return ok


def cmd_verify(config: RunConfig) -> int:
    """Formula vs catalog vs oracle, degree by degree; exit 0 iff equal."""
    if config.n > VERIFY_PLAIN_LIMIT and not config.long_running:
        raise CapabilityError(
            "verification beyond n = %d needs --long" % VERIFY_PLAIN_LIMIT
        )
    if config.group == "prod" and config.q is None:
        qs = list(range(config.n // 2 + 1))
    else:
        qs = [config.resolved_q()]
    ok = all([_verify_one(config, q) for q in qs])
    print("verification %s" % ("OK" if ok else "FAILED"))
    return 0 if ok else 1


def cmd_necklace(config: RunConfig) -> int:
    if config.necklace_kind == "selfdual":
        members = enumerate_selfdual(config.d)
        print("enum=%d formula=%d" % (len(members), selfdual_count_closed_form(config.d)))
        if config.verbose:
            for chi in members:
                print(" ", chi)
        return 0
    cycles = enumerate_Pi(config.lam, config.d)
    for chi in cycles:
        print(chi)
    print("%d cycles" % len(cycles))
    return 0


def cmd_ep(config: RunConfig) -> int:
    """Kernel-pairing listing: each label with its block data and sign."""
    if config.n % 2:
        raise ValueError("only even n has the extension catalog")
    rows = []
    for pmp, label in _ep_members(config.n):
        sign = epsilon_sign(pmp)
        rows.append(
            {
                "partition": str(label.partition),
                "degree": label.degree,
                "cycles": [str(c) for c in label.cycles],
                "pairing": [
                    {"part": bp.value, "mult": bp.mult, "k": bp.k}
                    for bp in pmp.block_structure()
                ],
                "sign": sign,
                "kernel": sign < 0,
            }
        )
    ep_total = len(rows)
    kp_total = sum(1 for r in rows if r["kernel"])
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "n": config.n,
                    "members": rows,
                    "ep": ep_total,
                    "kp": kp_total,
                    "ep_formula": count_EP_closed_form(config.n),
                    "kp_formula": count_KP_closed_form(config.n),
                },
                indent=2,
            )
        )
        return 0
    for r in rows:
        print(
            "%-14s deg=%d sign=%+d kernel=%-5s cycles=%s"
            % (
                r["partition"],
                r["degree"],
                r["sign"],
                r["kernel"],
                " ".join(r["cycles"]),
            )
        )
    print(
        "|EP|=%d |KP|=%d closed-form EP=%d KP=%d"
        % (ep_total, kp_total, count_EP_closed_form(config.n), count_KP_closed_form(config.n))
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidinv",
        description="Graded dimensions of invariant braid cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_group=True):
        p.add_argument("--format", default="table", choices=("table", "json", "csv"))
        p.add_argument("--degree", type=int, default=None)
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--workers", type=int, default=max(os.cpu_count() or 1, 1))
        p.add_argument("--long", action="store_true", dest="long_running")
        if with_group:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--q", type=int, default=None)
            p.add_argument("--group", default="prod", choices=("prod", "ext"))

    p_dim = sub.add_parser("dim", help="graded dimension table")
    common(p_dim)
    p_dim.add_argument("--method", default="formula", choices=("formula", "catalog"))

    p_verify = sub.add_parser("verify", help="formula vs catalog vs oracle")
    common(p_verify)

    p_neck = sub.add_parser("necklace", help="invariant cycle listings")
    kind = p_neck.add_subparsers(dest="necklace_kind", required=True)
    p_pi = kind.add_parser("pi", help="the cycles of one part and weight")
    p_pi.add_argument("--lambda", type=int, required=True, dest="lam")
    p_pi.add_argument("--d", type=int, required=True)
    p_sd = kind.add_parser("selfdual", help="self-dual count vs closed form")
    p_sd.add_argument("--d", type=int, required=True)
    for p in (p_pi, p_sd):
        p.add_argument("--verbose", action="store_true")

    p_ep = sub.add_parser("ep", help="extension catalog listing")
    common(p_ep)

    p_spin = sub.add_parser("spin", help="table indexed by hyperelliptic genus")
    common(p_spin, with_group=False)
    p_spin.add_argument("--genus", type=int, required=True)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for name in (
        "n",
        "q",
        "degree",
        "verbose",
        "workers",
        "long_running",
        "method",
        "necklace_kind",
        "lam",
        "d",
        "genus",
    ):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    if hasattr(args, "group"):
        config.group = args.group
    if hasattr(args, "format"):
        config.fmt = args.format
    if getattr(args, "q", "missing") is None:
        config.q = None
    return config


COMMANDS = {
    "dim": cmd_dim,
    "verify": cmd_verify,
    "necklace": cmd_necklace,
    "ep": cmd_ep,
    "spin": cmd_spin,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    config = _config_from_args(args)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[config.command](config)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return 3
    except CapabilityError as exc:
        print("capability limit: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
