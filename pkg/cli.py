"""
Gabra — Command Line
Parses group specs, runs the unit-group pipelines, and writes text tables or
JSON reports to stdout. Diagnostics go to stderr.

    python cli.py check --group q8 --prime 2 --format json
"""
from __future__ import annotations

import argparse
import asyncio
import json
import logging
import sys
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from sympy import isprime

from config import (
    DEFAULT_SEED,
    EXIT_BAD_INPUT,
    EXIT_CAP_EXCEEDED,
    EXIT_OK,
    HELP_EPILOG,
    LOG_LEVEL,
    SWEEP_CATALOG,
    SWEEP_CONCURRENCY,
    SWEEP_MAX_ORDER,
    resolve_cap,
)
from catalog import build_group
from galgebra import AlgebraContext, parse_element, random_normalized_unit
from unitgroup import (
    CapExceededError,
    ConjectureReport,
    check_conjecture,
    closure,
    embedded_group,
    enumerate_normalized_units,
    symmetric_units,
)

logger = logging.getLogger("gabra")

SUBCOMMANDS = ("check", "units", "symmetric", "closure", "sweep")


@dataclass
class CliConfig:
    subcommand: str
    group_spec: str
    prime: int
    cap: int
    output_format: str = "text"
    list_elements: bool = False
    seed: int = DEFAULT_SEED
    with_symmetric: bool = False
    elements: list[str] = field(default_factory=list)
    random_units: int = 0

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if not isprime(self.prime):
            raise ValueError(f"--prime must be a prime, got {self.prime}")
        if self.cap < 1:
            raise ValueError(f"--cap must be >= 1, got {self.cap}")
        if self.random_units < 0:
            raise ValueError(f"--random must be >= 0, got {self.random_units}")


# === Output ===

def _emit_json(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _format_report_text(report: ConjectureReport) -> str:
    rows = list(report.to_dict().items())
    rows += [("H_kind", report.H_kind), ("H_symmetric_members", report.H_symmetric_members)]
    width = max(len(k) for k, _ in rows)
    lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
    relation = "=" if report.conjecture_holds else "!="
    lines.append(f"verdict: V(K{report.group_name}) {relation} <G, S*>")
    return "\n".join(lines)


def _emit_listing(cfg: CliConfig, kind: str, units):
    if cfg.output_format == "json":
        out = {"group": units.context.group.name, "prime": cfg.prime, "kind": kind, "order": len(units)}
        if cfg.list_elements:
            out["elements"] = [str(x) for x in units]
        _emit_json(out)
        return
    print(f"{kind} {units.context.group.name} p={cfg.prime} order={len(units)}")
    if cfg.list_elements:
        for x in units:
            print(x)


# === Commands ===

def _context(cfg: CliConfig) -> AlgebraContext:
    return AlgebraContext(build_group(cfg.group_spec), cfg.prime)


def run_check(cfg: CliConfig) -> int:
    report = check_conjecture(cfg.group_spec, cfg.prime, cfg.cap)
    if cfg.output_format == "json":
        _emit_json(report.to_dict())
    else:
        print(_format_report_text(report))
    return EXIT_OK


def run_units(cfg: CliConfig) -> int:
    units = enumerate_normalized_units(_context(cfg), cfg.cap)
    _emit_listing(cfg, "units", units)
    return EXIT_OK


def run_symmetric(cfg: CliConfig) -> int:
    units = symmetric_units(_context(cfg), cfg.cap)
    _emit_listing(cfg, "symmetric", units)
    return EXIT_OK


def run_closure(cfg: CliConfig) -> int:
    """Closure of the embedded group plus whatever extra generators were asked for."""
    ctx = _context(cfg)
    generators = list(embedded_group(ctx))
    if cfg.with_symmetric:
        generators += list(symmetric_units(ctx, cfg.cap))
    generators += [parse_element(ctx, text) for text in cfg.elements]
    if cfg.random_units:
        rng = np.random.default_rng(cfg.seed)
        logger.info("sampling %d random units with seed %d", cfg.random_units, cfg.seed)
        generators += [random_normalized_unit(ctx, rng) for _ in range(cfg.random_units)]
    units = closure(ctx, generators, cfg.cap)
    _emit_listing(cfg, "closure", units)
    return EXIT_OK


def sweep_specs(p: int) -> list[str]:
    """Catalog specs of order <= SWEEP_MAX_ORDER for this prime, in row order."""
    if p in SWEEP_CATALOG:
        return list(SWEEP_CATALOG[p])
    specs, m = [], p
    while m <= SWEEP_MAX_ORDER:
        specs.append(f"c{m}")
        m *= p
    return specs


def _sweep_row(spec: str, p: int, cap: int) -> dict:
    try:
        return check_conjecture(spec, p, cap).to_dict()
    except CapExceededError as e:
        logger.warning("sweep: %s skipped (%s)", spec, e)
        return {
            "group": spec,
            "prime": p,
            "order_group": build_group(spec).order,
            "skipped": True,
            "reason": str(e),
        }


async def _sweep_rows(cfg: CliConfig) -> list[dict]:
    semaphore = asyncio.Semaphore(SWEEP_CONCURRENCY)

    async def _one(spec: str) -> dict:
        async with semaphore:
            return await asyncio.to_thread(_sweep_row, spec, cfg.prime, cfg.cap)

    # gather keeps input order, so rows come out in catalog order
    return await asyncio.gather(*(_one(spec) for spec in sweep_specs(cfg.prime)))


def run_sweep(cfg: CliConfig) -> int:
    rows = asyncio.run(_sweep_rows(cfg))
    if cfg.output_format == "json":
        _emit_json(rows)
        return EXIT_OK
    if not rows:
        print(f"sweep p={cfg.prime}: no catalog groups")
        return EXIT_OK
    table = pd.DataFrame(rows)
    if "skipped" in table:
        table["skipped"] = table["skipped"].fillna(False).astype(bool)
        table = table.drop(columns=["reason"])
    print(table.fillna("-").to_string(index=False))
    return EXIT_OK


COMMANDS = {
    "check": run_check,
    "units": run_units,
    "symmetric": run_symmetric,
    "closure": run_closure,
    "sweep": run_sweep,
}


# === Argument parsing ===

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gabra",
        description="Normalized and symmetric units of modular group algebras.",
        epilog=HELP_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, needs_group: bool = True):
        if needs_group:
            p.add_argument("--group", required=True, help="group spec, e.g. q8 or c4xc2")
        p.add_argument("--prime", type=int, required=True, help="characteristic p")
        p.add_argument("--cap", type=int, default=None, help="largest set to build (default: GABRA_CAP or 2**24)")
        p.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    common(sub.add_parser("check", help="test V(KG) = <G, S*>"))
    for name, text in [("units", "list V(KG)"), ("symmetric", "list S*")]:
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--list", action="store_true", dest="list_elements")
    p = sub.add_parser("closure", help="subgroup generated by G and extra units")
    common(p)
    p.add_argument("--list", action="store_true", dest="list_elements")
    p.add_argument("--with-symmetric", action="store_true", help="add S* to the generators")
    p.add_argument("--element", action="append", default=[], help="add a unit given as a formal sum")
    p.add_argument("--random", type=int, default=0, dest="random_units", help="add N seeded random units")
    common(sub.add_parser("sweep", help="check every small catalog group for a prime"), needs_group=False)
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        subcommand=args.subcommand,
        group_spec=getattr(args, "group", ""),
        prime=args.prime,
        cap=resolve_cap(args.cap),
        output_format=args.output_format,
        list_elements=getattr(args, "list_elements", False),
        seed=args.seed,
        with_symmetric=getattr(args, "with_symmetric", False),
        elements=getattr(args, "element", []),
        random_units=getattr(args, "random_units", 0),
    )


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_BAD_INPUT

    level = logging.DEBUG if args.verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        cfg = _config_from_args(args)
        return COMMANDS[cfg.subcommand](cfg)
    except CapExceededError as e:
        print(f"error: cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except ValueError as e:
        # spec, modularity, parse and precondition errors all derive from ValueError
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
