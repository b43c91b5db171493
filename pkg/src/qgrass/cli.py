"""Command-line front end.

Data goes to stdout exactly as serialized; diagnostics go to stderr.  Exit
codes: 0 success (and no failed cases), 1 at least one failed case, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .grassmann import subalgebra_hilbert
from .harness import DEFAULT_CONFIG, ConfigError, Report, sweep, validate_config
from .kschur import k_schur
from .lagrangian import lg_subalgebra_hilbert
from .partitions import Partition, bounded_from_core, core_from_bounded, k_conjugate, vacancy
from .qseries import QPoly, grass_subalgebra_formula, lg_subalgebra_formula
from .schur import SymVector

FORMATS = ("text", "md", "json")


def _emit_qpoly(p: QPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.json_coeffs(), separators=(",", ":"))
    body = ",".join(str(c) for c in p.coeffs()) if not p.is_zero else "0"
    return f"`{body}`" if fmt == "md" else body


def _emit_partition(p: Partition, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(str(p))
    return f"`{p}`" if fmt == "md" else str(p)


def _emit_int(value: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(value)
    return f"`{value}`" if fmt == "md" else str(value)


def _emit_symvector(v: SymVector, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(v.to_json_obj(), separators=(",", ":"))
    rows = [(str(p) or "-", str(c)) for p, c in ((q, v.coeff(q)) for q in v.support())]
    if fmt == "md":
        lines = ["| partition | coeff |", "| --- | --- |"]
        lines += [f"| {a} | {b} |" for a, b in rows]
        return "\n".join(lines)
    return "\n".join(f"s({a}): {b}" for a, b in rows) if rows else "0"


def _emit_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "md":
        return report.to_markdown()
    return report.to_text()


def _parse_partition(text: str) -> Partition:
    return Partition.parse(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format")

    parser = argparse.ArgumentParser(
        prog="qgrass",
        description="Exact partition combinatorics, q-binomial identities, and "
        "Hilbert series of filtered Grassmannian cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilb", parents=[common], help="computed Hilbert series of a filtered subalgebra")
    p.add_argument("space", choices=("grass", "lg"))
    p.add_argument("--ell", type=int, help="rows of the ambient box (grass)")
    p.add_argument("--k", type=int, help="columns of the ambient box (grass)")
    p.add_argument("--n", type=int, help="staircase order (lg)")
    p.add_argument("--m", type=int, help="generation degree bound; defaults to the full ring")

    p = sub.add_parser("formula", parents=[common], help="closed-form series for a filtered subalgebra")
    p.add_argument("which", choices=("rt", "lg"))
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("kconj", parents=[common], help="k-conjugate of a k-bounded partition")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("partition")

    p = sub.add_parser("core", parents=[common], help="core of a bounded partition (or back)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--to-bounded", action="store_true",
                   help="treat the input as a (k+1)-core and apply the box-removal map")
    p.add_argument("partition")

    p = sub.add_parser("vacancy", parents=[common], help="vacancy index of a partition in a width-k box")
    p.add_argument("--ell", type=int, help="optional row bound to validate containment")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("partition")

    p = sub.add_parser("kschur", parents=[common], help="Schur expansion of a k-Schur function")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("partition")

    p = sub.add_parser("verify", parents=[common], help="run identity and conjecture sweeps")
    p.add_argument(
        "family",
        choices=("summand", "rt", "h-basis", "kschur-basis", "lg", "identities", "all"),
    )
    p.add_argument("--max", type=int, help="clamp every grid bound to this value")
    p.add_argument("--ell", type=int, help="restrict box families to one ell (with --k)")
    p.add_argument("--k", type=int, help="restrict box families to one k (with --ell)")
    p.add_argument("--n", type=int, help="restrict staircase families to one n")
    p.add_argument("--jobs", type=int, help="worker count; defaults to available parallelism")
    p.add_argument("--keep-going", action="store_true",
                   help="do not abort when a theorem case fails")
    p.add_argument("--config", help="JSON file with a full sweep configuration")
    return parser


def _verify_config(args) -> dict:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            return validate_config(json.load(fh))
    if (args.ell is None) != (args.k is None):
        raise ConfigError("--ell and --k must be given together")
    names = {
        "summand": ["summand"],
        "rt": ["rt"],
        "h-basis": ["h-basis"],
        "kschur-basis": ["kschur-basis"],
        "lg": ["lg"],
        "identities": ["prop51", "decomp-vacant", "decomp-shifted", "vacancy"],
        "all": list(DEFAULT_CONFIG["families"]),
    }[args.family]
    families = {}
    for name in names:
        spec = dict(DEFAULT_CONFIG["families"][name])
        if args.max is not None:
            spec["max"] = min(spec["max"], args.max)
        if args.ell is not None and name in ("summand", "rt", "h-basis", "kschur-basis", "decomp-vacant", "vacancy"):
            spec = {"pairs": [[args.ell, args.k]]}
        if args.n is not None and name in ("lg", "prop51", "decomp-shifted"):
            spec = {"ns": [args.n]}
        families[name] = spec
    return validate_config({"families": families})


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format
    try:
        if args.command == "hilb":
            if args.space == "grass":
                if args.ell is None or args.k is None:
                    raise ValueError("hilb grass requires --ell and --k")
                m = min(args.ell, args.k) if args.m is None else args.m
                print(_emit_qpoly(subalgebra_hilbert(args.ell, args.k, m), fmt))
            else:
                if args.n is None:
                    raise ValueError("hilb lg requires --n")
                m = args.n if args.m is None else args.m
                print(_emit_qpoly(lg_subalgebra_hilbert(args.n, m), fmt))
        elif args.command == "formula":
            if args.which == "rt":
                if args.ell is None or args.k is None:
                    raise ValueError("formula rt requires --ell and --k")
                m = min(args.ell, args.k) if args.m is None else args.m
                print(_emit_qpoly(grass_subalgebra_formula(args.ell, args.k, m), fmt))
            else:
                if args.n is None:
                    raise ValueError("formula lg requires --n")
                m = args.n if args.m is None else args.m
                print(_emit_qpoly(lg_subalgebra_formula(args.n, m), fmt))
        elif args.command == "kconj":
            lam = _parse_partition(args.partition)
            print(_emit_partition(k_conjugate(lam, args.k), fmt))
        elif args.command == "core":
            lam = _parse_partition(args.partition)
            if args.to_bounded:
                print(_emit_partition(bounded_from_core(lam, args.k), fmt))
            else:
                print(_emit_partition(core_from_bounded(lam, args.k), fmt))
        elif args.command == "vacancy":
            lam = _parse_partition(args.partition)
            if args.ell is not None and len(lam) > args.ell:
                raise ValueError(f"{lam} has more than {args.ell} rows")
            print(_emit_int(vacancy(lam, args.k), fmt))
        elif args.command == "kschur":
            lam = _parse_partition(args.partition)
            print(_emit_symvector(k_schur(lam, args.k), fmt))
        elif args.command == "verify":
            config = _verify_config(args)
            report = sweep(config, jobs=args.jobs, keep_going=args.keep_going or None)
            print(_emit_report(report, fmt))
            return 0 if report.ok else 1
        return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
