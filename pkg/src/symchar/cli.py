"""Command-line front end.

Every report is a dict with ``version``, ``schema_version``, ``config``,
``rows`` and ``summary``.  Exact numbers are written as strings (``"p/q"``
for rationals); only Monte Carlo fields are floats.

Exit codes: 0 success, 2 bad input or violated precondition, 3 failed
internal check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from . import __version__
from .bounds import component_histogram, scan_min_a
from .characters import mn_ratio, normalized_character, sigma_sf, support_parts
from .cumulants import free_cumulant_oracle, free_cumulant_sf
from .partitions import YoungDiagram, corpus, falling_factorial, support_types
from .permutations import (
    brute_force_count_by_length,
    count_by_length,
    parse_cycle_type,
)
from .randmat import exact_moment, mc_moment

SCHEMA_VERSION = 1
BRUTE_FORCE_MAX = 7

BOUND_SCAN_COLUMNS = ("n", "lambda", "cycle_type", "lhs", "base", "min_a")


class InternalCheckFailed(Exception):
    """Two routes that must agree did not."""


def exact(x) -> str:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return str(Fraction(x))


def ct_str(ct: Sequence[int]) -> str:
    return ",".join(map(str, ct))


# ---------------------------------------------------------------------------
# commands; each returns (rows, summary)


def cmd_character(args):
    lam = YoungDiagram.parse(args.lam)
    ct = parse_cycle_type(args.cycles)
    res = normalized_character(lam, ct)
    oracle = mn_ratio(lam, ct)
    if oracle != res.ratio:
        raise InternalCheckFailed(f"coloring sum gives {res.ratio}, Murnaghan-Nakayama gives {oracle}")
    summary = {
        "lambda": str(lam),
        "cycle_type": ct_str(ct),
        "l": res.degree_l,
        "falling_factorial": exact(res.falling_factorial),
        "sigma": exact(res.sigma_value),
        "ratio": exact(res.ratio),
    }
    return [], summary


def cmd_sigma(args):
    lam = YoungDiagram.parse(args.lam)
    ct = parse_cycle_type(args.cycles)
    return [], {"lambda": str(lam), "cycle_type": ct_str(ct), "sigma": exact(sigma_sf(lam, ct))}


def cmd_cumulant(args):
    lam = YoungDiagram.parse(args.lam)
    sf = free_cumulant_sf(lam, args.l)
    oracle = free_cumulant_oracle(lam, args.l)
    summary = {
        "lambda": str(lam),
        "l": args.l,
        "index": args.l + 1,
        "sf": exact(sf),
        "oracle": exact(oracle),
        "match": sf == oracle,
    }
    if sf != oracle:
        raise InternalCheckFailed(f"R_{args.l + 1}: coloring sum {sf} != transition measure {oracle}")
    return [], summary


def cmd_bound_scan(args):
    result = scan_min_a(args.n_max, args.n_min)
    rows = [
        {
            "n": row.n,
            "lambda": str(row.lam),
            "cycle_type": ct_str(row.cycle_type),
            "lhs": exact(row.report.lhs),
            "base": exact(row.report.rhs_base),
            "min_a": exact(row.report.min_feasible_a),
        }
        for row in result.rows
    ]
    w = result.witness
    summary = {
        "instances": len(rows),
        "max_min_a": exact(result.max_min_a),
        "witness": None if w is None else {"lambda": str(w.lam), "cycle_type": ct_str(w.cycle_type)},
        "holds_at_a": exact(args.a),
        "holds": result.holds_everywhere(args.a),
    }
    return rows, summary


def cmd_mc_validate(args):
    lam = YoungDiagram.parse(args.lam)
    ct = parse_cycle_type(args.cycles)
    ex = exact_moment(lam, ct)
    est = mc_moment(lam, ct, args.samples, args.seed, workers=args.workers)
    summary = {
        "lambda": str(lam),
        "cycle_type": ct_str(ct),
        "exact": exact(ex),
        "mean": est.mean,
        "std_error": est.std_error,
        "z_score": est.z_score(ex),
        "samples": est.samples,
        "seed": est.seed,
        "algorithm": est.algorithm,
    }
    return [], summary


def cmd_count(args):
    l = args.stirling
    if l < 1:
        raise ValueError("--stirling must be positive")
    counts = count_by_length(l)
    rows = [
        {"i": i, "count": exact(c), "bound": exact(l ** (2 * i)), "ok": math.factorial(i) * c <= l ** (2 * i)}
        for i, c in enumerate(counts)
    ]
    summary = {
        "l": l,
        "counts": ",".join(map(str, counts)),
        "bound": "ok" if all(r["ok"] for r in rows) else "violated",
    }
    if l <= BRUTE_FORCE_MAX:
        brute = brute_force_count_by_length(l)
        summary["brute_force_match"] = brute == counts
        if brute != counts:
            raise InternalCheckFailed(f"brute force {brute} != generating polynomial {counts}")
    return rows, summary


def _compare_one_type(args: tuple[tuple[int, ...], int]) -> list[dict]:
    ct, n_max = args
    l = sum(ct)
    rows = []
    for lam in corpus(n_max, max(l, 1)):
        sf = sigma_sf(lam, ct)
        mn = falling_factorial(lam.size, l) * mn_ratio(lam, ct)
        rows.append({"n": lam.size, "lambda": str(lam), "cycle_type": ct_str(ct) or "1",
                     "sigma_sf": exact(sf), "sigma_mn": exact(mn), "match": sf == mn})
    return rows


def cmd_compare_oracles(args):
    types = list(support_types(min(args.n_max, 8)))
    jobs = [(ct, args.n_max) for ct in types]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            chunks = list(pool.map(_compare_one_type, jobs))
    else:
        chunks = [_compare_one_type(job) for job in jobs]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r["n"], r["lambda"], r["cycle_type"]))
    bad = [r for r in rows if not r["match"]]
    summary = {"instances": len(rows), "mismatches": len(bad), "all_match": not bad}
    if bad:
        raise InternalCheckFailed(f"{len(bad)} mismatches, first {bad[0]}")
    return rows, summary


def cmd_histogram(args):
    report = component_histogram(args.l)
    rows = [
        {"components": s, "count": c, "min_c0": exact(report.min_c0[s]) if s in report.min_c0 else ""}
        for s, c in report.histogram.items()
    ]
    return rows, {"l": args.l, "total": sum(report.histogram.values())}


COMMANDS = {
    "character": cmd_character,
    "sigma": cmd_sigma,
    "cumulant": cmd_cumulant,
    "bound-scan": cmd_bound_scan,
    "mc-validate": cmd_mc_validate,
    "count": cmd_count,
    "compare-oracles": cmd_compare_oracles,
    "histogram": cmd_histogram,
}


# ---------------------------------------------------------------------------
# argument parsing and output


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--workers", type=_positive_int, default=1)

    parser = argparse.ArgumentParser(prog="symchar", description="Normalized characters via bipartite colorings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def lam_ct(p, cycles=True):
        p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 4,2,1")
        if cycles:
            p.add_argument("--cycles", required=True, help="cycle type, e.g. 3,2")

    lam_ct(sub.add_parser("character", parents=[common], help="character ratio and normalized character"))
    lam_ct(sub.add_parser("sigma", parents=[common], help="normalized character only"))

    p = sub.add_parser("cumulant", parents=[common], help="free cumulant R_{l+1} by two routes")
    lam_ct(p, cycles=False)
    p.add_argument("--l", type=_positive_int, required=True)

    p = sub.add_parser("bound-scan", parents=[common], help="least constant in the character bound over a corpus")
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--n-min", type=_positive_int, default=1)
    p.add_argument("--a", type=Fraction, default=Fraction(2000))

    p = sub.add_parser("mc-validate", parents=[common], help="Monte Carlo trace moment against the exact value")
    lam_ct(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("count", parents=[common], help="permutations of S_l by length")
    p.add_argument("--stirling", type=int, required=True)

    p = sub.add_parser("compare-oracles", parents=[common], help="coloring sum against Murnaghan-Nakayama")
    p.add_argument("--n-max", type=_positive_int, required=True)

    p = sub.add_parser("histogram", parents=[common], help="pruned-graph components of minimal factorizations")
    p.add_argument("--l", type=int, required=True)
    return parser


def _config(args) -> dict:
    out = {}
    for key, value in sorted(vars(args).items()):
        name = "lambda" if key == "lam" else key
        out[name] = exact(value) if isinstance(value, Fraction) else value
    return out


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        rows = report["rows"] or [report["summary"]]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = [f"symchar {report['version']} (schema {report['schema_version']})"]
    lines += [f"config.{k}: {v}" for k, v in report["config"].items()]
    lines += [f"{k}: {v}" for k, v in report["summary"].items()]
    for row in report["rows"]:
        lines.append("  ".join(f"{k}={v}" for k, v in row.items()))
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    report = {"version": __version__, "schema_version": SCHEMA_VERSION, "config": _config(args)}
    try:
        rows, summary = COMMANDS[args.command](args)
    except InternalCheckFailed as exc:
        print(f"symchar: internal check failed: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"symchar: {exc}", file=sys.stderr)
        return 2
    report["summary"] = summary
    report["rows"] = rows
    out.write(render(report, args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
