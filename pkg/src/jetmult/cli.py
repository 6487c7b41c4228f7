"""jetmult command line.

    jetmult ideal --r R --m M
    jetmult jet-general --poly P [--poly P ...] --m M
    jetmult components --r R --m M
    jetmult verify --r R --m M [--seeds S1,S2,...] [--trials K] [--random] [--jobs J]

Exit codes: 0 success, 1 inconsistency or oracle failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import secrets
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import __version__
from .components import Census, census
from .jetideal import JetIdeal, build_jet_ideal_general, monomial_jet_generators
from .lengthoracle import DEFAULT_BOUND, DEFAULT_N_MAX, OracleError, oracle_multiplicity
from .polycore import ParseError, parse_polynomial

# base of the default seed list seeds = [base, base + 1, ...]; JETMULT_SEED overrides
DEFAULT_SEED_BASE = 1729


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed_list(text: str) -> list[int]:
    try:
        seeds = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be comma-separated integers, got {text!r}")
    if any(not 0 <= s < 2**64 for s in seeds):
        raise argparse.ArgumentTypeError("seeds must be 64-bit unsigned integers")
    return seeds


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jetmult", description="Jet schemes of x_1...x_r: ideals, components, multiplicities.")
    parser.add_argument("--version", action="version", version=f"jetmult {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, with_r: bool = True):
        if with_r:
            p.add_argument("--r", type=_positive, required=True, help="number of monomial factors")
        p.add_argument("--m", type=_nonneg, required=True, help="jet order")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", help="write output to FILE instead of stdout")
        p.add_argument("--ambient", type=_positive, help="ambient dimension n (labels only)")

    common(sub.add_parser("ideal", help="generators g_0..g_m of J_m(x_1...x_r)"))
    p = sub.add_parser("jet-general", help="jet ideal of arbitrary generators in x{i}_0 variables")
    p.add_argument("--poly", action="append", required=True, help="generator text; repeatable")
    common(p, with_r=False)
    common(sub.add_parser("components", help="minimal primes with multiplicities"))
    p = sub.add_parser("verify", help="components plus independent oracle check")
    common(p)
    p.add_argument("--seeds", type=_seed_list, help="comma-separated seeds (at least 2)")
    p.add_argument("--trials", type=_positive, default=2, help="number of default seeds")
    p.add_argument("--random", action="store_true", help="draw seeds from system entropy")
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes")
    p.add_argument("--bound", type=_positive, default=DEFAULT_BOUND, help="substitution size bound B")
    p.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX, help="truncation cap")
    return parser


# -- emitters -------------------------------------------------------------------


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _hypersurface_label(r: int) -> str:
    if r <= 3:
        return "*".join(f"x_{i}" for i in range(1, r + 1))
    return f"x_1*...*x_{r}"


def render_ideal(J: JetIdeal, fmt: str, ambient: int | None = None) -> str:
    if fmt == "json":
        doc = J.to_json()
        if J.r is None:
            doc["indices"] = [list(i) for i in J.indices]
        return _json(doc)
    labels = [f"g_{l}" if J.r is not None else f"f{k + 1}^({l})" for k, l in J.indices]
    if fmt == "csv":
        return _csv([("name", "generator")] + list(zip(labels, map(str, J.generators))))
    head = f"J_{J.m}(X)" + (f" for X = V({_hypersurface_label(J.r)})" if J.r is not None else "")
    if ambient is not None:
        head += f" in A^{ambient}"
    width = max(map(len, labels))
    return head + "\n" + "".join(f"  {lab:<{width}} = {g}\n" for lab, g in zip(labels, J.generators))


def render_census(cen: Census, fmt: str, ambient: int | None = None) -> str:
    if fmt == "json":
        return _json(cen.to_json())
    if fmt == "csv":
        rows: list[list[object]] = [["t", "prime", "mult_formula", "mult_recursive", "mult_oracle", "status"]]
        for c in cen.components:
            d = c.to_json()
            rows.append([
                " ".join(map(str, d["t"])), " ".join(d["prime"]),
                d["mult_formula"], d["mult_recursive"], d["mult_oracle"] or "", d["status"],
            ])
        rows.append(["mult_sum", cen.mult_sum])
        return _csv(rows)
    head = f"components of J_{cen.m}(X), X = V({_hypersurface_label(cen.r)})"
    if ambient is not None:
        head += f" in A^{ambient}"
    rows = [("t", "prime", "formula", "recursive", "oracle", "status")]
    for c in cen.components:
        d = c.to_json()
        rows.append((
            "(" + ",".join(map(str, d["t"])) + ")", "(" + ", ".join(d["prime"]) + ")",
            d["mult_formula"], d["mult_recursive"], d["mult_oracle"] or "-", d["status"],
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = [head] + ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.append(f"sum of multiplicities = {cen.mult_sum} (r^(m+1) = {cen.r ** (cen.m + 1)})")
    return "\n".join(lines) + "\n"


# -- verify ----------------------------------------------------------------------


def _verify_one(args: tuple) -> tuple[int | None, dict]:
    r, m, comp, seeds, bound, n_max = args
    try:
        res = oracle_multiplicity(r, m, comp, seeds, bound=bound, n_max=n_max)
    except OracleError as exc:
        return None, {"seeds": list(seeds), "B": bound, "error": f"{type(exc).__name__}: {exc}"}
    return res.length, res.to_record()


def resolve_seeds(ns: argparse.Namespace) -> list[int]:
    if ns.seeds is not None:
        if len(ns.seeds) < 2:
            raise UsageError("--seeds needs at least 2 seeds")
        return ns.seeds
    if ns.random:
        return [secrets.randbits(64) for _ in range(max(ns.trials, 2))]
    env = os.environ.get("JETMULT_SEED")
    try:
        base = int(env) if env else DEFAULT_SEED_BASE
    except ValueError:
        raise UsageError(f"JETMULT_SEED must be an integer, got {env!r}")
    return [(base + i) % 2**64 for i in range(max(ns.trials, 2))]


def verify(r: int, m: int, seeds: Sequence[int], bound: int = DEFAULT_BOUND,
           n_max: int = DEFAULT_N_MAX, jobs: int | None = 1) -> tuple[Census, bool]:
    """Census with oracle columns filled; the flag is False if any oracle run failed."""
    cen = census(r, m)
    tasks = [(r, m, c.prime.composition, list(seeds), bound, n_max) for c in cen.components]
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, tasks))
        # pool.map preserves input order
    else:
        results = [_verify_one(t) for t in tasks]
    ok = True
    for report, (length, record) in zip(cen.components, results):
        report.multiplicity_oracle = length
        report.verification = record
        report.oracle_trials = list(zip(record["seeds"], record.get("substitutions", []), record.get("lengths", [])))
        if length is None:
            ok = False
    return cen, ok


# -- entry point -------------------------------------------------------------------


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(kind: str, message: str, as_json: bool, code: int) -> int:
    if as_json:
        sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    else:
        sys.stderr.write(f"jetmult: {kind}: {message}\n")
    return code


def run(ns: argparse.Namespace) -> int:
    as_json = ns.format == "json"
    if ns.command == "ideal":
        _emit(render_ideal(monomial_jet_generators(ns.r, ns.m), ns.format, ns.ambient), ns.out)
        return 0
    if ns.command == "jet-general":
        try:
            gens = [parse_polynomial(src) for src in ns.poly]
            J = build_jet_ideal_general(gens, ns.m)
        except ParseError as exc:
            return _fail("parse_error", str(exc), as_json, 2)
        except ValueError as exc:
            return _fail("invalid_input", str(exc), as_json, 2)
        _emit(render_ideal(J, ns.format, ns.ambient), ns.out)
        return 0
    if ns.command == "components":
        _emit(render_census(census(ns.r, ns.m), ns.format, ns.ambient), ns.out)
        return 0
    if ns.command == "verify":
        seeds = resolve_seeds(ns)
        cen, ok = verify(ns.r, ns.m, seeds, ns.bound, ns.n_max, ns.jobs)
        _emit(render_census(cen, ns.format, ns.ambient), ns.out)
        bad = [c for c in cen.components if c.status == "inconsistent"]
        if bad:
            return _fail("inconsistent", f"{len(bad)} component(s) disagree", as_json, 1)
        if not ok:
            return _fail("oracle_failure", "oracle did not produce a length for every component", as_json, 1)
        return 0
    raise AssertionError(ns.command)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "json" in argv and any(a in ("--format", "--format=json") for a in argv)
    try:
        ns = build_parser().parse_args(argv)
        return run(ns)
    except UsageError as exc:
        return _fail("usage", str(exc), as_json, 2)


if __name__ == "__main__":
    raise SystemExit(main())
