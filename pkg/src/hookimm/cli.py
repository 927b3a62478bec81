"""Command-line entry point: ``hookimm <command> ...``; JSON on stdout."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from . import characters as ch
from . import harness
from .immanants import determinant, hook_chain, immanant, normalized_immanant, permanent, to_exact


def load_matrix(arg: str):
    """A matrix from a JSON file, or inline JSON text.  ``{"matrix": ...}`` wrappers are accepted."""
    text = arg if arg.lstrip().startswith(("[", "{")) else open(arg).read()
    data = json.loads(text)
    if isinstance(data, dict):
        data = data.get("matrix") or data.get("witness", {}).get("matrix")
    return to_exact(data)


def cmd_compute(args) -> dict:
    A = load_matrix(args.matrix)
    n = len(A)
    out: dict = {"command": "compute", "trace": args.trace, "matrix": harness.matrix_json(A)}
    if args.trace == "hook-chain":
        out["value"] = [harness.fstr(v) for v in hook_chain(A)]
    elif args.trace == "det":
        out["value"] = harness.fstr(determinant(A))
    elif args.trace == "per":
        out["value"] = harness.fstr(permanent(A))
    else:
        theta = ch.parse_trace(args.trace)
        if theta.n != n:
            raise SystemExit(f"trace is for n={theta.n} but matrix is {n}x{n}")
        f = normalized_immanant if args.normalized else immanant
        out["value"] = harness.fstr(f(theta, A))
    out["ok"] = True
    return out


def _rows(report: dict) -> list[dict]:
    for key in ("checks", "trials", "items", "violations"):
        if key in report:
            rows = []
            for i, r in enumerate(report[key]):
                flat = {"index": i}
                for k, v in r.items():
                    if isinstance(v, dict):
                        flat.update({f"{k}.{kk}": vv for kk, vv in v.items() if not isinstance(vv, (dict, list))})
                    elif not isinstance(v, list):
                        flat[k] = v
                rows.append(flat)
            return rows
    return [{k: v for k, v in report.items() if not isinstance(v, (dict, list))}]


def write_csv(report: dict, fh) -> None:
    rows = _rows(report)
    fields: list[str] = []
    for r in rows:
        fields += [k for k in r if k not in fields]
    w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hookimm", description="Exact immanant and hook-chain verification tools.")
    p.add_argument("--csv", action="store_true", help="tabular summary instead of JSON")
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate one immanant")
    c.add_argument("--trace", required=True, help="family:partition (chi:411), theta:n:ell, det, per or hook-chain")
    c.add_argument("--matrix", required=True, help="JSON file or inline JSON")
    c.add_argument("--normalized", action="store_true")

    v = sub.add_parser("verify-hook-chain")
    v.add_argument("--n", type=int, default=4)
    v.add_argument("--depth", type=int, default=None)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--source", choices=["network", "poset", "file"], default="network")
    v.add_argument("--path", help="matrix file for --source file")
    v.add_argument("--no-accounting", action="store_true")
    v.add_argument("--jobs", type=int, default=1)

    lm = sub.add_parser("verify-lemma")
    lm.add_argument("--max-n", type=int, default=7)
    lm.add_argument("--random", type=int, default=200)
    lm.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("verify-bijection")
    b.add_argument("--max-n", type=int, default=7)

    h = sub.add_parser("verify-hikita")
    h.add_argument("--max-n", type=int, default=6)

    e = sub.add_parser("explore-pate")
    e.add_argument("--n", type=int, default=5)
    e.add_argument("--trials", type=int, default=200)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--depth", type=int, default=None)
    e.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("suite")
    s.add_argument("--level", choices=["quick", "full"], default="quick")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--fault", choices=["character-table"], default=None, help="negative control")
    return p


def run(args) -> dict:
    if args.command == "compute":
        return cmd_compute(args)
    if args.command == "verify-hook-chain":
        return harness.verify_hook_chain(args.n, args.depth, args.trials, args.seed, args.source, args.path,
                                         not args.no_accounting, args.jobs)
    if args.command == "verify-lemma":
        return harness.verify_lemma(args.max_n, args.random, args.seed)
    if args.command == "verify-bijection":
        return harness.verify_bijection(args.max_n)
    if args.command == "verify-hikita":
        return harness.verify_hikita(args.max_n)
    if args.command == "explore-pate":
        return harness.explore_pate(args.n, args.trials, args.seed, args.depth, args.jobs)
    return harness.run_suite(args.level, args.seed, args.fault)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    report = run(args)
    if args.csv:
        write_csv(report, sys.stdout)
    else:
        json.dump(report, sys.stdout, indent=1)
        sys.stdout.write("\n")
    return 0 if report.get("ok") else 1


if __name__ == "__main__":
    sys.exit(main())
