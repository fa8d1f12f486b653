"""Command-line front end.

Subcommands:
  verify      run the full acceptance suite, one pass/fail line per check
  invariants  Jones / Alexander / determinant / HOMFLY of a named knot,
              PD code, or 3-braid closure
  classify    run one of the three braid enumerations and write a
              certificate

Exit codes: 0 pass, 1 check failure, 2 input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, invariants, verify
from .braid3 import word
from .diagrams import braid_closure, catalog, parse_pd
from .diagrams.catalog import CatalogError
from .laurent import LaurentPoly


def _build_parser():
    ap = argparse.ArgumentParser(prog="nfknots")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--n-window", type=int, default=6)
    v.add_argument("--q-bound", type=int, default=50)
    v.add_argument("--crossing-budget", type=int, default=16)
    v.add_argument("--format", choices=("json", "markdown"), default="markdown")
    v.add_argument("--out", default=None)

    i = sub.add_parser("invariants", help="compute polynomial invariants")
    src = i.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", help="catalog knot name, e.g. 5_2 or T(2,5)")
    src.add_argument("--pd", help="PD text, e.g. 'X[1,4,2,5],...'")
    src.add_argument("--closure", help="3-braid word over x X y Y")
    i.add_argument("--crossing-budget", type=int, default=16)
    i.add_argument("--format", choices=("json", "markdown"), default="markdown")
    i.add_argument("--out", default=None)

    c = sub.add_parser("classify", help="run a braid enumeration")
    c.add_argument("--case", choices=("unknot", "torus", "whitehead"), required=True)
    c.add_argument("--n-window", type=int, default=6)
    c.add_argument("--crossing-budget", type=int, default=24)
    c.add_argument("--format", choices=("json", "markdown"), default="json")
    c.add_argument("--out", default=None)
    return ap


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_verify(args):
    if args.n_window <= 0 or args.q_bound <= 0 or args.crossing_budget <= 0:
        print("bounds must be positive", file=sys.stderr)
        return 2
    results = verify.run_all(args.n_window, args.q_bound, args.crossing_budget)
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = [{"check": r.name, "passed": r.passed, "detail": r.detail,
                    "seconds": round(r.seconds, 3)} for r in results]
        _emit(json.dumps({"passed": ok, "checks": payload}, indent=1), args.out)
    else:
        lines = []
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"{mark}  {r.name:28s} ({r.seconds:6.2f}s)  {r.detail}")
        lines.append("")
        lines.append(f"{'all checks passed' if ok else 'CHECK FAILURES PRESENT'}")
        _emit("\n".join(lines), args.out)
    return 0 if ok else 1


def _invariant_report(pd, budget):
    report = {"crossings": pd.n_crossings(), "components": pd.n_components(),
              "writhe": pd.writhe()}
    omitted = []
    try:
        v = invariants.jones(pd, budget)
        report["jones_u"] = v.canonical()
        report["jones"] = v.pretty(("u",))
        report["determinant"] = invariants.jones_determinant(pd, budget)
    except invariants.BudgetExceeded:
        omitted.append("jones (crossing budget)")
    if pd.n_components() == 1:
        delta = invariants.alexander_pd(pd)
        report["alexander"] = delta.pretty(("t",))
        report["alexander_canonical"] = delta.canonical()
        if pd.n_crossings() <= min(budget, invariants.DEFAULT_HOMFLY_BUDGET):
            p = invariants.homfly(pd, min(budget, invariants.DEFAULT_HOMFLY_BUDGET))
            report["homfly"] = p.pretty(("a", "q"))
            report["homfly_canonical"] = p.canonical()
        else:
            omitted.append("homfly (crossing budget)")
    else:
        omitted.append("alexander (multi-component)")
        omitted.append("homfly (multi-component)")
    if omitted:
        report["omitted"] = omitted
    return report


def cmd_invariants(args):
    budget = args.crossing_budget
    try:
        if args.name:
            pd = catalog(args.name)
            source = {"name": args.name}
        elif args.pd:
            pd = parse_pd(args.pd)
            source = {"pd": args.pd}
        else:
            w = word(args.closure)
            pd = braid_closure(w)
            source = {"closure": str(w)}
    except (CatalogError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    report = {"source": source, **_invariant_report(pd, budget)}
    if args.format == "json":
        _emit(json.dumps(report, indent=1, sort_keys=True), args.out)
    else:
        lines = [f"{k}: {v}" for k, v in report.items()]
        _emit("\n".join(lines), args.out)
    return 0


def cmd_classify(args):
    if args.case == "unknot":
        cert, _ = classify.enumerate_unknot_case(args.n_window, args.crossing_budget)
    elif args.case == "torus":
        cert, _ = classify.enumerate_torus_case(args.crossing_budget)
    else:
        cert, _ = classify.enumerate_whitehead_case(args.crossing_budget)
    if args.format == "json":
        _emit(cert.to_json(), args.out)
    else:
        lines = [f"# {cert.case}", ""]
        for step in cert.steps:
            lines.append(f"- **{step['label']}**: {step['constraint']}")
        lines.append("")
        lines.append(f"braids: {', '.join(cert.braids)}")
        lines.append(f"knots: {', '.join(cert.knots)}")
        _emit("\n".join(lines), args.out)
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "invariants":
            return cmd_invariants(args)
        return cmd_classify(args)
    except (CatalogError, json.JSONDecodeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
