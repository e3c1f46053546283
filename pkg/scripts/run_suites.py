#!/usr/bin/env python3
"""Run every verification suite and print the reports.

Typical runs:

    python3 scripts/run_suites.py                    # full sweep, ~40s
    python3 scripts/run_suites.py --quick            # n <= 3, no n=5 block
    python3 scripts/run_suites.py --only unimodular --format json
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, replace

sys.path.insert(0, "src")

from crystal_kit.harness import SUITES, SuiteParams, run_suite


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...] = SUITES
    params: SuiteParams = SuiteParams()
    fmt: str = "text"
    fail_fast: bool = False


def parse_args(argv=None) -> RunConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", action="append", choices=SUITES, help="run just these suites")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-lambda-sum", type=int, default=3)
    ap.add_argument("--height", type=int, default=6)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--quick", action="store_true", help="small ranks only")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--fail-fast", action="store_true")
    ns = ap.parse_args(argv)
    params = SuiteParams(
        max_n=ns.max_n,
        lambda_sum=ns.max_lambda_sum,
        height=ns.height,
        samples=ns.samples,
        seed=ns.seed,
        include_large=True,
    )
    if ns.quick:
        params = replace(params, max_n=3, lambda_sum=2, height=4, samples=30, include_large=False)
    return RunConfig(
        suites=tuple(ns.only) if ns.only else SUITES,
        params=params,
        fmt=ns.format,
        fail_fast=ns.fail_fast,
    )


def main(argv=None) -> int:
    cfg = parse_args(argv)
    reports = []
    failed = []
    for suite in cfg.suites:
        t0 = time.perf_counter()
        report = run_suite(suite, cfg.params)
        dt = time.perf_counter() - t0
        reports.append(report)
        print(f"[{dt:6.1f}s] {suite}: {'PASS' if report.ok else 'FAIL'}", file=sys.stderr)
        if not report.ok:
            failed.append(suite)
            if cfg.fail_fast:
                break
    if cfg.fmt == "json":
        print(json.dumps([r.render_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.render_text())
    if failed:
        print(f"failing suites: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
