"""Command-line frontend.

Every subcommand writes a byte-stable payload to stdout (or --output);
diagnostics and timings go to stderr.  Exit codes: 0 success, 1 suite
failure or validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .rootcore import ReducedWord, root_order
from .wiring import to_dot, wiring_of
from .crossings import KINDS, crossing_json, crossings_for
from .plmaps import phi_transition, psi_transition, string_datum
from .crystals import enumerate_crystal, graph_dot, graph_json
from .polytopes import inequality_system, lattice_points, system_json
from .harness import SUITES, SuiteParams, run_suite

FAMILY_CHOICES = ("L", "Lstar", "S", "Sstar")


def _int_csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _resolve_word(ns) -> ReducedWord:
    letters = ns.word
    n = ns.n if ns.n is not None else (max(letters) + 1 if letters else 2)
    return ReducedWord(n, letters)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def thread_cap() -> int:
    """Worker limit from CRYSTAL_KIT_THREADS; enumeration never exceeds it."""
    raw = os.environ.get("CRYSTAL_KIT_THREADS")
    if raw is None or not raw.strip():
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CRYSTAL_KIT_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"CRYSTAL_KIT_THREADS must be a positive integer, got {raw!r}")
    return value


def _cmd_roots(ns) -> int:
    word = _resolve_word(ns)
    roots = root_order(word).roots
    if ns.format == "json":
        _emit(_json_text([list(r) for r in roots]), ns.output)
    else:
        _emit("\n".join(f"({k},{l})" for k, l in roots) + "\n", ns.output)
    return 0


def _cmd_diagram(ns) -> int:
    word = _resolve_word(ns)
    _emit(to_dot(wiring_of(word), ns.a, ns.dual), ns.output)
    return 0


def _cmd_crossings(ns) -> int:
    word = _resolve_word(ns)
    found = crossings_for(word, ns.a, ns.kind)
    if ns.format == "json":
        _emit(_json_text([crossing_json(c) for c in found]), ns.output)
    else:
        lines = []
        for c in found:
            d = crossing_json(c)
            lines.append(
                "vertices={} turning={} r={} s={}".format(
                    ",".join(map(str, d["vertices"])),
                    ",".join(map(str, d["turning"])),
                    ",".join(map(str, d["r"])),
                    ",".join(map(str, d["s"])),
                )
            )
        _emit("\n".join(lines) + ("\n" if lines else ""), ns.output)
    return 0


def _cmd_inequalities(ns) -> int:
    word = _resolve_word(ns)
    system = inequality_system(ns.family, word)
    payload = system_json(system)
    if ns.lam is not None:
        payload["lambda"] = list(ns.lam)
        for row in payload["hw"]:
            row["rhs"] = sum(p * q for p, q in zip(row["lambda_row"], ns.lam))
    if ns.format == "json":
        _emit(_json_text(payload), ns.output)
    else:
        lines = ["# cone rows: <c, x> >= 0"]
        lines += [",".join(map(str, r["coeffs"])) for r in payload["cone"]]
        lines.append("# hw rows: <c, x> <= <m, lambda>")
        for r in payload["hw"]:
            tail = f" | rhs={r['rhs']}" if "rhs" in r else ""
            lines.append(
                ",".join(map(str, r["coeffs"])) + " | " + ",".join(map(str, r["lambda_row"])) + tail
            )
        _emit("\n".join(lines) + "\n", ns.output)
    return 0


def _cmd_points(ns) -> int:
    word = _resolve_word(ns)
    pts = lattice_points(ns.family, word, ns.lam)
    if ns.format == "json":
        _emit(_json_text([list(p) for p in pts]), ns.output)
    else:
        _emit("\n".join(",".join(map(str, p)) for p in pts) + ("\n" if pts else ""), ns.output)
    return 0


def _cmd_crystal(ns) -> int:
    word = _resolve_word(ns)
    graph = enumerate_crystal(ns.family, word, ns.lam)
    if ns.format == "dot":
        _emit(graph_dot(graph), ns.output)
    else:
        _emit(_json_text(graph_json(graph)), ns.output)
    return 0


def _cmd_transition(ns) -> int:
    frm = _resolve_word(ns)
    to = ReducedWord(frm.n, ns.to_word)
    moved = phi_transition(frm, to, ns.x) if ns.family == "L" else psi_transition(frm, to, ns.x)
    if ns.format == "json":
        _emit(_json_text(list(moved)), ns.output)
    else:
        _emit(",".join(map(str, moved)) + "\n", ns.output)
    return 0


def _cmd_string_datum(ns) -> int:
    word = _resolve_word(ns)
    s = string_datum(word, ns.x)
    if ns.format == "json":
        _emit(_json_text(list(s)), ns.output)
    else:
        _emit(",".join(map(str, s)) + "\n", ns.output)
    return 0


def _cmd_verify(ns) -> int:
    params = SuiteParams(
        max_n=ns.max_n,
        lambda_sum=ns.max_lambda_sum,
        height=ns.height,
        samples=ns.samples,
        seed=ns.seed,
        include_large=not ns.skip_large,
    )
    report = run_suite(ns.suite, params)
    if ns.format == "json":
        _emit(_json_text(report.render_json()), ns.output)
    else:
        _emit(report.render_text(), ns.output)
    print(f"suite {ns.suite} finished in {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystal-kit",
        description="Exact combinatorics of canonical basis parametrizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_word_flags(p, word_required=True):
        p.add_argument("--n", type=int, default=None, help="rank; inferred from the word if omitted")
        p.add_argument("--word", type=_int_csv, required=word_required, help="comma-separated letters")
        p.add_argument("--output", default=None, help="write the payload to this file instead of stdout")

    p = sub.add_parser("roots", help="root order induced by a reduced word")
    add_word_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("diagram", help="wiring diagram as DOT")
    add_word_flags(p)
    p.add_argument("--a", type=int, default=None, help="orient for this letter")
    p.add_argument("--dual", action="store_true", help="use the right-boundary orientation")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("crossings", help="crossing paths for one letter")
    add_word_flags(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="reineke")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=_cmd_crossings)

    p = sub.add_parser("inequalities", help="cone and highest-weight rows of a family")
    add_word_flags(p)
    p.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_csv, default=None)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=_cmd_inequalities)

    p = sub.add_parser("points", help="lattice points of the weight polytope")
    add_word_flags(p)
    p.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_csv, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("crystal", help="crystal graph of the family at a weight")
    add_word_flags(p)
    p.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_csv, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_crystal)

    p = sub.add_parser("transition", help="map a vector to another reduced word")
    add_word_flags(p)
    p.add_argument("--family", choices=("L", "S"), required=True,
                   help="L: exponent-vector map; S: string-vector map")
    p.add_argument("--to-word", dest="to_word", type=_int_csv, required=True)
    p.add_argument("--x", type=_int_csv, required=True, help="coordinates relative to --word")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_transition)

    p = sub.add_parser("string-datum", help="peel a string vector from an exponent vector")
    add_word_flags(p)
    p.add_argument("--x", type=_int_csv, required=True, help="exponent vector relative to --word")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_string_datum)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, default=4)
    p.add_argument("--max-lambda-sum", dest="max_lambda_sum", type=int, default=3)
    p.add_argument("--height", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--skip-large", dest="skip_large", action="store_true",
                   help="skip the n=5 spot checks")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def dispatch(ns) -> int:
    """Run one parsed command; library errors become exit status 1."""
    try:
        thread_cap()
        return ns.func(ns)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    return dispatch(ns)


if __name__ == "__main__":
    sys.exit(main())
