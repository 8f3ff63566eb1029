# main.py
"""
Command-line front end.

    alex SUBJECT                      closed-form and Burau Alexander polynomials
    dinv SUBJECT SLOPE [SLOPE]        d-invariant table of an integral surgery
    check SUBJECT [--slope r | --p1 a --p2 b]
    slopes SUBJECT                    q*, p*, continued fraction, m and Sfc
    hfunc SUBJECT [--window W]        h-function of a two-component link
    reproduce [--scope TAG] [--grid n=A..B,m=C..D]
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from checks.suite import SCOPE_ALIASES, SCOPES, run_suite
from core.braid import alexander_of_closure
from core.errors import ConsistencyError, InvariantError, PolySyntaxError
from core.floer import d_knot_surgery, d_link_surgery, h_function
from core.obstruct import knot_verdict, link_sweep, link_verdict
from core.ring import parse_rational
from core.slopes import sfc_known, slope_invariants
from data.catalog import KnotTag, LinkFamily, alexander_closed_form
from data.subjects import parse_knot, parse_link, parse_subject, subject_string
from tools.export import export
from tools.render import (
    Document,
    render_alexander,
    render_hfunction,
    render_knot_table,
    render_link_table,
    render_report,
    render_reports,
    render_slopes,
    render_suite,
)
from utils.app_paths import reports_dir
from utils.logging_setup import setup_logging, verbosity_level
from utils.settings import AppSettings, load_settings

log = logging.getLogger("surgeryfill")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2
EXIT_REPRODUCE = 3


class UsageError(InvariantError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "json"), default=default,
                        help="output format (default from settings: text)")
    parser.add_argument("--out", default=default, help="also write the result to .json/.txt/.pdf/.xlsx")
    parser.add_argument("--config", default=default, help="settings YAML to use instead of the default")
    parser.add_argument("--workers", type=int, default=default, help="threads for reproduce sweeps")
    parser.add_argument("-v", "--verbose", action="count",
                        default=argparse.SUPPRESS if suppress else 0,
                        help="-v for INFO logging, -vv for DEBUG")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="surgeryfill", description="Surgery invariants and fillability verdicts.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("alex", help="Alexander polynomial of a knot")
    p.add_argument("subject")
    _common(p, suppress=True)

    p = sub.add_parser("dinv", help="d-invariants of an integral surgery")
    p.add_argument("subject")
    p.add_argument("slopes", nargs="+", help="one slope for a knot, two for a link")
    _common(p, suppress=True)

    p = sub.add_parser("check", help="fillability report")
    p.add_argument("subject")
    p.add_argument("--slope", help="classify a single rational slope r (knots)")
    p.add_argument("--p1", type=int)
    p.add_argument("--p2", type=int)
    _common(p, suppress=True)

    p = sub.add_parser("slopes", help="slope invariants and Sfc")
    p.add_argument("subject")
    _common(p, suppress=True)

    p = sub.add_parser("hfunc", help="h-function of a two-component link")
    p.add_argument("subject")
    p.add_argument("--window", type=int, help="half-width of the square window")
    _common(p, suppress=True)

    p = sub.add_parser("reproduce", help="run the verification suite")
    p.add_argument("--scope", default="all", choices=("all", *SCOPES, *SCOPE_ALIASES),
                   metavar="SCOPE", help="a check name, a result label such as prop1.6, or all")
    p.add_argument("--grid", help="override grid variables, e.g. n=2..8,m=1..5")
    _common(p, suppress=True)
    return parser


# ---- commands ----

def _integral_slope(text: str, subject: str) -> int:
    value = parse_rational(text)
    if value.denominator != 1:
        raise UsageError(
            f"slope {text} is not an integer; d-tables need integral surgeries. "
            f"For rational slopes use `check {subject} --slope {text}` to see its window."
        )
    if value < 1:
        raise UsageError(f"slope {text} must be a positive integer")
    return int(value)


def cmd_alex(args, settings: AppSettings) -> tuple[Document, int]:
    k = parse_knot(args.subject)
    closed = alexander_closed_form(k)
    word = k.braid_word()
    burau = alexander_of_closure(word) if word is not None else None
    doc = render_alexander(subject_string(k), closed, burau)
    if burau is not None and burau != closed:
        log.error("Burau and closed form disagree for %s", k.label)
        return doc, EXIT_DISAGREE
    return doc, EXIT_OK


def cmd_dinv(args, settings: AppSettings) -> tuple[Document, int]:
    subject = parse_subject(args.subject)
    if isinstance(subject, LinkFamily):
        if len(args.slopes) != 2:
            raise UsageError("a link surgery needs two slopes: dinv SUBJECT p1 p2")
        p1, p2 = (_integral_slope(s, args.subject) for s in args.slopes)
        table = d_link_surgery(subject, p1, p2)
        return render_link_table(subject_string(subject), table), EXIT_OK
    if len(args.slopes) != 1:
        raise UsageError("a knot surgery needs one slope: dinv SUBJECT p")
    if not subject.is_lspace_knot:
        raise UsageError(f"{subject.label} is not an L-space knot; its d-invariants are not computed")
    p = _integral_slope(args.slopes[0], args.subject)
    table = d_knot_surgery(alexander_closed_form(subject), p)
    return render_knot_table(subject_string(subject), table), EXIT_OK


def cmd_check(args, settings: AppSettings) -> tuple[Document, int]:
    subject = parse_subject(args.subject)
    if isinstance(subject, LinkFamily):
        if args.slope is not None:
            raise UsageError("--slope applies to knots; give links --p1 and --p2")
        if (args.p1 is None) != (args.p2 is None):
            raise UsageError("give both --p1 and --p2, or neither")
        if args.p1 is None:
            return render_reports(subject_string(subject), link_sweep(subject)), EXIT_OK
        return render_report(link_verdict(subject, args.p1, args.p2)), EXIT_OK
    if args.p1 is not None or args.p2 is not None:
        raise UsageError("--p1/--p2 apply to links; give knots --slope")
    slope = parse_rational(args.slope) if args.slope is not None else None
    return render_report(knot_verdict(subject, slope)), EXIT_OK


def cmd_slopes(args, settings: AppSettings) -> tuple[Document, int]:
    k = parse_knot(args.subject)
    torus = k if k.tag is KnotTag.TORUS else k.torus_alias()
    inv = slope_invariants(*torus.params) if torus is not None else None
    return render_slopes(subject_string(k), inv, sfc_known(k)), EXIT_OK


def cmd_hfunc(args, settings: AppSettings) -> tuple[Document, int]:
    link = parse_link(args.subject)
    grid = h_function(link)
    radius = args.window if args.window is not None else grid.support_radius + settings.h_window_pad
    if radius < 0:
        raise UsageError("--window must be non-negative")
    return render_hfunction(subject_string(link), grid.window(radius), radius), EXIT_OK


def cmd_reproduce(args, settings: AppSettings) -> tuple[Document, int]:
    outcomes = run_suite(settings, args.scope, args.grid, args.workers)
    doc = render_suite(outcomes)
    return doc, EXIT_OK if all(o.passed for o in outcomes) else EXIT_REPRODUCE


COMMANDS = {
    "alex": cmd_alex,
    "dinv": cmd_dinv,
    "check": cmd_check,
    "slopes": cmd_slopes,
    "hfunc": cmd_hfunc,
    "reproduce": cmd_reproduce,
}


def _emit(doc: Document, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc.payload, indent=4, ensure_ascii=False))
    else:
        print(doc.text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.config and not Path(args.config).expanduser().is_file():
        parser.error(f"--config: no such file {args.config}")
    settings = load_settings(Path(args.config).expanduser() if args.config else None)
    setup_logging(verbosity_level(args.verbose, settings.log_level))
    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be at least 1")
    fmt = args.format or settings.output_format

    try:
        doc, code = COMMANDS[args.command](args, settings)
        _emit(doc, fmt)
        if args.out:
            export(doc, args.out, reports_dir(settings.reports_dir))
    except PolySyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.text:
            print(e.pointer(), file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as e:
        log.exception("internal inconsistency")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_DISAGREE
    return code


__all__ = ["main", "build_parser", "COMMANDS", "UsageError"]


if __name__ == "__main__":
    sys.exit(main())
