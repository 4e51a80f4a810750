"""Command line front end.

One subcommand per operation family:

    cosmetic dedekind 5 7
    cosmetic casson lens 7 1
    cosmetic casson surgery --lambda-y 0/1 --delta2 2 1/1
    cosmetic casson delta2 '{"-1": 1, "0": -3, "1": 1}'
    cosmetic congruence 5 2 3
    cosmetic homology watson --c 2 --shift 0 3/1
    cosmetic homology link --lk 0 2/1 7/3
    cosmetic census show M8
    cosmetic classify --p 7 --format json
    cosmetic replicate-theorem --format markdown
    cosmetic enumerate --p 1..8 --q 1..1000 --filters all --jobs 4

Exit code 0 on success, 1 on bad input, 2 when an internal cross-check
(oracle re-derivation or census exclusion) fails.
"""

from __future__ import annotations

import argparse
import sys

from .census import (
    census_lookup,
    load_census,
    verify_census_exclusions,
    zhs_exterior_filter,
)
from .dedekind import dedekind_sum_fast
from .engine import (
    CrossCheckError,
    replicate_theorem,
    run_classification,
    run_enumeration,
)
from .homology import (
    FramingShift,
    LinkSurgeryData,
    WatsonData,
    h1_order_watson,
    link_surgery_h1,
)
from .invariants import (
    AlexanderPolynomial,
    LensSpace,
    SurgeryCassonInput,
    alexander_second_derivative_at_1,
    casson_lens,
    casson_surgery,
)
from .obstructions import linking_congruence
from .report import emit_report
from .slopes import Slope, format_rational, parse_rational

FORMATS = ("json", "csv", "markdown")


def parse_range(text):
    """Read "a..b" (inclusive) or a single integer "a" as a range."""
    text = text.strip()
    if ".." in text:
        lo_str, hi_str = text.split("..", 1)
        lo, hi = int(lo_str), int(hi_str)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return range(lo, hi + 1)
    value = int(text)
    return range(value, value + 1)


def cmd_dedekind(args):
    print(format_rational(dedekind_sum_fast(args.q, args.p)))
    return 0


def cmd_casson_lens(args):
    print(format_rational(casson_lens(LensSpace(args.p, args.q))))
    return 0


def cmd_casson_surgery(args):
    data = SurgeryCassonInput(
        lambda_y=parse_rational(args.lambda_y),
        delta2=args.delta2,
        slope=Slope.parse(args.slope),
    )
    print(format_rational(casson_surgery(data)))
    return 0


def cmd_casson_delta2(args):
    poly = AlexanderPolynomial.from_json(args.polynomial)
    print(alexander_second_derivative_at_1(poly))
    return 0


def cmd_congruence(args):
    verdict = linking_congruence(args.p, args.q, args.q_prime)
    if verdict.passed:
        print(
            f"passes: q = q' * u^2 (mod {args.p}) "
            f"with unit u = {verdict.witness['unit']}"
        )
    else:
        print(
            f"obstructed: {verdict.witness['reason']} "
            f"(unit squares mod {args.p}: {verdict.witness['unit_squares']})"
        )
    return 0


def cmd_homology_watson(args):
    data = WatsonData(args.c, FramingShift(args.shift))
    print(h1_order_watson(data, Slope.parse(args.slope)))
    return 0


def cmd_homology_link(args):
    data = LinkSurgeryData(
        Slope.parse(args.framing1), Slope.parse(args.framing2), args.lk
    )
    print(link_surgery_h1(data))
    return 0


def cmd_census_show(args):
    census = load_census(args.census_file)
    record = census_lookup(args.id, census)
    tori = "torus" if record.boundary_tori == 1 else "tori"
    print(
        f"{record.id}: {record.boundary_tori} boundary {tori}, "
        f"toroidal filling pair at distance {record.toroidal_pair_distance}"
    )
    for filling in record.known_fillings:
        print(f"  filling: {filling.description} at {filling.slope}")
    verdict = zhs_exterior_filter(record)
    if verdict.excluded:
        tag = " [cited]" if verdict.cited else ""
        print(f"  verdict: excluded{tag} - {verdict.reason}")
    else:
        print("  verdict: possible")
    return 0


def cmd_classify(args):
    result = run_classification(args.p, verify=not args.no_verify)
    print(emit_report(result, args.format), end="")
    return 0


def cmd_replicate(args):
    census = load_census(args.census_file)
    verify_census_exclusions(census)
    table = replicate_theorem(verify=not args.no_verify)
    print(emit_report(table, args.format), end="")
    return 0


def cmd_enumerate(args):
    filters = "all" if args.filters == "all" else args.filters.split(",")
    result = run_enumeration(
        parse_range(args.p),
        parse_range(args.q),
        filters=filters,
        max_gap=args.max_gap,
        jobs=args.jobs,
        verify=not args.no_verify,
    )
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(emit_report(result, args.format), end="")
    return 0


def _add_format(parser, default):
    parser.add_argument(
        "--format", choices=FORMATS, default=default,
        help=f"output format (default {default})",
    )


def _add_no_verify(parser):
    parser.add_argument(
        "--no-verify", action="store_true",
        help="skip the independent oracle re-derivation of every verdict",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cosmetic",
        description=(
            "Exact obstruction calculus for truly cosmetic exceptional "
            "surgeries on hyperbolic knots in integer homology spheres."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dedekind", help="Dedekind sum s(q, p)")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(handler=cmd_dedekind)

    casson = sub.add_parser("casson", help="Casson invariant computations")
    casson_sub = casson.add_subparsers(dest="subcommand", required=True)
    p = casson_sub.add_parser("lens", help="Casson invariant of L(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(handler=cmd_casson_lens)
    p = casson_sub.add_parser(
        "surgery", help="Casson invariant of p/q surgery on a knot"
    )
    p.add_argument(
        "--lambda-y", default="0/1",
        help="Casson invariant of the ambient homology sphere (default 0/1)",
    )
    p.add_argument(
        "--delta2", type=int, default=0,
        help="Alexander second derivative at t = 1 (default 0)",
    )
    p.add_argument("slope", help="surgery coefficient p/q")
    p.set_defaults(handler=cmd_casson_surgery)
    p = casson_sub.add_parser(
        "delta2",
        help="second derivative at t = 1 of an Alexander polynomial "
             'given as a JSON map, e.g. \'{"-1": 1, "0": -3, "1": 1}\'',
    )
    p.add_argument("polynomial")
    p.set_defaults(handler=cmd_casson_delta2)

    p = sub.add_parser(
        "congruence", help="linking-form congruence q = q' u^2 (mod p)"
    )
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("q_prime", type=int)
    p.set_defaults(handler=cmd_congruence)

    homology = sub.add_parser("homology", help="first homology of fillings")
    homology_sub = homology.add_subparsers(dest="subcommand", required=True)
    p = homology_sub.add_parser(
        "watson", help="|H_1| of a filling from the linear order formula"
    )
    p.add_argument("--c", type=int, default=1, help="homology constant c_M")
    p.add_argument(
        "--shift", type=int, default=0,
        help="framing shift into the rational-longitude basis",
    )
    p.add_argument("slope")
    p.set_defaults(handler=cmd_homology_watson)
    p = homology_sub.add_parser(
        "link", help="|H_1| of surgery on a two-component link"
    )
    p.add_argument("--lk", type=int, default=0, help="linking number")
    p.add_argument("framing1")
    p.add_argument("framing2")
    p.set_defaults(handler=cmd_homology_link)

    census = sub.add_parser("census", help="the candidate exterior census")
    census_sub = census.add_subparsers(dest="subcommand", required=True)
    p = census_sub.add_parser("show", help="one census record and its verdict")
    p.add_argument("id", help='census id such as M8 or "W(-5/2)"')
    p.add_argument("--census-file", default=None)
    p.set_defaults(handler=cmd_census_show)

    p = sub.add_parser(
        "classify", help="verdict trails for every residue family of one p"
    )
    p.add_argument("--p", type=int, required=True)
    _add_format(p, "json")
    _add_no_verify(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser(
        "replicate-theorem",
        help="rebuild the case-by-case classification from the filters",
    )
    _add_format(p, "markdown")
    _add_no_verify(p)
    p.add_argument("--census-file", default=None)
    p.set_defaults(handler=cmd_replicate)

    p = sub.add_parser(
        "enumerate", help="bulk sweep of concrete (p/q, p/q') pairs"
    )
    p.add_argument("--p", required=True, help="range a..b or single value")
    p.add_argument("--q", required=True, help="range a..b or single value")
    p.add_argument(
        "--filters", default="all",
        help="all, or comma-separated subset of "
             "distance,congruence,dedekind (parity always runs)",
    )
    p.add_argument("--max-gap", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p, "csv")
    _add_no_verify(p)
    p.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
