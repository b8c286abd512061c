"""coxlow command-line interface.

Subcommands: small-roots, low-elements, automaton, growth, verify, render.
Exit codes: 0 success, 2 validation/parse error, 3 verification unresolved
at the requested bound (distinct from a crash).
"""

import argparse
import json
import os
import sys

from . import __version__
from .automaton import build_automaton, count_elements, export_dot, growth_series
from .conjecture import (
    build_gbip,
    check_acyclic,
    check_simplex_edge_condition,
    source_generators,
    verify_bijection,
    verify_inversion_polytopes,
)
from .core import DEFAULT_EPS
from .elements import (
    elements_up_to_length,
    enumerate_low,
    left_descents,
    small_inversion_mask,
)
from .errors import CoxlowError, ParseError, ValidationError
from .groupfile import load_root_system
from .render import RenderOptions, render_svg
from .smallroots import small_roots

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_UNRESOLVED = 3


def _tolerance(args):
    if args.tolerance is not None:
        return args.tolerance
    env = os.environ.get("COXLOW_TOLERANCE")
    return float(env) if env else DEFAULT_EPS


def _load(args):
    try:
        with open(args.group) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (args.group, exc))
    return load_root_system(text, backend=args.backend, eps=_tolerance(args))


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _word_str(word):
    return "".join("s%d" % s for s in word) or "e"


def cmd_small_roots(args):
    rs = _load(args)
    sigma = small_roots(rs)
    print("small roots (%d):" % len(sigma))
    print("%5s  %-30s %5s" % ("index", "coordinates", "depth"))
    payload = []
    for i, root in enumerate(sigma):
        coords = [float(c) for c in root.coords]
        print("%5d  %-30s %5d"
              % (i, "(" + ", ".join("%g" % c for c in coords) + ")", root.depth))
        payload.append({"index": i, "coords": coords, "depth": root.depth})
    _emit(args, json.dumps({"schema": "coxlow/small-roots/1",
                            "count": len(sigma), "roots": payload},
                           indent=2) + "\n")
    return EXIT_OK


def cmd_low_elements(args):
    rs = _load(args)
    sigma = small_roots(rs)
    lows, report = enumerate_low(rs, sigma, args.max_length)
    print("low elements up to length %d: %d found" % (args.max_length, len(lows)))
    payload = []
    for low in lows:
        mask = small_inversion_mask(rs, sigma, low)
        print("  %-20s length=%2d lambda=%s"
              % (_word_str(low.word), low.length, bin(mask)))
        payload.append({"word": list(low.word), "length": low.length,
                        "lambda_mask": mask})
    status = "complete" if report.complete else \
        "INCOMPLETE: %d of %d small inversion sets unrealized" \
        % (len(report.unrealized_masks), report.n_lambda)
    print("completeness: %s (|Lambda| = %d)" % (status, report.n_lambda))
    _emit(args, json.dumps({"schema": "coxlow/low-elements/1",
                            "max_length": args.max_length,
                            "low_elements": payload,
                            "n_lambda": report.n_lambda,
                            "complete": report.complete,
                            "unrealized_masks": list(report.unrealized_masks)},
                           indent=2) + "\n")
    return EXIT_OK


def cmd_automaton(args):
    rs = _load(args)
    sigma = small_roots(rs)
    aut = build_automaton(rs, sigma)
    dot = export_dot(aut)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
        print("automaton: %d states, written to %s" % (len(aut.states), args.dot))
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_growth(args):
    rs = _load(args)
    sigma = small_roots(rs)
    aut = build_automaton(rs, sigma)
    words = growth_series(aut, args.terms)
    rows = {"schema": "coxlow/growth/1", "terms": args.terms,
            "reduced_words": words}
    print("reduced words by length: %s" % words)
    if args.elements:
        elems = count_elements(rs, sigma, args.terms)
        print("elements by length:      %s" % elems)
        rows["elements"] = elems
    _emit(args, json.dumps(rows, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args):
    rs = _load(args)
    sigma = small_roots(rs)
    aut = build_automaton(rs, sigma)
    bij = verify_bijection(rs, sigma, aut, args.max_length)
    print("group: %s" % args.group)
    print("|Sigma| = %d, |Lambda| = %d, low elements found = %d"
          % (len(sigma), bij.n_lambda, bij.n_low))
    print("injective: %s, surjective: %s" % (bij.injective, bij.surjective))
    if bij.unresolved_masks:
        print("unresolved at max length %d: %d small inversion sets"
              % (args.max_length, len(bij.unresolved_masks)))

    gbip_summary = None
    if rs.rank == 3:
        checked = violations = 0
        for elem, _, _ in elements_up_to_length(rs, args.gbip_length):
            graph = build_gbip(rs, elem)
            acyclic, _ = check_acyclic(graph)
            ok = acyclic and set(source_generators(graph)) <= \
                left_descents(rs, elem)
            checked += 1
            violations += 0 if ok else 1
        gbip_summary = {"max_length": args.gbip_length,
                        "elements_checked": checked, "violations": violations}
        print("graph checks (length <= %d): %d elements, %d violations"
              % (args.gbip_length, checked, violations))

    poly_summary = None
    if args.polytopes:
        if not check_simplex_edge_condition(rs, sigma):
            print("note: small roots leave the simplex edges; the polytope "
                  "claim is outside its stated hypothesis")
        rep = verify_inversion_polytopes(rs, sigma, aut, args.max_length)
        matched = sum(1 for w in rep.witnesses.values() if w is not None)
        poly_summary = {"hypothesis_met": rep.hypothesis_met,
                        "matched": matched, "total": len(rep.witnesses)}
        print("inversion polytopes: %d/%d matched (hypothesis %s)"
              % (matched, len(rep.witnesses),
                 "met" if rep.hypothesis_met else "not met"))

    report = {
        "schema": "coxlow/verify/1",
        "group_file": args.group,
        "n_sigma": len(sigma),
        "n_lambda": bij.n_lambda,
        "n_low": bij.n_low,
        "max_length": args.max_length,
        "injective": bij.injective,
        "surjective": bij.surjective,
        "bijective": bij.bijective,
        "witnesses": {str(mask): list(low.word)
                      for low, mask in ((l, m) for l, m in bij.mapping.items())},
        "unresolved_masks": list(bij.unresolved_masks),
        "gbip": gbip_summary,
        "polytopes": poly_summary,
    }
    _emit(args, json.dumps(report, indent=2) + "\n")
    unresolved = bool(bij.unresolved_masks) or \
        (gbip_summary and gbip_summary["violations"]) or \
        (poly_summary and poly_summary["matched"] < poly_summary["total"])
    return EXIT_UNRESOLVED if unresolved else EXIT_OK


def cmd_render(args):
    rs = _load(args)
    sigma = small_roots(rs)
    opts = RenderOptions(depth=args.depth, size=args.size,
                         labels=args.labels,
                         show_lambda_polytopes=args.lambdas)
    lambdas = build_automaton(rs, sigma).states if args.lambdas else ()
    _emit(args, render_svg(rs, sigma, lambdas, opts))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("group", help="group-input JSON file")
    common.add_argument("--tolerance", type=float, default=None,
                        help="comparison tolerance (or env COXLOW_TOLERANCE)")
    common.add_argument("--backend", choices=["float", "rational"],
                        default=None, help="override the file's backend")
    common.add_argument("--out", default=None, help="output file")

    parser = argparse.ArgumentParser(
        prog="coxlow",
        description="Small roots, reduced-word automata and low elements "
                    "of Coxeter groups")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("small-roots", parents=[common],
                   help="print the small roots").set_defaults(func=cmd_small_roots)

    p = sub.add_parser("low-elements", parents=[common],
                       help="enumerate low elements")
    p.add_argument("--max-length", type=int, required=True)
    p.set_defaults(func=cmd_low_elements)

    p = sub.add_parser("automaton", parents=[common],
                       help="build the reduced-word automaton")
    p.add_argument("--dot", default=None, help="write DOT to this file")
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("growth", parents=[common],
                       help="reduced-word growth series")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--elements", action="store_true",
                   help="also count distinct elements per length")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("verify", parents=[common],
                       help="run the bijection and graph checks")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--gbip-length", type=int, default=8)
    p.add_argument("--polytopes", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common],
                       help="render the projective picture as SVG")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--lambdas", action="store_true",
                   help="overlay conv(lambda) polygons")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValidationError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except CoxlowError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
