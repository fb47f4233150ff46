"""Command-line front end.

Exit codes: 0 success, 1 validation or parse failure, 2 size-cap refusal,
3 internal invariant violation (a bug, never bad input).
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from fractions import Fraction

from . import selftest
from .complexes import (DEFAULT_GENERATOR_CAP, SparseBoundary,
                        boundary_export_lines, build_boundary,
                        enumerate_generators, generator_count,
                        generator_label, square_is_zero)
from .cover import format_s3_grid, lift_diagram, s3_link_components
from .errors import (InternalInvariantError, LensGridError, SizeCapError,
                     ValidationError)
from .gradings import gradings_table
from .grid import (GridDiagram, LensParams, enumerate_grid_number_one,
                   format_grid, parse_grid, reconstruct_link, require_valid,
                   validate)
from .homology import (DEFAULT_PIECE_CAP, document_bytes, extract_hfk_hat,
                       homology_document, poincare_polynomial,
                       simplicity_report, tilde_homology)
from .s3 import verify_cover_relations

HOMOLOGY_VARIANTS = ("tilde", "assoc-graded", "hat", "minus-export")
EXPORT_VARIANTS = ("tilde", "assoc-graded", "hat", "minus")


def _read(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    return raw.decode(), hashlib.sha256(raw).hexdigest()


def _emit(doc):
    sys.stdout.write(document_bytes(doc).decode())


def _frac(x):
    return str(Fraction(x))


def cmd_validate(args):
    text, _ = _read(args.path)
    violations = validate(parse_grid(text))
    if args.format == "structured":
        _emit({"valid": not violations, "violations": violations})
    else:
        for v in violations:
            print(v)
        if not violations:
            print("ok")
    return 1 if violations else 0


def cmd_info(args):
    text, digest = _read(args.path)
    diagram = require_valid(parse_grid(text))
    link = reconstruct_link(diagram)
    lifted = lift_diagram(diagram)
    doc = {
        "input_sha256": digest,
        "p": diagram.lens.p, "q": diagram.lens.q, "n": diagram.n,
        "O": [list(c) for c in diagram.O], "X": [list(c) for c in diagram.X],
        "component_count": link.component_count,
        "homology_class": link.homology_class,
        "homology_class_note":
            "up to the identification of H_1(L(p,q)) with Z_p",
        "order": link.order,
        "lifted_grid_size": lifted.N,
        "lifted_components": len(s3_link_components(lifted)),
        "generator_count": generator_count(diagram),
        "orientation_note":
            "row arcs oriented X to O, column arcs O to X",
    }
    if args.format == "structured":
        _emit(doc)
    else:
        for k in ("p", "q", "n", "component_count", "homology_class", "order",
                  "lifted_grid_size", "lifted_components", "generator_count"):
            print("%-18s %s" % (k, doc[k]))
        print("note: homology class is %s" % doc["homology_class_note"])
    return 0


def cmd_gradings(args):
    text, digest = _read(args.path)
    diagram = require_valid(parse_grid(text))
    if args.swap_roles:
        diagram = GridDiagram(diagram.lens, diagram.n, diagram.X, diagram.O)
    gens = list(enumerate_generators(diagram, args.cap))
    table = gradings_table(diagram, gens)
    rows = sorted(
        ({"generator": generator_label(x), "S": t.spin, "M": _frac(t.maslov),
          "A": _frac(t.alexander)} for x, t in table.items()),
        key=lambda r: (r["S"], Fraction(r["A"]), Fraction(r["M"]),
                       r["generator"]))
    if args.format == "structured":
        _emit({"input_sha256": digest, "swap_roles": bool(args.swap_roles),
               "rows": rows})
    else:
        print("%-24s %4s %10s %10s" % ("generator", "S", "M", "A"))
        for r in rows:
            print("%-24s %4d %10s %10s" % (r["generator"], r["S"], r["M"], r["A"]))
    return 0


def cmd_homology(args):
    text, digest = _read(args.path)
    diagram = require_valid(parse_grid(text))
    if args.variant in ("hat", "minus-export"):
        variant = "hat" if args.variant == "hat" else "minus"
        boundary = build_boundary(diagram, variant, args.cap)
        lines = boundary_export_lines(boundary)
        verdict = square_is_zero(boundary)
        if args.format == "structured":
            _emit({"input_sha256": digest, "variant": variant,
                   "terms": lines, "d_squared_zero": verdict})
        else:
            for line in lines:
                print(line)
            print("# d^2 = 0: %s" % verdict)
        if not verdict:
            raise InternalInvariantError("boundary does not square to zero")
        return 0

    boundary = None
    if args.variant == "assoc-graded":
        graded = build_boundary(diagram, "assoc-graded", args.cap)
        zero = (0,) * diagram.n
        boundary = SparseBoundary(
            n=diagram.n, variant="tilde",
            terms={x: tuple(t for t in terms if t[1] == zero)
                   for x, terms in graded.terms.items()})
    table = extract_hfk_hat(tilde_homology(
        diagram, cap=args.cap, piece_cap=args.piece_cap, pivot=args.pivot,
        boundary=boundary))
    extra = {"input_sha256": digest, "variant": args.variant,
             "p": diagram.lens.p, "q": diagram.lens.q, "n": diagram.n}
    if table.extraction_exact:
        extra["classification"] = simplicity_report(table)
    doc = homology_document(table, extra)
    if args.format == "structured":
        _emit(doc)
    else:
        print("L(%d,%d) grid number %d, %s homology"
              % (diagram.lens.p, diagram.lens.q, diagram.n, args.variant))
        for s in sorted(table.classes):
            print("Spin^c class %d: %s" % (s, poincare_polynomial(table.classes[s])))
        if table.extraction_exact:
            print("knot Floer groups (tensor factor divided out):")
            for s in sorted(table.hfk_hat):
                print("  class %d: %s" % (s, poincare_polynomial(table.hfk_hat[s])))
            print("total rank %d, classification: %s"
                  % (table.hat_total_rank(), doc["classification"]))
        else:
            print("extraction inexact: %s" % table.note)
    return 0


def cmd_lift(args):
    text, _ = _read(args.path)
    diagram = require_valid(parse_grid(text))
    sys.stdout.write(format_s3_grid(lift_diagram(diagram)))
    return 0


def cmd_verify_cover(args):
    text, digest = _read(args.path)
    diagram = require_valid(parse_grid(text))
    report = verify_cover_relations(diagram, args.cap)
    if args.format == "structured":
        _emit({"input_sha256": digest, "ok": report.ok,
               "violations": report.violations,
               "rows": [{"generator": generator_label(r["generator"]),
                         "S": r["spin"], "M": _frac(r["maslov"]),
                         "A": _frac(r["alexander"]),
                         "cover_M": r["cover_maslov"],
                         "cover_A": _frac(r["cover_alexander"])}
                        for r in report.rows]})
    else:
        print("%-24s %4s %10s %10s %9s %9s"
              % ("generator", "S", "M", "A", "cover_M", "cover_A"))
        for r in report.rows:
            print("%-24s %4d %10s %10s %9d %9s"
                  % (generator_label(r["generator"]), r["spin"],
                     _frac(r["maslov"]), _frac(r["alexander"]),
                     r["cover_maslov"], _frac(r["cover_alexander"])))
        print("violations: %d" % len(report.violations))
        for v in report.violations:
            print("  " + v)
    if not report.ok:
        raise InternalInvariantError("cover relations violated: %s"
                                     % report.violations[:2])
    return 0


def cmd_enumerate_gn1(args):
    diagrams = enumerate_grid_number_one(LensParams(args.p, args.q))
    if args.format == "structured":
        _emit({"p": args.p, "q": args.q,
               "diagrams": [format_grid(d) for d in diagrams]})
    else:
        for j, d in enumerate(diagrams):
            print("# j = %d" % j)
            sys.stdout.write(format_grid(d))
    return 0


def cmd_boundary_export(args):
    text, digest = _read(args.path)
    diagram = require_valid(parse_grid(text))
    boundary = build_boundary(diagram, args.variant, args.cap,
                              reverse=args.debug_orientation)
    lines = boundary_export_lines(boundary)
    verdict = square_is_zero(boundary)
    if args.format == "structured":
        _emit({"input_sha256": digest, "variant": args.variant,
               "debug_orientation": bool(args.debug_orientation),
               "terms": lines, "d_squared_zero": verdict})
    else:
        for line in lines:
            print(line)
        print("# d^2 = 0: %s" % verdict)
    return 0


def cmd_selftest(args):
    results = selftest.run_all(args.seed)
    if args.format == "structured":
        _emit({"seed": args.seed,
               "results": [{"id": r.ident, "name": r.name, "ok": r.ok,
                            "detail": r.detail} for r in results]})
    else:
        for r in results:
            print("%s %-48s %s  (%s)"
                  % (r.ident, r.name, "PASS" if r.ok else "FAIL", r.detail))
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lensgrid",
        description="Knot Floer invariants of knots in lens spaces from "
                    "twisted toroidal grid diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, path=True):
        if path:
            sp.add_argument("path", help="grid diagram file")
        sp.add_argument("--format", choices=("human", "structured"),
                        default="human")
        sp.add_argument("--cap", type=int, default=DEFAULT_GENERATOR_CAP,
                        help="generator enumeration cap")
        sp.add_argument("--piece-cap", type=int, default=DEFAULT_PIECE_CAP,
                        help="per graded piece elimination cap")

    common(sub.add_parser("validate", help="check diagram invariants"))
    common(sub.add_parser("info", help="diagram and link summary"))

    sp = sub.add_parser("gradings", help="exact (S, M, A) per generator")
    common(sp)
    sp.add_argument("--swap-roles", action="store_true",
                    help="exchange the O and X marker roles")

    sp = sub.add_parser("homology", help="bigraded homology / boundary export")
    common(sp)
    sp.add_argument("--variant", choices=HOMOLOGY_VARIANTS, default="tilde")
    sp.add_argument("--pivot", choices=("low", "high"), default="low")

    common(sub.add_parser("lift", help="emit the universal-cover grid file"))
    common(sub.add_parser("verify-cover",
                          help="cross-check gradings through the cover"))

    sp = sub.add_parser("enumerate-gn1",
                        help="the p grid-number-one diagrams")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--format", choices=("human", "structured"),
                    default="human")

    sp = sub.add_parser("boundary-export", help="symbolic boundary terms")
    common(sp)
    sp.add_argument("--variant", choices=EXPORT_VARIANTS, default="minus")
    sp.add_argument("--debug-orientation", action="store_true",
                    help="use the reversed corner convention (wrong on "
                         "purpose; for tests)")

    sp = sub.add_parser("selftest", help="run the acceptance checklist")
    sp.add_argument("--seed", type=int, default=selftest.DEFAULT_SEED)
    sp.add_argument("--format", choices=("human", "structured"),
                    default="human")
    return parser


COMMANDS = {
    "validate": cmd_validate,
    "info": cmd_info,
    "gradings": cmd_gradings,
    "homology": cmd_homology,
    "lift": cmd_lift,
    "verify-cover": cmd_verify_cover,
    "enumerate-gn1": cmd_enumerate_gn1,
    "boundary-export": cmd_boundary_export,
    "selftest": cmd_selftest,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except ValidationError as exc:
        for v in exc.violations:
            print("error: %s" % v, file=sys.stderr)
        return 1
    except SizeCapError as exc:
        print("refused: %s" % exc, file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print("internal invariant violated: %s" % exc, file=sys.stderr)
        return 3
    except LensGridError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
