"""Command-line interface: ``d2color <command> ...``.

Artifacts (graphs, colourings) go to stdout and diagnostics to stderr.

Exit status: 0 success, 1 negative answer (unsat, invalid colouring),
2 search budget exhausted, 64 usage error, 65 bad input data, 70 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import families
from .coloring import derived_edge_coloring, verify_distance_two
from .errors import D2ColorError, DataError, InternalInconsistency
from .exact_solver import DEFAULT_BUDGET, solve
from .fileformat import (
    parse_coloring,
    parse_graph,
    read_text,
    serialize_coloring,
    serialize_edge_coloring,
    serialize_graph,
)
from .plane_graph import FOUR_GRAPH, GOODEY, classify
from .reduction import ReductionCertificate, extract_three_coloring, reduce

EX_OK, EX_NO, EX_BUDGET = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_SOFTWARE = 64, 65, 70

# families that take an integer parameter
_PARAM_FAMILIES = {"prism", "ck"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _load_graph(path):
    return parse_graph(read_text(path))


def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    rep = classify(g)
    counts = rep.face_size_counts
    lines = [
        f"vertices:{rep.vertex_count}",
        f"edges:{rep.edge_count}",
        f"faces:{len(rep.face_sizes)}",
        "face_sizes:" + " ".join(f"{s}x{k}" for s, k in counts.items()),
        f"squares:{counts.get(4, 0)}",
        f"cubic:{str(rep.is_cubic).lower()}",
        f"quartic:{str(rep.is_quartic).lower()}",
        f"bipartite:{str(rep.is_bipartite).lower()}",
        f"connectivity:{rep.connectivity}",
    ]
    for flag in ("type_one_barnette", "type_two_barnette", "goodey", "four_graph"):
        lines.append(f"{flag}:{str(flag in rep.flags).lower()}")
    print("\n".join(lines))
    return EX_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    c, stats = solve(g, args.colors, args.budget)
    print(f"nodes explored: {stats.nodes_explored}", file=sys.stderr)
    if c is not None:
        sys.stdout.write(serialize_coloring(c))
        return EX_OK
    if stats.wall_budget_exceeded:
        print("budget exhausted", file=sys.stderr)
        return EX_BUDGET
    print(f"no distance-two {args.colors}-colouring", file=sys.stderr)
    return EX_NO


def cmd_verify(args) -> int:
    if args.graph == "-" and args.coloring == "-":
        raise DataError("graph and colouring cannot both come from stdin")
    g = _load_graph(args.graph)
    c = parse_coloring(read_text(args.coloring), g.vertex_count)
    bad = verify_distance_two(g, c)
    for v in bad:
        print(v)
    if not bad:
        print("ok")
    return EX_NO if bad else EX_OK


def cmd_generate(args) -> int:
    fam = args.family
    if fam not in families.GENERATORS:
        print(f"unknown family {fam!r}; choose from {', '.join(sorted(families.GENERATORS))}", file=sys.stderr)
        return EX_USAGE
    if fam in _PARAM_FAMILIES:
        if len(args.params) != 1:
            print(f"family {fam} takes one integer parameter", file=sys.stderr)
            return EX_USAGE
        try:
            k = int(args.params[0])
        except ValueError:
            print(f"parameter must be an integer, got {args.params[0]!r}", file=sys.stderr)
            return EX_USAGE
        g = families.GENERATORS[fam](k)
        label = f"{fam} {k}"
    else:
        if args.params:
            print(f"family {fam} takes no parameters", file=sys.stderr)
            return EX_USAGE
        g = families.GENERATORS[fam]()
        label = fam
    sys.stdout.write(serialize_graph(g, label))
    return EX_OK


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    flags = classify(g).flags
    verdict = "none"
    if GOODEY in flags:
        k = families.recognize_ck(g)
        if k is not None:
            verdict = f"ck {k}"
        else:
            _, why = families.trace_ck_structure(g)
            print(f"goodey graph, not C_k: {why}", file=sys.stderr)
    elif FOUR_GRAPH in flags:
        verdict = families.recognize_four_graph(g) or "none"
    print(verdict)
    return EX_OK


def cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    gp, cert = reduce(g)
    Path(args.cert).write_text(cert.serialize())
    sys.stdout.write(serialize_graph(gp, f"gadget graph for a {g.vertex_count}-vertex input"))
    return EX_OK


def cmd_extract(args) -> int:
    sources = [args.gprime, args.cert, args.coloring]
    if sources.count("-") > 1:
        raise DataError("at most one input can come from stdin")
    gp = _load_graph(args.gprime)
    cert = ReductionCertificate.parse(read_text(args.cert))
    c = parse_coloring(read_text(args.coloring), gp.vertex_count)
    sys.stdout.write(serialize_coloring(extract_three_coloring(gp, cert, c)))
    return EX_OK


def cmd_edgecolor(args) -> int:
    if args.graph == "-" and args.coloring == "-":
        raise DataError("graph and colouring cannot both come from stdin")
    g = _load_graph(args.graph)
    c = parse_coloring(read_text(args.coloring), g.vertex_count)
    sys.stdout.write(serialize_edge_coloring(derived_edge_coloring(g, c)))
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="d2color", description="Distance-two colourings of plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="degrees, faces, connectivity and family flags")
    s.add_argument("graph")
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("solve", help="exact search for a distance-two colouring")
    s.add_argument("graph")
    s.add_argument("--colors", "-r", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    s.set_defaults(run=cmd_solve)

    s = sub.add_parser("verify", help="check a colouring; lists every violation")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("generate", help="print a named graph")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.set_defaults(run=cmd_generate)

    s = sub.add_parser("recognize", help="ck <k>, g0, g1 or none")
    s.add_argument("graph")
    s.set_defaults(run=cmd_recognize)

    s = sub.add_parser("reduce", help="gadget graph on stdout, certificate to --cert")
    s.add_argument("graph")
    s.add_argument("--cert", required=True, help="where to write the certificate")
    s.set_defaults(run=cmd_reduce)

    s = sub.add_parser("extract", help="3-colouring of the input from a gadget colouring")
    s.add_argument("gprime")
    s.add_argument("cert")
    s.add_argument("coloring")
    s.set_defaults(run=cmd_extract)

    s = sub.add_parser("edgecolor", help="derived 3-edge-colouring of a 4-colouring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(run=cmd_edgecolor)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EX_SOFTWARE
    except (DataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except D2ColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
