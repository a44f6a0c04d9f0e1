"""Command-line entry point.

Exit codes: 0 success or related, 1 input error, 2 validation failure,
3 negative comparison or internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .canon import Relation, canonical_code, canonical_tree_code, related
from .formats import dumps, load, to_dot
from .graphs import (
    CircleArrangement,
    DistinguishingGraph,
    Graph,
    GraphError,
    ValidationReport,
    tree_from_arrangement,
    validate_distinguishing,
    validate_local_tree,
    validate_point_graph,
)

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_NEGATIVE = 0, 1, 2, 3
MAX_ENUMERATE_N = 6
MAX_TABLE_N = 5

_VALIDATORS = {
    "local-tree": validate_local_tree,
    "point-graph": validate_point_graph,
    "distinguishing": validate_distinguishing,
}


class _Exit(Exception):
    def __init__(self, code: int, message: str = "") -> None:
        super().__init__(message)
        self.code = code
        self.message = message


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: bool, stream=None) -> str:
    stream = stream or sys.stdout
    if not _use_color(stream):
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _load(path: str) -> Graph:
    try:
        return load(path)
    except GraphError as exc:
        raise _Exit(EXIT_INPUT, f"error: {path}: {exc}") from None


def _validate(g: Graph) -> ValidationReport:
    return _VALIDATORS[g.graph_class](g)


def _load_valid(path: str) -> Graph:
    g = _load(path)
    report = _validate(g)
    if not report.ok:
        raise _Exit(EXIT_INVALID, f"error: {path}: invalid {g.graph_class}: {report.summary()}")
    return g


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    g = _load(args.path)
    report = _validate(g)
    if args.json:
        print(json.dumps({"class": g.graph_class, **report.to_dict()}, indent=2))
    elif report.ok:
        print(f"{_paint('valid', True)} {g.graph_class}")
    else:
        print(f"{_paint('invalid', False)} {g.graph_class}")
        for v in report.violations:
            print(f"  {v.rule}: {v.detail}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_local_tree(args) -> int:
    try:
        tree = tree_from_arrangement(CircleArrangement.from_parens(args.arrangement))
    except GraphError as exc:
        raise _Exit(EXIT_INPUT, f"error: {exc}") from None
    if args.code:
        print(canonical_tree_code(tree).hex())
    elif args.dot:
        sys.stdout.write(to_dot(tree, "local_tree"))
    else:
        sys.stdout.write(dumps(tree))
    return EXIT_OK


def cmd_compare(args) -> int:
    g1, g2 = _load_valid(args.a), _load_valid(args.b)
    relation = Relation(args.relation)
    expected = "local-tree" if relation is Relation.LOCAL_ISO else "distinguishing"
    for path, g in ((args.a, g1), (args.b, g2)):
        if g.graph_class != expected:
            raise _Exit(EXIT_INVALID, f"error: {path}: relation {relation.value} needs a {expected} document, got {g.graph_class}")
    if related(g1, g2, relation):
        print(_paint("RELATED", True))
        return EXIT_OK
    print(_paint("NOT-RELATED", False))
    return EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    from .enumeration import SignMode, _classes

    if not 1 <= args.n <= MAX_ENUMERATE_N:
        raise _Exit(EXIT_INPUT, f"error: n must lie in 1..{MAX_ENUMERATE_N}, got {args.n}")
    relation = Relation(args.relation)
    mode = SignMode(args.signs)
    classes = _classes(args.n, relation, mode, max(1, args.workers))
    if args.out is not None:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(len(classes)))
        entries = []
        for i, (code, g) in enumerate(classes, start=1):
            stem = f"class_{i:0{width}d}"
            (out / f"{stem}.json").write_text(dumps(g), encoding="utf-8")
            if args.dot:
                (out / f"{stem}.dot").write_text(to_dot(g, stem), encoding="utf-8")
            entries.append({"file": f"{stem}.json", "code": code.hex()})
        index = {
            "n": args.n,
            "relation": relation.value,
            "signs": mode.value,
            "count": len(classes),
            "classes": entries,
        }
        (out / "index.json").write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
    print(f"n={args.n} relation={relation.value} signs={mode.value} classes={len(classes)}")
    return EXIT_OK


def cmd_table(args) -> int:
    from .enumeration import pair_count_matrix
    from .tables import diff_against_published

    if not 1 <= args.n <= MAX_TABLE_N:
        raise _Exit(EXIT_INPUT, f"error: n must lie in 1..{MAX_TABLE_N}, got {args.n}")
    if args.diff_paper and args.n != 4:
        raise _Exit(EXIT_INPUT, "error: --diff-paper is only available for n=4")
    matrix = pair_count_matrix(args.n)
    sys.stdout.write(matrix.to_csv())
    if args.diff_paper:
        print()
        sys.stdout.write(diff_against_published(matrix.entries).render())
    return EXIT_OK


def cmd_signs(args) -> int:
    from .signs import sign_orbits

    g = _load_valid(args.path)
    if not isinstance(g, DistinguishingGraph):
        raise _Exit(EXIT_INVALID, f"error: {args.path}: expected a distinguishing document, got {g.graph_class}")
    for orbit in sign_orbits(g):
        vec = " ".join(f"{w}:{'+' if s > 0 else '-'}1" for w, s in sorted(orbit.representative.items()))
        print(f"{vec}  size={orbit.size}{'  oriented' if orbit.oriented else ''}")
    return EXIT_OK


def cmd_code(args) -> int:
    g = _load_valid(args.path)
    relation = Relation(args.relation)
    if relation is Relation.LOCAL_ISO:
        if g.graph_class != "local-tree":
            raise _Exit(EXIT_INVALID, f"error: {args.path}: relation local needs a local-tree document")
        print(canonical_tree_code(g).hex())
    else:
        if not isinstance(g, DistinguishingGraph):
            raise _Exit(EXIT_INVALID, f"error: {args.path}: relation {relation.value} needs a distinguishing document")
        print(canonical_code(g, relation).hex())
    return EXIT_OK


def cmd_report(args) -> int:
    from .report import build_report

    sys.stdout.write(build_report(workers=max(1, args.workers)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # bad flags are input errors
        self.print_usage(sys.stderr)
        raise _Exit(EXIT_INPUT, f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tricrit", description="Classify functions with three critical points on closed 3-manifolds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    relations = [r.value for r in Relation]

    s = sub.add_parser("validate", help="check a graph document against its class rules")
    s.add_argument("path", help="document path, or - for standard input")
    s.add_argument("--json", action="store_true", help="emit the report as JSON")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("local-tree", help="local tree of a circle arrangement such as '(())()'")
    s.add_argument("arrangement")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--code", action="store_true", help="print the canonical code instead of the document")
    g.add_argument("--dot", action="store_true", help="print DOT instead of the document")
    s.set_defaults(func=cmd_local_tree)

    s = sub.add_parser("compare", help="decide whether two documents are related")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--relation", choices=relations, default=Relation.CONJUGACY.value)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("code", help="print the canonical code of a document")
    s.add_argument("path")
    s.add_argument("--relation", choices=relations, default=Relation.CONJUGACY.value)
    s.set_defaults(func=cmd_code)

    s = sub.add_parser("enumerate", help="one representative per class of complexity n")
    s.add_argument("n", type=int)
    s.add_argument("--relation", choices=[Relation.CONJUGACY.value, Relation.EQUIVALENCE.value], default=Relation.CONJUGACY.value)
    s.add_argument("--signs", choices=["oriented", "nonoriented", "all"], default="oriented")
    s.add_argument("--out", metavar="DIR", help="write one document per class plus index.json")
    s.add_argument("--dot", action="store_true", help="also write DOT files")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("table", help="pair-count matrix as CSV")
    s.add_argument("n", type=int)
    s.add_argument("--diff-paper", action="store_true", help="compare with the bundled published n=4 table")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("signs", help="list sign-vector orbits of a distinguishing document")
    s.add_argument("path")
    s.set_defaults(func=cmd_signs)

    s = sub.add_parser("report", help="markdown regression report for n <= 4")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Exit as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except Exception as exc:  # pragma: no cover - internal error contract
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
