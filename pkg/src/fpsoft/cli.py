"""Command line front end: ``fpsoft <command> --input <file> [flags]``.

Exit codes: 0 success, 1 validation error, 2 computation error, 64 usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal

from . import relations as rel
from .decision import DecisionConfig, decide
from .document import (
    element_to_json,
    format_decimal,
    load_document,
    parse_grade,
    parse_norm,
    ranking_to_json,
    relation_to_json,
)
from .errors import FPSoftError, ValidationError
from .norms import NormKind, evaluate
from .relations import DROP_EMPTY, PairPolicy

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_COMPUTATION = 2
EXIT_USAGE = 64

COMMANDS = ("product", "restrict", "invert", "compose", "check", "classes", "decide", "norm-eval")
PROPERTIES = ("symmetric", "transitive", "reflexive", "equivalence", "serial")


class UsageError(Exception):
    pass


def display_grade(x: float) -> str:
    """Render a grade truncated to three decimals: 0.0555... -> '0.055'.

    Values are first rounded to 9 places so float noise such as
    0.6999999999999999 still prints as 0.7.
    """
    d = Decimal(repr(float(x))).quantize(Decimal("1e-9"), rounding=ROUND_HALF_EVEN)
    d = d.quantize(Decimal("0.001"), rounding=ROUND_DOWN)
    s = format(d, "f").rstrip("0")
    return s + "0" if s.endswith(".") else s


def _objects_text(universe, objs) -> str:
    return "{" + ", ".join(universe.ordered(objs)) + "}"


def _relation_text(r, left: str, right: str) -> str:
    lines = [f"relation {left} -> {right} ({r.norm.value}, {len(r)} entries)"]
    for (x, y), e in r.entries.items():
        lines.append(f"  {display_grade(e.membership)}/({x},{y}), {_objects_text(r.universe, e.objects)}")
    return "\n".join(lines) + "\n"


def _element_text(universe, e) -> str:
    return f"({display_grade(e.membership)}/{e.parameter}, {_objects_text(universe, e.objects)})"


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _policy(flags) -> PairPolicy:
    return flags.get("policy") or DROP_EMPTY


def _norm(flags) -> NormKind:
    return flags.get("norm") or NormKind.MINIMUM


def run_command(command: str, doc, flags: dict) -> str:
    """Execute one command against a parsed document and return its output.

    ``flags`` holds already-validated option values keyed by option name.
    Library errors propagate to the caller.
    """
    machine = flags.get("format") == "machine"

    if command == "norm-eval":
        kind, a, b = flags["kind"], flags["a"], flags["b"]
        value = evaluate(kind, a, b)
        if machine:
            return _dump({"kind": "norm", "norm": kind.value, "a": format_decimal(a),
                          "b": format_decimal(b), "value": format_decimal(value)})
        return format_decimal(value) + "\n"

    if command in ("product", "restrict"):
        left_name = flags["left"]
        right_name = flags.get("right") or left_name
        r = rel.cartesian_product(doc.fp_set(left_name), doc.fp_set(right_name), _norm(flags))
        if command == "restrict":
            r = rel.restrict(r, rel.at_least(flags["threshold"]), _policy(flags))
        ends = (left_name, right_name)
    elif command == "invert":
        name = flags["relation"]
        r = rel.inverse(doc.relation(name))
        left_name, right_name = doc.relation_ends[name]
        ends = (right_name, left_name)
    elif command == "compose":
        first = flags["relation"]
        second = flags.get("with") or first
        r = rel.compose(doc.relation(first), doc.relation(second), _norm(flags), _policy(flags))
        ends = (doc.relation_ends[first][0], doc.relation_ends[second][1])
    elif command == "check":
        name = flags["relation"]
        r = doc.relation(name)
        props = flags.get("properties") or PROPERTIES[:4]
        checks = {
            "symmetric": lambda: rel.is_symmetric(r),
            "transitive": lambda: rel.is_transitive(r, _policy(flags)),
            "reflexive": lambda: rel.is_reflexive(r),
            "equivalence": lambda: rel.is_equivalence(r, _policy(flags)),
            "serial": lambda: rel.is_serial(r, _policy(flags)),
        }
        results = {p: checks[p]() for p in props}
        if machine:
            return _dump({"kind": "check", "relation": name, "properties": results})
        return "".join(f"{p}: {'true' if v else 'false'}\n" for p, v in results.items())
    elif command == "classes":
        name = flags["relation"]
        r = doc.relation(name)
        if flags.get("element"):
            classes = [rel.equivalence_class(r, flags["element"], _policy(flags))]
        else:
            classes = rel.equivalence_classes(r, _policy(flags))
        if machine:
            return _dump({"kind": "classes", "relation": name, "classes": [
                [element_to_json(r.universe, e) for e in cls] for cls in classes]})
        lines = []
        for cls in classes:
            body = ", ".join(_element_text(r.universe, e) for e in cls)
            lines.append(f"[{cls[0].parameter}] = {{{body}}}")
        return "\n".join(lines) + "\n"
    elif command == "decide":
        name = flags["set"]
        config = DecisionConfig(flags["threshold"], _norm(flags), _policy(flags))
        ranking = decide(doc.fp_set(name), config)
        if machine:
            return _dump({"kind": "ranking", "set": name, **ranking_to_json(ranking)})
        lines = [f"{display_grade(s)}/{u}" for u, s in ranking.ranked()]
        if ranking.best:
            lines.append(f"best: {' '.join(ranking.best)} ({display_grade(ranking.best_score)})")
        else:
            lines.append("best: (none)")
        return "\n".join(lines) + "\n"
    else:
        raise UsageError(f"unknown command {command!r}")

    if machine:
        return _dump({"kind": "relation", **relation_to_json(r, *ends)})
    return _relation_text(r, *ends)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _typed(fn):
    def convert(raw):
        try:
            return fn(raw)
        except FPSoftError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    convert.__name__ = fn.__name__
    return convert


def _grade(raw):
    return parse_grade(raw, "value")


def _t_norm(raw):
    return parse_norm(raw, "")


def _any_norm(raw):
    return parse_norm(raw, "", t_norm_only=False)


def _properties(raw):
    props = tuple(p.strip() for p in raw.split(",") if p.strip())
    bad = [p for p in props if p not in PROPERTIES]
    if bad or not props:
        raise ValidationError(f"unknown properties {bad} (expected {', '.join(PROPERTIES)})")
    return props


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fpsoft", description="FP-soft set relations and decision making.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    common = _Parser(add_help=False)
    common.add_argument("--input", required=True, help="JSON problem document")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    algebra = _Parser(add_help=False)
    algebra.add_argument("--norm", type=_typed(_t_norm), help="t-norm (default minimum)")
    algebra.add_argument("--policy", type=_typed(PairPolicy.parse),
                         help="keep-empty or drop-empty (default drop-empty)")

    p = sub.add_parser("product", parents=[common, algebra], help="cartesian product of two FP-soft sets")
    p.add_argument("--left", required=True)
    p.add_argument("--right")

    p = sub.add_parser("restrict", parents=[common, algebra], help="thresholded cartesian product")
    p.add_argument("--left", required=True)
    p.add_argument("--right")
    p.add_argument("--threshold", required=True, type=_typed(_grade))

    p = sub.add_parser("invert", parents=[common], help="inverse of a named relation")
    p.add_argument("--relation", required=True)

    p = sub.add_parser("compose", parents=[common, algebra], help="composition of two named relations")
    p.add_argument("--relation", required=True)
    p.add_argument("--with", dest="with_")

    p = sub.add_parser("check", parents=[common, algebra], help="relation property predicates")
    p.add_argument("--relation", required=True)
    p.add_argument("--properties", type=_typed(_properties))

    p = sub.add_parser("classes", parents=[common, algebra], help="equivalence classes")
    p.add_argument("--relation", required=True)
    p.add_argument("--element", help="parameter whose class is wanted (default: all classes)")

    p = sub.add_parser("decide", parents=[common, algebra], help="rank objects by fuzzification")
    p.add_argument("--set", required=True, dest="set_")
    p.add_argument("--threshold", required=True, type=_typed(_grade))

    p = sub.add_parser("norm-eval", help="evaluate one norm")
    p.add_argument("--kind", required=True, type=_typed(_any_norm))
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("a", type=_typed(_grade))
    p.add_argument("b", type=_typed(_grade))
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with contextlib.redirect_stderr(stderr):
            args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    flags = {k.rstrip("_"): v for k, v in vars(args).items()}
    command = flags.pop("command")
    try:
        doc = load_document(flags["input"]) if "input" in flags else None
    except OSError as exc:
        print(f"fpsoft: cannot read {flags['input']}: {exc.strerror}", file=stderr)
        return EXIT_VALIDATION
    except FPSoftError as exc:
        print(f"fpsoft: invalid document: {exc}", file=stderr)
        return EXIT_VALIDATION
    try:
        output = run_command(command, doc, flags)
    except UsageError as exc:
        print(f"fpsoft: {exc}", file=stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"fpsoft: {exc}", file=stderr)
        return EXIT_VALIDATION
    except FPSoftError as exc:
        print(f"fpsoft: {exc}", file=stderr)
        return EXIT_COMPUTATION
    stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
