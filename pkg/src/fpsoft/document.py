"""JSON problem documents and machine-readable result payloads.

A document carries one universe, one parameter space and any number of
named fuzzy sets, FP-soft sets and relations::

    {
      "universe": ["u1", "u2"],
      "parameters": ["x1", "x2"],
      "fuzzy_sets": {"X": {"x1": "0.5"}},
      "fp_soft_sets": {"gammaX": {"fuzzy_set": "X", "approx": {"x1": ["u1"]}}},
      "relations": {
        "R": {"left": "gammaX", "right": "gammaX", "threshold": "0.3"},
        "S": {"left": "gammaX", "right": "gammaX",
              "entries": [{"pair": ["x1", "x1"], "membership": "0.5", "objects": ["u1"]}]}
      }
    }

A relation is either *derived* (``threshold``, optional ``norm`` and
``policy``: the thresholded cartesian product) or *explicit* (``entries``).
Grades are decimal strings; JSON numbers are accepted too.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from pathlib import Path

from .decision import FuzzyRanking
from .errors import FPSoftError, ValidationError
from .norms import NormKind, check_grade, is_t_norm
from .relations import (
    DROP_EMPTY,
    FPSoftRelation,
    PairPolicy,
    at_least,
    cartesian_product,
    make_relation,
    restrict,
)
from .sets import FPSoftElement, FPSoftSet, FuzzySet, ParameterSpace, Universe, make_fp_soft_set

__all__ = [
    "DocumentError",
    "ProblemDocument",
    "dump_document",
    "element_to_json",
    "format_decimal",
    "load_document",
    "parse_document",
    "parse_grade",
    "parse_norm",
    "ranking_from_json",
    "ranking_to_json",
    "relation_from_json",
    "relation_to_json",
]


class DocumentError(ValidationError):
    """A document failed to parse or validate; ``errors`` lists every problem."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class ProblemDocument:
    universe: Universe
    space: ParameterSpace
    fuzzy_sets: dict = field(default_factory=dict)
    fp_soft_sets: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)
    # fp-soft-set name -> fuzzy-set name, relation name -> (left, right)
    fuzzy_of: dict = field(default_factory=dict)
    relation_ends: dict = field(default_factory=dict)

    def fp_set(self, name: str) -> FPSoftSet:
        try:
            return self.fp_soft_sets[name]
        except KeyError:
            raise ValidationError(f"no FP-soft set named {name!r}") from None

    def relation(self, name: str) -> FPSoftRelation:
        try:
            return self.relations[name]
        except KeyError:
            raise ValidationError(f"no relation named {name!r}") from None

    def name_of(self, fp_set: FPSoftSet) -> str:
        for name, s in self.fp_soft_sets.items():
            if s is fp_set:
                return name
        for name, s in self.fp_soft_sets.items():
            if s == fp_set:
                return name
        raise ValidationError("FP-soft set is not part of this document")


def format_decimal(x: float) -> str:
    """Shortest decimal string that reads back as the same float."""
    return repr(float(x))


def parse_grade(raw, where: str = "grade") -> float:
    if isinstance(raw, bool) or not isinstance(raw, (str, int, float)):
        raise ValidationError(f"{where}: expected a decimal, got {raw!r}")
    if isinstance(raw, str):
        try:
            Decimal(raw.strip())
        except InvalidOperation:
            raise ValidationError(f"{where}: {raw!r} is not a decimal") from None
    return check_grade(float(raw), where)


def parse_norm(raw, where: str = "norm", t_norm_only: bool = True) -> NormKind:
    prefix = f"{where}: " if where else ""
    try:
        kind = NormKind(raw)
    except ValueError:
        names = ", ".join(k.value for k in NormKind)
        raise ValidationError(f"{prefix}unknown norm {raw!r} (expected one of {names})") from None
    if t_norm_only and not is_t_norm(kind):
        raise ValidationError(f"{prefix}{kind.value} is not a t-norm")
    return kind


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ValidationError(f"duplicate name {k!r}")
        out[k] = v
    return out


def _loads(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise DocumentError([f"line {exc.lineno}, column {exc.colno}: {exc.msg}"]) from None
    except ValidationError as exc:
        raise DocumentError([str(exc)]) from None


def _names(raw, where):
    if not isinstance(raw, list) or not all(isinstance(n, str) for n in raw):
        raise ValidationError(f"{where}: expected a list of names")
    return raw


def _mapping(raw, where):
    if not isinstance(raw, dict):
        raise ValidationError(f"{where}: expected an object")
    return raw


def relation_from_json(doc: ProblemDocument, data, where: str = "relation") -> FPSoftRelation:
    """Build a relation from its document (or machine-output) form."""
    data = _mapping(data, where)
    left = doc.fp_set(data.get("left"))
    right = doc.fp_set(data.get("right", data.get("left")))
    norm = parse_norm(data.get("norm", "minimum"), f"{where}.norm")
    if "entries" in data:
        if "threshold" in data:
            raise ValidationError(f"{where}: give either entries or threshold, not both")
        entries = {}
        for i, item in enumerate(data["entries"]):
            item = _mapping(item, f"{where}.entries[{i}]")
            pair = tuple(_names(item.get("pair"), f"{where}.entries[{i}].pair"))
            if len(pair) != 2:
                raise ValidationError(f"{where}.entries[{i}].pair: expected two parameters")
            if pair in entries:
                raise ValidationError(f"{where}.entries[{i}]: duplicate pair {pair!r}")
            m = parse_grade(item.get("membership"), f"{where}.entries[{i}].membership")
            objs = _names(item.get("objects", []), f"{where}.entries[{i}].objects")
            entries[pair] = (m, objs)
        return make_relation(left, right, entries, norm)
    if "threshold" not in data:
        raise ValidationError(f"{where}: needs entries or threshold")
    threshold = parse_grade(data["threshold"], f"{where}.threshold")
    policy = PairPolicy.parse(data.get("policy", str(DROP_EMPTY)))
    return restrict(cartesian_product(left, right, norm), at_least(threshold), policy)


def parse_document(text: str) -> ProblemDocument:
    """Parse and validate a JSON problem document.

    Raises DocumentError carrying one message per problem found.
    """
    data = _loads(text)
    if not isinstance(data, dict):
        raise DocumentError(["document root must be an object"])
    errors = []
    for key in ("universe", "parameters"):
        if key not in data:
            errors.append(f"missing {key}")
    if errors:
        raise DocumentError(errors)
    try:
        universe = Universe(_names(data["universe"], "universe"))
        space = ParameterSpace(_names(data["parameters"], "parameters"))
    except FPSoftError as exc:
        raise DocumentError([str(exc)]) from None
    doc = ProblemDocument(universe, space)

    def attempt(where, fn):
        try:
            return fn()
        except FPSoftError as exc:
            errors.append(f"{where}: {exc}" if not str(exc).startswith(where) else str(exc))

    for section in ("fuzzy_sets", "fp_soft_sets", "relations"):
        if section in data and not isinstance(data[section], dict):
            errors.append(f"{section}: expected an object")
            data = {**data, section: {}}

    for name, grades in data.get("fuzzy_sets", {}).items():
        where = f"fuzzy_sets.{name}"

        def build_fuzzy(grades=grades, where=where):
            grades = _mapping(grades, where)
            return FuzzySet(space, {x: parse_grade(g, f"{where}.{x}") for x, g in grades.items()})

        fs = attempt(where, build_fuzzy)
        if fs is not None:
            doc.fuzzy_sets[name] = fs

    for name, spec in data.get("fp_soft_sets", {}).items():
        where = f"fp_soft_sets.{name}"

        def build_set(spec=spec, where=where):
            spec = _mapping(spec, where)
            fname = spec.get("fuzzy_set")
            if fname not in doc.fuzzy_sets:
                raise ValidationError(f"{where}.fuzzy_set: unresolved fuzzy set {fname!r}")
            approx = _mapping(spec.get("approx", {}), f"{where}.approx")
            approx = {x: _names(objs, f"{where}.approx.{x}") for x, objs in approx.items()}
            return fname, make_fp_soft_set(universe, doc.fuzzy_sets[fname], approx)

        built = attempt(where, build_set)
        if built is not None:
            doc.fuzzy_of[name], doc.fp_soft_sets[name] = built

    for name, spec in data.get("relations", {}).items():
        where = f"relations.{name}"
        rel = attempt(where, lambda spec=spec, where=where: relation_from_json(doc, spec, where))
        if rel is not None:
            doc.relations[name] = rel
            doc.relation_ends[name] = (spec["left"], spec.get("right", spec["left"]))

    if errors:
        raise DocumentError(errors)
    return doc


def load_document(path) -> ProblemDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def _objects(universe: Universe, objs) -> list[str]:
    return list(universe.ordered(objs))


def element_to_json(universe: Universe, e: FPSoftElement) -> dict:
    return {
        "parameter": e.parameter,
        "membership": format_decimal(e.membership),
        "objects": _objects(universe, e.objects),
    }


def relation_to_json(rel: FPSoftRelation, left: str, right: str) -> dict:
    return {
        "left": left,
        "right": right,
        "norm": rel.norm.value,
        "entries": [
            {
                "pair": [x, y],
                "membership": format_decimal(e.membership),
                "objects": _objects(rel.universe, e.objects),
            }
            for (x, y), e in rel.entries.items()
        ],
    }


def ranking_to_json(ranking: FuzzyRanking) -> dict:
    return {
        "scores": [{"object": u, "score": format_decimal(s)} for u, s in ranking.ranked()],
        "best": list(ranking.best),
    }


def ranking_from_json(doc: ProblemDocument, data) -> FuzzyRanking:
    data = _mapping(data, "ranking")
    scores = {}
    for item in data["scores"]:
        u = item["object"]
        doc.universe.index(u)
        scores[u] = parse_grade(item["score"], f"score of {u!r}")
    scores = {u: scores[u] for u in doc.universe.ordered(scores)}
    best = tuple(data["best"])
    return FuzzyRanking(doc.universe, scores, best)


def dump_document(doc: ProblemDocument) -> str:
    """Serialize ``doc``; every relation is written in explicit form."""
    out = {
        "universe": list(doc.universe),
        "parameters": list(doc.space),
        "fuzzy_sets": {
            name: {x: format_decimal(g) for x, g in fs.items()}
            for name, fs in doc.fuzzy_sets.items()
        },
        "fp_soft_sets": {
            name: {
                "fuzzy_set": doc.fuzzy_of[name],
                "approx": {x: _objects(doc.universe, objs) for x, objs in s.approx.items()},
            }
            for name, s in doc.fp_soft_sets.items()
        },
        "relations": {
            name: relation_to_json(rel, *doc.relation_ends[name])
            for name, rel in doc.relations.items()
        },
    }
    return json.dumps(out, indent=2) + "\n"
