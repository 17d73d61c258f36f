"""Universes, parameter spaces, fuzzy sets and FP-soft sets.

All values are immutable.  Object and parameter identifiers are plain strings;
iteration order always follows the declaring :class:`Universe` or
:class:`ParameterSpace`, so printed output is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import MismatchError, ValidationError
from .norms import check_grade

__all__ = [
    "TOLERANCE",
    "FPSoftElement",
    "FPSoftSet",
    "FuzzySet",
    "ParameterSpace",
    "Universe",
    "elements",
    "fp_subset",
    "make_fp_soft_set",
]

#: absolute tolerance for membership comparisons in structural predicates
TOLERANCE = 1e-9


def _ordered_unique(items: Iterable[str], what: str) -> tuple[str, ...]:
    items = tuple(str(i) for i in items)
    seen = set()
    for item in items:
        if item in seen:
            raise ValidationError(f"duplicate {what} {item!r}")
        seen.add(item)
    return items


class _Ordered:
    """Shared behaviour of the two identifier containers."""

    _what = "identifier"

    def __init__(self, names: Iterable[str]):
        self._names = _ordered_unique(names, self._what)
        self._index = {n: i for i, n in enumerate(self._names)}

    def __iter__(self):
        return iter(self._names)

    def __len__(self):
        return len(self._names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return type(self) is type(other) and self._names == other._names

    def __hash__(self):
        return hash((type(self).__name__, self._names))

    def __repr__(self):
        return f"{type(self).__name__}({list(self._names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"unknown {self._what} {name!r}") from None

    def ordered(self, names: Iterable[str]) -> tuple[str, ...]:
        """Sort ``names`` into declaration order, rejecting strangers."""
        return tuple(sorted(set(names), key=self.index))


class Universe(_Ordered):
    """The ordered set of objects U."""

    _what = "object"

    @property
    def objects(self) -> tuple[str, ...]:
        return self._names


class ParameterSpace(_Ordered):
    """The ordered set of parameters E."""

    _what = "parameter"

    @property
    def parameters(self) -> tuple[str, ...]:
        return self._names


class FuzzySet:
    """A fuzzy subset of a parameter space; missing parameters have grade 0."""

    __slots__ = ("space", "_grades")

    def __init__(self, space: ParameterSpace, grades: Mapping[str, float] | None = None):
        self.space = space
        checked = {}
        for x, g in (grades or {}).items():
            space.index(x)
            g = check_grade(g, f"grade of {x!r}")
            if g > 0.0:
                checked[x] = g
        self._grades = {x: checked[x] for x in space.ordered(checked)}

    def grade(self, x: str) -> float:
        self.space.index(x)
        return self._grades.get(x, 0.0)

    @property
    def support(self) -> tuple[str, ...]:
        """Parameters with strictly positive grade, in space order."""
        return tuple(self._grades)

    def items(self):
        return self._grades.items()

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        if self.space != other.space or self.support != other.support:
            return False
        return all(abs(g - other._grades[x]) <= TOLERANCE for x, g in self._grades.items())

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{g}/{x}" for x, g in self._grades.items())
        return f"FuzzySet({{{body}}})"


class FPSoftElement(NamedTuple):
    """One materialized pair (mu(x)/x, f(x)) of an FP-soft set."""

    parameter: str
    membership: float
    objects: frozenset


@dataclass(frozen=True, eq=False)
class FPSoftSet:
    """A fuzzy parametrized soft set Gamma_X over a universe.

    Build instances with :func:`make_fp_soft_set`, which validates the
    inputs; ``approx`` holds an entry for every positive-grade parameter.
    """

    universe: Universe
    fuzzy: FuzzySet
    approx: Mapping[str, frozenset]

    @property
    def space(self) -> ParameterSpace:
        return self.fuzzy.space

    @property
    def support(self) -> tuple[str, ...]:
        return self.fuzzy.support

    def objects_of(self, x: str) -> frozenset:
        self.space.index(x)
        return self.approx.get(x, frozenset())

    def element(self, x: str) -> FPSoftElement:
        if x not in self.approx:
            raise ValidationError(f"parameter {x!r} has zero grade in this FP-soft set")
        return FPSoftElement(x, self.fuzzy.grade(x), self.approx[x])

    def __iter__(self):
        return iter(elements(self))

    def __len__(self):
        return len(self.approx)

    def __eq__(self, other):
        if not isinstance(other, FPSoftSet):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.fuzzy == other.fuzzy
            and dict(self.approx) == dict(other.approx)
        )

    __hash__ = None

    def __repr__(self):
        return "FPSoftSet({%s})" % ", ".join(
            f"({e.membership}/{e.parameter}, {set(self.universe.ordered(e.objects)) or '{}'})"
            for e in elements(self)
        )


def make_fp_soft_set(
    universe: Universe,
    fuzzy: FuzzySet,
    approx: Mapping[str, Iterable[str]],
) -> FPSoftSet:
    """Validate and build an FP-soft set.

    Parameters missing from ``approx`` get the empty set.  A zero-grade
    parameter may only be given an empty object set.
    """
    space = fuzzy.space
    table = {}
    for x, objs in approx.items():
        space.index(x)
        objs = frozenset(objs)
        for u in objs:
            universe.index(u)
        if fuzzy.grade(x) == 0.0:
            if objs:
                raise ValidationError(
                    f"parameter {x!r} has grade 0 but a nonempty object set"
                )
            continue
        table[x] = objs
    full = {x: table.get(x, frozenset()) for x in fuzzy.support}
    return FPSoftSet(universe, fuzzy, full)


def elements(fp_set: FPSoftSet) -> list[FPSoftElement]:
    """Positive-grade elements of ``fp_set`` in parameter-space order."""
    return [FPSoftElement(x, g, fp_set.approx[x]) for x, g in fp_set.fuzzy.items()]


def _entries_of(value):
    # FPSoftSet -> {x: (mu, objs)}; relations expose the same shape via .entries
    if isinstance(value, FPSoftSet):
        return value.universe, value.space, {
            e.parameter: (e.membership, e.objects) for e in elements(value)
        }
    return value.universe, value.space, value.entries


def fp_subset(a, b) -> bool:
    """FP-soft inclusion for two sets or two relations.

    True iff each entry of ``a`` has a counterpart in ``b`` under the same key
    whose membership is at least as large and whose object set contains it.
    """
    if type(a) is not type(b):
        raise MismatchError("cannot compare an FP-soft set with a relation")
    ua, sa, ea = _entries_of(a)
    ub, sb, eb = _entries_of(b)
    if ua != ub or sa != sb:
        raise MismatchError("operands are defined over different universes or parameter spaces")
    for key, (m, objs) in ea.items():
        other = eb.get(key)
        if other is None:
            return False
        if m > other[0] + TOLERANCE or not objs <= other[1]:
            return False
    return True
