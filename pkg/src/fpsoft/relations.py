"""FP-soft relations: products, restriction, inverse, composition, predicates.

A relation maps ordered parameter pairs ``(x, y)`` to an :class:`Entry`
holding a membership grade and an object set.  Entries are kept sorted by
(left-parameter index, right-parameter index).

Relations with an empty object set are a recurring corner case.  Cartesian
products always keep them; ``restrict`` and ``compose`` follow a
:class:`PairPolicy`, dropping them by default.
"""
from __future__ import annotations

import builtins
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple

from .errors import MismatchError, NotEquivalenceError, ValidationError
from .norms import NormKind, check_grade, is_t_norm, t_norm
from .sets import TOLERANCE, FPSoftElement, FPSoftSet, fp_subset

__all__ = [
    "DROP_EMPTY",
    "KEEP_EMPTY",
    "Entry",
    "FPSoftRelation",
    "PairPolicy",
    "at_least",
    "cartesian_product",
    "compose",
    "domain",
    "equivalence_class",
    "equivalence_classes",
    "inverse",
    "is_equivalence",
    "is_reflexive",
    "is_serial",
    "is_symmetric",
    "is_transitive",
    "make_relation",
    "power",
    "restrict",
]

Pair = tuple[str, str]


class Entry(NamedTuple):
    membership: float
    objects: frozenset


@dataclass(frozen=True)
class PairPolicy:
    """Whether pairs whose object set is empty survive an operation."""

    keep_empty: bool = False

    @classmethod
    def parse(cls, name: str) -> "PairPolicy":
        try:
            return {"keep-empty": KEEP_EMPTY, "drop-empty": DROP_EMPTY}[name]
        except KeyError:
            raise ValidationError(f"unknown pair policy {name!r}") from None

    def __str__(self):
        return "keep-empty" if self.keep_empty else "drop-empty"


KEEP_EMPTY = PairPolicy(keep_empty=True)
DROP_EMPTY = PairPolicy(keep_empty=False)


def _require_t_norm(norm) -> NormKind:
    norm = NormKind(norm)
    if not is_t_norm(norm):
        raise ValidationError(f"{norm.value} is not a t-norm")
    return norm


class FPSoftRelation:
    """An FP-soft subset of ``left`` x ``right``.

    ``norm`` records the t-norm that bounds entry memberships: every entry
    ``(x, y)`` satisfies ``membership <= norm(mu_left(x), mu_right(y))``.
    Use :func:`make_relation` for validated construction from raw data.
    """

    __slots__ = ("left", "right", "norm", "entries")

    def __init__(self, left: FPSoftSet, right: FPSoftSet, entries: Mapping[Pair, Entry], norm=NormKind.MINIMUM):
        if left.universe != right.universe or left.space != right.space:
            raise MismatchError("relation endpoints live over different universes or parameter spaces")
        self.left = left
        self.right = right
        self.norm = NormKind(norm)
        index = left.space.index
        self.entries = {k: entries[k] for k in sorted(entries, key=lambda p: (index(p[0]), index(p[1])))}

    @property
    def universe(self):
        return self.left.universe

    @property
    def space(self):
        return self.left.space

    @property
    def is_homogeneous(self) -> bool:
        """True for a relation on a single FP-soft set."""
        return self.left is self.right or self.left == self.right

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.items())

    def __getitem__(self, pair) -> Entry:
        return self.entries[tuple(pair)]

    def __eq__(self, other):
        if not isinstance(other, FPSoftRelation):
            return NotImplemented
        if self.left != other.left or self.right != other.right:
            return False
        if self.entries.keys() != other.entries.keys():
            return False
        return all(
            abs(e.membership - other.entries[k].membership) <= TOLERANCE
            and e.objects == other.entries[k].objects
            for k, e in self.entries.items()
        )

    __hash__ = None

    def __repr__(self):
        order = self.universe.ordered
        body = ", ".join(
            f"({e.membership}/({x},{y}), {{{', '.join(order(e.objects))}}})"
            for (x, y), e in self.entries.items()
        )
        return f"FPSoftRelation({{{body}}})"

    def domain(self) -> list[FPSoftElement]:
        rows = {x for x, _ in self.entries}
        return [self.left.element(x) for x in self.left.support if x in rows]

    def range(self) -> list[FPSoftElement]:
        cols = {y for _, y in self.entries}
        return [self.right.element(y) for y in self.right.support if y in cols]


def make_relation(
    left: FPSoftSet,
    right: FPSoftSet,
    entries: Mapping[Pair, tuple[float, Iterable[str]]],
    norm=NormKind.MINIMUM,
) -> FPSoftRelation:
    """Validate raw entries and build a relation from ``left`` to ``right``.

    Raises ValidationError when an entry is not contained in the
    corresponding entry of the cartesian product under ``norm``.
    """
    norm = _require_t_norm(norm)
    checked = {}
    for pair, (m, objs) in entries.items():
        x, y = pair
        if x not in left.approx:
            raise ValidationError(f"pair {pair!r}: {x!r} is not in the support of the left set")
        if y not in right.approx:
            raise ValidationError(f"pair {pair!r}: {y!r} is not in the support of the right set")
        m = check_grade(m, f"membership of {pair!r}")
        bound = t_norm(norm, left.fuzzy.grade(x), right.fuzzy.grade(y))
        if m > bound + TOLERANCE:
            raise ValidationError(f"pair {pair!r}: membership {m} exceeds product grade {bound}")
        objs = frozenset(objs)
        for u in objs:
            left.universe.index(u)
        stray = objs - (left.approx[x] & right.approx[y])
        if stray:
            raise ValidationError(
                f"pair {pair!r}: objects {sorted(stray)} are outside f({x}) & f({y})"
            )
        checked[(x, y)] = Entry(m, objs)
    return FPSoftRelation(left, right, checked, norm)


def cartesian_product(a: FPSoftSet, b: FPSoftSet, norm=NormKind.MINIMUM) -> FPSoftRelation:
    """All positive-grade pairs with t-norm grades and intersected object sets.

    Pairs whose intersection is empty are kept.
    """
    norm = _require_t_norm(norm)
    if a.universe != b.universe or a.space != b.space:
        raise MismatchError("cartesian product of FP-soft sets over different universes")
    entries = {}
    for x, mx in a.fuzzy.items():
        fx = a.approx[x]
        for y, my in b.fuzzy.items():
            entries[(x, y)] = Entry(t_norm(norm, mx, my), fx & b.approx[y])
    return FPSoftRelation(a, b, entries, norm)


def at_least(threshold: float) -> Callable[[Pair, float, frozenset], bool]:
    """Predicate for :func:`restrict`: membership >= ``threshold``."""
    threshold = float(threshold)
    return lambda pair, membership, objects: membership >= threshold


def restrict(product: FPSoftRelation, predicate, policy: PairPolicy = DROP_EMPTY) -> FPSoftRelation:
    """Keep the entries satisfying ``predicate(pair, membership, objects)``."""
    kept = {
        k: e for k, e in product.entries.items()
        if predicate(k, e.membership, e.objects) and (policy.keep_empty or e.objects)
    }
    return FPSoftRelation(product.left, product.right, kept, product.norm)


def domain(r: FPSoftRelation) -> list[FPSoftElement]:
    """Elements of the left set related to something, as originally given."""
    return r.domain()


def range(r: FPSoftRelation) -> list[FPSoftElement]:  # noqa: A001
    """Elements of the right set that something is related to."""
    return r.range()


def inverse(r: FPSoftRelation) -> FPSoftRelation:
    return FPSoftRelation(r.right, r.left, {(y, x): e for (x, y), e in r.entries.items()}, r.norm)


def compose(
    r1: FPSoftRelation,
    r2: FPSoftRelation,
    norm=NormKind.MINIMUM,
    policy: PairPolicy = DROP_EMPTY,
) -> FPSoftRelation:
    """Sup-t composition of ``r1`` (X to Y) with ``r2`` (Y to Z).

    A pair ``(x, z)`` has a witness ``y`` when ``(x, y)`` is in ``r1`` and
    ``(y, z)`` is in ``r2``.  Its membership is the largest
    ``norm(m1, m2)`` over witnesses and its objects are the union of the
    witnesses' pairwise intersections.  Under ``DROP_EMPTY`` a composite pair
    whose object union is empty is not materialized.
    """
    norm = _require_t_norm(norm)
    if r1.right != r2.left:
        raise MismatchError("right set of the first relation differs from left set of the second")
    by_middle: dict[str, list] = {}
    for (y, z), e in r2.entries.items():
        by_middle.setdefault(y, []).append((z, e))
    acc: dict[Pair, list] = {}
    for (x, y), e1 in r1.entries.items():
        for z, e2 in by_middle.get(y, ()):
            m = t_norm(norm, e1.membership, e2.membership)
            objs = e1.objects & e2.objects
            slot = acc.get((x, z))
            if slot is None:
                acc[(x, z)] = [m, objs]
            else:
                slot[0] = max(slot[0], m)
                slot[1] = slot[1] | objs
    entries = {
        k: Entry(m, frozenset(objs)) for k, (m, objs) in acc.items()
        if policy.keep_empty or objs
    }
    return FPSoftRelation(r1.left, r2.right, entries, norm)


def power(r: FPSoftRelation, n: int, norm=None, policy: PairPolicy = DROP_EMPTY) -> FPSoftRelation:
    """``r`` composed with itself ``n`` times (n >= 1)."""
    _require_homogeneous(r)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f"power exponent must be a positive integer, got {n!r}")
    norm = r.norm if norm is None else norm
    result = r
    for _ in builtins.range(n - 1):
        result = compose(result, r, norm, policy)
    return result


def _require_homogeneous(r: FPSoftRelation) -> None:
    if not r.is_homogeneous:
        raise MismatchError("predicate requires a relation on a single FP-soft set")


def is_symmetric(r: FPSoftRelation) -> bool:
    _require_homogeneous(r)
    for (x, y), e in r.entries.items():
        back = r.entries.get((y, x))
        if back is None or abs(back.membership - e.membership) > TOLERANCE or back.objects != e.objects:
            return False
    return True


def is_transitive(r: FPSoftRelation, policy: PairPolicy = DROP_EMPTY) -> bool:
    """True iff ``r o r`` is an FP-soft subset of ``r``.

    The composition uses the relation's own t-norm and ``policy``.
    """
    _require_homogeneous(r)
    return fp_subset(compose(r, r, r.norm, policy), r)


def is_reflexive(r: FPSoftRelation) -> bool:
    _require_homogeneous(r)
    return all((x, x) in r.entries for x in r.left.support)


def is_serial(r: FPSoftRelation, policy: PairPolicy = DROP_EMPTY) -> bool:
    """Every positive-grade parameter has an outgoing pair.

    Under ``DROP_EMPTY`` a pair only counts when its object set is nonempty.
    """
    _require_homogeneous(r)
    rows = {x for (x, _), e in r.entries.items() if policy.keep_empty or e.objects}
    return all(x in rows for x in r.left.support)


def is_equivalence(r: FPSoftRelation, policy: PairPolicy = DROP_EMPTY) -> bool:
    return is_symmetric(r) and is_reflexive(r) and is_transitive(r, policy)


def _parameter_of(r: FPSoftRelation, alpha) -> str:
    if isinstance(alpha, str):
        return r.left.element(alpha).parameter
    x = alpha.parameter
    own = r.left.element(x)
    if abs(own.membership - alpha.membership) > TOLERANCE or frozenset(alpha.objects) != own.objects:
        raise ValidationError(f"element {alpha!r} does not belong to the underlying FP-soft set")
    return x


def equivalence_class(r: FPSoftRelation, alpha, policy: PairPolicy = DROP_EMPTY) -> list[FPSoftElement]:
    """All elements related to ``alpha`` (an element or a parameter name)."""
    if not is_equivalence(r, policy):
        raise NotEquivalenceError("relation is not an FP-soft equivalence relation")
    x = _parameter_of(r, alpha)
    return [r.left.element(y) for y in r.left.support if (x, y) in r.entries]


def equivalence_classes(r: FPSoftRelation, policy: PairPolicy = DROP_EMPTY) -> list[list[FPSoftElement]]:
    """The distinct classes, ordered by their first member."""
    if not is_equivalence(r, policy):
        raise NotEquivalenceError("relation is not an FP-soft equivalence relation")
    seen = set()
    classes = []
    for x in r.left.support:
        if x in seen:
            continue
        cls = [r.left.element(y) for y in r.left.support if (x, y) in r.entries]
        seen.update(e.parameter for e in cls)
        classes.append(cls)
    return classes
