"""Fuzzification of FP-soft relations and the threshold decision method."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import EmptySupportError, MismatchError
from .norms import NormKind, check_grade
from .relations import DROP_EMPTY, FPSoftRelation, PairPolicy, at_least, cartesian_product, restrict
from .sets import TOLERANCE, FPSoftSet, Universe

__all__ = ["DecisionConfig", "FuzzyRanking", "decide", "fuzzify"]


@dataclass(frozen=True)
class FuzzyRanking:
    """Scores of every object of a universe plus the set of best objects."""

    universe: Universe
    scores: dict = field(compare=False)
    best: tuple

    def ranked(self) -> list[tuple[str, float]]:
        """(object, score) pairs, highest first, ties in universe order."""
        order = self.universe.index
        return sorted(self.scores.items(), key=lambda kv: (-kv[1], order(kv[0])))

    @property
    def best_score(self) -> float:
        return max(self.scores.values()) if self.scores else 0.0

    def __eq__(self, other):
        if not isinstance(other, FuzzyRanking):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.best == other.best
            and self.scores.keys() == other.scores.keys()
            and all(abs(s - other.scores[u]) <= TOLERANCE for u, s in self.scores.items())
        )

    __hash__ = None


@dataclass(frozen=True)
class DecisionConfig:
    threshold: float
    norm: NormKind = NormKind.MINIMUM
    policy: PairPolicy = DROP_EMPTY

    def __post_init__(self):
        object.__setattr__(self, "threshold", check_grade(self.threshold, "threshold"))
        object.__setattr__(self, "norm", NormKind(self.norm))


def _argmax(scores: dict) -> tuple:
    if not scores:
        return ()
    top = max(scores.values())
    return tuple(u for u, s in scores.items() if top - s <= TOLERANCE)


def fuzzify(r: FPSoftRelation, base: FPSoftSet) -> FuzzyRanking:
    """Turn a relation on ``base`` into a fuzzy set over the universe.

    Each object scores the sum of memberships of the pairs whose object set
    contains it, divided by the squared size of the support of ``base``.
    """
    if not r.is_homogeneous or r.left != base:
        raise MismatchError("relation is not a relation on the given FP-soft set")
    n = len(base.support)
    if n == 0:
        raise EmptySupportError("the FP-soft set has no parameter with positive grade")
    hits: dict[str, list[float]] = {u: [] for u in base.universe}
    for entry in r.entries.values():
        for u in entry.objects:
            hits[u].append(entry.membership)
    scores = {u: math.fsum(ms) / (n * n) for u, ms in hits.items()}
    return FuzzyRanking(base.universe, scores, _argmax(scores))


def decide(base: FPSoftSet, config: DecisionConfig) -> FuzzyRanking:
    """Self-product, threshold restriction, fuzzification, argmax."""
    product = cartesian_product(base, base, config.norm)
    relation = restrict(product, at_least(config.threshold), config.policy)
    return fuzzify(relation, base)
