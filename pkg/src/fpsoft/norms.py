"""The twelve classical t-norms and t-conorms on the unit interval.

Every norm is a pure function of two membership grades.  Kinds are addressed
by stable snake_case names (``NormKind("einstein_product")``) so they can be
selected from the command line and from problem documents.
"""
from __future__ import annotations

import enum
import math

from .errors import ValidationError

__all__ = [
    "NormKind",
    "T_NORMS",
    "T_CONORMS",
    "check_grade",
    "dual_of",
    "evaluate",
    "is_t_norm",
    "s_norm",
    "t_norm",
]


class NormKind(str, enum.Enum):
    DRASTIC_PRODUCT = "drastic_product"
    DRASTIC_SUM = "drastic_sum"
    BOUNDED_PRODUCT = "bounded_product"
    BOUNDED_SUM = "bounded_sum"
    EINSTEIN_PRODUCT = "einstein_product"
    EINSTEIN_SUM = "einstein_sum"
    ALGEBRAIC_PRODUCT = "algebraic_product"
    ALGEBRAIC_SUM = "algebraic_sum"
    HAMACHER_PRODUCT = "hamacher_product"
    HAMACHER_SUM = "hamacher_sum"
    MINIMUM = "minimum"
    MAXIMUM = "maximum"

    def __str__(self) -> str:
        return self.value


_DUALS = {
    NormKind.DRASTIC_PRODUCT: NormKind.DRASTIC_SUM,
    NormKind.BOUNDED_PRODUCT: NormKind.BOUNDED_SUM,
    NormKind.EINSTEIN_PRODUCT: NormKind.EINSTEIN_SUM,
    NormKind.ALGEBRAIC_PRODUCT: NormKind.ALGEBRAIC_SUM,
    NormKind.HAMACHER_PRODUCT: NormKind.HAMACHER_SUM,
    NormKind.MINIMUM: NormKind.MAXIMUM,
}
_DUALS.update({s: t for t, s in list(_DUALS.items())})

T_NORMS = (
    NormKind.DRASTIC_PRODUCT,
    NormKind.BOUNDED_PRODUCT,
    NormKind.EINSTEIN_PRODUCT,
    NormKind.ALGEBRAIC_PRODUCT,
    NormKind.HAMACHER_PRODUCT,
    NormKind.MINIMUM,
)
T_CONORMS = tuple(_DUALS[k] for k in T_NORMS)


def check_grade(value: float, what: str = "membership grade") -> float:
    """Return ``value`` as a float, rejecting anything outside [0, 1]."""
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{what} {value!r} is not a number") from None
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise ValidationError(f"{what} {value!r} is outside [0, 1]")
    return value


def is_t_norm(kind: NormKind) -> bool:
    return NormKind(kind) in T_NORMS


def dual_of(kind: NormKind) -> NormKind:
    """Return the De Morgan dual of ``kind`` under the negation 1 - x."""
    return _DUALS[NormKind(kind)]


def _drastic_product(a, b):
    return min(a, b) if max(a, b) == 1.0 else 0.0


def _drastic_sum(a, b):
    return max(a, b) if min(a, b) == 0.0 else 1.0


def _bounded_product(a, b):
    return max(0.0, a + b - 1.0)


def _bounded_sum(a, b):
    return min(1.0, a + b)


def _einstein_product(a, b):
    return (a * b) / (2.0 - (a + b - a * b))


def _einstein_sum(a, b):
    return (a + b) / (1.0 + a * b)


def _algebraic_product(a, b):
    return a * b


def _algebraic_sum(a, b):
    return a + b - a * b


def _hamacher_product(a, b):
    # limit value at the removable singularity a = b = 0
    if a == 0.0 and b == 0.0:
        return 0.0
    return (a * b) / (a + b - a * b)


def _hamacher_sum(a, b):
    # limit value at the removable singularity a = b = 1
    if a == 1.0 and b == 1.0:
        return 1.0
    return (a + b - 2.0 * a * b) / (1.0 - a * b)


_FORMULAS = {
    NormKind.DRASTIC_PRODUCT: _drastic_product,
    NormKind.DRASTIC_SUM: _drastic_sum,
    NormKind.BOUNDED_PRODUCT: _bounded_product,
    NormKind.BOUNDED_SUM: _bounded_sum,
    NormKind.EINSTEIN_PRODUCT: _einstein_product,
    NormKind.EINSTEIN_SUM: _einstein_sum,
    NormKind.ALGEBRAIC_PRODUCT: _algebraic_product,
    NormKind.ALGEBRAIC_SUM: _algebraic_sum,
    NormKind.HAMACHER_PRODUCT: _hamacher_product,
    NormKind.HAMACHER_SUM: _hamacher_sum,
    NormKind.MINIMUM: min,
    NormKind.MAXIMUM: max,
}


def _clip(x: float) -> float:
    # rounding in the rational formulas can leave the interval by an ulp
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


def evaluate(kind: NormKind, a: float, b: float) -> float:
    """Evaluate any norm, t-norm or t-conorm, on two grades."""
    kind = NormKind(kind)
    a = check_grade(a)
    b = check_grade(b)
    return _clip(float(_FORMULAS[kind](a, b)))


def t_norm(kind: NormKind, a: float, b: float) -> float:
    """Evaluate the t-norm ``kind`` on ``a`` and ``b``.

    >>> t_norm(NormKind.EINSTEIN_PRODUCT, 0.5, 0.5)
    0.2
    """
    if not is_t_norm(kind):
        raise ValidationError(f"{NormKind(kind).value} is a t-conorm, not a t-norm")
    return evaluate(kind, a, b)


def s_norm(kind: NormKind, a: float, b: float) -> float:
    """Evaluate the t-conorm ``kind`` on ``a`` and ``b``."""
    if is_t_norm(kind):
        raise ValidationError(f"{NormKind(kind).value} is a t-norm, not a t-conorm")
    return evaluate(kind, a, b)
