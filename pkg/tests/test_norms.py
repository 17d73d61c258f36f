import itertools
import math

import pytest
from hypothesis import given, strategies as st

from fpsoft.errors import ValidationError
from fpsoft.norms import NormKind, T_CONORMS, T_NORMS, dual_of, evaluate, is_t_norm, s_norm, t_norm

TOL = 1e-12
GRID = [i / 10 for i in range(11)]
unit = st.floats(0.0, 1.0, allow_nan=False)


@pytest.mark.parametrize("kind,a,b,expected", [
    (NormKind.MINIMUM, 0.5, 0.7, 0.5),
    (NormKind.MINIMUM, 0.9, 0.3, 0.3),
    (NormKind.EINSTEIN_PRODUCT, 0.5, 0.5, 0.2),   # 0.25 / (2 - 0.75)
    (NormKind.DRASTIC_PRODUCT, 0.3, 0.7, 0.0),
    (NormKind.DRASTIC_PRODUCT, 1.0, 0.7, 0.7),
    (NormKind.BOUNDED_PRODUCT, 0.6, 0.7, 0.3),
    (NormKind.ALGEBRAIC_PRODUCT, 0.5, 0.4, 0.2),
    (NormKind.HAMACHER_PRODUCT, 0.5, 0.5, 1 / 3),  # 0.25 / 0.75
    (NormKind.HAMACHER_PRODUCT, 0.0, 0.0, 0.0),
])
def test_t_norm_examples(kind, a, b, expected):
    assert t_norm(kind, a, b) == pytest.approx(expected, abs=TOL)


@pytest.mark.parametrize("kind,a,b,expected", [
    (NormKind.MAXIMUM, 0.5, 0.7, 0.7),
    (NormKind.BOUNDED_SUM, 0.6, 0.7, 1.0),
    (NormKind.EINSTEIN_SUM, 0.5, 0.5, 0.8),       # 1.0 / 1.25
    (NormKind.ALGEBRAIC_SUM, 0.5, 0.5, 0.75),
    (NormKind.HAMACHER_SUM, 0.5, 0.5, 2 / 3),     # 0.5 / 0.75
    (NormKind.HAMACHER_SUM, 1.0, 1.0, 1.0),
    (NormKind.DRASTIC_SUM, 0.3, 0.7, 1.0),
    (NormKind.DRASTIC_SUM, 0.0, 0.7, 0.7),
])
def test_s_norm_examples(kind, a, b, expected):
    assert s_norm(kind, a, b) == pytest.approx(expected, abs=TOL)


def test_kind_classification():
    assert len(T_NORMS) == len(T_CONORMS) == 6
    assert set(T_NORMS) | set(T_CONORMS) == set(NormKind)
    assert all(is_t_norm(k) for k in T_NORMS)
    assert not any(is_t_norm(k) for k in T_CONORMS)


@pytest.mark.parametrize("t,s", [
    (NormKind.DRASTIC_PRODUCT, NormKind.DRASTIC_SUM),
    (NormKind.BOUNDED_PRODUCT, NormKind.BOUNDED_SUM),
    (NormKind.EINSTEIN_PRODUCT, NormKind.EINSTEIN_SUM),
    (NormKind.ALGEBRAIC_PRODUCT, NormKind.ALGEBRAIC_SUM),
    (NormKind.HAMACHER_PRODUCT, NormKind.HAMACHER_SUM),
    (NormKind.MINIMUM, NormKind.MAXIMUM),
])
def test_dual_pairs(t, s):
    assert dual_of(t) is s
    assert dual_of(s) is t


@pytest.mark.parametrize("kind", list(NormKind))
def test_dual_is_involution(kind):
    assert dual_of(dual_of(kind)) is kind


def test_stable_names():
    assert NormKind("einstein_product") is NormKind.EINSTEIN_PRODUCT
    assert str(NormKind.HAMACHER_SUM) == "hamacher_sum"


def test_wrong_family_rejected():
    with pytest.raises(ValidationError):
        t_norm(NormKind.MAXIMUM, 0.1, 0.2)
    with pytest.raises(ValidationError):
        s_norm(NormKind.MINIMUM, 0.1, 0.2)


@pytest.mark.parametrize("a,b", [(-0.1, 0.5), (0.5, 1.5), (math.nan, 0.2), ("x", 0.2)])
def test_out_of_range_rejected(a, b):
    with pytest.raises(ValidationError):
        t_norm(NormKind.MINIMUM, a, b)


@pytest.mark.parametrize("kind", list(NormKind))
def test_boundary_axioms(kind):
    identity, absorbing = (1.0, 0.0) if is_t_norm(kind) else (0.0, 1.0)
    for a in GRID:
        assert abs(evaluate(kind, a, identity) - a) <= TOL
        assert abs(evaluate(kind, identity, a) - a) <= TOL
    assert evaluate(kind, absorbing, absorbing) == absorbing


@pytest.mark.parametrize("kind", list(NormKind))
def test_commutative_associative_on_grid(kind):
    f = lambda a, b: evaluate(kind, a, b)  # noqa: E731
    for a, b, c in itertools.product(GRID, repeat=3):
        assert abs(f(a, b) - f(b, a)) <= TOL
        assert abs(f(a, f(b, c)) - f(f(a, b), c)) <= TOL


@pytest.mark.parametrize("kind", list(NormKind))
def test_monotone_on_grid(kind):
    for a, b, c, d in itertools.product(GRID, repeat=4):
        if a <= c and b <= d:
            assert evaluate(kind, a, b) <= evaluate(kind, c, d) + TOL


@pytest.mark.parametrize("t", T_NORMS)
def test_de_morgan_on_grid(t):
    s = dual_of(t)
    for a, b in itertools.product(GRID, repeat=2):
        assert abs(s_norm(s, a, b) - (1 - t_norm(t, 1 - a, 1 - b))) <= TOL


@pytest.mark.parametrize("kind", list(NormKind))
@given(a=unit, b=unit, c=unit)
def test_laws_hold_for_random_triples(kind, a, b, c):
    f = lambda x, y: evaluate(kind, x, y)  # noqa: E731
    assert 0.0 <= f(a, b) <= 1.0
    assert abs(f(a, b) - f(b, a)) <= TOL
    lo, hi = sorted((a, c))
    assert f(lo, b) <= f(hi, b) + TOL


@pytest.mark.parametrize("kind", list(NormKind))
@given(a=unit, b=unit)
def test_bracketed_by_drastic_and_min_max(kind, a, b):
    v = evaluate(kind, a, b)
    if is_t_norm(kind):
        assert evaluate(NormKind.DRASTIC_PRODUCT, a, b) - TOL <= v <= min(a, b) + TOL
    else:
        assert max(a, b) - TOL <= v <= evaluate(NormKind.DRASTIC_SUM, a, b) + TOL
