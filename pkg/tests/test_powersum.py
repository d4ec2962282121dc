from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reccf import (
    InvalidRootError,
    PowerSum,
    ell,
    evaluate,
    integer_root_subsum,
    is_in_E,
    min_clearing_denominator,
    normalize,
    scale,
    scale_roots,
)
from reccf.expr import parse_power_sum as ps

from conftest import power_sums


def test_normalize_merges_duplicate_roots():
    assert normalize([(2, 1), (2, 1)]).terms == ((F(2), F(2)),)


def test_normalize_cancels_to_zero():
    zero = normalize([(2, 1), (2, -1)])
    assert zero == PowerSum() and zero.terms == ()


def test_normalize_orders_roots_descending():
    assert normalize([(3, 2), (F(1, 2), 1), (4, 5)]).roots == (4, 3, F(1, 2))


@pytest.mark.parametrize("root", [0, -1, F(-1, 2)])
def test_nonpositive_root_rejected(root):
    with pytest.raises(InvalidRootError):
        normalize([(root, 1)])


def test_add_and_scale_examples():
    assert ps("2^n") + ps("-2^n") == PowerSum()
    assert ps("3*4^n") + ps("2^n") == PowerSum([(4, 3), (2, 1)])
    assert scale(ps("2^n - 1"), F(1, 3)) == PowerSum([(2, F(1, 3)), (1, F(-1, 3))])


def test_mul_examples():
    assert ps("2^n + 1") * ps("2^n - 1") == ps("4^n - 1")
    assert ps("3*4^n + 2^n") * PowerSum() == PowerSum()
    assert ell(ps("2^n") * ps("3^n")) == 6


def test_ell_examples():
    assert ell(ps("3*4^n + 2^n")) == 4
    assert ell(PowerSum()) == 0
    assert ell(ps("(3/2)^n + (1/2)^n")) == F(3, 2)


@pytest.mark.parametrize("text,n,value", [("2^n - 1", 5, 31), ("(1/2)*4^n", 3, 32), ("3*4^n + 2^n", 2, 52)])
def test_eval_examples(text, n, value):
    assert evaluate(ps(text), n) == value


def test_scale_roots_examples():
    assert scale_roots(ps("6^n"), F(1, 2)) == ps("3^n")
    assert scale_roots(ps("2^n + 1"), F(1, 2)) == ps("1 + (1/2)^n")
    with pytest.raises(InvalidRootError):
        scale_roots(ps("2^n"), 0)


@given(power_sums(), st.builds(F, st.integers(1, 30), st.integers(1, 30)), st.integers(0, 20))
def test_scale_roots_matches_pointwise_product(alpha, factor, n):
    assert evaluate(scale_roots(alpha, factor), n) == evaluate(alpha, n) * factor**n


def test_integer_root_subsum_and_membership():
    assert integer_root_subsum(ps("2*5^n + 7*(3/2)^n + 3*(1/2)^n")) == ps("2*5^n")
    assert integer_root_subsum(ps("4 + (1/3)^n")) == ps("4")
    assert not is_in_E(ps("(3/2)^n"))
    assert is_in_E(ps("7*9^n - 1"))


def test_min_clearing_denominator():
    assert min_clearing_denominator(ps("(3/2)^n + 5^n")) == 2
    assert min_clearing_denominator(ps("(1/6)^n + (2/3)^n")) == 6
    assert min_clearing_denominator(ps("3*7^n - 2")) == 1
    assert min_clearing_denominator(PowerSum()) == 1


@given(power_sums())
def test_clearing_denominator_is_minimal(zeta):
    D = min_clearing_denominator(zeta)
    assert is_in_E(scale_roots(zeta, D))
    assert all(not is_in_E(scale_roots(zeta, d)) for d in range(1, D) if D % d == 0)


@given(power_sums())
def test_normalize_idempotent(alpha):
    assert normalize(alpha.terms) == alpha
    assert normalize(normalize(alpha.terms).terms).terms == alpha.terms


@given(power_sums(), power_sums(), power_sums())
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == PowerSum()


@given(power_sums(), power_sums())
def test_valuation_calculus(a, b):
    assert ell(a * b) == ell(a) * ell(b)
    assert ell(a + b) <= max(ell(a), ell(b))


@given(power_sums(max_terms=4), power_sums(max_terms=4))
@settings(max_examples=30)
def test_evaluation_is_a_homomorphism(a, b):
    for n in range(31):
        assert evaluate(a + b, n) == evaluate(a, n) + evaluate(b, n)
        assert evaluate(a * b, n) == evaluate(a, n) * evaluate(b, n)


def growth_threshold(alpha, limit=2000):
    """Smallest N0 after which |alpha(n)/ell^n - c1| < |c1|/2 holds through ``limit``."""
    c1, top = alpha.leading_coefficient, alpha.ell
    last_bad = -1
    for n in range(limit):
        if not abs(alpha(n) / top**n - c1) < abs(c1) / 2:
            last_bad = n
    return last_bad + 1


@pytest.mark.parametrize(
    "text,expected_n0",
    [("3*4^n + 2^n", 0), ("2^n - 1", 2), ("5^n - 1000*4^n", 35), ("(3/2)^n + 7*(4/3)^n", 23)],
)
def test_growth_threshold_recorded(text, expected_n0):
    alpha = ps(text)
    assert growth_threshold(alpha) == expected_n0


def test_operators_coerce_scalars():
    assert 1 - ps("2^n") == ps("1 - 2^n")
    assert ps("2^n") * F(1, 2) == ps("(1/2)*2^n")
    assert 3 * ps("2^n") == ps("3*2^n")
    assert ps("2^n + 1") ** 2 == ps("4^n + 2*2^n + 1")
