"""Ambient vector algebra and forward-mode dual numbers."""
import math

import numpy as np
from hypothesis import given, settings, strategies as st

from minkwebs import METRIC, dot, dual_vars, lower, raise_index, vec
from minkwebs.core import (DualScalar, grad_of, is_self_adjoint,
                           minkowski_norm2, sym_outer, value_of)

finite = st.floats(min_value=-50.0, max_value=50.0,
                   allow_nan=False, allow_infinity=False)


def test_metric_signature():
    assert np.array_equal(METRIC, np.diag([-1.0, 1.0, 1.0]))


def test_dot_signature_conventions():
    assert dot(vec(1, 0, 0), vec(1, 0, 0)) == -1.0
    assert dot(vec(0, 1, 0), vec(0, 1, 0)) == 1.0
    assert dot(vec(0, 0, 1), vec(0, 0, 1)) == 1.0
    assert dot(vec(1, 1, 0), vec(1, 1, 0)) == 0.0  # lightlike


@given(finite, finite, finite)
def test_lower_raise_inverse(t, x, y):
    v = vec(t, x, y)
    assert np.allclose(raise_index(lower(v)), v)
    assert np.allclose(lower(v), METRIC @ v)


@given(finite, finite, finite)
def test_minkowski_norm_is_dot(t, x, y):
    v = vec(t, x, y)
    assert minkowski_norm2(v) == dot(v, v)


def test_sym_outer_symmetric():
    u, v = vec(1.0, 2.0, 3.0), vec(-1.0, 0.5, 4.0)
    S = sym_outer(u, v)
    assert np.allclose(S, S.T)


def test_self_adjoint_predicate():
    # g A symmetric <=> self-adjoint; an antisymmetric lowered form is not
    assert is_self_adjoint(np.diag([1.0, 2.0, 3.0]))
    A = np.linalg.inv(METRIC) @ np.array([[0.0, 1.0, 0.0],
                                          [-1.0, 0.0, 0.0],
                                          [0.0, 0.0, 0.0]])
    assert not is_self_adjoint(A)


@given(st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
       st.floats(min_value=-3.0, max_value=3.0, allow_nan=False))
@settings(max_examples=50)
def test_dual_arithmetic_product_rule(a, b):
    x, y = dual_vars(a, b)
    p = x * y + x
    assert value_of(p) == a * b + a
    assert np.allclose(grad_of(p), [b + 1.0, a, 0.0])


def test_dual_chain_rule_matches_analytic():
    (x,) = dual_vars(0.7)
    f = (x * x + 1.0) / (x - 2.0)
    val = (0.49 + 1.0) / (0.7 - 2.0)
    der = (2 * 0.7 * (0.7 - 2.0) - (0.49 + 1.0)) / (0.7 - 2.0) ** 2
    assert math.isclose(value_of(f), val, rel_tol=1e-15)
    assert math.isclose(grad_of(f)[0], der, rel_tol=1e-13)


def test_dual_vars_seed_basis():
    x, y, z = dual_vars(1.0, 2.0, 3.0)
    assert isinstance(x, DualScalar)
    assert np.allclose(x.grad, [1, 0, 0])
    assert np.allclose(y.grad, [0, 1, 0])
    assert np.allclose(z.grad, [0, 0, 1])
