"""Self-adjoint canonical forms: classification, synthesis, and their inverses."""
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minkwebs.core import METRIC, is_self_adjoint
from minkwebs.errors import DegenerateAmbiguity
from minkwebs.jordan import (
    JordanBlockSpec,
    MetricJordanForm,
    charpoly_coeffs,
    metric_jordan_form,
    pseudo_orthogonal,
    random_pseudo_orthogonal,
    solve_cubic,
    synthesize_operator,
)

G = METRIC


def _blocks_key(form):
    return sorted(((b.size, b.sign, complex(b.eigenvalue)) for b in form.blocks),
                  key=lambda t: (t[0], t[1], t[2].real, t[2].imag))


reals = st.floats(min_value=-5.0, max_value=5.0,
                  allow_nan=False, allow_infinity=False)


@given(reals, reals, reals)
@settings(max_examples=200)
def test_cubic_roots_satisfy_polynomial(c2, c1, c0):
    roots = solve_cubic(c2, c1, c0)
    assert len(roots) == 3
    scale = 1.0 + max(abs(c2), abs(c1), abs(c0))
    for r in roots:
        p = r ** 3 + c2 * r ** 2 + c1 * r + c0
        assert abs(p) <= 1e-8 * scale * (1.0 + abs(r)) ** 3


def test_charpoly_coeffs_sign_convention():
    A = np.diag([1.0, 2.0, 3.0])
    c2, c1, c0 = charpoly_coeffs(A)
    # lambda^3 + c2 lambda^2 + c1 lambda + c0 with roots 1, 2, 3
    assert math.isclose(c2, -6.0, rel_tol=1e-14)
    assert math.isclose(c1, 11.0, rel_tol=1e-14)
    assert math.isclose(c0, -6.0, rel_tol=1e-14)


def test_diagonal_real_spectrum():
    A = np.diag([3.0, -1.0, 5.0])
    form = metric_jordan_form(A)
    # The timelike axis carries the sign -1 weight: g(e_t, e_t) = -1.
    got = _blocks_key(form)
    assert [(s, sg) for s, sg, _ in got] == [(1, -1), (1, 1), (1, 1)]
    assert np.allclose([ev.real for _, _, ev in got], [3.0, -1.0, 5.0])
    assert all(abs(ev.imag) == 0.0 for _, _, ev in got)


def test_pseudo_orthogonal_preserves_metric():
    q = pseudo_orthogonal(boost=0.7, angle=1.1, flips=(1, -1, 1))
    assert np.allclose(q.T @ G @ q, G, atol=1e-12)
    q = random_pseudo_orthogonal(17)
    assert np.allclose(q.T @ G @ q, G, atol=1e-12)


def _round_trip(blocks, seed):
    form = MetricJordanForm(blocks)
    q = random_pseudo_orthogonal(seed)
    A = synthesize_operator(form, q)
    assert is_self_adjoint(A)
    out = metric_jordan_form(A)
    got = _blocks_key(out)
    want = _blocks_key(form)
    assert [(s, sg) for s, sg, _ in got] == [(s, sg) for s, sg, _ in want]
    for (_, _, ev_g), (_, _, ev_w) in zip(got, want):
        assert abs(ev_g - ev_w) <= 1e-7 * (1.0 + abs(ev_w))
    return A, out


def test_round_trip_three_simple_blocks():
    _round_trip([JordanBlockSpec(1, -1, 2.0),
                 JordanBlockSpec(1, 1, -1.0),
                 JordanBlockSpec(1, 1, 4.0)], seed=3)


def test_round_trip_repeated_eigenvalue_diagonalizable():
    _round_trip([JordanBlockSpec(1, -1, 2.0),
                 JordanBlockSpec(1, 1, 2.0),
                 JordanBlockSpec(1, 1, -3.0)], seed=5)


def test_round_trip_complex_pair():
    _round_trip([JordanBlockSpec(1, 1, 1.5 + 0.8j),
                 JordanBlockSpec(1, 1, 1.5 - 0.8j),
                 JordanBlockSpec(1, 1, 0.25)], seed=9)


@pytest.mark.parametrize("eps", [1, -1])
def test_round_trip_two_block(eps):
    _round_trip([JordanBlockSpec(2, eps, 1.0),
                 JordanBlockSpec(1, 1, -2.0)], seed=11 + eps)


def test_round_trip_three_block_plus_sign():
    _round_trip([JordanBlockSpec(3, 1, 0.5)], seed=13)


def test_three_block_minus_sign_is_inadmissible():
    with pytest.raises(ValueError):
        JordanBlockSpec(3, -1, 0.5)


def test_near_degenerate_gap_raises_ambiguity():
    # Eigenvalue separation inside the gray zone around the clustering
    # tolerance must refuse to classify rather than guess.
    A = np.diag([1.0, 1.0 + 2e-5, 5.0])
    with pytest.raises(DegenerateAmbiguity):
        metric_jordan_form(A, tol=1e-6)


def test_form_basis_realizes_blocks():
    form = metric_jordan_form(np.diag([3.0, -1.0, 5.0]))
    B = form.basis
    assert B is not None
    # Columns are metric-orthonormal with signs given by the blocks.
    gram = B.T @ G @ B
    signs = np.diag(gram)
    assert np.allclose(gram - np.diag(signs), 0.0, atol=1e-10)
