"""Elliptic kernel against the scipy oracle and its algebraic identities."""
import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings, strategies as st

from minkwebs import elliptic_K, jacobi_elliptic
from minkwebs.elliptic import jacobi_quotient
from minkwebs.errors import ModulusOutOfRange, PoleEncountered

moduli = st.floats(min_value=0.0, max_value=0.995,
                   allow_nan=False, allow_infinity=False)
args = st.floats(min_value=-8.0, max_value=8.0,
                 allow_nan=False, allow_infinity=False)


@given(args, moduli)
@settings(max_examples=300)
def test_jacobi_matches_scipy(u, a):
    sn, cn, dn = jacobi_elliptic(u, a)
    sn2, cn2, dn2, _ = scipy.special.ellipj(u, a * a)
    assert math.isclose(sn, sn2, rel_tol=1e-11, abs_tol=1e-11)
    assert math.isclose(cn, cn2, rel_tol=1e-11, abs_tol=1e-11)
    assert math.isclose(dn, dn2, rel_tol=1e-11, abs_tol=1e-11)


@given(moduli)
@settings(max_examples=100)
def test_complete_integral_matches_scipy(a):
    assert math.isclose(elliptic_K(a), scipy.special.ellipk(a * a),
                        rel_tol=1e-12)


@given(args, moduli)
@settings(max_examples=200)
def test_squared_identities(u, a):
    sn, cn, dn = jacobi_elliptic(u, a)
    assert abs(sn * sn + cn * cn - 1.0) <= 1e-12
    assert abs(dn * dn + a * a * sn * sn - 1.0) <= 1e-12


def test_degenerate_moduli():
    # a = 0: circular functions
    sn, cn, dn = jacobi_elliptic(0.8, 0.0)
    assert math.isclose(sn, math.sin(0.8), rel_tol=1e-14)
    assert math.isclose(cn, math.cos(0.8), rel_tol=1e-14)
    assert dn == 1.0
    assert math.isclose(elliptic_K(0.0), math.pi / 2.0, rel_tol=1e-15)


def test_quarter_period():
    a = 0.6
    K = elliptic_K(a)
    sn, cn, dn = jacobi_elliptic(K, a)
    assert abs(sn - 1.0) <= 1e-12
    assert abs(cn) <= 1e-10
    assert math.isclose(dn, math.sqrt(1.0 - a * a), rel_tol=1e-10)


def test_quotient_functions():
    u, a = 0.45, 0.7
    sn, cn, dn = jacobi_elliptic(u, a)
    assert math.isclose(jacobi_quotient("sc", u, a), sn / cn, rel_tol=1e-12)
    assert math.isclose(jacobi_quotient("dc", u, a), dn / cn, rel_tol=1e-12)
    assert math.isclose(jacobi_quotient("nd", u, a), 1.0 / dn, rel_tol=1e-12)


def test_modulus_rejection():
    with pytest.raises(ModulusOutOfRange):
        jacobi_elliptic(0.5, 1.5)
    with pytest.raises(ModulusOutOfRange):
        elliptic_K(-0.1)
    with pytest.raises(ModulusOutOfRange):
        elliptic_K(1.0)


def test_quotient_pole():
    # sc has a pole where cn vanishes (u = K)
    a = 0.5
    with pytest.raises(PoleEncountered):
        jacobi_quotient("sc", elliptic_K(a), a)
