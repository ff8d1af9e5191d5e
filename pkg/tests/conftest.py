"""Shared fixtures and sampling helpers for the test suite."""
import math

import numpy as np
import pytest

from minkwebs import dot
from minkwebs.warped import WarpedProduct


@pytest.fixture
def rng():
    return np.random.default_rng(20260826)


def random_self_adjoint(rng, scale=2.0):
    """Random operator self-adjoint w.r.t. the ambient metric."""
    g = np.diag([-1.0, 1.0, 1.0])
    S = rng.uniform(-scale, scale, (3, 3))
    S = 0.5 * (S + S.T)
    return np.linalg.inv(g) @ S


def sample_geodesic_factor_point(wp: WarpedProduct, rng, tries=200):
    """A point p0 of the geodesic factor with rho(p0) bounded away from 0."""
    V0 = wp.data.subspaces[0]
    for _ in range(tries):
        p0 = V0 @ rng.uniform(-2.0, 2.0, V0.shape[1])
        if wp.case == "Cartesian" or dot(wp.data.a[0], p0) > 0.2:
            return p0
    raise AssertionError("could not sample a geodesic-factor point")


def sample_fiber_point_and_tangent(wp: WarpedProduct, rng):
    """A point p1 of the fiber factor together with a tangent vector there.

    For a constant-curvature fiber the point is taken on the sheet through
    the canonical point p_bar (base direction a/<a,a>), parametrized by the
    circular or hyperbolic angle as the plane signature dictates.
    """
    V1 = wp.data.subspaces[1]
    if wp.case in ("Cartesian", "Null"):
        return (V1 @ rng.uniform(-2.0, 2.0, V1.shape[1]),
                V1 @ rng.uniform(-1.0, 1.0, V1.shape[1]))
    a = wp.data.a[0]
    aa = dot(a, a)
    s1 = 1.0 if aa > 0 else -1.0
    e1 = a / math.sqrt(abs(aa))
    u1 = V1[:, 0]
    e2 = u1 / math.sqrt(abs(dot(u1, u1)))
    r = 1.0 / math.sqrt(abs(aa))
    th = rng.uniform(-1.2, 1.2)
    if np.sign(dot(u1, u1)) == np.sign(aa):
        q = r * (s1 * math.cos(th) * e1 + math.sin(th) * e2)
        dq = r * (-s1 * math.sin(th) * e1 + math.cos(th) * e2)
    else:
        q = r * (s1 * math.cosh(th) * e1 + math.sinh(th) * e2)
        dq = r * (s1 * math.sinh(th) * e1 + math.cosh(th) * e2)
    return wp.factor.center + q, dq
