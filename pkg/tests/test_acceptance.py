"""End-to-end acceptance suite: the ten primary checks with their stated
tolerances and runtime budgets."""
import json
import math
import time

import numpy as np
import pytest
import scipy.integrate

from minkwebs import (METRIC, chart_invert, chart_map, chart_metric_eval,
                      charts_for_web, classify_ct, decompose_reducible,
                      build_warped_product, diagonality_residual, dot,
                      elliptic_K, evaluate_ct, is_reducible, jacobi_elliptic,
                      killing_residual, ks_algebra, list_charts, list_webs,
                      point_eigenvalues, pullback_residual, sample_triple,
                      vec, web_by_id, wp_image_contains, wp_map)
from minkwebs.catalog.records import _raw_triple
from minkwebs.concircular import ComplexSpectrum
from minkwebs.jordan import (JordanBlockSpec, MetricJordanForm,
                             metric_jordan_form, random_pseudo_orthogonal,
                             synthesize_operator)

from conftest import (sample_fiber_point_and_tangent,
                      sample_geodesic_factor_point)


class Budget:
    def __init__(self, seconds):
        self.limit = seconds
        self.t0 = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.t0
        assert elapsed < self.limit, f"over budget: {elapsed:.1f}s"


def test_01_catalog_counts():
    budget = Budget(1.0)
    webs = list_webs()
    charts = list_charts()
    assert len(webs) == 45
    assert len(charts) == 88
    assert sum(1 for c in charts if c.irreducible) == 33
    assert sum(1 for c in charts if not c.irreducible) == 55
    budget.check()


def test_02_pullback_certification():
    budget = Budget(30.0)
    for chart in list_charts():
        rng = np.random.default_rng((2026, chart.web_id, chart.chart_index))
        for _ in range(100):
            s = sample_triple(chart, None, rng)
            scale = max(abs(g) for g in chart_metric_eval(chart, None, s))
            assert pullback_residual(chart, None, s) <= 1e-8 * scale, \
                (chart.web_id, chart.chart_index, s)
    budget.check()


def _generically_simple(L, rng) -> bool:
    """True when the generator has simple eigenvalues at a generic point.
    Exactly then can the two-step recursion produce a rank-3 triple: a
    generator with a repeated eigenvalue function satisfies a pointwise
    quadratic identity that forces the second tensor into the span of the
    first two."""
    for _ in range(8):
        p = rng.uniform(-2.0, 2.0, 3)
        ev = sorted(np.linalg.eigvals(evaluate_ct(L, p)),
                    key=lambda z: (z.real, z.imag))
        if min(abs(ev[i + 1] - ev[i]) for i in range(2)) > 1e-6:
            return True
    return False


def test_03_killing_suite():
    budget = Budget(5.0)
    rng = np.random.default_rng(3)
    for web in list_webs():
        L = web.make_ct(None)
        alg = ks_algebra(L)
        for _ in range(20):
            p = rng.uniform(-3.0, 3.0, 3)
            assert killing_residual(alg.K1, p) <= 1e-10
            assert killing_residual(alg.K2, p) <= 1e-10
        assert alg.is_independent() == _generically_simple(L, rng), web.id
    budget.check()


def test_04_diagonalization_suite():
    budget = Budget(30.0)
    algebras = {}
    for chart in list_charts():
        if chart.web_id not in algebras:
            algebras[chart.web_id] = ks_algebra(
                web_by_id(chart.web_id).make_ct(None))
        alg = algebras[chart.web_id]
        rng = np.random.default_rng((2026, 4, chart.web_id,
                                     chart.chart_index))
        for _ in range(20):
            s = _raw_triple(*sample_triple(chart, None, rng))
            for K in (alg.g, alg.K1, alg.K2):
                assert diagonality_residual(K, chart, None, s) <= 1e-8, \
                    (chart.web_id, chart.chart_index)
    budget.check()


def test_05_irreducible_round_trips():
    budget = Budget(10.0)
    for chart in list_charts():
        if not chart.irreducible:
            continue
        rng = np.random.default_rng((2026, 5, chart.web_id,
                                     chart.chart_index))
        for _ in range(100):
            s = sample_triple(chart, None, rng)
            p = chart_map(chart, None, s)
            s2 = chart_invert(chart, None, p).as_tuple()
            err = max(abs(a - b) / max(1.0, abs(a)) for a, b in zip(s, s2))
            assert err <= 1e-8, (chart.web_id, chart.chart_index, s, s2)
    budget.check()


def _random_block_form(rng) -> MetricJordanForm:
    kind = rng.choice(["diag", "diag_rep", "complex", "two", "three"])
    if kind == "diag":
        lams = np.sort(rng.uniform(-3.0, 3.0, 3))
        while np.min(np.diff(lams)) < 0.2:
            lams = np.sort(rng.uniform(-3.0, 3.0, 3))
        signs = [1, 1, 1]
        signs[rng.integers(0, 3)] = -1
        return MetricJordanForm([JordanBlockSpec(1, s, float(l))
                                 for s, l in zip(signs, lams)])
    if kind == "diag_rep":
        # repeated eigenvalue on a nondegenerate 2-dimensional eigenspace
        lam = float(rng.uniform(-2.0, 2.0))
        mu = lam + float(rng.choice([-1.0, 1.0])) * rng.uniform(0.5, 2.0)
        pair_sign = int(rng.choice([-1, 1]))
        other = 1 if pair_sign == -1 else int(rng.choice([-1, 1]))
        if other == 1 and pair_sign == 1:
            other = -1  # exactly one timelike direction overall
        return MetricJordanForm([JordanBlockSpec(1, pair_sign, lam),
                                 JordanBlockSpec(1, 1, lam),
                                 JordanBlockSpec(1, other, mu)])
    if kind == "complex":
        a = float(rng.uniform(-2.0, 2.0))
        b = float(rng.uniform(0.2, 2.0))
        mu = float(rng.uniform(-2.0, 2.0))
        return MetricJordanForm([JordanBlockSpec(1, 1, complex(a, b)),
                                 JordanBlockSpec(1, 1, complex(a, -b)),
                                 JordanBlockSpec(1, 1, mu)])
    if kind == "two":
        lam = float(rng.uniform(-2.0, 2.0))
        mu = lam + float(rng.choice([-1.0, 1.0])) * rng.uniform(0.5, 2.0)
        eps = int(rng.choice([-1, 1]))
        return MetricJordanForm([JordanBlockSpec(2, eps, lam),
                                 JordanBlockSpec(1, 1, mu)])
    return MetricJordanForm([JordanBlockSpec(3, 1,
                                             float(rng.uniform(-2.0, 2.0)))])


def test_06_block_form_round_trip():
    budget = Budget(5.0)
    rng = np.random.default_rng(6)
    for case in range(1000):
        form = _random_block_form(rng)
        q = random_pseudo_orthogonal(case)
        A = synthesize_operator(form, q)
        got = metric_jordan_form(A)
        want = form.block_multiset()
        have = got.block_multiset()
        assert len(want) == len(have)
        for (ws, wsig, wre, wim), (hs, hsig, hre, him) in zip(
                sorted(want), sorted(have)):
            assert ws == hs and wsig == hsig, (case, want, have)
            assert abs(wre - hre) <= 1e-6 and abs(wim - him) <= 1e-6, \
                (case, want, have)
        # the (3, -1) pairing is inadmissible and must never be emitted
        assert all(not (b.size == 3 and b.sign == -1) for b in got.blocks)
    budget.check()


def test_07_warped_product_isometry():
    budget = Budget(10.0)
    rng = np.random.default_rng(7)
    hint = vec(1.0, 0.25, -0.5)
    h = 1e-3
    n_decomposed = 0
    for web in list_webs():
        L = web.make_ct(None)
        if classify_ct(L).trivial or not is_reducible(L):
            continue
        n_decomposed += 1
        data, _ = decompose_reducible(L, hint)
        wp = build_warped_product(data)
        V0 = data.subspaces[0]
        for _ in range(50):
            p0 = sample_geodesic_factor_point(wp, rng)
            p1, X1 = sample_fiber_point_and_tangent(wp, rng)
            X0 = V0 @ rng.uniform(-1.0, 1.0, V0.shape[1])
            rho = wp.rho(p0)
            # the map is at most quadratic per slot: central differences of
            # its directional derivatives are exact up to rounding
            d0 = (wp_map(wp, p0 + h * X0, p1)
                  - wp_map(wp, p0 - h * X0, p1)) / (2 * h)
            d1 = (wp_map(wp, p0, p1 + h * X1)
                  - wp_map(wp, p0, p1 - h * X1)) / (2 * h)
            scale = max(abs(dot(X0, X0)), abs(dot(X1, X1)), 1.0)
            assert abs(dot(d0, d0) - dot(X0, X0)) <= 1e-8 * scale
            assert abs(dot(d1, d1) - rho * rho * dot(X1, X1)) <= 1e-8 * scale
            assert abs(dot(d0, d1)) <= 1e-8 * scale
            assert wp_image_contains(wp, wp_map(wp, p0, p1))
    assert n_decomposed == 30
    budget.check()


def test_08_spot_values_and_traces():
    chart = charts_for_web(29)[0]
    params = {"a": 1.0, "b": 2.0}
    t, x, y = chart_map(chart, params, (3.0, 1.5, -1.0))
    assert abs(t * t - 2.25) <= 1e-12
    assert abs(x * x - 2.0) <= 1e-12
    assert abs(y * y - 0.75) <= 1e-12
    g = chart_metric_eval(chart, params, (3.0, 1.5, -1.0))
    assert abs(g[0] - 0.25) <= 1e-12

    # eigenvalue sums match the operator trace, per family
    families = {}
    for web in list_webs():
        families.setdefault(web.family, web)
    assert len(families) == 4
    rng = np.random.default_rng(8)
    for family, web in families.items():
        L = web.make_ct(None)
        done = 0
        while done < 1000:
            p = rng.uniform(-2.0, 2.0, 3)
            ev = point_eigenvalues(L, p)
            if isinstance(ev, ComplexSpectrum):
                continue
            tr = float(np.trace(evaluate_ct(L, p)))
            scale = 1.0 + max(abs(e) for e in ev)
            assert abs(sum(ev) - tr) <= 1e-9 * scale, (family, p)
            done += 1


def test_09_elliptic_kernel():
    rng = np.random.default_rng(9)
    for _ in range(1000):
        u = rng.uniform(-5.0, 5.0)
        a = rng.uniform(0.0, 0.999)
        sn, cn, dn = jacobi_elliptic(u, a)
        assert abs(sn * sn + cn * cn - 1.0) <= 1e-12
        assert abs(dn * dn + a * a * sn * sn - 1.0) <= 1e-12
    assert abs(elliptic_K(0.0) - math.pi / 2.0) <= 1e-13
    a = 1.0 / math.sqrt(2.0)
    quad, _ = scipy.integrate.quad(
        lambda th: 1.0 / math.sqrt(1.0 - a * a * math.sin(th) ** 2),
        0.0, math.pi / 2.0, epsabs=1e-13, epsrel=1e-13)
    assert abs(elliptic_K(a) - quad) <= 1e-10


def test_10_conserved_quantities_on_lines():
    rng = np.random.default_rng(10)
    ts = np.linspace(-1.0, 1.0, 7)
    for web in list_webs():
        alg = ks_algebra(web.make_ct(None))
        for _ in range(20):
            p = rng.uniform(-2.0, 2.0, 3)
            v = rng.uniform(-1.0, 1.0, 3)
            for K in (alg.K1, alg.K2):
                vals = [float(v @ K.value(p + t * v) @ v) for t in ts]
                scale = max(1.0, max(abs(c) for c in vals))
                assert max(vals) - min(vals) <= 1e-10 * scale, web.id
