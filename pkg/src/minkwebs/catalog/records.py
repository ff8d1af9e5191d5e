"""Catalog record types and evaluation plumbing.

Webs and charts are data: a web record carries a parameterized generator
tensor, and each chart record stores its forward-map and metric formulas
as expression trees, coordinate ranges, a region predicate, and an
optional closed-form inverse.  All evaluation (plain, dual-number) is
driven off the same records.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..core import METRIC, dual_vars
from ..elliptic import elliptic_K
from ..errors import (BadParams, MinkwebsError, RangeViolation,
                      OutsideRegion, NumericalNonConvergence)
from ..expr import Expr
from ..concircular import ConcircularTensor
from ..ictcoords import SeparableTriple, ict_invert

__all__ = ["WebRecord", "ChartRecord", "Chain", "Box",
           "chart_map", "chart_metric_eval", "pullback_residual",
           "region_contains", "chart_invert", "sample_triple"]

_COORDS = ("u", "v", "w")

# window half-width used when sampling an unbounded coordinate direction
_OPEN_WINDOW = 2.0


def _resolve(anchor, params: dict) -> float:
    """Resolve a range anchor (number, parameter name, or simple symbolic
    constant) to a float."""
    if isinstance(anchor, (int, float)):
        return float(anchor)
    named = {"pi": math.pi, "2pi": 2.0 * math.pi, "pi/2": math.pi / 2.0,
             "K(a)": None, "K(b)": None}
    if anchor in ("K(a)", "K(b)"):
        return elliptic_K(params[anchor[2]])
    if isinstance(anchor, str) and anchor.endswith("/2"):
        return _resolve(anchor[:-2], params) / 2.0
    if anchor in named:
        return named[anchor]
    if anchor.startswith("-"):
        return -float(params[anchor[1:]])
    return float(params[anchor])


class Chain:
    """Coordinate ranges given as a single strict ordering, e.g. the list
    ('w', 0, 'a', 'v', 'b', 'u') encodes w < 0 < a < v < b < u."""

    def __init__(self, *items):
        self.items = items

    def text(self) -> str:
        return " < ".join(str(i) for i in self.items)

    def _walk(self, params, s):
        vals = dict(zip(_COORDS, s))
        out = []
        for item in self.items:
            if item in vals:
                out.append(vals[item])
            else:
                out.append(_resolve(item, params))
        return out

    def contains(self, params, s, margin: float = 0.0) -> bool:
        seq = self._walk(params, s)
        return all(b - a > margin for a, b in zip(seq, seq[1:]))

    def sample(self, params, rng, margin: float = 1e-3):
        anchors = [_resolve(i, params) for i in self.items
                   if i not in _COORDS]
        lo = (min(anchors) if anchors else 0.0) - _OPEN_WINDOW
        hi = (max(anchors) if anchors else 0.0) + _OPEN_WINDOW
        for _ in range(100000):
            s = tuple(rng.uniform(lo, hi) for _ in range(3))
            if self.contains(params, s, margin):
                return s
        raise NumericalNonConvergence("range sampling failed")


class Box:
    """Per-coordinate intervals with optional extra ordering constraints.
    Bounds are anchors or None (unbounded); constraints are (text, fn)
    pairs with fn(params, u, v, w) -> bool."""

    def __init__(self, u=(None, None), v=(None, None), w=(None, None),
                 constraints=()):
        self.bounds = {"u": u, "v": v, "w": w}
        self.constraints = constraints

    def text(self) -> str:
        parts = []
        for c in _COORDS:
            lo, hi = self.bounds[c]
            lo = "-inf" if lo is None else lo
            hi = "inf" if hi is None else hi
            parts.append(f"{lo} < {c} < {hi}")
        parts.extend(t for t, _ in self.constraints)
        return ", ".join(parts)

    def contains(self, params, s, margin: float = 0.0) -> bool:
        for c, val in zip(_COORDS, s):
            lo, hi = self.bounds[c]
            if lo is not None and val - _resolve(lo, params) <= margin:
                return False
            if hi is not None and _resolve(hi, params) - val <= margin:
                return False
        return all(fn(params, *s) for _, fn in self.constraints)

    def sample(self, params, rng, margin: float = 1e-3):
        windows = []
        for c in _COORDS:
            lo, hi = self.bounds[c]
            lo = -_OPEN_WINDOW if lo is None else _resolve(lo, params)
            hi = lo + 2.0 * _OPEN_WINDOW if hi is None \
                else _resolve(hi, params)
            if self.bounds[c][0] is None and self.bounds[c][1] is not None:
                lo = hi - 2.0 * _OPEN_WINDOW
            windows.append((lo, hi))
        for _ in range(100000):
            s = tuple(rng.uniform(lo + margin, hi - margin)
                      for lo, hi in windows)
            if self.contains(params, s, margin):
                return s
        raise NumericalNonConvergence("range sampling failed")


@dataclass(frozen=True)
class WebRecord:
    """One separable web: naming, family, generator and parameters."""
    id: int
    name: str
    family: str                    # Cartesian | Central | NonNullAxial | NullAxial
    hm_label: str | None
    km_h_label: str | None
    generator: object              # params dict -> ConcircularTensor
    param_names: tuple = ()
    param_constraints_text: str = ""
    param_check: object = None     # params dict -> bool
    default_params: dict = field(default_factory=dict)

    def make_ct(self, params=None) -> ConcircularTensor:
        params = self.resolve_params(params)
        return self.generator(params)

    def resolve_params(self, params=None) -> dict:
        out = dict(self.default_params)
        if params:
            out.update(params)
        missing = [p for p in self.param_names if p not in out]
        if missing:
            raise BadParams(f"web {self.id} missing parameters {missing}")
        if self.param_check is not None and not self.param_check(out):
            raise BadParams(f"web {self.id} parameter constraint "
                            f"'{self.param_constraints_text}' violated")
        return out


@dataclass(frozen=True)
class ChartRecord:
    """One coordinate chart adapted to a web."""
    web_id: int
    chart_index: int
    t: Expr
    x: Expr
    y: Expr
    metric: tuple                  # (g_uu, g_vv, g_ww) expression trees
    ranges: object                 # Chain or Box
    timelike_index: int            # 0 = u, 1 = v, 2 = w
    region_text: str = ""
    region_fn: object = None       # (params, t, x, y) -> bool
    canonical_offset: tuple = (0.0, 0.0, 0.0)   # anchors, resolved per params
    irreducible: bool = False
    invert_fn: object = None       # (params, p) -> (u, v, w); reducible only
    equivalence_note: str = ""

    def offset(self, params: dict) -> np.ndarray:
        return np.array([_resolve(a, params) for a in self.canonical_offset])


# ----------------------------------------------------------------- lookup

def _web_for(chart: ChartRecord) -> WebRecord:
    from .webs import web_by_id
    return web_by_id(chart.web_id)


def _env(params: dict, s) -> dict:
    env = dict(params)
    env.update(zip(_COORDS, s))
    return env


def _raw_triple(u: float, v: float, w: float) -> SeparableTriple:
    """SeparableTriple in chart slot order (reducible charts do not obey
    the descending-eigenvalue convention)."""
    out = SeparableTriple.__new__(SeparableTriple)
    object.__setattr__(out, "u", float(u))
    object.__setattr__(out, "v", float(v))
    object.__setattr__(out, "w", float(w))
    return out


def _coerce_triple(s):
    if isinstance(s, SeparableTriple):
        return s.as_tuple()
    return tuple(s)


def _floats_only(s) -> bool:
    return all(isinstance(x, (int, float)) for x in s)


# ------------------------------------------------------------- operations

def chart_map(chart: ChartRecord, params, s):
    """Ambient (t, x, y) for the separable triple s.  Accepts plain floats
    or dual numbers (the latter skip the range check)."""
    web = _web_for(chart)
    params = web.resolve_params(params)
    s = _coerce_triple(s)
    if _floats_only(s) and not chart.ranges.contains(params, s):
        raise RangeViolation(
            f"triple {s} outside ranges of web {chart.web_id} chart "
            f"{chart.chart_index}: {chart.ranges.text()}")
    env = _env(params, s)
    return (chart.t.ev(env), chart.x.ev(env), chart.y.ev(env))


def chart_metric_eval(chart: ChartRecord, params, s):
    """The diagonal metric components (g_uu, g_vv, g_ww) at s."""
    web = _web_for(chart)
    params = web.resolve_params(params)
    s = _coerce_triple(s)
    if _floats_only(s) and not chart.ranges.contains(params, s):
        raise RangeViolation(
            f"triple {s} outside ranges of web {chart.web_id} chart "
            f"{chart.chart_index}")
    env = _env(params, s)
    return tuple(g.ev(env) for g in chart.metric)


def pullback_residual(chart: ChartRecord, params, s) -> float:
    """Max-abs difference between the dual-number pullback J^T g J of the
    chart map and the stated diagonal metric."""
    s = _coerce_triple(s)
    duals = dual_vars(*s)
    amb = chart_map(chart, params, duals)
    J = np.array([[c.grad[i] for i in range(3)] for c in amb])
    G = J.T @ METRIC @ J
    stated = np.diag(chart_metric_eval(chart, params, s))
    return float(np.max(np.abs(G - stated)))


def region_contains(chart: ChartRecord, params, p) -> bool:
    """Evaluate the chart's printed region inequality at an ambient point."""
    web = _web_for(chart)
    params = web.resolve_params(params)
    if chart.region_fn is None:
        return True
    t, x, y = (float(p[0]), float(p[1]), float(p[2]))
    return bool(chart.region_fn(params, t, x, y))


def _polish_triple(chart: ChartRecord, params, triple, p):
    """Newton refinement of an eigensolve-derived triple against the chart
    map (the eigenproblem can lose digits when the ambient point is large)."""
    target = np.asarray(p, dtype=float)

    def residual(q):
        amb = chart_map(chart, params, dual_vars(*q))
        F = np.array([c.val for c in amb]) - target
        J = np.array([[c.grad[i] for i in range(3)] for c in amb])
        return F, J

    s = np.array(triple, dtype=float)
    best = tuple(triple)
    scale = 1.0 + float(np.max(np.abs(target)))
    try:
        F, J = residual(s)
    except (MinkwebsError, ValueError):
        return best
    err = float(np.max(np.abs(F)))
    best_err = err
    for _ in range(8):
        if err <= 1e-13 * scale:
            break
        try:
            step = np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            break
        # backtrack: a full step from a poor eigensolve seed can leave the
        # domain of the chart formulas or increase the forward error
        lam, advanced = 1.0, False
        for _ in range(20):
            cand = s - lam * step
            try:
                Fc, Jc = residual(cand)
            except (MinkwebsError, ValueError):
                lam *= 0.5
                continue
            errc = float(np.max(np.abs(Fc)))
            if errc < err:
                s, F, J, err, advanced = cand, Fc, Jc, errc, True
                if err < best_err:
                    best, best_err = tuple(s), err
                break
            lam *= 0.5
        if not advanced:
            break
    return best


def chart_invert(chart: ChartRecord, params, p) -> SeparableTriple:
    """Separable triple mapping to the ambient point p under this chart."""
    web = _web_for(chart)
    params = web.resolve_params(params)
    if not region_contains(chart, params, p):
        raise OutsideRegion(
            f"point {tuple(p)} outside region of web {chart.web_id} chart "
            f"{chart.chart_index}: {chart.region_text or 'chart domain'}")
    if chart.irreducible:
        # separable coordinates are the point eigenvalues of the generator
        L = web.make_ct(params)
        s = ict_invert(L, p, offset=chart.offset(params))
        triple = _polish_triple(chart, params, s.as_tuple(), p)
        # polish may land on a permuted pre-image when the forward map is
        # symmetric in the coordinates; restore the descending convention
        triple = tuple(sorted(triple, reverse=True))
        s = SeparableTriple(*triple) if triple != s.as_tuple() else s
    else:
        if chart.invert_fn is None:
            raise NumericalNonConvergence(
                f"no closed-form inverse for web {chart.web_id} chart "
                f"{chart.chart_index} (elliptic-kernel chart)")
        triple = tuple(float(v) for v in chart.invert_fn(params, p))
        s = _raw_triple(*triple)
    if not chart.ranges.contains(params, triple, margin=-1e-9):
        raise OutsideRegion(
            f"recovered triple {triple} outside ranges of web "
            f"{chart.web_id} chart {chart.chart_index}")
    return s


def sample_triple(chart: ChartRecord, params, rng, margin: float = 1e-3):
    """A random in-range separable triple (rejection sampling with a margin
    from the boundaries)."""
    web = _web_for(chart)
    params = web.resolve_params(params)
    return chart.ranges.sample(params, rng, margin)
