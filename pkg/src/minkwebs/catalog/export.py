"""Catalog and surface exports.

Two formats are produced:

* the full catalog as JSON -- every web and chart record, with all chart
  formulas serialized as prefix-notation ASTs and every float printed at
  17 significant digits (lossless for IEEE doubles, and idempotent under a
  parse/serialize round trip);
* a fixed-coordinate slice of a single chart as a CSV grid with the header
  ``u,v,w,t,x,y``.
"""
from __future__ import annotations

import math

from ..concircular import ct_to_dict
from ..errors import BadParams, NumericalNonConvergence
from .records import Chain, Box, _resolve, _OPEN_WINDOW, chart_map
from .webs import list_webs, list_charts, web_by_id, charts_for_web

__all__ = ["catalog_dict", "catalog_json", "surface_csv"]

SCHEMA_VERSION = 1

_COORDS = ("u", "v", "w")


# ------------------------------------------------------------------- JSON

def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise BadParams(f"non-finite float {x} cannot be exported")
    s = format(x, ".17g")
    # normalize "-0" and keep a marker so the value re-parses as a float
    if s == "-0":
        s = "0"
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def _dump(obj) -> str:
    """Minimal JSON writer with explicit 17-significant-digit floats."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        out = ['"']
        for ch in obj:
            if ch == '"':
                out.append('\\"')
            elif ch == "\\":
                out.append("\\\\")
            elif ord(ch) < 0x20:
                out.append(f"\\u{ord(ch):04x}")
            else:
                out.append(ch)
        out.append('"')
        return "".join(out)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_dump(str(k))}: {_dump(v)}"
                               for k, v in obj.items()) + "}"
    raise BadParams(f"cannot serialize {type(obj).__name__}")


def _web_dict(web) -> dict:
    ct = web.make_ct(None)
    return {
        "id": web.id,
        "name": web.name,
        "family": web.family,
        "hm_label": web.hm_label,
        "km_h_label": web.km_h_label,
        "param_names": list(web.param_names),
        "param_constraints": web.param_constraints_text,
        "default_params": {k: float(v)
                           for k, v in sorted(web.default_params.items())},
        "generator_at_defaults": ct_to_dict(ct),
        "chart_count": len(charts_for_web(web.id)),
    }


def _anchor_out(a):
    return float(a) if isinstance(a, (int, float)) else a


def _chart_dict(chart) -> dict:
    return {
        "web_id": chart.web_id,
        "chart_index": chart.chart_index,
        "map": {"t": chart.t.prefix(), "x": chart.x.prefix(),
                "y": chart.y.prefix()},
        "metric": [g.prefix() for g in chart.metric],
        "ranges": chart.ranges.text(),
        "timelike_coordinate": _COORDS[chart.timelike_index],
        "region": chart.region_text,
        "canonical_offset": [_anchor_out(a) for a in chart.canonical_offset],
        "irreducible": chart.irreducible,
        "equivalence_note": chart.equivalence_note,
    }


def catalog_dict() -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "webs": [_web_dict(w) for w in list_webs()],
        "charts": [_chart_dict(c) for c in list_charts()],
    }


def catalog_json() -> str:
    return _dump(catalog_dict()) + "\n"


# -------------------------------------------------------------------- CSV

def _coord_window(ranges, params, cname):
    """A finite scan window for one coordinate (resolved bounds, or a fixed
    open-window fallback on unbounded sides)."""
    if isinstance(ranges, Box):
        lo, hi = ranges.bounds[cname]
        lo = None if lo is None else _resolve(lo, params)
        hi = None if hi is None else _resolve(hi, params)
        if lo is None and hi is None:
            return -_OPEN_WINDOW, _OPEN_WINDOW
        if lo is None:
            return hi - 2.0 * _OPEN_WINDOW, hi
        if hi is None:
            return lo, lo + 2.0 * _OPEN_WINDOW
        return lo, hi
    anchors = [_resolve(i, params) for i in ranges.items
               if i not in _COORDS]
    lo = (min(anchors) if anchors else 0.0) - _OPEN_WINDOW
    hi = (max(anchors) if anchors else 0.0) + _OPEN_WINDOW
    return lo, hi


def _valid_run(check, lo, hi, steps=512):
    """Largest contiguous sub-interval of [lo, hi] on which check holds,
    located by a uniform scan (the chart regions are convex in each
    coordinate pair, so a single run exists whenever any point is valid)."""
    zs = [lo + (k + 0.5) * (hi - lo) / steps for k in range(steps)]
    ok = [check(z) for z in zs]
    best = cur = None
    for z, good in zip(zs, ok):
        if good:
            cur = (z, z) if cur is None else (cur[0], z)
        else:
            if cur and (best is None or cur[1] - cur[0] > best[1] - best[0]):
                best = cur
            cur = None
    if cur and (best is None or cur[1] - cur[0] > best[1] - best[0]):
        best = cur
    return best


def surface_csv(web_id: int, chart_index: int, fixed: str, value: float,
                grid: int, params=None) -> str:
    """CSV slice of one chart: fix one separable coordinate and evaluate
    the forward map on a grid x grid sweep of the other two."""
    if fixed not in _COORDS:
        raise BadParams(f"fixed coordinate must be one of {_COORDS}")
    if grid < 1:
        raise BadParams("grid must be a positive integer")
    web = web_by_id(web_id)
    params = web.resolve_params(params)
    chart = None
    for c in charts_for_web(web_id):
        if c.chart_index == chart_index:
            chart = c
    if chart is None:
        raise BadParams(f"web {web_id} has no chart {chart_index}")
    free = [c for c in _COORDS if c != fixed]
    value = float(value)

    def triple(assign: dict):
        return tuple(assign.get(c, float("nan")) for c in _COORDS)

    def contains_partial(c1v, c2v):
        return chart.ranges.contains(
            params, triple({fixed: value, free[0]: c1v, free[1]: c2v}))

    w1 = _coord_window(chart.ranges, params, free[0])
    w2 = _coord_window(chart.ranges, params, free[1])
    # feasible range of the first free coordinate: columns of a coarse scan
    # that contain at least one valid point
    cols = _valid_run(
        lambda z1: _valid_run(lambda z2: contains_partial(z1, z2),
                              *w2, steps=96) is not None,
        *w1, steps=96)
    if cols is None:
        raise NumericalNonConvergence(
            f"no valid slice of web {web_id} chart {chart_index} at "
            f"{fixed} = {value}")
    rows = ["u,v,w,t,x,y"]
    for i in range(grid):
        c1 = cols[0] + (i + 0.5) * (cols[1] - cols[0]) / grid
        run = _valid_run(lambda z2: contains_partial(c1, z2), *w2)
        if run is None:
            raise NumericalNonConvergence(
                f"empty row at {free[0]} = {c1}")
        for j in range(grid):
            c2 = run[0] + (j + 0.5) * (run[1] - run[0]) / grid
            s = triple({fixed: value, free[0]: c1, free[1]: c2})
            t, x, y = chart_map(chart, params, s)
            rows.append(",".join(_fmt_float(float(v))
                                 for v in (*s, t, x, y)))
    return "\n".join(rows) + "\n"
