"""Command-line front end.

Subcommands:

* ``classify`` -- canonical form, class data and matching catalog webs for a
  user-supplied concircular tensor (JSON ``{"A": .., "w": .., "m": ..}``);
* ``chart`` -- evaluate or invert a single catalog chart;
* ``verify`` -- run the residual suites over the catalog and emit a report;
* ``export`` -- dump the catalog as JSON or a chart slice as CSV.

Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
3 invalid tensor input, 4 domain error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .concircular import (ConcircularTensor, classify_ct, is_reducible,
                          ct_from_dict)
from .errors import (MinkwebsError, BadParams, NotSelfAdjoint, OutsideRegion,
                     RangeViolation, NumericalNonConvergence)
from .jordan import metric_jordan_form
from .killing import ks_algebra, killing_residual, diagonality_residual
from .catalog import (list_webs, list_charts, web_by_id, charts_for_web,
                      chart_map, chart_invert, chart_metric_eval,
                      pullback_residual, sample_triple, catalog_json,
                      surface_csv)
from .catalog.export import _dump

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BAD_TENSOR = 3
EXIT_DOMAIN = 4

_COORDS = ("u", "v", "w")

# charts without a closed-form inverse (elliptic-kernel reducible charts)
_ROUNDTRIP_SKIP_WEBS = (14, 15, 18)


# ------------------------------------------------------------------ output

def _emit(args, payload, text_fn):
    if getattr(args, "format", "json") == "text":
        out = text_fn(payload)
    else:
        out = _dump(payload) + "\n"
    path = getattr(args, "output", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# ---------------------------------------------------------------- classify

def _structural_key(canon):
    """Discrete fingerprint of a canonical CT, invariant under geometric
    equivalence (isometry + affine rescaling of the operator): class data
    plus the coincidence pattern of the operator spectrum."""
    form = metric_jordan_form(canon.canonical_A)
    real, n_complex = [], 0
    for b in form.blocks:
        lam = complex(b.eigenvalue)
        if abs(lam.imag) > 1e-9:
            n_complex += 1
            continue
        real.append((lam.real, b.size, b.sign))
    n_complex //= 2                       # blocks come in conjugate pairs
    # cluster equal real eigenvalues, keep the per-cluster block multiset
    real.sort(key=lambda e: e[0])
    clusters, cur, cur_val = [], [], None
    scale = 1.0 + max((abs(e[0]) for e in real), default=0.0)
    for lam, size, sign in real:
        if cur and abs(lam - cur_val) > 1e-8 * scale:
            clusters.append(tuple(sorted(cur)))
            cur = []
        cur.append((size, sign))
        cur_val = lam
    if cur:
        clusters.append(tuple(sorted(cur)))
    seq = tuple(clusters)
    seq = min(seq, seq[::-1])             # rescaling may reverse the order
    return (canon.ct_class.tag, canon.ct_class.eps, canon.ct_class.k,
            seq, n_complex)


def matching_webs(L: ConcircularTensor) -> list:
    """Ids of catalog webs whose generator family matches L up to geometric
    equivalence (a CT can induce several webs, one per fiber-web choice)."""
    canon = classify_ct(L)
    if canon.trivial:
        return []
    key = _structural_key(canon)
    out = []
    for web in list_webs():
        if _structural_key(classify_ct(web.make_ct(None))) == key:
            out.append(web.id)
    return out


def _parse_ct_payload(raw: str) -> ConcircularTensor:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise BadParams(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise BadParams("CT JSON must be an object")
    # scalar shorthand: "A": a means a * identity, "w": 0 means the zero
    # vector
    if isinstance(data.get("A"), (int, float)):
        data = dict(data, A=(float(data["A"]) * np.eye(3)).tolist())
    if isinstance(data.get("w"), (int, float)):
        if float(data["w"]) != 0.0:
            raise BadParams("scalar w must be 0")
        data = dict(data, w=[0.0, 0.0, 0.0])
    return ct_from_dict(data)


def cmd_classify(args) -> int:
    if args.input == "-" or args.input is None:
        raw = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            raw = fh.read()
    L = _parse_ct_payload(raw)
    canon = classify_ct(L)
    webs = matching_webs(L)
    payload = {
        "schema_version": 1,
        "class": canon.ct_class.tag.lower(),
        "eps": canon.ct_class.eps,
        "k": canon.ct_class.k,
        "trivial": canon.trivial,
        "reducible": is_reducible(L),
        "canonical_A": canon.canonical_A.tolist(),
        "canonical_w": canon.canonical_w.tolist(),
        "origin_shift": canon.origin_shift.tolist(),
        "scale": float(canon.scale),
        "metric_shift": float(canon.metric_shift),
        "web": webs[0] if webs else None,
        "webs": webs,
    }

    def text(p):
        lines = [f"class: {p['class']} (eps={p['eps']}, k={p['k']})",
                 f"reducible: {p['reducible']}",
                 f"webs: {', '.join(str(w) for w in p['webs']) or 'none'}"]
        return "\n".join(lines) + "\n"

    _emit(args, payload, text)
    return EXIT_OK


# ------------------------------------------------------------------- chart

def _parse_params(spec: str | None) -> dict | None:
    if not spec:
        return None
    out = {}
    for item in spec.split(","):
        if "=" not in item:
            raise BadParams(f"bad parameter assignment {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = float(v)
        except ValueError as exc:
            raise BadParams(f"bad parameter value {v!r}") from exc
    return out


def _parse_vec3(spec: str, what: str):
    parts = spec.split(",")
    if len(parts) != 3:
        raise BadParams(f"{what} must be three comma-separated numbers")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise BadParams(f"bad {what}: {exc}") from exc


def _find_chart(web_id: int, chart_index: int):
    web_by_id(web_id)                     # raises BadParams on unknown id
    for c in charts_for_web(web_id):
        if c.chart_index == chart_index:
            return c
    raise BadParams(f"web {web_id} has no chart {chart_index}")


def cmd_chart(args) -> int:
    chart = _find_chart(args.web, args.chart)
    params = _parse_params(args.params)
    if args.invert:
        if args.point is None:
            raise BadParams("--invert requires --point t,x,y")
        p = _parse_vec3(args.point, "point")
        s = chart_invert(chart, params, p)
        web = web_by_id(args.web)
        in_range = chart.ranges.contains(web.resolve_params(params),
                                         s.as_tuple())
        payload = {"u": s.u, "v": s.v, "w": s.w, "in_range": bool(in_range)}
        text = lambda q: (f"u = {q['u']:.12g}\nv = {q['v']:.12g}\n"
                          f"w = {q['w']:.12g}\nin_range = {q['in_range']}\n")
    else:
        if args.triple is None:
            raise BadParams("--forward requires --triple u,v,w")
        s = _parse_vec3(args.triple, "triple")
        t, x, y = chart_map(chart, params, s)
        payload = {"t": float(t), "x": float(x), "y": float(y)}
        text = lambda q: (f"t = {q['t']:.12g}\nx = {q['x']:.12g}\n"
                          f"y = {q['y']:.12g}\n")
    _emit(args, payload, text)
    return EXIT_OK


# ------------------------------------------------------------------ verify

def verify_chart(chart, samples: int, seed: int, tol: float,
                 algebras: dict) -> dict:
    """Residual suite for one chart with a chart-keyed RNG stream (results
    do not depend on evaluation order across charts)."""
    rng = np.random.default_rng((seed, chart.web_id, chart.chart_index))
    web = web_by_id(chart.web_id)
    if chart.web_id not in algebras:
        algebras[chart.web_id] = ks_algebra(web.make_ct(None))
    alg = algebras[chart.web_id]
    max_pb = max_kill = max_diag = 0.0
    max_rt = None
    rt_skipped = (chart.web_id in _ROUNDTRIP_SKIP_WEBS
                  and not chart.irreducible)
    n_diag = min(samples, 20)
    for i in range(samples):
        s = sample_triple(chart, None, rng)
        g = chart_metric_eval(chart, None, s)
        scale = max(abs(x) for x in g)
        max_pb = max(max_pb, pullback_residual(chart, None, s) / scale)
        p = chart_map(chart, None, s)
        if i < n_diag:
            max_kill = max(max_kill, killing_residual(alg.K1, p),
                           killing_residual(alg.K2, p))
            from .catalog.records import _raw_triple
            st = _raw_triple(*s)
            for K in (alg.g, alg.K1, alg.K2):
                max_diag = max(max_diag,
                               diagonality_residual(K, chart, None, st))
        if not rt_skipped:
            s2 = chart_invert(chart, None, p)
            err = max(abs(a - b) / max(1.0, abs(a))
                      for a, b in zip(s, s2.as_tuple()))
            max_rt = err if max_rt is None else max(max_rt, err)
    residuals = [max_pb, max_kill, max_diag] + \
        ([max_rt] if max_rt is not None else [])
    ok = all(r <= tol for r in residuals)
    return {
        "web": chart.web_id,
        "chart": chart.chart_index,
        "samples": samples,
        "max_pullback_residual": max_pb,
        "max_killing_residual": max_kill,
        "max_diagonality_residual": max_diag,
        "roundtrip_max_error": max_rt,
        "pass": bool(ok),
    }


def cmd_verify(args) -> int:
    charts = list_charts()
    if args.web is not None:
        web_by_id(args.web)
        charts = [c for c in charts if c.web_id == args.web]
    if args.chart is not None:
        charts = [c for c in charts if c.chart_index == args.chart]
        if not charts:
            raise BadParams("no chart matches the given filters")
    algebras: dict = {}
    rows = [verify_chart(c, args.samples, args.seed, args.tol, algebras)
            for c in charts]
    rows.sort(key=lambda r: (r["web"], r["chart"]))
    failed = sum(1 for r in rows if not r["pass"])
    payload = {
        "schema_version": 1,
        "seed": args.seed,
        "samples": args.samples,
        "tol": args.tol,
        "charts": rows,
        "summary": {"charts": len(rows), "passed": len(rows) - failed,
                    "failed": failed},
    }

    def text(p):
        lines = []
        for r in p["charts"]:
            rt = ("-" if r["roundtrip_max_error"] is None
                  else f"{r['roundtrip_max_error']:.3e}")
            lines.append(
                f"web {r['web']:>2} chart {r['chart']}: "
                f"pullback {r['max_pullback_residual']:.3e}  "
                f"killing {r['max_killing_residual']:.3e}  "
                f"diag {r['max_diagonality_residual']:.3e}  "
                f"roundtrip {rt}  "
                f"{'PASS' if r['pass'] else 'FAIL'}")
        s = p["summary"]
        lines.append(f"{s['passed']}/{s['charts']} charts pass")
        return "\n".join(lines) + "\n"

    _emit(args, payload, text)
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAIL


# ------------------------------------------------------------------ export

def cmd_export(args) -> int:
    if args.kind == "catalog":
        out = catalog_json()
    else:
        if args.web is None or args.chart is None:
            raise BadParams("export surface requires WEB and CHART")
        if args.fix is None or "=" not in args.fix:
            raise BadParams("export surface requires --fix coord=value")
        cname, _, val = args.fix.partition("=")
        cname = cname.strip()
        if cname not in _COORDS:
            raise BadParams(f"--fix coordinate must be one of {_COORDS}")
        try:
            value = float(val)
        except ValueError as exc:
            raise BadParams(f"bad --fix value {val!r}") from exc
        out = surface_csv(args.web, args.chart, cname, value, args.grid,
                          _parse_params(args.params))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


# ------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minkwebs",
        description="Separable webs of 3-dimensional Minkowski space")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("-o", "--output", default=None)
    suppress = argparse.SUPPRESS
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"),
                       default=suppress)
        p.add_argument("--seed", type=int, default=suppress)
        p.add_argument("--tol", type=float, default=suppress)
        p.add_argument("-o", "--output", default=suppress)

    p = sub.add_parser("classify", help="classify a concircular tensor")
    p.add_argument("input", nargs="?", default="-",
                   help="path to CT JSON (default: stdin)")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("chart", help="evaluate or invert a chart")
    p.add_argument("web", type=int)
    p.add_argument("chart", type=int)
    p.add_argument("--params", default=None)
    p.add_argument("--triple", default=None)
    p.add_argument("--point", default=None)
    d = p.add_mutually_exclusive_group()
    d.add_argument("--forward", action="store_true", default=True)
    d.add_argument("--invert", action="store_true", default=False)
    common(p)
    p.set_defaults(fn=cmd_chart)

    p = sub.add_parser("verify", help="run the residual suites")
    p.add_argument("--web", type=int, default=None)
    p.add_argument("--chart", type=int, default=None)
    p.add_argument("--samples", type=int, default=100)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export", help="export catalog JSON or a CSV slice")
    p.add_argument("kind", choices=("catalog", "surface"))
    p.add_argument("web", type=int, nargs="?", default=None)
    p.add_argument("chart", type=int, nargs="?", default=None)
    p.add_argument("--fix", default=None)
    p.add_argument("--grid", type=int, default=20)
    p.add_argument("--params", default=None)
    common(p)
    p.set_defaults(fn=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except NotSelfAdjoint as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_TENSOR
    except (OutsideRegion, RangeViolation, NumericalNonConvergence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (BadParams, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinkwebsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
