"""The full catalog: 45 separable webs and 88 adapted coordinate charts
on 3D Minkowski space, with generators, forward maps, diagonal metrics,
coordinate ranges, region predicates and closed-form inverses."""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..core import METRIC, raise_index
from ..concircular import ConcircularTensor
from ..errors import BadParams
from ..expr import U, V, W, PA, PB, PC, fn, jac, const, select
from .records import WebRecord, ChartRecord, Chain, Box

__all__ = ["list_webs", "list_charts", "web_by_id", "charts_for_web"]

TWO_PI = 2.0 * math.pi


# ------------------------------------------------------- expression sugar

def _f(name):
    return lambda e: fn(name, e)


SIN, COS, TAN, SEC, CSC, COT = map(_f, ("sin", "cos", "tan",
                                        "sec", "csc", "cot"))
SINH, COSH, TANH = map(_f, ("sinh", "cosh", "tanh"))
SECH, CSCH, COTH = map(_f, ("sech", "csch", "coth"))
EXP, SQRT = _f("exp"), _f("sqrt")


def _from_lightcone(plus, minus):
    """(t, x) expressions from t+x and t-x."""
    return ((plus + minus) * 0.5, (plus - minus) * 0.5)


def _e1(u, v, w):
    return u + v + w


def _e2(u, v, w):
    return u * v + u * w + v * w


# --------------------------------------------------------- generator kits

def _sym(Amixed):
    A = np.asarray(Amixed, dtype=float)
    return raise_index(0.5 * ((METRIC @ A) + (METRIC @ A).T))


def _gen_const(matrix_fn, w_fn=None, m=0.0):
    def make(params):
        A = _sym(matrix_fn(params))
        w = np.zeros(3) if w_fn is None else np.asarray(w_fn(params), float)
        return ConcircularTensor(A, w, float(m))
    return make


def _diag(*entries):
    return lambda params: np.diag([_pv(e, params) for e in entries])


def _pv(e, params):
    if isinstance(e, str):
        if e.startswith("-"):
            return -params[e[1:]]
        return params[e]
    return float(e)


_K_NULL = np.array([[-1.0, -1.0, 0.0],
                    [1.0, 1.0, 0.0],
                    [0.0, 0.0, 0.0]])          # d_xi (x) d_xi^flat
_K_NULL_P = np.array([[-1.0, 1.0, 0.0],
                      [-1.0, 1.0, 0.0],
                      [0.0, 0.0, 0.0]])        # d_eta (x) d_eta^flat
_J3 = np.array([[0.0, 0.0, -1.0],
                [0.0, 0.0, 1.0],
                [1.0, 1.0, 0.0]])              # 3-block nilpotent


# ------------------------------------------------------- param predicates

def _pos(*names):
    return lambda P: all(P[n] > 0 for n in names)


def _ordered_ab(P):
    return 0.0 < P["a"] < P["b"]


def _elliptic_pair(P):
    return (0.0 < P["a"] < 1.0 and 0.0 < P["b"] < 1.0
            and abs(P["a"] ** 2 + P["b"] ** 2 - 1.0) < 1e-12)


# --------------------------------------------------------------- builders

_WEBS: list = []
_CHARTS: list = []


def _web(id, name, family, hm, kmh, generator, names=(), ctext="",
         check=None, defaults=None):
    _WEBS.append(WebRecord(id, name, family, hm, kmh, generator,
                           tuple(names), ctext, check, defaults or {}))


def _chart(web_id, idx, t, x, y, g, ranges, timelike, region=None,
           rtext="", invert=None, irreducible=False,
           offset=(0.0, 0.0, 0.0), note=""):
    _CHARTS.append(ChartRecord(
        web_id, idx, t, x, y, tuple(g), ranges, timelike,
        region_text=rtext, region_fn=region, canonical_offset=offset,
        irreducible=irreducible, invert_fn=invert, equivalence_note=note))


def _q(t, x, y):
    return -t * t + x * x + y * y


def _m2pi(x):
    return x % TWO_PI


# ======================================================== Cartesian webs

_web(1, "Cartesian web", "Cartesian", "spacelike translational web I", None,
     _gen_const(_diag(0.0, 1.0, 2.0)))
_chart(1, 1, U, V, W, (const(-1), const(1), const(1)),
       Box(), 0, invert=lambda P, p: (p[0], p[1], p[2]))

_web(2, "Timelike-cylindrical polar web", "Cartesian",
     "timelike translational web I", None, _gen_const(_diag(1.0, 0, 0)))
_chart(2, 1, U, V * COS(W), V * SIN(W),
       (const(-1), const(1), V ** 2),
       Box(v=(0, None), w=(0, "2pi")), 0,
       invert=lambda P, p: (p[0], math.hypot(p[1], p[2]),
                            _m2pi(math.atan2(p[2], p[1]))))


def _inv_web3(P, p):
    z = cmath.acosh(complex(p[1], p[2]) / P["a"])
    return (p[0], z.real, _m2pi(z.imag))


_web(3, "Timelike-cylindrical elliptic web", "Cartesian",
     "timelike translational web III", None, _gen_const(_diag(1.0, 0, 0)),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(3, 1, U, PA * COSH(V) * COS(W), PA * SINH(V) * SIN(W),
       (const(-1),
        PA ** 2 * (COSH(V) ** 2 - COS(W) ** 2),
        PA ** 2 * (COSH(V) ** 2 - COS(W) ** 2)),
       Box(v=(0, None), w=(0, "2pi")), 0, invert=_inv_web3)


def _inv_web4(P, p):
    z = cmath.sqrt(2.0 * complex(p[1], p[2]))
    if z.real < 0:
        z = -z
    return (p[0], z.real, z.imag)


_web(4, "Timelike-cylindrical parabolic web", "Cartesian",
     "timelike translational web II", None, _gen_const(_diag(1.0, 0, 0)))
_chart(4, 1, U, (V ** 2 - W ** 2) * 0.5, V * W,
       (const(-1), V ** 2 + W ** 2, V ** 2 + W ** 2),
       Box(v=(0, None)), 0, invert=_inv_web4)

_web(5, "Spacelike-cylindrical Rindler web", "Cartesian",
     "spacelike translational web II", None, _gen_const(_diag(0, 0, 1.0)))
_chart(5, 1, U * COSH(V), U * SINH(V), W,
       (const(-1), U ** 2, const(1)),
       Box(u=(0, None)), 0,
       region=lambda P, t, x, y: -t * t + x * x < 0,
       rtext="-t^2 + x^2 < 0",
       invert=lambda P, p: (math.sqrt(p[0] ** 2 - p[1] ** 2),
                            math.asinh(p[1] / math.sqrt(p[0] ** 2
                                                        - p[1] ** 2)),
                            p[2]))
_chart(5, 2, U * SINH(V), U * COSH(V), W,
       (const(1), -(U ** 2), const(1)),
       Box(u=(0, None)), 1,
       region=lambda P, t, x, y: -t * t + x * x > 0,
       rtext="-t^2 + x^2 > 0",
       invert=lambda P, p: (math.sqrt(p[1] ** 2 - p[0] ** 2),
                            math.asinh(p[0] / math.sqrt(p[1] ** 2
                                                        - p[0] ** 2)),
                            p[2]))


def _inv_web6(P, p):
    s1 = math.asinh((p[1] + p[0]) / P["a"])
    s2 = math.asinh((p[1] - p[0]) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, p[2])


_web(6, "Spacelike-cylindrical elliptic web I", "Cartesian",
     "spacelike translational web VI", None, _gen_const(_diag(0, 0, 1.0)),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(6, 1, PA * COSH(U) * SINH(V), PA * COSH(V) * SINH(U), W,
       (PA ** 2 * (COSH(U) ** 2 + SINH(V) ** 2),
        -(PA ** 2 * (COSH(U) ** 2 + SINH(V) ** 2)),
        const(1)),
       Box(u=(0, None), v=(0, None)), 1, invert=_inv_web6)


def _inv_web7_1(P, p):
    s1 = math.acosh((abs(p[0]) + abs(p[1])) / P["a"])
    s2 = math.acosh((abs(p[0]) - abs(p[1])) / P["a"])
    return ((s1 - s2) / 2.0, (s1 + s2) / 2.0, p[2])


def _inv_web7_2(P, p):
    s1 = math.acosh((abs(p[1]) + abs(p[0])) / P["a"])
    s2 = math.acosh((abs(p[1]) - abs(p[0])) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, p[2])


def _inv_web7_3(P, p):
    s1 = math.acos((p[0] - p[1]) / P["a"])
    s2 = math.acos((p[0] + p[1]) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, p[2])


_web(7, "Spacelike-cylindrical elliptic web II", "Cartesian",
     "spacelike translational web VII", None, _gen_const(_diag(0, 0, 1.0)),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(7, 1, PA * COSH(U) * COSH(V), PA * SINH(V) * SINH(U), W,
       (PA ** 2 * (COSH(V) ** 2 - COSH(U) ** 2),
        -(PA ** 2 * (COSH(V) ** 2 - COSH(U) ** 2)),
        const(1)),
       Box(u=(0, None), v=(0, None),
           constraints=(("u < v", lambda P, u, v, w: u < v),)), 1,
       region=lambda P, t, x, y: abs(t) - abs(x) > P["a"],
       rtext="|t| - |x| > a", invert=_inv_web7_1)
_chart(7, 2, PA * SINH(U) * SINH(V), PA * COSH(V) * COSH(U), W,
       (PA ** 2 * (COSH(U) ** 2 - COSH(V) ** 2),
        -(PA ** 2 * (COSH(U) ** 2 - COSH(V) ** 2)),
        const(1)),
       Box(u=(0, None), v=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: abs(t) - abs(x) < -P["a"],
       rtext="|t| - |x| < -a", invert=_inv_web7_2)
_chart(7, 3, PA * COS(U) * COS(V), PA * SIN(V) * SIN(U), W,
       (PA ** 2 * (COS(U) ** 2 - COS(V) ** 2),
        -(PA ** 2 * (COS(U) ** 2 - COS(V) ** 2)),
        const(1)),
       Box(u=(0, "pi/2"), v=(0, "pi/2"),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       region=lambda P, t, x, y: abs(t) + abs(x) < P["a"],
       rtext="|t| + |x| < a", invert=_inv_web7_3)


def _inv_web8(P, p):
    s1 = math.acosh((p[0] - p[1]) / P["a"])
    s2 = math.asinh((p[0] + p[1]) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, p[2])


_web(8, "Spacelike-cylindrical complex elliptic web", "Cartesian",
     "spacelike translational web VIII", None, _gen_const(_diag(0, 0, 1.0)),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_t8, _x8 = _from_lightcone(PA * SINH(U - V), PA * COSH(U + V))
_chart(8, 1, _t8, _x8, W,
       (-(PA ** 2 * 0.5 * (SINH(2 * U) + SINH(2 * V))),
        PA ** 2 * 0.5 * (SINH(2 * U) + SINH(2 * V)),
        const(1)),
       Box(u=(0, None),
           constraints=(("|v| < u", lambda P, u, v, w: abs(v) < u),)), 0,
       invert=_inv_web8)

_web(9, "Spacelike-cylindrical null elliptic web I", "Cartesian",
     "spacelike translational web IX", None, _gen_const(_diag(0, 0, 1.0)))
_t9, _x9 = _from_lightcone(2 * SINH(U - V), EXP(U + V))
_chart(9, 1, _t9, _x9, W,
       (-(EXP(2 * U) + EXP(2 * V)), EXP(2 * U) + EXP(2 * V), const(1)),
       Box(), 0,
       invert=lambda P, p: (
           (math.log(p[0] - p[1]) + math.asinh((p[0] + p[1]) / 2.0)) / 2.0,
           (math.log(p[0] - p[1]) - math.asinh((p[0] + p[1]) / 2.0)) / 2.0,
           p[2]))

_web(10, "Spacelike-cylindrical null elliptic web II", "Cartesian",
     "spacelike translational web X", None, _gen_const(_diag(0, 0, 1.0)))
_t10a, _x10a = _from_lightcone(2 * COSH(U - V), -EXP(U + V))
_chart(10, 1, _t10a, _x10a, W,
       (EXP(2 * U) - EXP(2 * V), -(EXP(2 * U) - EXP(2 * V)), const(1)),
       Box(constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: -t * t + x * x > abs(t - x),
       rtext="-t^2 + x^2 > |t - x|",
       invert=lambda P, p: (
           (math.log(p[1] - p[0]) + math.acosh((p[0] + p[1]) / 2.0)) / 2.0,
           (math.log(p[1] - p[0]) - math.acosh((p[0] + p[1]) / 2.0)) / 2.0,
           p[2]))
_t10b, _x10b = _from_lightcone(2 * COSH(U - V), EXP(U + V))
_chart(10, 2, _t10b, _x10b, W,
       (EXP(2 * V) - EXP(2 * U), -(EXP(2 * V) - EXP(2 * U)), const(1)),
       Box(constraints=(("u < v", lambda P, u, v, w: u < v),)), 1,
       region=lambda P, t, x, y: -t * t + x * x < -abs(t - x),
       rtext="-t^2 + x^2 < -|t - x|",
       invert=lambda P, p: (
           (math.log(p[0] - p[1]) - math.acosh((p[0] + p[1]) / 2.0)) / 2.0,
           (math.log(p[0] - p[1]) + math.acosh((p[0] + p[1]) / 2.0)) / 2.0,
           p[2]))

_web(11, "Spacelike-cylindrical timelike parabolic web", "Cartesian",
     "spacelike translational web III", None, _gen_const(_diag(0, 0, 1.0)))
_chart(11, 1, (U ** 2 + V ** 2) * 0.5, U * V, W,
       (-((U ** 2 - V ** 2)), U ** 2 - V ** 2, const(1)),
       Box(u=(0, None), v=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       invert=lambda P, p: (
           math.sqrt(p[0] + math.sqrt(p[0] ** 2 - p[1] ** 2)),
           math.sqrt(max(p[0] - math.sqrt(p[0] ** 2 - p[1] ** 2), 0.0)),
           p[2]))

_web(12, "Spacelike-cylindrical spacelike parabolic web", "Cartesian",
     "spacelike translational web IV", None, _gen_const(_diag(0, 0, 1.0)))
_chart(12, 1, U * V, (U ** 2 + V ** 2) * 0.5, W,
       (U ** 2 - V ** 2, -((U ** 2 - V ** 2)), const(1)),
       Box(u=(0, None), v=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       invert=lambda P, p: (
           math.sqrt(p[1] + math.sqrt(p[1] ** 2 - p[0] ** 2)),
           math.sqrt(max(p[1] - math.sqrt(p[1] ** 2 - p[0] ** 2), 0.0)),
           p[2]))

_web(13, "Spacelike-cylindrical null parabolic web", "Cartesian",
     "spacelike translational web V", None, _gen_const(_diag(0, 0, 1.0)))
_t13, _x13 = _from_lightcone(U + V, -((U - V) ** 2) * 0.5)
_chart(13, 1, _t13, _x13, W,
       (U - V, -(U - V), const(1)),
       Box(u=(0, None),
           constraints=(("|v| < u", lambda P, u, v, w: abs(v) < u),)), 1,
       invert=lambda P, p: (
           ((p[0] + p[1]) + math.sqrt(2.0 * (p[1] - p[0]))) / 2.0,
           ((p[0] + p[1]) - math.sqrt(2.0 * (p[1] - p[0]))) / 2.0,
           p[2]))


# ========================================================== Central webs

def _sn(x, m):
    return jac("sn", x, m)


def _JAC(name, x, m):
    return jac(name, x, m)


_web(14, "Dilatational elliptic web I", "Central", None, None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0),
     names=("a", "b"), ctext="0 < a < 1, 0 < b < 1, a^2 + b^2 = 1",
     check=_elliptic_pair, defaults={"a": 0.6, "b": 0.8})
_chart(14, 1,
       W * _JAC("sc", U, PA) * _JAC("dn", V, PA),
       W * _JAC("nc", U, PA) * _JAC("cn", V, PA),
       W * _JAC("dc", U, PA) * _JAC("sn", V, PA),
       (-(W ** 2 * (_JAC("dc", U, PA) ** 2
                    - PA ** 2 * _JAC("sn", V, PA) ** 2)),
        W ** 2 * (_JAC("dc", U, PA) ** 2
                  - PA ** 2 * _JAC("sn", V, PA) ** 2),
        const(1)),
       Box(u=(0, "K(a)"), v=(0, "K(a)"), w=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) > 0,
       rtext="-t^2 + x^2 + y^2 > 0")
_chart(14, 2,
       U * _JAC("nd", V, PA) * _JAC("ns", W, PB),
       U * _JAC("sd", V, PA) * _JAC("ds", W, PB),
       U * _JAC("cd", V, PA) * _JAC("cs", W, PB),
       (const(-1),
        U ** 2 * (PA ** 2 * _JAC("cd", V, PA) ** 2
                  + _JAC("cs", W, PB) ** 2),
        U ** 2 * (PA ** 2 * _JAC("cd", V, PA) ** 2
                  + _JAC("cs", W, PB) ** 2)),
       Box(u=(0, None), v=(0, "K(a)"), w=(0, "K(b)")), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0")

_web(15, "Dilatational elliptic web II", "Central", "dilatational web IV",
     None, _gen_const(lambda P: np.zeros((3, 3)), m=1.0),
     names=("a", "b"), ctext="0 < a < 1, 0 < b < 1, a^2 + b^2 = 1",
     check=_elliptic_pair, defaults={"a": 0.6, "b": 0.8})
_chart(15, 1,
       W * PB / PA * _JAC("nc", U, PA) * _JAC("nc", V, PA),
       W * PB * _JAC("sc", U, PA) * _JAC("sc", V, PA),
       W / PA * _JAC("dc", U, PA) * _JAC("dc", V, PA),
       (-(W ** 2 * (_JAC("dc", U, PA) ** 2 - _JAC("dc", V, PA) ** 2)),
        W ** 2 * (_JAC("dc", U, PA) ** 2 - _JAC("dc", V, PA) ** 2),
        const(1)),
       Box(u=(0, "K(a)"), v=(0, "K(a)"), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       region=lambda P, t, x, y: (_q(t, x, y) > 0 and
                                  P["a"] * abs(t) - abs(x)
                                  > P["b"] * math.sqrt(_q(t, x, y))),
       rtext="-t^2+x^2+y^2 > 0, a|t| - |x| > b sqrt(-t^2+x^2+y^2)")
_chart(15, 2,
       W * PA * PB * _JAC("sd", U, PB) * _JAC("sd", V, PB),
       W * PB * _JAC("cd", U, PB) * _JAC("cd", V, PB),
       W * PA * _JAC("nd", U, PB) * _JAC("nd", V, PB),
       (W ** 2 * PA ** 2 * (_JAC("nd", U, PB) ** 2
                            - _JAC("nd", V, PB) ** 2),
        -(W ** 2 * PA ** 2 * (_JAC("nd", U, PB) ** 2
                              - _JAC("nd", V, PB) ** 2)),
        const(1)),
       Box(u=(0, "K(b)"), v=(0, "K(b)"), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: (_q(t, x, y) > 0 and
                                  P["a"] * abs(t) + abs(x)
                                  < P["b"] * math.sqrt(_q(t, x, y))),
       rtext="-t^2+x^2+y^2 > 0, a|t| + |x| < b sqrt(-t^2+x^2+y^2)")
_chart(15, 3,
       U * _JAC("nc", V, PA) * _JAC("nc", W, PB),
       U * _JAC("sc", V, PA) * _JAC("dc", W, PB),
       U * _JAC("dc", V, PA) * _JAC("sc", W, PB),
       (const(-1),
        U ** 2 * (_JAC("dc", V, PA) ** 2
                  + PA ** 2 * _JAC("sc", W, PB) ** 2),
        U ** 2 * (_JAC("dc", V, PA) ** 2
                  + PA ** 2 * _JAC("sc", W, PB) ** 2)),
       Box(u=(0, None), v=(0, "K(a)"), w=(0, "K(b)")), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0")


def _inv_web16_1(P, p):
    w = math.sqrt(_q(*p))
    return (math.asinh(p[0] / w), _m2pi(math.atan2(p[2], p[1])), w)


def _inv_web16_2(P, p):
    u = math.sqrt(-_q(*p))
    return (u, math.acosh(p[0] / u), _m2pi(math.atan2(p[2], p[1])))


_web(16, "Spherical web I", "Central", "timelike rotational web I", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0))
_chart(16, 1, W * SINH(U), W * COSH(U) * COS(V), W * COSH(U) * SIN(V),
       (-(W ** 2), W ** 2 * COSH(U) ** 2, const(1)),
       Box(v=(0, "2pi"), w=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) > 0,
       rtext="-t^2 + x^2 + y^2 > 0", invert=_inv_web16_1)
_chart(16, 2, U * COSH(V), U * SINH(V) * COS(W), U * SINH(V) * SIN(W),
       (const(-1), U ** 2, U ** 2 * SINH(V) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, "2pi")), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0", invert=_inv_web16_2)


def _inv_web17_1(P, p):
    w = math.sqrt(_q(*p))
    return (math.acos(p[2] / w), math.atanh(p[0] / p[1]), w)


def _inv_web17_2(P, p):
    w = math.sqrt(_q(*p))
    return (math.acosh(p[2] / w), math.atanh(p[1] / p[0]), w)


def _inv_web17_3(P, p):
    u = math.sqrt(-_q(*p))
    return (u, math.asinh(p[2] / u), math.atanh(p[1] / p[0]))


_web(17, "Spherical web II", "Central", "spacelike rotational web I", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0))
_chart(17, 1, W * SIN(U) * SINH(V), W * SIN(U) * COSH(V), W * COS(U),
       (W ** 2, -(W ** 2 * SIN(U) ** 2), const(1)),
       Box(u=(0, "pi"), w=(0, None)), 1,
       region=lambda P, t, x, y: _q(t, x, y) > 0 and -t * t + x * x > 0,
       rtext="-t^2 + x^2 + y^2 > 0, -t^2 + x^2 > 0", invert=_inv_web17_1)
_chart(17, 2, W * SINH(U) * COSH(V), W * SINH(U) * SINH(V), W * COSH(U),
       (-(W ** 2), W ** 2 * SINH(U) ** 2, const(1)),
       Box(u=(0, None), w=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) > 0 and -t * t + x * x < 0,
       rtext="-t^2 + x^2 + y^2 > 0, -t^2 + x^2 < 0", invert=_inv_web17_2)
_chart(17, 3, U * COSH(V) * COSH(W), U * COSH(V) * SINH(W), U * SINH(V),
       (const(-1), U ** 2, U ** 2 * COSH(V) ** 2),
       Box(u=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0", invert=_inv_web17_3)

_web(18, "Dilatational complex elliptic web", "Central",
     "dilatational web V", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0),
     names=("a", "b"), ctext="0 < a < 1, 0 < b < 1, a^2 + b^2 = 1",
     check=_elliptic_pair, defaults={"a": 0.6, "b": 0.8})

# The printed double-argument forms dn(2u)/(1+cn(2u)) etc. lose precision
# near the quarter-period (1+cn(2u) -> 0); the equivalent half-argument
# forms below are cancellation-free.
def _F18(x, m):
    # dn(2x)/(1 + cn(2x))
    sn, cn, dn = (_JAC(n, x, m) for n in ("sn", "cn", "dn"))
    return (dn ** 2 - m ** 2 * sn ** 2 * cn ** 2) / (2 * cn ** 2)


def _N18(x, m):
    # (1 + cn(2x)) * (1 - m^2 sn(x)^4) = 2 cn(x)^2, numerator form
    sn, cn, dn = (_JAC(n, x, m) for n in ("sn", "cn", "dn"))
    return cn ** 2 - sn ** 2 * dn ** 2


def _Q18(x, m):
    sn = _JAC("sn", x, m)
    return 1 - m ** 2 * sn ** 4


_S18a = (2 * W ** 2 * _F18(U, PA) * _F18(V, PA) / (PA * PB))
_D18a = (2 * W ** 2 * (_N18(U, PA) * _Q18(V, PA)
                       + _N18(V, PA) * _Q18(U, PA))
         / (4 * _JAC("cn", U, PA) ** 2 * _JAC("cn", V, PA) ** 2))
_chart(18, 1,
       SQRT((_S18a - _D18a) * 0.5), SQRT((_S18a + _D18a) * 0.5),
       W * _JAC("sn", U, PA) * _JAC("dc", U, PA)
       * _JAC("sn", V, PA) * _JAC("dc", V, PA),
       (-(W ** 2 * (_JAC("sn", U, PA) ** 2 * _JAC("dc", U, PA) ** 2
                    - _JAC("sn", V, PA) ** 2 * _JAC("dc", V, PA) ** 2)),
        W ** 2 * (_JAC("sn", U, PA) ** 2 * _JAC("dc", U, PA) ** 2
                  - _JAC("sn", V, PA) ** 2 * _JAC("dc", V, PA) ** 2),
        const(1)),
       Box(u=(0, "K(a)"), v=(0, "K(a)"), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       region=lambda P, t, x, y: _q(t, x, y) > 0,
       rtext="-t^2 + x^2 + y^2 > 0")
_S18b = (2 * U ** 2 * _F18(V, PA) * _F18(W, PB) / (PA * PB))
_D18b = (2 * U ** 2 * (_Q18(V, PA) * _Q18(W, PB)
                       + _N18(V, PA) * _N18(W, PB))
         / (4 * _JAC("cn", V, PA) ** 2 * _JAC("cn", W, PB) ** 2))
_chart(18, 2,
       SQRT((_S18b + _D18b) * 0.5), SQRT((_S18b - _D18b) * 0.5),
       U * _JAC("sn", V, PA) * _JAC("dc", V, PA)
       * _JAC("sn", W, PB) * _JAC("dc", W, PB),
       (const(-1),
        U ** 2 * (_JAC("sn", V, PA) ** 2 * _JAC("dc", V, PA) ** 2
                  + _JAC("sn", W, PB) ** 2 * _JAC("dc", W, PB) ** 2),
        U ** 2 * (_JAC("sn", V, PA) ** 2 * _JAC("dc", V, PA) ** 2
                  + _JAC("sn", W, PB) ** 2 * _JAC("dc", W, PB) ** 2)),
       Box(u=(0, None), v=(0, "K(a)"), w=(0, "K(b)")), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0")


def _inv_web19_1(P, p):
    w = math.sqrt(_q(*p))
    pp = w / (p[0] + p[1])
    qq = (p[2] / w) * pp
    s1 = math.asinh(qq + pp)
    s2 = math.asinh(qq - pp)
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, w)


def _inv_web19_2(P, p):
    u = math.sqrt(-_q(*p))
    pp = u / (p[0] + p[1])
    qq = (p[2] / u) * pp
    z = cmath.acos(complex(pp, -qq))
    return (u, abs(z.real), abs(z.imag))


_web(19, "Dilatational null elliptic web I", "Central",
     "dilatational web II", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0))
_t19a, _x19a = _from_lightcone(
    W * SECH(U) * CSCH(V),
    -(W * COSH(U) * SINH(V) * (1 - TANH(U) ** 2 * COTH(V) ** 2)))
_chart(19, 1, _t19a, _x19a, W * TANH(U) * COTH(V),
       (W ** 2 * (SECH(U) ** 2 + CSCH(V) ** 2),
        -(W ** 2 * (SECH(U) ** 2 + CSCH(V) ** 2)),
        const(1)),
       Box(u=(0, None), v=(0, None), w=(0, None)), 1,
       region=lambda P, t, x, y: _q(t, x, y) > 0,
       rtext="-t^2 + x^2 + y^2 > 0", invert=_inv_web19_1)
_t19b, _x19b = _from_lightcone(
    U * SEC(V) * SECH(W),
    U * COS(V) * COSH(W) * (1 + TAN(V) ** 2 * TANH(W) ** 2))
_chart(19, 2, _t19b, _x19b, U * TAN(V) * TANH(W),
       (const(-1),
        U ** 2 * (SEC(V) ** 2 - SECH(W) ** 2),
        U ** 2 * (SEC(V) ** 2 - SECH(W) ** 2)),
       Box(u=(0, None), v=(0, "pi/2"), w=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0", invert=_inv_web19_2)


def _inv_web20_1(P, p):
    w = math.sqrt(_q(*p))
    pp = w / (p[0] + p[1])
    qq = (p[2] / w) * pp
    s1 = math.acos(pp - qq)
    s2 = math.acos(pp + qq)
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, w)


def _inv_web20_2(P, p):
    w = math.sqrt(_q(*p))
    pp = w / (p[0] + p[1])
    qq = (p[2] / w) * pp
    s1 = math.acosh(qq + pp)
    s2 = math.acosh(qq - pp)
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, w)


def _inv_web20_3(P, p):
    w = math.sqrt(_q(*p))
    pp = w / (p[0] + p[1])
    qq = (p[2] / w) * pp
    s1 = math.acosh(pp + qq)
    s2 = math.acosh(pp - qq)
    return ((s1 - s2) / 2.0, (s1 + s2) / 2.0, w)


def _inv_web20_4(P, p):
    u = math.sqrt(-_q(*p))
    pp = u / (p[0] + p[1])
    qq = (p[2] / u) * pp
    z = cmath.asinh(complex(pp, qq))
    return (u, abs(z.real), abs(z.imag))


_web(20, "Dilatational null elliptic web II", "Central",
     "dilatational web III", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0))
_t20a, _x20a = _from_lightcone(
    W * SEC(U) * SEC(V),
    -(W * COS(U) * COS(V) * (1 - TAN(U) ** 2 * TAN(V) ** 2)))
_chart(20, 1, _t20a, _x20a, W * TAN(U) * TAN(V),
       (-(W ** 2 * (SEC(U) ** 2 - SEC(V) ** 2)),
        W ** 2 * (SEC(U) ** 2 - SEC(V) ** 2),
        const(1)),
       Box(u=(0, "pi/2"), v=(0, "pi/2"), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       region=lambda P, t, x, y: (
           _q(t, x, y) > 0 and abs(x) > math.sqrt(_q(t, x, y))
           and t * x > 0),
       rtext="-t^2+x^2+y^2 > 0, |x| > sqrt(-t^2+x^2+y^2), tx > 0",
       invert=_inv_web20_1)
_t20b, _x20b = _from_lightcone(
    W * CSCH(U) * CSCH(V),
    -(W * SINH(U) * SINH(V) * (1 - COTH(U) ** 2 * COTH(V) ** 2)))
_chart(20, 2, _t20b, _x20b, W * COTH(U) * COTH(V),
       (W ** 2 * (CSCH(V) ** 2 - CSCH(U) ** 2),
        -(W ** 2 * (CSCH(V) ** 2 - CSCH(U) ** 2)),
        const(1)),
       Box(u=(0, None), v=(0, None), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: (
           _q(t, x, y) > 0 and abs(x) > math.sqrt(_q(t, x, y))
           and t * x < 0 and abs(y) > math.sqrt(_q(t, x, y))),
       rtext="-t^2+x^2+y^2 > 0, |x| > sqrt(q), tx < 0, |y| > sqrt(q)",
       invert=_inv_web20_2)
_t20c, _x20c = _from_lightcone(
    W * SECH(U) * SECH(V),
    -(W * COSH(U) * COSH(V) * (1 - TANH(U) ** 2 * TANH(V) ** 2)))
_chart(20, 3, _t20c, _x20c, W * TANH(U) * TANH(V),
       (W ** 2 * (SECH(U) ** 2 - SECH(V) ** 2),
        -(W ** 2 * (SECH(U) ** 2 - SECH(V) ** 2)),
        const(1)),
       Box(u=(0, None), v=(0, None), w=(0, None),
           constraints=(("u < v", lambda P, u, v, w: u < v),)), 1,
       region=lambda P, t, x, y: (
           _q(t, x, y) > 0 and abs(x) > math.sqrt(_q(t, x, y))
           and t * x < 0 and abs(y) < math.sqrt(_q(t, x, y))),
       rtext="-t^2+x^2+y^2 > 0, |x| > sqrt(q), tx < 0, |y| < sqrt(q)",
       invert=_inv_web20_3)
_t20d, _x20d = _from_lightcone(
    U * CSCH(V) * SEC(W),
    U * SINH(V) * COS(W) * (1 + COTH(V) ** 2 * TAN(W) ** 2))
_chart(20, 4, _t20d, _x20d, U * COTH(V) * TAN(W),
       (const(-1),
        U ** 2 * (CSCH(V) ** 2 + SEC(W) ** 2),
        U ** 2 * (CSCH(V) ** 2 + SEC(W) ** 2)),
       Box(u=(0, None), v=(0, None), w=(0, "pi/2")), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0", invert=_inv_web20_4)


def _inv_web21_1(P, p):
    w = math.sqrt(_q(*p))
    eu = (p[1] - p[0]) / w
    return (math.log(eu), p[2] / (w * eu), w)


def _inv_web21_2(P, p):
    u = math.sqrt(-_q(*p))
    ev = (p[0] + p[1]) / u
    return (u, math.log(ev), p[2] / (u * ev))


_web(21, "Null spherical web", "Central", "null rotational web I", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0))
_t21a, _x21a = _from_lightcone(W * (EXP(-U) - V ** 2 * EXP(U)),
                               -(W * EXP(U)))
_chart(21, 1, _t21a, _x21a, W * V * EXP(U),
       (-(W ** 2), W ** 2 * EXP(2 * U), const(1)),
       Box(w=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) > 0,
       rtext="-t^2 + x^2 + y^2 > 0", invert=_inv_web21_1)
_t21b, _x21b = _from_lightcone(U * EXP(V),
                               U * (EXP(-V) + W ** 2 * EXP(V)))
_chart(21, 2, _t21b, _x21b, U * W * EXP(V),
       (const(-1), U ** 2, U ** 2 * EXP(2 * V)),
       Box(u=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0", invert=_inv_web21_2)


def _inv_web22_1(P, p):
    w = math.sqrt(_q(*p))
    pp = w / (p[0] + p[1])
    ss = 2.0 * p[2] * pp / w
    d = math.sqrt(max(ss * ss - 4.0 * pp * pp, 0.0))
    return (math.sqrt((ss - d) / 2.0), math.sqrt((ss + d) / 2.0), w)


def _inv_web22_2(P, p):
    u = math.sqrt(-_q(*p))
    pp = u / (p[0] + p[1])
    ss = math.sqrt(4.0 * pp * (p[0] - p[1]) / u)
    dd = 2.0 * p[2] * pp / u
    return (u, math.sqrt((ss - dd) / 2.0), math.sqrt((ss + dd) / 2.0))


_web(22, "Dilatational null elliptic web III", "Central",
     "dilatational web I", None,
     _gen_const(lambda P: np.zeros((3, 3)), m=1.0))
_t22a, _x22a = _from_lightcone(
    W / (U * V), W * (U ** 2 - V ** 2) ** 2 / (4 * U * V))
_chart(22, 1, _t22a, _x22a, W * (U ** 2 + V ** 2) / (2 * U * V),
       (-(W ** 2 * (1 / U ** 2 - 1 / V ** 2)),
        W ** 2 * (1 / U ** 2 - 1 / V ** 2),
        const(1)),
       Box(u=(0, None), v=(0, None), w=(0, None),
           constraints=(("u < v", lambda P, u, v, w: u < v),)), 0,
       region=lambda P, t, x, y: _q(t, x, y) > 0,
       rtext="-t^2 + x^2 + y^2 > 0", invert=_inv_web22_1)
_t22b, _x22b = _from_lightcone(
    U / (V * W), U * (V ** 2 + W ** 2) ** 2 / (4 * V * W))
_chart(22, 2, _t22b, _x22b, U * (W ** 2 - V ** 2) / (2 * V * W),
       (const(-1),
        U ** 2 * (1 / V ** 2 + 1 / W ** 2),
        U ** 2 * (1 / V ** 2 + 1 / W ** 2)),
       Box(u=(0, None), v=(0, None), w=(0, None)), 0,
       region=lambda P, t, x, y: _q(t, x, y) < 0,
       rtext="-t^2 + x^2 + y^2 < 0", invert=_inv_web22_2)


def _inv_web23_1(P, p):
    rho = math.hypot(p[1], p[2])
    s1 = math.acosh((abs(p[0]) + rho) / P["a"])
    s2 = math.acosh((abs(p[0]) - rho) / P["a"])
    return ((s1 - s2) / 2.0, (s1 + s2) / 2.0,
            _m2pi(math.atan2(p[2], p[1])))


def _inv_web23_2(P, p):
    rho = math.hypot(p[1], p[2])
    s1 = math.acosh((rho + abs(p[0])) / P["a"])
    s2 = math.acosh((rho - abs(p[0])) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0,
            _m2pi(math.atan2(p[2], p[1])))


def _inv_web23_3(P, p):
    rho = math.hypot(p[1], p[2])
    s1 = math.acos((p[0] - rho) / P["a"])
    s2 = math.acos((p[0] + rho) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0,
            _m2pi(math.atan2(p[2], p[1])))


_web(23, "Elliptic-circular web II", "Central",
     "timelike rotational web IV", None,
     _gen_const(lambda P: np.diag([P["a"] ** 2, 0.0, 0.0]), m=1.0),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(23, 1, PA * COSH(U) * COSH(V),
       PA * SINH(V) * SINH(U) * COS(W), PA * SINH(V) * SINH(U) * SIN(W),
       (PA ** 2 * (COSH(V) ** 2 - COSH(U) ** 2),
        -(PA ** 2 * (COSH(V) ** 2 - COSH(U) ** 2)),
        PA ** 2 * SINH(V) ** 2 * SINH(U) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, "2pi"),
           constraints=(("u < v", lambda P, u, v, w: u < v),)), 1,
       region=lambda P, t, x, y:
           abs(t) - math.hypot(x, y) > P["a"],
       rtext="|t| - sqrt(x^2 + y^2) > a", invert=_inv_web23_1)
_chart(23, 2, PA * SINH(V) * SINH(U),
       PA * COSH(U) * COSH(V) * COS(W), PA * COSH(U) * COSH(V) * SIN(W),
       (PA ** 2 * (COSH(U) ** 2 - COSH(V) ** 2),
        -(PA ** 2 * (COSH(U) ** 2 - COSH(V) ** 2)),
        PA ** 2 * COSH(V) ** 2 * COSH(U) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, "2pi"),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y:
           abs(t) - math.hypot(x, y) < -P["a"],
       rtext="|t| - sqrt(x^2 + y^2) < -a", invert=_inv_web23_2)
_chart(23, 3, PA * COS(U) * COS(V),
       PA * SIN(V) * SIN(U) * COS(W), PA * SIN(V) * SIN(U) * SIN(W),
       (PA ** 2 * (COS(U) ** 2 - COS(V) ** 2),
        -(PA ** 2 * (COS(U) ** 2 - COS(V) ** 2)),
        PA ** 2 * SIN(U) ** 2 * SIN(V) ** 2),
       Box(u=(0, "pi/2"), v=(0, "pi/2"), w=(0, "2pi"),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       region=lambda P, t, x, y:
           abs(t) + math.hypot(x, y) < P["a"],
       rtext="|t| + sqrt(x^2 + y^2) < a", invert=_inv_web23_3)


def _inv_web24(P, p):
    rho = math.hypot(p[1], p[2])
    s1 = math.asinh((rho + p[0]) / P["a"])
    s2 = math.asinh((rho - p[0]) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0,
            _m2pi(math.atan2(p[2], p[1])))


_web(24, "Elliptic-circular web I", "Central",
     "timelike rotational web III", None,
     _gen_const(lambda P: np.diag([-P["a"] ** 2, 0.0, 0.0]), m=1.0),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(24, 1, PA * COSH(U) * SINH(V),
       PA * COSH(V) * SINH(U) * COS(W), PA * COSH(V) * SINH(U) * SIN(W),
       (PA ** 2 * (COSH(U) ** 2 + SINH(V) ** 2),
        -(PA ** 2 * (COSH(U) ** 2 + SINH(V) ** 2)),
        PA ** 2 * COSH(V) ** 2 * SINH(U) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, "2pi")), 1, invert=_inv_web24)


def _inv_web25_1(P, p):
    u = math.atanh(p[0] / p[1])
    X = math.sqrt(p[1] ** 2 - p[0] ** 2)
    z = cmath.acosh(complex(X, p[2]) / P["a"])
    return (u, abs(z.real), abs(z.imag))


def _inv_web25_2(P, p):
    w = math.atanh(p[1] / p[0])
    T = math.sqrt(p[0] ** 2 - p[1] ** 2)
    s1 = math.asinh((T + p[2]) / P["a"])
    s2 = math.asinh((T - p[2]) / P["a"])
    return ((s1 - s2) / 2.0, (s1 + s2) / 2.0, w)


_web(25, "Elliptic-hyperbolic web I", "Central",
     "spacelike rotational web III", None,
     _gen_const(lambda P: np.diag([0.0, 0.0, P["a"] ** 2]), m=1.0),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(25, 1, PA * SINH(U) * COSH(V) * COS(W),
       PA * COSH(U) * COSH(V) * COS(W), PA * SINH(V) * SIN(W),
       (-(PA ** 2 * COSH(V) ** 2 * COS(W) ** 2),
        PA ** 2 * (COSH(V) ** 2 - COS(W) ** 2),
        PA ** 2 * (COSH(V) ** 2 - COS(W) ** 2)),
       Box(u=(0, None), v=(0, None), w=(0, "pi/2")), 0,
       region=lambda P, t, x, y: -t * t + x * x > 0,
       rtext="-t^2 + x^2 > 0", invert=_inv_web25_1)
_chart(25, 2, PA * COSH(U) * SINH(V) * COSH(W),
       PA * COSH(U) * SINH(V) * SINH(W), PA * SINH(U) * COSH(V),
       (PA ** 2 * (COSH(U) ** 2 + SINH(V) ** 2),
        -(PA ** 2 * (COSH(U) ** 2 + SINH(V) ** 2)),
        PA ** 2 * COSH(U) ** 2 * SINH(V) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, None)), 1,
       region=lambda P, t, x, y: -t * t + x * x < 0,
       rtext="-t^2 + x^2 < 0", invert=_inv_web25_2)


def _inv_web26_1(P, p):
    u = math.atanh(p[0] / p[1])
    X = math.sqrt(p[1] ** 2 - p[0] ** 2)
    z = cmath.acosh(complex(p[2], X) / P["a"])
    return (u, abs(z.real), abs(z.imag))


def _inv_web26_2(P, p):
    w = math.atanh(p[1] / p[0])
    T = math.sqrt(p[0] ** 2 - p[1] ** 2)
    s1 = math.acosh((T + p[2]) / P["a"])
    s2 = math.acosh((T - p[2]) / P["a"])
    return ((s1 - s2) / 2.0, (s1 + s2) / 2.0, w)


def _inv_web26_3(P, p):
    w = math.atanh(p[1] / p[0])
    T = math.sqrt(p[0] ** 2 - p[1] ** 2)
    s1 = math.acosh((p[2] + T) / P["a"])
    s2 = math.acosh((p[2] - T) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, w)


def _inv_web26_4(P, p):
    w = math.atanh(p[1] / p[0])
    T = math.sqrt(p[0] ** 2 - p[1] ** 2)
    s1 = math.acos((T - p[2]) / P["a"])
    s2 = math.acos((T + p[2]) / P["a"])
    return ((s1 + s2) / 2.0, (s1 - s2) / 2.0, w)


_web(26, "Elliptic-hyperbolic web II", "Central",
     "spacelike rotational web IV", None,
     _gen_const(lambda P: np.diag([0.0, 0.0, -P["a"] ** 2]), m=1.0),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_chart(26, 1, PA * SINH(U) * SINH(V) * SIN(W),
       PA * COSH(U) * SINH(V) * SIN(W), PA * COSH(V) * COS(W),
       (-(PA ** 2 * SINH(V) ** 2 * SIN(W) ** 2),
        PA ** 2 * (COSH(V) ** 2 - COS(W) ** 2),
        PA ** 2 * (COSH(V) ** 2 - COS(W) ** 2)),
       Box(u=(0, None), v=(0, None), w=(0, "pi")), 0,
       region=lambda P, t, x, y: -t * t + x * x > 0,
       rtext="-t^2 + x^2 > 0", invert=_inv_web26_1)
_chart(26, 2, PA * COSH(U) * COSH(V) * COSH(W),
       PA * COSH(U) * COSH(V) * SINH(W), PA * SINH(U) * SINH(V),
       (PA ** 2 * (COSH(V) ** 2 - COSH(U) ** 2),
        -(PA ** 2 * (COSH(V) ** 2 - COSH(U) ** 2)),
        PA ** 2 * COSH(U) ** 2 * COSH(V) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, None),
           constraints=(("u < v", lambda P, u, v, w: u < v),)), 1,
       region=lambda P, t, x, y: (-t * t + x * x < 0 and
                                  math.sqrt(t * t - x * x) - abs(y)
                                  > P["a"]),
       rtext="-t^2 + x^2 < 0, sqrt(t^2 - x^2) - |y| > a",
       invert=_inv_web26_2)
_chart(26, 3, PA * SINH(U) * SINH(V) * COSH(W),
       PA * SINH(U) * SINH(V) * SINH(W), PA * COSH(U) * COSH(V),
       (PA ** 2 * (COSH(U) ** 2 - COSH(V) ** 2),
        -(PA ** 2 * (COSH(U) ** 2 - COSH(V) ** 2)),
        PA ** 2 * SINH(U) ** 2 * SINH(V) ** 2),
       Box(u=(0, None), v=(0, None), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: (-t * t + x * x < 0 and
                                  math.sqrt(t * t - x * x) - abs(y)
                                  < -P["a"]),
       rtext="-t^2 + x^2 < 0, sqrt(t^2 - x^2) - |y| < -a",
       invert=_inv_web26_3)
_chart(26, 4, PA * COS(U) * COS(V) * COSH(W),
       PA * COS(U) * COS(V) * SINH(W), PA * SIN(U) * SIN(V),
       (PA ** 2 * (COS(U) ** 2 - COS(V) ** 2),
        -(PA ** 2 * (COS(U) ** 2 - COS(V) ** 2)),
        PA ** 2 * COS(U) ** 2 * COS(V) ** 2),
       Box(u=(0, "pi/2"), v=(0, "pi/2"), w=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       region=lambda P, t, x, y: (-t * t + x * x < 0 and
                                  math.sqrt(t * t - x * x) + abs(y)
                                  < P["a"]),
       rtext="-t^2 + x^2 < 0, sqrt(t^2 - x^2) + |y| < a",
       invert=_inv_web26_4)


def _inv_web27_1(P, p):
    E = p[1] - p[0]
    w = p[2] / E
    d = math.acosh((p[0] + p[1] + w * w * E) / 2.0)
    return ((math.log(E) + d) / 2.0, (math.log(E) - d) / 2.0, w)


def _inv_web27_2(P, p):
    E = p[0] - p[1]
    w = p[2] / E
    d = math.acosh((p[0] + p[1] - w * w * E) / 2.0)
    return ((math.log(E) - d) / 2.0, (math.log(E) + d) / 2.0, w)


_web(27, "Parabolically-embedded null elliptic web II", "Central",
     "null rotational web III", None,
     _gen_const(lambda P: -_K_NULL_P, m=1.0))
_t27a, _x27a = _from_lightcone(
    2 * COSH(U - V) - W ** 2 * EXP(U + V), -EXP(U + V))
_chart(27, 1, _t27a, _x27a, W * EXP(U + V),
       (EXP(2 * U) - EXP(2 * V), -(EXP(2 * U) - EXP(2 * V)),
        EXP(2 * (U + V))),
       Box(constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: _q(t, x, y) > abs(t - x),
       rtext="-t^2 + x^2 + y^2 > |t - x|", invert=_inv_web27_1)
_t27b, _x27b = _from_lightcone(
    2 * COSH(U - V) + W ** 2 * EXP(U + V), EXP(U + V))
_chart(27, 2, _t27b, _x27b, W * EXP(U + V),
       (EXP(2 * V) - EXP(2 * U), -(EXP(2 * V) - EXP(2 * U)),
        EXP(2 * (U + V))),
       Box(constraints=(("u < v", lambda P, u, v, w: u < v),)), 1,
       region=lambda P, t, x, y: _q(t, x, y) < -abs(t - x),
       rtext="-t^2 + x^2 + y^2 < -|t - x|", invert=_inv_web27_2)


def _inv_web28(P, p):
    E = p[0] - p[1]
    w = p[2] / E
    d = math.asinh((p[0] + p[1] - w * w * E) / 2.0)
    return ((math.log(E) + d) / 2.0, (math.log(E) - d) / 2.0, w)


_web(28, "Parabolically-embedded null elliptic web I", "Central",
     "null rotational web II", None,
     _gen_const(lambda P: _K_NULL_P, m=1.0))
_t28, _x28 = _from_lightcone(
    2 * SINH(U - V) + W ** 2 * EXP(U + V), EXP(U + V))
_chart(28, 1, _t28, _x28, W * EXP(U + V),
       (-(EXP(2 * U) + EXP(2 * V)), EXP(2 * U) + EXP(2 * V),
        EXP(2 * (U + V))),
       Box(), 0, invert=_inv_web28)


# ================================================= irreducible central webs

def _web29_like_metric(a, b):
    return ((U - V) * (U - W) / (4 * U * (U - a) * (U - b)),
            (V - U) * (V - W) / (4 * V * (V - a) * (V - b)),
            (W - U) * (W - V) / (4 * W * (W - a) * (W - b)))


_web(29, "Ellipsoidal web I", "Central", "asymmetric web IX", "B.1.a",
     _gen_const(_diag(0.0, "a", "b"), m=1.0),
     names=("a", "b"), ctext="0 < a < b", check=_ordered_ab,
     defaults={"a": 1.0, "b": 2.0})
_chart(29, 1,
       SQRT(-(U * V * W) / (PA * PB)),
       SQRT((PA - U) * (PA - V) * (PA - W) / (PA * (PB - PA))),
       SQRT(-((PB - U) * (PB - V) * (PB - W)) / (PB * (PB - PA))),
       _web29_like_metric(PA, PB),
       Chain("w", 0, "a", "v", "b", "u"), 2, irreducible=True)

_web(30, "Ellipsoidal web II", "Central", None, "B.1.d",
     _gen_const(_diag("a", "b", 0.0), m=1.0),
     names=("a", "b"), ctext="0 < a < b", check=_ordered_ab,
     defaults={"a": 1.0, "b": 2.0})
_MAP30 = (SQRT(-((PA - U) * (PA - V) * (PA - W)) / (PA * (PB - PA))),
          SQRT(-((PB - U) * (PB - V) * (PB - W)) / (PB * (PB - PA))),
          SQRT(U * V * W / (PA * PB)))
for _i, (_chain, _tl) in enumerate([
        (Chain("w", "v", 0, "a", "b", "u"), 2),
        (Chain(0, "w", "v", "a", "b", "u"), 1),
        (Chain(0, "a", "w", "v", "b", "u"), 2),
        (Chain(0, "a", "b", "w", "v", "u"), 1)], start=1):
    _chart(30, _i, *_MAP30, _web29_like_metric(PA, PB), _chain, _tl,
           irreducible=True)

_NOTE31 = ("Four coordinate ranges are listed; the source catalog notes "
           "that they cover only three isometrically inequivalent regions.")
_web(31, "Ellipsoidal web III", "Central", None, "B.1.c",
     _gen_const(_diag("b", "a", 0.0), m=1.0),
     names=("a", "b"), ctext="0 < a < b", check=_ordered_ab,
     defaults={"a": 1.0, "b": 2.0})
_MAP31 = (SQRT((PB - U) * (PB - V) * (PB - W) / (PB * (PB - PA))),
          SQRT((PA - U) * (PA - V) * (PA - W) / (PA * (PB - PA))),
          SQRT(U * V * W / (PA * PB)))
for _i, (_chain, _tl) in enumerate([
        (Chain("w", "v", 0, "u", "a", "b"), 2),
        (Chain(0, "w", "v", "u", "a", "b"), 1),
        (Chain(0, "w", "a", "v", "u", "b"), 0),
        (Chain(0, "w", "a", "b", "v", "u"), 1)], start=1):
    _chart(31, _i, *_MAP31, _web29_like_metric(PA, PB), _chain, _tl,
           irreducible=True, note=_NOTE31)

_web(32, "Complex ellipsoidal web", "Central", "asymmetric web X", "B.1.f",
     _gen_const(lambda P: np.array([[0.0, P["b"], 0.0],
                                    [-P["b"], 0.0, 0.0],
                                    [0.0, 0.0, P["c"]]]), m=1.0),
     names=("b", "c"), ctext="b > 0", check=_pos("b"),
     defaults={"b": 1.0, "c": 1.0})
_S32 = (SQRT((U ** 2 + PB ** 2) * (V ** 2 + PB ** 2) * (W ** 2 + PB ** 2))
        / (PB * SQRT(PB ** 2 + PC ** 2)))
_D32 = ((PB ** 2 * (U + V + W - PC) + PC * _e2(U, V, W) - U * V * W)
        / (PB ** 2 + PC ** 2))
_G32 = ((U - V) * (U - W) / (4 * (U ** 2 + PB ** 2) * (U - PC)),
        (V - U) * (V - W) / (4 * (V ** 2 + PB ** 2) * (V - PC)),
        (W - U) * (W - V) / (4 * (W ** 2 + PB ** 2) * (W - PC)))
_R32 = (_e2(U, V, W) - PB ** 2 - PC * _D32) / (2 * PB)
_Y32 = SQRT(-((PC - U) * (PC - V) * (PC - W)) / (PC ** 2 + PB ** 2))
# Each chart is written around the lightcone combination that stays bounded
# away from zero on its region, so no intermediate quantity cancels.
_X32A = SQRT((_S32 + _D32) * 0.5)
_chart(32, 1, _R32 / _X32A, _X32A, _Y32,
       _G32, Chain("c", "w", "v", "u"), 1, irreducible=True)
_F32 = SQRT(_S32 - 2 * _R32)
_chart(32, 2, (_F32 - _D32 / _F32) * 0.5, (-_D32 / _F32 - _F32) * 0.5, _Y32,
       _G32, Chain("w", "v", "c", "u"), 2, irreducible=True)


def _null_elliptic(eta_sq, dd, ysq):
    """(t, x, y) from (x+t)^2, x^2-t^2 and y^2 expressions."""
    eta = SQRT(eta_sq)
    xm = dd / eta
    return ((eta - xm) * 0.5, (eta + xm) * 0.5, SQRT(ysq))


_G33 = ((U - V) * (U - W) / (4 * U ** 2 * (U - PC)),
        (V - U) * (V - W) / (4 * V ** 2 * (V - PC)),
        (W - U) * (W - V) / (4 * W ** 2 * (W - PC)))
_G34 = ((U - V) * (U - W) / (4 * U ** 2 * (U + PC)),
        (V - U) * (V - W) / (4 * V ** 2 * (V + PC)),
        (W - U) * (W - V) / (4 * W ** 2 * (W + PC)))

_web(33, "Null ellipsoidal web I", "Central", "asymmetric web VIII",
     "D.1.d",
     _gen_const(lambda P: _K_NULL + np.diag([0.0, 0.0, P["c"]]), m=1.0),
     names=("c",), ctext="c > 0", check=_pos("c"), defaults={"c": 1.0})
_chart(33, 1,
       *_null_elliptic(-(U * V * W) / PC,
                       _e2(U, V, W) / PC - U * V * W / PC ** 2,
                       -((PC - U) * (PC - V) * (PC - W)) / PC ** 2),
       _G33, Chain("w", 0, "v", "c", "u"), 2, irreducible=True)

_web(34, "Null ellipsoidal web II", "Central", None, None,
     _gen_const(lambda P: _K_NULL + np.diag([0.0, 0.0, -P["c"]]), m=1.0),
     names=("c",), ctext="c > 0", check=_pos("c"), defaults={"c": 1.0})
_MAP34 = _null_elliptic(U * V * W / PC,
                        -_e2(U, V, W) / PC - U * V * W / PC ** 2,
                        (PC + U) * (PC + V) * (PC + W) / PC ** 2)
_chart(34, 1, *_MAP34, _G34, Chain("-c", 0, "w", "v", "u"), 1,
       irreducible=True)
_chart(34, 2, *_MAP34, _G34, Chain("-c", "w", "v", 0, "u"), 1,
       irreducible=True)

_web(35, "Null ellipsoidal web III", "Central", None, "D.1.a",
     _gen_const(lambda P: -_K_NULL + np.diag([0.0, 0.0, P["c"]]), m=1.0),
     names=("c",), ctext="c > 0", check=_pos("c"), defaults={"c": 1.0})
_MAP35 = _null_elliptic(U * V * W / PC,
                        _e2(U, V, W) / PC - U * V * W / PC ** 2,
                        -((PC - U) * (PC - V) * (PC - W)) / PC ** 2)
_chart(35, 1, *_MAP35, _G33, Chain(0, "c", "w", "v", "u"), 1,
       irreducible=True)
_chart(35, 2, *_MAP35, _G33, Chain(0, "w", "v", "c", "u"), 2,
       irreducible=True)
_chart(35, 3, *_MAP35, _G33, Chain("w", "v", 0, "c", "u"), 2,
       irreducible=True)

_web(36, "Null ellipsoidal web IV", "Central", None, "D.1.b",
     _gen_const(lambda P: -_K_NULL + np.diag([0.0, 0.0, -P["c"]]), m=1.0),
     names=("c",), ctext="c > 0", check=_pos("c"), defaults={"c": 1.0})
_MAP36 = _null_elliptic(-(U * V * W) / PC,
                        -_e2(U, V, W) / PC - U * V * W / PC ** 2,
                        (PC + U) * (PC + V) * (PC + W) / PC ** 2)
_chart(36, 1, *_MAP36, _G34, Chain("-c", "w", 0, "v", "u"), 1,
       irreducible=True)
_chart(36, 2, *_MAP36, _G34, Chain("-c", "w", "v", "u", 0), 1,
       irreducible=True)
_chart(36, 3, *_MAP36, _G34, Chain("w", "v", "-c", "u", 0), 2,
       irreducible=True)

_web(37, "Null ellipsoidal web V", "Central", "asymmetric web VII",
     "F.1.a", _gen_const(lambda P: _J3, m=1.0))
_ETA37 = SQRT(U * V * W)
_Y37 = -(_e2(U, V, W)) / (2 * _ETA37)
_XM37 = (_e1(U, V, W) - _Y37 ** 2) / _ETA37
_G37 = ((U - V) * (U - W) / (4 * U ** 3),
        (V - U) * (V - W) / (4 * V ** 3),
        (U - W) * (V - W) / (4 * W ** 3))
_chart(37, 1, (_ETA37 - _XM37) * 0.5, (_ETA37 + _XM37) * 0.5, _Y37,
       _G37, Chain(0, "w", "v", "u"), 1, irreducible=True)
_chart(37, 2, (_ETA37 - _XM37) * 0.5, (_ETA37 + _XM37) * 0.5, _Y37,
       _G37, Chain("w", "v", 0, "u"), 2, irreducible=True)


# ============================================================ axial webs

def _inv_web38(P, p):
    rho = math.hypot(p[1], p[2])
    s = math.sqrt(p[0] ** 2 - rho ** 2)
    return (math.sqrt(p[0] + s), math.sqrt(max(p[0] - s, 0.0)),
            _m2pi(math.atan2(p[2], p[1])))


_web(38, "Timelike parabolic-circular web", "NonNullAxial",
     "timelike rotational web II", None,
     _gen_const(lambda P: np.zeros((3, 3)),
                w_fn=lambda P: (1.0, 0.0, 0.0)))
_chart(38, 1, (U ** 2 + V ** 2) * 0.5, U * V * COS(W), U * V * SIN(W),
       (-((U ** 2 - V ** 2)), U ** 2 - V ** 2, U ** 2 * V ** 2),
       Box(u=(0, None), v=(0, None), w=(0, "2pi"),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 0,
       invert=_inv_web38)

_NOTE39 = ("A third admissible range 0 < w < a < v < u exists; it is "
           "equivalent to the second under the sign reversal of the "
           "generator and is not listed separately.")
_web(39, "Timelike paraboloidal web", "NonNullAxial", "asymmetric web IV",
     "C.a",
     _gen_const(_diag(0.0, 0.0, "a"), w_fn=lambda P: (1.0, 0.0, 0.0)),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_MAP39 = (-(_e1(U, V, W)) * 0.5,
          SQRT(U * V * W / PA),
          SQRT(-((U - PA) * (V - PA) * (W - PA)) / PA))
_G39 = (-((U - V) * (U - W)) / (4 * U * (U - PA)),
        (U - V) * (V - W) / (4 * V * (V - PA)),
        -((U - W) * (V - W)) / (4 * W * (W - PA)))
_chart(39, 1, *_MAP39, _G39, Chain("w", "v", 0, "u", "a"), 2,
       irreducible=True, offset=("a/2", 0.0, 0.0), note=_NOTE39)
_chart(39, 2, *_MAP39, _G39, Chain(0, "w", "v", "u", "a"), 1,
       irreducible=True, offset=("a/2", 0.0, 0.0), note=_NOTE39)

_web(40, "Spacelike parabolic-hyperbolic web", "NonNullAxial",
     "spacelike rotational web II", None,
     _gen_const(lambda P: np.zeros((3, 3)),
                w_fn=lambda P: (0.0, 0.0, 1.0)))
_chart(40, 1, V * W * SINH(U), V * W * COSH(U), (V ** 2 - W ** 2) * 0.5,
       (-(V ** 2 * W ** 2), V ** 2 + W ** 2, V ** 2 + W ** 2),
       Box(v=(0, None), w=(0, None)), 0,
       region=lambda P, t, x, y: -t * t + x * x > 0,
       rtext="-t^2 + x^2 > 0",
       invert=lambda P, p: (
           math.atanh(p[0] / p[1]),
           math.sqrt(p[2] + math.hypot(p[2],
                                       math.sqrt(p[1] ** 2 - p[0] ** 2))),
           math.sqrt(-p[2] + math.hypot(p[2],
                                        math.sqrt(p[1] ** 2
                                                  - p[0] ** 2)))))
_chart(40, 2, U * V * COSH(W), U * V * SINH(W), (U ** 2 + V ** 2) * 0.5,
       (U ** 2 - V ** 2, -((U ** 2 - V ** 2)), U ** 2 * V ** 2),
       Box(u=(0, None), v=(0, None),
           constraints=(("v < u", lambda P, u, v, w: v < u),)), 1,
       region=lambda P, t, x, y: -t * t + x * x < 0,
       rtext="-t^2 + x^2 < 0",
       invert=lambda P, p: (
           math.sqrt(p[2] + math.sqrt(p[2] ** 2 - p[0] ** 2
                                      + p[1] ** 2)),
           math.sqrt(max(p[2] - math.sqrt(p[2] ** 2 - p[0] ** 2
                                          + p[1] ** 2), 0.0)),
           math.atanh(p[1] / p[0])))

_web(41, "Spacelike paraboloidal web", "NonNullAxial", "asymmetric web IV",
     "C.b",
     _gen_const(_diag("a", 0.0, 0.0), w_fn=lambda P: (0.0, 0.0, 1.0)),
     names=("a",), ctext="a > 0", check=_pos("a"), defaults={"a": 1.0})
_MAP41 = (SQRT(-((U - PA) * (V - PA) * (W - PA)) / PA),
          SQRT(-(U * V * W) / PA),
          _e1(U, V, W) * 0.5)
_G41 = ((U - V) * (U - W) / (4 * U * (U - PA)),
        (V - U) * (V - W) / (4 * V * (V - PA)),
        (W - U) * (W - V) / (4 * W * (W - PA)))
_chart(41, 1, *_MAP41, _G41, Chain("w", 0, "a", "v", "u"), 1,
       irreducible=True, offset=(0.0, 0.0, "-a/2"))
_chart(41, 2, *_MAP41, _G41, Chain("w", 0, "v", "u", "a"), 0,
       irreducible=True, offset=(0.0, 0.0, "-a/2"))
_chart(41, 3, *_MAP41, _G41, Chain("w", "v", "u", 0, "a"), 1,
       irreducible=True, offset=(0.0, 0.0, "-a/2"))

_web(42, "Spacelike complex-paraboloidal web", "NonNullAxial",
     "asymmetric web VI", "C.d",
     _gen_const(lambda P: np.array([[0.0, P["b"], 0.0],
                                    [-P["b"], 0.0, 0.0],
                                    [0.0, 0.0, 0.0]]),
                w_fn=lambda P: (0.0, 0.0, 1.0)),
     names=("b",), ctext="b > 0", check=_pos("b"), defaults={"b": 1.0})
_S42 = (SQRT((U ** 2 + PB ** 2) * (V ** 2 + PB ** 2) * (W ** 2 + PB ** 2))
        / PB)
_D42 = _e2(U, V, W) - PB ** 2
_R42 = (PB ** 2 * _e1(U, V, W) - U * V * W) / (2 * PB)
# t^2 + x^2 >= b^2 on the whole chart, so the larger of the two squares is
# always cancellation-free; the smaller coordinate is recovered from the
# exact product t*x divided by the well-conditioned one.
_T2N42 = (_S42 + _D42) * 0.5
_X2N42 = (_S42 - _D42) * 0.5
_XB42 = SQRT(_X2N42) * (_R42 / SQRT(_R42 ** 2))
_T42 = select(_T2N42, _X2N42, SQRT(_T2N42), _R42 / _XB42)
_X42 = select(_T2N42, _X2N42, _R42 / SQRT(_T2N42), _XB42)
_chart(42, 1, _T42, _X42,
       _e1(U, V, W) * 0.5,
       ((U - V) * (U - W) / (4 * (U ** 2 + PB ** 2)),
        (V - U) * (V - W) / (4 * (V ** 2 + PB ** 2)),
        (W - U) * (W - V) / (4 * (W ** 2 + PB ** 2))),
       Chain("w", "v", "u"), 1, irreducible=True)

_web(43, "Spacelike null-paraboloidal web", "NonNullAxial",
     "asymmetric web III", "F.1.c",
     _gen_const(lambda P: _K_NULL, w_fn=lambda P: (0.0, 0.0, 1.0)))
_TP43 = SQRT(U * V * W)
_TM43 = _e2(U, V, W) / _TP43
_G43 = ((U - V) * (U - W) / (4 * U ** 2),
        -((U - V) * (V - W)) / (4 * V ** 2),
        (V - W) * (U - W) / (4 * W ** 2))
_chart(43, 1, (_TP43 + _TM43) * 0.5, (_TP43 - _TM43) * 0.5,
       _e1(U, V, W) * 0.5, _G43, Chain(0, "w", "v", "u"), 1,
       irreducible=True)
_chart(43, 2, (_TP43 + _TM43) * 0.5, (_TP43 - _TM43) * 0.5,
       _e1(U, V, W) * 0.5, _G43, Chain("w", "v", 0, "u"), 1,
       irreducible=True)

_web(44, "Null paraboloidal web I", "NullAxial", "asymmetric web II",
     "E.1.a",
     _gen_const(lambda P: _K_NULL, w_fn=lambda P: (0.5, 0.5, 0.0)))
_XP44 = (U ** 2 + V ** 2 + W ** 2) / 8 - _e2(U, V, W) / 4
_XM44 = _e1(U, V, W)
_G44 = ((U - V) * (U - W) / (4 * U),
        -((U - V) * (V - W)) / (4 * V),
        (V - W) * (U - W) / (4 * W))
_chart(44, 1, (_XP44 - _XM44) * 0.5, (_XP44 + _XM44) * 0.5,
       SQRT(U * V * W), _G44, Chain(0, "w", "v", "u"), 1,
       irreducible=True)
_chart(44, 2, (_XP44 - _XM44) * 0.5, (_XP44 + _XM44) * 0.5,
       SQRT(U * V * W), _G44, Chain("w", "v", 0, "u"), 2,
       irreducible=True)

_web(45, "Null paraboloidal web II", "NullAxial", "asymmetric web I", "G",
     _gen_const(lambda P: _J3, w_fn=lambda P: (0.5, 0.5, 0.0)))
_XP45 = (U - V - W) * (U + V - W) * (U - V + W) / 16
_XM45 = _e1(U, V, W)
_chart(45, 1, (_XP45 - _XM45) * 0.5, (_XP45 + _XM45) * 0.5,
       (U ** 2 + V ** 2 + W ** 2) / 8 - _e2(U, V, W) / 4,
       ((U - V) * (U - W) / 4,
        -((U - V) * (V - W)) / 4,
        (U - W) * (V - W) / 4),
       Chain("w", "v", "u"), 1, irreducible=True)


# ---------------------------------------------------------------- lookup

_WEB_BY_ID = {w.id: w for w in _WEBS}


def list_webs():
    """All 45 web records, ordered by id."""
    return list(_WEBS)


def list_charts():
    """All 88 chart records, ordered by (web id, chart index)."""
    return list(_CHARTS)


def web_by_id(web_id: int) -> WebRecord:
    try:
        return _WEB_BY_ID[web_id]
    except KeyError:
        raise BadParams(f"no web with id {web_id}") from None


def charts_for_web(web_id: int):
    web_by_id(web_id)
    return [c for c in _CHARTS if c.web_id == web_id]
