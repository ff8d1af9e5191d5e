"""Math functions generic over float and DualScalar arguments.

These back the formula AST evaluation: every function accepts a plain float
or a :class:`~minkwebs.core.DualScalar` and applies the chain rule in the
latter case.  The Jacobi-family functions take the elliptic modulus as a
plain float (chart parameters are constants, never differentiated).
"""
from __future__ import annotations

import math

from .core import DualScalar
from .elliptic import JACOBI_NAMES, jacobi_elliptic

__all__ = [
    "sin", "cos", "tan", "sec", "csc", "cot",
    "sinh", "cosh", "tanh", "sech", "csch", "coth",
    "exp", "log", "sqrt", "jacobi", "FUNCTIONS",
]


def _lift(x, f, df):
    """Apply f with derivative df to a float or DualScalar."""
    if isinstance(x, DualScalar):
        v = x.val
        return DualScalar(f(v), df(v) * x.grad)
    return f(float(x))


def sin(x):
    return _lift(x, math.sin, math.cos)


def cos(x):
    return _lift(x, math.cos, lambda v: -math.sin(v))


def tan(x):
    return _lift(x, math.tan, lambda v: 1.0 / math.cos(v) ** 2)


def sec(x):
    return 1.0 / cos(x)


def csc(x):
    return 1.0 / sin(x)


def cot(x):
    return cos(x) / sin(x)


def sinh(x):
    return _lift(x, math.sinh, math.cosh)


def cosh(x):
    return _lift(x, math.cosh, math.sinh)


def tanh(x):
    return _lift(x, math.tanh, lambda v: 1.0 / math.cosh(v) ** 2)


def sech(x):
    return 1.0 / cosh(x)


def csch(x):
    return 1.0 / sinh(x)


def coth(x):
    return cosh(x) / sinh(x)


def exp(x):
    return _lift(x, math.exp, math.exp)


def log(x):
    return _lift(x, math.log, lambda v: 1.0 / v)


def sqrt(x):
    return _lift(x, math.sqrt, lambda v: 0.5 / math.sqrt(v))


def _sn_cn_dn(u, a: float):
    """Dual-aware (sn, cn, dn); a is a plain float modulus."""
    if isinstance(u, DualScalar):
        s, c, d = jacobi_elliptic(u.val, a)
        return (DualScalar(s, c * d * u.grad),
                DualScalar(c, -s * d * u.grad),
                DualScalar(d, -a * a * s * c * u.grad))
    return jacobi_elliptic(float(u), a)


def jacobi(name: str, u, a: float):
    """Any of the twelve Jacobi functions, dual-aware in u."""
    if name not in JACOBI_NAMES:
        raise ValueError(f"unknown Jacobi function {name!r}")
    s, c, d = _sn_cn_dn(u, a)
    table = {"s": s, "c": c, "d": d, "n": 1.0}
    num, den = table[name[0]], table[name[1]]
    if name[1] == "n":
        return num
    return num / den


#: one-argument functions available to formula ASTs
FUNCTIONS = {
    "sin": sin, "cos": cos, "tan": tan, "sec": sec, "csc": csc, "cot": cot,
    "sinh": sinh, "cosh": cosh, "tanh": tanh,
    "sech": sech, "csch": csch, "coth": coth,
    "exp": exp, "log": log, "sqrt": sqrt,
}
