"""Jacobi elliptic functions and the complete elliptic integral K.

Everything here works with the *modulus* a (not the parameter m = a^2), the
convention used by the chart formulas.  sn, cn are evaluated by the
descending-Landen / arithmetic-geometric-mean recursion (A&S 16.4); dn is
recovered from the identity dn^2 = 1 - a^2 sn^2, which is safe because
dn >= sqrt(1 - a^2) > 0 on the real line for 0 <= a < 1.
"""
from __future__ import annotations

import math

from .errors import ModulusOutOfRange, PoleEncountered

__all__ = ["elliptic_K", "jacobi_elliptic", "jacobi_quotient", "JACOBI_NAMES"]

_AGM_TOL = 1e-15
_MAX_ITER = 64


def _check_modulus(a: float) -> float:
    a = float(a)
    if not (0.0 <= a < 1.0):
        raise ModulusOutOfRange(f"elliptic modulus must lie in [0, 1), got {a}")
    return a


def elliptic_K(a: float) -> float:
    """Complete elliptic integral of the first kind, K(a) = pi/(2 agm(1, a'))."""
    a = _check_modulus(a)
    x, y = 1.0, math.sqrt(1.0 - a * a)
    for _ in range(_MAX_ITER):
        if abs(x - y) <= _AGM_TOL * x:
            break
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    return math.pi / (2.0 * x)


def jacobi_elliptic(u: float, a: float) -> tuple[float, float, float]:
    """(sn, cn, dn) of real argument u with modulus a.

    a = 0 degenerates to circular functions; a = 1 is accepted as the
    hyperbolic limit (sn = tanh, cn = dn = sech).
    """
    u = float(u)
    a = float(a)
    if a == 1.0:
        t = math.tanh(u)
        s = 1.0 / math.cosh(u)
        return t, s, s
    a = _check_modulus(a)
    if a == 0.0:
        return math.sin(u), math.cos(u), 1.0

    # Descending AGM scale (A&S 16.4.1-16.4.3).
    aa = [1.0]
    cc = [a]
    b = math.sqrt(1.0 - a * a)
    n = 0
    while cc[n] > _AGM_TOL * aa[n] and n < _MAX_ITER:
        aa.append(0.5 * (aa[n] + b))
        cc.append(0.5 * (aa[n] - b))
        b = math.sqrt(aa[n] * b)
        n += 1
    phi = (2.0 ** n) * aa[n] * u
    phi_prev = phi
    for k in range(n, 0, -1):
        phi_prev = phi
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, cc[k] / aa[k] * math.sin(phi)))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(max(0.0, 1.0 - a * a * sn * sn))
    # phi_prev is kept for clarity of the classical recursion; dn via the
    # identity is numerically better than cos(phi)/cos(phi_prev - phi).
    _ = phi_prev
    return sn, cn, dn


#: the twelve Glaisher functions, keyed by name
JACOBI_NAMES = (
    "sn", "cn", "dn", "ns", "nc", "nd",
    "sc", "cs", "sd", "ds", "cd", "dc",
)

_POLE_TOL = 1e-14


def _quot(num: float, den: float, name: str, u: float) -> float:
    if abs(den) < _POLE_TOL:
        raise PoleEncountered(f"{name} has a pole at u={u}")
    return num / den


def jacobi_quotient(name: str, u: float, a: float) -> float:
    """Any of the twelve Jacobi functions by Glaisher name."""
    sn, cn, dn = jacobi_elliptic(u, a)
    one = 1.0
    table = {"s": sn, "c": cn, "d": dn, "n": one}
    if name not in JACOBI_NAMES:
        raise ValueError(f"unknown Jacobi function {name!r}")
    num, den = table[name[0]], table[name[1]]
    if name[1] == "n":
        return num
    return _quot(num, den, name, u)
