"""Coordinate transformations for irreducible concircular tensors: the
forward maps from canonical separable coordinates (u, v, w) to
(lightcone-)Cartesian coordinates, the diagonal metric in separable
coordinates, and the eigenvalue-based inverse map.

Conventions.  The canonical operator is A = J_k(0)^T (+) diag(lambda_i)
with Gram eps0*S_k (+) diag(eps_i).  The lightcone pair of a 2-block is
realized as (d_eta, eps0*d_xi) and a 3-block as (d_eta, e_y, d_xi); the
diagonal directions are assigned to e_t (eps_i = -1) and then e_x, e_y in
listed order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import E_T, E_X, E_Y, D_ETA, D_XI
from .errors import (BadParams, RangeViolation, DegenerateTriple,
                     DegenerateSpectrum, ComplexSpectrum)
from .concircular import ConcircularTensor, point_eigenvalues

__all__ = ["CanonicalICTData", "SeparableTriple", "central_forward",
           "axial_forward", "ict_metric", "ict_invert"]

_SQ_TOL = 1e-12


@dataclass(frozen=True)
class SeparableTriple:
    """Strictly ordered separable coordinates u > v > w."""
    u: float
    v: float
    w: float

    def __post_init__(self):
        if not (self.u > self.v > self.w):
            raise DegenerateTriple(
                f"separable coordinates must satisfy u > v > w, "
                f"got ({self.u}, {self.v}, {self.w})")

    def as_tuple(self) -> tuple:
        return (self.u, self.v, self.w)

    def charpoly(self) -> tuple:
        """Coefficients (descending, monic) of (z-u)(z-v)(z-w)."""
        u, v, w = self.u, self.v, self.w
        return (1.0, -(u + v + w), u * v + u * w + v * w, -u * v * w)


@dataclass(frozen=True)
class CanonicalICTData:
    """Structure of an irreducible CT in canonical form."""
    kind: str                      # "Central" | "Axial"
    k: int                         # nilpotent block size (0 = fully diagonal)
    eps0: int                      # sign of the lightcone/diagonal block
    eps: int                       # sign of L
    eigenvalues: tuple = ()        # ((lambda_i, eps_i), ...) diagonal part
    complex_pair: tuple | None = None   # (a, b) for a complex pair

    def __post_init__(self):
        if self.kind not in ("Central", "Axial"):
            raise BadParams("kind must be Central or Axial")
        n = self.k + len(self.eigenvalues) + (2 if self.complex_pair else 0)
        if n != 3:
            raise BadParams("block sizes must sum to 3")
        if self.kind == "Axial" and self.k < 1:
            raise BadParams("axial data requires k >= 1")

    def b_roots(self) -> list:
        """Roots of B(z) entering the metric denominators: for a central
        CT the full characteristic polynomial of A (including the z^k
        factor of the nilpotent block), for an axial CT the complement
        eigenvalues only."""
        roots: list = []
        if self.kind == "Central":
            roots += [0.0] * self.k
        roots += [lam for lam, _ in self.eigenvalues]
        if self.complex_pair:
            a, b = self.complex_pair
            roots += [complex(a, b), complex(a, -b)]
        return roots


def _poly_eval(coeffs, z):
    out = 0.0
    for c in coeffs:
        out = out * z + c
    return out


def _sqrt_checked(sq: float, what: str) -> float:
    if sq < -_SQ_TOL:
        raise RangeViolation(f"{what} = {sq} is negative")
    return math.sqrt(max(sq, 0.0))


def _check_collisions(d: CanonicalICTData, s: SeparableTriple):
    for ui in s.as_tuple():
        for lam, _ in d.eigenvalues:
            if abs(ui - lam) < _SQ_TOL:
                raise DegenerateTriple(
                    f"coordinate {ui} collides with eigenvalue {lam}")


def _series_quotient(p: tuple, b: tuple, order: int) -> list:
    """Taylor coefficients of p(z)/b(z) at z = 0 up to the given order;
    p and b are descending coefficient tuples, b(0) != 0."""
    pa = list(reversed(p))                      # ascending
    ba = list(reversed(b))
    if abs(ba[0]) < _SQ_TOL:
        raise DegenerateTriple("complement polynomial vanishes at 0")
    t = []
    for l in range(order):
        acc = pa[l] if l < len(pa) else 0.0
        for j in range(1, l + 1):
            if j < len(ba):
                acc -= t[l - j] * ba[j]
        t.append(acc / ba[0])
    return t


def _diag_axes(d: CanonicalICTData) -> list:
    """Ambient axes for the diagonal directions, in listed order."""
    if d.k == 0:
        free_space = [E_X, E_Y]
    elif d.k == 1:
        free_space = [E_X, E_Y] if d.eps0 == -1 else [E_X]
    else:
        free_space = [E_Y]
    axes = []
    for _, eps_i in d.eigenvalues:
        axes.append(E_T if eps_i == -1 else free_space.pop(0))
    return axes


def _assemble_block(d: CanonicalICTData, p_coeffs: tuple,
                    bperp: tuple) -> tuple:
    """Lightcone coordinates (x^1 .. x^k) of the nilpotent block from the
    bilinear sums of the central equations."""
    k = d.k
    t = _series_quotient(p_coeffs, bperp, k)
    sums = [-d.eps0 * t[l] for l in range(k)]
    x1 = _sqrt_checked(sums[0], "(x^1)^2")
    if x1 < 1e-9:
        raise DegenerateTriple("lightcone head coordinate vanishes; "
                               "point is outside the open chart domain")
    xs = [x1]
    if k >= 2:
        xs.append(sums[1] / (2.0 * x1))         # 2 x1 x2 = sums[1]
    if k >= 3:
        xs.append((sums[2] - xs[1] ** 2) / (2.0 * x1))
    return tuple(xs)


def central_forward(d: CanonicalICTData, s: SeparableTriple) -> np.ndarray:
    """Point (t, x, y) with separable coordinates s for a central ICT."""
    if d.kind != "Central":
        raise BadParams("central_forward requires Central data")
    if d.complex_pair is not None:
        raise BadParams("complex-eigenvalue forward maps are provided by "
                        "the catalog closed forms")
    _check_collisions(d, s)
    p = s.charpoly()
    point = np.zeros(3)
    # diagonal directions: (x^i)^2 = -eps_i p(lambda_i) / B'(lambda_i)
    lams = [lam for lam, _ in d.eigenvalues]
    axes = _diag_axes(d)
    for i, (lam, eps_i) in enumerate(d.eigenvalues):
        # B(z) = z^k prod_j (z - lambda_j); at the simple root lambda_i
        # the derivative is lambda_i^k prod_{j != i}(lambda_i - lambda_j)
        prod_rest = float(np.prod([lam - mu for j, mu in enumerate(lams)
                                   if j != i]))
        bprime = lam ** d.k * prod_rest
        sq = -eps_i * _poly_eval(p, lam) / bprime
        point = point + _sqrt_checked(sq, f"(x_{lam})^2") * axes[i]
    if d.k >= 2:
        bperp = np.poly(lams) if lams else np.array([1.0])
        xs = _assemble_block(d, p, tuple(bperp))
        e2 = d.eps0 * D_XI
        if d.k == 2:
            point = point + xs[0] * D_ETA + xs[1] * e2
        else:
            point = point + xs[0] * D_ETA + xs[1] * E_Y + xs[2] * D_XI
    elif d.k == 1:
        raise BadParams("a central CT has no 1-dimensional nilpotent block")
    return point


def axial_forward(d: CanonicalICTData, s: SeparableTriple) -> np.ndarray:
    """Point (t, x, y) with separable coordinates s for an axial ICT."""
    if d.kind != "Axial":
        raise BadParams("axial_forward requires Axial data")
    if d.complex_pair is not None:
        raise BadParams("complex-eigenvalue forward maps are provided by "
                        "the catalog closed forms")
    _check_collisions(d, s)
    u, v, w = s.as_tuple()
    e1_sum = u + v + w
    e2_sum = u * v + u * w + v * w
    e3_sum = u * v * w
    p = s.charpoly()
    eps0 = d.eps0
    lams = [lam for lam, _ in d.eigenvalues]
    point = np.zeros(3)
    if d.k == 1:
        # p_d(z) = z - 2 eps0 x^1; match the z^2 coefficient of p
        x1 = eps0 * (e1_sum - sum(lams)) / 2.0
        axis = E_T if eps0 == -1 else E_Y
        point = point + x1 * axis
        # p_c = B + eps0 (p - p_d B), complement coords central-style
        axes = _diag_axes(d)
        for i, (lam, eps_i) in enumerate(d.eigenvalues):
            pd_lam = lam - 2.0 * eps0 * x1
            b_lam = 0.0                          # B(lam) = 0
            pc_lam = b_lam + eps0 * (_poly_eval(p, lam) - pd_lam * b_lam)
            bprime = float(np.prod([lam - mu for j, mu in enumerate(lams)
                                    if j != i]))
            sq = -eps_i * pc_lam / bprime
            point = point + _sqrt_checked(sq, f"(x_{lam})^2") * axes[i]
    elif d.k == 2:
        lam3, eps3 = d.eigenvalues[0]
        x2 = eps0 * (e1_sum - lam3) / 2.0
        x1 = eps0 * (x2 * x2 + 2.0 * eps0 * lam3 * x2 - e2_sum) / 2.0
        sq3 = -eps3 * eps0 * _poly_eval(p, lam3)
        x3 = _sqrt_checked(sq3, "(x^3)^2")
        point = x1 * D_ETA + x2 * (eps0 * D_XI) + x3 * E_Y
    else:
        x3 = e1_sum / 2.0
        x2 = (x3 * x3 - e2_sum) / 2.0
        x1 = x2 * x3 + e3_sum / 2.0
        point = x1 * D_ETA + x2 * E_Y + x3 * D_XI
    return point


def ict_metric(d: CanonicalICTData, s: SeparableTriple) -> tuple:
    """Diagonal metric components (g_uu, g_vv, g_ww) in the separable
    coordinates: g_ii = (eps/4) prod_{j!=i}(u^i - u^j) / prod_j(u^i - l_j)."""
    us = s.as_tuple()
    roots = d.b_roots()
    out = []
    for i, ui in enumerate(us):
        num = 1.0
        for j, uj in enumerate(us):
            if j != i:
                num *= ui - uj
        den = 1.0 + 0.0j
        for lam in roots:
            den *= ui - lam
        den = den.real if isinstance(den, complex) else den
        if abs(den) < _SQ_TOL:
            raise DegenerateTriple(f"coordinate {ui} collides with a root "
                                   "of B(z)")
        out.append(d.eps * num / (4.0 * den))
    return tuple(out)


def ict_invert(L: ConcircularTensor, p, offset=(0.0, 0.0, 0.0),
               tol: float = 1e-9) -> SeparableTriple:
    """Separable coordinates of the point p: the eigenvalues of L at
    (p + offset), sorted descending."""
    q = np.asarray(p, dtype=float) + np.asarray(offset, dtype=float)
    ev = point_eigenvalues(L, q)
    if isinstance(ev, ComplexSpectrum):
        raise ev
    u, v, w = ev
    scale = 1.0 + max(abs(u), abs(v), abs(w))
    if u - v < tol * scale or v - w < tol * scale:
        raise DegenerateSpectrum(f"eigenvalues {ev} are not simple")
    return SeparableTriple(u, v, w)
