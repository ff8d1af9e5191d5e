"""Killing tensors from concircular tensors: exact polynomial components
(dense trivariate, total degree <= 4), the Bertrand-Darboux tensor
K1 = tr(L) g - L, the two-step recursion K_m = (1/m) tr(K_{m-1} L) g
- K_{m-1} L, and numerical certificates for the Killing equation and
chart diagonality."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import METRIC, dual_vars
from .errors import BadParams

__all__ = ["Poly3", "PolySymTensor", "KSAlgebra", "poly_metric", "ct_poly",
           "kbdt", "ks_algebra", "killing_residual", "diagonality_residual"]

MAX_DEG = 4

# monomial exponents (i, j, k) with i + j + k <= MAX_DEG, graded lex order
MONOMIALS = [(i, j, k)
             for d in range(MAX_DEG + 1)
             for i in range(d, -1, -1)
             for j in range(d - i, -1, -1)
             for k in (d - i - j,)]
N_MONO = len(MONOMIALS)                     # 35
_INDEX = {m: n for n, m in enumerate(MONOMIALS)}

# product table: index of monomial sums (or -1 when out of degree range)
_PROD = np.full((N_MONO, N_MONO), -1, dtype=int)
for _a, (ia, ja, ka) in enumerate(MONOMIALS):
    for _b, (ib, jb, kb) in enumerate(MONOMIALS):
        key = (ia + ib, ja + jb, ka + kb)
        if sum(key) <= MAX_DEG:
            _PROD[_a, _b] = _INDEX[key]


class Poly3:
    """Real polynomial in (t, x, y) of total degree <= 4, dense storage."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.coeffs = np.zeros(N_MONO)
        else:
            c = np.asarray(coeffs, dtype=float)
            if c.shape != (N_MONO,):
                raise BadParams(f"expected {N_MONO} coefficients")
            self.coeffs = c.copy()

    # ---- constructors
    @staticmethod
    def constant(c: float) -> "Poly3":
        p = Poly3()
        p.coeffs[0] = c
        return p

    @staticmethod
    def monomial(i: int, j: int, k: int, c: float = 1.0) -> "Poly3":
        p = Poly3()
        p.coeffs[_INDEX[(i, j, k)]] = c
        return p

    @staticmethod
    def variable(axis: int) -> "Poly3":
        e = [0, 0, 0]
        e[axis] = 1
        return Poly3.monomial(*e)

    # ---- ring operations
    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = Poly3.constant(float(other))
        return Poly3(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Poly3(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = Poly3.constant(float(other))
        return Poly3(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Poly3(self.coeffs * float(other))
        out = np.zeros(N_MONO)
        nz_a = np.nonzero(self.coeffs)[0]
        nz_b = np.nonzero(other.coeffs)[0]
        for a in nz_a:
            ca = self.coeffs[a]
            for b in nz_b:
                t = _PROD[a, b]
                if t < 0:
                    raise BadParams("polynomial product exceeds degree "
                                    f"{MAX_DEG}")
                out[t] += ca * other.coeffs[b]
        return Poly3(out)

    __rmul__ = __mul__

    # ---- calculus and evaluation
    def diff(self, axis: int) -> "Poly3":
        out = np.zeros(N_MONO)
        for n, exps in enumerate(MONOMIALS):
            c = self.coeffs[n]
            if c == 0.0 or exps[axis] == 0:
                continue
            e = list(exps)
            e[axis] -= 1
            out[_INDEX[tuple(e)]] += c * exps[axis]
        return Poly3(out)

    def __call__(self, t, x, y):
        # powers built by repeated multiplication so that dual numbers and
        # similar ring elements work too
        pows = []
        for v in (t, x, y):
            row = [1.0, v]
            for _ in range(MAX_DEG - 1):
                row.append(row[-1] * v)
            pows.append(row)
        total = 0.0
        for n, (i, j, k) in enumerate(MONOMIALS):
            c = self.coeffs[n]
            if c != 0.0:
                total = total + c * pows[0][i] * pows[1][j] * pows[2][k]
        return total

    @property
    def degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        if len(nz) == 0:
            return 0
        return max(sum(MONOMIALS[n]) for n in nz)

    def __repr__(self):
        terms = []
        for n, (i, j, k) in enumerate(MONOMIALS):
            c = self.coeffs[n]
            if c != 0.0:
                mono = "".join(s * e for s, e in zip("txy", (i, j, k)))
                terms.append(f"{c:g}{mono}" if mono else f"{c:g}")
        return " + ".join(terms) if terms else "0"


def _poly_zero_mat():
    return np.array([[Poly3() for _ in range(3)] for _ in range(3)],
                    dtype=object)


def _from_const(M: np.ndarray) -> np.ndarray:
    out = _poly_zero_mat()
    for i in range(3):
        for j in range(3):
            out[i, j] = Poly3.constant(float(M[i, j]))
    return out


def _poly_matmul(A, B) -> np.ndarray:
    out = _poly_zero_mat()
    for i in range(3):
        for j in range(3):
            s = Poly3()
            for k in range(3):
                s = s + A[i, k] * B[k, j]
            out[i, j] = s
    return out


@dataclass(frozen=True)
class PolySymTensor:
    """Symmetric covariant 2-tensor with polynomial components."""
    comps: np.ndarray         # 3x3 object array of Poly3

    def __post_init__(self):
        for i in range(3):
            for j in range(i):
                if np.max(np.abs(self.comps[i, j].coeffs
                                 - self.comps[j, i].coeffs)) > 1e-12:
                    raise BadParams("components are not symmetric")
            for j in range(3):
                if self.comps[i, j].degree > MAX_DEG:
                    raise BadParams("degree bound exceeded")

    def value(self, p) -> np.ndarray:
        t, x, y = (float(p[0]), float(p[1]), float(p[2]))
        return np.array([[self.comps[i, j](t, x, y) for j in range(3)]
                         for i in range(3)])

    def mixed(self) -> np.ndarray:
        """Index-raised polynomial components g^{ip} K_{pj}."""
        return _poly_matmul(_from_const(np.linalg.inv(METRIC)), self.comps)

    def trace(self) -> Poly3:
        M = self.mixed()
        return M[0, 0] + M[1, 1] + M[2, 2]

    def __add__(self, other):
        return PolySymTensor(self.comps + other.comps)

    def __sub__(self, other):
        return PolySymTensor(self.comps - other.comps)


@dataclass(frozen=True)
class KSAlgebra:
    """Ordered generating triple (g, K1, K2) of the Killing-tensor space."""
    g: PolySymTensor
    K1: PolySymTensor
    K2: PolySymTensor

    def coefficient_matrix(self) -> np.ndarray:
        rows = []
        for K in (self.g, self.K1, self.K2):
            row = np.concatenate([K.comps[i, j].coeffs
                                  for i in range(3) for j in range(i, 3)])
            rows.append(row)
        return np.array(rows)

    def is_independent(self, tol: float = 1e-8) -> bool:
        M = self.coefficient_matrix()
        scales = np.maximum(np.max(np.abs(M), axis=1), 1e-300)
        sv = np.linalg.svd(M / scales[:, None], compute_uv=False)
        return bool(sv[-1] > tol)


def poly_metric() -> PolySymTensor:
    return PolySymTensor(_from_const(METRIC))


def ct_poly(L) -> PolySymTensor:
    """Covariant polynomial components of the concircular tensor
    A + 2 w (.) r + m r (.) r."""
    t, x, y = Poly3.variable(0), Poly3.variable(1), Poly3.variable(2)
    rlow = [-1.0 * t, x, y]                       # lowered position covector
    wlow = METRIC @ L.w
    Acov = METRIC @ L.A
    Acov = 0.5 * (Acov + Acov.T)
    out = _poly_zero_mat()
    for i in range(3):
        for j in range(3):
            out[i, j] = (Poly3.constant(Acov[i, j])
                         + wlow[i] * rlow[j] + wlow[j] * rlow[i]
                         + L.m * rlow[i] * rlow[j])
    return PolySymTensor(out)


def kbdt(L) -> PolySymTensor:
    """The Bertrand-Darboux Killing tensor K1 = tr(L) g - L (covariant)."""
    Lp = ct_poly(L)
    tr = Lp.trace()
    out = _poly_zero_mat()
    for i in range(3):
        for j in range(3):
            out[i, j] = tr * METRIC[i, j] - Lp.comps[i, j]
    return PolySymTensor(out)


def ks_algebra(L) -> KSAlgebra:
    """The triple (g, K1, K2) with K_m = (1/m) tr(K_{m-1} L) g - K_{m-1} L."""
    Lp = ct_poly(L)
    Lmix = _poly_matmul(_from_const(np.linalg.inv(METRIC)), Lp.comps)
    K1 = kbdt(L)
    # K1 L as an endomorphism, then its covariant form and trace
    M = _poly_matmul(_poly_matmul(_from_const(np.linalg.inv(METRIC)),
                                  K1.comps), Lmix)
    trM = M[0, 0] + M[1, 1] + M[2, 2]
    Mcov = _poly_matmul(_from_const(METRIC), M)
    out = _poly_zero_mat()
    for i in range(3):
        for j in range(3):
            sym = 0.5 * (Mcov[i, j] + Mcov[j, i])
            out[i, j] = 0.5 * trM * METRIC[i, j] - sym
    return KSAlgebra(poly_metric(), K1, PolySymTensor(out))


def killing_residual(K: PolySymTensor, p) -> float:
    """Max norm of d_i K_jk + d_j K_ki + d_k K_ij at p (flat connection,
    exact polynomial derivatives)."""
    t, x, y = float(p[0]), float(p[1]), float(p[2])
    dK = [[[K.comps[j, k].diff(i)(t, x, y) for k in range(3)]
           for j in range(3)] for i in range(3)]
    worst = 0.0
    for i in range(3):
        for j in range(3):
            for k in range(3):
                r = dK[i][j][k] + dK[j][k][i] + dK[k][i][j]
                worst = max(worst, abs(r))
    return worst


def diagonality_residual(K: PolySymTensor, chart, params, s) -> float:
    """Largest off-diagonal component of the chart pullback of K at the
    separable triple s (Jacobian via dual numbers), relative to the
    cancellation scale |J|^T |K| |J| of the contraction that produced it.
    An off-diagonal entry that vanishes only in exact arithmetic leaves a
    rounding remainder proportional to that scale, so the quotient stays
    near machine epsilon for a diagonal pullback and reaches O(1) for a
    genuinely non-diagonal one.  Charts stated relative to a translated
    generator are shifted back before K is evaluated."""
    from .catalog.records import chart_map, _web_for
    u, v, w = dual_vars(*s.as_tuple())
    amb = chart_map(chart, params, (u, v, w))
    web = _web_for(chart)
    shift = chart.offset(web.resolve_params(params))
    point = np.array([c.val for c in amb]) + np.asarray(shift, dtype=float)
    J = np.array([c.grad for c in amb])          # J[p, i] = d psi^p / d u^i
    Kval = K.value(point)
    G = J.T @ Kval @ J
    B = np.abs(J).T @ np.abs(Kval) @ np.abs(J)
    worst = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            worst = max(worst, abs(G[i, j]) / max(B[i, j], 1e-300))
    return float(worst)
