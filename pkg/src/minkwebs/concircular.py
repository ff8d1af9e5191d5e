"""Concircular tensors on 3D Minkowski space: evaluation, canonical
classification, reducibility, and characteristic polynomials.

A concircular tensor (CT) is the field L(r) = A + 2 w (.) r + m r (.) r
with A a self-adjoint operator, w a vector and m a scalar.  Up to a change
of origin, an isometry, a nonzero scaling and a multiple of the metric
("geometric equivalence") every CT falls into exactly one of four classes:
Cartesian, Central, non-null axial (unit w, sign eps), or null axial
(null w, skew-normal block of size k in {2, 3}).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (METRIC, E_T, E_X, E_Y, D_ETA, D_XI, vec, dot, lower,
                   raise_index, sym_outer, is_self_adjoint)
from .errors import (NotSelfAdjoint, NotPseudoOrthogonal, DegenerateAmbiguity,
                     ComplexSpectrum, BadParams)
from .jordan import charpoly_coeffs, solve_cubic, CLUSTER_RTOL, _nullspace

__all__ = [
    "ConcircularTensor", "CTClass", "CanonicalCT", "CharPolySet",
    "evaluate_ct", "classify_ct", "is_reducible", "char_polys",
    "point_eigenvalues", "ct_translate", "ct_isometry", "ct_scale",
    "ct_metric_shift", "ct_from_dict", "ct_to_dict",
]


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class ConcircularTensor:
    """The triple (A, w, m) defining L = A + 2 w (.) r + m r (.) r."""
    A: np.ndarray
    w: np.ndarray
    m: float

    def __post_init__(self):
        object.__setattr__(self, "A", np.array(self.A, dtype=float))
        object.__setattr__(self, "w", np.array(self.w, dtype=float))
        object.__setattr__(self, "m", float(self.m))
        if self.A.shape != (3, 3) or self.w.shape != (3,):
            raise BadParams("A must be 3x3 and w a 3-vector")
        if not is_self_adjoint(self.A):
            raise NotSelfAdjoint("A is not self-adjoint w.r.t. the metric")

    @property
    def is_constant(self) -> bool:
        s = 1.0 + float(np.max(np.abs(self.A)))
        return (float(np.max(np.abs(self.w))) <= CLUSTER_RTOL * s
                and abs(self.m) <= CLUSTER_RTOL * s)


@dataclass(frozen=True)
class CTClass:
    """One of the four canonical classes."""
    tag: str                 # Cartesian | Central | NonNullAxial | NullAxial
    eps: int | None = None   # sign of L (NonNullAxial, NullAxial; 1 for Central)
    k: int | None = None     # skew-normal block size (NullAxial only)

    def __post_init__(self):
        if self.tag not in ("Cartesian", "Central", "NonNullAxial", "NullAxial"):
            raise BadParams(f"unknown class tag {self.tag!r}")
        if self.tag == "NonNullAxial" and self.eps not in (-1, 1):
            raise BadParams("NonNullAxial requires eps in {-1, +1}")
        if self.tag == "NullAxial":
            if self.k not in (2, 3):
                raise BadParams("NullAxial requires k in {2, 3}")
            if self.k == 3 and self.eps != 1:
                raise BadParams("NullAxial with k=3 forces eps=+1")
            if self.k == 2 and self.eps not in (-1, 1):
                raise BadParams("NullAxial with k=2 requires eps in {-1, +1}")


@dataclass(frozen=True)
class CanonicalCT:
    """Classification result and the geometric equivalence that realizes it.

    Applying, in order, a translation by origin_shift, the pushforward by
    frame, a scaling by scale and the addition of metric_shift times the
    identity to the original tensor reproduces (canonical_A, canonical_w)
    with canonical m equal to 1 (Central) or 0 (otherwise).
    """
    ct_class: CTClass
    canonical_A: np.ndarray
    canonical_w: np.ndarray
    origin_shift: np.ndarray
    scale: float
    metric_shift: float
    frame: np.ndarray
    trivial: bool = False

    @property
    def canonical_m(self) -> float:
        return 1.0 if self.ct_class.tag == "Central" else 0.0

    def canonical_tensor(self) -> ConcircularTensor:
        return ConcircularTensor(self.canonical_A, self.canonical_w,
                                 self.canonical_m)

    def apply_to(self, L: ConcircularTensor) -> ConcircularTensor:
        """Run the recorded equivalence pipeline on L."""
        out = ct_translate(L, self.origin_shift)
        out = ct_isometry(out, self.frame)
        out = ct_scale(out, self.scale)
        return ct_metric_shift(out, self.metric_shift)


@dataclass(frozen=True)
class CharPolySet:
    """B(z) = det(zI - A_c) on the complement of D = span{w, Aw, A^2 w},
    and p(z) = det(zI - L_p) at a point, both monic, descending coeffs."""
    B: tuple
    p_at_point: tuple
    D_dim: int


# ------------------------------------------------------------ evaluation

def evaluate_ct(L: ConcircularTensor, p) -> np.ndarray:
    """Mixed-index operator of L at the point p."""
    p = np.asarray(p, dtype=float)
    bil = 2.0 * sym_outer(L.w, p) + L.m * sym_outer(p, p)
    return L.A + raise_index(bil)


# ------------------------------------------------------- transformations

def _resym(A: np.ndarray) -> np.ndarray:
    """Project onto the exactly self-adjoint part (removes roundoff noise
    introduced by conjugation with ill-conditioned frames)."""
    S = lower(A)
    return raise_index(0.5 * (S + S.T))


def ct_translate(L: ConcircularTensor, d) -> ConcircularTensor:
    """Change of origin r -> r + d."""
    d = np.asarray(d, dtype=float)
    A = L.A + raise_index(2.0 * sym_outer(L.w, d) + L.m * sym_outer(d, d))
    return ConcircularTensor(_resym(A), L.w + L.m * d, L.m)


def ct_isometry(L: ConcircularTensor, Q, tol: float = 1e-9) -> ConcircularTensor:
    """Pushforward by a (pseudo-orthogonal) linear isometry Q."""
    Q = np.asarray(Q, dtype=float)
    qs = float(np.max(np.abs(Q)))
    if np.max(np.abs(Q.T @ METRIC @ Q - METRIC)) > tol * qs * qs:
        raise NotPseudoOrthogonal("Q does not preserve the metric")
    Qi = np.linalg.inv(Q)
    return ConcircularTensor(_resym(Q @ L.A @ Qi), Q @ L.w, L.m)


def ct_scale(L: ConcircularTensor, a: float) -> ConcircularTensor:
    if a == 0.0:
        raise BadParams("scale must be nonzero")
    return ConcircularTensor(a * L.A, a * L.w, a * L.m)


def ct_metric_shift(L: ConcircularTensor, b: float) -> ConcircularTensor:
    return ConcircularTensor(L.A + b * np.eye(3), L.w, L.m)


# --------------------------------------------------------- classification

def _complete_nonnull_frame(v: np.ndarray, eps: int) -> np.ndarray:
    """Isometry mapping the unit vector v (sign eps) onto e_t (eps = -1)
    or e_y (eps = +1)."""
    if eps == -1:
        seeds = [E_X, E_Y]
        cols = [v]
        for e in seeds:
            u = e.copy()
            for c in cols:
                u = u - (dot(u, c) / dot(c, c)) * c
            cols.append(u / math.sqrt(dot(u, u)))
        B = np.column_stack(cols)              # (timelike, space, space)
    else:
        ft = E_T - dot(E_T, v) * v             # timelike, orthogonal to v
        ft = ft / math.sqrt(-dot(ft, ft))
        fs = _minkowski_complement([v, ft])
        B = np.column_stack([ft, fs, v])       # (timelike, space, v -> e_y)
    return np.linalg.inv(B)


def _minkowski_complement(vectors) -> np.ndarray:
    M = np.array([METRIC @ c for c in vectors])
    ns = _nullspace(M)
    u = ns[:, 0]
    return u / math.sqrt(abs(dot(u, u)))


def _classify_central(L: ConcircularTensor) -> CanonicalCT:
    d = -L.w / L.m
    a = 1.0 / L.m
    can = ct_scale(ct_translate(L, d), a)
    return CanonicalCT(CTClass("Central", eps=1), can.A, np.zeros(3),
                       d, a, 0.0, np.eye(3))


def _classify_nonnull_axial(L: ConcircularTensor) -> CanonicalCT:
    ww = dot(L.w, L.w)
    eps = 1 if ww > 0 else -1
    a = 1.0 / math.sqrt(abs(ww))
    wh = a * L.w                                  # unit vector, sign eps
    Awh = L.A @ wh
    alpha = eps * dot(Awh, wh)                    # component of A wh along wh
    d = -eps * a * (Awh - alpha * wh)             # kills the orthogonal part
    b = -a * alpha                                # kills the parallel part
    Q = _complete_nonnull_frame(wh, eps)
    can = ct_metric_shift(ct_scale(ct_isometry(ct_translate(L, d), Q), a), b)
    axis = E_T if eps == -1 else E_Y
    A_can = can.A.copy()
    A_can[:, np.argmax(np.abs(axis))] = 0.0       # A_can axis = 0 exactly
    A_can[np.argmax(np.abs(axis)), :] = 0.0
    if np.max(np.abs(can.A - A_can)) > 1e-8 * (1.0 + np.max(np.abs(can.A))):
        raise DegenerateAmbiguity("non-null axial normalization failed")
    return CanonicalCT(CTClass("NonNullAxial", eps=eps), A_can, axis,
                       d, a, b, Q)


def _classify_null_axial(L: ConcircularTensor, tol: float) -> CanonicalCT:
    w = L.w
    wt, wx, wy = w
    # adapted lightcone frame (n, s, nbar): <n,nbar> = 1, <s,s> = 1
    n = w
    s = np.array([0.0, -wy, wx]) / math.hypot(wx, wy)
    nbar = np.array([-wt, wx, wy]) / (2.0 * wt * wt)
    P = np.column_stack([n, s, nbar])
    M = np.linalg.solve(P, L.A @ P)
    sA = 1.0 + float(np.max(np.abs(L.A))) + float(np.max(np.abs(w)))
    mu = M[2, 0]                                  # <w, Aw> invariant
    q2 = M[1, 0]
    if abs(mu) > tol * sA:
        k, eps = 2, (1 if mu > 0 else -1)
        # null rotation about n kills the s-component of A n
        t = -q2 / mu
        R = np.array([[1.0, t, -0.5 * t * t],
                      [0.0, 1.0, -t],
                      [0.0, 0.0, 1.0]])
        P = P @ R
        M = np.linalg.solve(P, L.A @ P)
        a = abs(mu) ** (-1.0 / 3.0)
    elif abs(q2) > tol * sA:
        k, eps = 3, 1
        if q2 < 0:                                # reflect s to make q2 > 0
            P[:, 1] = -P[:, 1]
            M = np.linalg.solve(P, L.A @ P)
        a = M[1, 0] ** (-0.5)
    else:
        raise DegenerateAmbiguity(
            "null w with <w,Aw> = 0 and <Aw,Aw> = 0: not an orthogonal CT")
    # translation and metric shift zeroing the remaining entries
    b = -M[1, 1]
    p_frame = np.array([-M[0, 2] / 2.0, -M[0, 1], M[1, 1] - M[0, 0]])
    d = P @ p_frame
    # isometry: adapted frame, rescaled to absorb the w-normalization,
    # mapped onto the standard lightcone frame (d_eta, e_y, d_xi)
    F_std = np.column_stack([D_ETA, E_Y, D_XI])
    D = np.diag([1.0 / a, 1.0, a])
    Q = F_std @ D @ np.linalg.inv(P)
    can = ct_metric_shift(ct_scale(ct_isometry(ct_translate(L, d), Q),
                                   a), a * b)
    # idealized canonical operator in the standard lightcone frame
    M_tgt = np.zeros((3, 3))
    if k == 2:
        M_tgt[2, 0] = eps
    else:
        M_tgt[1, 0] = 1.0
        M_tgt[2, 1] = 1.0
    A_can = F_std @ M_tgt @ np.linalg.inv(F_std)
    resid = np.max(np.abs(can.A - A_can)) + np.max(np.abs(can.w - D_ETA))
    cond = 1.0 + float(np.max(np.abs(Q))) ** 2
    if resid > 1e-7 * sA * cond:
        raise DegenerateAmbiguity("null axial normalization failed")
    return CanonicalCT(CTClass("NullAxial", eps=eps, k=k), A_can, D_ETA.copy(),
                       d, a, a * b, Q)


def classify_ct(L: ConcircularTensor, tol: float = CLUSTER_RTOL) -> CanonicalCT:
    """Canonical form of L modulo geometric equivalence (Theorem classes:
    Cartesian, Central, non-null axial, null axial)."""
    sref = 1.0 + float(np.max(np.abs(L.A))) + float(np.max(np.abs(L.w))) \
        + abs(L.m)
    if abs(L.m) > tol * sref:
        return _classify_central(L)
    if float(np.max(np.abs(L.w))) <= tol * sref:
        alpha = float(np.trace(L.A)) / 3.0
        trivial = bool(np.max(np.abs(L.A - alpha * np.eye(3))) <= tol * sref)
        return CanonicalCT(CTClass("Cartesian"), L.A.copy(), np.zeros(3),
                           np.zeros(3), 1.0, 0.0, np.eye(3), trivial=trivial)
    ww = dot(L.w, L.w)
    if abs(ww) > tol * sref * sref:
        return _classify_nonnull_axial(L)
    return _classify_null_axial(L, tol)


# ---------------------------------------------------------- reducibility

def _gm(A: np.ndarray, lam: float, rtol: float = 1e-7) -> int:
    return _nullspace(A - lam * np.eye(A.shape[0]), rtol=rtol).shape[1]


def _has_multidim_eigenspace(A: np.ndarray, tol: float) -> bool:
    """True iff the (small, real) operator A has an eigenvalue whose
    eigenspace has dimension >= 2."""
    nd = A.shape[0]
    if nd <= 1:
        return False
    s = 1.0 + float(np.max(np.abs(A)))
    if nd == 2:
        lam = 0.5 * float(np.trace(A))
        return bool(np.max(np.abs(A - lam * np.eye(2))) <= tol * s)
    roots = solve_cubic(*charpoly_coeffs(A))
    if max(abs(r.imag) for r in roots) > tol * s:
        return False          # a complex pair leaves only a simple real root
    reals = sorted(r.real for r in roots)
    for i in range(2):
        if abs(reals[i + 1] - reals[i]) <= 10.0 * tol * s:
            lam = 0.5 * (reals[i] + reals[i + 1])
            if _gm(A, lam) >= 2:
                return True
    return False


def _ac_matrix(c: CanonicalCT) -> np.ndarray:
    """Matrix of A_c = A restricted to the complement of D, in the
    canonical frame (D = span{w, Aw, A^2 w})."""
    tag = c.ct_class.tag
    A = c.canonical_A
    if tag in ("Cartesian", "Central"):
        return A
    if tag == "NonNullAxial":
        idx = [1, 2] if c.ct_class.eps == -1 else [0, 1]   # drop the axis
        return A[np.ix_(idx, idx)]
    if c.ct_class.k == 2:
        return np.array([[0.0]])           # D-perp = span{e_y}, A_c e_y = 0
    return np.zeros((0, 0))                # k = 3: D is the whole space


def is_reducible(L: ConcircularTensor, tol: float = CLUSTER_RTOL) -> bool:
    """True iff L is constant or A_c has a multidimensional eigenspace."""
    if L.is_constant:
        return True
    c = classify_ct(L, tol)
    return _has_multidim_eigenspace(_ac_matrix(c), tol)


# ------------------------------------------------- characteristic polys

def _monic_coeffs(A: np.ndarray) -> tuple:
    nd = A.shape[0]
    if nd == 0:
        return (1.0,)
    if nd == 1:
        return (1.0, -float(A[0, 0]))
    if nd == 2:
        return (1.0, -float(np.trace(A)), float(np.linalg.det(A)))
    c2, c1, c0 = charpoly_coeffs(A)
    return (1.0, c2, c1, c0)


def char_polys(c: CanonicalCT, p) -> CharPolySet:
    """B(z) on D-perp and p(z) = det(zI - L_p) for the canonical tensor."""
    Ac = _ac_matrix(c)
    Lp = evaluate_ct(c.canonical_tensor(), p)
    return CharPolySet(B=_monic_coeffs(Ac), p_at_point=_monic_coeffs(Lp),
                       D_dim=3 - Ac.shape[0])


def point_eigenvalues(L: ConcircularTensor, p, tol: float = CLUSTER_RTOL):
    """Eigenvalues of L at p, sorted descending; a ComplexSpectrum instance
    (returned, not raised) flags a complex pair."""
    Lp = evaluate_ct(L, p)
    # A direct eigensolve is backward stable in the entries of Lp, whereas
    # closed-form cubic roots lose digits once the entries grow large.
    roots = np.atleast_1d(np.linalg.eigvals(Lp))
    s = 1.0 + float(np.max(np.abs(Lp)))
    if float(np.max(np.abs(roots.imag))) > tol * s:
        return ComplexSpectrum("point spectrum has a complex pair")
    return tuple(sorted((float(r) for r in roots.real), reverse=True))


# ------------------------------------------------------------------ JSON

def ct_from_dict(data: dict) -> ConcircularTensor:
    """Build a CT from {"A": [[..3x3..]], "w": [t,x,y], "m": number}."""
    try:
        A = np.array(data["A"], dtype=float)
        w = np.array(data["w"], dtype=float)
        m = float(data["m"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadParams(f"malformed CT JSON: {exc}") from exc
    return ConcircularTensor(A, w, m)


def ct_to_dict(L: ConcircularTensor) -> dict:
    return {"A": L.A.tolist(), "w": L.w.tolist(), "m": L.m}
