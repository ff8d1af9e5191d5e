"""Warped-product decompositions of 3D Minkowski space: spheres from
initial data, the three standard map forms and their images, and the
decomposition of reducible concircular tensors (Algorithm: pick unit or
cycle vectors in the multidimensional eigenspaces of A_c)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import METRIC, dot, vec
from .errors import (DegenerateSubspace, NotReducible, NoCanonicalPoint,
                     OutsideGeodesicFactor, BadParams, DegenerateAmbiguity)
from .jordan import _nullspace, solve_cubic, charpoly_coeffs, CLUSTER_RTOL
from .concircular import (ConcircularTensor, classify_ct, is_reducible,
                          ct_translate)

__all__ = ["SphereSpec", "InitialData", "WarpedProduct", "RestrictedCT",
           "sphere_from_triple", "build_warped_product", "wp_map",
           "wp_image_contains", "decompose_reducible"]


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class SphereSpec:
    """A maximal spherical submanifold determined by (p_bar; V; a)."""
    variant: str              # Flat | ConstCurv | Parabolic
    base: np.ndarray          # p_bar
    basis: np.ndarray         # columns spanning V
    a: np.ndarray
    center: np.ndarray | None = None      # ConstCurv only
    curvature: float = 0.0                # <a, a> (ConstCurv only)


@dataclass(frozen=True)
class InitialData:
    """Canonical-form initial data (p_bar; V_0 (+) ... (+) V_k; a_1..a_k)."""
    p_bar: np.ndarray
    subspaces: tuple          # (V_0, V_1, ..., V_k) basis matrices
    a: tuple                  # (a_1, ..., a_k)

    def __post_init__(self):
        for ai in self.a:
            if np.max(np.abs(ai)) > 1e-12 and \
                    abs(dot(self.p_bar, ai) - 1.0) > 1e-8:
                raise NoCanonicalPoint("<p_bar, a_i> = 1 violated")


@dataclass(frozen=True)
class WarpedProduct:
    """Two-factor warped product N_0 x_rho N_1 -> E^3_1."""
    data: InitialData
    factor: SphereSpec
    case: str                 # Cartesian | NonNull | Null
    b: np.ndarray | None = None   # null partner of a (Null case)

    def rho(self, p0) -> float:
        if self.case == "Cartesian":
            return 1.0
        return float(dot(np.asarray(p0, dtype=float), self.data.a[0]))


@dataclass(frozen=True)
class RestrictedCT:
    """The restriction of a CT to the geodesic factor V_0: matrices are in
    the coordinates of the stored basis (columns of V_0)."""
    basis: np.ndarray         # 3 x d
    A: np.ndarray             # d x d
    w: np.ndarray             # d
    m: float

    @property
    def gram(self) -> np.ndarray:
        return self.basis.T @ METRIC @ self.basis

    def evaluate(self, p0_coords) -> np.ndarray:
        """Mixed-index operator of the restricted CT at a point of V_0
        (given in basis coordinates)."""
        p = np.asarray(p0_coords, dtype=float)
        G = self.gram
        cov = G @ self.A                                 # covariant A
        cov = 0.5 * (cov + cov.T)
        wp = np.outer(G @ self.w, p) + np.outer(G @ p, self.w)
        pp = np.outer(G @ p, p)
        cov = cov + 0.5 * (wp + wp.T) + self.m * 0.5 * (pp + pp.T)
        return np.linalg.solve(G, cov)

    def point_eigenvalues(self, p0_coords) -> np.ndarray:
        return np.sort(np.linalg.eigvals(self.evaluate(p0_coords)).real)


# ------------------------------------------------------------ projections

def _projector(basis: np.ndarray) -> np.ndarray:
    """Minkowski-orthogonal projector onto the (nondegenerate) span of the
    given basis columns."""
    if basis.size == 0 or basis.shape[1] == 0:
        return np.zeros((3, 3))
    G = basis.T @ METRIC @ basis
    if abs(np.linalg.det(G)) < 1e-12:
        raise DegenerateSubspace("projection onto a degenerate subspace")
    return basis @ np.linalg.solve(G, basis.T @ METRIC)


def _ortho_complement(basis: np.ndarray) -> np.ndarray:
    """Basis of the Minkowski-orthogonal complement of the span."""
    if basis.size == 0 or basis.shape[1] == 0:
        return np.eye(3)
    return _nullspace((METRIC @ basis).T)


# ---------------------------------------------------------------- spheres

def sphere_from_triple(p_bar, V: np.ndarray, a) -> SphereSpec:
    """The sphere determined by (p_bar; V; a): flat for a = 0, constant
    curvature for non-null a, parabolically embedded for null a."""
    p_bar = np.asarray(p_bar, dtype=float)
    a = np.asarray(a, dtype=float)
    V = np.atleast_2d(np.asarray(V, dtype=float))
    if V.shape[0] != 3:
        V = V.T
    G = V.T @ METRIC @ V
    if V.shape[1] and abs(np.linalg.det(G)) < 1e-12:
        raise DegenerateSubspace("V must be nondegenerate")
    s = float(np.max(np.abs(a)))
    if s < 1e-12:
        return SphereSpec("Flat", p_bar, V, a)
    aa = dot(a, a)
    if abs(aa) > 1e-12 * s * s:
        c = p_bar - a / aa
        return SphereSpec("ConstCurv", p_bar, V, a, center=c, curvature=aa)
    return SphereSpec("Parabolic", p_bar, V, a)


def build_warped_product(data: InitialData) -> WarpedProduct:
    """Two-factor warped product from initial data (single sphere factor)."""
    if len(data.a) != 1:
        raise BadParams("only two-factor warped products are supported")
    a1 = data.a[0]
    sphere = sphere_from_triple(data.p_bar, data.subspaces[1], a1)
    if sphere.variant == "Flat":
        return WarpedProduct(data, sphere, "Cartesian")
    if sphere.variant == "ConstCurv":
        return WarpedProduct(data, sphere, "NonNull")
    # null case: find the null partner b in V_0 with <a, b> = 1
    V0 = data.subspaces[0]
    G = V0.T @ METRIC @ V0
    av = V0.T @ METRIC @ a1                  # <a, columns of V0>
    # solve for coords q with V0 q null and <a, V0 q> = 1
    # V0 is 2D Lorentzian containing the null direction a; b is the other
    # null direction, scaled so that <a, b> = 1
    if V0.shape[1] != 2:
        raise DegenerateSubspace("null case requires a 2D geodesic factor")
    # null directions of the 2D metric G
    evals, evecs = np.linalg.eigh(G)
    n1 = evecs[:, 0] / math.sqrt(abs(evals[0]))
    n2 = evecs[:, 1] / math.sqrt(abs(evals[1]))
    cand = [n1 + n2, n1 - n2]                # null in V0 coordinates
    best = None
    for q in cand:
        sprod = float(av @ q)
        if abs(sprod) > 1e-9:
            b = V0 @ (q / sprod)
            if abs(dot(b, b)) < 1e-8 and (best is None):
                best = b
    if best is None:
        raise DegenerateSubspace("no null partner b with <a, b> = 1")
    return WarpedProduct(data, sphere, "Null", b=best)


# ------------------------------------------------------------------- maps

def wp_map(wp: WarpedProduct, p0, p1) -> np.ndarray:
    """Evaluate the warped-product map at (p0, p1)."""
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    if wp.case == "Cartesian":
        return p0 + p1
    a = wp.data.a[0]
    rho = float(dot(a, p0))
    if rho <= 0.0:
        raise OutsideGeodesicFactor(f"rho(p0) = {rho} is not positive")
    V0 = wp.data.subspaces[0]
    if wp.case == "NonNull":
        # W_0 = V_0 intersect a-perp
        W0 = _intersect(V0, a)
        P0 = _projector(W0)
        c = wp.factor.center
        return P0 @ p0 + rho * (p1 - c)
    # Null case
    b = wp.b
    W0 = _intersect(V0, a, b)
    P0 = _projector(W0) if W0.shape[1] else np.zeros((3, 3))
    P1 = _projector(wp.data.subspaces[1])
    q1 = P1 @ p1
    return (P0 @ p0
            + (dot(b, p0) - 0.5 * rho * dot(q1, q1)) * a
            + rho * b + rho * q1)


def _intersect(V: np.ndarray, *normals) -> np.ndarray:
    """Basis of V intersected with the orthogonal complement of the given
    vectors."""
    rows = [(METRIC @ n) for n in normals]
    # coordinates q with V q orthogonal to all normals
    Mrows = np.array([r @ V for r in rows])
    ns = _nullspace(Mrows)
    return V @ ns if ns.shape[1] else np.zeros((3, 0))


def wp_image_contains(wp: WarpedProduct, p) -> bool:
    """Membership test for the image of the warped-product map."""
    p = np.asarray(p, dtype=float)
    if wp.case == "Cartesian":
        return True
    a = wp.data.a[0]
    if wp.case == "Null":
        return bool(dot(a, p) > 0.0)
    # non-null: P_1 projects onto R a (+) V_1
    span = np.column_stack([a.reshape(3, 1), wp.data.subspaces[1]])
    P1 = _projector(span)
    q = P1 @ p
    qq = dot(q, q)
    return bool(np.sign(qq) == np.sign(dot(a, a)) and dot(a, q) > 0.0)


# ----------------------------------------------------------- Algorithm 1

def _eigenspaces(A: np.ndarray, tol: float):
    """Clustered real eigenvalues of a (<= 3x3) matrix with eigenspace
    bases, sorted by eigenvalue."""
    nd = A.shape[0]
    s = 1.0 + float(np.max(np.abs(A))) if A.size else 1.0
    if nd == 0:
        return []
    if nd == 1:
        return [(float(A[0, 0]), np.eye(1))]
    if nd == 2:
        tr, det = float(np.trace(A)), float(np.linalg.det(A))
        disc = tr * tr / 4.0 - det
        if disc < -tol * s * s:
            return []
        if disc <= tol * s * s:
            lams = [tr / 2.0]
        else:
            sq = math.sqrt(disc)
            lams = [tr / 2.0 - sq, tr / 2.0 + sq]
    else:
        roots = solve_cubic(*charpoly_coeffs(A))
        reals = sorted(r.real for r in roots if abs(r.imag) <= tol * s)
        lams = []
        for r in reals:
            if not lams or r - lams[-1] > 10.0 * tol * s:
                lams.append(r)
    out = []
    for lam in lams:
        ker = _nullspace(A - lam * np.eye(nd), rtol=max(tol, 1e-9))
        if ker.shape[1]:
            out.append((lam, ker))
    return out


def _find_cycle(A: np.ndarray, lam: float, E_amb: np.ndarray) -> tuple:
    """Cycle v_1, ..., v_r of generalized eigenvectors of A at lam with
    v_r lightlike in the (degenerate) eigenspace, normalized so that
    |<v_1, v_r>| = 1.  Returns (v_1, v_r)."""
    N = A - lam * np.eye(3)
    # generalized eigenspace: ker N^3 (here the whole relevant block)
    for power in (2, 3):
        K = _nullspace(np.linalg.matrix_power(N, power), rtol=1e-9)
        cands = [K[:, i] for i in range(K.shape[1])]
        best = max(cands, key=lambda v: float(np.linalg.norm(N @ v)),
                   default=None)
        if best is not None and np.linalg.norm(N @ best) > 1e-9:
            v1 = best
            vr = N @ v1
            while np.linalg.norm(N @ vr) > 1e-9:
                v1, vr = vr, N @ vr
            mu = dot(v1, vr)
            if abs(mu) < 1e-12:
                continue
            c = 1.0 / math.sqrt(abs(mu))
            return c * v1, c * vr
    raise DegenerateAmbiguity("no suitable cycle in the degenerate "
                              "eigenspace")


def decompose_reducible(L: ConcircularTensor, p_bar_hint,
                        tol: float = CLUSTER_RTOL):
    """Adapted warped-product initial data and the restriction of L to the
    geodesic factor.  The hint selects the causal character of the unit
    vector a_1 in a nondegenerate multidimensional eigenspace."""
    if not is_reducible(L, tol):
        raise NotReducible("L is not reducible")
    p_bar_hint = np.asarray(p_bar_hint, dtype=float)
    work = L
    shift = np.zeros(3)
    if abs(L.m) > tol:
        shift = -L.w / L.m                 # move a central CT to its origin
        work = ct_translate(L, shift)
    A, w, m = work.A, work.w, work.m

    if work.is_constant:
        spaces = _eigenspaces(A, tol)
        if len(spaces) < 2:
            raise NotReducible("constant CT with a single eigenspace")
        V0 = spaces[0][1]
        V1 = np.column_stack([sp for _, sp in spaces[1:]])
        data = InitialData(np.zeros(3), (V0, V1), (np.zeros(3),))
        rest = RestrictedCT(V0, np.linalg.pinv(V0) @ A @ V0,
                            np.zeros(V0.shape[1]), 0.0)
        return data, rest

    # D = span{w, Aw, A^2 w} and A_c = A restricted to D-perp
    Dcols = np.column_stack([w, A @ w, A @ A @ w])
    U, sv, _ = np.linalg.svd(Dcols)
    rank = int(np.sum(sv > 1e-9 * (1.0 + sv[0])))
    Dperp = _ortho_complement(U[:, :rank]) if rank else np.eye(3)
    Ac = np.linalg.pinv(Dperp) @ A @ Dperp

    chosen = None
    for lam, ker in _eigenspaces(Ac, tol):
        if ker.shape[1] >= 2:
            chosen = (lam, Dperp @ ker)
            break
    if chosen is None:
        raise NotReducible("A_c has no multidimensional eigenspace")
    lam, E = chosen
    GE = E.T @ METRIC @ E
    if abs(np.linalg.det(GE)) > 1e-9 * (1.0 + np.max(np.abs(GE))) ** 2:
        # nondegenerate eigenspace: unit a_1 following the hint
        h = E @ np.linalg.solve(GE, E.T @ METRIC @ p_bar_hint)
        hh = dot(h, h)
        if np.max(np.abs(h)) < 1e-9 or abs(hh) < 1e-9:
            h = E[:, 0]
            hh = dot(h, h)
        a1 = h / math.sqrt(abs(hh))
        V1 = _intersect(E, a1)
    else:
        # degenerate eigenspace: lightlike cycle end
        v1, vr = _find_cycle(A, lam, E)
        a1 = vr
        V1 = _intersect(E, v1)
    V0 = _ortho_complement(V1)
    # p_bar: minimum-norm solution of p_bar in V_0, <p_bar, a_1> = 1
    row = (METRIC @ a1) @ V0
    if np.max(np.abs(a1)) < 1e-12:
        q = np.zeros(V0.shape[1])
    else:
        q, res, rk, _ = np.linalg.lstsq(row.reshape(1, -1),
                                        np.array([1.0]), rcond=None)
        if abs(float(row @ q) - 1.0) > 1e-8:
            raise NoCanonicalPoint("cannot satisfy <p_bar, a_1> = 1 in V_0")
    p_bar = V0 @ q
    data = InitialData(p_bar, (V0, V1), (a1,))
    rest = RestrictedCT(V0, np.linalg.pinv(V0) @ A @ V0,
                        np.linalg.pinv(V0) @ w, m)
    return data, rest
