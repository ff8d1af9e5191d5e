"""Metric-Jordan canonical forms of self-adjoint operators on E^3_1.

A self-adjoint operator A (with respect to the indefinite metric) admits a
basis in which A is block-diagonal with Jordan blocks J_k(lambda) while the
metric becomes the direct sum of eps * S_k, where S_k is the anti-diagonal
unit matrix.  The possibilities in 3 dimensions are:

* three real 1-blocks with signs containing exactly one -1;
* a complex-conjugate pair of 1-blocks plus a real +1-block;
* an eps-signed 2-block plus a real +1-block;
* a single +3-block (the pair (J_3, -S_3) is inadmissible).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import METRIC, D_ETA, D_XI, E_T, E_X, E_Y, dot, is_self_adjoint
from .errors import DegenerateAmbiguity, NotPseudoOrthogonal, NotSelfAdjoint

__all__ = [
    "JordanBlockSpec", "MetricJordanForm", "solve_cubic", "charpoly_coeffs",
    "metric_jordan_form", "synthesize_operator",
    "pseudo_orthogonal", "random_pseudo_orthogonal",
]

CLUSTER_RTOL = 1e-8


@dataclass(frozen=True)
class JordanBlockSpec:
    """One metric-Jordan block: size in {1,2,3}, sign eps, eigenvalue.

    A complex-conjugate pair of 1-blocks is stored as a single spec with
    size 1 and a complex eigenvalue of positive imaginary part together with
    its conjugate twin (two entries in the block list).
    """
    size: int
    sign: int
    eigenvalue: complex

    def __post_init__(self):
        if self.size == 3 and self.sign != 1:
            raise ValueError("J_{-3} is inadmissible")
        if isinstance(self.eigenvalue, complex) and self.eigenvalue.imag != 0:
            if self.size != 1 or self.sign != 1:
                raise ValueError("complex eigenvalues only on +1-signed 1-blocks")


@dataclass
class MetricJordanForm:
    """Ordered blocks plus a basis (columns, possibly complex) realizing them."""
    blocks: list[JordanBlockSpec]
    basis: np.ndarray = field(default=None)  # 3x3, columns are basis vectors

    def block_multiset(self) -> tuple:
        """Hashable multiset of (size, sign, rounded eigenvalue class)."""
        return tuple(sorted((b.size, b.sign, complex(b.eigenvalue).real,
                             complex(b.eigenvalue).imag) for b in self.blocks))

    def jordan_matrix(self) -> np.ndarray:
        """The (possibly complex) Jordan matrix of the block list."""
        cplx = any(complex(b.eigenvalue).imag != 0 for b in self.blocks)
        J = np.zeros((3, 3), dtype=complex if cplx else float)
        i = 0
        for b in self.blocks:
            lam = complex(b.eigenvalue) if cplx else complex(b.eigenvalue).real
            for r in range(b.size):
                J[i + r, i + r] = lam
                if r > 0:
                    J[i + r - 1, i + r] = 1.0
            i += b.size
        return J

    def gram_target(self) -> np.ndarray:
        """Direct sum of eps * S_k for the block list."""
        G = np.zeros((3, 3))
        i = 0
        for b in self.blocks:
            for r in range(b.size):
                G[i + r, i + b.size - 1 - r] = b.sign
            i += b.size
        return G


# ---------------------------------------------------------------------------
# cubic roots


def charpoly_coeffs(A: np.ndarray) -> tuple[float, float, float]:
    """(c2, c1, c0) of det(zI - A) = z^3 + c2 z^2 + c1 z + c0 for a 3x3."""
    tr = A[0, 0] + A[1, 1] + A[2, 2]
    # sum of principal 2x2 minors
    m = (A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
         + A[0, 0] * A[2, 2] - A[0, 2] * A[2, 0]
         + A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1])
    det = (A[0, 0] * (A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1])
           - A[0, 1] * (A[1, 0] * A[2, 2] - A[1, 2] * A[2, 0])
           + A[0, 2] * (A[1, 0] * A[2, 1] - A[1, 1] * A[2, 0]))
    return -tr, m, -det


def _cubic_val(c2: float, c1: float, c0: float, z: float) -> float:
    return ((z + c2) * z + c1) * z + c0


def _newton_polish(c2: float, c1: float, c0: float, z: float) -> float:
    """One guarded Newton step: keep the update only if it reduces |p|."""
    p = _cubic_val(c2, c1, c0, z)
    dp = (3.0 * z + 2.0 * c2) * z + c1
    if dp != 0.0:
        z2 = z - p / dp
        if math.isfinite(z2) and abs(_cubic_val(c2, c1, c0, z2)) <= abs(p):
            return z2
    return z


def _snap_multiple_roots(c2: float, c1: float, c0: float,
                         roots: list[float]) -> list[float]:
    """Snap nearly-coincident real roots onto the critical points of the
    cubic.  A defective double root perturbs like sqrt(machine eps), which
    would land in the clustering gray zone; the corresponding critical point
    of p is accurate to full precision."""
    rs = sorted(roots)
    s = 1.0 + max(abs(r) for r in rs)
    near = 1e-5 * s
    if rs[2] - rs[0] <= near:
        z = -c2 / 3.0  # inflection point (triple-root candidate)
        if abs(_cubic_val(c2, c1, c0, z)) <= 1e-11 * s ** 3:
            return [z, z, z]
    # critical points: roots of 3z^2 + 2 c2 z + c1
    disc = c2 * c2 - 3.0 * c1
    if disc >= 0.0:
        sq = math.sqrt(disc)
        crit = [(-c2 - sq) / 3.0, (-c2 + sq) / 3.0]
        for i in (0, 1):
            if rs[i + 1] - rs[i] <= near:
                mid = 0.5 * (rs[i] + rs[i + 1])
                zc = min(crit, key=lambda z: abs(z - mid))
                if abs(_cubic_val(c2, c1, c0, zc)) <= 1e-11 * s ** 3:
                    rs[i] = rs[i + 1] = zc
    return rs


def solve_cubic(c2: float, c1: float, c0: float) -> list[complex]:
    """Roots of z^3 + c2 z^2 + c1 z + c0 via the depressed-cubic
    trigonometric / Cardano form, each real root polished by one Newton step."""
    # depressed: t^3 + p t + q with z = t - c2/3
    sh = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2 ** 3 / 27.0 - c2 * c1 / 3.0 + c0
    scale = max(abs(p) ** 0.5, abs(q) ** (1.0 / 3.0), 1e-30)
    disc = 4.0 * p ** 3 + 27.0 * q * q
    if disc <= 1e-14 * scale ** 6:
        # three real roots (possibly repeated): trigonometric method
        if abs(p) < 1e-30 * scale * scale:
            t0 = (-q) ** (1.0 / 3.0) if q <= 0 else -(q ** (1.0 / 3.0))
            roots = [t0, t0, t0]
        else:
            r = math.sqrt(-p / 3.0)
            arg = max(-1.0, min(1.0, 3.0 * q / (2.0 * p * r)))
            theta = math.acos(arg) / 3.0
            roots = [2.0 * r * math.cos(theta - 2.0 * math.pi * k / 3.0)
                     for k in range(3)]
        out = [_newton_polish(c2, c1, c0, t - sh) for t in roots]
        out = _snap_multiple_roots(c2, c1, c0, out)
        out.sort()
        return [complex(z) for z in out]
    # one real root + complex pair (Cardano)
    half_q = q / 2.0
    rad = math.sqrt(disc / 108.0)
    u3 = -half_q + rad
    v3 = -half_q - rad
    t0 = math.copysign(abs(u3) ** (1.0 / 3.0), u3) + math.copysign(abs(v3) ** (1.0 / 3.0), v3)
    z0 = _newton_polish(c2, c1, c0, _newton_polish(c2, c1, c0, t0 - sh))
    # quadratic factor z^2 + (c2 + z0) z + (c1 + z0(c2 + z0))
    b = c2 + z0
    c = c1 + z0 * b
    disc2 = b * b - 4.0 * c
    im = math.sqrt(max(0.0, -disc2)) / 2.0
    re = -b / 2.0
    # a defective real root can leak into this branch as a pair with a tiny
    # imaginary part; test the multiple-root hypothesis at the stationary
    # points of p before committing to a complex pair
    s = 1.0 + max(abs(z0), math.hypot(re, im))
    if im <= 1e-3 * s:
        zt = -c2 / 3.0
        if (max(abs(z0 - zt), abs(re - zt), im) <= 1e-3 * s
                and abs(_cubic_val(c2, c1, c0, zt)) <= 1e-11 * s ** 3):
            return [complex(zt)] * 3
        dcrit = c2 * c2 - 3.0 * c1
        if dcrit >= 0.0:
            sq = math.sqrt(dcrit)
            for zc in ((-c2 - sq) / 3.0, (-c2 + sq) / 3.0):
                if (abs(zc - re) <= 1e-3 * s
                        and abs(_cubic_val(c2, c1, c0, zc)) <= 1e-11 * s ** 3):
                    z1 = _newton_polish(c2, c1, c0, -c2 - 2.0 * zc)
                    return [complex(z) for z in sorted([z1, zc, zc])]
    return [complex(z0), complex(re, im), complex(re, -im)]


def _cluster(roots: list[float], tol: float) -> list[list[float]]:
    """Group sorted real roots whose gaps are below the relative tolerance,
    raising DegenerateAmbiguity inside the gray zone [tol, 10 tol]."""
    scale = 1.0 + max(abs(r) for r in roots)
    rs = sorted(roots)
    groups = [[rs[0]]]
    for r in rs[1:]:
        gap = abs(r - groups[-1][-1]) / scale
        if gap <= tol:
            groups[-1].append(r)
        elif gap <= 10.0 * tol:
            raise DegenerateAmbiguity(
                f"eigenvalue gap {gap:.3e} in the ambiguous zone [{tol:.1e}, {10 * tol:.1e}]")
        else:
            groups.append([r])
    return groups


# ---------------------------------------------------------------------------
# canonical-form computation


def _nullspace(M: np.ndarray, rtol: float = 1e-8) -> np.ndarray:
    """Orthonormal (Euclidean) basis of the numerical kernel, as columns."""
    u, s, vt = np.linalg.svd(M)
    scale = s[0] if s[0] > 0 else 1.0
    rank = int(np.sum(s > rtol * scale))
    return vt[rank:].T


def _normalize_unit(v: np.ndarray) -> tuple[np.ndarray, int]:
    n2 = dot(v, v)
    if abs(n2) < 1e-12 * float(v @ v):
        raise DegenerateAmbiguity("null eigenvector where a unit one is required")
    return v / math.sqrt(abs(n2)), (1 if n2 > 0 else -1)


def _split_eigenspace(E: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Pseudo-orthonormalize a nondegenerate eigenspace (columns of E):
    returns unit vectors with signs, timelike ones first."""
    k = E.shape[1]
    G = E.T @ METRIC @ E
    evals, evecs = np.linalg.eigh(G)
    out = []
    for i in range(k):
        v = E @ evecs[:, i]
        out.append(_normalize_unit(v))
    out.sort(key=lambda t: t[1])
    return out


def _complement(vectors: list[np.ndarray]) -> np.ndarray:
    """A vector Minkowski-orthogonal to the given ones (3D only)."""
    M = np.array([METRIC @ v for v in vectors])
    ns = _nullspace(M)
    if ns.shape[1] == 0:
        raise DegenerateAmbiguity("no orthogonal complement found")
    return ns[:, 0]


def metric_jordan_form(A: np.ndarray, tol: float = CLUSTER_RTOL) -> MetricJordanForm:
    """Blocks and a basis B with B^-1 A B the Jordan matrix and
    B^T g B = direct sum of eps S_k."""
    A = np.asarray(A, dtype=float)
    if not is_self_adjoint(A, max(tol, 1e-10)):
        raise NotSelfAdjoint("operator is not self-adjoint w.r.t. the metric")
    scale = 1.0 + np.max(np.abs(A))
    roots = solve_cubic(*charpoly_coeffs(A))
    imag_parts = [abs(r.imag) for r in roots]
    if max(imag_parts) > tol * scale:
        return _complex_case(A, roots)
    groups = _cluster([r.real for r in roots], tol)

    blocks: list[JordanBlockSpec] = []
    col_groups: list[list[np.ndarray]] = []
    for grp in groups:
        lam = float(np.mean(grp))
        mult = len(grp)
        N = A - lam * np.eye(3)
        ker = _nullspace(N, rtol=max(tol, 1e-10))
        gm = ker.shape[1]
        if mult == 1 or gm == mult:
            # diagonalizable part
            space = ker[:, :mult]
            for v, sign in _split_eigenspace(space):
                blocks.append(JordanBlockSpec(1, sign, lam))
                col_groups.append([v])
        elif mult == 2 or (mult == 3 and gm == 2):
            # project onto the generalized eigenspace of lam before building
            # the cycle (kills components along the remaining eigenvalue)
            proj = np.eye(3)
            for other in groups:
                if other is grp:
                    continue
                mu = float(np.mean(other))
                proj = (A - mu * np.eye(3)) @ proj / (lam - mu)
            blk, cols = _two_block(A, lam, N, proj)
            blocks.append(blk)
            col_groups.append(cols)
            if mult == 3 and gm == 2:
                v3 = _complement(cols)
                v3, sign = _normalize_unit(v3)
                blocks.append(JordanBlockSpec(1, sign, lam))
                col_groups.append([v3])
        else:
            # mult == 3, gm == 1: a single 3-block
            return _three_block(A, lam, N)
    # order: bigger blocks first, then timelike 1-block, then ascending eigenvalue
    order = sorted(range(len(blocks)),
                   key=lambda i: (-blocks[i].size, blocks[i].sign,
                                  complex(blocks[i].eigenvalue).real))
    blocks = [blocks[i] for i in order]
    basis = np.column_stack([c for i in order for c in col_groups[i]])
    return MetricJordanForm(blocks, basis)


def _two_block(A: np.ndarray, lam: float, N: np.ndarray,
               proj: np.ndarray | None = None):
    """Cycle construction for an eps-signed 2-block at eigenvalue lam."""
    if proj is None:
        proj = np.eye(3)
    # pick v1 in the generalized eigenspace with N v1 != 0, maximizing |N v1|
    candidates = [proj @ np.eye(3)[:, i] for i in range(3)]
    v1 = max(candidates, key=lambda v: float(np.linalg.norm(N @ v)))
    v2 = N @ v1
    s = dot(v1, v2)
    if abs(s) < 1e-12 * (1.0 + float(v1 @ v1)) * (1.0 + float(np.linalg.norm(v2))):
        raise DegenerateAmbiguity("degenerate pairing in 2-block cycle")
    # kill <v1, v1> by shifting along v2 (v2 is null: <v2,v2> = <v1, N^2 v1> = 0)
    alpha = -dot(v1, v1) / (2.0 * s)
    v1 = v1 + alpha * v2
    v2 = N @ v1
    s = dot(v1, v2)
    c = 1.0 / math.sqrt(abs(s))
    v1, v2 = c * v1, c * v2
    eps = 1 if s > 0 else -1
    # basis order (eigenvector, cycle head) so A acts as upper Jordan J_2(lam)
    return JordanBlockSpec(2, eps, lam), [v2, v1]


def _three_block(A: np.ndarray, lam: float, N: np.ndarray) -> MetricJordanForm:
    candidates = [np.eye(3)[:, i] for i in range(3)]
    v = max(candidates, key=lambda u: float(np.linalg.norm(N @ N @ u)))
    s = dot(v, N @ N @ v)
    if s <= 0:
        # <v, N^2 v> = <Nv, Nv> must be positive for an admissible block
        raise DegenerateAmbiguity("3-block with nonpositive pairing (J_{-3} inadmissible)")
    v = v / math.sqrt(s)
    # corrections within the cycle: kill <Nv, v> and <v, v>
    s = dot(v, N @ N @ v)   # now 1
    q = dot(N @ v, v)
    v = v - (q / (2.0 * s)) * (N @ v)
    r = dot(v, v)
    v = v - (r / (2.0 * s)) * (N @ N @ v)
    e3, e2, e1 = v, N @ v, N @ N @ v
    basis = np.column_stack([e1, e2, e3])
    return MetricJordanForm([JordanBlockSpec(3, 1, lam)], basis)


def _complex_case(A: np.ndarray, roots: list[complex]) -> MetricJordanForm:
    reals = [r for r in roots if r.imag == 0]
    pair = [r for r in roots if r.imag != 0]
    lam = pair[0] if pair[0].imag > 0 else pair[1]
    lam3 = reals[0].real
    # complex eigenvector (bilinear normalization <e, e> = 1)
    Ninv = A.astype(complex) - lam * np.eye(3)
    u, s, vt = np.linalg.svd(Ninv)
    e = vt[-1].conj()
    n2 = complex(-e[0] * e[0] + e[1] * e[1] + e[2] * e[2])
    e = e / np.sqrt(n2)
    v3 = _nullspace(A - lam3 * np.eye(3))[:, 0]
    v3, sign = _normalize_unit(v3)
    blocks = [JordanBlockSpec(1, 1, complex(lam)),
              JordanBlockSpec(1, 1, complex(lam.conjugate())),
              JordanBlockSpec(1, sign, lam3)]
    basis = np.column_stack([e, e.conj(), v3.astype(complex)])
    return MetricJordanForm(blocks, basis)


# ---------------------------------------------------------------------------
# synthesis


def _realization_basis(blocks: list[JordanBlockSpec]) -> np.ndarray:
    """Standard vectors realizing the Gram target of the block list."""
    cols: list[np.ndarray] = []
    # a 2-block occupies the (t, x) lightcone plane, leaving only e_y free
    free_spacelike = [E_Y] if any(b.size == 2 for b in blocks) else [E_X, E_Y]
    free_timelike = [E_T]
    for b in blocks:
        if b.size == 3:
            cols += [D_ETA, E_Y, D_XI]
        elif b.size == 2:
            cols += [D_ETA, b.sign * D_XI]
        elif b.sign == -1:
            cols.append(free_timelike.pop())
        else:
            cols.append(free_spacelike.pop(0))
    return np.column_stack(cols)


def synthesize_operator(form: MetricJordanForm, q: np.ndarray,
                        tol: float = 1e-10) -> np.ndarray:
    """q . (canonical real matrix of the block list) . q^-1 for a
    pseudo-orthogonal q; self-adjoint by construction."""
    q = np.asarray(q, dtype=float)
    if np.max(np.abs(q.T @ METRIC @ q - METRIC)) > tol:
        raise NotPseudoOrthogonal("q does not preserve the metric")
    blocks = form.blocks
    cplx = [b for b in blocks if complex(b.eigenvalue).imag != 0]
    if cplx:
        # realize the pair on the (t, x) plane as a metric-rotation block
        lam = complex(max((b.eigenvalue for b in cplx), key=lambda z: complex(z).imag))
        reals = [b for b in blocks if complex(b.eigenvalue).imag == 0]
        C = np.zeros((3, 3))
        C[0, 0] = C[1, 1] = lam.real
        C[0, 1] = lam.imag
        C[1, 0] = -lam.imag
        C[2, 2] = complex(reals[0].eigenvalue).real
    else:
        P = _realization_basis(blocks)
        J = form.jordan_matrix().real
        C = P @ J @ np.linalg.inv(P)
    return q @ C @ np.linalg.inv(q)


def pseudo_orthogonal(boost: float = 0.0, angle: float = 0.0,
                      flips: tuple[int, int, int] = (1, 1, 1)) -> np.ndarray:
    """Composition of a t-x boost, an x-y rotation and axis reflections."""
    B = np.array([[math.cosh(boost), math.sinh(boost), 0.0],
                  [math.sinh(boost), math.cosh(boost), 0.0],
                  [0.0, 0.0, 1.0]])
    R = np.array([[1.0, 0.0, 0.0],
                  [0.0, math.cos(angle), -math.sin(angle)],
                  [0.0, math.sin(angle), math.cos(angle)]])
    F = np.diag([float(f) for f in flips])
    return F @ B @ R


def random_pseudo_orthogonal(seed: int) -> np.ndarray:
    """Deterministic pseudo-orthogonal matrix drawn from the given seed."""
    rng = np.random.default_rng(seed)
    boost = rng.uniform(-1.5, 1.5)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    flips = tuple(int(f) for f in rng.choice([-1, 1], size=3))
    return pseudo_orthogonal(boost, angle, flips)
