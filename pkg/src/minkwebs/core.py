"""Vectors, bilinear forms and operators on 3-dimensional Minkowski space.

Conventions used throughout the package:

* signature (-, +, +) with coordinate order (t, x, y);
* lightcone coordinates eta = x + t, xi = (x - t)/2, so that
  <d_eta, d_xi> = 1 and <d_eta, d_eta> = <d_xi, d_xi> = 0.

Vectors are plain numpy arrays of shape (3,), covariant bilinear forms and
mixed (1,1) operators are numpy arrays of shape (3, 3).  ``DualScalar`` is a
forward-mode dual number carrying three partial derivatives, used for exact
Jacobians in the pullback tests.
"""
from __future__ import annotations

import numbers

import numpy as np

__all__ = [
    "METRIC", "E_T", "E_X", "E_Y", "D_ETA", "D_XI",
    "vec", "dot", "lower", "raise_index", "sym_outer", "is_self_adjoint",
    "minkowski_norm2", "DualScalar", "dual_vars", "value_of", "grad_of",
]

METRIC = np.diag([-1.0, 1.0, 1.0])
METRIC.setflags(write=False)

E_T = np.array([1.0, 0.0, 0.0])
E_X = np.array([0.0, 1.0, 0.0])
E_Y = np.array([0.0, 0.0, 1.0])
# Lightcone frame: <D_ETA, D_XI> = 1, both null.
D_ETA = np.array([0.5, 0.5, 0.0])
D_XI = np.array([-1.0, 1.0, 0.0])
for _v in (E_T, E_X, E_Y, D_ETA, D_XI):
    _v.setflags(write=False)


def vec(t: float, x: float, y: float) -> np.ndarray:
    """Build a vector/point of E^3_1 in the ordered basis (d_t, d_x, d_y)."""
    return np.array([float(t), float(x), float(y)])


def dot(u: np.ndarray, v: np.ndarray) -> float:
    """Minkowski scalar product  -u_t v_t + u_x v_x + u_y v_y."""
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def minkowski_norm2(u: np.ndarray) -> float:
    """<u, u>."""
    return dot(u, u)


def lower(v: np.ndarray) -> np.ndarray:
    """Index lowering: v^i -> g_ij v^j (negates the t component)."""
    return METRIC @ v


def raise_index(b: np.ndarray) -> np.ndarray:
    """Index raising on a covariant bilinear form: returns the mixed operator
    g^ik b_kj (multiplies the t-row by -1)."""
    return METRIC @ b


def sym_outer(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Symmetric tensor product of the lowered vectors:
    (u (+) v)_ij = (u_i v_j + v_i u_j) / 2, so 2*sym_outer(w, r) has components
    w_i r_j + r_i w_j."""
    lu, lv = METRIC @ u, METRIC @ v
    return 0.5 * (np.outer(lu, lv) + np.outer(lv, lu))


def is_self_adjoint(A: np.ndarray, tol: float = 1e-10) -> bool:
    """True iff the lowered form g A is symmetric: max|g_ik A^k_j - g_jk A^k_i|
    below tol relative to the largest entry of A."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    low = METRIC @ A
    scale = 1.0 + np.max(np.abs(A))
    return bool(np.max(np.abs(low - low.T)) <= tol * scale)


class DualScalar:
    """Forward-mode dual number with a fixed-length triple of partials.

    Arithmetic follows the chain rule exactly; mixing with plain numbers
    promotes them to constants (zero partials).
    """

    __slots__ = ("val", "grad")

    def __init__(self, val: float, grad=None):
        self.val = float(val)
        if grad is None:
            self.grad = np.zeros(3)
        else:
            self.grad = np.asarray(grad, dtype=float)

    # -- helpers ----------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, DualScalar):
            return x
        if isinstance(x, numbers.Real):
            return DualScalar(float(x))
        return NotImplemented

    def __repr__(self):
        return f"DualScalar({self.val!r}, {self.grad!r})"

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = DualScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualScalar(self.val + o.val, self.grad + o.grad)

    __radd__ = __add__

    def __sub__(self, other):
        o = DualScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualScalar(self.val - o.val, self.grad - o.grad)

    def __rsub__(self, other):
        o = DualScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualScalar(o.val - self.val, o.grad - self.grad)

    def __mul__(self, other):
        o = DualScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return DualScalar(self.val * o.val, self.grad * o.val + self.val * o.grad)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = DualScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        inv = 1.0 / o.val
        return DualScalar(self.val * inv,
                          (self.grad * o.val - self.val * o.grad) * inv * inv)

    def __rtruediv__(self, other):
        o = DualScalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return DualScalar(-self.val, -self.grad)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, numbers.Real):
            return NotImplemented
        n = float(n)
        if n == int(n) and n >= 0:
            # integer powers stay valid at val <= 0
            k = int(n)
            if k == 0:
                return DualScalar(1.0)
            v = self.val ** k
            dv = k * self.val ** (k - 1)
        else:
            v = self.val ** n
            dv = n * self.val ** (n - 1.0)
        return DualScalar(v, dv * self.grad)

    # comparisons look only at the value part
    def __lt__(self, other):
        return self.val < _plain(other)

    def __le__(self, other):
        return self.val <= _plain(other)

    def __gt__(self, other):
        return self.val > _plain(other)

    def __ge__(self, other):
        return self.val >= _plain(other)

    def __abs__(self):
        if self.val < 0:
            return -self
        return self

    def __float__(self):
        return self.val


def _plain(x) -> float:
    return x.val if isinstance(x, DualScalar) else float(x)


def dual_vars(*values: float) -> list[DualScalar]:
    """Seed independent variables: dual_vars(u, v, w) returns duals whose
    gradients are the unit directions (d/du, d/dv, d/dw)."""
    out = []
    for i, v in enumerate(values):
        g = np.zeros(3)
        g[i] = 1.0
        out.append(DualScalar(v, g))
    return out


def value_of(x) -> float:
    """Value part of a number or DualScalar."""
    return _plain(x)


def grad_of(x) -> np.ndarray:
    """Gradient part of a number (zero) or DualScalar."""
    if isinstance(x, DualScalar):
        return x.grad
    return np.zeros(3)
