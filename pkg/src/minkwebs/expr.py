"""Tiny expression AST for chart formulas.

Charts are data: each forward-map / metric component is stored as a small
expression tree over the variables (u, v, w), the web parameters (a, b, c)
and a fixed function basis (polynomial, exp, trig, hyperbolic, Jacobi
family).  One tree drives plain evaluation, dual-number differentiation and
prefix-notation serialization.

Trees are built with ordinary Python operators::

    U, V, W = var("u"), var("v"), var("w")
    A = param("a")
    formula = W * jac("sc", U, A) * jac("dn", V, A)
"""
from __future__ import annotations

from . import dmath
from .elliptic import JACOBI_NAMES

__all__ = ["Expr", "var", "param", "const", "fn", "jac", "select",
           "U", "V", "W", "PA", "PB", "PC"]


class Expr:
    """Base expression node.  Subclasses implement ev() and prefix()."""

    def ev(self, env: dict):
        raise NotImplementedError

    def prefix(self):
        raise NotImplementedError

    # -- operator sugar -----------------------------------------------------
    @staticmethod
    def _wrap(x) -> "Expr":
        if isinstance(x, Expr):
            return x
        return Const(float(x))

    def __add__(self, o):
        return Op("+", self, Expr._wrap(o))

    def __radd__(self, o):
        return Op("+", Expr._wrap(o), self)

    def __sub__(self, o):
        return Op("-", self, Expr._wrap(o))

    def __rsub__(self, o):
        return Op("-", Expr._wrap(o), self)

    def __mul__(self, o):
        return Op("*", self, Expr._wrap(o))

    def __rmul__(self, o):
        return Op("*", Expr._wrap(o), self)

    def __truediv__(self, o):
        return Op("/", self, Expr._wrap(o))

    def __rtruediv__(self, o):
        return Op("/", Expr._wrap(o), self)

    def __pow__(self, n):
        return Pow(self, float(n))

    def __neg__(self):
        return Neg(self)


class Const(Expr):
    __slots__ = ("value",)

    def __init__(self, value: float):
        self.value = float(value)

    def ev(self, env):
        return self.value

    def prefix(self):
        return self.value


class Var(Expr):
    """A separable coordinate u, v or w."""
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def ev(self, env):
        return env[self.name]

    def prefix(self):
        return self.name


class Param(Expr):
    """A web parameter (a, b or c); always a plain float in the environment."""
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def ev(self, env):
        return env[self.name]

    def prefix(self):
        return self.name


class Op(Expr):
    __slots__ = ("op", "lhs", "rhs")

    def __init__(self, op: str, lhs: Expr, rhs: Expr):
        self.op = op
        self.lhs = lhs
        self.rhs = rhs

    def ev(self, env):
        l = self.lhs.ev(env)
        r = self.rhs.ev(env)
        if self.op == "+":
            return l + r
        if self.op == "-":
            return l - r
        if self.op == "*":
            return l * r
        return l / r

    def prefix(self):
        return [self.op, self.lhs.prefix(), self.rhs.prefix()]


class Neg(Expr):
    __slots__ = ("arg",)

    def __init__(self, arg: Expr):
        self.arg = arg

    def ev(self, env):
        return -self.arg.ev(env)

    def prefix(self):
        return ["neg", self.arg.prefix()]


class Pow(Expr):
    __slots__ = ("base", "exponent")

    def __init__(self, base: Expr, exponent: float):
        self.base = base
        self.exponent = exponent

    def ev(self, env):
        return self.base.ev(env) ** self.exponent

    def prefix(self):
        return ["pow", self.base.prefix(), self.exponent]


class Fn(Expr):
    """One-argument function node from the fixed basis."""
    __slots__ = ("name", "arg")

    def __init__(self, name: str, arg: Expr):
        if name not in dmath.FUNCTIONS:
            raise ValueError(f"unknown function {name!r}")
        self.name = name
        self.arg = arg

    def ev(self, env):
        return dmath.FUNCTIONS[self.name](self.arg.ev(env))

    def prefix(self):
        return [self.name, self.arg.prefix()]


class Select(Expr):
    """Pick one of two formulas based on which guard value is larger.

    Evaluates ``if_ge`` when guard_a >= guard_b, otherwise ``if_lt``.  Only
    the chosen branch is evaluated, so the other branch may be undefined
    (e.g. the square root of a quantity that went slightly negative through
    rounding) on the part of the domain where it is not used.  The two
    branches must agree analytically wherever both are defined; the guard
    exists purely to route evaluation through the better-conditioned form.
    """
    __slots__ = ("guard_a", "guard_b", "if_ge", "if_lt")

    def __init__(self, guard_a: Expr, guard_b: Expr, if_ge: Expr, if_lt: Expr):
        self.guard_a = guard_a
        self.guard_b = guard_b
        self.if_ge = if_ge
        self.if_lt = if_lt

    def ev(self, env):
        ga = self.guard_a.ev(env)
        gb = self.guard_b.ev(env)
        if hasattr(ga, "val"):
            ga = ga.val
        if hasattr(gb, "val"):
            gb = gb.val
        if ga >= gb:
            return self.if_ge.ev(env)
        return self.if_lt.ev(env)

    def prefix(self):
        return ["select", self.guard_a.prefix(), self.guard_b.prefix(),
                self.if_ge.prefix(), self.if_lt.prefix()]


class Jac(Expr):
    """Jacobi elliptic function node: name(argument; modulus)."""
    __slots__ = ("name", "arg", "modulus")

    def __init__(self, name: str, arg: Expr, modulus: Expr):
        if name not in JACOBI_NAMES:
            raise ValueError(f"unknown Jacobi function {name!r}")
        self.name = name
        self.arg = arg
        self.modulus = modulus

    def ev(self, env):
        m = self.modulus.ev(env)
        if hasattr(m, "val"):
            m = m.val
        return dmath.jacobi(self.name, self.arg.ev(env), float(m))

    def prefix(self):
        return [self.name, self.arg.prefix(), self.modulus.prefix()]


def var(name: str) -> Var:
    return Var(name)


def param(name: str) -> Param:
    return Param(name)


def const(x: float) -> Const:
    return Const(x)


def fn(name: str, arg) -> Fn:
    return Fn(name, Expr._wrap(arg))


def jac(name: str, arg, modulus) -> Jac:
    return Jac(name, Expr._wrap(arg), Expr._wrap(modulus))


def select(guard_a, guard_b, if_ge, if_lt) -> Select:
    return Select(Expr._wrap(guard_a), Expr._wrap(guard_b),
                  Expr._wrap(if_ge), Expr._wrap(if_lt))


# Convenience singletons for catalog construction.
U, V, W = Var("u"), Var("v"), Var("w")
PA, PB, PC = Param("a"), Param("b"), Param("c")
