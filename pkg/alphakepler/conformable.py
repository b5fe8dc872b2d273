"""
Conformable arithmetic and the forward-mode differentiation kernel.

Every field in alphakepler is written once against `Num` (a float or a `Jet`),
so the same function yields a value when called with floats and a value plus
exact first partials when called with seeded jets.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import overload

import numpy as np

from .error import DomainError, SingularWeightError
from .types import FloatArray, Num, ScalarField

N_SLOTS = 6

# |x| below this is treated as lying on a coordinate hyperplane
GUARD_BAND = 1e-300


@dataclass(frozen=True, slots=True, eq=False)
class Jet:
    value: float
    partials: FloatArray

    # numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    @staticmethod
    def constant(value: float) -> Jet:
        return Jet(float(value), np.zeros(N_SLOTS))

    @staticmethod
    def variable(value: float, slot: int) -> Jet:
        partials = np.zeros(N_SLOTS)
        partials[slot] = 1.0

        return Jet(float(value), partials)

    def __add__(self, other: Num) -> Jet:
        if isinstance(other, Jet):
            return Jet(self.value + other.value, self.partials + other.partials)

        return Jet(self.value + other, self.partials)

    __radd__ = __add__

    def __neg__(self) -> Jet:
        return Jet(-self.value, -self.partials)

    def __pos__(self) -> Jet:
        return self

    def __sub__(self, other: Num) -> Jet:
        return self + (-other)

    def __rsub__(self, other: Num) -> Jet:
        return (-self) + other

    def __mul__(self, other: Num) -> Jet:
        if isinstance(other, Jet):
            return Jet(
                self.value * other.value,
                self.partials * other.value + other.partials * self.value,
            )

        return Jet(self.value * other, self.partials * other)

    __rmul__ = __mul__

    def __truediv__(self, other: Num) -> Jet:
        if isinstance(other, Jet):
            quotient = self.value / other.value

            return Jet(quotient, (self.partials - quotient * other.partials) / other.value)

        return Jet(self.value / other, self.partials / other)

    def __rtruediv__(self, other: float) -> Jet:
        quotient = other / self.value

        return Jet(quotient, -quotient / self.value * self.partials)

    def __pow__(self, exponent: float) -> Jet:
        if float(exponent).is_integer():
            n = int(exponent)

            if n == 0:
                return Jet.constant(1.0)

            return Jet(self.value**n, n * self.value ** (n - 1) * self.partials)

        if self.value <= 0:
            raise DomainError(f"non-integer power {exponent} of non-positive value")

        value = self.value**exponent

        return Jet(value, exponent * value / self.value * self.partials)

    def __repr__(self) -> str:
        return f"Jet({self.value!r}, {self.partials.tolist()!r})"


def value_of(x: Num) -> float:
    return x.value if isinstance(x, Jet) else float(x)


def seed(x: Sequence[float] | FloatArray) -> list[Jet]:
    if len(x) > N_SLOTS:
        raise ValueError(f"alphakepler: jets carry at most {N_SLOTS} partials, got {len(x)}")

    return [Jet.variable(float(v), slot) for slot, v in enumerate(x)]


def _lift(x: Num, fn: Callable[[float], float], slope: Callable[[float], float]) -> Num:
    if isinstance(x, Jet):
        return Jet(fn(x.value), slope(x.value) * x.partials)

    return fn(float(x))


def sqrt(x: Num) -> Num:
    return _lift(x, math.sqrt, lambda v: 0.5 / math.sqrt(v))


def sin(x: Num) -> Num:
    return _lift(x, math.sin, math.cos)


def cos(x: Num) -> Num:
    return _lift(x, math.cos, lambda v: -math.sin(v))


def exp(x: Num) -> Num:
    return _lift(x, math.exp, math.exp)


def log(x: Num) -> Num:
    return _lift(x, math.log, lambda v: 1.0 / v)


def arcsin(x: Num) -> Num:
    return _lift(x, math.asin, lambda v: 1.0 / math.sqrt(1.0 - v * v))


def _magnitude_power(x: float, beta: float) -> float:
    """|x|^beta, with the guard band as the singular case."""

    if abs(x) < GUARD_BAND:
        if beta < 0:
            raise SingularWeightError(f"weight |x|^{beta} is singular at x = 0")

        return 1.0 if beta == 0 else 0.0

    return abs(x) ** beta


def _magnitude_slope(x: float, beta: float) -> float:
    # d|x|^beta / dx
    if abs(x) < GUARD_BAND:
        if beta == 0 or beta > 1:
            return 0.0

        raise SingularWeightError(f"derivative of |x|^{beta} is singular at x = 0")

    return beta * math.copysign(_magnitude_power(x, beta - 1), x)


def _array_power(x: FloatArray, beta: float) -> FloatArray:
    magnitude = np.abs(x)
    on_plane = magnitude < GUARD_BAND

    if beta < 0 and on_plane.any():
        raise SingularWeightError(f"weight |x|^{beta} is singular on a coordinate hyperplane")

    powered = np.where(on_plane, 1.0, magnitude) ** beta

    return np.where(on_plane, 1.0 if beta == 0 else 0.0, powered)


@overload
def abs_power(x: float, beta: float) -> float: ...


@overload
def abs_power(x: Jet, beta: float) -> Jet: ...


@overload
def abs_power(x: FloatArray, beta: float) -> FloatArray: ...


def abs_power(x: Num | FloatArray, beta: float) -> Num | FloatArray:
    if isinstance(x, np.ndarray):
        return _array_power(x.astype(float), beta)

    if isinstance(x, Jet):
        return Jet(
            _magnitude_power(x.value, beta),
            _magnitude_slope(x.value, beta) * x.partials,
        )

    return _magnitude_power(float(x), beta)


@overload
def spow(x: float, beta: float) -> float: ...


@overload
def spow(x: Jet, beta: float) -> Jet: ...


@overload
def spow(x: FloatArray, beta: float) -> FloatArray: ...


def spow(x: Num | FloatArray, beta: float) -> Num | FloatArray:
    """
    Signed power sign(x)|x|^beta. At x = 0 the result is 0 for beta > 0, and
    a `SingularWeightError` otherwise.
    """

    if not math.isfinite(beta):
        raise DomainError(f"exponent must be finite, got {beta}")

    if beta == 1:
        return x.astype(float) if isinstance(x, np.ndarray) else x

    if isinstance(x, np.ndarray):
        x = x.astype(float)

        if beta <= 0 and (np.abs(x) < GUARD_BAND).any():
            raise SingularWeightError(f"spow(0, {beta}) is singular")

        return np.sign(x) * _array_power(x, beta)

    v = value_of(x)

    if abs(v) < GUARD_BAND and beta <= 0:
        raise SingularWeightError(f"spow(0, {beta}) is singular")

    value = math.copysign(_magnitude_power(v, beta), v) if v else 0.0

    if isinstance(x, Jet):
        if abs(v) < GUARD_BAND:
            if beta < 1:
                raise SingularWeightError(f"derivative of spow(x, {beta}) is singular at x = 0")

            slope = 1.0 if beta == 1 else 0.0

        else:
            slope = beta * _magnitude_power(v, beta - 1)

        return Jet(value, slope * x.partials)

    return value


def check_alpha(alpha: float) -> float:
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"alpha must be a positive finite number, got {alpha}")

    return alpha


@overload
def g_map(z: float, alpha: float) -> float: ...


@overload
def g_map(z: FloatArray, alpha: float) -> FloatArray: ...


def g_map(z: float | FloatArray, alpha: float) -> float | FloatArray:
    return spow(z, check_alpha(alpha))


@overload
def g_inv(z: float, alpha: float) -> float: ...


@overload
def g_inv(z: FloatArray, alpha: float) -> FloatArray: ...


def g_inv(z: float | FloatArray, alpha: float) -> float | FloatArray:
    return spow(z, 1 / check_alpha(alpha))


@overload
def alpha_add(a: float, b: float, alpha: float) -> float: ...


@overload
def alpha_add(a: FloatArray, b: FloatArray, alpha: float) -> FloatArray: ...


def alpha_add(a: float | FloatArray, b: float | FloatArray, alpha: float) -> float | FloatArray:
    return g_inv(g_map(a, alpha) + g_map(b, alpha), alpha)  # type: ignore[operator]


@overload
def alpha_sub(a: float, b: float, alpha: float) -> float: ...


@overload
def alpha_sub(a: FloatArray, b: FloatArray, alpha: float) -> FloatArray: ...


def alpha_sub(a: float | FloatArray, b: float | FloatArray, alpha: float) -> float | FloatArray:
    return g_inv(g_map(a, alpha) - g_map(b, alpha), alpha)  # type: ignore[operator]


def gradient(f: ScalarField, x: Sequence[float] | FloatArray) -> FloatArray:
    result = f(seed(x))

    if isinstance(result, Jet):
        return result.partials[: len(x)].copy()

    return np.zeros(len(x))


def conformable_differential(
    f: ScalarField, x: Sequence[float] | FloatArray, alpha: float
) -> FloatArray:
    """
    Components alpha |x_mu|^(alpha - 1) df/dx_mu of the conformable
    differential in the coordinate cobasis. At alpha = 1 this is the gradient.
    """

    check_alpha(alpha)

    weights = alpha * abs_power(np.asarray(x, dtype=float), alpha - 1)

    return weights * gradient(f, x)


def alpha_distance(dx: Sequence[float] | FloatArray, alpha: float) -> float:
    check_alpha(alpha)

    return float(np.linalg.norm(np.asarray(dx, dtype=float)))
