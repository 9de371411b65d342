"""Truncated formal power series with exact coefficients.

A :class:`Series` holds ordinary coefficients ``c_0..c_N`` of
``sum c_n t^n`` over one of two rings, ``"rational"`` or ``"gaussian"``.
Binary operations truncate to the smaller of the two orders.  Moving
between the rings is always explicit (:meth:`Series.to_gaussian`,
:meth:`Series.real_part`, :meth:`Series.imag_part`).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .arith import GaussianRational, Scalar

RATIONAL = "rational"
GAUSSIAN = "gaussian"


class RingMismatchError(TypeError):
    pass


class NonUnitError(ZeroDivisionError):
    pass


def default_order(n_max: int) -> int:
    """Truncation order used for a request of indices up to ``n_max``."""
    return 2 * n_max + 2


def _coerce(value, ring: str):
    if ring == RATIONAL:
        if isinstance(value, GaussianRational):
            raise RingMismatchError("Gaussian coefficient in a rational series")
        return Fraction(value)
    if ring == GAUSSIAN:
        return GaussianRational.coerce(value)
    raise ValueError(f"unknown ring {ring!r}")


class Series:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Scalar], ring: str = RATIONAL, order: int | None = None):
        cs = [_coerce(c, ring) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            zero = _coerce(0, ring)
            cs = cs[: order + 1] + [zero] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple = tuple(cs)
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: Sequence, ring: str) -> Series:
        # trusted constructor: coefficients already live in the ring
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.ring = ring
        return obj

    @classmethod
    def constant(cls, c: Scalar, order: int, ring: str = RATIONAL) -> Series:
        return cls([c], ring, order)

    @classmethod
    def zero(cls, order: int, ring: str = RATIONAL) -> Series:
        return cls([0], ring, order)

    @classmethod
    def one(cls, order: int, ring: str = RATIONAL) -> Series:
        return cls([1], ring, order)

    @classmethod
    def t(cls, order: int, ring: str = RATIONAL) -> Series:
        return cls([0, 1], ring, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, ring={self.ring!r})"

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series._raw(self.coeffs[: order + 1], self.ring)

    def _check(self, other: Series) -> int:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        return min(self.order, other.order)

    # -- ring changes ---------------------------------------------------------

    def to_gaussian(self) -> Series:
        if self.ring == GAUSSIAN:
            return self
        return Series._raw([GaussianRational(c) for c in self.coeffs], GAUSSIAN)

    def real_part(self) -> Series:
        if self.ring != GAUSSIAN:
            raise RingMismatchError("real_part needs a Gaussian series")
        return Series._raw([c.re for c in self.coeffs], RATIONAL)

    def imag_part(self) -> Series:
        if self.ring != GAUSSIAN:
            raise RingMismatchError("imag_part needs a Gaussian series")
        return Series._raw([c.im for c in self.coeffs], RATIONAL)

    def conj(self) -> Series:
        if self.ring != GAUSSIAN:
            return self
        return Series._raw([c.conj() for c in self.coeffs], GAUSSIAN)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = self._check(other)
        return Series._raw([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.ring)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = self._check(other)
        return Series._raw([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], self.ring)

    def __neg__(self):
        return Series._raw([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Series):
            return mul(other, self)
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return mul(self, reciprocal(other))
        return self.scale(1 / Fraction(other) if not isinstance(other, GaussianRational) else other.inv())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Series.one(self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def scale(self, c: Scalar) -> Series:
        if isinstance(c, GaussianRational) and self.ring == RATIONAL:
            raise RingMismatchError("Gaussian scalar on a rational series; lift it first")
        return Series._raw([x * c for x in self.coeffs], self.ring)

    def shift_up(self) -> Series:
        """Multiply by ``t``.  The order grows by one."""
        zero = _coerce(0, self.ring)
        return Series._raw((zero,) + self.coeffs, self.ring)

    def shift_down(self) -> Series:
        """Divide by ``t``; needs ``c_0 == 0``.  The order drops by one."""
        if self.coeffs[0] != 0:
            raise ValueError("shift_down needs a zero constant term")
        if self.order == 0:
            raise ValueError("shift_down of an order-0 series")
        return Series._raw(self.coeffs[1:], self.ring)

    def egf(self) -> list:
        """All EGF coefficients ``n! c_n``."""
        return [factorial(n) * c for n, c in enumerate(self.coeffs)]


def add(f: Series, g: Series) -> Series:
    return f + g


def mul(f: Series, g: Series) -> Series:
    """Cauchy product."""
    n = f._check(g)
    a, b = f.coeffs, g.coeffs
    zero = _coerce(0, f.ring)
    out = []
    for k in range(n + 1):
        s = zero
        for j in range(k + 1):
            aj = a[j]
            if aj:
                bk = b[k - j]
                if bk:
                    s = s + aj * bk
        out.append(s)
    return Series._raw(out, f.ring)


def reciprocal(f: Series) -> Series:
    c0 = f.coeffs[0]
    if c0 == 0:
        raise NonUnitError("reciprocal of a series with zero constant term")
    inv0 = 1 / c0
    a = f.coeffs
    out = [inv0]
    for k in range(1, f.order + 1):
        s = _coerce(0, f.ring)
        for j in range(1, k + 1):
            if a[j]:
                s = s + a[j] * out[k - j]
        out.append(-s * inv0)
    return Series._raw(out, f.ring)


def compose(f: Series, g: Series) -> Series:
    """``f(g(t))`` by Horner's scheme; ``g`` must have zero constant term."""
    n = f._check(g)
    if g.coeffs[0] != 0:
        raise ValueError("compose needs an inner series with zero constant term")
    g = g.truncate(n)
    result = Series.constant(f.coeffs[n], n, f.ring)
    for j in range(n - 1, -1, -1):
        result = mul(result, g)
        result = Series._raw((result.coeffs[0] + f.coeffs[j],) + result.coeffs[1:], f.ring)
    return result


def differentiate(f: Series) -> Series:
    """Termwise ``d/dt``.  The order drops by one, since ``c_{N+1}`` is unknown."""
    if f.order == 0:
        raise ValueError("derivative of an order-0 series is not determined")
    return Series._raw([k * f.coeffs[k] for k in range(1, f.order + 1)], f.ring)


def integrate(f: Series) -> Series:
    """Termwise antiderivative with zero constant.  The order grows by one."""
    zero = _coerce(0, f.ring)
    return Series._raw([zero] + [f.coeffs[k] / (k + 1) for k in range(f.order + 1)], f.ring)


def egf_coeff(f: Series, n: int):
    """``n! c_n``, the coefficient of ``t^n/n!``."""
    if n < 0 or n > f.order:
        raise IndexError(f"index {n} out of range for a series of order {f.order}")
    return factorial(n) * f.coeffs[n]


def from_egf(values: Iterable[Scalar], ring: str = RATIONAL) -> Series:
    """Series whose EGF coefficients are ``values``."""
    return Series([v / factorial(n) for n, v in enumerate(values)], ring)
