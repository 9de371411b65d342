"""Exact scalar arithmetic.

Rationals are :class:`fractions.Fraction` (always canonical, arbitrary
precision).  :class:`GaussianRational` adds the imaginary unit on top of it.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction, "GaussianRational"]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (sign on the numerator only)."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """An element ``re + im*i`` of Q(i).  Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        if isinstance(re, GaussianRational) or isinstance(im, GaussianRational):
            raise TypeError("GaussianRational parts must be rational")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value: Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``re+im*i``; ``re-im*i`` and a bare rational are accepted too."""
        s = text.strip().replace(" ", "")
        if not s.endswith("*i"):
            return cls(parse_rational(s), 0)
        body = s[:-2]
        # split at the last sign that is not the leading one
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "+-":
                re_part, im_part = body[:pos], body[pos:]
                if im_part.startswith("+"):
                    im_part = im_part[1:]
                break
        else:
            raise ValueError(f"not a Gaussian rational in re+im*i form: {text!r}")
        return cls(parse_rational(re_part), parse_rational(im_part))

    def __str__(self) -> str:
        im = format_rational(self.im)
        sep = "" if im.startswith("-") else "+"
        return f"{format_rational(self.re)}{sep}{im}*i"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def conj(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """``|z|^2``."""
        return self.re * self.re + self.im * self.im

    def inv(self) -> GaussianRational:
        d = self.norm()
        if d == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / d, -self.im / d)

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return gauss_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return gauss_mul(self, other.inv())
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inv() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** -n
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = gauss_mul(result, base)
            base = gauss_mul(base, base)
            n >>= 1
        return result


I = GaussianRational(0, 1)


def gauss_mul(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def gauss_inv(z: GaussianRational) -> GaussianRational:
    return z.inv()


def format_scalar(value: Scalar) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    return format_rational(value)


def gen_binomial(a: Scalar, n: int) -> Scalar:
    """Generalized binomial coefficient ``a(a-1)...(a-n+1)/n!``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prod: Scalar = Fraction(1)
    for j in range(n):
        prod = prod * (a - j)
    return prod / factorial(n)


def lagrange_eval(nodes: Iterable[tuple[Fraction, Scalar]], at: Fraction) -> Scalar:
    """Value at ``at`` of the polynomial interpolating ``nodes`` exactly.

    Abscissae must be rational; ordinates may be rational or Gaussian.
    """
    pts = [(Fraction(x), y) for x, y in nodes]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate interpolation abscissa")
    total: Scalar = Fraction(0)
    for j, (xj, yj) in enumerate(pts):
        weight = Fraction(1)
        for m, xm in enumerate(xs):
            if m != j:
                weight *= (at - xm) / (xj - xm)
        total = total + yj * weight
    return total


def lagrange_at_zero(nodes: Iterable[tuple[Fraction, Scalar]]) -> Scalar:
    pts = list(nodes)
    if any(Fraction(x) == 0 for x, _ in pts):
        raise ValueError("interpolation abscissae must be nonzero")
    return lagrange_eval(pts, Fraction(0))
