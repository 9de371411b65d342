"""Base families: degenerate exponential and logarithm, Stirling numbers,
Bernoulli polynomials of the second kind, polyexponentials, degenerate
cosine/sine, and their classical counterparts.

Every builder returns a :class:`~degfg.series.Series` whose EGF coefficients
are the family values; scalar accessors extract one coefficient.  Degenerate
builders reject ``lam == 0``; classical values come from the separate
``classical_*`` builders, never from plugging in zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arith import GaussianRational, Scalar, format_rational, gen_binomial
from .series import GAUSSIAN, RATIONAL, Series, compose, default_order, egf_coeff, reciprocal


class ParameterError(ValueError):
    """A parameter lies outside the domain of a family (``lam == 0``, ``u == 1``...)."""


def require_lambda(lam) -> None:
    if lam == 0:
        raise ParameterError("lambda must be nonzero for degenerate families")


def require_u(u) -> None:
    if u == 1:
        raise ParameterError("u must differ from 1")


@dataclass(frozen=True)
class ParamSet:
    """An evaluation point.

    ``x2`` and ``y2`` are the second point used by the addition formulas;
    every other builder ignores them.
    """

    lam: Fraction = Fraction(1, 2)
    u: Fraction = Fraction(-1)
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    k: int = 1
    n_max: int = 10
    x2: Fraction = field(default=Fraction(0))
    y2: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        for name in ("lam", "u", "x", "y", "x2", "y2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def with_(self, **changes) -> ParamSet:
        return replace(self, **changes)

    def validate(self, degenerate: bool = True, frobenius: bool = True) -> None:
        if degenerate:
            require_lambda(self.lam)
        if frobenius:
            require_u(self.u)
        if self.n_max < 0:
            raise ParameterError("n_max must be nonnegative")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "lambda": format_rational(self.lam),
            "n_max": self.n_max,
            "u": format_rational(self.u),
            "x": format_rational(self.x),
            "x2": format_rational(self.x2),
            "y": format_rational(self.y),
            "y2": format_rational(self.y2),
        }


# -- scalars -------------------------------------------------------------------


def deg_falling(x: Scalar, n: int, lam: Scalar) -> Scalar:
    """``(x)_{n,lam} = x (x - lam) ... (x - (n-1) lam)``."""
    prod: Scalar = Fraction(1)
    for j in range(n):
        prod = prod * (x - j * lam)
    return prod


def falling(t: Scalar, n: int) -> Scalar:
    prod: Scalar = Fraction(1)
    for j in range(n):
        prod = prod * (t - j)
    return prod


def _ring_of(x) -> str:
    return GAUSSIAN if isinstance(x, GaussianRational) else RATIONAL


# -- degenerate builders -------------------------------------------------------


@lru_cache(maxsize=None, typed=True)
def deg_exp_series(x: Scalar, lam: Fraction, order: int) -> Series:
    """``e_lam^x(t) = (1 + lam t)^(x/lam)``; Gaussian ``x`` gives a Gaussian series."""
    require_lambda(lam)
    cs = [Fraction(1)]
    for n in range(1, order + 1):
        cs.append(cs[-1] * (x - (n - 1) * lam) / n)
    return Series(cs, _ring_of(x))


@lru_cache(maxsize=None, typed=True)
def deg_log_series(lam: Fraction, order: int) -> Series:
    """``log_lam(1 + t) = ((1 + t)^lam - 1) / lam``."""
    require_lambda(lam)
    return Series([0] + [gen_binomial(lam, n) / lam for n in range(1, order + 1)])


@lru_cache(maxsize=None, typed=True)
def binomial_series(x: Scalar, order: int) -> Series:
    """Formal ``(1 + t)^x`` for any rational ``x``."""
    return Series([gen_binomial(x, n) for n in range(order + 1)], _ring_of(x))


@lru_cache(maxsize=None, typed=True)
def stirling1_deg_series(k: int, lam: Fraction, order: int) -> Series:
    """``log_lam(1 + t)^k / k!``; EGF coefficients are ``S_{1,lam}(n, k)``."""
    if k < 0:
        raise ParameterError("Stirling index k must be nonnegative")
    return (deg_log_series(lam, order) ** k).scale(Fraction(1, factorial(k)))


@lru_cache(maxsize=None, typed=True)
def stirling2_deg_poly_series(k: int, x: Fraction, lam: Fraction, order: int) -> Series:
    """``(e_lam(t) - 1)^k / k! * e_lam^x(t)``."""
    if k < 0:
        raise ParameterError("Stirling index k must be nonnegative")
    e1 = deg_exp_series(Fraction(1), lam, order) - Series.one(order)
    return (e1**k).scale(Fraction(1, factorial(k))) * deg_exp_series(x, lam, order)


def stirling2_deg_series(k: int, lam: Fraction, order: int) -> Series:
    return stirling2_deg_poly_series(k, Fraction(0), lam, order)


def stirling1_deg(n: int, k: int, lam: Fraction) -> Fraction:
    if n < k:
        return Fraction(0)
    return egf_coeff(stirling1_deg_series(k, lam, n), n)


def stirling2_deg(n: int, k: int, lam: Fraction) -> Fraction:
    if n < k:
        return Fraction(0)
    return egf_coeff(stirling2_deg_series(k, lam, n), n)


def stirling2_deg_poly(n: int, k: int, x: Fraction, lam: Fraction) -> Fraction:
    if n < k:
        return Fraction(0)
    return egf_coeff(stirling2_deg_poly_series(k, x, lam, n), n)


@lru_cache(maxsize=None, typed=True)
def bernoulli2_deg_series(x: Scalar, lam: Fraction, order: int) -> Series:
    """``t / log_lam(1 + t) * (1 + t)^x``."""
    require_lambda(lam)
    prefactor = reciprocal(deg_log_series(lam, order + 1).shift_down())
    return prefactor * binomial_series(x, order)


def bernoulli2_deg(n: int, x: Scalar, lam: Fraction, order: int | None = None):
    return egf_coeff(bernoulli2_deg_series(x, lam, default_order(n) if order is None else order), n)


def _polyexp_coeff(n: int, k: int) -> Fraction:
    # 1 / (n^k (n-1)!); negative k multiplies by n^|k|
    return 1 / (Fraction(n) ** k * factorial(n - 1))


@lru_cache(maxsize=None, typed=True)
def polyexp_series(k: int, order: int) -> Series:
    """Classical polyexponential ``Ei_k``."""
    return Series([0] + [_polyexp_coeff(n, k) for n in range(1, order + 1)])


@lru_cache(maxsize=None, typed=True)
def deg_polyexp_series(k: int, lam: Fraction, order: int) -> Series:
    """Modified degenerate polyexponential ``Ei_{k,lam}``."""
    require_lambda(lam)
    return Series([0] + [deg_falling(Fraction(1), n, lam) * _polyexp_coeff(n, k) for n in range(1, order + 1)])


def _real_projection(s: Series, what: str) -> Series:
    if any(c.im != 0 for c in s.coeffs):
        raise ArithmeticError(f"{what}: nonzero imaginary residue")
    return s.real_part()


@lru_cache(maxsize=None, typed=True)
def cos_deg_series(y: Fraction, lam: Fraction, order: int) -> Series:
    """``cos_lam^(y)(t)``, the real part of ``e_lam^(iy)(t)``."""
    plus = deg_exp_series(GaussianRational(0, y), lam, order)
    minus = deg_exp_series(GaussianRational(0, -y), lam, order)
    return _real_projection((plus + minus).scale(Fraction(1, 2)), "degenerate cosine")


@lru_cache(maxsize=None, typed=True)
def sin_deg_series(y: Fraction, lam: Fraction, order: int) -> Series:
    plus = deg_exp_series(GaussianRational(0, y), lam, order)
    minus = deg_exp_series(GaussianRational(0, -y), lam, order)
    return _real_projection((plus - minus).scale(GaussianRational(0, Fraction(-1, 2))), "degenerate sine")


# -- classical builders --------------------------------------------------------


@lru_cache(maxsize=None, typed=True)
def exp_series(x: Scalar, order: int) -> Series:
    """``e^(x t)``."""
    cs = [Fraction(1)]
    for n in range(1, order + 1):
        cs.append(cs[-1] * x / n)
    return Series(cs, _ring_of(x))


@lru_cache(maxsize=None, typed=True)
def log1p_series(order: int) -> Series:
    return Series([0] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)])


@lru_cache(maxsize=None, typed=True)
def cos_series(y: Fraction, order: int) -> Series:
    return exp_series(GaussianRational(0, y), order).real_part()


@lru_cache(maxsize=None, typed=True)
def sin_series(y: Fraction, order: int) -> Series:
    return exp_series(GaussianRational(0, y), order).imag_part()


def _frobenius_denominator(u: Fraction, order: int) -> Series:
    require_u(u)
    return reciprocal(exp_series(Fraction(1), order) - Series.constant(u, order))


@lru_cache(maxsize=None, typed=True)
def classical_frobenius_euler_series(x: Fraction, u: Fraction, order: int) -> Series:
    """``(1 - u) / (e^t - u) * e^(x t)``."""
    return _frobenius_denominator(u, order).scale(1 - u) * exp_series(x, order)


@lru_cache(maxsize=None, typed=True)
def classical_frobenius_genocchi_series(x: Fraction, u: Fraction, order: int) -> Series:
    return classical_frobenius_euler_series(x, u, order).shift_up().truncate(order)


@lru_cache(maxsize=None, typed=True)
def classical_genocchi_series(x: Fraction, order: int) -> Series:
    """``2t / (e^t + 1) * e^(x t)``."""
    den = reciprocal(exp_series(Fraction(1), order) + Series.one(order))
    return (den * exp_series(x, order)).scale(2).shift_up().truncate(order)


@lru_cache(maxsize=None, typed=True)
def classical_stirling1_series(k: int, order: int) -> Series:
    if k < 0:
        raise ParameterError("Stirling index k must be nonnegative")
    return (log1p_series(order) ** k).scale(Fraction(1, factorial(k)))


@lru_cache(maxsize=None, typed=True)
def classical_stirling2_poly_series(k: int, x: Fraction, order: int) -> Series:
    if k < 0:
        raise ParameterError("Stirling index k must be nonnegative")
    e1 = exp_series(Fraction(1), order) - Series.one(order)
    return (e1**k).scale(Fraction(1, factorial(k))) * exp_series(x, order)


@lru_cache(maxsize=None, typed=True)
def classical_bernoulli2_series(x: Fraction, order: int) -> Series:
    """``t / log(1 + t) * (1 + t)^x``."""
    return reciprocal(log1p_series(order + 1).shift_down()) * binomial_series(x, order)


@lru_cache(maxsize=None, typed=True)
def classical_poly_fg_prefactor(k: int, u: Fraction, order: int) -> Series:
    """``(1 - u) Ei_k(log(1 + t)) / (e^t - u)``."""
    ei = compose(polyexp_series(k, order), log1p_series(order))
    return (ei * _frobenius_denominator(u, order)).scale(1 - u)
