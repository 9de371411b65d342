"""Degenerate poly-Frobenius-Genocchi families.

All values are computed generating-function first: build the series, then
read off EGF coefficients.  The convolution formulas of the theory live in
:mod:`degfg.audit` as claims to check, never as the computation path.

The common prefactor is

    (1 - u) Ei_{k,lam}(log_lam(1 + t)) / (e_lam(t) - u)

and each family multiplies it by an exponential-type factor.  The helper
families H_{n,lam}(x,u), G_{n,lam}(x) and FG_{n,lam}(x,u) are the degenerate
analogs of the classical Frobenius-Euler, Genocchi and Frobenius-Genocchi
polynomials (``e^t`` replaced by ``e_lam(t)``, ``e^(xt)`` by ``e_lam^x(t)``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .arith import GaussianRational
from .series import Series, compose, default_order, egf_coeff, reciprocal
from .special import (
    cos_deg_series,
    deg_exp_series,
    deg_falling,
    deg_log_series,
    deg_polyexp_series,
    require_lambda,
    require_u,
    sin_deg_series,
)


def _order(n: int, order: int | None) -> int:
    return default_order(n) if order is None else order


@lru_cache(maxsize=None, typed=True)
def ei_of_log(k: int, lam: Fraction, order: int) -> Series:
    """``Ei_{k,lam}(log_lam(1 + t))``."""
    return compose(deg_polyexp_series(k, lam, order), deg_log_series(lam, order))


@lru_cache(maxsize=None, typed=True)
def frobenius_denominator(u: Fraction, lam: Fraction, order: int) -> Series:
    """``1 / (e_lam(t) - u)``."""
    require_u(u)
    return reciprocal(deg_exp_series(Fraction(1), lam, order) - Series.constant(u, order))


@lru_cache(maxsize=None, typed=True)
def prefactor_series(k: int, u: Fraction, lam: Fraction, order: int) -> Series:
    return (ei_of_log(k, lam, order) * frobenius_denominator(u, lam, order)).scale(1 - u)


# -- helper families -------------------------------------------------------------


@lru_cache(maxsize=None, typed=True)
def frobenius_euler_deg_series(x: Fraction, u: Fraction, lam: Fraction, order: int) -> Series:
    """``(1 - u) e_lam^x(t) / (e_lam(t) - u)``, EGF of H_{n,lam}(x,u)."""
    return (frobenius_denominator(u, lam, order) * deg_exp_series(x, lam, order)).scale(1 - u)


@lru_cache(maxsize=None, typed=True)
def frobenius_genocchi_deg_series(x: Fraction, u: Fraction, lam: Fraction, order: int) -> Series:
    return frobenius_euler_deg_series(x, u, lam, order).shift_up().truncate(order)


@lru_cache(maxsize=None, typed=True)
def genocchi_deg_series(x: Fraction, lam: Fraction, order: int) -> Series:
    """``2t e_lam^x(t) / (e_lam(t) + 1)``."""
    require_lambda(lam)
    den = reciprocal(deg_exp_series(Fraction(1), lam, order) + Series.one(order))
    return (den * deg_exp_series(x, lam, order)).scale(2).shift_up().truncate(order)


def frobenius_euler_deg(n, x, u, lam, order=None) -> Fraction:
    return egf_coeff(frobenius_euler_deg_series(x, u, lam, _order(n, order)), n)


def genocchi_deg(n, x, lam, order=None) -> Fraction:
    return egf_coeff(genocchi_deg_series(x, lam, _order(n, order)), n)


def frobenius_genocchi_deg(n, x, u, lam, order=None) -> Fraction:
    return egf_coeff(frobenius_genocchi_deg_series(x, u, lam, _order(n, order)), n)


def helper_families(n, x, u, lam, order=None) -> dict[str, Fraction]:
    """``H_{n,lam}(x,u)``, ``G_{n,lam}(x)`` and ``FG_{n,lam}(x,u)`` at once."""
    return {
        "frobenius-euler": frobenius_euler_deg(n, x, u, lam, order),
        "genocchi": genocchi_deg(n, x, lam, order),
        "frobenius-genocchi": frobenius_genocchi_deg(n, x, u, lam, order),
    }


# -- poly-Frobenius-Genocchi -------------------------------------------------------


@lru_cache(maxsize=None, typed=True)
def poly_fg_series(k: int, x: Fraction, u: Fraction, lam: Fraction, order: int) -> Series:
    return prefactor_series(k, u, lam, order) * deg_exp_series(x, lam, order)


@lru_cache(maxsize=None, typed=True)
def poly_fg_complex_series(k: int, x: Fraction, y: Fraction, u: Fraction, lam: Fraction, order: int) -> Series:
    """Generating function at the complex argument ``x + iy`` (Gaussian ring)."""
    z = GaussianRational(x, y)
    return prefactor_series(k, u, lam, order).to_gaussian() * deg_exp_series(z, lam, order)


@lru_cache(maxsize=None, typed=True)
def poly_fg_cos_series(k: int, x: Fraction, y: Fraction, u: Fraction, lam: Fraction, order: int) -> Series:
    return poly_fg_series(k, x, u, lam, order) * cos_deg_series(y, lam, order)


@lru_cache(maxsize=None, typed=True)
def poly_fg_sin_series(k: int, x: Fraction, y: Fraction, u: Fraction, lam: Fraction, order: int) -> Series:
    return poly_fg_series(k, x, u, lam, order) * sin_deg_series(y, lam, order)


def poly_fg(n, k, x, u, lam, order=None) -> Fraction:
    return egf_coeff(poly_fg_series(k, x, u, lam, _order(n, order)), n)


def poly_fg_complex(n, k, x, y, u, lam, order=None) -> GaussianRational:
    return egf_coeff(poly_fg_complex_series(k, x, y, u, lam, _order(n, order)), n)


def poly_fg_cos(n, k, x, y, u, lam, order=None) -> Fraction:
    return egf_coeff(poly_fg_cos_series(k, x, y, u, lam, _order(n, order)), n)


def poly_fg_sin(n, k, x, y, u, lam, order=None) -> Fraction:
    return egf_coeff(poly_fg_sin_series(k, x, y, u, lam, _order(n, order)), n)


# -- two-parametric C/S polynomials ------------------------------------------------


@lru_cache(maxsize=None, typed=True)
def c_poly_series(x: Fraction, y: Fraction, lam: Fraction, order: int) -> Series:
    return deg_exp_series(x, lam, order) * cos_deg_series(y, lam, order)


@lru_cache(maxsize=None, typed=True)
def s_poly_series(x: Fraction, y: Fraction, lam: Fraction, order: int) -> Series:
    return deg_exp_series(x, lam, order) * sin_deg_series(y, lam, order)


def c_poly(n, x, y, lam, order=None) -> Fraction:
    return egf_coeff(c_poly_series(x, y, lam, _order(n, order)), n)


def s_poly(n, x, y, lam, order=None) -> Fraction:
    return egf_coeff(s_poly_series(x, y, lam, _order(n, order)), n)


def _imaginary_falling_sum(j: int, y, lam, sign: int) -> GaussianRational:
    # (iy)_{j,lam} + sign * (-iy)_{j,lam}
    iy = GaussianRational(0, y)
    return deg_falling(iy, j, lam) + sign * deg_falling(-iy, j, lam)


def c_poly_closed(n, x, y, lam) -> Fraction:
    """Binomial-convolution closed form of ``C_{n,lam}(x, y)``."""
    require_lambda(lam)
    total = sum(
        (comb(n, k) * deg_falling(x, n - k, lam) * _imaginary_falling_sum(k, y, lam, +1) for k in range(n + 1)),
        GaussianRational(0),
    )
    value = total / 2
    if not value.is_real():
        raise ArithmeticError("closed form of C has an imaginary residue")
    return value.re


def s_poly_closed(n, x, y, lam) -> Fraction:
    require_lambda(lam)
    total = sum(
        (comb(n, k) * deg_falling(x, n - k, lam) * _imaginary_falling_sum(k, y, lam, -1) for k in range(n + 1)),
        GaussianRational(0),
    )
    value = total / GaussianRational(0, 2)
    if not value.is_real():
        raise ArithmeticError("closed form of S has an imaginary residue")
    return value.re
