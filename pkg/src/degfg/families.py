"""Registry of every family by its stable kebab-case id.

Each entry knows how to build its generating series at a :class:`ParamSet`;
the value at index ``n`` is always the ``n``-th EGF coefficient.  Degenerate
families also name their classical (``lam -> 0``) counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import polyfg as pf
from . import special as sp
from .arith import GaussianRational, Scalar
from .series import Series, default_order, egf_coeff


@dataclass(frozen=True)
class Family:
    id: str
    build: Callable[[sp.ParamSet, int], Series]
    degenerate: bool
    uses: frozenset  # which of lam/u/x/y/k matter
    classical: str | None = None
    description: str = ""

    def series(self, params: sp.ParamSet, order: int | None = None) -> Series:
        if order is None:
            order = default_order(params.n_max)
        if self.degenerate:
            sp.require_lambda(params.lam)
        if "u" in self.uses:
            sp.require_u(params.u)
        return self.build(params, order)

    def value(self, n: int, params: sp.ParamSet, order: int | None = None) -> Scalar:
        return egf_coeff(self.series(params, default_order(n) if order is None else order), n)

    def values(self, params: sp.ParamSet, order: int | None = None) -> list:
        """EGF values for ``n = 0..params.n_max``."""
        s = self.series(params, order)
        return [egf_coeff(s, n) for n in range(params.n_max + 1)]


def _classical_poly_fg(p, o):
    return sp.classical_poly_fg_prefactor(p.k, p.u, o) * sp.exp_series(p.x, o)


def _classical_poly_fg_complex(p, o):
    return sp.classical_poly_fg_prefactor(p.k, p.u, o).to_gaussian() * sp.exp_series(GaussianRational(p.x, p.y), o)


_DEFS = [
    # degenerate base families
    Family("deg-falling", lambda p, o: sp.deg_exp_series(p.x, p.lam, o), True, frozenset("lx"),
           "classical-exp", "(x)_{n,lam}"),
    Family("deg-exp-series", lambda p, o: sp.deg_exp_series(p.x, p.lam, o), True, frozenset("lx"),
           "classical-exp", "e_lam^x(t)"),
    Family("deg-log-series", lambda p, o: sp.deg_log_series(p.lam, o), True, frozenset("l"),
           "classical-log", "log_lam(1+t)"),
    Family("stirling1-deg", lambda p, o: sp.stirling1_deg_series(p.k, p.lam, o), True, frozenset("lk"),
           "classical-stirling1", "S_{1,lam}(n,k)"),
    Family("stirling2-deg", lambda p, o: sp.stirling2_deg_series(p.k, p.lam, o), True, frozenset("lk"),
           "classical-stirling2", "S_{2,lam}(n,k)"),
    Family("stirling2-deg-poly", lambda p, o: sp.stirling2_deg_poly_series(p.k, p.x, p.lam, o), True,
           frozenset("lkx"), "classical-stirling2-poly", "S_{2,lam}^(x)(n,k)"),
    Family("bernoulli2-deg", lambda p, o: sp.bernoulli2_deg_series(p.x, p.lam, o), True, frozenset("lx"),
           "classical-bernoulli2", "b_{n,lam}(x)"),
    Family("deg-polyexp-series", lambda p, o: sp.deg_polyexp_series(p.k, p.lam, o), True, frozenset("lk"),
           "polyexp-series", "Ei_{k,lam}"),
    Family("cos-deg-series", lambda p, o: sp.cos_deg_series(p.y, p.lam, o), True, frozenset("ly"),
           "classical-cos", "cos_lam^(y)(t)"),
    Family("sin-deg-series", lambda p, o: sp.sin_deg_series(p.y, p.lam, o), True, frozenset("ly"),
           "classical-sin", "sin_lam^(y)(t)"),
    # degenerate helper families and the new families
    Family("frobenius-euler-deg", lambda p, o: pf.frobenius_euler_deg_series(p.x, p.u, p.lam, o), True,
           frozenset("lux"), "classical-frobenius-euler", "H_{n,lam}(x,u)"),
    Family("genocchi-deg", lambda p, o: pf.genocchi_deg_series(p.x, p.lam, o), True, frozenset("lx"),
           "classical-genocchi", "G_{n,lam}(x)"),
    Family("frobenius-genocchi-deg", lambda p, o: pf.frobenius_genocchi_deg_series(p.x, p.u, p.lam, o), True,
           frozenset("lux"), "classical-frobenius-genocchi", "FG_{n,lam}(x,u)"),
    Family("poly-fg", lambda p, o: pf.poly_fg_series(p.k, p.x, p.u, p.lam, o), True, frozenset("lukx"),
           "classical-poly-fg", "FG_{n,lam}^(k)(x,u)"),
    Family("poly-fg-complex", lambda p, o: pf.poly_fg_complex_series(p.k, p.x, p.y, p.u, p.lam, o), True,
           frozenset("lukxy"), "classical-poly-fg-complex", "FG_{n,lam}^(k)(x+iy;u)"),
    Family("poly-fg-cos", lambda p, o: pf.poly_fg_cos_series(p.k, p.x, p.y, p.u, p.lam, o), True,
           frozenset("lukxy"), "classical-poly-fg-cos", "FG_{n,lam}^[k,c](x,y;u)"),
    Family("poly-fg-sin", lambda p, o: pf.poly_fg_sin_series(p.k, p.x, p.y, p.u, p.lam, o), True,
           frozenset("lukxy"), "classical-poly-fg-sin", "FG_{n,lam}^[k,s](x,y;u)"),
    Family("c-poly", lambda p, o: pf.c_poly_series(p.x, p.y, p.lam, o), True, frozenset("lxy"),
           "classical-c", "C_{n,lam}(x,y)"),
    Family("s-poly", lambda p, o: pf.s_poly_series(p.x, p.y, p.lam, o), True, frozenset("lxy"),
           "classical-s", "S_{n,lam}(x,y)"),
    # classical families
    Family("falling", lambda p, o: sp.binomial_series(p.x, o), False, frozenset("x"), None, "(x)_n"),
    Family("polyexp-series", lambda p, o: sp.polyexp_series(p.k, o), False, frozenset("k"), None, "Ei_k"),
    Family("classical-exp", lambda p, o: sp.exp_series(p.x, o), False, frozenset("x"), None, "x^n"),
    Family("classical-log", lambda p, o: sp.log1p_series(o), False, frozenset(), None, "log(1+t)"),
    Family("classical-stirling1", lambda p, o: sp.classical_stirling1_series(p.k, o), False, frozenset("k"),
           None, "S_1(n,k), signed"),
    Family("classical-stirling2", lambda p, o: sp.classical_stirling2_poly_series(p.k, Fraction(0), o), False,
           frozenset("k"), None, "S_2(n,k)"),
    Family("classical-stirling2-poly", lambda p, o: sp.classical_stirling2_poly_series(p.k, p.x, o), False,
           frozenset("kx"), None, "S_2^(x)(n,k)"),
    Family("classical-bernoulli2", lambda p, o: sp.classical_bernoulli2_series(p.x, o), False, frozenset("x"),
           None, "b_n(x)"),
    Family("classical-cos", lambda p, o: sp.cos_series(p.y, o), False, frozenset("y"), None, "cos(yt)"),
    Family("classical-sin", lambda p, o: sp.sin_series(p.y, o), False, frozenset("y"), None, "sin(yt)"),
    Family("classical-frobenius-euler", lambda p, o: sp.classical_frobenius_euler_series(p.x, p.u, o), False,
           frozenset("ux"), None, "H_n(x;u)"),
    Family("classical-genocchi", lambda p, o: sp.classical_genocchi_series(p.x, o), False, frozenset("x"),
           None, "G_n(x)"),
    Family("classical-frobenius-genocchi", lambda p, o: sp.classical_frobenius_genocchi_series(p.x, p.u, o),
           False, frozenset("ux"), None, "FG_n(x,u)"),
    Family("classical-poly-fg", _classical_poly_fg, False, frozenset("ukx"), None, "FG_n^(k)(x,u)"),
    Family("classical-poly-fg-complex", _classical_poly_fg_complex, False, frozenset("ukxy"), None,
           "FG_n^(k)(x+iy;u)"),
    Family("classical-poly-fg-cos", lambda p, o: _classical_poly_fg(p, o) * sp.cos_series(p.y, o), False,
           frozenset("ukxy"), None, "FG_n^[k,c](x,y;u)"),
    Family("classical-poly-fg-sin", lambda p, o: _classical_poly_fg(p, o) * sp.sin_series(p.y, o), False,
           frozenset("ukxy"), None, "FG_n^[k,s](x,y;u)"),
    Family("classical-c", lambda p, o: sp.exp_series(p.x, o) * sp.cos_series(p.y, o), False, frozenset("xy"),
           None, "C_n(x,y)"),
    Family("classical-s", lambda p, o: sp.exp_series(p.x, o) * sp.sin_series(p.y, o), False, frozenset("xy"),
           None, "S_n(x,y)"),
]

FAMILIES: dict[str, Family] = {f.id: f for f in _DEFS}
FAMILY_IDS = tuple(sorted(FAMILIES))
DEGENERATE_IDS = tuple(f for f in FAMILY_IDS if FAMILIES[f].degenerate)


def get(family: str) -> Family:
    try:
        return FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}") from None


def classical_family(family: str, n: int, params: sp.ParamSet) -> Scalar:
    """Classical value at index ``n``.

    ``family`` is either a classical id or a degenerate id, in which case its
    classical counterpart is used.
    """
    fam = get(family)
    if fam.degenerate:
        if fam.classical is None:
            raise ValueError(f"{family} has no classical counterpart")
        fam = get(fam.classical)
    return fam.value(n, params)
