"""Exact audit of the identities satisfied by the families.

Each :class:`IdentityCase` carries one or more variants: the statement as
printed and, where the printed form has index or shift slips, corrected
readings.  A variant is a function returning both sides for ``n = 0..n_max``
at one parameter sample; the verdict is exact equality everywhere.

Agreement is only claimed on the sampled points, never universally.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from . import __version__
from . import polyfg as pf
from . import special as sp
from .arith import GaussianRational, format_scalar, lagrange_at_zero, lagrange_eval
from .families import DEGENERATE_IDS, FAMILIES
from .families import get as get_family
from .series import Series, compose, default_order, differentiate, egf_coeff, integrate
from .special import ParamSet, deg_falling, falling

HOLDS = "holds-exactly"
FAILS = "fails-with-witness"

AS_PRINTED = "as-printed"
CORRECTED = "corrected"

Sides = Callable[[ParamSet, int, int], tuple[list, list]]


@dataclass(frozen=True)
class Variant:
    name: str
    reading: str
    hard: bool
    sides: Sides


@dataclass(frozen=True)
class IdentityCase:
    id: str
    statement: str
    variants: tuple[Variant, ...]
    n_max: int = 10
    params: tuple[ParamSet, ...] = ()
    adjust: Callable[[ParamSet], ParamSet] | None = None
    notes: tuple[str, ...] = ()


@dataclass
class VariantResult:
    name: str
    reading: str
    hard: bool
    verdict: str
    checked: int
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {
            "checked": self.checked,
            "hard": self.hard,
            "name": self.name,
            "reading": self.reading,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class CaseResult:
    id: str
    statement: str
    status: str
    variants: list[VariantResult]
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "notes": list(self.notes),
            "statement": self.statement,
            "status": self.status,
            "variants": [v.to_json() for v in self.variants],
        }


@dataclass
class AuditReport:
    seed: int
    n_max: int
    samples: list[ParamSet]
    cases: list[CaseResult]
    version: str = __version__

    @property
    def hard_failures(self) -> list[str]:
        return [f"{c.id}/{v.name}" for c in self.cases for v in c.variants if v.hard and v.verdict != HOLDS]

    def to_json(self) -> dict:
        return {
            "cases": [c.to_json() for c in self.cases],
            "hard_failures": self.hard_failures,
            "n_max": self.n_max,
            "samples": [p.to_json() for p in self.samples],
            "seed": self.seed,
            "version": self.version,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        lines = [f"identity audit  seed={self.seed}  n_max={self.n_max}  samples={len(self.samples)}"]
        for c in self.cases:
            lines.append(f"{c.id:<28} {c.status}")
            for v in c.variants:
                tag = "hard" if v.hard else "audit"
                line = f"    {v.name:<34} [{v.reading}, {tag}] {v.verdict}"
                if v.witness:
                    w = v.witness
                    line += f" at n={w['n']}: lhs={w['lhs']} rhs={w['rhs']}"
                lines.append(line)
        failures = self.hard_failures
        lines.append(f"hard failures: {len(failures)}" + (f" ({', '.join(failures)})" if failures else ""))
        lines.append("verified exactly on the sampled parameter points only")
        return "\n".join(lines) + "\n"


# -- evaluation helpers ----------------------------------------------------------


def _plain(value) -> str:
    if isinstance(value, GaussianRational) and value.is_real():
        value = value.re
    return format_scalar(value)


def _egf(s: Series, n_max: int) -> list:
    return [egf_coeff(s, n) for n in range(n_max + 1)]


def _conv(a: Sequence, b: Sequence, n: int):
    """Binomial convolution ``sum_m C(n,m) a_m b_{n-m}``."""
    return sum((comb(n, m) * a[m] * b[n - m] for m in range(n + 1)), Fraction(0))


def _shifted_conv(a: Sequence, b: Sequence, n: int):
    """``n sum_{m<n} C(n-1,m) a_m b_{n-1-m}``, the EGF image of ``t A(t) B(t)``."""
    if n == 0:
        return Fraction(0)
    return n * sum((comb(n - 1, m) * a[m] * b[n - 1 - m] for m in range(n)), Fraction(0))


@lru_cache(maxsize=None, typed=True)
def _stirling1_rows(lam: Fraction, size: int) -> tuple[tuple[Fraction, ...], ...]:
    # rows[j][n] = S_{1,lam}(n, j) for 0 <= j, n <= size
    return tuple(tuple(_egf(sp.stirling1_deg_series(j, lam, size), size)) for j in range(size + 1))


@lru_cache(maxsize=None, typed=True)
def ei_log_coefficients(k: int, lam: Fraction, n_max: int) -> tuple[Fraction, ...]:
    """``c_m = 1/(m+1) sum_{j=1}^{m+1} (1)_{j,lam} j^(1-k) S_{1,lam}(m+1, j)``.

    ``Ei_{k,lam}(log_lam(1+t)) = t sum_m c_m t^m/m!``.
    """
    s1 = _stirling1_rows(lam, n_max + 1)
    out = []
    for m in range(n_max + 1):
        total = sum(
            (deg_falling(Fraction(1), j, lam) * Fraction(j) ** (1 - k) * s1[j][m + 1] for j in range(1, m + 2)),
            Fraction(0),
        )
        out.append(total / (m + 1))
    return tuple(out)


def _imag_falling(j: int, y, lam, sign: int) -> GaussianRational:
    iy = GaussianRational(0, y)
    return deg_falling(iy, j, lam) + sign * deg_falling(-iy, j, lam)


def _fg(p: ParamSet, o: int, n: int, x=None, k=None) -> list:
    return _egf(pf.poly_fg_series(p.k if k is None else k, p.x if x is None else x, p.u, p.lam, o), n)


def _fgc(p, o, n, x=None, y=None):
    return _egf(pf.poly_fg_cos_series(p.k, p.x if x is None else x, p.y if y is None else y, p.u, p.lam, o), n)


def _fgs(p, o, n, x=None, y=None):
    return _egf(pf.poly_fg_sin_series(p.k, p.x if x is None else x, p.y if y is None else y, p.u, p.lam, o), n)


def _cp(x, y, lam, o, n):
    return _egf(pf.c_poly_series(x, y, lam, o), n)


def _sp(x, y, lam, o, n):
    return _egf(pf.s_poly_series(x, y, lam, o), n)


def _falling_list(x, lam, n):
    return [deg_falling(x, j, lam) for j in range(n + 1)]


# -- the catalog ------------------------------------------------------------------
# every sides function has signature (params, n_max, order) -> (lhs, rhs)


def _rel_i(corrected: bool) -> Sides:
    def sides(p, n, o):
        fg = _fg(p, o, n)
        fg0 = _fg(p, o, n, x=Fraction(0))
        xf = _falling_list(p.x, p.lam, n)
        if corrected:
            rhs = [_conv(fg0, xf, m) for m in range(n + 1)]
        else:
            rhs = [fg0[m] * sum(comb(m, j) * xf[m - j] for j in range(m + 1)) for m in range(n + 1)]
        return fg, rhs

    return sides


def _rel_ii(corrected: bool, swapped: bool) -> Sides:
    def sides(p, n, o):
        a, b = (p.y, p.x) if swapped else (p.x, p.y)
        lhs = _fg(p, o, n, x=p.x + p.y)
        fa = _fg(p, o, n, x=a)
        bf = _falling_list(b, p.lam, n)
        if corrected:
            rhs = [_conv(fa, bf, m) for m in range(n + 1)]
        else:
            rhs = [fa[m] * sum(comb(m, j) * bf[m - j] for j in range(m + 1)) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _rel_iii(corrected: bool) -> Sides:
    def sides(p, n, o):
        lhs = _fg(p, o, n, x=p.x + p.y)
        fg0 = _fg(p, o, n, x=Fraction(0))
        sf = _falling_list(p.x + p.y, p.lam, n)
        if corrected:
            rhs = [_conv(fg0, sf, m) for m in range(n + 1)]
        else:
            rhs = [fg0[m] * sum(comb(m, j) * sf[m - j] for j in range(m + 1)) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _thm1(reading: str) -> Sides:
    def sides(p, n, o):
        c = ei_log_coefficients(p.k, p.lam, n)
        lhs = _fg(p, o, n)
        if reading == "frobenius-euler":
            h = _egf(pf.frobenius_euler_deg_series(p.x, p.u, p.lam, o), n)
            rhs = [_shifted_conv(c, h, m) for m in range(n + 1)]
        elif reading == "literal":
            g = _egf(pf.frobenius_genocchi_deg_series(p.x, p.u, p.lam, o), n)
            rhs = [_shifted_conv(c, g, m) for m in range(n + 1)]
        else:
            g = _egf(pf.frobenius_genocchi_deg_series(p.x, p.u, p.lam, o), n)
            rhs = [_conv(c, g, m) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _thm2(p, n, o):
    fg = _fg(p, o, n)
    one = _falling_list(Fraction(1), p.lam, n)
    c = ei_log_coefficients(p.k, p.lam, n)
    xf = _falling_list(p.x, p.lam, n)
    lhs = [_conv(fg, one, m) - p.u * fg[m] for m in range(n + 1)]
    rhs = [(1 - p.u) * _shifted_conv(c, xf, m) for m in range(n + 1)]
    return lhs, rhs


def _thm3(reading: str) -> Sides:
    def sides(p, n, o):
        bq = [b / (m + 1) for m, b in enumerate(_egf(sp.bernoulli2_deg_series(p.lam - 1, p.lam, o), n))]
        h0 = _egf(pf.frobenius_euler_deg_series(Fraction(0), p.u, p.lam, o), n)
        if reading == "as-printed-x0":
            lhs = _fg(p, o, n, x=Fraction(0), k=2)
            rhs = [_conv(h0, bq, m) for m in range(n + 1)]
        elif reading == "t-shift-x0":
            lhs = _fg(p, o, n, x=Fraction(0), k=2)
            rhs = [_shifted_conv(bq, h0, m) for m in range(n + 1)]
        elif reading == "t-shift-free-x":
            lhs = _fg(p, o, n, k=2)
            rhs = [_shifted_conv(bq, h0, m) for m in range(n + 1)]
        else:
            hx = _egf(pf.frobenius_euler_deg_series(p.x, p.u, p.lam, o), n)
            lhs = _fg(p, o, n, k=2)
            rhs = [_shifted_conv(bq, hx, m) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _thm4(sign: int) -> Sides:
    def sides(p, n, o):
        fg0 = _fg(p, o, n, x=Fraction(0))
        inner = [
            sum(
                (comb(j, i) * deg_falling(p.x, j - i, p.lam) * _imag_falling(i, p.y, p.lam, sign) for i in range(j + 1)),
                GaussianRational(0),
            )
            for j in range(n + 1)
        ]
        scale = GaussianRational(Fraction(1, 2)) if sign > 0 else GaussianRational(0, Fraction(-1, 2))
        rhs = [scale * _conv(inner, fg0, m) for m in range(n + 1)]
        lhs = _fgc(p, o, n) if sign > 0 else _fgs(p, o, n)
        return lhs, rhs

    return sides


def _thm5(sign: int, corrected: bool) -> Sides:
    def sides(p, n, o):
        vals = _fgc(p, o, n) if sign > 0 else _fgs(p, o, n)
        one = _falling_list(Fraction(1), p.lam, n)
        factor = 2 if sign > 0 else GaussianRational(0, 2)
        lhs = [factor * (_conv(vals, one, m) - p.u * vals[m]) for m in range(n + 1)]
        c = ei_log_coefficients(p.k, p.lam, n)

        def inner(q: int) -> GaussianRational:
            if corrected:
                terms = (
                    comb(q, l) * deg_falling(p.x, q - l, p.lam) * _imag_falling(l, p.y, p.lam, sign)
                    for l in range(q + 1)
                )
            else:
                terms = (
                    comb(q, l) * deg_falling(p.x, q, p.lam) * _imag_falling(q, p.y, p.lam, sign) for l in range(q + 1)
                )
            return sum(terms, GaussianRational(0))

        t = [inner(q) for q in range(n + 1)]
        rhs = [(1 - p.u) * _shifted_conv(c, t, m) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _thm6(sign: int) -> Sides:
    def sides(p, n, o):
        x1, x2 = p.x, p.x2
        vals = _fgc if sign > 0 else _fgs
        lhs = vals(p, o, n, x=x1 + x2)
        base = vals(p, o, n, x=Fraction(0))
        s2 = [_egf(sp.stirling2_deg_poly_series(i, x1, p.lam, n), n) for i in range(n + 1)]
        a = [sum((s2[i][m] * falling(x2, i) for i in range(m + 1)), Fraction(0)) for m in range(n + 1)]
        return lhs, [_conv(a, base, m) for m in range(n + 1)]

    return sides


def _cs_addition(which: str, double: bool) -> Sides:
    def sides(p, n, o):
        x2, y2 = (p.x, p.y) if double else (p.x2, p.y2)
        c1, s1 = _cp(p.x, p.y, p.lam, o, n), _sp(p.x, p.y, p.lam, o, n)
        c2, s2 = _cp(x2, y2, p.lam, o, n), _sp(x2, y2, p.lam, o, n)
        if which == "c":
            lhs = _cp(p.x + x2, p.y + y2, p.lam, o, n)
            rhs = [_conv(c1, c2, m) - _conv(s1, s2, m) for m in range(n + 1)]
        elif double:
            lhs = _sp(p.x + x2, p.y + y2, p.lam, o, n)
            rhs = [2 * _conv(s1, c2, m) for m in range(n + 1)]
        else:
            lhs = _sp(p.x + x2, p.y + y2, p.lam, o, n)
            rhs = [_conv(s1, c2, m) + _conv(c1, s2, m) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _fg_addition(which: str, double: bool, intermediate: bool = False) -> Sides:
    def sides(p, n, o):
        x2, y2 = (p.x, p.y) if double else (p.x2, p.y2)
        fc, fs = _fgc(p, o, n), _fgs(p, o, n)
        c2, s2 = _cp(x2, y2, p.lam, o, n), _sp(x2, y2, p.lam, o, n)
        if which == "c":
            lhs = _fgc(p, o, n, x=p.x + x2, y=p.y + y2)
            rhs = [_conv(fc, c2, m) - _conv(fs, s2, m) for m in range(n + 1)]
        else:
            lhs = _fgs(p, o, n, x=p.x + x2, y=p.y + y2)
            second = fs if intermediate else fc
            rhs = [_conv(fs, c2, m) + _conv(second, s2, m) for m in range(n + 1)]
        return lhs, rhs

    return sides


def _ei_log_expansion(p, n, o):
    lhs = _egf(pf.ei_of_log(p.k, p.lam, o), n)
    c = ei_log_coefficients(p.k, p.lam, n)
    rhs = [Fraction(0)] + [m * c[m - 1] for m in range(1, n + 1)]
    return lhs, rhs


def _decomposition(sign: int) -> Sides:
    def sides(p, n, o):
        plus = _egf(pf.poly_fg_complex_series(p.k, p.x, p.y, p.u, p.lam, o), n)
        minus = _egf(pf.poly_fg_complex_series(p.k, p.x, -p.y, p.u, p.lam, o), n)
        if sign > 0:
            return _fgc(p, o, n), [(a + b) / 2 for a, b in zip(plus, minus)]
        return _fgs(p, o, n), [(a - b) / GaussianRational(0, 2) for a, b in zip(plus, minus)]

    return sides


def _shifted_falling(p, n, o):
    # (t + x)_{n,lam} = sum_k S_{2,lam}^(x)(n,k) (t)_k, with t taken from the y slot
    t = p.y
    s2 = [_egf(sp.stirling2_deg_poly_series(i, p.x, p.lam, n), n) for i in range(n + 1)]
    lhs = _falling_list(t + p.x, p.lam, n)
    rhs = [sum((s2[i][m] * falling(t, i) for i in range(m + 1)), Fraction(0)) for m in range(n + 1)]
    return lhs, rhs


def _pythagorean(p, n, o):
    c, s = sp.cos_deg_series(p.y, p.lam, o), sp.sin_deg_series(p.y, p.lam, o)
    return _egf(c * c + s * s, n), _egf(Series.one(o), n)


def _trig_addition(which: str, double: bool) -> Sides:
    def sides(p, n, o):
        y2 = p.y if double else p.y2
        c1, s1 = sp.cos_deg_series(p.y, p.lam, o), sp.sin_deg_series(p.y, p.lam, o)
        c2, s2 = sp.cos_deg_series(y2, p.lam, o), sp.sin_deg_series(y2, p.lam, o)
        if which == "c":
            return _egf(sp.cos_deg_series(p.y + y2, p.lam, o), n), _egf(c1 * c2 - s1 * s2, n)
        rhs = (c1 * s1).scale(2) if double else s1 * c2 + c1 * s2
        return _egf(sp.sin_deg_series(p.y + y2, p.lam, o), n), _egf(rhs, n)

    return sides


def _polyexp_derivative(kind: str) -> Sides:
    def sides(p, n, o):
        if kind == "classical":
            f, g = sp.polyexp_series(p.k, o), sp.polyexp_series(p.k - 1, o)
        else:
            f, g = sp.deg_polyexp_series(p.k, p.lam, o), sp.deg_polyexp_series(p.k - 1, p.lam, o)
        if kind == "integral":
            return _egf(f, n), _egf(integrate(g.shift_down()), n)
        return _egf(differentiate(f).shift_up(), n), _egf(g, n)

    return sides


def _ei2_integral(p, n, o):
    integrand = sp.bernoulli2_deg_series(p.lam - 1, p.lam, o)
    return _egf(pf.ei_of_log(2, p.lam, o), n), _egf(integrate(integrand), n)


def _ei1(kind: str) -> Sides:
    def sides(p, n, o):
        if kind == "classical":
            lhs, e = sp.polyexp_series(1, o), sp.exp_series(Fraction(1), o)
        else:
            lhs, e = sp.deg_polyexp_series(1, p.lam, o), sp.deg_exp_series(Fraction(1), p.lam, o)
        return _egf(lhs, n), _egf(e - Series.one(o), n)

    return sides


def _inverse(which: str) -> Sides:
    def sides(p, n, o):
        e = sp.deg_exp_series(Fraction(1), p.lam, o)
        log = sp.deg_log_series(p.lam, o)
        if which == "log-of-exp":
            return _egf(compose(log, e - Series.one(o)), n), _egf(Series.t(o), n)
        if which == "ei1-of-log":
            return _egf(pf.ei_of_log(1, p.lam, o), n), _egf(Series.t(o), n)
        target = Series.t(o) if which == "exp-of-log-printed" else Series([1, 1], order=o)
        return _egf(compose(e, log), n), _egf(target, n)

    return sides


def _exp_trig_product(sign: int, corrected: bool) -> Sides:
    def sides(p, n, o):
        lhs = _cp(p.x, p.y, p.lam, o, n) if sign > 0 else _sp(p.x, p.y, p.lam, o, n)
        scale = GaussianRational(Fraction(1, 2)) if sign > 0 else GaussianRational(0, Fraction(-1, 2))
        rhs = []
        for m in range(n + 1):
            total = sum(
                (
                    comb(m, j) * deg_falling(p.x, m - j, p.lam) * _imag_falling(j if corrected else m, p.y, p.lam, sign)
                    for j in range(m + 1)
                ),
                GaussianRational(0),
            )
            rhs.append(scale * total)
        return lhs, rhs

    return sides


def _specialization(which: str) -> Sides:
    def sides(p, n, o):
        if which == "genocchi":
            lhs = _egf(pf.poly_fg_series(1, p.x, Fraction(-1), p.lam, o), n)
            return lhs, _egf(pf.genocchi_deg_series(p.x, p.lam, o), n)
        lhs = _fg(p, o, n, k=1)
        return lhs, _egf(pf.frobenius_genocchi_deg_series(p.x, p.u, p.lam, o), n)

    return sides


def _with_k(k: int) -> Callable[[ParamSet], ParamSet]:
    return lambda p: p.with_(k=k)


V = Variant

CATALOG: tuple[IdentityCase, ...] = (
    IdentityCase("rel-i", "FG^(k)(x,u) as a convolution of FG^(k)(0,u) with (x)_{n,lam}", (
        V("as-printed", AS_PRINTED, False, _rel_i(False)),
        V("summation-index-m", CORRECTED, True, _rel_i(True)),
    ), notes=("the printed inner factor carries index n; the corrected reading uses FG_m(0,u)",)),
    IdentityCase("rel-ii", "FG^(k)(x+y,u) as a convolution of FG^(k)(x,u) with (y)_{n,lam}", (
        V("as-printed", AS_PRINTED, False, _rel_ii(False, False)),
        V("as-printed-swapped", AS_PRINTED, False, _rel_ii(False, True)),
        V("summation-index-m", CORRECTED, True, _rel_ii(True, False)),
        V("summation-index-m-swapped", CORRECTED, True, _rel_ii(True, True)),
    )),
    IdentityCase("rel-iii", "FG^(k)(x+y,u) as a convolution of FG^(k)(0,u) with (x+y)_{n,lam}", (
        V("as-printed", AS_PRINTED, False, _rel_iii(False)),
        V("summation-index-m", CORRECTED, True, _rel_iii(True)),
    )),
    IdentityCase("thm1", "FG^(k) via degenerate Stirling numbers of the first kind", (
        V("as-printed-frobenius-genocchi-reading", AS_PRINTED, False, _thm1("literal")),
        V("frobenius-euler-reading", CORRECTED, False, _thm1("frobenius-euler")),
        V("unshifted-frobenius-genocchi-convolution", CORRECTED, False, _thm1("convolution")),
    ), notes=("the symbol FG_{n-1-m,lam}(x,u) is not defined; the degenerate Frobenius-Euler and "
              "Frobenius-Genocchi readings are both tested",)),
    IdentityCase("thm2", "sum C(n,m) (1)_{m,lam} FG^(k)_{n-m} - u FG^(k)_n in closed form", (V("as-printed", AS_PRINTED, True, _thm2),)),
    IdentityCase("thm3", "FG^(2)(0,u) via H(0,u) and b_{m,lam}(lam-1)", (
        V("as-printed-at-x0", AS_PRINTED, False, _thm3("as-printed-x0")),
        V("t-shift-at-x0", CORRECTED, False, _thm3("t-shift-x0")),
        V("t-shift-free-x", CORRECTED, False, _thm3("t-shift-free-x")),
        V("t-shift-with-x-factor", CORRECTED, False, _thm3("t-shift-with-x")),
    ), adjust=_with_k(2), notes=(
        "k is fixed to 2",
        "the derivation drops a factor t after integrating, and drops e_lam^x(t)",
        "t-shift-free-x keeps x in the left side only; it can hold only at x = 0",
    )),
    IdentityCase("thm4", "cosine and sine families via (x)_{n,lam} and (+-iy)_{n,lam}", (
        V("cos-as-printed", AS_PRINTED, True, _thm4(+1)),
        V("sin-as-printed", AS_PRINTED, True, _thm4(-1)),
    ), notes=("the inner summation index is renamed (it collides with k); FG_{n-j,lam}^(k) is read "
              "as the number FG_{n-j,lam}^(k)(0,u)",)),
    IdentityCase("thm5", "cosine and sine families via degenerate Stirling numbers of the first kind", (
        V("cos-as-printed", AS_PRINTED, False, _thm5(+1, False)),
        V("sin-as-printed", AS_PRINTED, False, _thm5(-1, False)),
        V("cos-inner-index-l", CORRECTED, False, _thm5(+1, True)),
        V("sin-inner-index-l", CORRECTED, False, _thm5(-1, True)),
    ), notes=(
        "the printed summand does not depend on the inner index l",
        "the j = 0 term is dropped: S_{1,lam}(m+1, 0) = 0",
    )),
    IdentityCase("thm6", "cosine and sine families at x1+x2 via degenerate Stirling polynomials", (
        V("cos-as-printed", AS_PRINTED, True, _thm6(+1)),
        V("sin-as-printed", AS_PRINTED, True, _thm6(-1)),
    ), notes=("inner summation index renamed; (x2)_k is the ordinary falling factorial",)),
    IdentityCase("thm7", "addition formulas for C_{n,lam} and S_{n,lam}", (
        V("cos-as-printed", AS_PRINTED, True, _cs_addition("c", False)),
        V("sin-as-printed", AS_PRINTED, True, _cs_addition("s", False)),
        V("cos-double-angle", AS_PRINTED, True, _cs_addition("c", True)),
        V("sin-double-angle", AS_PRINTED, True, _cs_addition("s", True)),
    )),
    IdentityCase("final-thm", "addition formulas for the cosine and sine families", (
        V("cos-as-printed", AS_PRINTED, True, _fg_addition("c", False)),
        V("sin-as-printed", AS_PRINTED, True, _fg_addition("s", False)),
        V("cos-double-angle", AS_PRINTED, True, _fg_addition("c", True)),
        V("sin-double-angle", AS_PRINTED, True, _fg_addition("s", True)),
    ), notes=("inner summation index renamed",)),
    IdentityCase("eq48-intermediate", "intermediate sine-addition display", (
        V("as-printed", AS_PRINTED, False, _fg_addition("s", False, intermediate=True)),
        V("cosine-in-second-term", CORRECTED, True, _fg_addition("s", False)),
    ), notes=("the printed display pairs FG^[k,s] with S_k; the addition formula pairs FG^[k,c] with S_k",)),
    IdentityCase("eq16-expansion", "expansion of Ei_{k,lam}(log_lam(1+t))", (
        V("t-factored-j-power-k-minus-1", CORRECTED, True, _ei_log_expansion),
    ), notes=(
        "the intermediate denominators (n-1)^k and n^k - 1 are typographical slips, not variants",
        "the denominator j^(k-1) is the one that matches direct composition",
    )),
    IdentityCase("eq21-decomposition", "cosine family as half-sum", (V("as-printed", AS_PRINTED, True, _decomposition(+1)),)),
    IdentityCase("eq22-decomposition", "sine family as half-difference", (V("as-printed", AS_PRINTED, True, _decomposition(-1)),)),
    IdentityCase("eq29-30", "products e_lam^x cos_lam^(y) and e_lam^x sin_lam^(y)", (
        V("cos-as-printed", AS_PRINTED, False, _exp_trig_product(+1, False)),
        V("sin-as-printed", AS_PRINTED, False, _exp_trig_product(-1, False)),
        V("cos-index-k", CORRECTED, True, _exp_trig_product(+1, True)),
        V("sin-index-k", CORRECTED, True, _exp_trig_product(-1, True)),
    ), notes=("printed with (iy)_{n,lam} where the convolution needs (iy)_{k,lam}",)),
    IdentityCase("eq6-stirling", "falling factorial via degenerate Stirling polynomials", (
        V("as-printed", AS_PRINTED, True, _shifted_falling),
    ), notes=("t is taken from the y slot of the sample",)),
    IdentityCase("pythagorean", "cos^2 + sin^2 = 1", (V("as-printed", AS_PRINTED, True, _pythagorean),)),
    IdentityCase("eq41a-cos-addition", "degenerate cosine addition", (
        V("as-printed", AS_PRINTED, True, _trig_addition("c", False)),
        V("double-angle", AS_PRINTED, True, _trig_addition("c", True)),
    ), notes=("the second angle is y2",)),
    IdentityCase("eq42-sin-addition", "degenerate sine addition", (
        V("as-printed", AS_PRINTED, True, _trig_addition("s", False)),
        V("double-angle", AS_PRINTED, True, _trig_addition("s", True)),
    ), notes=("the second angle is y2",)),
    IdentityCase("eq18-derivative", "derivative of Ei_{k,lam}", (
        V("degenerate", AS_PRINTED, True, _polyexp_derivative("degenerate")),
        V("classical", AS_PRINTED, True, _polyexp_derivative("classical")),
        V("integral-form", AS_PRINTED, True, _polyexp_derivative("integral")),
    )),
    IdentityCase("ei2-integral", "Ei_{2,lam}(log_lam(1+t)) as an integral", (
        V("as-printed", AS_PRINTED, True, _ei2_integral),
    ), notes=("integrand t/log_lam(1+t) (1+t)^(lam-1), the EGF of b_{m,lam}(lam-1)",)),
    IdentityCase("ei1-exponential", "Ei_{1,lam}(x) = e_lam(x) - 1", (
        V("degenerate", AS_PRINTED, True, _ei1("degenerate")),
        V("classical", AS_PRINTED, True, _ei1("classical")),
    )),
    IdentityCase("compositional-inverse", "e_lam and log_lam as inverse pair", (
        V("exp-of-log-equals-t", AS_PRINTED, False, _inverse("exp-of-log-printed")),
        V("log-of-exp-equals-t", AS_PRINTED, True, _inverse("log-of-exp")),
        V("exp-of-log-equals-1-plus-t", CORRECTED, True, _inverse("exp-of-log")),
        V("ei1-of-log-equals-t", CORRECTED, True, _inverse("ei1-of-log")),
    ), notes=("e_lam(log_lam(1+t)) is 1 + t, not t; Ei_{1,lam}(log_lam(1+t)) = t still holds",)),
    IdentityCase("k1-specialization", "k = 1 reductions", (
        V("genocchi-at-u-minus-1", AS_PRINTED, True, _specialization("genocchi")),
        V("frobenius-genocchi", CORRECTED, True, _specialization("frobenius-genocchi")),
    ), notes=("k is fixed to 1",), adjust=_with_k(1)),
)

CASE_IDS = tuple(c.id for c in CATALOG)


def _sorted_catalog() -> tuple[IdentityCase, ...]:
    return tuple(sorted(CATALOG, key=lambda c: c.id))


def check_identity(case: IdentityCase) -> list[VariantResult]:
    """Evaluate every variant of ``case`` at all its samples and ``n <= n_max``."""
    n = case.n_max
    order = default_order(n)
    results = []
    for v in case.variants:
        witness = None
        checked = 0
        for p in case.params:
            lhs, rhs = v.sides(p, n, order)
            checked += n + 1
            for m in range(n + 1):
                if lhs[m] != rhs[m]:
                    if witness is None or m < witness["n"]:
                        witness = {
                            "lhs": _plain(lhs[m]),
                            "n": m,
                            "params": p.to_json(),
                            "rhs": _plain(rhs[m]),
                        }
                    break
        results.append(VariantResult(v.name, v.reading, v.hard, HOLDS if witness is None else FAILS, checked, witness))
    return results


def case_status(results: Sequence[VariantResult]) -> str:
    printed = [r for r in results if r.reading == AS_PRINTED]
    corrected = [r for r in results if r.reading == CORRECTED]
    if printed and all(r.verdict == HOLDS for r in printed):
        return "holds-as-printed"
    if any(r.verdict == HOLDS for r in corrected):
        return "holds-with-correction"
    return "fails"


# -- sampling ---------------------------------------------------------------------


def _signed_ratio(rng: random.Random, exclude=()) -> Fraction:
    while True:
        q = Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice((1, -1))
        if q not in exclude:
            return q


def _box_rational(rng: random.Random) -> Fraction:
    q = rng.randint(1, 5)
    return Fraction(rng.randint(-2 * q, 2 * q), q)


def sample_params(seed: int, n_max: int, count: int) -> list[ParamSet]:
    """Deterministic samples: lam, u in {+-p/q : 1 <= p, q <= 5} (u != 1), x, y in [-2, 2]."""
    if count < 1:
        raise ValueError("sample count must be at least 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        lam = _signed_ratio(rng)
        u = _signed_ratio(rng, exclude=(Fraction(1),))
        x, y, x2, y2 = (_box_rational(rng) for _ in range(4))
        k = rng.choice((-1, 0, 1, 2, 3))
        out.append(ParamSet(lam=lam, u=u, x=x, y=y, k=k, n_max=n_max, x2=x2, y2=y2))
    return out


def audit_all(seed: int = 42, n_max: int = 10, sample_count: int = 3, cases: Sequence[str] | None = None) -> AuditReport:
    samples = sample_params(seed, n_max, sample_count)
    results = []
    for case in _sorted_catalog():
        if cases is not None and case.id not in cases:
            continue
        params = tuple(case.adjust(p) if case.adjust else p for p in samples)
        variants = check_identity(replace(case, n_max=n_max, params=params))
        results.append(CaseResult(case.id, case.statement, case_status(variants), variants, case.notes))
    return AuditReport(seed=seed, n_max=n_max, samples=samples, cases=results)


# -- lam -> 0 limits and the lam-degree bound ---------------------------------------


def limit_nodes(count: int) -> list[Fraction]:
    return [Fraction(j) for j in range(1, count + 1)]


def degree_nodes(count: int) -> list[Fraction]:
    return [Fraction((-1) ** j * (j + 1), 3) for j in range(1, count + 1)]


def _family_values_at(family: str, params: ParamSet, n_max: int, lams: Sequence[Fraction]) -> list[list]:
    fam = get_family(family)
    p = params.with_(n_max=n_max)
    return [fam.values(p.with_(lam=lam), order=n_max) for lam in lams]


@dataclass
class LimitResult:
    family: str
    classical: str
    verdict: str
    values: list[dict] = field(default_factory=list)
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"classical": self.classical, "family": self.family, "values": self.values, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def limit_check(family: str, n_max: int, params: ParamSet | None = None) -> LimitResult:
    """Interpolate ``n+1`` lam-samples to lam = 0 and compare with the classical value."""
    fam = get_family(family)
    if not fam.degenerate or fam.classical is None:
        raise ValueError(f"{family} has no classical counterpart")
    params = (params or ParamSet()).with_(n_max=n_max)
    lams = limit_nodes(n_max + 1)
    table = _family_values_at(family, params, n_max, lams)
    classical = get_family(fam.classical).values(params, order=n_max)
    result = LimitResult(family, fam.classical, HOLDS)
    for n in range(n_max + 1):
        limit = lagrange_at_zero([(lams[j], table[j][n]) for j in range(n + 1)])
        ok = limit == classical[n]
        result.values.append({"classical": format_scalar(classical[n]), "limit": format_scalar(limit), "n": n})
        if not ok and result.witness is None:
            result.verdict = FAILS
            result.witness = {"classical": format_scalar(classical[n]), "limit": format_scalar(limit), "n": n}
    return result


def limit_families() -> tuple[str, ...]:
    return tuple(f for f in DEGENERATE_IDS if FAMILIES[f].classical is not None)


def degree_bound_check(family: str, n_max: int, params: ParamSet | None = None) -> list[int]:
    """Indices ``n <= n_max`` at which the coefficient is *not* a polynomial of degree <= n in lam.

    Interpolating the first ``n+1`` of ``n+2`` nodes must predict the last one.
    """
    params = (params or ParamSet()).with_(n_max=n_max)
    lams = degree_nodes(n_max + 2)
    table = _family_values_at(family, params, n_max, lams)
    bad = []
    for n in range(n_max + 1):
        nodes = [(lams[j], table[j][n]) for j in range(n + 1)]
        if lagrange_eval(nodes, lams[n + 1]) != table[n + 1][n]:
            bad.append(n)
    return bad
