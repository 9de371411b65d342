from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degfg import polyfg as pf
from degfg.arith import GaussianRational
from degfg.series import Series, compose
from degfg.special import ParameterError, deg_exp_series, deg_log_series, deg_polyexp_series

from strategies import box, lambdas, us

ks = st.integers(-1, 3)


@given(ks, box, us, lambdas)
def test_first_values(k, x, u, lam):
    assert pf.poly_fg(0, k, x, u, lam) == 0
    assert pf.poly_fg_cos(0, k, x, Fraction(1, 3), u, lam) == 0
    assert pf.poly_fg_sin(0, k, x, Fraction(1, 3), u, lam) == 0


@given(box, us, lambdas)
def test_k1_first_value(x, u, lam):
    assert pf.poly_fg(1, 1, x, u, lam, order=4) == 1


@given(us, lambdas, box)
def test_helper_first_values(u, lam, x):
    assert pf.frobenius_euler_deg(0, Fraction(0), u, lam) == 1
    assert pf.frobenius_euler_deg(1, Fraction(0), u, lam) == 1 / (u - 1)
    assert pf.frobenius_genocchi_deg(1, x, u, lam) == 1
    h = pf.helper_families(3, x, u, lam)
    assert sorted(h) == ["frobenius-euler", "frobenius-genocchi", "genocchi"]


def test_helper_at_u_minus_one_is_genocchi():
    lam, x = Fraction(2, 5), Fraction(-1, 3)
    for n in range(10):
        assert pf.frobenius_genocchi_deg(n, x, Fraction(-1), lam) == pf.genocchi_deg(n, x, lam)


def test_ei1_of_log_is_t():
    for lam in (Fraction(1, 3), Fraction(2), Fraction(-1, 2)):
        assert pf.ei_of_log(1, lam, 12) == Series.t(12)


def test_table_example():
    lam = Fraction(1, 3)
    values = [pf.poly_fg(n, 1, Fraction(0), Fraction(-1), lam) for n in range(5)]
    assert values == [0, 1, -1, Fraction(1, 2), Fraction(5, 9)]
    assert values == [pf.genocchi_deg(n, Fraction(0), lam) for n in range(5)]


@settings(max_examples=25)
@given(box, us, lambdas)
def test_specializations(x, u, lam):
    for n in range(13):
        assert pf.poly_fg(n, 1, x, Fraction(-1), lam, order=12) == pf.genocchi_deg(n, x, lam, order=12)
        assert pf.poly_fg(n, 1, x, u, lam, order=12) == pf.frobenius_genocchi_deg(n, x, u, lam, order=12)


@settings(max_examples=25)
@given(ks, box, box, us, lambdas)
def test_decomposition(k, x, y, u, lam):
    o = 12
    plus = pf.poly_fg_complex_series(k, x, y, u, lam, o)
    minus = pf.poly_fg_complex_series(k, x, -y, u, lam, o)
    assert (plus + minus).scale(Fraction(1, 2)).real_part() == pf.poly_fg_cos_series(k, x, y, u, lam, o)
    assert ((plus - minus) / GaussianRational(0, 2)).real_part() == pf.poly_fg_sin_series(k, x, y, u, lam, o)
    assert ((plus - minus) / GaussianRational(0, 2)).imag_part() == Series.zero(o)


@settings(max_examples=25)
@given(ks, box, box, us, lambdas, st.integers(0, 8))
def test_conjugation_symmetry(k, x, y, u, lam, n):
    z = pf.poly_fg_complex(n, k, x, y, u, lam)
    assert pf.poly_fg_complex(n, k, x, -y, u, lam) == z.conj()
    assert pf.poly_fg_complex(n, k, x, Fraction(0), u, lam) == pf.poly_fg(n, k, x, u, lam)


@given(ks, box, us, lambdas, st.integers(0, 8))
def test_trig_families_at_y_zero(k, x, u, lam, n):
    assert pf.poly_fg_sin(n, k, x, Fraction(0), u, lam) == 0
    assert pf.poly_fg_cos(n, k, x, Fraction(0), u, lam) == pf.poly_fg(n, k, x, u, lam)


@given(box, box, lambdas)
def test_c_s_first_values(x, y, lam):
    assert pf.c_poly(0, x, y, lam) == 1 and pf.s_poly(0, x, y, lam) == 0
    assert pf.c_poly(1, x, y, lam) == x and pf.s_poly(1, x, y, lam) == y
    assert pf.c_poly(2, x, y, lam) == x * x - lam * x - y * y


@settings(max_examples=25)
@given(box, box, lambdas, st.integers(0, 10))
def test_closed_forms(x, y, lam, n):
    assert pf.c_poly(n, x, y, lam) == pf.c_poly_closed(n, x, y, lam)
    assert pf.s_poly(n, x, y, lam) == pf.s_poly_closed(n, x, y, lam)


@given(ks, lambdas)
def test_prefactor_matches_direct_construction(k, lam):
    o, u = 10, Fraction(-3, 2)
    direct = compose(deg_polyexp_series(k, lam, o), deg_log_series(lam, o))
    e1 = deg_exp_series(Fraction(1), lam, o)
    assert pf.prefactor_series(k, u, lam, o) * (e1 - Series.constant(u, o)) == direct.scale(1 - u)


def test_domain_errors():
    with pytest.raises(ParameterError):
        pf.poly_fg(3, 1, Fraction(0), Fraction(1), Fraction(1, 2))
    with pytest.raises(ParameterError):
        pf.poly_fg(3, 1, Fraction(0), Fraction(-1), Fraction(0))
