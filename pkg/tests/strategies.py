"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from degfg.arith import GaussianRational
from degfg.series import Series

small_ints = st.integers(min_value=-12, max_value=12)
denominators = st.integers(min_value=1, max_value=9)

rationals = st.builds(Fraction, small_ints, denominators)
nonzero_rationals = rationals.filter(lambda q: q != 0)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(lambda z: z != 0)

lambdas = st.builds(lambda p, q, s: Fraction(s * p, q),
                    st.integers(1, 5), st.integers(1, 5), st.sampled_from((1, -1)))
us = lambdas.filter(lambda u: u != 1)
box = st.builds(lambda p, q: Fraction(p, q), st.integers(-10, 10), st.integers(1, 5))


def series(order: int, unit: bool = False, zero_constant: bool = False):
    def build(cs):
        cs = list(cs)
        if zero_constant:
            cs[0] = Fraction(0)
        return Series(cs, order=order)

    head = nonzero_rationals if unit else rationals
    return st.tuples(head, *([rationals] * order)).map(build)
