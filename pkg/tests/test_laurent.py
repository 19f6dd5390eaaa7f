from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qaknot.laurent import Gaussian, LaurentPoly, eval_gaussian, gap_report
from qaknot.laurent import PolyParseError, delta, product

keys = st.integers(min_value=-12, max_value=12)
polys = st.dictionaries(keys, st.integers(min_value=-6, max_value=6), max_size=6).map(
    lambda d: LaurentPoly(d, "t"))
points = st.sampled_from([1, -1, 1j, -1j])

_s = sympy.Symbol("s")  # s = t^(1/2)


def to_sympy(p: LaurentPoly):
    return sympy.expand(sum(c * _s**k for k, c in p.items()))


# ---- ring axioms ---------------------------------------------------------


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a
    assert a * 1 == a
    assert a - a == 0


@given(polys, polys)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))


@given(polys)
def test_text_round_trip(p):
    assert LaurentPoly.parse(p.to_text()) == p


def test_text_format():
    p = LaurentPoly.from_exponents({4: -1, 3: 1, 1: 1})
    assert p.to_text() == "-1*t^4 + 1*t^3 + 1*t^1"
    q = LaurentPoly.from_exponents({Fraction(5, 2): 1, Fraction(-1, 2): -1, 0: 2})
    assert q.to_text() == "1*t^(5/2) + 2 - 1*t^(-1/2)"
    assert LaurentPoly({}, "t").to_text() == "0"


def test_parse_errors_report_column():
    with pytest.raises(PolyParseError) as info:
        LaurentPoly.parse("1*t^2 + ?")
    assert info.value.column == 7
    with pytest.raises(PolyParseError):
        LaurentPoly.parse("1*t^2 1*t")
    with pytest.raises(ValueError):
        LaurentPoly.parse("1*t + 1*A")


def test_mixed_variables_rejected():
    with pytest.raises(ValueError):
        LaurentPoly({2: 1}, "A") + LaurentPoly({2: 1}, "t")


def test_unit_inverse_only():
    m = LaurentPoly.monomial(3, -1)
    assert m * m**-1 == 1
    with pytest.raises(ValueError):
        LaurentPoly({0: 1, 2: 1}) ** -1


def test_a_to_t():
    # A^-2 is t^(1/2)
    assert LaurentPoly.monomial(-2, 1, "A").a_to_t() == LaurentPoly.monomial(Fraction(1, 2))
    assert LaurentPoly.monomial(8, 1, "A").a_to_t() == LaurentPoly.monomial(-2)
    with pytest.raises(ValueError):
        LaurentPoly.monomial(1, 1, "A").a_to_t()


def test_delta_and_product():
    d = delta()
    assert d == LaurentPoly.from_exponents({2: -1, -2: -1}, "A")
    assert product([d, d], "A") == d * d
    assert product([], "A") == 1


# ---- evaluation ----------------------------------------------------------


@given(polys, polys, points)
def test_eval_is_ring_homomorphism(a, b, z):
    assert eval_gaussian(a * b, z) == eval_gaussian(a, z) * eval_gaussian(b, z)
    assert eval_gaussian(a + b, z) == eval_gaussian(a, z) + eval_gaussian(b, z)


@given(polys, points)
def test_eval_matches_sympy(p, z):
    value = sympy.expand(to_sympy(p).subs(_s, sympy.nsimplify(z)))
    g = eval_gaussian(p, z)
    assert value == g.re + g.im * sympy.I


def test_gaussian_magnitude():
    assert Gaussian(3, 4).magnitude() == 5
    with pytest.raises(ValueError):
        Gaussian(1, 1).magnitude()
    with pytest.raises(ValueError):
        eval_gaussian(LaurentPoly({0: 1}), 2)


# ---- gaps and alternation -----------------------------------------------


def test_gap_report_trefoil():
    rep = gap_report(LaurentPoly.parse("-1*t^4 + 1*t^3 + 1*t^1"))
    assert rep.coefficients == (1, 0, 1, -1)
    assert rep.gap_positions == (1,)
    assert rep.min_exponent == 1
    # zeros do not break weak alternation, only strict
    assert not rep.strictly_alternating and rep.weakly_alternating


def test_gap_report_figure_eight():
    rep = gap_report(LaurentPoly.parse("1*t^2 - 1*t^1 + 1 - 1*t^-1 + 1*t^-2"))
    assert not rep.has_gap and rep.strictly_alternating and rep.span == 4


def test_gap_report_half_integer_hopf():
    rep = gap_report(LaurentPoly.parse("-1*t^(5/2) - 1*t^(1/2)"))
    assert rep.coefficients == (-1, 0, -1)
    assert rep.min_exponent == Fraction(1, 2)
    assert rep.has_gap


def test_gap_report_rejects_zero_and_mixed():
    with pytest.raises(ValueError):
        gap_report(LaurentPoly({}))
    with pytest.raises(ValueError):
        gap_report(LaurentPoly.from_exponents({Fraction(1, 2): 1, 1: 1}))


def random_sign_coherent(rng: random.Random) -> LaurentPoly:
    """Coefficient of x^i has sign (-1)^i (zeros allowed), times a random +-x^s."""
    n = rng.randint(0, 6)
    coeffs = {}
    for i in range(n + 1):
        mag = rng.choice([0, 0, 1, 2, 3, 5])
        if i in (0, n):
            mag = mag or 1
        coeffs[2 * i] = (-1) ** i * mag
    return LaurentPoly(coeffs).shift(2 * rng.randint(-4, 4)) * rng.choice([1, -1])


def test_no_cancellation_in_sign_coherent_products():
    rng = random.Random(20240905)
    for _ in range(1000):
        f, g = random_sign_coherent(rng), random_sign_coherent(rng)
        h = f * g
        fc, gc = f.coeffs, g.coeffs
        for n in range(f.min_key + g.min_key, f.max_key + g.max_key + 1, 2):
            some_term = any(fc.get(i, 0) * gc.get(n - i, 0) for i in fc)
            assert (h.coeff(Fraction(n, 2)) != 0) == some_term
