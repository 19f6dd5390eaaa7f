from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from qaknot.braid import torus_2n_jones
from qaknot.corpus import montesinos_instances
from qaknot.diagram import determinant, is_alternating, is_planar, jones
from qaknot.montesinos import (
    ContinuedFraction,
    MontesinosData,
    MontesinosParseError,
    ScopeError,
    continued_fraction,
    determinant_formula,
    equivalent,
    montesinos_qa,
    standardize,
    t_sequence,
    to_diagram,
    two_bridge,
)


def M(text: str) -> MontesinosData:
    return MontesinosData.parse(text)


# ---- continued fractions -------------------------------------------------


def test_continued_fraction_examples():
    assert continued_fraction(1, 2).terms == (2,)
    assert continued_fraction(2, 7).terms == (2, 3)
    assert continued_fraction(7, 31).terms == (3, 2, 4)


def test_t_sequence_examples():
    assert t_sequence(ContinuedFraction((2,))) == [1, 2]
    assert t_sequence(ContinuedFraction((2, 3))) == [1, 2, 7]
    assert t_sequence(ContinuedFraction((3, 2, 4))) == [1, 3, 7, 31]


def test_continued_fraction_value_is_exact():
    for alpha in range(2, 60):
        for beta in range(1, alpha):
            if gcd(alpha, beta) == 1:
                assert continued_fraction(beta, alpha).value() == Fraction(alpha, beta)


def test_continued_fraction_rejects_bad_input():
    for beta, alpha in [(2, 4), (3, 2), (0, 5), (5, 5)]:
        with pytest.raises(ValueError):
            continued_fraction(beta, alpha)
    with pytest.raises(ValueError):
        ContinuedFraction((2, 0))


# ---- data, text and standard form ---------------------------------------


def test_text_round_trip():
    for text in ("M(-1; 2/1, 3/1, 3/1)", "M(0; 2/1, 3/1, 7/2)", "M(2; 5/-3)"):
        assert M(text).to_text() == text
    with pytest.raises(MontesinosParseError):
        M("M(0; 2/1, x)")
    with pytest.raises(ValueError):
        M("M(0; 4/2)")
    with pytest.raises(ValueError):
        M("M(0; 1/1)")


def test_standardize_examples():
    assert standardize(MontesinosData(1, ((3, -1), (2, 1), (5, 2)))) == MontesinosData(2, ((3, 2), (2, 1), (5, 2)))
    # 3/2 = 1/2 + 1, so e drops by one to keep e0 = -3/2
    assert standardize(M("M(0; 2/3)")) == M("M(-1; 2/1)")
    assert M("M(-1; 2/1)").e0 == M("M(0; 2/3)").e0 == Fraction(-3, 2)
    m = M("M(2; 3/2, 5/1)")
    assert standardize(m) == m


def test_standardize_keeps_e0_and_is_idempotent():
    for e in range(-3, 4):
        for b1 in range(-7, 8):
            for b2 in (-4, -1, 1, 3, 8):
                if gcd(b1, 5) != 1:
                    continue
                m = MontesinosData(e, ((5, b1), (3, b2 if gcd(b2, 3) == 1 else 1)))
                s = standardize(m)
                assert s.e0 == m.e0
                assert standardize(s) == s


def test_equivalence():
    base = M("M(0; 2/1, 3/1, 7/2)")
    assert equivalent(base, M("M(0; 3/1, 7/2, 2/1)"))
    assert equivalent(base, M("M(0; 7/2, 3/1, 2/1)"))
    assert not equivalent(base, M("M(1; 2/1, 3/1, 7/2)"))
    # same slopes mod 1 and same e0 after shifting an integer between e and beta
    assert equivalent(base, M("M(1; 2/3, 3/1, 7/2)"))
    with pytest.raises(ScopeError):
        equivalent(M("M(0; 2/1, 2/1)"), M("M(0; 2/1, 2/1)"))
    with pytest.raises(ScopeError):
        equivalent(M("M(0; 2/1, 2/1, 3/1)"), base)  # 1/2+1/2+1/3 > 1


# ---- determinant and QA --------------------------------------------------


def test_determinant_formula_examples():
    assert determinant_formula(M("M(-1; 2/1, 3/1, 3/1)")) == 39
    assert determinant_formula(M("M(0; 2/1, 2/1)")) == 4
    assert determinant_formula(M("M(1; 2/1, 2/1)")) == 0


def test_qa_examples():
    ok, reason = montesinos_qa(standardize(M("M(0; 2/1, 3/1, 7/2)")))
    assert ok and reason == "e <= 0"
    assert montesinos_qa(M("M(1; 3/1, 3/1, 3/1)")) == (False, "no condition holds")
    assert montesinos_qa(M("M(1; 2/1, 3/1, 7/6)")) == (True, "e = 1 condition")
    assert montesinos_qa(M("M(3; 2/1, 3/1, 7/6)")) == (True, "e >= r")
    assert montesinos_qa(M("M(2; 3/2, 3/2, 3/2)"))[0] is False
    with pytest.raises(ValueError):
        montesinos_qa(M("M(0; 2/3)"))


def test_qa_invariant_under_rotation_and_reversal():
    for m in montesinos_instances(16):
        if m.r < 3:
            continue
        s = standardize(m)
        t = s.tangles
        for variant in (t[1:] + t[:1], t[::-1]):
            assert montesinos_qa(MontesinosData(s.e, variant))[0] == montesinos_qa(s)[0]


# ---- diagrams ------------------------------------------------------------


@pytest.mark.parametrize("text,expected", [
    ("M(0; 2/1, 2/1)", 4), ("M(-1; 2/1, 3/1, 3/1)", 39), ("M(1; 2/1, 3/1, 7/6)", None),
    ("M(1; 3/1, 3/1, 3/1)", None), ("M(0; 2/1, 3/1, 7/2)", None), ("M(2; 3/2, 5/1)", None),
])
def test_diagram_determinant_matches_formula(text, expected):
    m = M(text)
    d = to_diagram(m)
    assert is_planar(d)
    assert determinant(d) == determinant_formula(m)
    if expected is not None:
        assert determinant(d) == expected
    if m.e == 0:
        assert d.n_crossings == sum(sum(continued_fraction(b % a, a).terms) for a, b in m.tangles)


def test_single_tangle_gives_two_bridge_links():
    # one tangle with e = -1 is the trefoil; (2,1) with e = 0 is the unknot
    assert jones(to_diagram(M("M(-1; 2/1)"))) in (torus_2n_jones(3), torus_2n_jones(3).scale_keys(-1))
    assert determinant(to_diagram(M("M(0; 2/1)"))) == 1


def test_nonpositive_e_gives_alternating_diagrams():
    for m in montesinos_instances(14):
        if standardize(m).e <= 0:
            assert is_alternating(to_diagram(m))


def test_two_bridge_determinants():
    for p, q in [(3, 1), (5, 2), (7, 3), (9, 2), (11, 3), (13, 5), (21, 8)]:
        assert determinant(two_bridge(p, q)) == p
