"""
Continued fractions, Montesinos link data and their diagrams.

``MontesinosData(e, ((alpha, beta), ...))`` describes ``e`` half-twists next
to rational tangles of slope ``beta/alpha``.  The text form is
``"M(-1; 2/1, 3/1, 3/1)"`` with each tangle written ``alpha/beta``.

>>> continued_fraction(7, 31).terms
(3, 2, 4)
>>> determinant_formula(MontesinosData.parse("M(-1; 2/1, 3/1, 3/1)"))
39
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from . import tangle as tg
from .diagram import PlanarDiagram, orient

__all__ = [
    "ContinuedFraction",
    "continued_fraction",
    "t_sequence",
    "MontesinosData",
    "MontesinosParseError",
    "ScopeError",
    "standardize",
    "is_standard",
    "equivalent",
    "determinant_formula",
    "montesinos_qa",
    "rational_tangle",
    "to_diagram",
    "two_bridge",
]


class ScopeError(ValueError):
    """The classification hypothesis does not hold for the given data."""


class MontesinosParseError(ValueError):
    def __init__(self, msg: str, column: int):
        super().__init__(f"column {column}: {msg}")
        self.column = column


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(a) for a in self.terms))
        if not self.terms or any(a < 1 for a in self.terms):
            raise ValueError("continued fraction terms must be a nonempty list of positive integers")

    def value(self) -> Fraction:
        """``a_n + 1/(a_{n-1} + ... + 1/a_1)``."""
        v = Fraction(self.terms[0])
        for a in self.terms[1:]:
            v = a + 1 / v
        return v


def continued_fraction(beta: int, alpha: int) -> ContinuedFraction:
    if not (alpha > beta >= 1) or gcd(alpha, beta) != 1:
        raise ValueError(f"need coprime alpha > beta >= 1, got beta={beta}, alpha={alpha}")
    quotients = []
    a, b = alpha, beta
    while b:
        quotients.append(a // b)
        a, b = b, a % b
    # Euclid never ends on quotient 1 here, but keep the canonical fold anyway
    if len(quotients) > 1 and quotients[-1] == 1:
        quotients[-2] += 1
        quotients.pop()
    return ContinuedFraction(tuple(reversed(quotients)))


def t_sequence(cf: ContinuedFraction) -> list:
    seq = [1, cf.terms[0]]
    for a in cf.terms[1:]:
        seq.append(a * seq[-1] + seq[-2])
    return seq


@dataclass(frozen=True)
class MontesinosData:
    e: int
    tangles: tuple  # (alpha, beta) pairs

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.tangles)
        object.__setattr__(self, "tangles", pairs)
        for a, b in pairs:
            if a < 2:
                raise ValueError(f"tangle {a}/{b}: alpha must be at least 2")
            if gcd(a, b) != 1:
                raise ValueError(f"tangle {a}/{b}: alpha and beta must be coprime")

    @property
    def r(self) -> int:
        return len(self.tangles)

    @property
    def e0(self) -> Fraction:
        return self.e - sum(Fraction(b, a) for a, b in self.tangles)

    def to_text(self) -> str:
        return f"M({self.e}; " + ", ".join(f"{a}/{b}" for a, b in self.tangles) + ")"

    @classmethod
    def parse(cls, text: str) -> "MontesinosData":
        m = re.fullmatch(r"\s*M\s*\(\s*(-?\d+)\s*;(.*)\)\s*", text)
        if not m:
            raise MontesinosParseError(f"expected 'M(e; alpha/beta, ...)', got {text!r}", 1)
        pairs = []
        offset = m.start(2)
        for piece in re.finditer(r"[^,]+", m.group(2)):
            pm = re.fullmatch(r"\s*(-?\d+)\s*/\s*(-?\d+)\s*", piece.group())
            if not pm:
                raise MontesinosParseError(f"bad tangle {piece.group().strip()!r}", offset + piece.start() + 1)
            pairs.append((int(pm.group(1)), int(pm.group(2))))
        if not pairs:
            raise MontesinosParseError("no tangles given", offset + 1)
        try:
            return cls(int(m.group(1)), tuple(pairs))
        except ValueError as exc:
            raise MontesinosParseError(str(exc), offset + 1) from None


def standardize(m: MontesinosData) -> MontesinosData:
    e = m.e
    pairs = []
    for a, b in m.tangles:
        b2 = b % a
        if b2 == 0:
            raise ValueError(f"tangle {a}/{b} has integer slope")
        e += (b2 - b) // a
        pairs.append((a, b2))
    return MontesinosData(e, tuple(pairs))


def is_standard(m: MontesinosData) -> bool:
    return all(0 < b < a for a, b in m.tangles)


def _check_scope(m: MontesinosData) -> None:
    if m.r < 3 or sum(Fraction(1, a) for a, _ in m.tangles) > m.r - 2:
        raise ScopeError(f"{m.to_text()} is outside the classification hypothesis (r >= 3, sum 1/alpha <= r - 2)")


def equivalent(m1: MontesinosData, m2: MontesinosData) -> bool:
    _check_scope(m1)
    _check_scope(m2)
    if m1.e0 != m2.e0 or m1.r != m2.r:
        return False
    s1 = [Fraction(b % a, a) for a, b in m1.tangles]
    s2 = [Fraction(b % a, a) for a, b in m2.tangles]
    for seq in (s2, s2[::-1]):
        for k in range(len(seq)):
            if seq[k:] + seq[:k] == s1:
                return True
    return False


def determinant_formula(m: MontesinosData) -> int:
    total = prod(a for a, _ in m.tangles) * (-m.e + sum(Fraction(b, a) for a, b in m.tangles))
    assert total.denominator == 1
    return abs(total.numerator)


def montesinos_qa(m: MontesinosData) -> tuple:
    """``(is_qa, reason)`` for data in standard form."""
    if not is_standard(m):
        raise ValueError(f"{m.to_text()} is not in standard form; call standardize first")
    e, r = m.e, m.r
    if e <= 0:
        return True, "e <= 0"
    if e >= r:
        return True, "e >= r"
    fr = [Fraction(a, b) for a, b in m.tangles]
    co = [Fraction(a, a - b) for a, b in m.tangles]
    if e == 1 and r >= 2:
        if any(co[i] > min(fr[j] for j in range(r) if j != i) for i in range(r)):
            return True, "e = 1 condition"
    if e == r - 1 and r >= 2:
        if any(fr[i] > min(co[j] for j in range(r) if j != i) for i in range(r)):
            return True, "e = r-1 condition"
    return False, "no condition holds"


def rational_tangle(num: int, den: int) -> tg.Tangle:
    """Alternating tangle with fraction ``num/den`` for coprime positive arguments."""
    if num < 1 or den < 1 or gcd(num, den) != 1:
        raise ValueError(f"need coprime positive num/den, got {num}/{den}")
    if den == 1:
        return tg.integer(num)
    if num < den:
        return tg.invert(rational_tangle(den, num))
    return tg.from_terms(continued_fraction(den, num).terms)


def to_diagram(m: MontesinosData) -> PlanarDiagram:
    """Oriented diagram: the standard-form tangles in a row followed by ``-e`` half-twists."""
    s = standardize(m)
    t = tg.integer(-s.e)
    for a, b in s.tangles:
        t = tg.add(rational_tangle(b, a), t)
    return orient(tg.numerator(t))


def two_bridge(p: int, q: int) -> PlanarDiagram:
    """Oriented alternating diagram of the two-bridge link with determinant ``p``."""
    return orient(tg.numerator(rational_tangle(p, q)))
