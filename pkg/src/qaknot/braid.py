"""
Braid words, closures, the Burau representation of B3 and Birman's trace
formula for the Jones polynomial of a closed 3-braid.

A braid word is a sequence of nonzero integers: ``k`` is sigma_|k| raised to
``sign(k)``.  Closures are drawn with every strand running downward, so a
positive letter gives a positive crossing.  For example the 2-braid
``[1, 1, 1]`` closes to the right-handed trefoil with ``V = -t^4 + t^3 + t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .diagram import PlanarDiagram, jones
from .laurent import LaurentPoly

__all__ = [
    "BraidWord",
    "BaldwinNormalForm",
    "BurauMatrix",
    "burau",
    "full_twist_check",
    "birman_jones",
    "closure",
    "expand_normal_form",
    "baldwin_qa",
    "baldwin_reason",
    "torus_2n_jones",
    "FULL_TWIST",
]

FULL_TWIST = (1, 2, 1, 2, 1, 2)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(int(k) for k in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for k in letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(f"letter {k} invalid on {self.strands} strands")

    @property
    def exponent_sum(self) -> int:
        return sum(1 if k > 0 else -1 for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(max(self.strands, other.strands), self.letters + other.letters)

    def to_text(self) -> str:
        return " ".join(str(k) for k in self.letters)

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Whitespace-separated signed integers, e.g. ``"1 1 1 2"``."""
        letters = []
        for m in re.finditer(r"\S+", text):
            try:
                letters.append(int(m.group()))
            except ValueError:
                raise ValueError(f"column {m.start() + 1}: {m.group()!r} is not a braid letter") from None
        if strands is None:
            strands = max([abs(k) for k in letters], default=1) + 1
        return cls(strands, tuple(letters))


# --------------------------------------------------------------------------
# Burau representation of B3

_T = lambda e=1, c=1: LaurentPoly.monomial(e, c, "t")  # noqa: E731
_ZERO = LaurentPoly({}, "t")
_ONE = _T(0)


@dataclass(frozen=True)
class BurauMatrix:
    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def __matmul__(self, o: "BurauMatrix") -> "BurauMatrix":
        return BurauMatrix(
            self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
        )

    def trace(self) -> LaurentPoly:
        return self.a + self.d

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def scaled(self, p: LaurentPoly) -> "BurauMatrix":
        return BurauMatrix(self.a * p, self.b * p, self.c * p, self.d * p)

    def rows(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))

    @classmethod
    def identity(cls) -> "BurauMatrix":
        return cls(_ONE, _ZERO, _ZERO, _ONE)


_GEN = {
    1: BurauMatrix(_T(1, -1), _ONE, _ZERO, _ONE),
    2: BurauMatrix(_ONE, _ZERO, _T(1), _T(1, -1)),
    -1: BurauMatrix(_T(-1, -1), _T(-1), _ZERO, _ONE),
    -2: BurauMatrix(_ONE, _ZERO, _ONE, _T(-1, -1)),
}


def burau(word: BraidWord | Sequence[int]) -> BurauMatrix:
    if not isinstance(word, BraidWord):
        word = BraidWord(3, tuple(word))
    if word.strands != 3:
        raise ValueError("the Burau matrices here are for 3-strand braids only")
    m = BurauMatrix.identity()
    for k in word.letters:
        m = m @ _GEN[k]
    return m


def full_twist_check(power: int = 1) -> BurauMatrix:
    """Verify that the full twist ``(s1 s2)^3`` maps to ``t^3`` times the identity."""
    letters = FULL_TWIST * power if power >= 0 else tuple(-k for k in reversed(FULL_TWIST)) * (-power)
    m = burau(BraidWord(3, letters))
    expected = BurauMatrix.identity().scaled(_T(3 * power))
    if m != expected:
        raise AssertionError(f"full twist^{power} gives {m.rows()}, expected t^{3 * power} I")
    return m


def birman_jones(word: BraidWord | Sequence[int]) -> LaurentPoly:
    """``(-sqrt t)^e (t + 1/t + tr burau(word))`` for a 3-braid."""
    if not isinstance(word, BraidWord):
        word = BraidWord(3, tuple(word))
    e = word.exponent_sum
    core = _T(1) + _T(-1) + burau(word).trace()
    return core * LaurentPoly({e: -1 if e % 2 else 1}, "t")


# --------------------------------------------------------------------------
# closure


def closure(word: BraidWord | Sequence[int], strands: int | None = None) -> PlanarDiagram:
    """Oriented PD of the braid closure, strands running downward.

    At a crossing between positions ``i`` (left) and ``i+1`` the incoming
    labels are ``x`` (left) and ``y`` (right) and the outgoing ones ``x'``
    (left) and ``y'`` (right).  ``sigma_i`` sends the over-strand from top
    right to bottom left, giving ``X(x, x', y', y)``; its inverse gives
    ``X(y, x, x', y')``.
    """
    if not isinstance(word, BraidWord):
        word = BraidWord(strands or max([abs(k) for k in word], default=1) + 1, tuple(word))
    n = word.strands
    current = list(range(1, n + 1))
    nxt = n + 1
    raw = []
    signs = []
    for k in word.letters:
        i = abs(k) - 1
        x, y = current[i], current[i + 1]
        xo, yo = nxt, nxt + 1
        nxt += 2
        if k > 0:
            raw.append((x, xo, yo, y))
        else:
            raw.append((y, x, xo, yo))
        signs.append(1 if k > 0 else -1)
        current[i], current[i + 1] = xo, yo
    # close up: bottom label at position j is identified with top label j
    alias = {}
    free = 0
    for j in range(n):
        top, bottom = j + 1, current[j]
        if top == bottom:
            free += 1
        else:
            alias[bottom] = top
    crossings = tuple(tuple(alias.get(x, x) for x in c) for c in raw)
    return PlanarDiagram(crossings, free, tuple(signs))


# --------------------------------------------------------------------------
# Murasugi normal forms and Baldwin's classification


@dataclass(frozen=True)
class BaldwinNormalForm:
    """One of the three conjugacy normal forms of a 3-braid.

    ``type1``: ``h^n s1^p1 s2^-q1 ... s1^ps s2^-qs`` with all ``p, q >= 1``;
    ``type2``: ``h^n s2^m``; ``type3``: ``h^n s1^m s2^-1`` with ``m`` in {-1,-2,-3}.
    """

    variant: str
    n: int
    pairs: tuple = field(default=())
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(p), int(q)) for p, q in self.pairs))
        if self.variant not in ("type1", "type2", "type3"):
            raise ValueError(f"unknown normal-form variant {self.variant!r}")
        if self.variant == "type1":
            if not self.pairs:
                raise ValueError("type1 needs at least one (p, q) pair")
            if any(p < 1 or q < 1 for p, q in self.pairs):
                raise ValueError("type1 exponents must be positive")
        elif self.variant == "type3" and self.m not in (-1, -2, -3):
            raise ValueError("type3 needs m in {-1, -2, -3}")

    def to_text(self) -> str:
        if self.variant == "type1":
            return f"type1 n={self.n} pairs=" + ",".join(f"{p}:{q}" for p, q in self.pairs)
        return f"{self.variant} n={self.n} m={self.m}"

    @classmethod
    def parse(cls, text: str) -> "BaldwinNormalForm":
        """``"type1 n=1 pairs=2:3,1:2"``, ``"type2 n=1 m=-2"``, ``"type3 n=0 m=-3"``."""
        tokens = text.split()
        if not tokens or tokens[0] not in ("type1", "type2", "type3"):
            raise ValueError(f"column 1: expected type1/type2/type3 in {text!r}")
        fields = {}
        for tok in tokens[1:]:
            key, sep, val = tok.partition("=")
            if not sep:
                raise ValueError(f"column {text.index(tok) + 1}: expected key=value, got {tok!r}")
            fields[key] = val
        try:
            n = int(fields.get("n", "0"))
            if tokens[0] == "type1":
                pairs = tuple(tuple(int(v) for v in pq.split(":")) for pq in fields["pairs"].split(","))
                return cls("type1", n, pairs)
            return cls(tokens[0], n, (), int(fields["m"]))
        except (KeyError, ValueError) as exc:
            raise ValueError(f"bad normal form {text!r}: {exc}") from None


def expand_normal_form(nf: BaldwinNormalForm) -> BraidWord:
    if nf.n >= 0:
        letters = list(FULL_TWIST) * nf.n
    else:
        letters = [-k for k in reversed(FULL_TWIST)] * (-nf.n)
    if nf.variant == "type1":
        for p, q in nf.pairs:
            letters += [1] * p + [-2] * q
    elif nf.variant == "type2":
        letters += [2 if nf.m > 0 else -2] * abs(nf.m)
    else:
        letters += [-1] * (-nf.m) + [-2]
    return BraidWord(3, tuple(letters))


def baldwin_qa(nf: BaldwinNormalForm) -> bool:
    return baldwin_reason(nf)[0]


def baldwin_reason(nf: BaldwinNormalForm) -> tuple:
    """QA status of the closure together with the clause that decided it."""
    if nf.variant == "type1":
        return nf.n in (-1, 0, 1), "type1 requires n in {-1, 0, 1}"
    if nf.variant == "type2":
        ok = (nf.n == 1 and nf.m in (-1, -2, -3)) or (nf.n == -1 and nf.m in (1, 2, 3))
        return ok, "type2 requires n=1, m in {-1,-2,-3} or n=-1, m in {1,2,3}"
    return nf.n in (0, 1), "type3 requires n in {0, 1}"


def torus_2n_jones(n: int) -> LaurentPoly:
    """Jones polynomial of the (2, n) torus link as the closure of ``s1^n``."""
    if n < 2:
        raise ValueError("torus_2n_jones needs n >= 2")
    return jones(closure(BraidWord(2, (1,) * n)))
