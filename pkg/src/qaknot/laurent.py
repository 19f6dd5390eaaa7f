"""
Exact Laurent polynomials with half-integer exponents.

Exponents are stored as integer *keys* counting half-units, so the key ``k``
stands for ``x^(k/2)``.  The same representation carries Kauffman brackets
(variable ``A``, always even keys) and Jones polynomials (variable ``t``,
where odd keys are the half powers ``t^(1/2)``).

>>> p = LaurentPoly.from_exponents({4: -1, 3: 1, 1: 1})
>>> str(p)
'-1*t^4 + 1*t^3 + 1*t^1'
>>> LaurentPoly.parse(str(p)) == p
True
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "Gaussian",
    "GapReport",
    "gap_report",
    "eval_gaussian",
    "VARIABLES",
]

VARIABLES = ("A", "t")

Exponent = Union[int, Fraction]


class LaurentPoly:
    """Immutable integer Laurent polynomial in a half-power variable."""

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "t"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        self._c = {int(k): int(v) for k, v in (coeffs or {}).items() if v}
        self.var = var
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def _raw(cls, coeffs: dict, var: str) -> "LaurentPoly":
        # trusted fast path: coeffs already has int keys and no zero values
        p = object.__new__(cls)
        p._c = coeffs
        p.var = var
        p._hash = None
        return p

    @classmethod
    def from_exponents(cls, terms: Mapping[Exponent, int], var: str = "t") -> "LaurentPoly":
        """Build from ``{exponent: coeff}`` where exponents are ints or halves."""
        out: dict[int, int] = {}
        for e, c in terms.items():
            k = _exp_to_key(e)
            out[k] = out.get(k, 0) + c
        return cls(out, var)

    @classmethod
    def monomial(cls, exponent: Exponent = 0, coeff: int = 1, var: str = "t") -> "LaurentPoly":
        return cls({_exp_to_key(exponent): coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    # basic accessors ------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Copy of the key -> coefficient map."""
        return dict(self._c)

    def items(self):
        return self._c.items()

    def keys(self) -> list[int]:
        return sorted(self._c)

    def coeff(self, exponent: Exponent) -> int:
        return self._c.get(_exp_to_key(exponent), 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    @property
    def min_key(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    @property
    def max_key(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def min_exponent(self) -> Fraction:
        return Fraction(self.min_key, 2)

    def max_exponent(self) -> Fraction:
        return Fraction(self.max_key, 2)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly._raw({0: other} if other else {}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._c) > len(self._c):
            big, small = other._c, self._c
        else:
            big, small = self._c, other._c
        out = dict(big)
        for k, v in small.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -v for k, v in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return LaurentPoly._raw({}, self.var)
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, vb in b.items():
            for ka, va in a.items():
                k = ka + kb
                out[k] = get(k, 0) + va * vb
        return LaurentPoly._raw({k: v for k, v in out.items() if v}, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((k, v),) = self._c.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly._raw({k * n: v ** (-n)}, self.var)
        result = LaurentPoly._raw({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, keys: int) -> "LaurentPoly":
        """Multiply by ``x^(keys/2)``."""
        return LaurentPoly._raw({k + keys: v for k, v in self._c.items()}, self.var)

    def scale_keys(self, factor: int) -> "LaurentPoly":
        """Substitute ``x -> x^factor`` (``factor=-1`` inverts the variable)."""
        return LaurentPoly._raw({k * factor: v for k, v in self._c.items()}, self.var)

    def a_to_t(self) -> "LaurentPoly":
        """Rewrite a polynomial in ``A`` under the substitution ``t^(1/2) = A^-2``.

        ``A^m`` (key ``2m``) becomes ``t^(-m/4)`` (key ``-m/2``), so every
        ``A``-exponent must be even.
        """
        if self.var != "A":
            raise ValueError("a_to_t expects a polynomial in A")
        out = {}
        for k, v in self._c.items():
            if k % 4:
                raise ValueError(f"A-exponent {k // 2} is odd; not a t^(1/2) power")
            out[-k // 4] = v
        return LaurentPoly._raw(out, "t")

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c and not other._c:
            return True
        return self.var == other.var and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.var if self._c else "", frozenset(self._c.items())))
        return self._hash

    # text -----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, k in enumerate(sorted(self._c, reverse=True)):
            c = self._c[k]
            body = _term_text(abs(c), k, self.var)
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "LaurentPoly":
        """Parse the term-list format produced by :meth:`to_text`.

        ``var`` fixes the tag for constant-only input; otherwise it is taken
        from the text (defaulting to ``t``).
        """
        return _parse(text, var)

    # evaluation -----------------------------------------------------------

    def eval_gaussian(self, point) -> "Gaussian":
        return eval_gaussian(self, point)


def _exp_to_key(e: Exponent) -> int:
    f = Fraction(e)
    k = f * 2
    if k.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return int(k)


def _term_text(c: int, key: int, var: str) -> str:
    if key == 0:
        return str(c)
    if key % 2 == 0:
        return f"{c}*{var}^{key // 2}"
    return f"{c}*{var}^({key}/2)"


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<var1>[At])(?P<exp1>\s*\^\s*(?:\(\s*-?\d+\s*(?:/\s*2\s*)?\)|-?\d+))?)?
          | (?P<var2>[At])(?P<exp2>\s*\^\s*(?:\(\s*-?\d+\s*(?:/\s*2\s*)?\)|-?\d+))?
        )\s*""",
    re.VERBOSE,
)


class PolyParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        self.column = pos + 1
        super().__init__(f"{msg} at column {pos + 1}: {text!r}")


def _parse(text: str, var: str | None) -> LaurentPoly:
    s = text.strip()
    if s == "0":
        return LaurentPoly({}, var or "t")
    pos = 0
    out: dict[int, int] = {}
    seen_var = None
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var2") is None):
            raise PolyParseError("malformed term", text, pos)
        if not first and m.group("sign") is None:
            raise PolyParseError("missing '+' or '-' between terms", text, pos)
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            v, e = m.group("var1"), m.group("exp1")
        else:
            c = 1
            v, e = m.group("var2"), m.group("exp2")
        if v is None:
            key = 0
        else:
            if seen_var and v != seen_var:
                raise PolyParseError("mixed variables", text, pos)
            seen_var = v
            key = 2 if e is None else _parse_exp_key(e)
        out[key] = out.get(key, 0) + sign * c
        pos = m.end()
    tag = seen_var or var or "t"
    if var is not None and seen_var is not None and var != seen_var:
        raise ValueError(f"expected variable {var}, found {seen_var}")
    return LaurentPoly(out, tag)


def _parse_exp_key(e: str) -> int:
    e = e.replace(" ", "").lstrip("^").strip("()")
    if "/" in e:
        num, den = e.split("/")
        if int(den) != 2:
            raise ValueError(f"exponent denominator must be 2: {e}")
        return int(num)
    return 2 * int(e)


# --------------------------------------------------------------------------
# Gaussian integers


@dataclass(frozen=True)
class Gaussian:
    re: int
    im: int = 0

    def __add__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re + other.re, self.im + other.im)

    def __mul__(self, other: "Gaussian") -> "Gaussian":
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def magnitude(self) -> int:
        """Exact ``|z|``; raises if it is not an integer."""
        n = self.norm()
        r = math.isqrt(n)
        if r * r != n:
            raise ValueError(f"|{self}| is not an integer")
        return r


_UNIT_POWER = {1: 0, 1j: 1, -1: 2, -1j: 3}
_I_POWERS = (Gaussian(1, 0), Gaussian(0, 1), Gaussian(-1, 0), Gaussian(0, -1))


def eval_gaussian(p: LaurentPoly, point) -> Gaussian:
    """Evaluate at a unit ``point`` in {1, -1, i, -i} for the half-power variable.

    Each key ``k`` contributes ``coeff * point**k``.  With ``point = i`` a
    Jones polynomial is evaluated at ``t = -1``.
    """
    try:
        u = _UNIT_POWER[complex(point)]
    except (KeyError, TypeError):
        raise ValueError(f"evaluation point must be one of 1, -1, 1j, -1j; got {point!r}")
    re_, im = 0, 0
    for k, c in p.items():
        w = _I_POWERS[(u * k) % 4]
        re_ += c * w.re
        im += c * w.im
    return Gaussian(re_, im)


# --------------------------------------------------------------------------
# Gap analysis


@dataclass(frozen=True)
class GapReport:
    min_exponent: Fraction
    coefficients: tuple[int, ...]
    gap_positions: tuple[int, ...]
    strictly_alternating: bool
    weakly_alternating: bool

    @property
    def span(self) -> int:
        return len(self.coefficients) - 1

    @property
    def has_gap(self) -> bool:
        return bool(self.gap_positions)

    def to_dict(self) -> dict:
        return {
            "min_exponent": str(self.min_exponent),
            "coefficients": list(self.coefficients),
            "gap_positions": list(self.gap_positions),
            "strictly_alternating": self.strictly_alternating,
            "weakly_alternating": self.weakly_alternating,
        }


def gap_report(p: LaurentPoly) -> GapReport:
    """Dense coefficient vector at integer steps plus gap/alternation flags."""
    if p.is_zero():
        raise ValueError("gap_report of the zero polynomial")
    keys = p.keys()
    lo, hi = keys[0], keys[-1]
    if any((k - lo) % 2 for k in keys):
        raise ValueError("exponents are not all congruent mod 1")
    coeffs = tuple(p._c.get(k, 0) for k in range(lo, hi + 1, 2))
    m = len(coeffs) - 1
    gaps = tuple(i for i in range(1, m) if coeffs[i] == 0)
    prods = [coeffs[i] * coeffs[i + 1] for i in range(m)]
    return GapReport(
        min_exponent=Fraction(lo, 2),
        coefficients=coeffs,
        gap_positions=gaps,
        strictly_alternating=all(x < 0 for x in prods),
        weakly_alternating=all(x <= 0 for x in prods),
    )


def delta(var: str = "A") -> LaurentPoly:
    """The loop value ``-A^-2 - A^2``."""
    return LaurentPoly({-4: -1, 4: -1}, var)


def product(polys: Iterable[LaurentPoly], var: str = "t") -> LaurentPoly:
    out = LaurentPoly.constant(1, var)
    for p in polys:
        out = out * p
    return out
