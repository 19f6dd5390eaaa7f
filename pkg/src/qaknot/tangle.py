"""Four-ended tangles assembled from PD crossings.

A tangle sits in a box with ends NW, NE, SW, SE.  It stores raw crossing
tuples together with the arc label at each end; labels at different ends may
coincide when an arc passes through the box without crossing anything.
Fractions follow the usual convention: ``integer(1)`` has fraction 1, the sum
places the second tangle to the right of the first, ``rotate`` maps F to -1/F
and ``mirror`` maps F to -F.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .diagram import PlanarDiagram

_ENDS = ("NW", "NE", "SW", "SE")


@dataclass(frozen=True)
class Tangle:
    crossings: tuple
    ends: tuple  # labels at (NW, NE, SW, SE)
    n_free_loops: int = 0

    def end(self, name: str) -> int:
        return self.ends[_ENDS.index(name)]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


class _Joiner:
    """Union-find over arc labels that counts crossing-free loops it closes."""

    def __init__(self):
        self.parent: dict = {}
        self.loops = 0

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def join(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.loops += 1
        else:
            self.parent[rx] = ry


def _relabel(crossings, ends, find) -> tuple:
    fresh = count(1)
    names: dict = {}

    def name(x):
        r = find(x)
        if r not in names:
            names[r] = next(fresh)
        return names[r]

    cs = tuple(tuple(name(x) for x in c) for c in crossings)
    return cs, tuple(name(x) for x in ends)


def integer(n: int) -> Tangle:
    """Horizontal row of ``|n|`` crossings; ``[0]`` is two horizontal arcs."""
    if n == 0:
        return Tangle((), (1, 1, 2, 2))
    # column k has top label 2k+1 and bottom label 2k+2 on its left side
    cs = []
    for k in range(abs(n)):
        nw, sw, ne, se = 2 * k + 1, 2 * k + 2, 2 * k + 3, 2 * k + 4
        cs.append((nw, sw, se, ne))
    t = Tangle(tuple(cs), (1, 2 * abs(n) + 1, 2, 2 * abs(n) + 2))
    return t if n > 0 else mirror(t)


def mirror(t: Tangle) -> Tangle:
    return Tangle(tuple((b, c, d, a) for a, b, c, d in t.crossings), t.ends, t.n_free_loops)


def rotate(t: Tangle) -> Tangle:
    """Quarter turn counterclockwise; PD tuples are unchanged by rotation."""
    nw, ne, sw, se = t.ends
    return Tangle(t.crossings, (ne, se, nw, sw), t.n_free_loops)


def invert(t: Tangle) -> Tangle:
    return mirror(rotate(t))


def add(t: Tangle, s: Tangle) -> Tangle:
    shift = max([x for c in t.crossings for x in c] + list(t.ends)) + 1
    s_cs = tuple(tuple(x + shift for x in c) for c in s.crossings)
    s_ends = tuple(x + shift for x in s.ends)
    j = _Joiner()
    j.join(t.ends[1], s_ends[0])
    j.join(t.ends[3], s_ends[2])
    cs, ends = _relabel(t.crossings + s_cs, (t.ends[0], s_ends[1], t.ends[2], s_ends[3]), j.find)
    return Tangle(cs, ends, t.n_free_loops + s.n_free_loops + j.loops)


def numerator(t: Tangle) -> PlanarDiagram:
    """Close NW to NE and SW to SE."""
    j = _Joiner()
    j.join(t.ends[0], t.ends[1])
    j.join(t.ends[2], t.ends[3])
    cs, _ = _relabel(t.crossings, t.ends, j.find)
    return PlanarDiagram(cs, t.n_free_loops + j.loops)


def denominator(t: Tangle) -> PlanarDiagram:
    return numerator(rotate(t))


def from_terms(terms) -> Tangle:
    """Tangle with fraction ``a_n + 1/(a_{n-1} + ... + 1/a_1)``."""
    t = integer(terms[0])
    for a in terms[1:]:
        t = add(integer(a), invert(t))
    return t
