"""
Planar-diagram (PD) link diagrams and Kauffman bracket engines.

PD convention
-------------
A crossing is a 4-tuple of arc labels listed counterclockwise, starting at
the *incoming* under-strand.  The under-strand runs from position 0 to
position 2; the over-strand joins positions 1 and 3.  Every arc label appears
exactly twice over all crossings.  Worked example, the right-handed trefoil
as the closure of the 2-braid ``s1 s1 s1``::

    X(1,3,4,2)  X(3,5,6,4)  X(5,1,2,6)      ORIENT(+1,+1,+1)

Smoothings at ``X(a,b,c,d)``: the A-smoothing (``zero``) joins ``a-b`` and
``c-d``; the A^-1-smoothing (``infinity``) joins ``a-d`` and ``b-c``.

Orientation is stored as one sign per crossing.  The under-strand direction
is fixed by the PD convention, so the sign tells which way the over-strand
runs: ``+1`` means it enters at position 3 and leaves at position 1.  This
matches the usual right-handed (positive) crossing.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import LaurentPoly, delta, eval_gaussian

__all__ = [
    "PlanarDiagram",
    "BracketResult",
    "DiagramError",
    "CrossingCapError",
    "PDParseError",
    "smooth",
    "bracket_state_sum",
    "bracket_skein",
    "bracket",
    "writhe",
    "jones",
    "determinant",
    "orient",
    "components",
    "mirror",
    "is_alternating",
    "is_connected",
    "is_reduced",
    "reduce_kinks",
    "remove_nugatory",
    "nugatory_crossings",
    "canonical_key",
    "disjoint_union",
    "add_kink",
    "faces",
    "is_planar",
    "unknot",
    "unlink",
]

Crossing = tuple  # (a, b, c, d)

ZERO_PAIRS = ((0, 1), (2, 3))
INF_PAIRS = ((0, 3), (1, 2))

DEFAULT_STATE_SUM_CAP = 20


class DiagramError(ValueError):
    pass


class CrossingCapError(DiagramError):
    pass


class PDParseError(DiagramError):
    def __init__(self, msg: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {msg}")


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple = ()
    n_free_loops: int = 0
    orientation: tuple | None = None

    def __post_init__(self):
        cs = tuple(tuple(int(x) for x in c) for c in self.crossings)
        object.__setattr__(self, "crossings", cs)
        if any(len(c) != 4 for c in cs):
            raise DiagramError("every crossing needs exactly four arc labels")
        if self.n_free_loops < 0:
            raise DiagramError("negative free-loop count")
        if not cs and self.n_free_loops == 0:
            raise DiagramError("empty diagram")
        counts = Counter(x for c in cs for x in c)
        bad = sorted(k for k, v in counts.items() if v != 2)
        if bad:
            raise DiagramError(f"arc labels must appear exactly twice; offending: {bad[:8]}")
        if self.orientation is not None:
            o = tuple(int(s) for s in self.orientation)
            object.__setattr__(self, "orientation", o)
            if len(o) != len(cs) or any(s not in (1, -1) for s in o):
                raise DiagramError("orientation needs one sign (+1/-1) per crossing")
            _check_orientation(cs, o)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def oriented(self) -> bool:
        return self.orientation is not None

    def labels(self) -> set:
        return {x for c in self.crossings for x in c}

    def unoriented(self) -> "PlanarDiagram":
        return PlanarDiagram(self.crossings, self.n_free_loops, None)

    # text / json ------------------------------------------------------------

    def to_text(self) -> str:
        lines = ["X(%d,%d,%d,%d)" % c for c in self.crossings]
        top = max(self.labels(), default=0)
        lines += [f"O({top + i + 1})" for i in range(self.n_free_loops)]
        if self.orientation is not None:
            lines.append("ORIENT(" + ",".join("%+d" % s for s in self.orientation) + ")")
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> "PlanarDiagram":
        return parse_pd(text)

    def to_json(self) -> str:
        return json.dumps({
            "crossings": [list(c) for c in self.crossings],
            "n_free_loops": self.n_free_loops,
            "orientation": list(self.orientation) if self.orientation is not None else None,
        })

    @classmethod
    def from_json(cls, text: str | dict) -> "PlanarDiagram":
        obj = json.loads(text) if isinstance(text, str) else text
        if isinstance(obj, list):
            return cls(tuple(tuple(c) for c in obj))
        return cls(
            tuple(tuple(c) for c in obj.get("crossings", [])),
            int(obj.get("n_free_loops", 0)),
            tuple(obj["orientation"]) if obj.get("orientation") is not None else None,
        )


def unknot() -> PlanarDiagram:
    return PlanarDiagram((), 1)


def unlink(k: int) -> PlanarDiagram:
    return PlanarDiagram((), k)


@dataclass(frozen=True)
class BracketResult:
    poly: LaurentPoly
    engine: str


def _outgoing_positions(sign: int) -> tuple:
    return (2, 1) if sign > 0 else (2, 3)


def _check_orientation(cs, signs) -> None:
    out = Counter()
    for c, s in zip(cs, signs):
        for p in _outgoing_positions(s):
            out[c[p]] += 1
    for c in cs:
        for x in c:
            if out[x] != 1:
                raise DiagramError(f"orientation inconsistent along arc {x}")


# --------------------------------------------------------------------------
# PD text parsing

_X_RE = re.compile(r"X\s*[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])]")
_O_RE = re.compile(r"O\s*[\[(]\s*(-?\d+)\s*[\])]")
_ORIENT_RE = re.compile(r"ORIENT\s*[\[(]([^\])]*)[\])]")
_SKIP_RE = re.compile(r"[\s,;]+|PD\s*[\[(]|[\])]")


def _sign_token(t: str) -> int:
    v = {"+": 1, "-": -1}.get(t)
    if v is None:
        v = int(t)
    if v not in (1, -1):
        raise ValueError(t)
    return v


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X(a,b,c,d)`` lines, ``O(k)`` free loops and ``ORIENT(...)``.

    Also accepts JSON (object form or a bare list of 4-lists, as found in
    knot-table exports) and Mathematica-style ``PD[X[...], ...]``.
    """
    s = text.strip()
    if s.startswith("{") or s.startswith("[["):
        try:
            return PlanarDiagram.from_json(s)
        except json.JSONDecodeError as exc:
            raise PDParseError(exc.msg, exc.lineno, exc.colno) from None
    crossings, loops, orientation = [], 0, None
    pos = 0
    while pos < len(text):
        for regex in (_SKIP_RE, _X_RE, _O_RE, _ORIENT_RE):
            m = regex.match(text, pos)
            if m and m.end() > pos:
                break
        else:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            raise PDParseError(f"unexpected {text[pos:pos + 12]!r}", line, col)
        if regex is _X_RE:
            crossings.append(tuple(int(g) for g in m.groups()))
        elif regex is _O_RE:
            loops += 1
        elif regex is _ORIENT_RE:
            try:
                orientation = tuple(_sign_token(t) for t in re.split(r"[\s,]+", m.group(1).strip()) if t)
            except ValueError:
                line = text.count("\n", 0, pos) + 1
                col = pos - (text.rfind("\n", 0, pos) + 1) + 1
                raise PDParseError("ORIENT entries must be +1/-1", line, col) from None
        pos = m.end()
    return PlanarDiagram(tuple(crossings), loops, orientation)


# --------------------------------------------------------------------------
# low-level helpers on raw crossing tuples


def _smooth_raw(crossings: Sequence, i: int, pairs) -> tuple:
    """Smooth crossing ``i``; return (remaining crossings, closed loops created)."""
    c = crossings[i]
    ren: dict = {}

    def find(x):
        while x in ren:
            x = ren[x]
        return x

    loops = 0
    for p, q in pairs:
        x, y = find(c[p]), find(c[q])
        if x == y:
            loops += 1
        else:
            ren[y] = x
    rest = crossings[:i] + crossings[i + 1:]
    if ren:
        rest = tuple(tuple(find(x) for x in cr) for cr in rest)
    return tuple(rest), loops


def _canonical(crossings) -> tuple:
    relabel: dict = {}
    out = []
    for c in crossings:
        row = []
        for x in c:
            y = relabel.get(x)
            if y is None:
                y = relabel[x] = len(relabel) + 1
            row.append(y)
        out.append(tuple(row))
    return tuple(out)


def canonical_key(d: PlanarDiagram) -> tuple:
    """Arc labels renumbered in first-appearance order, plus the free-loop count."""
    return _canonical(d.crossings), d.n_free_loops


def _ends(crossings) -> dict:
    ends: dict = {}
    for i, c in enumerate(crossings):
        for p, x in enumerate(c):
            ends.setdefault(x, []).append((i, p))
    return ends


def _pieces(crossings, n_free_loops: int) -> int:
    n = len(crossings)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, _), (j, _) in _ends(crossings).values():
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(i) for i in range(n)}) + n_free_loops


# --------------------------------------------------------------------------
# smoothing


def smooth(d: PlanarDiagram, crossing_index: int, kind: str) -> PlanarDiagram:
    """Resolve one crossing; ``kind`` is ``'zero'`` (A) or ``'infinity'`` (A^-1)."""
    if not 0 <= crossing_index < d.n_crossings:
        raise DiagramError(f"crossing index {crossing_index} out of range 0..{d.n_crossings - 1}")
    if kind not in ("zero", "infinity"):
        raise DiagramError(f"unknown smoothing kind {kind!r}")
    rest, loops = _smooth_raw(d.crossings, crossing_index, ZERO_PAIRS if kind == "zero" else INF_PAIRS)
    return PlanarDiagram(rest, d.n_free_loops + loops, None)


# --------------------------------------------------------------------------
# bracket engines

_A = LaurentPoly({2: 1}, "A")
_A_INV = LaurentPoly({-2: 1}, "A")
_DELTA = delta("A")
_ONE_A = LaurentPoly({0: 1}, "A")


class _DeltaPowers:
    def __init__(self):
        self._p = [_ONE_A]

    def __getitem__(self, k: int) -> LaurentPoly:
        while len(self._p) <= k:
            self._p.append(self._p[-1] * _DELTA)
        return self._p[k]


_DELTA_POW = _DeltaPowers()


def bracket_state_sum(d: PlanarDiagram, max_crossings: int = DEFAULT_STATE_SUM_CAP) -> BracketResult:
    """Kauffman bracket by enumerating all 2^c smoothing states."""
    cs = d.crossings
    n = len(cs)
    if n > max_crossings:
        raise CrossingCapError(f"{n} crossings exceeds the state-sum cap of {max_crossings}")
    index = {x: k for k, x in enumerate(sorted(d.labels()))}
    m = len(index)
    zero = [(index[c[0]], index[c[1]], index[c[2]], index[c[3]]) for c in cs]
    inf = [(index[c[0]], index[c[3]], index[c[1]], index[c[2]]) for c in cs]
    counts: Counter = Counter()
    for state in range(1 << n):
        parent = list(range(m))
        merges = 0
        for j in range(n):
            a, b, c, e = inf[j] if (state >> j) & 1 else zero[j]
            for x, y in ((a, b), (c, e)):
                while parent[x] != x:
                    x = parent[x]
                while parent[y] != y:
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    merges += 1
        n_inf = bin(state).count("1")
        counts[(n - 2 * n_inf, m - merges)] += 1
    total = LaurentPoly({}, "A")
    for (a_minus_b, loops), cnt in counts.items():
        total = total + _DELTA_POW[loops + d.n_free_loops - 1].shift(2 * a_minus_b) * cnt
    return BracketResult(total, "state_sum")


def _locality_order(crossings) -> tuple:
    """Greedy reordering so each next crossing shares many arcs with those before."""
    n = len(crossings)
    if n <= 2:
        return tuple(crossings)
    remaining = set(range(n))
    order = [0]
    remaining.discard(0)
    seen = Counter(crossings[0])
    while remaining:
        best, best_score = None, -1
        for j in sorted(remaining):
            score = sum(1 for x in crossings[j] if seen[x])
            if score > best_score:
                best, best_score = j, score
        order.append(best)
        remaining.discard(best)
        seen.update(crossings[best])
    return tuple(crossings[j] for j in order)


def _skein_value(crossings, memo: dict) -> LaurentPoly:
    # sum over states of A^(a-b) delta^(loops-1), for a nonempty canonical crossing tuple
    hit = memo.get(crossings)
    if hit is not None:
        return hit
    total = None
    for coef, pairs in ((_A, ZERO_PAIRS), (_A_INV, INF_PAIRS)):
        rest, loops = _smooth_raw(crossings, 0, pairs)
        if rest:
            val = _skein_value(_canonical(rest), memo)
            if loops:
                val = val * _DELTA_POW[loops]
        else:
            val = _DELTA_POW[loops - 1]
        term = val.shift(coef.max_key)
        total = term if total is None else total + term
    memo[crossings] = total
    return total


def bracket_skein(d: PlanarDiagram, memo: dict | None = None) -> BracketResult:
    """Kauffman bracket by recursive skein expansion with a canonical-form memo.

    Crossings are first put in a greedy locality order; the expansion always
    resolves the first remaining crossing.  Partial diagrams reached through
    different smoothing histories share a canonical form, which is what keeps
    the recursion small for diagrams of bounded width.
    """
    if memo is None:
        memo = {}
    if not d.crossings:
        return BracketResult(_DELTA_POW[d.n_free_loops - 1], "skein_memo")
    core = _skein_value(_canonical(_locality_order(d.crossings)), memo)
    if d.n_free_loops:
        core = core * _DELTA_POW[d.n_free_loops]
    return BracketResult(core, "skein_memo")


def bracket(d: PlanarDiagram, engine: str = "skein_memo") -> LaurentPoly:
    if engine == "skein_memo":
        return bracket_skein(d).poly
    if engine == "state_sum":
        return bracket_state_sum(d).poly
    raise ValueError(f"unknown bracket engine {engine!r}")


# --------------------------------------------------------------------------
# orientation, writhe, jones, determinant


def components(d: PlanarDiagram) -> list:
    """Trace link components through crossings.

    Each component is a list of ``(crossing, in_position, out_position)``
    steps in traversal order; free loops are not listed.
    """
    cs = d.crossings
    ends = _ends(cs)
    seen = set()
    comps = []
    for i in range(len(cs)):
        for p in range(4):
            if (i, p) in seen:
                continue
            start = (i, p)
            cur = start
            steps = []
            while True:
                ci, pin = cur
                pout = pin ^ 2
                seen.add((ci, pin))
                seen.add((ci, pout))
                steps.append((ci, pin, pout))
                e1, e2 = ends[cs[ci][pout]]
                cur = e2 if e1 == (ci, pout) else e1
                if cur == start:
                    break
            comps.append(steps)
    return comps


def orient(d: PlanarDiagram, reverse: Iterable[int] = ()) -> PlanarDiagram:
    """Assign an orientation, rotating crossing tuples where needed.

    Each component keeps the direction that agrees with most of its
    under-passages as written; indices in ``reverse`` are flipped from that
    default.  Rotating ``X(a,b,c,d)`` to ``X(c,d,a,b)`` describes the same
    unoriented crossing, so the bracket is unchanged.
    """
    reverse = set(reverse)
    cs = d.crossings
    n = len(cs)
    rotate = [False] * n
    over_in = [None] * n
    for idx, steps in enumerate(components(d)):
        unders = [pin for _, pin, _ in steps if pin in (0, 2)]
        against = sum(1 for pin in unders if pin == 2)
        flip = (len(unders) - against) < against
        if idx in reverse:
            flip = not flip
        for ci, pin, pout in steps:
            if flip:
                pin = pout
            if pin in (0, 2):
                rotate[ci] = pin == 2
            else:
                over_in[ci] = pin
    new_cs, signs = [], []
    for c, rot, oin in zip(cs, rotate, over_in):
        if rot:
            c = (c[2], c[3], c[0], c[1])
            oin = (oin + 2) % 4
        new_cs.append(c)
        signs.append(1 if oin == 3 else -1)
    return PlanarDiagram(tuple(new_cs), d.n_free_loops, tuple(signs))


def _require_orientation(d: PlanarDiagram) -> tuple:
    if not d.crossings:
        return ()
    if d.orientation is None:
        raise DiagramError("diagram has no orientation; call orient() first")
    return d.orientation


def writhe(d: PlanarDiagram) -> int:
    return sum(_require_orientation(d))


def jones(d: PlanarDiagram, engine: str = "skein_memo") -> LaurentPoly:
    """Writhe-normalised bracket rewritten in ``t`` (``t^(1/2) = A^-2``)."""
    w = writhe(d)
    norm = LaurentPoly({-6 * w: -1 if w % 2 else 1}, "A")
    return (norm * bracket(d, engine)).a_to_t()


def determinant(d: PlanarDiagram) -> int:
    """``|V(-1)|``, orienting the diagram arbitrarily if needed."""
    if d.orientation is None:
        d = orient(d)
    return eval_gaussian(jones(d), 1j).magnitude()


# --------------------------------------------------------------------------
# diagram surgery


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing (orientation kept, signs negated)."""
    if d.orientation is None:
        return PlanarDiagram(tuple((b, c, e, a) for a, b, c, e in d.crossings), d.n_free_loops)
    out = []
    for (a, b, c, e), s in zip(d.crossings, d.orientation):
        out.append((e, a, b, c) if s > 0 else (b, c, e, a))
    return PlanarDiagram(tuple(out), d.n_free_loops, tuple(-s for s in d.orientation))


def disjoint_union(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    off = max(d1.labels(), default=0)
    shifted = tuple(tuple(x + off for x in c) for c in d2.crossings)
    if (d1.orientation is None) != (d2.orientation is None):
        o = None
    else:
        o = None if d1.orientation is None else d1.orientation + d2.orientation
    return PlanarDiagram(d1.crossings + shifted, d1.n_free_loops + d2.n_free_loops, o)


def add_kink(d: PlanarDiagram, label: int | None = None, positive: bool = True,
             side: int = 0) -> PlanarDiagram:
    """Insert a Reidemeister-I kink on arc ``label`` (or on a free loop).

    ``side`` picks which of the two planar kinks of the requested sign is
    drawn (the loop sits on the under- or the over-passage first).
    """
    if d.orientation is None:
        d = orient(d)
    cs = list(d.crossings)
    signs = list(d.orientation)
    top = max(d.labels(), default=0)
    loop, new = top + 1, top + 2
    if label is None:
        if not d.n_free_loops:
            raise DiagramError("no free loop to kink; pass an arc label")
        label = new
        loops = d.n_free_loops - 1
    else:
        head = None
        for i, (c, s) in enumerate(zip(cs, signs)):
            for p, x in enumerate(c):
                if x == label and p not in _outgoing_positions(s):
                    head = (i, p)
        if head is None:
            raise DiagramError(f"no arc {label}")
        i, p = head
        row = list(cs[i])
        row[p] = new
        cs[i] = tuple(row)
        loops = d.n_free_loops
    # strand enters the kink on `label` and leaves on `new`
    if positive:
        kink = (loop, loop, new, label) if side == 0 else (label, new, loop, loop)
    else:
        kink = (label, loop, loop, new) if side == 0 else (loop, label, new, loop)
    return PlanarDiagram(tuple(cs) + (kink,), loops, tuple(signs) + (1 if positive else -1,))


def reduce_kinks(d: PlanarDiagram) -> PlanarDiagram:
    """Remove Reidemeister-I kinks until none remain."""
    cs = list(d.crossings)
    signs = list(d.orientation) if d.orientation is not None else None
    loops = d.n_free_loops
    changed = True
    while changed:
        changed = False
        for i, c in enumerate(cs):
            for p in range(4):
                if c[p] == c[(p + 1) % 4]:
                    x, y = c[(p + 2) % 4], c[(p + 3) % 4]
                    del cs[i]
                    if signs is not None:
                        del signs[i]
                    if x == y:
                        loops += 1
                    else:
                        cs = [tuple(x if z == y else z for z in cr) for cr in cs]
                    changed = True
                    break
            if changed:
                break
    return PlanarDiagram(tuple(cs), loops, tuple(signs) if signs is not None else None)


def _side_components(crossings, i: int) -> list:
    """Component id, in the graph with crossing ``i`` deleted, reached from each end of ``i``."""
    n = len(crossings)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    ends = _ends(crossings)
    for (a, _), (b, _) in ends.values():
        if a != i and b != i:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    out = []
    for p, x in enumerate(crossings[i]):
        e1, e2 = ends[x]
        other = e2 if e1 == (i, p) else e1
        out.append(None if other[0] == i else find(other[0]))
    return out, find


def nugatory_crossings(d: PlanarDiagram) -> list:
    """Indices of crossings that a simple closed curve meets only once."""
    out = []
    for i, c in enumerate(d.crossings):
        if any(c[p] == c[(p + 1) % 4] for p in range(4)):
            out.append(i)
            continue
        side, _ = _side_components(d.crossings, i)
        if (side[0] == side[1] != side[2] == side[3]) or (side[0] == side[3] != side[1] == side[2]):
            out.append(i)
    return out


def is_reduced(d: PlanarDiagram) -> bool:
    return not nugatory_crossings(d)


def remove_nugatory(d: PlanarDiagram) -> PlanarDiagram:
    """Untwist nugatory crossings (kinks included); the link type is unchanged.

    A nugatory crossing joins two sides of the diagram.  Turning one side over
    (a half rotation in space) removes the crossing: the strands through it
    are kept, and each crossing on the turned side is reflected in the plane
    and switched, which preserves its sign.
    """
    d = reduce_kinks(d)
    while True:
        cs = d.crossings
        found = None
        for i in range(len(cs)):
            side, find = _side_components(cs, i)
            if side[0] == side[1] != side[2] == side[3]:
                found = (i, side[2])
            elif side[0] == side[3] != side[1] == side[2]:
                found = (i, side[1])
            if found:
                break
        if found is None:
            return d
        i, q = found
        signs = d.orientation
        new_cs, new_signs = [], []
        for j, c in enumerate(cs):
            if j == i:
                continue
            if find(j) == q:
                a, b, cc, e = c
                if signs is None or signs[j] > 0:
                    c = (e, cc, b, a)
                else:
                    c = (b, a, e, cc)
            new_cs.append(c)
            if signs is not None:
                new_signs.append(signs[j])
        a, b, cc, e = cs[i]
        ren = {cc: a, e: b}
        new_cs = [tuple(ren.get(x, x) for x in c) for c in new_cs]
        d = reduce_kinks(PlanarDiagram(tuple(new_cs), d.n_free_loops,
                                       tuple(new_signs) if signs is not None else None))


def is_alternating(d: PlanarDiagram) -> bool:
    """Every arc runs from an under-position to an over-position."""
    for (_, p), (_, q) in _ends(d.crossings).values():
        if p % 2 == q % 2:
            return False
    return True


def is_connected(d: PlanarDiagram) -> bool:
    """Connected underlying 4-valent graph with no stray free loops."""
    return _pieces(d.crossings, d.n_free_loops) == 1


# --------------------------------------------------------------------------
# planarity sanity check


def faces(d: PlanarDiagram) -> int:
    """Number of faces traced by the PD rotation system (free loops excluded)."""
    cs = d.crossings
    ends = _ends(cs)
    seen = set()
    count = 0
    for i in range(len(cs)):
        for p in range(4):
            if (i, p) in seen:
                continue
            count += 1
            cur = (i, p)
            while cur not in seen:
                seen.add(cur)
                ci, pi = cur
                e1, e2 = ends[cs[ci][pi]]
                j, q = e2 if e1 == cur else e1
                cur = (j, (q + 1) % 4)
    return count


def is_planar(d: PlanarDiagram) -> bool:
    """Euler check ``V - E + F = 2`` on every piece of the crossing graph."""
    n = len(d.crossings)
    if n == 0:
        return True
    pieces = _pieces(d.crossings, 0)
    return n - 2 * n + faces(d) == 2 * pieces
