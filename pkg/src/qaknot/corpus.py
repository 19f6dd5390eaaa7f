"""Bundled example diagrams, random generators and table builders."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .braid import BaldwinNormalForm, BraidWord, baldwin_qa, closure, expand_normal_form, torus_2n_jones
from .diagram import PlanarDiagram, add_kink, jones, unknot
from .laurent import LaurentPoly
from .montesinos import MontesinosData, montesinos_qa, standardize, to_diagram, two_bridge

__all__ = [
    "CorpusEntry",
    "TableRow",
    "corpus",
    "get",
    "random_braid_word",
    "random_diagram",
    "baldwin_qa_forms",
    "montesinos_instances",
    "torus_screen",
    "desk_table",
    "fallback_table",
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    diagram: PlanarDiagram
    crossing_number: int
    qa: bool | None
    prime: bool | None
    torus_2n: bool = False


@dataclass(frozen=True)
class TableRow:
    """One ingested table line; flags are ``yes``, ``no`` or ``unknown``."""

    name: str
    pd: str
    crossing_number: int
    qa_status: str = "unknown"
    prime: str = "unknown"
    jones_expected: str | None = None
    torus_2n: str | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "pd": self.pd, "crossing_number": self.crossing_number,
               "qa_status": self.qa_status, "prime": self.prime, "jones_expected": self.jones_expected or ""}
        if self.torus_2n is not None:
            out["torus_2n"] = self.torus_2n
        return out


# two-bridge knots by (det, q)
_TWO_BRIDGE = {
    "5_2": (7, 3), "6_1": (9, 2), "6_2": (11, 3), "6_3": (13, 5), "7_2": (11, 5), "7_3": (13, 3),
    "7_4": (15, 4), "7_5": (17, 5), "7_6": (19, 7), "7_7": (21, 8),
}


@lru_cache(maxsize=None)
def corpus() -> tuple:
    k1 = add_kink(unknot(), positive=True)
    k2 = add_kink(add_kink(unknot(), positive=False), label=1, positive=True, side=1)
    out = [
        CorpusEntry("unknot", unknot(), 0, True, False),
        CorpusEntry("unknot_kink", k1, 0, True, False),
        CorpusEntry("unknot_two_kinks", k2, 0, True, False),
        CorpusEntry("hopf", closure([1, 1]), 2, True, True, True),
        CorpusEntry("3_1", closure([1, 1, 1]), 3, True, True, True),
        CorpusEntry("4_1", closure([1, -2, 1, -2]), 4, True, True),
        CorpusEntry("5_1", closure([1] * 5), 5, True, True, True),
    ]
    for name, (p, q) in _TWO_BRIDGE.items():
        out.append(CorpusEntry(name, two_bridge(p, q), int(name[0]), True, True))
    out += [
        CorpusEntry("7_1", closure([1] * 7), 7, True, True, True),
        CorpusEntry("8_19", closure([1, 2] * 4), 8, False, True),
        CorpusEntry("8_20", closure([1, 1, 1, -2, -1, -1, -1, -2]), 8, False, True),
    ]
    return tuple(out)


def get(name: str) -> CorpusEntry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(name)


def random_braid_word(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    n = rng.randint(0, max_len)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(n))
    return BraidWord(strands, letters)


def random_diagram(rng: random.Random, max_crossings: int = 10) -> PlanarDiagram:
    """Braid closure on 2-4 strands, sometimes with kinks spliced in."""
    kinks = rng.randint(0, 2) if max_crossings > 2 else 0
    word = random_braid_word(rng, rng.randint(2, 4), max_crossings - kinks)
    d = closure(word)
    for _ in range(kinks):
        labels = sorted(d.labels())
        label = rng.choice(labels) if labels else None
        d = add_kink(d, label, positive=rng.random() < 0.5, side=rng.randint(0, 1))
    return d


def _compositions(total: int):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _canonical_pairs(pairs: tuple) -> tuple:
    return min(pairs[k:] + pairs[:k] for k in range(len(pairs)))


@lru_cache(maxsize=None)
def baldwin_qa_forms(max_letters: int = 14) -> tuple:
    """Every QA normal form whose expansion has at most ``max_letters`` letters.

    Type 1 forms are taken up to cyclic rotation of their (p, q) pairs,
    which conjugates the braid.
    """
    out = []
    for n in (-1, 0, 1):
        room = max_letters - 6 * abs(n)
        seen = set()
        for total in range(2, room + 1):
            for comp in _compositions(total):
                if len(comp) % 2:
                    continue
                pairs = _canonical_pairs(tuple(zip(comp[::2], comp[1::2])))
                if pairs not in seen:
                    seen.add(pairs)
                    out.append(BaldwinNormalForm("type1", n, pairs))
    for n, ms in ((1, (-1, -2, -3)), (-1, (1, 2, 3))):
        for m in ms:
            out.append(BaldwinNormalForm("type2", n, (), m))
    for n in (0, 1):
        for m in (-1, -2, -3):
            out.append(BaldwinNormalForm("type3", n, (), m))
    out = [nf for nf in out if baldwin_qa(nf) and len(expand_normal_form(nf)) <= max_letters]
    return tuple(out)


def montesinos_instances(max_crossings: int = 16, limit: int | None = None) -> tuple:
    """Deterministic family of Montesinos data with small diagrams."""
    slopes = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (5, 3), (7, 2), (7, 3)]
    out = []
    for r in (1, 2, 3):
        for idx in _index_tuples(len(slopes), r):
            tangles = tuple(slopes[i] for i in idx)
            for e in range(-2, r + 2):
                m = MontesinosData(e, tangles)
                if to_diagram(m).n_crossings <= max_crossings:
                    out.append(m)
    out = _spread(out, limit) if limit else out
    return tuple(out)


def _index_tuples(n: int, r: int):
    # nondecreasing index tuples, enough to cover each multiset once
    if r == 0:
        yield ()
        return
    for rest in _index_tuples(n, r - 1):
        start = rest[-1] if rest else 0
        for i in range(start, n):
            yield rest + (i,)


def _spread(items: list, limit: int) -> list:
    if len(items) <= limit:
        return items
    step = len(items) / limit
    return [items[int(k * step)] for k in range(limit)]


# --------------------------------------------------------------------------
# Jones-based screening for torus links and their connected sums

_TORUS_RANGE = range(2, 24)


def _shape(p: LaurentPoly) -> tuple:
    lo, hi = p.min_key, p.max_key
    c = p.coeffs
    coeffs = tuple(c.get(k, 0) for k in range(lo, hi + 1))
    return coeffs if coeffs[0] > 0 else tuple(-c for c in coeffs)


@lru_cache(maxsize=None)
def _torus_shapes() -> tuple:
    single, double = set(), set()
    base = [torus_2n_jones(n) for n in _TORUS_RANGE]
    both = base + [p.scale_keys(-1) for p in base]
    for p in both:
        single.add(_shape(p))
    for i, p in enumerate(both):
        for q in both[i:]:
            double.add(_shape(p * q))
    return frozenset(single), frozenset(double)


def torus_screen(v: LaurentPoly) -> str:
    """``torus``, ``composite`` or ``unscreened`` by matching ``±t^k V`` against
    (2, n) torus links and connected sums of two of them (mirrors included)."""
    if v == 1:
        return "unknot"
    single, double = _torus_shapes()
    s = _shape(v)
    if s in single:
        return "torus"
    if s in double:
        return "composite"
    return "unscreened"


def _yes_no(flag) -> str:
    return {True: "yes", False: "no"}.get(flag, "unknown")


def desk_table() -> list:
    """Named corpus knots with their known flags."""
    rows = []
    for e in corpus():
        if e.name.startswith("unknot_"):
            continue
        rows.append(TableRow(e.name, e.diagram.to_text().replace("\n", " "), e.crossing_number,
                             _yes_no(e.qa), _yes_no(e.prime), jones(e.diagram).to_text(), _yes_no(e.torus_2n)))
    return rows


def _screened_row(name: str, d: PlanarDiagram, qa: bool) -> TableRow:
    v = jones(d)
    kind = torus_screen(v)
    prime = {"unknot": "no", "composite": "no"}.get(kind, "yes")
    torus = "yes" if kind == "torus" else "no"
    return TableRow(name, d.to_text().replace("\n", " "), d.n_crossings, _yes_no(qa), prime, v.to_text(), torus)


def fallback_table(max_letters: int = 14, max_crossings: int = 16) -> list:
    """QA 3-braid closures and Montesinos links, primality screened by Jones factorisation."""
    rows = []
    for nf in baldwin_qa_forms(max_letters):
        rows.append(_screened_row(nf.to_text(), closure(expand_normal_form(nf)), True))
    for m in montesinos_instances(max_crossings):
        qa, _ = montesinos_qa(standardize(m))
        if qa:
            rows.append(_screened_row(m.to_text(), to_diagram(m), True))
    return rows
