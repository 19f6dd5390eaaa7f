"""
Quasi-alternating certificates, crossing twists and the gap-conjecture checker.

A certificate is a tree.  Each branch node records a crossing whose two
smoothings have determinants summing to the node's determinant, both at
least one; leaves are the unknot or reduced, connected, alternating diagrams.
Every diagram stored in the tree has had its nugatory crossings removed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import (
    DiagramError,
    PlanarDiagram,
    canonical_key,
    determinant,
    is_alternating,
    is_connected,
    is_reduced,
    mirror,
    orient,
    remove_nugatory,
    smooth,
)
from .laurent import LaurentPoly, gap_report

__all__ = [
    "QACertificate",
    "Inconclusive",
    "CertificateError",
    "qa_search",
    "validate_certificate",
    "TwistSpec",
    "twist_bracket",
    "twist_diagram",
    "twist_det",
    "Verdict",
    "conjecture_check",
    "breadth_check",
]

UNKNOT = "unknot"
ALT = "reduced_alternating_nonsplit"
BRANCH = "branch"


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class QACertificate:
    diagram: PlanarDiagram
    status: str
    det: int
    crossing_index: int | None = None
    children: tuple = ()

    @property
    def depth(self) -> int:
        return 1 + max(c.depth for c in self.children) if self.children else 0

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def to_dict(self) -> dict:
        out = {"diagram": self.diagram.to_text(), "status": self.status, "det": self.det}
        if self.status == BRANCH:
            out["crossing_index"] = self.crossing_index
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "QACertificate":
        kids = tuple(cls.from_dict(c) for c in data.get("children", ()))
        return cls(PlanarDiagram.parse(data["diagram"]), data["status"], int(data["det"]),
                   data.get("crossing_index"), kids)

    @classmethod
    def from_json(cls, text: str) -> "QACertificate":
        return cls.from_dict(json.loads(text))

    def validate(self) -> None:
        validate_certificate(self)

    def path(self) -> list:
        """Crossing choices along the first-child spine, for display."""
        out, node = [], self
        while node.status == BRANCH:
            out.append((node.crossing_index, node.det, node.children[0].det, node.children[1].det))
            node = node.children[0]
        return out


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    nodes_visited: int
    max_depth: int
    max_nodes: int
    budget_exhausted: bool = False

    def to_dict(self) -> dict:
        return {"status": "inconclusive", "reason": self.reason, "nodes_visited": self.nodes_visited,
                "max_depth": self.max_depth, "max_nodes": self.max_nodes,
                "budget_exhausted": self.budget_exhausted}


def _is_unknot_leaf(d: PlanarDiagram) -> bool:
    return not d.crossings and d.n_free_loops == 1


def _is_alt_leaf(d: PlanarDiagram) -> bool:
    return bool(d.crossings) and is_alternating(d) and is_connected(d) and is_reduced(d)


def _normal(d: PlanarDiagram) -> PlanarDiagram:
    return remove_nugatory(d.unoriented())


class _Budget(Exception):
    pass


def qa_search(d: PlanarDiagram, max_depth: int = 12, max_nodes: int = 100_000) -> QACertificate | Inconclusive:
    """Depth-first search for a certificate, crossings tried in ascending order.

    Failure never means the link is not quasi-alternating: only this diagram
    and its smoothings are explored.
    """
    root = _normal(d)
    if not is_connected(root):
        return Inconclusive("diagram is split", 0, max_depth, max_nodes)
    proven: dict = {}
    failed: set = set()
    visited = 0
    hit_depth = False

    def search(g: PlanarDiagram, det: int, depth: int, is_root: bool):
        nonlocal visited, hit_depth
        visited += 1
        if visited > max_nodes:
            raise _Budget
        if _is_unknot_leaf(g):
            return QACertificate(g, UNKNOT, det)
        key = canonical_key(g)
        if key in proven:
            return proven[key]
        if not is_root and _is_alt_leaf(g):
            cert = QACertificate(g, ALT, det)
            proven[key] = cert
            return cert
        if key in failed:
            return None
        if depth >= max_depth:
            hit_depth = True
            return QACertificate(g, ALT, det) if _is_alt_leaf(g) else None
        clean = True
        for i in range(g.n_crossings):
            z = _normal(smooth(g, i, "zero"))
            f = _normal(smooth(g, i, "infinity"))
            dz, df = determinant(z), determinant(f)
            if dz < 1 or df < 1 or dz + df != det:
                continue
            before = hit_depth
            hit_depth = False
            cz = search(z, dz, depth + 1, False)
            cf = search(f, df, depth + 1, False) if cz else None
            clean = clean and not hit_depth
            hit_depth = hit_depth or before
            if cz and cf:
                cert = QACertificate(g, BRANCH, det, i, (cz, cf))
                proven[key] = cert
                return cert
        if _is_alt_leaf(g):
            cert = QACertificate(g, ALT, det)
            proven[key] = cert
            return cert
        if clean:
            failed.add(key)
        return None

    det = determinant(root)
    if det < 1:
        return Inconclusive("determinant is zero", 0, max_depth, max_nodes)
    try:
        cert = search(root, det, 0, True)
    except _Budget:
        return Inconclusive("node budget exhausted", visited, max_depth, max_nodes, True)
    if cert is None:
        if hit_depth:
            return Inconclusive("depth budget exhausted", visited, max_depth, max_nodes, True)
        return Inconclusive("no crossing sequence in this diagram satisfies the determinant condition",
                            visited, max_depth, max_nodes)
    return cert


def validate_certificate(cert: QACertificate) -> None:
    """Recheck every node; raises CertificateError on the first problem."""
    d = cert.diagram
    actual = determinant(d)
    if actual != cert.det:
        raise CertificateError(f"recorded det {cert.det} but diagram has det {actual}")
    if cert.status == UNKNOT:
        if not _is_unknot_leaf(d):
            raise CertificateError("unknot leaf is not a crossingless single loop")
    elif cert.status == ALT:
        if not _is_alt_leaf(d):
            raise CertificateError("leaf is not a reduced connected alternating diagram")
    elif cert.status == BRANCH:
        i = cert.crossing_index
        if i is None or not 0 <= i < d.n_crossings or len(cert.children) != 2:
            raise CertificateError("malformed branch node")
        cz, cf = cert.children
        for child, kind in ((cz, "zero"), (cf, "infinity")):
            if canonical_key(child.diagram) != canonical_key(_normal(smooth(d, i, kind))):
                raise CertificateError(f"{kind} child is not the smoothing at crossing {i}")
            if child.det < 1:
                raise CertificateError("child determinant below one")
        if cz.det + cf.det != cert.det:
            raise CertificateError(f"{cz.det} + {cf.det} != {cert.det}")
        validate_certificate(cz)
        validate_certificate(cf)
    else:
        raise CertificateError(f"unknown status {cert.status!r}")


# --------------------------------------------------------------------------
# twisting


@dataclass(frozen=True)
class TwistSpec:
    """Sequence of integer twist steps, e.g. ``TwistSpec.single("vertical", 3)``."""

    steps: tuple = field(default=())

    def __post_init__(self):
        steps = tuple((str(dr), int(n)) for dr, n in self.steps)
        object.__setattr__(self, "steps", steps)
        if not steps:
            raise ValueError("twist spec needs at least one step")
        for dr, n in steps:
            if dr not in ("vertical", "horizontal"):
                raise ValueError(f"unknown twist direction {dr!r}")
            if n < 1:
                raise ValueError("twist counts must be positive")

    @classmethod
    def single(cls, direction: str, n: int) -> "TwistSpec":
        return cls(((direction, n),))


def _twist_sum(n: int, sign: int) -> LaurentPoly:
    # sum_{i<n} (-1)^i A^(n-4i-2), or its image under A -> 1/A
    return LaurentPoly({2 * sign * (n - 4 * i - 2): (-1) ** i for i in range(n)}, "A")


def twist_bracket(b0: LaurentPoly, binf: LaurentPoly, direction: str, n: int) -> LaurentPoly:
    """Bracket after replacing a crossing by ``n`` half-twists.

    ``b0`` and ``binf`` are the brackets of the A- and A^-1-smoothings.  In a
    vertical twist the A-smoothings chain together without loops; in a
    horizontal twist the A^-1-smoothings do, so the formula is the vertical
    one with ``A`` inverted and the roles of the two smoothings exchanged.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if direction == "vertical":
        return LaurentPoly({2 * n: 1}, "A") * b0 + _twist_sum(n, 1) * binf
    if direction == "horizontal":
        return _twist_sum(n, -1) * b0 + LaurentPoly({-2 * n: 1}, "A") * binf
    raise ValueError(f"unknown twist direction {direction!r}")


def twist_det(det_l: int, det_0: int, det_inf: int, direction: str, n: int) -> int:
    """Determinant after twisting a crossing that satisfies the additivity condition."""
    return det_l + (n - 1) * (det_inf if direction == "vertical" else det_0)


def _twist_once(cs: tuple, i: int, direction: str, n: int) -> tuple:
    a, b, c, d = cs[i]
    fresh = max(x for cr in cs for x in cr) + 1
    if n == 1:
        return cs
    p = list(range(fresh, fresh + n - 1))
    q = list(range(fresh + n - 1, fresh + 2 * n - 2))
    new = []
    if direction == "vertical":
        new.append((a, p[0], q[0], d))
        for k in range(1, n - 1):
            new.append((p[k - 1], p[k], q[k], q[k - 1]))
        new.append((p[-1], b, c, q[-1]))
    else:
        new.append((a, b, p[0], q[0]))
        for k in range(1, n - 1):
            new.append((q[k - 1], p[k - 1], p[k], q[k]))
        new.append((q[-1], p[-1], c, d))
    return cs[:i] + tuple(new) + cs[i + 1:]


def twist_diagram(d: PlanarDiagram, crossing_index: int, spec: TwistSpec | str, n: int | None = None,
                  mirror_first: bool = False) -> PlanarDiagram:
    """Replace a positive crossing by twist regions extending it.

    Steps after the first act on the last crossing of the previous region.
    A negative crossing is refused unless ``mirror_first`` is set, in which
    case the whole diagram is mirrored first.
    """
    if isinstance(spec, str):
        spec = TwistSpec.single(spec, 1 if n is None else n)
    if not 0 <= crossing_index < d.n_crossings:
        raise DiagramError(f"crossing index {crossing_index} out of range")
    od = d if d.orientation is not None else orient(d)
    if od.orientation[crossing_index] < 0:
        if not mirror_first:
            raise DiagramError(f"crossing {crossing_index} is negative; pass the mirror flag to mirror first")
        od = mirror(od)
    cs = od.crossings
    idx = crossing_index
    for direction, k in spec.steps:
        cs = _twist_once(cs, idx, direction, k)
        idx = idx + k - 1
    return orient(PlanarDiagram(cs, od.n_free_loops))


# --------------------------------------------------------------------------
# conjecture bookkeeping


@dataclass(frozen=True)
class Verdict:
    verdict: str
    note: str
    strictly_alternating: bool
    has_gap: bool
    breadth_ok: bool | None = None

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "note": self.note,
                "strictly_alternating": self.strictly_alternating, "has_gap": self.has_gap,
                "breadth_ok": self.breadth_ok}


def _flag(v) -> str:
    if v is True:
        return "yes"
    if v is False:
        return "no"
    return "unknown"


def conjecture_check(jones: LaurentPoly, prime=None, torus_2n: bool = False, qa=None,
                     det: int | None = None) -> Verdict:
    """Classify one link against the gap conjecture.

    ``prime`` and ``qa`` are ingested facts (True, False or None for
    unknown); a counterexample is only reported when both are True.
    """
    report = gap_report(jones)
    breadth = None if det is None else breadth_check(jones, det)
    args = (report.strictly_alternating, report.has_gap, breadth)
    if qa is not True:
        return Verdict("out-of-scope", f"qa={_flag(qa)}", *args)
    if torus_2n:
        return Verdict("out-of-scope", "(2,n)-torus link", *args)
    if prime is not True:
        return Verdict("out-of-scope", f"prime={_flag(prime)}", *args)
    if report.has_gap or not report.strictly_alternating:
        return Verdict("counterexample-candidate", "gap or non-strict alternation", *args)
    return Verdict("consistent", "", *args)


def breadth_check(jones: LaurentPoly, det: int) -> bool:
    if jones.is_zero():
        raise ValueError("breadth of the zero polynomial is undefined")
    return det >= jones.max_exponent() - jones.min_exponent()
