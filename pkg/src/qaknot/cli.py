"""Command-line interface: ``qaknot <command> INPUT [options]``.

INPUT is a file path or literal text: a PD code (``X(1,5,2,4) ...``), a
braid word (``"1 1 1"``), Montesinos data (``"M(-1; 2/1, 3/1, 3/1)"``) or a
3-braid normal form (``"type2 n=1 m=-2"``).

Exit codes: 0 clean, 1 counterexample candidate found, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .braid import (
    BaldwinNormalForm,
    BraidWord,
    baldwin_reason,
    birman_jones,
    closure,
    expand_normal_form,
    full_twist_check,
)
from .diagram import (
    DiagramError,
    PlanarDiagram,
    bracket,
    bracket_skein,
    bracket_state_sum,
    determinant,
    jones,
    mirror,
    orient,
    smooth,
)
from .laurent import LaurentPoly, gap_report
from .montesinos import MontesinosData, ScopeError, montesinos_qa, standardize, to_diagram
from .quasialt import (
    QACertificate,
    TwistSpec,
    conjecture_check,
    qa_search,
    twist_det,
    twist_diagram,
)

EXIT_OK, EXIT_CANDIDATE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class Parsed:
    kind: str  # pd, braid, montesinos, normal_form
    value: object

    def diagram(self) -> PlanarDiagram:
        if self.kind == "pd":
            d = self.value
            return d if d.orientation is not None or not d.crossings else orient(d)
        if self.kind == "braid":
            return closure(self.value)
        if self.kind == "montesinos":
            return to_diagram(self.value)
        return closure(expand_normal_form(self.value))


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def parse_input(source: str, kind: str = "auto", strands: int | None = None) -> Parsed:
    text = _read(source).strip()
    if kind == "auto":
        if text.startswith("M"):
            kind = "montesinos"
        elif text.startswith("type"):
            kind = "normal_form"
        elif all(tok.lstrip("+-").isdigit() for tok in text.split()):
            kind = "braid"
        else:
            kind = "pd"
    try:
        if kind == "pd":
            return Parsed("pd", PlanarDiagram.parse(text))
        if kind == "braid":
            return Parsed("braid", BraidWord.parse(text, strands))
        if kind == "montesinos":
            return Parsed("montesinos", MontesinosData.parse(text))
        if kind == "normal_form":
            return Parsed("normal_form", BaldwinNormalForm.parse(text))
    except ValueError as exc:
        raise InputError(f"cannot parse {kind} input: {exc}") from None
    raise InputError(f"unknown input kind {kind!r}")


def _emit(args, data: dict, text: str) -> None:
    out = json.dumps(data, sort_keys=True) if args.format == "json" else text
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _diagram(args, apply_mirror: bool = True) -> tuple:
    p = parse_input(args.input, args.kind, args.strands)
    d = p.diagram()
    if apply_mirror and args.mirror:
        d = mirror(d)
    return p, d


# --------------------------------------------------------------------------
# subcommands


def cmd_jones(args) -> int:
    p, d = _diagram(args)
    v = jones(d)
    data = {"jones": v.to_text()}
    lines = [v.to_text()]
    if p.kind in ("braid", "normal_form") and not args.mirror:
        word = p.value if p.kind == "braid" else expand_normal_form(p.value)
        if word.strands == 3:
            b = birman_jones(word)
            if b != v:
                raise AssertionError(f"trace formula gives {b.to_text()} but the diagram gives {v.to_text()}")
            data["birman"] = b.to_text()
            lines.append(f"trace formula: {b.to_text()} (agrees)")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_bracket(args) -> int:
    _, d = _diagram(args)
    b = bracket(d, args.engine)
    _emit(args, {"bracket": b.to_text(), "engine": args.engine}, b.to_text())
    return EXIT_OK


def cmd_det(args) -> int:
    _, d = _diagram(args)
    det = determinant(d)
    _emit(args, {"det": det}, str(det))
    return EXIT_OK


def cmd_gaps(args) -> int:
    _, d = _diagram(args)
    v = jones(d)
    rep = gap_report(v)
    text = (f"jones: {v.to_text()}\ncoefficients: {list(rep.coefficients)}\n"
            f"gaps: {list(rep.gap_positions) or 'none'}\n"
            f"strictly alternating: {'yes' if rep.strictly_alternating else 'no'}")
    _emit(args, {"jones": v.to_text(), **rep.to_dict()}, text)
    return EXIT_OK


def cmd_qa(args) -> int:
    p = parse_input(args.input, args.kind, args.strands)
    if p.kind == "montesinos":
        s = standardize(p.value)
        ok, reason = montesinos_qa(s)
        data = {"qa": ok, "reason": reason, "standard_form": s.to_text()}
        _emit(args, data, f"QA: {'yes' if ok else 'no'} ({reason}); standard form {s.to_text()}")
        return EXIT_OK
    if p.kind == "normal_form":
        ok, reason = baldwin_reason(p.value)
        _emit(args, {"qa": ok, "reason": reason}, f"QA: {'yes' if ok else 'no'} ({reason})")
        return EXIT_OK
    d = p.diagram()
    if args.mirror:
        d = mirror(d)
    res = qa_search(d, args.budget_depth, args.budget_nodes)
    if isinstance(res, QACertificate):
        steps = "; ".join(f"crossing {i}: {t} = {z} + {f}" for i, t, z, f in res.path())
        text = f"QA: yes, certificate depth {res.depth}" + (f" ({steps})" if steps else "")
        _emit(args, {"qa": True, "certificate": res.to_dict(), "depth": res.depth}, text)
    else:
        _emit(args, {"qa": None, **res.to_dict()}, f"QA: inconclusive ({res.reason})")
    return EXIT_OK


def cmd_twist(args) -> int:
    _, d = _diagram(args, apply_mirror=False)
    i = args.crossing
    if not 0 <= i < d.n_crossings:
        raise InputError(f"crossing {i} out of range 0..{d.n_crossings - 1}")
    base = d if d.orientation[i] > 0 or not args.mirror else mirror(d)
    t = twist_diagram(d, i, TwistSpec.single(args.direction, args.n), mirror_first=args.mirror)
    v = jones(t)
    rep = gap_report(v)
    det_l, det_0, det_inf = determinant(base), determinant(smooth(base, i, "zero")), determinant(smooth(base, i, "infinity"))
    predicted = twist_det(det_l, det_0, det_inf, args.direction, args.n)
    actual = determinant(t)
    additive = det_l == det_0 + det_inf and det_0 >= 1 and det_inf >= 1
    data = {"pd": t.to_text(), "jones": v.to_text(), "gaps": rep.to_dict(), "det": actual,
            "det_predicted": predicted, "det_identity_holds": actual == predicted,
            "crossing_additive": additive}
    text = "\n".join([
        t.to_text(),
        f"jones: {v.to_text()}",
        f"gaps: {list(rep.gap_positions) or 'none'}; strictly alternating: {'yes' if rep.strictly_alternating else 'no'}",
        f"det: {actual} (predicted {predicted}: {'ok' if actual == predicted else 'MISMATCH'}"
        + ("" if additive else "; crossing does not satisfy the determinant condition") + ")",
    ])
    _emit(args, data, text)
    return EXIT_OK


# --------------------------------------------------------------------------
# scanning

TABLE_COLUMNS = ("name", "pd", "crossing_number", "qa_status", "prime", "jones_expected")


def _flag(value: str | None, column: str):
    v = (value or "unknown").strip().lower()
    if v in ("yes", "y", "true", "1"):
        return True
    if v in ("no", "n", "false", "0"):
        return False
    if v in ("unknown", "", "?"):
        return None
    raise ValueError(f"bad {column} flag {value!r}")


def load_table(path: str) -> list:
    """Rows as dicts from a CSV or JSON (list of objects) file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("["):
        rows = json.loads(text) if text.strip() else []
        if not isinstance(rows, list):
            raise ValueError("JSON table must be a list of row objects")
        return rows
    return list(csv.DictReader(io.StringIO(text)))


def write_table(rows, path: str) -> None:
    """Write TableRow objects (or dicts) as CSV, or JSON when the path ends in .json."""
    dicts = [r if isinstance(r, dict) else r.to_dict() for r in rows]
    if path.endswith(".json"):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(dicts, fh, indent=1)
        return
    extra = ["torus_2n"] if any("torus_2n" in r for r in dicts) else []
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(TABLE_COLUMNS) + extra)
        w.writeheader()
        for r in dicts:
            w.writerow({k: r.get(k, "") for k in w.fieldnames})


def scan_row(row: dict, dry_run: bool = False) -> dict:
    from .corpus import torus_screen

    name = row.get("name", "")
    expected_text = (row.get("jones_expected") or "").strip()
    expected = LaurentPoly.parse(expected_text, "t") if expected_text else None
    qa = _flag(row.get("qa_status"), "qa_status")
    prime = _flag(row.get("prime"), "prime")
    if dry_run:
        if expected is None:
            raise ValueError("dry run needs jones_expected")
        v, det, match = expected, None, None
    else:
        d = PlanarDiagram.parse(row["pd"])
        if d.orientation is None and d.crossings:
            d = orient(d)
        v = jones(d)
        det = determinant(d)
        match = None if expected is None else expected == v
    torus = _flag(row.get("torus_2n"), "torus_2n") if row.get("torus_2n") not in (None, "") else None
    torus_source = "table"
    if torus is None:
        torus = torus_screen(v) == "torus"
        torus_source = "jones-screen"
    if det is None:
        from .laurent import eval_gaussian
        det = eval_gaussian(v, 1j).magnitude()
    verdict = conjecture_check(v, prime=prime, torus_2n=torus, qa=qa, det=det)
    return {"name": name, "verdict": verdict.verdict, "note": verdict.note, "jones": v.to_text(),
            "det": det, "has_gap": verdict.has_gap, "strictly_alternating": verdict.strictly_alternating,
            "breadth_ok": verdict.breadth_ok, "jones_match": match, "torus_2n": torus,
            "torus_source": torus_source}


def scan_rows(rows: list, dry_run: bool = False) -> dict:
    results, errors = [], []
    for k, row in enumerate(rows):
        try:
            results.append(scan_row(row, dry_run))
        except (ValueError, KeyError, DiagramError) as exc:
            errors.append({"row": k + 1, "name": row.get("name", ""), "error": str(exc)})
    summary = {"rows": len(rows), "errors": len(errors)}
    for v in ("consistent", "counterexample-candidate", "out-of-scope"):
        summary[v] = sum(1 for r in results if r["verdict"] == v)
    summary["breadth_failures"] = sum(1 for r in results if r["breadth_ok"] is False)
    summary["jones_mismatches"] = sum(1 for r in results if r["jones_match"] is False)
    return {"summary": summary, "results": results, "errors": errors}


def _report_text(report: dict) -> str:
    lines = []
    for r in report["results"]:
        extra = f" [{r['note']}]" if r["note"] else ""
        match = {True: " jones=match", False: " jones=MISMATCH", None: ""}[r["jones_match"]]
        lines.append(f"{r['name']}: {r['verdict']}{extra} det={r['det']} gap={'yes' if r['has_gap'] else 'no'}"
                     f" breadth={'ok' if r['breadth_ok'] else 'FAIL'}{match}")
    for e in report["errors"]:
        lines.append(f"row {e['row']} ({e['name']}): error: {e['error']}")
    s = report["summary"]
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in s.items()))
    return "\n".join(lines)


def cmd_scan(args) -> int:
    try:
        rows = load_table(args.table)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read table {args.table}: {exc}") from None
    report = scan_rows(rows, args.dry_run)
    out = json.dumps(report, sort_keys=True, indent=1) if args.format == "json" else _report_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
        print(_report_text({"results": [], "errors": [], "summary": report["summary"]}))
    else:
        print(out)
    return EXIT_CANDIDATE if report["summary"]["counterexample-candidate"] else EXIT_OK


def cmd_selftest(args) -> int:
    from .corpus import corpus

    checks = []
    try:
        for k in (0, 1, 2, -1):
            full_twist_check(k)
        checks.append(("full twist is central scalar", True))
    except AssertionError:
        checks.append(("full twist is central scalar", False))
    same = all(bracket_state_sum(e.diagram).poly == bracket_skein(e.diagram).poly for e in corpus())
    checks.append(("bracket engines agree on corpus", same))
    words = [(1, 2), (1, 1, 1, 2), (1, -2, 1, -2), (1, 1, 1, -2, -1, -1, -1, -2)]
    checks.append(("trace formula matches diagrams", all(birman_jones(w) == jones(closure(w)) for w in words)))
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_CANDIDATE


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write the result to this file")

    diag = argparse.ArgumentParser(add_help=False)
    diag.add_argument("input", help="file path, '-' for stdin, or literal text")
    diag.add_argument("--kind", choices=("auto", "pd", "braid", "montesinos", "normal_form"), default="auto")
    diag.add_argument("--strands", type=int, help="strand count for braid input")
    diag.add_argument("--mirror", action="store_true", help="mirror the diagram first")

    parser = argparse.ArgumentParser(prog="qaknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("jones", parents=[common, diag], help="Jones polynomial").set_defaults(func=cmd_jones)
    p = sub.add_parser("bracket", parents=[common, diag], help="Kauffman bracket")
    p.add_argument("--engine", choices=("skein_memo", "state_sum"), default="skein_memo")
    p.set_defaults(func=cmd_bracket)
    sub.add_parser("det", parents=[common, diag], help="determinant").set_defaults(func=cmd_det)
    sub.add_parser("gaps", parents=[common, diag], help="Jones gap report").set_defaults(func=cmd_gaps)
    p = sub.add_parser("qa", parents=[common, diag], help="quasi-alternating status")
    p.add_argument("--budget-depth", type=int, default=12)
    p.add_argument("--budget-nodes", type=int, default=100_000)
    p.set_defaults(func=cmd_qa)
    p = sub.add_parser("twist", parents=[common, diag], help="replace a crossing by a twist region")
    p.add_argument("--crossing", type=int, default=0)
    p.add_argument("--direction", choices=("vertical", "horizontal"), default="vertical")
    p.add_argument("-n", type=int, default=2)
    p.set_defaults(func=cmd_twist)
    p = sub.add_parser("scan", parents=[common], help="scan a knot table for conjecture violations")
    p.add_argument("table")
    p.add_argument("--dry-run", action="store_true", help="use jones_expected instead of computing")
    p.set_defaults(func=cmd_scan)
    sub.add_parser("selftest", help="internal consistency checks").set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DiagramError, ScopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
