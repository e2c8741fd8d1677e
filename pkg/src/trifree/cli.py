"""Command-line front end for the table, verifier, constructions and search.

Exit codes follow a scripting contract: 0 success, 1 a negative result
(a failed verification, an empty feasibility answer), 2 usage, parse or
domain errors, 3 internal data conflicts or an exhausted search budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import INF, BoundsTable, DataConflictError, _cell_to_json, default_table
from .constructions import circulant, twisted_tesseract, w13
from .feasibility import (
    ALL_REFINEMENTS,
    DEFAULT_REFINEMENTS,
    DefectReport,
    enumerate_feasible,
    raise_lower_bound,
)
from .graph import (
    Graph6Error,
    _decode_line,
    classify,
    edge_slack,
    find_induced_k24,
    second_degree,
    write_graph6,
)
from .oracle import DEFAULT_BUDGET, InconclusiveError, OracleMismatchError, min_edges_exhaustive

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class VerificationRecord:
    """Checked facts about one graph6 line, plus the verdict on any claims."""

    line_no: int
    graph6: str
    n: int
    e: int
    alpha: int
    triangle_free: bool
    slack: int | None
    degree_min: int | None
    degree_max: int | None
    second_min: int | None
    second_max: int | None
    verdict: bool
    reasons: tuple[str, ...]


# ---------------------------------------------------------------------------
# shared argument helpers


def _parse_span(text: str) -> tuple[int, int]:
    s = text.strip()
    head, sep, tail = s.partition("-")
    try:
        if sep and tail:
            lo, hi = int(head), int(tail)
        else:
            lo = hi = int(s)
    except ValueError:
        raise ValueError(f"bad range {text!r}: expected N or LO-HI") from None
    return lo, hi


def _parse_offsets(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad offsets {text!r}: expected comma-separated integers") from None


def _parse_refinements(text: str | None) -> frozenset[str]:
    if text is None:
        return DEFAULT_REFINEMENTS
    s = text.strip().lower()
    if s == "none":
        return frozenset()
    if s == "all":
        return ALL_REFINEMENTS
    parts = frozenset(p.strip() for p in s.split(",") if p.strip())
    unknown = parts - ALL_REFINEMENTS
    if unknown:
        raise ValueError(f"unknown refinements: {', '.join(sorted(unknown))}")
    return parts


def _load_table(args) -> BoundsTable:
    if getattr(args, "data", None):
        return BoundsTable.from_file(args.data)
    return default_table()


def _fmt_value(v) -> str:
    if v == INF:
        return "∞"
    if v is None:
        return "unknown"
    return str(v)


def _json_value(v):
    if v == INF:
        return "inf"
    return v


def _report_payload(rep: DefectReport) -> dict:
    return {
        "distribution": {str(d): c for d, c in rep.distribution.counts},
        "defect": rep.defect,
        "caps": {str(d): cap for d, cap in rep.caps},
        "cap_sources": {str(d): src for d, src in rep.cap_sources},
    }


def _print_report(rep: DefectReport) -> None:
    print(f"{rep.distribution}  defect={rep.defect}")
    sources = dict(rep.cap_sources)
    for d, cap in rep.caps:
        print(f"  degree {d}: second-degree cap {cap} [{sources[d]}]")


# ---------------------------------------------------------------------------
# subcommands


def cmd_bounds(args) -> int:
    table = _load_table(args)
    cell = table.lookup(args.l, args.n)
    if args.format == "json":
        payload = {"version": SCHEMA_VERSION, **_cell_to_json(args.l, args.n, cell)}
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(cell.display())
        print(f"status: {cell.status}")
        print(f"lower: {_fmt_value(cell.lower)}")
        print(f"upper: {_fmt_value(cell.upper)}")
        print("provenance: " + ", ".join(cell.provenance))
    return 0


def cmd_table(args) -> int:
    table = _load_table(args)
    out = table.emit(_parse_span(args.l), _parse_span(args.n), args.format)
    sys.stdout.write(out)
    return 0


def cmd_construct(args) -> int:
    if args.kind == "circulant":
        if args.n is None or args.offsets is None:
            raise ValueError("circulant needs --n and --offsets")
        g = circulant(args.n, _parse_offsets(args.offsets))
    else:
        if args.n is not None or args.offsets is not None:
            raise ValueError("--n and --offsets only apply to circulant")
        g = w13() if args.kind == "w13" else twisted_tesseract()
    g6 = write_graph6(g).decode("ascii")
    if args.format == "json":
        payload = {
            "version": SCHEMA_VERSION,
            "kind": args.kind,
            "n": g.n,
            "e": g.edge_count(),
            "graph6": g6,
        }
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(g6)
    return 0


def _verify_one(line_no: int, g, l: int | None, n_claim: int | None, e_claim: int | None) -> VerificationRecord:
    cls = classify(g)
    reasons = []
    if not cls.triangle_free:
        reasons.append("triangle found")
    if l is not None and cls.alpha >= l:
        reasons.append(f"independence {cls.alpha} >= {l}")
    if n_claim is not None and cls.n != n_claim:
        reasons.append(f"vertex count {cls.n} != {n_claim}")
    if e_claim is not None and cls.e != e_claim:
        reasons.append(f"edge count {cls.e} != {e_claim}")
    degs = g.degrees()
    seconds = [second_degree(g, v) for v in range(g.n)]
    return VerificationRecord(
        line_no=line_no,
        graph6=write_graph6(g).decode("ascii"),
        n=cls.n,
        e=cls.e,
        alpha=cls.alpha,
        triangle_free=cls.triangle_free,
        slack=edge_slack(g) if cls.triangle_free else None,
        degree_min=min(degs) if degs else None,
        degree_max=max(degs) if degs else None,
        second_min=min(seconds) if seconds else None,
        second_max=max(seconds) if seconds else None,
        verdict=not reasons,
        reasons=tuple(reasons),
    )


def _record_line(rec: VerificationRecord) -> str:
    bits = [f"line {rec.line_no}:", f"n={rec.n}", f"e={rec.e}", f"alpha={rec.alpha}"]
    bits.append("triangle-free" if rec.triangle_free else "has-triangle")
    if rec.slack is not None:
        bits.append(f"slack={rec.slack}")
    if rec.degree_min is not None:
        bits.append(f"deg={rec.degree_min}..{rec.degree_max}")
        bits.append(f"deg2={rec.second_min}..{rec.second_max}")
    if rec.verdict:
        bits.append("pass")
    else:
        bits.append("FAIL (" + "; ".join(rec.reasons) + ")")
    return " ".join(bits)


def _record_payload(rec: VerificationRecord) -> dict:
    return {
        "line": rec.line_no,
        "graph6": rec.graph6,
        "n": rec.n,
        "e": rec.e,
        "alpha": rec.alpha,
        "triangle_free": rec.triangle_free,
        "slack": rec.slack,
        "degree_min": rec.degree_min,
        "degree_max": rec.degree_max,
        "second_degree_min": rec.second_min,
        "second_degree_max": rec.second_max,
        "verdict": "pass" if rec.verdict else "fail",
        "reasons": list(rec.reasons),
    }


def cmd_verify(args) -> int:
    stream = None
    opened = False
    try:
        if args.file in (None, "-"):
            stream = sys.stdin.buffer
        else:
            stream = open(args.file, "rb")
            opened = True
        as_json = args.format == "json"
        payload_records = []
        count = fails = parse_errors = 0
        min_degree: int | None = None
        k24_everywhere = True
        for no, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = _decode_line(line, where=f" (line {no})")
            except Graph6Error as exc:
                parse_errors += 1
                print(f"error: {exc}", file=sys.stderr)
                continue
            rec = _verify_one(no, g, args.l, args.n, args.e)
            count += 1
            if not rec.verdict:
                fails += 1
            if rec.degree_min is not None and (min_degree is None or rec.degree_min < min_degree):
                min_degree = rec.degree_min
            if find_induced_k24(g) is None:
                k24_everywhere = False
            if as_json:
                payload_records.append(_record_payload(rec))
            else:
                print(_record_line(rec))
    finally:
        if opened and stream is not None:
            stream.close()

    summary = {
        "graphs": count,
        "pass": count - fails,
        "fail": fails,
        "parse_errors": parse_errors,
        "min_degree": min_degree,
        "induced_k24_everywhere": k24_everywhere if count else None,
    }
    if as_json:
        print(json.dumps({"version": SCHEMA_VERSION, "records": payload_records, "summary": summary}, ensure_ascii=False, indent=2))
    else:
        print(f"graphs: {count}  pass: {count - fails}  fail: {fails}  parse errors: {parse_errors}")
        print(f"minimum degree over corpus: {min_degree if count else 'n/a'}")
        if count:
            print(f"induced K2,4 in every graph: {'yes' if k24_everywhere else 'no'}")
        else:
            print("induced K2,4 in every graph: n/a")
    if parse_errors:
        return 2
    return 1 if fails else 0


def cmd_feasible(args) -> int:
    table = _load_table(args)
    refinements = _parse_refinements(args.refine)
    reports = enumerate_feasible(args.l, args.n, args.e, table=table, refinements=refinements)
    if args.format == "json":
        payload = {
            "version": SCHEMA_VERSION,
            "l": args.l,
            "n": args.n,
            "e": args.e,
            "refinements": sorted(refinements),
            "distributions": [_report_payload(rep) for rep in reports],
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for rep in reports:
            _print_report(rep)
        print(f"{len(reports)} feasible distribution(s) at l={args.l} n={args.n} e={args.e}")
    return 0 if reports else 1


def cmd_raise(args) -> int:
    table = _load_table(args)
    refinements = _parse_refinements(args.refine)
    value = raise_lower_bound(args.l, args.n, table=table, refinements=refinements)
    first = None
    if value != INF:
        first = enumerate_feasible(args.l, args.n, int(value), table=table, refinements=refinements)[0]
    if args.format == "json":
        payload = {
            "version": SCHEMA_VERSION,
            "l": args.l,
            "n": args.n,
            "refinements": sorted(refinements),
            "value": _json_value(value),
            "first_distribution": _report_payload(first) if first else None,
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(f"raised lower bound: {_fmt_value(value)}")
        if first is not None:
            print(f"first feasible distribution: {first.distribution}  defect={first.defect}")
        else:
            print("no degree distribution is feasible at any edge count")
    return 0


def cmd_oracle(args) -> int:
    res = min_edges_exhaustive(args.l, args.n, args.budget)
    g6 = write_graph6(res.witness).decode("ascii") if res.witness is not None else None
    if args.emit_witness:
        if g6 is None:
            print("no witness to emit (value is ∞)", file=sys.stderr)
        else:
            with open(args.emit_witness, "w", encoding="ascii") as fh:
                fh.write(g6 + "\n")
    if args.format == "json":
        payload = {
            "version": SCHEMA_VERSION,
            "l": args.l,
            "n": args.n,
            "value": _json_value(res.value),
            "nodes": res.nodes,
            "graph6": g6,
        }
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(f"value: {_fmt_value(res.value)}")
        print(f"nodes: {res.nodes}")
        if g6 is not None:
            print(f"witness: {g6}")
    return 0


# ---------------------------------------------------------------------------
# parser and entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifree",
        description="Bounds, certificates and searches for minimum-size triangle-free graphs with bounded independence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("bounds", help="look up one cell of the bounds table")
    q.add_argument("--l", type=int, required=True, help="independence threshold")
    q.add_argument("--n", type=int, required=True, help="vertex count")
    q.add_argument("--data", metavar="FILE", help="alternative bounds data file")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_bounds)

    q = sub.add_parser("table", help="render a window of the bounds table")
    q.add_argument("--l", required=True, metavar="LO-HI", help="column range, e.g. 7-10")
    q.add_argument("--n", required=True, metavar="LO-HI", help="row range, e.g. 22-34")
    q.add_argument("--data", metavar="FILE")
    q.add_argument("--format", choices=("md", "csv", "json"), default="md")
    q.set_defaults(func=cmd_table)

    q = sub.add_parser("verify", help="check graph6 certificates against claims")
    q.add_argument("file", nargs="?", help="graph6 file, one graph per line (default stdin)")
    q.add_argument("--l", type=int, help="require independence number below L")
    q.add_argument("--n", type=int, help="require exactly N vertices")
    q.add_argument("--e", type=int, help="require exactly E edges")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("construct", help="emit a named witness graph as graph6")
    q.add_argument("kind", choices=("w13", "tesseract", "circulant"))
    q.add_argument("--n", type=int, help="circulant order")
    q.add_argument("--offsets", metavar="A,B,...", help="circulant connection offsets")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_construct)

    q = sub.add_parser("feasible", help="degree distributions the counting test allows")
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--refine", metavar="r1,r2,r3|none|all", help="refinement selection (default r1)")
    q.add_argument("--data", metavar="FILE")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_feasible)

    q = sub.add_parser("raise", help="push the lower bound up by feasibility scanning")
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--refine", metavar="r1,r2,r3|none|all")
    q.add_argument("--data", metavar="FILE")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_raise)

    q = sub.add_parser("oracle", help="exact small values by exhaustive search")
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")
    q.add_argument("--emit-witness", metavar="FILE", help="write the witness graph6 here")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (DataConflictError, InconclusiveError, OracleMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        # Graph6Error and the domain errors all derive from ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
