"""Command-line front end: build, lift, analyze, extend, reproduce, search."""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import published
from .analysis import analyze
from .extension import expand_x, extend
from .gf2 import BinaryCode, parse_matrix_text
from .graphs import (
    BUILTIN_NAMES,
    builtin_graph,
    graph_to_selfdual_code,
    parse_graph_text,
    three_face_coloring,
    validate,
)
from .lifts import (
    HexLengthError,
    LiftError,
    complete_lower,
    decode_upper,
    random_lift,
    repair_hex,
    repair_substitution,
    search_lifts,
)
from .repro import reproduce, reports_to_json
from .store import CodeStore, StoreEntry, StoreError


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="graphcodes",
        description="Self-dual codes from bicubic planar graphs: ring lifts, "
        "Gray images, exhaustive analysis, building-up extensions.",
    )
    p.add_argument("--store", metavar="DIR", help="code store directory "
                   "(default: $GRAPHCODES_STORE or ./graphcodes-store)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, metavar="N",
                   help="worker threads for enumeration (default: all cores)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph2code", help="self-dual code from a bicubic planar graph")
    g.add_argument("graph", help=f"builtin name ({', '.join(BUILTIN_NAMES)}) or graph file")
    g.add_argument("--faces", nargs=2, type=int, metavar=("F1", "F2"),
                   help="1-based face pair to delete (default: first valid pair)")
    g.add_argument("--name", help="store entry name (default: graph name)")
    g.add_argument("--no-store", action="store_true")

    l = sub.add_parser("lift", help="lift a base matrix to the ring and analyze the image")
    l.add_argument("base", help="A1, A2, or a file with an 8x8 0/1 matrix")
    l.add_argument("hex", nargs="?", help="36-digit upper-triangle hex string")
    l.add_argument("--random", action="store_true", help="draw a random lift instead")
    l.add_argument("--seed", type=int, default=0)
    l.add_argument("--repair", action="store_true",
                   help="search corrected strings for a misprinted entry")
    l.add_argument("--expect", nargs=2, metavar=("FAMILY", "BETA"),
                   help="expected classification for --repair")
    l.add_argument("--name", help="store entry name")
    l.add_argument("--no-store", action="store_true")

    a = sub.add_parser("analyze", help="analyze a generator matrix file")
    a.add_argument("file")

    e = sub.add_parser("extend", help="length n+2 self-dual code via building-up")
    e.add_argument("base", help="stored code name or published lift name (K1..L15)")
    e.add_argument("x", help="extension vector: 0/1 string, 1^{m}/0^{m} notation allowed")
    e.add_argument("--name", help="store entry name")
    e.add_argument("--no-store", action="store_true")

    r = sub.add_parser("reproduce", help="rebuild the bundled reference tables")
    r.add_argument("table", choices=["1", "2", "3", "equivalence", "all"])
    r.add_argument("--repair", action="store_true",
                   help="attempt repairs of misprinted rows")

    s = sub.add_parser("search", help="random-lift search for prescribed images")
    s.add_argument("base", help="A1, A2, or a file with an 8x8 0/1 matrix")
    s.add_argument("--budget", type=int, default=10, help="lifts to try (default 10)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--min-distance", type=int)
    s.add_argument("--target", action="append", metavar="FAMILY:BETA",
                   help="keep only this classification (repeatable)")
    s.add_argument("--out", metavar="FILE", help="append discovery records as JSON lines")
    return p


def _resolve_base(spec_name: str):
    if spec_name in published.BASES:
        return spec_name, published.BASES[spec_name]
    path = Path(spec_name)
    matrix = parse_matrix_text(path.read_text())
    return path.stem, matrix


def _store(args) -> CodeStore:
    return CodeStore(args.store) if args.store else CodeStore()


def _emit_report(args, report, context: dict) -> None:
    if args.json:
        payload = dict(context)
        payload["report"] = report.to_json_dict()
        print(json.dumps(payload, indent=2))
    else:
        for key, val in context.items():
            print(f"{key}: {val}")
        print(report.summary())
        print("distribution:", {w: c for w, c in sorted(report.distribution.items())})


def _save(args, store_name: str, provenance: dict, code: BinaryCode, report) -> None:
    if args.no_store:
        return
    store = _store(args)
    path = store.save(StoreEntry(store_name, provenance, code, report))
    if not args.json:
        print(f"stored as {store_name} ({path})")


def cmd_graph2code(args) -> int:
    name = args.graph
    if name.lower() in tuple(n.lower() for n in BUILTIN_NAMES):
        graph = builtin_graph(name)
    else:
        graph = parse_graph_text(Path(name).read_text(), name=Path(name).stem)
    rep = validate(graph)
    if not rep.ok:
        for failure in rep.failures():
            print(f"validation failed: {failure}", file=sys.stderr)
        return 1
    faces = None
    if args.faces:
        faces = (args.faces[0] - 1, args.faces[1] - 1)
    code = graph_to_selfdual_code(graph, *(faces or (None, None)))
    report = analyze(code, threads=args.threads)
    coloring = three_face_coloring(graph)
    if faces is None:
        faces = next(
            (i, j)
            for i in range(len(graph.faces))
            for j in range(i + 1, len(graph.faces))
            if coloring[i] != coloring[j]
        )
    store_name = args.name or graph.name or "graph"
    provenance = {
        "kind": "graph",
        "graph": graph.name or name,
        "deleted_faces": [faces[0] + 1, faces[1] + 1],
    }
    _emit_report(args, report, {"graph": graph.name or name,
                                "deleted_faces": f"{faces[0] + 1},{faces[1] + 1}"})
    _save(args, store_name, provenance, code, report)
    return 0


def _lift_expectation(args, hex_str: str):
    if args.expect:
        return args.expect[0], int(args.expect[1])
    for row in published.LIFTS.values():
        if row.hex == hex_str:
            return row.family, row.beta
    raise LiftError("--repair needs --expect FAMILY BETA for an unpublished string")


def cmd_lift(args) -> int:
    base_name, base = _resolve_base(args.base)
    if args.random:
        lift = random_lift(base, seed=args.seed)
        candidates = [lift.candidate]
        provenance = {"kind": "random-lift", "base": base_name, "seed": lift.seed,
                      "tries": lift.tries, "rng": lift.rng,
                      "hex": lift.candidate.upper_hex()}
        context = {"base": base_name, "seed": lift.seed, "hex": lift.candidate.upper_hex()}
    elif args.hex is None:
        print("a hex string is required unless --random is given", file=sys.stderr)
        return 2
    elif args.repair:
        family, beta = _lift_expectation(args, args.hex)
        if len(args.hex.strip()) == 36:
            repairs = repair_substitution(args.hex, base, family, beta,
                                          threads=args.threads)
        else:
            repairs = repair_hex(args.hex, base, family, beta, threads=args.threads)
        if not repairs:
            print("no repair candidate reproduces the expected classification",
                  file=sys.stderr)
            return 1
        if not args.json:
            print(f"repair candidates: {repairs}")
        candidates = complete_lower(decode_upper(repairs[0]), base)
        provenance = {"kind": "lift", "base": base_name, "hex": repairs[0],
                      "repaired_from": args.hex, "candidates": repairs}
        context = {"base": base_name, "hex": repairs[0], "repaired_from": args.hex}
    else:
        candidates = complete_lower(decode_upper(args.hex), base)
        provenance = {"kind": "lift", "base": base_name, "hex": args.hex}
        context = {"base": base_name, "hex": args.hex}
    if len(candidates) > 1:
        context["completions"] = len(candidates)
    report = analyze(candidates[0].gray_code(), threads=args.threads)
    _emit_report(args, report, context)
    store_name = args.name or f"lift-{provenance['hex'][:10].lower()}"
    _save(args, store_name, provenance, candidates[0].gray_code(), report)
    return 0


def cmd_analyze(args) -> int:
    code = BinaryCode(parse_matrix_text(Path(args.file).read_text()))
    report = analyze(code, threads=args.threads)
    _emit_report(args, report, {"file": args.file})
    return 0


def _resolve_extension_base(args) -> tuple[str, BinaryCode]:
    store = _store(args)
    if store.has(args.base):
        return args.base, store.load(args.base).code
    if args.base in published.LIFTS:
        row = published.LIFTS[args.base]
        hex_str = published.CORRECTIONS.get(row.name, row.hex)
        if hex_str != row.hex and not args.json:
            print(f"note: using the corrected string for misprinted row {row.name}")
        candidates = complete_lower(decode_upper(hex_str), published.BASES[row.base])
        return args.base, candidates[0].gray_code()
    raise StoreError(f"no stored code or published lift named {args.base!r}")


def cmd_extend(args) -> int:
    base_name, base_code = _resolve_extension_base(args)
    x = expand_x(args.x, base_code.n)
    code = extend(base_code, x)
    report = analyze(code, threads=args.threads)
    _emit_report(args, report, {"base": base_name, "x": args.x})
    store_name = args.name or f"{base_name}-ext"
    provenance = {"kind": "extension", "base": base_name, "x": args.x}
    _save(args, store_name, provenance, code, report)
    return 0


def cmd_reproduce(args) -> int:
    reports = reproduce(args.table, threads=args.threads, repair=args.repair)
    if args.json:
        sys.stdout.write(reports_to_json(reports))
    else:
        for table in reports:
            print(f"table {table.table}:")
            for row in table.rows:
                exp = table_row_expectation(row)
                meas = table_row_measurement(row)
                line = f"  {row.name:<8} {row.status:<14} {exp}"
                if meas:
                    line += f" -> {meas}"
                if row.note:
                    line += f"  [{row.note}]"
                line += f"  ({row.seconds:.1f}s)"
                print(line)
            counts = ", ".join(f"{v} {k}" for k, v in sorted(table.counts().items()))
            print(f"table {table.table}: {counts}")
    return 0 if all(t.ok for t in reports) else 1


def table_row_expectation(row) -> str:
    e = row.expected
    if "family" in e and "beta" in e and "d" in e:
        return f"expect beta {e['beta']} in {e['family']}"
    if "family" in e:
        pairs = {k: v for k, v in e.items() if k not in ("family", "beta")}
        return f"expect pairs {pairs}"
    return str(e)


def table_row_measurement(row) -> str:
    m = row.measured
    if not m:
        return ""
    if "family" in m:
        tag = f"[{m['n']},{m['k']},{m['d']}] {m['family']}"
        if m["beta"] is not None:
            tag += f" beta={m['beta']}"
        return tag
    return str(m)


def cmd_search(args) -> int:
    base_name, base = _resolve_base(args.base)
    targets = None
    if args.target:
        targets = set()
        for t in args.target:
            family, _, beta = t.partition(":")
            targets.add((family, int(beta)))
    found = search_lifts(
        base,
        budget=args.budget,
        seed=args.seed,
        min_distance=args.min_distance,
        targets=targets,
        base_name=base_name,
        threads=args.threads,
    )
    records = []
    for disc in found:
        records.append({
            "base": disc.base_name,
            "hex": disc.hex,
            "seed": disc.seed,
            "family": disc.family,
            "beta": disc.beta,
            "a12_pair": disc.a12_pair,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        })
    if args.json:
        print(json.dumps(records, indent=2))
    else:
        if not found:
            print(f"no hits in {args.budget} lifts")
        for rec, disc in zip(records, found):
            print(f"{rec['hex']} seed={rec['seed']} {disc.report.summary()}")
    if args.out:
        with open(args.out, "a") as fh:
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
    return 0


_COMMANDS = {
    "graph2code": cmd_graph2code,
    "lift": cmd_lift,
    "analyze": cmd_analyze,
    "extend": cmd_extend,
    "reproduce": cmd_reproduce,
    "search": cmd_search,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except HexLengthError as err:
        print(f"error: {err} (use --repair to search corrections)", file=sys.stderr)
        return 1
    except (ValueError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
