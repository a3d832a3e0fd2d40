"""Reproduction harness for the bundled reference tables.

Each table row is rebuilt from its published data and compared against
the published classification.  Rows whose data cannot reproduce the
published values are never silently patched: wrong-length strings are
flagged as errata, and any other failure is reported as a mismatch.
The opt-in repair mode recovers rows for which a unique corrected
string passes the published invariants, marking them distinctly.

Lift analyses are cached for the run, so the pairwise-invariant table
and the extension table reuse the table-1/2 work.  All JSON output is
deterministic: fixed key order, no timestamps, runtimes kept out of the
payload.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import published
from .analysis import EnumeratorReport, analyze
from .extension import ExtensionError, expand_x, extend
from .lifts import (
    HexLengthError,
    LiftCandidate,
    LiftError,
    complete_lower,
    decode_upper,
    repair_hex,
    repair_substitution,
)

TABLE_IDS = ("1", "2", "3", "equivalence")

MATCH = "match"
MISMATCH = "mismatch"
ERRATA = "errata-flagged"
REPAIRED = "repaired"


@dataclass
class RowResult:
    name: str
    status: str
    expected: dict
    measured: dict | None = None
    note: str = ""
    seconds: float = 0.0

    def to_json_dict(self) -> dict:
        # seconds intentionally left out: payload must be run-invariant
        return {
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "measured": self.measured,
            "note": self.note,
        }


@dataclass
class TableReport:
    table: str
    rows: list[RowResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != MISMATCH for r in self.rows)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.rows:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def to_json_dict(self) -> dict:
        return {"table": self.table, "rows": [r.to_json_dict() for r in self.rows]}


def reports_to_json(reports: list[TableReport]) -> str:
    payload = {"tables": [t.to_json_dict() for t in reports]}
    return json.dumps(payload, indent=2) + "\n"


def _lift_expected(row: published.LiftRow) -> dict:
    return {"n": 64, "k": 32, "d": 12, "family": row.family, "beta": row.beta}


def _measured_dict(report: EnumeratorReport) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "d": report.d,
        "family": report.family,
        "beta": report.beta,
        "a12_pair": report.a12_pair,
    }


@dataclass
class _LiftOutcome:
    result: RowResult
    candidate: LiftCandidate | None = None
    report: EnumeratorReport | None = None


class Reproducer:
    """Rebuilds table rows with a per-run cache of lift analyses."""

    def __init__(self, threads: int = 1, repair: bool = False):
        self.threads = threads
        self.repair = repair
        self._lifts: dict[str, _LiftOutcome] = {}

    # -- lift rows ----------------------------------------------------

    def _analyze_hex(self, hex_str: str, base) -> tuple[LiftCandidate, EnumeratorReport, str]:
        candidates = complete_lower(decode_upper(hex_str), base)
        note = "" if len(candidates) == 1 else f"{len(candidates)} completions"
        reports = [analyze(c.gray_code(), threads=self.threads) for c in candidates]
        if len(reports) > 1:
            keys = {(tuple(sorted(r.distribution.items())), r.a12_pair) for r in reports}
            if len(keys) > 1:
                note += "; completions disagree in weight data"
        return candidates[0], reports[0], note

    def _try_repair(self, row: published.LiftRow, base, trials: list[str]) -> _LiftOutcome | None:
        for hex_str in trials:
            try:
                candidate, report, note = self._analyze_hex(hex_str, base)
            except LiftError:
                continue
            if (report.family, report.beta) == (row.family, row.beta):
                result = RowResult(
                    name=row.name,
                    status=REPAIRED,
                    expected=_lift_expected(row),
                    measured=_measured_dict(report),
                    note=f"repaired with {hex_str}" + (f"; {note}" if note else ""),
                )
                return _LiftOutcome(result, candidate, report)
        return None

    def _repair_row(self, row: published.LiftRow, base, search) -> _LiftOutcome | None:
        known = published.CORRECTIONS.get(row.name)
        if known is not None:
            outcome = self._try_repair(row, base, [known])
            if outcome is not None:
                return outcome
        found = search()
        if not found:
            return None
        outcome = self._try_repair(row, base, found)
        if outcome is not None and len(found) > 1:
            outcome.result.note += f"; ambiguous: {len(found)} candidate repairs {found}"
        return outcome

    def lift_row(self, name: str) -> _LiftOutcome:
        if name in self._lifts:
            return self._lifts[name]
        row = published.LIFTS[name]
        base = published.BASES[row.base]
        t0 = time.monotonic()
        outcome = self._lift_row_inner(row, base)
        outcome.result.seconds = time.monotonic() - t0
        self._lifts[name] = outcome
        return outcome

    def _lift_row_inner(self, row: published.LiftRow, base) -> _LiftOutcome:
        expected = _lift_expected(row)
        try:
            candidate, report, note = self._analyze_hex(row.hex, base)
        except HexLengthError as err:
            if self.repair:
                outcome = self._repair_row(
                    row,
                    base,
                    lambda: repair_hex(
                        row.hex, base, row.family, row.beta, threads=self.threads
                    ),
                )
                if outcome is not None:
                    return outcome
                note = f"{err}; no repair found"
            else:
                note = str(err)
            return _LiftOutcome(RowResult(row.name, ERRATA, expected, None, note))
        except LiftError as err:
            if self.repair:
                outcome = self._repair_row(
                    row,
                    base,
                    lambda: repair_substitution(
                        row.hex, base, row.family, row.beta, threads=self.threads
                    ),
                )
                if outcome is not None:
                    return outcome
            return _LiftOutcome(RowResult(row.name, MISMATCH, expected, None, str(err)))

        measured = _measured_dict(report)
        if (report.family, report.beta, report.d) == (row.family, row.beta, 12):
            return _LiftOutcome(
                RowResult(row.name, MATCH, expected, measured, note), candidate, report
            )
        if self.repair:
            outcome = self._repair_row(
                row,
                base,
                lambda: repair_substitution(
                    row.hex, base, row.family, row.beta, threads=self.threads
                ),
            )
            if outcome is not None:
                outcome.result.note += "; published string does not reproduce"
                return outcome
        note = (note + "; " if note else "") + "published string does not reproduce"
        return _LiftOutcome(
            RowResult(row.name, MISMATCH, expected, measured, note), candidate, report
        )

    # -- tables ---------------------------------------------------------

    def lift_table(self, table_id: str, rows) -> TableReport:
        report = TableReport(table_id)
        for row in rows:
            report.rows.append(self.lift_row(row.name).result)
        return report

    def extension_table(self) -> TableReport:
        report = TableReport("3")
        for row in published.TABLE3:
            t0 = time.monotonic()
            result = self._extension_row(row)
            result.seconds = time.monotonic() - t0
            report.rows.append(result)
        return report

    def _extension_row(self, row: published.ExtensionRow) -> RowResult:
        expected = {
            "n": 66,
            "k": 33,
            "d": 12,
            "family": row.family,
            "beta": row.beta,
            "base": row.base,
        }
        base_outcome = self.lift_row(row.base)
        if base_outcome.candidate is None:
            return RowResult(
                row.name,
                MISMATCH,
                expected,
                None,
                f"base lift {row.base} unavailable ({base_outcome.result.status}: "
                f"{base_outcome.result.note})",
            )
        note = ""
        if base_outcome.result.status == REPAIRED:
            note = f"built on repaired base {row.base}"
        try:
            x = expand_x(row.x, 64)
            code = extend(base_outcome.candidate.gray_code(), x)
        except ExtensionError as err:
            return RowResult(row.name, MISMATCH, expected, None, str(err))
        rep = analyze(code, threads=self.threads)
        measured = _measured_dict(rep)
        status = (
            MATCH
            if (rep.family, rep.beta, rep.d) == (row.family, row.beta, 12)
            else MISMATCH
        )
        if status == MISMATCH and self.repair and row.name in published.X_CORRECTIONS:
            corrected = published.X_CORRECTIONS[row.name]
            rep2 = analyze(
                extend(base_outcome.candidate.gray_code(), expand_x(corrected, 64)),
                threads=self.threads,
            )
            if (rep2.family, rep2.beta, rep2.d) == (row.family, row.beta, 12):
                measured = _measured_dict(rep2)
                status = REPAIRED
                note = (note + "; " if note else "") + (
                    f"repaired extension vector {corrected}"
                )
        if status == MISMATCH:
            note = (note + "; " if note else "") + "extension does not reproduce"
        elif status == MATCH and note and base_outcome.result.status == REPAIRED:
            status = REPAIRED
        return RowResult(row.name, status, expected, measured, note)

    def equivalence_table(self) -> TableReport:
        report = TableReport("equivalence")
        for row in published.EQUIVALENCE:
            t0 = time.monotonic()
            result = self._equivalence_row(row)
            result.seconds = time.monotonic() - t0
            report.rows.append(result)
        return report

    def _equivalence_row(self, row: published.EquivalenceRow) -> RowResult:
        expected = {
            "family": row.family,
            "beta": row.beta,
            row.left: row.left_a12,
            row.right: row.right_a12,
        }
        measured: dict = {}
        notes = []
        ok = True
        for name, want in ((row.left, row.left_a12), (row.right, row.right_a12)):
            outcome = self.lift_row(name)
            got = outcome.report.a12_pair if outcome.report else None
            measured[name] = got
            if outcome.result.status in (ERRATA, MISMATCH) and outcome.report is None:
                notes.append(f"{name} unavailable ({outcome.result.status})")
                ok = False
            elif got != want:
                notes.append(f"{name}: pair invariant {got} != published {want}")
                ok = False
            if outcome.result.status == REPAIRED:
                notes.append(f"{name} repaired")
        status = MATCH if ok else MISMATCH
        if ok and any("repaired" in n for n in notes):
            status = REPAIRED
        return RowResult(
            f"{row.left}/{row.right}", status, expected, measured, "; ".join(notes)
        )


def reproduce(
    tables: list[str] | str = "all",
    *,
    threads: int = 1,
    repair: bool = False,
) -> list[TableReport]:
    """Run the requested table reproductions, sharing one analysis cache."""
    if tables == "all":
        wanted = list(TABLE_IDS)
    elif isinstance(tables, str):
        wanted = [tables]
    else:
        wanted = list(tables)
    for t in wanted:
        if t not in TABLE_IDS:
            raise ValueError(f"unknown table {t!r}; have {TABLE_IDS} and 'all'")
    runner = Reproducer(threads=threads, repair=repair)
    out = []
    for t in wanted:
        if t == "1":
            out.append(runner.lift_table("1", published.TABLE1))
        elif t == "2":
            out.append(runner.lift_table("2", published.TABLE2))
        elif t == "3":
            out.append(runner.extension_table())
        else:
            out.append(runner.equivalence_table())
    return out
