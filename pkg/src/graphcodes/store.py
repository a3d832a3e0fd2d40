"""Flat-file store of constructed codes.

Each entry is a JSON metadata file plus a plain-text generator matrix,
small enough to diff and audit.  Metadata records how the code was
built (graph, lift hex, seed, or extension inputs) and the full
analysis report; re-analyzing the stored generator must reproduce the
stored report bit for bit.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from pathlib import Path

from .analysis import EnumeratorReport
from .gf2 import BinaryCode, format_matrix_text, parse_matrix_text

STORE_ENV = "GRAPHCODES_STORE"
DEFAULT_STORE = "graphcodes-store"

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


class StoreError(ValueError):
    """Raised on bad entry names and missing entries."""


def default_store_path() -> Path:
    return Path(os.environ.get(STORE_ENV, DEFAULT_STORE))


@dataclass
class StoreEntry:
    name: str
    provenance: dict
    code: BinaryCode
    report: EnumeratorReport


class CodeStore:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else default_store_path()

    def _meta_path(self, name: str) -> Path:
        return self.root / f"{name}.json"

    def _gen_path(self, name: str) -> Path:
        return self.root / f"{name}.gen.txt"

    def save(self, entry: StoreEntry) -> Path:
        if not _NAME_RE.match(entry.name):
            raise StoreError(f"bad entry name: {entry.name!r}")
        self.root.mkdir(parents=True, exist_ok=True)
        gen_path = self._gen_path(entry.name)
        gen_path.write_text(format_matrix_text(entry.code.generator))
        meta = {
            "name": entry.name,
            "provenance": entry.provenance,
            "generator_file": gen_path.name,
            "report": entry.report.to_json_dict(),
        }
        path = self._meta_path(entry.name)
        path.write_text(json.dumps(meta, indent=2) + "\n")
        return path

    def load(self, name: str) -> StoreEntry:
        path = self._meta_path(name)
        if not path.exists():
            raise StoreError(f"no stored code named {name!r} under {self.root}")
        meta = json.loads(path.read_text())
        gen_text = (self.root / meta["generator_file"]).read_text()
        code = BinaryCode(parse_matrix_text(gen_text))
        return StoreEntry(
            name=meta["name"],
            provenance=meta["provenance"],
            code=code,
            report=EnumeratorReport.from_json_dict(meta["report"]),
        )

    def names(self) -> list[str]:
        if not self.root.is_dir():
            return []
        return sorted(p.stem for p in self.root.glob("*.json"))

    def has(self, name: str) -> bool:
        return self._meta_path(name).exists()
