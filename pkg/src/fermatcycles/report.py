"""JSON reports and the on-disk result cache.

Reports carry every integer as a decimal string so consumers limited to
64-bit numbers cannot truncate large values.  The ``timing`` block is the only
part allowed to differ between runs on identical inputs; the content hash
covers everything else.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any

from fermatcycles import __version__

SCHEMA_VERSION = "1"
VOLATILE_KEYS = ("timing",)


def stringify(obj: Any) -> Any:
    """Recursively turn ints (not bools) and Fractions into strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        return format(obj, ".6f")
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [stringify(v) for v in sorted(obj)]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def strip_volatile(report: dict) -> dict:
    return {k: v for k, v in report.items() if k not in VOLATILE_KEYS}


def content_hash(report: dict) -> str:
    body = {k: v for k, v in strip_volatile(report).items() if k != "content_hash"}
    return sha256_hex(canonical_json(body))


def build_report(command: str, inputs: dict, rows: list[dict], tables: dict | None = None) -> dict:
    """Assemble a report from per-grid-point rows, each with ``label`` and ``ok``."""
    failed = [row["label"] for row in rows if not row["ok"]]
    report = {
        "schema_version": SCHEMA_VERSION,
        "artifact_version": __version__,
        "command": command,
        "inputs": stringify(inputs),
        "verdicts": {
            "all_passed": not failed,
            "checked": str(len(rows)),
            "failed": failed,
        },
        "tables": stringify({"rows": rows, **(tables or {})}),
    }
    report["content_hash"] = content_hash(report)
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def atomic_write(path: Path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class ResultCache:
    """One JSON file per (command, canonical inputs, artifact version)."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def key(self, command: str, inputs: dict) -> str:
        return sha256_hex(canonical_json([command, stringify(inputs), __version__]))

    def path(self, command: str, inputs: dict) -> Path:
        return self.directory / f"{self.key(command, inputs)}.json"

    def get(self, command: str, inputs: dict) -> dict | None:
        path = self.path(command, inputs)
        if not path.exists():
            return None
        with open(path, encoding="utf-8") as fh:
            cached = json.load(fh)
        if cached.get("content_hash") != content_hash(cached):
            return None
        return cached

    def put(self, command: str, inputs: dict, report: dict):
        atomic_write(self.path(command, inputs), dumps(strip_volatile(report)))
