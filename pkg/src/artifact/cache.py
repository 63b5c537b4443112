"""Persistent CSV cache of central values.

One row per (character, method). Floats are written with ``repr`` (shortest
round-trip), so a reload reproduces the stored binary64 values exactly.
Rows are appended as they are computed and the file is rewritten in
canonical order at the end of a run; an interrupted run that is resumed
therefore ends with the same bytes as an uninterrupted one.
"""

from __future__ import annotations

import csv
import os
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .characters import CharKey, PrimitiveCharacter
from .errors import MissingLValues
from .lvalues import LValueRecord

CACHE_COLUMNS = ("family", "q", "gen_a", "gen_b", "re_value", "im_value", "method", "trunc_err")
COMPARE_COLUMNS = ("family", "q", "gen_a", "gen_b", "afe_re", "afe_im", "direct_re", "direct_im", "abs_diff")


def _row(rec: LValueRecord) -> list[str]:
    return [
        rec.family,
        str(rec.q),
        str(rec.gen_a),
        str(rec.gen_b),
        repr(rec.value.real),
        repr(rec.value.imag),
        rec.method,
        repr(rec.truncation_error),
    ]


def _parse(r: dict) -> LValueRecord:
    return LValueRecord(
        r["family"],
        int(r["q"]),
        int(r["gen_a"]),
        int(r["gen_b"]),
        complex(float(r["re_value"]), float(r["im_value"])),
        r["method"],
        float(r["trunc_err"]),
    )


def _order(rec: LValueRecord):
    return (rec.family, rec.q, rec.gen_a, rec.gen_b, rec.method)


class LValueCache:
    """Single-writer cache; readers take a snapshot with ``values``."""

    def __init__(self, path):
        self.path = Path(path)
        self._records: dict[tuple, LValueRecord] = {}
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path, newline="") as fh:
            for r in csv.DictReader(fh):
                try:
                    rec = _parse(r)
                except (KeyError, ValueError, TypeError):
                    continue  # a partial last line from an interrupted write
                self._records[rec.key + (rec.method,)] = rec

    def __len__(self) -> int:
        return len(self._records)

    def has(self, key: CharKey, method: str) -> bool:
        return tuple(key) + (method,) in self._records

    def records(self) -> list[LValueRecord]:
        return sorted(self._records.values(), key=_order)

    def append(self, recs: Iterable[LValueRecord]) -> None:
        recs = list(recs)
        if not recs:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        new = not self.path.exists() or self.path.stat().st_size == 0
        with open(self.path, "a", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            if new:
                w.writerow(CACHE_COLUMNS)
            for rec in recs:
                w.writerow(_row(rec))
                self._records[rec.key + (rec.method,)] = rec
            fh.flush()
            os.fsync(fh.fileno())

    def finalize(self) -> None:
        """Rewrite the file in canonical order (atomic replace)."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        with open(tmp, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CACHE_COLUMNS)
            for rec in self.records():
                w.writerow(_row(rec))
        os.replace(tmp, self.path)

    def values(self, family: Optional[str] = None, method: str = "afe") -> dict[CharKey, complex]:
        """key -> L(1/2, chi); rows of ``method`` win, other methods fill gaps."""
        out: dict[CharKey, complex] = {}
        for rec in self._records.values():
            if family is not None and rec.family != family:
                continue
            if rec.method == method or rec.key not in out:
                out[rec.key] = rec.value
        return out

    def write_comparison(self, path) -> int:
        """Rows with both an AFE and a direct value, with their difference."""
        rows = []
        for (fam, q, a, b, m), rec in sorted(self._records.items()):
            if m != "afe":
                continue
            other = self._records.get((fam, q, a, b, "direct"))
            if other is None:
                continue
            z, w_ = rec.value, other.value
            rows.append([fam, q, a, b, repr(z.real), repr(z.imag), repr(w_.real), repr(w_.imag), repr(abs(z - w_))])
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(COMPARE_COLUMNS)
            w.writerows(rows)
        return len(rows)


def require_values(
    values: Mapping[CharKey, complex], members: Sequence[PrimitiveCharacter], family: str
) -> list[complex]:
    """Values for ``members`` in order, or MissingLValues naming the conductor range."""
    out, missing = [], []
    for chi in members:
        z = values.get(chi.key)
        if z is None:
            missing.append(chi.q)
        out.append(z)
    if missing:
        raise MissingLValues(family, min(missing), max(missing), len(missing))
    return out
