"""Uniform report records with JSON-lines, CSV, and text serialization.

Every CLI action emits ReportRecord values; the three formats carry the
same data.  Output is deterministic given the inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable

from .verification import (CheckReport, ConjectureReport, ExtremalReport,
                           Lemma1Report, Lemma1Sweep)

CLAIM_LABELS = {
    "theorem2": "Theorem 2",
    "theorem5": "Theorem 5",
    "table1": "Table 1",
    "corollaries": "Corollaries 3-4",
    "lollipop": "lollipop comparisons",
    "conjecture": "Conjecture",
    "lemma1": "Lemma 1",
}

CSV_COLUMNS = ("kind", "claim", "verdict", "inputs", "outputs", "notes")


@dataclass(frozen=True)
class ReportRecord:
    kind: str
    inputs: dict
    outputs: dict
    verdict: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def claim(self) -> str:
        return CLAIM_LABELS.get(self.kind, "")


def from_extremal(rep: ExtremalReport) -> ReportRecord:
    inputs = {"n": rep.n}
    if rep.d is not None:
        inputs["d"] = rep.d
    return ReportRecord(
        kind=rep.kind,
        inputs=inputs,
        outputs={
            "bound": rep.bound,
            "observed_max": rep.observed_max,
            "achiever_certs": list(rep.achiever_certs),
            "expected_certs": list(rep.expected_certs),
            "graphs_scanned": rep.graphs_scanned,
        },
        verdict=rep.verdict,
        notes=rep.notes,
    )


def from_conjecture(rep: ConjectureReport) -> ReportRecord:
    return ReportRecord(
        kind="conjecture",
        inputs={"n": rep.n, "m": rep.m},
        outputs={
            "predicted_d": rep.predicted_d,
            "predicted_k": rep.predicted_k,
            "predicted_value": rep.predicted_value,
            "observed_max": rep.observed_max,
            "achiever_certs": list(rep.achiever_certs),
            "uniqueness_expected": rep.uniqueness_expected,
            "graphs_scanned": rep.graphs_scanned,
        },
        verdict=rep.verdict,
        notes=rep.anomalies,
    )


def from_lemma1(rep: Lemma1Report) -> ReportRecord:
    return ReportRecord(
        kind="lemma1",
        inputs={"g6": rep.g6},
        outputs={
            "n": rep.n,
            "diameter": rep.diameter,
            "configurations": rep.configurations,
            "failures": list(rep.failures),
            "universal_violations": rep.universal_violations,
        },
        verdict=rep.verdict,
    )


def from_lemma1_sweep(rep: Lemma1Sweep) -> ReportRecord:
    return ReportRecord(
        kind="lemma1",
        inputs={"n": rep.n},
        outputs={
            "graphs_checked": rep.graphs_checked,
            "configurations": rep.configurations,
            "failures": list(rep.failures),
            "universal_violations": rep.universal_violations,
        },
        verdict=rep.verdict,
    )


def from_check(rep: CheckReport) -> ReportRecord:
    return ReportRecord(
        kind=rep.kind,
        inputs=dict(rep.params),
        outputs={"checked": rep.checked, "details": list(rep.details)},
        verdict=rep.verdict,
    )


def to_json_line(rec: ReportRecord) -> str:
    payload = {
        "kind": rec.kind,
        "claim": rec.claim,
        "verdict": rec.verdict,
        "inputs": rec.inputs,
        "outputs": rec.outputs,
        "notes": list(rec.notes),
    }
    return json.dumps(payload, separators=(",", ":"))


def csv_header() -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(CSV_COLUMNS)
    return buf.getvalue().rstrip("\n")


def to_csv_row(rec: ReportRecord) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow([
        rec.kind,
        rec.claim,
        rec.verdict or "",
        json.dumps(rec.inputs, separators=(",", ":")),
        json.dumps(rec.outputs, separators=(",", ":")),
        json.dumps(list(rec.notes), separators=(",", ":")),
    ])
    return buf.getvalue().rstrip("\n")


def to_text(rec: ReportRecord) -> str:
    bits = [rec.kind]
    if rec.inputs:
        bits.append(" ".join(f"{k}={v}" for k, v in rec.inputs.items()))
    if rec.claim:
        bits.append(f"[{rec.claim}]")
    head = " ".join(bits)
    lines = [f"{head}: {rec.verdict}" if rec.verdict else head]
    for key, value in rec.outputs.items():
        if isinstance(value, list):
            if not value:
                continue
            lines.append(f"  {key}:")
            lines.extend(f"    {item}" for item in value)
        else:
            lines.append(f"  {key}: {value}")
    for note in rec.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def emit(records: Iterable[ReportRecord], fmt: str, write) -> None:
    records = list(records)
    if fmt == "json":
        for rec in records:
            write(to_json_line(rec) + "\n")
    elif fmt == "csv":
        write(csv_header() + "\n")
        for rec in records:
            write(to_csv_row(rec) + "\n")
    else:
        for rec in records:
            write(to_text(rec) + "\n")
