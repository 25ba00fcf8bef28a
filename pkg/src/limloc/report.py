"""Ratio reports and their CSV / JSON serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from limloc.core import format_rational
from limloc.objectives import OBJECTIVES, Objective
from limloc.verify.ratio import Ratio, RatioWitness, format_ratio

CSV_COLUMNS = ("mechanism", "objective", "instance", "mech_value", "opt_value", "ratio")


@dataclass(frozen=True)
class ReportRow:
    mechanism: str
    objective: Objective
    instance_id: str
    mechanism_value: Fraction
    optimal_value: Fraction
    ratio: Ratio
    witness_summary: str = ""

    @classmethod
    def from_witness(cls, mechanism: str, witness: RatioWitness, instance_id: str | None = None) -> ReportRow:
        summary = f"mech at {witness.mechanism_placement}, opt at {witness.optimal.placement}"
        return cls(
            mechanism,
            witness.objective,
            instance_id if instance_id is not None else witness.label,
            witness.mechanism_value,
            witness.optimal.value,
            witness.ratio,
            summary,
        )

    def sort_key(self):
        return (self.mechanism, OBJECTIVES.index(self.objective), self.instance_id)

    def cells(self) -> list[str]:
        return [
            self.mechanism,
            self.objective.cli_name,
            self.instance_id,
            format_rational(self.mechanism_value),
            format_rational(self.optimal_value),
            format_ratio(self.ratio),
        ]


@dataclass
class Report:
    rows: list[ReportRow] = field(default_factory=list)

    def add(self, row: ReportRow) -> None:
        self.rows.append(row)

    def sorted_rows(self) -> list[ReportRow]:
        return sorted(self.rows, key=ReportRow.sort_key)


def emit_report(report: Report, fmt: str = "csv") -> str:
    """Rows ordered by mechanism, objective (canonical order), then instance id."""
    rows = report.sorted_rows()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.cells())
        return buf.getvalue()
    if fmt == "json":
        payload = [
            dict(zip(CSV_COLUMNS, row.cells()), witness=row.witness_summary)
            for row in rows
        ]
        return json.dumps({"rows": payload}, indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
