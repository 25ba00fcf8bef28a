"""Summary ratio tables computed from the structured families.

Four rows: Median* and EndPoint* on the restricted constructions, and the
same mechanisms with the facility allowed anywhere (region [0, 1]). Each cell
is the worst exact ratio over the families aimed at that objective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from limloc.mechanisms import MEDIAN, EndPointStar, GenMedianStar, Mechanism, UnrestrictedGenMedian
from limloc.objectives import OBJECTIVES, Objective
from limloc.report import Report, ReportRow
from limloc.verify.families import Family, single_facility_families, two_facility_families
from limloc.verify.ratio import INF, RatioWitness, format_ratio, measure_ratio


@dataclass(frozen=True)
class TableCell:
    row: str
    objective: Objective
    family: Family
    witness: RatioWitness

    @property
    def text(self) -> str:
        r = self.witness.ratio
        if r != INF and self.family.diverges:
            return f"{format_ratio(r)} -> inf"
        return format_ratio(r)


def _worst_cells(row: str, mech: Mechanism, families: list[Family]) -> list[TableCell]:
    cells = []
    for objective in OBJECTIVES:
        best = None
        for fam in families:
            if objective not in fam.targets:
                continue
            w = measure_ratio(mech, fam.instance, objective, fam.label)
            if best is None or w.sort_key() < best.witness.sort_key():
                best = TableCell(row, objective, fam, w)
        cells.append(best)
    return cells


def compute_tables(n: int = 10, eps: Fraction = Fraction(1, 100), k: int = 10) -> dict[str, list[TableCell]]:
    single = single_facility_families(eps, n, k)
    double = two_facility_families(eps, n)
    return {
        "median*": _worst_cells("median*", GenMedianStar(MEDIAN), single),
        "median": _worst_cells("median", UnrestrictedGenMedian(MEDIAN), [f.anywhere() for f in single]),
        "endpoint*": _worst_cells("endpoint*", EndPointStar(), double),
        "endpoint": _worst_cells("endpoint", EndPointStar(), [f.anywhere() for f in double]),
    }


def tables_report(tables: dict[str, list[TableCell]]) -> Report:
    report = Report()
    for row, cells in tables.items():
        for cell in cells:
            report.add(ReportRow.from_witness(row, cell.witness, cell.family.label))
    return report


def render_tables(tables: dict[str, list[TableCell]]) -> str:
    header = ["mechanism", *(o.cli_name for o in OBJECTIVES)]
    body = [[row, *(c.text for c in cells)] for row, cells in tables.items()]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = []
    for i, r in enumerate([header, *body]):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
        if r[0] == "median":
            lines.append("")
    return "\n".join(lines).rstrip() + "\n"
