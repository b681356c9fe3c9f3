"""Dimension bounds and reference-table synthesis for the moduli strata.

For a semigroup of genus g and type t the stratum dimension lies between
2g-2+t minus the positive-weight part of T1 and 2g-2+t; for genus at
most 7 the lower bound is attained, which is what verify_reference
checks row by row against the embedded table.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from importlib import resources

from .cotangent import t1_graded, t2_graded
from .curve import toric_ideal
from .errors import GenusTooSmall, UnknownLabel
from .grading import GradedDims
from .semigroup import NumericalSemigroup, from_generators, type_lambda


@dataclass(frozen=True)
class ReferenceRow:
    name: str
    generators: tuple[int, ...]
    genus: int
    d: int
    t: int
    base: str


class ReferenceTable:
    """The embedded table of all 88 semigroups of genus 1 through 7.

    The printed source lists N(7)_10 with the same generators as
    N(7)_6; the corrected generators 4,6,13,15 (gap sequence
    1,2,3,5,7,9,11) are used here.
    """

    def __init__(self, rows):
        self.rows = list(rows)
        self.by_generators = {r.generators: r for r in self.rows}

    @classmethod
    def load(cls) -> "ReferenceTable":
        text = (
            resources.files("wsatlas.data")
            .joinpath("reference_table.csv")
            .read_text()
        )
        rows = []
        for rec in csv.DictReader(text.splitlines()):
            rows.append(
                ReferenceRow(
                    rec["name"],
                    tuple(int(x) for x in rec["generators"].split()),
                    int(rec["genus"]),
                    int(rec["d"]),
                    int(rec["t"]),
                    rec["base"],
                )
            )
        table = cls(rows)
        counts = {}
        for r in rows:
            counts[r.genus] = counts.get(r.genus, 0) + 1
        assert sum(v for g, v in counts.items() if g <= 6) == 49
        assert counts.get(7) == 39
        return table

    def lookup(self, generators) -> ReferenceRow:
        key = tuple(generators)
        if key not in self.by_generators:
            raise UnknownLabel(f"no reference row for generators {key}")
        return self.by_generators[key]


_TABLE: ReferenceTable | None = None


def reference_table() -> ReferenceTable:
    global _TABLE
    if _TABLE is None:
        _TABLE = ReferenceTable.load()
    return _TABLE


def dimension_bounds(g: int, t: int, t1_plus: int) -> tuple[int, int]:
    """Lower and upper bounds for the stratum dimension, genus > 1."""
    if g < 2:
        raise GenusTooSmall("the bounds require genus at least 2")
    upper = 2 * g - 2 + t
    return upper - t1_plus, upper


def smoothing_component_dimension(g: int, t: int) -> int:
    """mu + t - 1 with mu = 2 delta = 2g for monomial curves."""
    if g < 1:
        raise GenusTooSmall("positive genus required")
    return 2 * g + t - 1


@dataclass
class CurveRecord:
    label: str | None
    generators: tuple[int, ...]
    genus: int
    type_resolution: int
    type_lambda: int
    t1: GradedDims | None
    t1_plus: int
    t1_minus: int
    t2_total: int | None
    d_lower: int | None
    d_upper: int | None
    d_reference: int | None
    base_label: str | None
    t2_status: str = "computed"

    @property
    def type(self) -> int:
        return self.type_lambda

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "generators": list(self.generators),
            "genus": self.genus,
            "type": self.type_lambda,
            "type_resolution": self.type_resolution,
            "t1": self.t1.to_json() if self.t1 is not None else None,
            "t1_plus": self.t1_plus,
            "t1_minus": self.t1_minus,
            "t2_total": self.t2_total,
            "t2_status": self.t2_status,
            "d_lower": self.d_lower,
            "d_upper": self.d_upper,
            "d_reference": self.d_reference,
            "base": self.base_label,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CurveRecord":
        t1 = doc.get("t1")
        return cls(
            doc.get("label"),
            tuple(doc["generators"]),
            doc["genus"],
            doc["type_resolution"],
            doc["type"],
            GradedDims({int(k): v for k, v in t1.items()}) if t1 else GradedDims({}),
            doc["t1_plus"],
            doc["t1_minus"],
            doc.get("t2_total"),
            doc.get("d_lower"),
            doc.get("d_upper"),
            doc.get("d_reference"),
            doc.get("base"),
            doc.get("t2_status", "computed"),
        )


def build_record(S: NumericalSemigroup | tuple, include_t2: bool = False,
                 p: int | None = None) -> CurveRecord:
    """Full pipeline: curve, resolution type, graded T1, bounds, table join."""
    if not isinstance(S, NumericalSemigroup):
        S = from_generators(S)
    C = toric_ideal(S, p=p)
    res = C.resolution()
    t_res = res.rank_last()
    t_lam = type_lambda(S)
    t1 = t1_graded(C)
    plus, minus = t1.positive_part(), t1.negative_part()
    g = S.genus
    if g >= 2:
        d_lower, d_upper = dimension_bounds(g, t_lam, plus)
    else:
        # genus 1: certified by the explicit cusp computation instead
        d_lower = d_upper = minus - 1
    t2_total = None
    status = "skipped"
    if include_t2:
        t2_total = t2_graded(C).total
        status = "computed"
    label = None
    d_ref = None
    base = None
    try:
        row = reference_table().lookup(S.generators)
        label, d_ref, base = row.name, row.d, row.base
    except UnknownLabel:
        pass
    return CurveRecord(
        label, S.generators, g, t_res, t_lam, t1, plus, minus,
        t2_total, d_lower, d_upper, d_ref, base, status,
    )


@dataclass
class DiffReport:
    mismatches: list
    checked: int
    flagged: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        lines = [f"{self.checked - len(self.mismatches)}/{self.checked} rows match"]
        for m in self.mismatches:
            lines.append("MISMATCH " + m)
        for f in self.flagged:
            lines.append("note " + f)
        return "\n".join(lines)


# rows where the printed source disagrees with itself or with forced
# arithmetic; the embedded table stores the corrected values and the
# (t, d) comparison is enforced against those
FLAGGED_ROWS = {
    "N(6)_22": "published type-6 side remark belongs to N(6)_23",
    "N(7)_39": "published side remark calls this the type 8 curve; the table says 7",
    "N(5)_3": "printed t=1; the Apery set forces t=2 (codim-2 CM row)",
    "N(7)_21": "printed t=2; the semigroup is symmetric, so t=1",
    "N(7)_25": "printed t=2; the pseudo-Frobenius gaps 4,7,11 force t=3",
    "N(7)_10": "printed generators duplicate N(7)_6; corrected to 4,6,13,15",
    "N(7)_11": "printed d=10 lies below the proven lower bound; corrected to 12",
}


def verify_reference(records) -> DiffReport:
    """Compare computed (type, d_lower) to the embedded table rows."""
    table = reference_table()
    mismatches = []
    flagged = []
    checked = 0
    for rec in records:
        try:
            row = table.lookup(rec.generators)
        except UnknownLabel:
            mismatches.append(
                f"{rec.generators}: not a reference row"
            )
            continue
        checked += 1
        if rec.type_lambda != row.t or rec.type_resolution != row.t:
            mismatches.append(
                f"{row.name}: type computed {rec.type_resolution}/{rec.type_lambda}"
                f" vs table {row.t}"
            )
        if rec.d_lower != row.d:
            mismatches.append(
                f"{row.name}: d computed {rec.d_lower} vs table {row.d}"
            )
        if row.name in FLAGGED_ROWS:
            flagged.append(f"{row.name}: {FLAGGED_ROWS[row.name]}")
    return DiffReport(mismatches, checked, flagged)
