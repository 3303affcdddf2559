"""
Report Service - bit-stable rendering of every record type
JSON lines and CSV emission with fixed significant digits, the matching
parsers, plain-text tables and the asymptotic sandwich table
"""

import csv
import io
import json
import logging
import math
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Type, TypeVar

from pydantic import BaseModel

from config import settings
from schemas.patterns import CycleOrder, ForbiddenSpec, PathOrder
from schemas.records import ClaimVerdict, ExtremalRecord, SandwichRow
from services.spectral import mu_snk_closed, mu_snk_plus, sandwich_references

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


def round_significant(x: float, digits: Optional[int] = None) -> float:
    digits = settings.SIGNIFICANT_DIGITS if digits is None else digits
    if not math.isfinite(x):
        return x
    return float(format(x, f".{digits}g"))


def _rounded(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return round_significant(value)
    if isinstance(value, dict):
        return {key: _rounded(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_rounded(item) for item in value]
    return value


def _encode_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    return json.dumps(value, sort_keys=True)


def _decode_cell(value: str, annotation: Any) -> Any:
    if annotation is str:
        return value
    if value == "":
        return None
    if annotation == Optional[str]:
        return value
    if value[0] in "[{":
        return json.loads(value)
    return value


def reference_graph(record: ExtremalRecord) -> Optional[Tuple[str, float]]:
    """
    Closed-form reference for h_{2k+2}, h_{2k+3}, g_{2k+1}, g_{2k+2} and
    f_{2k+2}, when the record's spec is one of those families
    """
    patterns = list(record.spec.patterns)
    n = record.n
    plus: Optional[bool] = None
    k = 0
    if len(patterns) == 1 and isinstance(patterns[0], PathOrder):
        # P_{2k+2} against S_{n,k}, P_{2k+3} against S_{n,k}^+
        l = patterns[0].l
        plus, k = l % 2 == 1, (l - 2) // 2
    elif len(patterns) == 1 and isinstance(patterns[0], CycleOrder) and patterns[0].l % 2 == 0:
        plus, k = True, (patterns[0].l - 2) // 2
    elif (
        len(patterns) == 2
        and all(isinstance(p, CycleOrder) for p in patterns)
        and patterns[1].l == patterns[0].l + 1
    ):
        # {C_{2k+1}, C_{2k+2}} against S_{n,k}, {C_{2k+2}, C_{2k+3}} against S_{n,k}^+
        l = patterns[0].l
        plus, k = l % 2 == 0, (l - 1) // 2

    if plus is None or k < 1:
        return None
    if plus and n > k + 1:
        return f"S+({n},{k})", mu_snk_plus(n, k)
    if not plus and n > k:
        return f"S({n},{k})", mu_snk_closed(n, k)
    return None


def format_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Left-aligned fixed-width text table"""
    cells = [[_table_cell(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    lines.extend("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() for row in cells)
    return "\n".join(lines) + "\n"


def _table_cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(round_significant(value), ".12g")
    if isinstance(value, ForbiddenSpec):
        return value.token()
    return str(value)


class ReportService:
    """
    Rendering and parsing of records in the table, csv and json formats
    """

    # ------------------------------------------------------------------
    # JSON lines
    # ------------------------------------------------------------------

    def to_json_line(self, record: BaseModel) -> str:
        return json.dumps(_rounded(record.model_dump(mode="json")), sort_keys=True)

    def from_json_line(self, model: Type[Model], line: str) -> Model:
        return model.model_validate_json(line)

    # ------------------------------------------------------------------
    # CSV
    # ------------------------------------------------------------------

    def to_csv(self, records: Sequence[BaseModel]) -> str:
        """
        One header row of field names, then one row per record; nested
        values are JSON cells with sorted keys
        """
        buffer = io.StringIO()
        if not records:
            return ""
        fields = list(type(records[0]).model_fields)
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(fields)
        for record in records:
            data = _rounded(record.model_dump(mode="json"))
            writer.writerow([_encode_cell(data[name]) for name in fields])
        return buffer.getvalue()

    def from_csv(self, model: Type[Model], text: str) -> List[Model]:
        reader = csv.DictReader(io.StringIO(text))
        annotations = {name: info.annotation for name, info in model.model_fields.items()}
        records = []
        for row in reader:
            data = {name: _decode_cell(value, annotations.get(name)) for name, value in row.items()}
            records.append(model.model_validate({k: v for k, v in data.items() if v is not None}))
        return records

    # ------------------------------------------------------------------
    # Tables
    # ------------------------------------------------------------------

    def table_report(self, records: Sequence[BaseModel]) -> str:
        """
        Text table for a homogeneous list of records; extremal records are
        compared with the closed-form spectral radius of S_{n,k} or S_{n,k}^+
        """
        if not records:
            return ""
        first = records[0]
        if isinstance(first, ExtremalRecord):
            return self._extremal_table(records)
        if isinstance(first, ClaimVerdict):
            return "".join(self._verdict_table(v) for v in records)
        if isinstance(first, SandwichRow):
            headers = ["n", "k", "family", "value", "lower", "upper", "distance", "below_upper", "shrinking"]
            return format_table(headers, [
                (r.n, r.k, r.family, r.value, r.lower_reference, r.upper_reference,
                 r.distance, r.below_upper, r.shrinking)
                for r in records
            ])
        fields = list(type(first).model_fields)
        return format_table(fields, [
            [getattr(r, f) if not isinstance(getattr(r, f), (list, dict, BaseModel)) else self._compact(getattr(r, f))
             for f in fields]
            for r in records
        ])

    def _compact(self, value: Any) -> str:
        if isinstance(value, BaseModel):
            value = value.model_dump(mode="json")
        if isinstance(value, list):
            value = [v.model_dump(mode="json") if isinstance(v, BaseModel) else v for v in value]
        return json.dumps(_rounded(value), sort_keys=True)

    def _extremal_table(self, records: Sequence[ExtremalRecord]) -> str:
        headers = ["n", "forbidden", "connected", "max_mu", "reference", "ref_mu", "delta", "witnesses", "first_witness"]
        rows = []
        for r in records:
            ref = reference_graph(r)
            rows.append((
                r.n, r.spec, r.connected_only, r.max_mu,
                ref[0] if ref else None,
                ref[1] if ref else None,
                r.max_mu - ref[1] if ref else None,
                len(r.witnesses), r.witnesses[0] if r.witnesses else None,
            ))
        return format_table(headers, rows)

    def _verdict_table(self, verdict: ClaimVerdict) -> str:
        headers = ["n", "threshold", "applicable", "candidates", "above", "exceptions", "escaped", "outcome", "witness"]
        rows = [
            (p.n, p.threshold, p.applicable, p.candidates, p.above_threshold,
             p.exceptions, p.escaped, p.outcome, p.witness.graph6 if p.witness else None)
            for p in verdict.points
        ]
        title = (
            f"{verdict.claim} k={verdict.k} n={verdict.n_from}..{verdict.n_to}"
            f"{' (exhaustive)' if verdict.exhaustive else ''}{' (connected)' if verdict.connected_only else ''}: {verdict.outcome}\n"
        )
        notes = "".join(f"note: {note}\n" for note in verdict.notes)
        return title + format_table(headers, rows) + notes

    # ------------------------------------------------------------------
    # Format dispatch
    # ------------------------------------------------------------------

    def render(self, records: Sequence[BaseModel], output_format: str) -> str:
        if output_format == "json":
            return "".join(self.to_json_line(r) + "\n" for r in records)
        if output_format == "csv":
            return self.to_csv(records)
        return self.table_report(records)

    # ------------------------------------------------------------------
    # Asymptotic sandwich
    # ------------------------------------------------------------------

    def asymptotic_sandwich(
        self,
        ns: Sequence[int] = (500, 1000, 2000),
        ks: Sequence[int] = (1, 2, 3, 4),
    ) -> List[SandwichRow]:
        """
        mu(S_{n,k}) and mu(S_{n,k}^+) against (k-1)/2 + sqrt(kn) and
        k/2 + sqrt(kn); the distance to the lower reference should shrink
        as n grows
        """
        rows: List[SandwichRow] = []
        for k in ks:
            for family in ("snk", "snk-plus"):
                previous: Optional[float] = None
                for n in sorted(ns):
                    value = mu_snk_plus(n, k) if family == "snk-plus" else mu_snk_closed(n, k)
                    lower, upper = sandwich_references(n, k)
                    distance = value - lower
                    rows.append(SandwichRow(
                        n=n, k=k, family=family, value=value,
                        lower_reference=lower, upper_reference=upper,
                        distance=distance,
                        below_upper=value < upper,
                        shrinking=None if previous is None else abs(distance) < abs(previous),
                    ))
                    previous = distance
        logger.info(f"sandwich table: {len(rows)} rows for n={list(ns)} k={list(ks)}")
        return rows


# Global service instance
report_service = ReportService()
