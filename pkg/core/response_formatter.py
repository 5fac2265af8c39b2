"""
Symmetric Orbit Polynomials Response Formatter

This module renders command results (orbit tables, weak-order graphs, basis
expansions and verification reports) as JSON, CSV, aligned text or DOT.
Tabular output goes through pandas so CSV and pretty text share one layout.
"""

import json
import logging
from enum import Enum
from typing import Dict, List, Optional, Sequence

import pandas as pd

from config.settings import AppConfig
from core.error_handler import create_input_error
from core.reports import ExpansionReport, GraphExport, OrbitTable, SuiteReport

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class FormatStyle(Enum):
    """Output format styles"""
    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"
    DOT = "dot"


def _join_terms(terms: Optional[Dict[str, str]]) -> str:
    if terms is None:
        return ""
    return "; ".join(f"{w}: {c}" for w, c in terms.items())


class ResponseFormatter:
    """
    Formatter for command output
    """

    def __init__(self, default_style: FormatStyle = FormatStyle.PRETTY):
        """
        Initialize the response formatter

        Args:
            default_style: Style used when a call does not name one
        """
        self.default_style = default_style
        logger.debug(f"ResponseFormatter initialized with style: {default_style.value}")

    def _style(self, style: Optional[FormatStyle], allowed: Sequence[FormatStyle]) -> FormatStyle:
        style = style or self.default_style
        if style not in allowed:
            raise create_input_error(
                f"format {style.value!r} is not available here",
                suggestions=[f"Use one of: {', '.join(s.value for s in allowed)}"],
            )
        return style

    def table_frame(self, table: OrbitTable) -> pd.DataFrame:
        """One row per orbit in table order"""
        records = []
        for row in table.rows:
            record = {
                "involution": row.involution,
                "one_line": row.one_line,
                "length": row.length,
                "orbit_rank": row.orbit_rank,
                "upsilon": row.upsilon,
            }
            if row.upsilon_k is not None:
                record["upsilon_k"] = row.upsilon_k
            record["schubert_expansion"] = _join_terms(row.schubert_expansion)
            if row.grothendieck_expansion is not None:
                record["grothendieck_expansion"] = _join_terms(row.grothendieck_expansion)
            records.append(record)
        return pd.DataFrame.from_records(records)

    def format_table(self, table: OrbitTable, style: Optional[FormatStyle] = None) -> str:
        """
        Render an orbit table

        Args:
            table: Orbit table report
            style: JSON, CSV or PRETTY

        Returns:
            Rendered text
        """
        style = self._style(style, [FormatStyle.JSON, FormatStyle.CSV, FormatStyle.PRETTY])
        if style == FormatStyle.JSON:
            return table.model_dump_json(indent=2, exclude_none=True)
        frame = self.table_frame(table)
        if style == FormatStyle.CSV:
            return frame.to_csv(index=False)
        header = f"{table.pair}{table.size} ({table.theory}): {len(table.rows)} orbits"
        return f"{header}\n{frame.to_string(index=False)}\n"

    def format_graph(self, export: GraphExport, dot: str, style: Optional[FormatStyle] = None) -> str:
        """DOT source, the JSON edge list, or the edge list as CSV/text"""
        style = self._style(style, list(FormatStyle))
        if style == FormatStyle.DOT:
            return dot
        if style == FormatStyle.JSON:
            return export.model_dump_json(indent=2)
        frame = pd.DataFrame.from_records([edge.model_dump() for edge in export.edges],
                                          columns=["src", "dst", "label", "style"])
        if style == FormatStyle.CSV:
            return frame.to_csv(index=False)
        return f"{export.pair}{export.n}: {len(export.nodes)} orbits\n{frame.to_string(index=False)}\n"

    def format_expansion(self, report: ExpansionReport, style: Optional[FormatStyle] = None) -> str:
        style = self._style(style, [FormatStyle.JSON, FormatStyle.CSV, FormatStyle.PRETTY])
        if style == FormatStyle.JSON:
            return report.model_dump_json(indent=2, exclude_none=True)
        if style == FormatStyle.CSV:
            frame = pd.DataFrame.from_records(
                [{"permutation": w, "coefficient": c} for w, c in report.terms.items()],
                columns=["permutation", "coefficient"],
            )
            return frame.to_csv(index=False)
        return "\n".join(report.lines) + "\n"

    def format_suites(self, reports: List[SuiteReport], style: Optional[FormatStyle] = None) -> str:
        """
        Render verification reports

        JSON keeps every detail; CSV and PRETTY summarize one suite per row and
        print the first counterexample of each failing suite.
        """
        style = self._style(style, [FormatStyle.JSON, FormatStyle.CSV, FormatStyle.PRETTY])
        if style == FormatStyle.JSON:
            if len(reports) == 1:
                return reports[0].model_dump_json(indent=2)
            return json.dumps([r.model_dump(mode="json") for r in reports], indent=2)
        frame = pd.DataFrame.from_records([{
            "target": r.target,
            "passed": r.passed,
            "checks": r.checks,
            "failures": len(r.failures),
            "duration_seconds": r.duration_seconds,
        } for r in reports])
        if style == FormatStyle.CSV:
            return frame.to_csv(index=False)
        lines = [frame.to_string(index=False)]
        for report in reports:
            status = "✅" if report.passed else "❌"
            lines.append(f"{status} {report.target}")
            if report.failures:
                lines.append(f"   first failure: {report.failures[0]}")
                counterexample = report.details.get("counterexample")
                if counterexample:
                    lines.append(f"   counterexample: {json.dumps(counterexample, sort_keys=True, default=str)}")
        return "\n".join(lines) + "\n"


_default_formatter: Optional[ResponseFormatter] = None


def get_response_formatter() -> ResponseFormatter:
    """Shared formatter instance"""
    global _default_formatter
    if _default_formatter is None:
        _default_formatter = ResponseFormatter()
    return _default_formatter
