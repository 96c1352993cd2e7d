"""Markdown rendering of reports with jinja2 templates."""
from pathlib import Path
from typing import Dict, List, Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from ..harmonic_analysis import HodgeReport

templates_dir = Path(__file__).parent / "templates"

_env = Environment(
    loader=FileSystemLoader(str(templates_dir)),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def hodge_diamond(report: HodgeReport) -> Dict:
    """Rows k = 0..2n, columns p - q = -n..n; empty cells where no (p, q) exists."""
    n = report.dimension // 2
    columns = list(range(-n, n + 1))
    rows = []
    for k in range(report.dimension + 1):
        cells = []
        for shift in columns:
            if (k + shift) % 2:
                cells.append("")
                continue
            p, q = (k + shift) // 2, (k - shift) // 2
            cells.append(str(report.h[f"{p},{q}"]) if 0 <= p <= n and 0 <= q <= n else "")
        rows.append({"k": k, "b": report.b[k], "cells": cells})
    return {"columns": columns, "rows": rows}


def verdict_rows(report: HodgeReport) -> List[Dict]:
    rows = []
    for k in range(report.dimension + 1):
        pure_full = report.pure_full[k]
        rows.append({
            "k": k,
            "decomposition": report.decomposition[k]["holds"],
            "pure": pure_full["pure"],
            "full": pure_full["full"],
            "hlc": report.hlc.get(f"k{k}", "" if k else True),
            "non_hlc": report.non_hlc_degrees[k],
            "gap": report.spectral_gaps["d"][k] or "-",
        })
    return rows


def render_report(report: HodgeReport) -> str:
    return _env.get_template("report.md.j2").render(
        report=report, diamond=hodge_diamond(report), verdicts=verdict_rows(report),
    )


def render_table(title: str, rows: Sequence[Dict], notes: Sequence[str] = ()) -> str:
    """A titled markdown table whose columns are the keys of the first row."""
    columns = list(rows[0]) if rows else []
    return _env.get_template("table.md.j2").render(title=title, columns=columns, rows=rows, notes=list(notes))
