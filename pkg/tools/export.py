# tools/export.py
"""Write a rendered ``Document`` to the file named by ``--out``; the suffix picks the format."""
from __future__ import annotations

import json
import logging
from pathlib import Path
from xml.sax.saxutils import escape

from core.errors import InvariantError

from .render import Document

log = logging.getLogger(__name__)

# Optional PDF (fallbacks gracefully)
try:
    from reportlab.lib import colors
    from reportlab.lib.pagesizes import letter
    from reportlab.lib.styles import getSampleStyleSheet
    from reportlab.platypus import Paragraph, Preformatted, SimpleDocTemplate, Spacer, Table, TableStyle
    _HAVE_RL = True
except ImportError:
    _HAVE_RL = False

SUFFIXES = (".json", ".txt", ".pdf", ".xlsx")


def _safe_name(s: str) -> str:
    s = s or "report"
    return "".join(c for c in s if c.isalnum() or c in (" ", "_", "-")).replace(" ", "_") or "report"


def write_json(doc: Document, path: Path) -> None:
    path.write_text(json.dumps(doc.payload, indent=4, ensure_ascii=False) + "\n", encoding="utf-8")


def write_text(doc: Document, path: Path) -> None:
    path.write_text(doc.text + "\n", encoding="utf-8")


def write_pdf(doc: Document, path: Path) -> None:
    if not _HAVE_RL:
        raise InvariantError("ReportLab is not installed. Install `reportlab` to enable PDF export.")
    pdf = SimpleDocTemplate(str(path), pagesize=letter)
    styles = getSampleStyleSheet()
    elements = [Paragraph(escape(doc.title), styles["Title"]), Spacer(1, 12)]
    if doc.rows:
        header = [Paragraph(f"<b>{escape(c)}</b>", styles["BodyText"]) for c in doc.columns]
        body = [[Paragraph(escape(str(v)), styles["BodyText"]) for v in row] for row in doc.rows]
        rows = [header] + body
        table = Table(rows, repeatRows=1)
        table.setStyle(TableStyle([
            ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor("#4f46e5")),
            ("TEXTCOLOR", (0, 0), (-1, 0), colors.whitesmoke),
            ("ALIGN", (0, 0), (-1, -1), "LEFT"),
            ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
            ("BOTTOMPADDING", (0, 0), (-1, 0), 12),
            ("BACKGROUND", (0, 1), (-1, -1), colors.HexColor("#f3f4f6")),
            ("GRID", (0, 0), (-1, -1), 0.5, colors.HexColor("#e5e7eb")),
        ]))
        elements += [table, Spacer(1, 12)]
    elements.append(Preformatted(doc.text, styles["Code"]))
    pdf.build(elements)


def write_xlsx(doc: Document, path: Path) -> None:
    try:
        from openpyxl import Workbook
    except ImportError as e:
        raise InvariantError("openpyxl is required. Install with 'pip install openpyxl'.") from e
    wb = Workbook()
    ws = wb.active
    ws.title = _safe_name(doc.title)[:31]
    ws.append(list(doc.columns))
    for row in doc.rows:
        ws.append(list(row))
    wb.save(str(path))


_WRITERS = {
    ".json": write_json,
    ".txt": write_text,
    ".pdf": write_pdf,
    ".xlsx": write_xlsx,
}


def resolve_target(out: str, reports_dir: Path | None = None) -> Path:
    path = Path(out).expanduser()
    if path.suffix.lower() not in _WRITERS:
        raise InvariantError(f"cannot export to {out!r}; use one of {', '.join(SUFFIXES)}")
    if reports_dir is not None and not path.is_absolute() and path.parent == Path("."):
        path = reports_dir / path
    return path


def export(doc: Document, out: str, reports_dir: Path | None = None) -> Path:
    path = resolve_target(out, reports_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    _WRITERS[path.suffix.lower()](doc, path)
    log.info("wrote %s", path)
    return path


__all__ = ["SUFFIXES", "export", "resolve_target", "write_json", "write_text", "write_pdf", "write_xlsx"]
