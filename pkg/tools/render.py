# tools/render.py
"""
Text and JSON-ready renderings of command results.

Every renderer returns a ``Document``: the text block printed for
``--format text``, the payload printed for ``--format json``, and flat
table rows used by the PDF and spreadsheet exports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from core.floer import DInvariantTable, LinkDInvariantTable
from core.obstruct import FillabilityReport
from core.ring import LaurentPoly1, format_plain, format_rational
from core.slopes import SfcValue, SlopeInvariants
from data.catalog import citation_label


@dataclass
class Document:
    title: str
    text: str
    payload: dict
    columns: list[str] = field(default_factory=list)
    rows: list[list[str]] = field(default_factory=list)


def _block(title: str, lines: list[str]) -> str:
    return "\n".join([title, *lines])


# ---- alex ----

def render_alexander(subject: str, closed: LaurentPoly1, burau: LaurentPoly1 | None) -> Document:
    agree = None if burau is None else burau == closed
    lines = [f"closed form: {closed}"]
    if burau is not None:
        lines.append(f"burau:       {burau}")
        lines.append("AGREE" if agree else "DISAGREE")
    else:
        lines.append("no braid word recorded")
    payload = {
        "subject": subject,
        "closed_form": str(closed),
        "burau": None if burau is None else str(burau),
        "agree": agree,
    }
    rows = [["closed form", str(closed)]]
    if burau is not None:
        rows += [["burau", str(burau)], ["agree", str(agree)]]
    return Document(f"Alexander polynomial of {subject}", _block(subject, lines), payload,
                    ["source", "polynomial"], rows)


# ---- dinv ----

def render_knot_table(subject: str, table: DInvariantTable) -> Document:
    top = table.max_entry
    lines = [f"d(S^3_{table.p}(K), i), |H_1| = {table.order}"]
    for label, d in table.rows():
        flag = "  <- max" if d == top else ""
        lines.append(f"  {label:>4}  {format_plain(d)}{flag}")
    lines.append(f"max d = {format_plain(top)}; all negative: {table.all_negative()}")
    payload = {
        "subject": subject,
        **table.to_dict(),
        "max": format_rational(top),
        "argmax": table.argmax(),
        "all_negative": table.all_negative(),
    }
    rows = [[label, format_plain(d)] for label, d in table.rows()]
    return Document(f"{subject}: d-invariants at {table.p}", _block(subject, lines), payload,
                    ["i", "d"], rows)


def render_link_table(subject: str, table: LinkDInvariantTable) -> Document:
    top = table.max_entry
    lines = [f"d(S^3_{{{table.p1},{table.p2}}}(L), (i1,i2)), |H_1| = {table.order}"]
    for label, d in table.rows():
        flag = "  <- max" if d == top else ""
        lines.append(f"  {label:>8}  {format_plain(d)}{flag}")
    lines.append(f"max d = {format_plain(top)}; all negative: {table.all_negative()}")
    payload = {
        "subject": subject,
        **table.to_dict(),
        "max": format_rational(top),
        "argmax": [list(k) for k in table.argmax()],
        "all_negative": table.all_negative(),
    }
    rows = [[label, format_plain(d)] for label, d in table.rows()]
    return Document(f"{subject}: d-invariants at ({table.p1},{table.p2})",
                    _block(subject, lines), payload, ["(i1,i2)", "d"], rows)


# ---- check ----

def _evidence_line(ev: dict) -> str:
    where = ev.get("slope", ev.get("slopes"))
    kind = ev.get("kind")
    if kind == "two-g-minus-one":
        return (f"(2g-1) criterion, g = {ev['genus']}: i_k = {ev['i_sequence']}, "
                f"t at i_k = {ev['observed']}, holds: {ev['holds']}")
    verdict = "obstructed" if ev.get("obstructed") else "not obstructed"
    return (f"{kind} at {where}: max d = {format_plain(Fraction(ev['max_d']))}, "
            f"threshold {format_plain(Fraction(ev['threshold']))} "
            f"(z = {ev['z']}), {verdict}")


def _report_lines(report: FillabilityReport) -> list[str]:
    lines = []
    for label, claims in (("nonfillable", report.nonfillable), ("stein", report.stein),
                          ("unknown", report.unknown)):
        lines.append(f"{label}:")
        lines += [f"  {c.describe()}" for c in claims] or ["  none"]
    if report.evidence:
        lines.append("evidence:")
        lines += [f"  {_evidence_line(ev)}" for ev in report.evidence]
    if report.notes:
        lines.append("notes:")
        lines += [f"  {note}" for note in report.notes]
    if report.classification:
        lines.append(report.classification)
    return lines


def _report_rows(report: FillabilityReport) -> list[list[str]]:
    rows = []
    for label, claims in (("nonfillable", report.nonfillable), ("stein", report.stein),
                          ("unknown", report.unknown)):
        for c in claims:
            rows.append([report.subject, label, c.region, "; ".join(c.labels), c.note])
    return rows


def render_report(report: FillabilityReport) -> Document:
    return Document(
        f"Fillability report: {report.subject}",
        _block(report.subject, _report_lines(report)),
        report.to_dict(),
        ["subject", "verdict", "region", "citations", "note"],
        _report_rows(report),
    )


def render_reports(subject: str, reports: list[FillabilityReport]) -> Document:
    blocks = [_block(r.subject, _report_lines(r)) for r in reports]
    rows = [row for r in reports for row in _report_rows(r)]
    return Document(
        f"Fillability reports: {subject}",
        "\n\n".join(blocks),
        {"subject": subject, "reports": [r.to_dict() for r in reports]},
        ["subject", "verdict", "region", "citations", "note"],
        rows,
    )


# ---- slopes ----

def render_slopes(subject: str, inv: SlopeInvariants | None, sfc: SfcValue) -> Document:
    """Torus knots get the full invariant list; other knots only their Sfc entry."""
    sfc_text = "unknown" if sfc.value is None else format_plain(sfc.value)
    sfc_line = f"Sfc = {sfc_text} ({sfc.kind}) [{citation_label(sfc.citation)}]"
    if sfc.note:
        sfc_line += f" - {sfc.note}"
    lines: list[str] = []
    rows: list[list[str]] = []
    payload: dict = {"subject": subject}
    if inv is not None:
        lines = [
            f"q* = {inv.q_star}  (q q* = 1 mod p)",
            f"p* = {inv.p_star}  (p p* = 1 mod q)",
            f"cf = {list(inv.cf)}",
            f"m  = {format_plain(inv.m_value)}",
        ]
        rows = [
            ["q*", str(inv.q_star)],
            ["p*", str(inv.p_star)],
            ["cf", " ".join(map(str, inv.cf))],
            ["m", format_plain(inv.m_value)],
        ]
        payload.update(inv.to_dict())
    lines.append(sfc_line)
    if inv is not None:
        lines.append(f"pq - pp* - qq* = -1: {inv.identity_holds()}")
    rows.append(["Sfc", sfc_text])
    payload["sfc"] = sfc.to_dict()
    return Document(f"Slope invariants of {subject}", _block(subject, lines), payload,
                    ["name", "value"], rows)


# ---- hfunc ----

def render_hfunction(subject: str, window: dict[tuple[int, int], int], radius: int) -> Document:
    span = range(-radius, radius + 1)
    width = max(3, len(str(radius)) + 2)
    header = "s2\\s1".rjust(6) + "".join(str(s1).rjust(width) for s1 in span)
    lines = [f"h(s1, s2) on [-{radius}, {radius}]^2", header]
    for s2 in reversed(span):
        lines.append(str(s2).rjust(6) + "".join(str(window[(s1, s2)]).rjust(width) for s1 in span))
    payload = {
        "subject": subject,
        "radius": radius,
        "entries": [{"s1": s1, "s2": s2, "h": h} for (s1, s2), h in sorted(window.items())],
    }
    rows = [[str(s1), str(s2), str(h)] for (s1, s2), h in sorted(window.items())]
    return Document(f"h-function of {subject}", _block(subject, lines), payload,
                    ["s1", "s2", "h"], rows)


# ---- reproduce ----

def render_suite(outcomes) -> Document:
    lines = []
    for o in outcomes:
        lines.append(f"{o.status}  {o.name:<18} {o.checked} checked")
        lines += [f"      {msg}" for msg in o.echo]
        lines += [f"    ! {msg}" for msg in o.failures]
    passed = sum(o.passed for o in outcomes)
    lines.append(f"{passed}/{len(outcomes)} checks passed")
    payload = {
        "outcomes": [o.to_dict() for o in outcomes],
        "passed": passed == len(outcomes),
    }
    rows = [[o.name, o.status, str(o.checked), str(len(o.failures))] for o in outcomes]
    return Document("Reproduce summary", "\n".join(lines), payload,
                    ["check", "status", "checked", "failures"], rows)


__all__ = [
    "Document",
    "render_alexander",
    "render_knot_table",
    "render_link_table",
    "render_report",
    "render_reports",
    "render_slopes",
    "render_hfunction",
    "render_suite",
]
