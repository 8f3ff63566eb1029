# core/obstruct.py
"""
Negative-definiteness obstruction, slope windows and the fillability verdict.

A verdict combines three kinds of facts: d-invariant evidence computed here,
catalog thresholds (L-space floors, Stein thresholds, TB), and the rule that a
negative-definite cobordism carries non-bounding downward in slope.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, prod

from sympy import factorint

from core.errors import ConsistencyError, InvariantError, SlopeError
from core.floer import d_knot_surgery, d_link_from_grid, h_function, torsion_coefficients
from core.floer import TorsionCoefficients
from core.ring import format_plain, format_rational
from data.catalog import (
    KnotFamily,
    KnotTag,
    LinkFamily,
    LinkTag,
    alexander_closed_form,
    citation_label,
    family_metadata,
)

log = logging.getLogger(__name__)

_SIXTH = Fraction(1, 6)


def format_slope(value: Fraction) -> str:
    return format_plain(value)


# ---- Square-free parts and the d-invariant bound ----

@dataclass(frozen=True)
class SquareFreeDecomposition:
    n: int
    z: int
    w: int


def square_free_decompose(n: int) -> SquareFreeDecomposition:
    if n < 1:
        raise InvariantError(f"need a positive integer, got {n}")
    factors = factorint(n)
    z = prod(int(p) for p, e in factors.items() if e % 2)
    w = prod(int(p) ** (e // 2) for p, e in factors.items())
    return SquareFreeDecomposition(n, z, w)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class OwensStrleResult:
    max_d: Fraction
    order: int
    decomposition: SquareFreeDecomposition
    threshold: Fraction
    obstructed: bool
    nonsquare_shortcut: bool

    def to_dict(self) -> dict:
        return {
            "max_d": format_rational(self.max_d),
            "order": self.order,
            "z": self.decomposition.z,
            "w": self.decomposition.w,
            "threshold": format_rational(self.threshold),
            "obstructed": self.obstructed,
            "nonsquare_shortcut": self.nonsquare_shortcut,
        }


def owens_strle_test(max_d: Fraction, order: int) -> OwensStrleResult:
    """A negative-definite filling forces max d >= (1 - 1/z)/4 (z odd) or 1/4 (z even)."""
    dec = square_free_decompose(order)
    if dec.z % 2:
        threshold = (1 - Fraction(1, dec.z)) / 4
    else:
        threshold = Fraction(1, 4)
    max_d = Fraction(max_d)
    return OwensStrleResult(
        max_d=max_d,
        order=order,
        decomposition=dec,
        threshold=threshold,
        obstructed=max_d < threshold,
        nonsquare_shortcut=not is_square(order) and max_d < _SIXTH,
    )


# ---- Slope intervals ----

@dataclass(frozen=True)
class SlopeInterval:
    """Interval of rational slopes; None stands for an infinite end (always open)."""

    lo: Fraction | None
    hi: Fraction | None
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo is None:
            object.__setattr__(self, "lo_closed", False)
        else:
            object.__setattr__(self, "lo", Fraction(self.lo))
        if self.hi is None:
            object.__setattr__(self, "hi_closed", False)
        else:
            object.__setattr__(self, "hi", Fraction(self.hi))

    @classmethod
    def below(cls, bound, closed: bool = False) -> SlopeInterval:
        return cls(None, bound, False, closed)

    @classmethod
    def above(cls, bound, closed: bool = False) -> SlopeInterval:
        return cls(bound, None, closed, False)

    @property
    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        return self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed))

    def contains(self, r) -> bool:
        r = Fraction(r)
        if self.is_empty:
            return False
        if self.lo is not None and (r < self.lo or (r == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (r > self.hi or (r == self.hi and not self.hi_closed)):
            return False
        return True

    def intersects(self, other: SlopeInterval) -> bool:
        if self.is_empty or other.is_empty:
            return False
        lo, lo_closed = _max_lower(self, other)
        hi, hi_closed = _min_upper(self, other)
        return not SlopeInterval(lo, hi, lo_closed, hi_closed).is_empty

    def describe(self) -> str:
        if self.is_empty:
            return "empty"
        left = "(-inf" if self.lo is None else ("[" if self.lo_closed else "(") + format_slope(self.lo)
        right = "inf)" if self.hi is None else format_slope(self.hi) + ("]" if self.hi_closed else ")")
        return f"{left}, {right}"

    def to_dict(self) -> dict:
        return {
            "lo": None if self.lo is None else format_rational(self.lo),
            "hi": None if self.hi is None else format_rational(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
            "text": self.describe(),
        }


def _max_lower(a: SlopeInterval, b: SlopeInterval) -> tuple[Fraction | None, bool]:
    if a.lo is None:
        return b.lo, b.lo_closed
    if b.lo is None or a.lo > b.lo:
        return a.lo, a.lo_closed
    if b.lo > a.lo:
        return b.lo, b.lo_closed
    return a.lo, a.lo_closed and b.lo_closed


def _min_upper(a: SlopeInterval, b: SlopeInterval) -> tuple[Fraction | None, bool]:
    if a.hi is None:
        return b.hi, b.hi_closed
    if b.hi is None or a.hi < b.hi:
        return a.hi, a.hi_closed
    if b.hi < a.hi:
        return b.hi, b.hi_closed
    return a.hi, a.hi_closed and b.hi_closed


def _lower_key(iv: SlopeInterval):
    # -inf first; at equal values a closed end comes first
    return (0, 0, 0) if iv.lo is None else (1, iv.lo, 0 if iv.lo_closed else 1)


def merge_intervals(intervals) -> list[SlopeInterval]:
    pending = sorted((iv for iv in intervals if not iv.is_empty), key=_lower_key)
    merged: list[SlopeInterval] = []
    for iv in pending:
        if merged:
            last = merged[-1]
            touches = (
                last.hi is None
                or iv.lo is None
                or iv.lo < last.hi
                or (iv.lo == last.hi and (last.hi_closed or iv.lo_closed))
            )
            if touches:
                if last.hi is None or iv.hi is None:
                    hi, hi_closed = None, False
                elif iv.hi > last.hi:
                    hi, hi_closed = iv.hi, iv.hi_closed
                elif iv.hi < last.hi:
                    hi, hi_closed = last.hi, last.hi_closed
                else:
                    hi, hi_closed = last.hi, last.hi_closed or iv.hi_closed
                merged[-1] = SlopeInterval(last.lo, hi, last.lo_closed, hi_closed)
                continue
        merged.append(iv)
    return merged


def complement(intervals) -> list[SlopeInterval]:
    merged = merge_intervals(intervals)
    if not merged:
        return [SlopeInterval(None, None)]
    gaps: list[SlopeInterval] = []
    first = merged[0]
    if first.lo is not None:
        gaps.append(SlopeInterval(None, first.lo, False, not first.lo_closed))
    for a, b in zip(merged, merged[1:]):
        gap = SlopeInterval(a.hi, b.lo, not a.hi_closed, not b.lo_closed)
        if not gap.is_empty:
            gaps.append(gap)
    last = merged[-1]
    if last.hi is not None:
        gaps.append(SlopeInterval(last.hi, None, not last.hi_closed, False))
    return gaps


def extend_downward(failing_slope, lspace_floor) -> SlopeInterval:
    """Non-bounding at a slope carries down through every smaller positive slope;
    the conclusion is only drawn where surgeries are known L-spaces."""
    failing = Fraction(failing_slope)
    floor = Fraction(lspace_floor)
    if failing <= 0:
        raise SlopeError("the failing slope must be positive")
    if floor <= 0:
        raise SlopeError("the L-space floor must be positive")
    return SlopeInterval(floor, failing)


# ---- The (2g-1) criterion ----

@dataclass(frozen=True)
class CriterionResult:
    genus: int
    i_sequence: tuple[int, ...]
    observed: tuple[int, ...]
    holds: bool

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "i_sequence": list(self.i_sequence),
            "required": [k + 1 for k in range(len(self.i_sequence))],
            "observed": list(self.observed),
            "holds": self.holds,
        }


def criterion_index(g: int, k: int) -> int:
    """Least i >= 0 with 2i > 2g-1 - sqrt((8k+1)(2g-1)), decided in integers."""
    radicand = (8 * k + 1) * (2 * g - 1)
    i = 0
    while True:
        gap = 2 * g - 1 - 2 * i
        if gap < 0 or gap * gap < radicand:
            return i
        i += 1


def criterion_2g_minus_1(g: int, t: TorsionCoefficients) -> CriterionResult:
    if g < 1:
        raise InvariantError("the criterion needs genus >= 1")
    seq = tuple(criterion_index(g, k) for k in range((g - 1) // 4 + 2))
    observed = tuple(t[i] for i in seq)
    holds = all(v >= k + 1 for k, v in enumerate(observed))
    return CriterionResult(g, seq, observed, holds)


# ---- Reports ----

@dataclass(frozen=True)
class Claim:
    region: str
    citations: tuple[str, ...]
    note: str = ""
    interval: SlopeInterval | None = None
    conditional: bool = False

    @property
    def labels(self) -> list[str]:
        return [citation_label(c) for c in self.citations]

    def describe(self) -> str:
        tags = " ".join(f"[{label}]" for label in self.labels)
        note = f" - {self.note}" if self.note else ""
        cond = " (conditional)" if self.conditional else ""
        return f"{self.region}{cond}{note} {tags}"

    def to_dict(self) -> dict:
        out = {
            "region": self.region,
            "citations": list(self.citations),
            "labels": self.labels,
            "note": self.note,
            "conditional": self.conditional,
        }
        if self.interval is not None:
            out["interval"] = self.interval.to_dict()
        return out


@dataclass
class FillabilityReport:
    subject: str
    nonfillable: list[Claim] = field(default_factory=list)
    stein: list[Claim] = field(default_factory=list)
    unknown: list[Claim] = field(default_factory=list)
    evidence: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    classification: str | None = None

    @property
    def obstructed(self) -> bool:
        return any(not c.conditional for c in self.nonfillable)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "nonfillable": [c.to_dict() for c in self.nonfillable],
            "stein": [c.to_dict() for c in self.stein],
            "unknown": [c.to_dict() for c in self.unknown],
            "evidence": self.evidence,
            "notes": list(self.notes),
            "classification": self.classification,
        }


def _interval_claim(interval: SlopeInterval, citations, note: str = "") -> Claim:
    return Claim(interval.describe(), tuple(citations), note, interval)


def _knot_test_evidence(alex, slope: int) -> tuple[dict, bool]:
    table = d_knot_surgery(alex, slope)
    result = owens_strle_test(table.max_entry, slope)
    evidence = {
        "kind": "d-table",
        "slope": slope,
        "max_d": format_rational(table.max_entry),
        "argmax": table.argmax(),
        "all_negative": table.all_negative(),
        **{k: v for k, v in result.to_dict().items() if k != "max_d"},
    }
    return evidence, result.obstructed


def knot_verdict(k: KnotFamily, slope=None) -> FillabilityReport:
    from core.slopes import sfc_known

    meta = family_metadata(k)
    report = FillabilityReport(subject=str(k))

    if meta.tb is not None:
        report.stein.append(_interval_claim(
            SlopeInterval.below(meta.tb), ("tb-stein",), f"below TB = {meta.tb}"))
    if meta.stein_threshold is not None:
        report.stein.append(_interval_claim(
            SlopeInterval.above(meta.stein_threshold, closed=True), ("stein-threshold",),
            f"quoted threshold {meta.stein_threshold}"))
    if k.tag is KnotTag.TORUS:
        sfc = sfc_known(k)
        report.stein.append(_interval_claim(
            SlopeInterval.above(sfc.value, closed=True), ("sfc-torus",),
            f"Sfc = {format_slope(sfc.value)}"))

    if meta.lspace_threshold is None:
        report.notes.append(
            f"no L-space surgery floor is recorded for {k.label}; obstruction section omitted")
    else:
        _knot_obstruction(k, meta, report)

    for bad in report.nonfillable:
        for good in report.stein:
            if bad.interval and good.interval and bad.interval.intersects(good.interval):
                raise ConsistencyError(
                    f"{k.label}: non-fillable {bad.region} meets Stein window {good.region}")

    windows = [c.interval for c in report.nonfillable + report.stein if c.interval]
    for gap in complement(windows):
        report.unknown.append(_interval_claim(gap, ("open",), "undetermined"))

    if slope is not None:
        report.classification = classify(report, slope)
    return report


def _knot_obstruction(k: KnotFamily, meta, report: FillabilityReport) -> None:
    alex = alexander_closed_form(k)
    floor = meta.lspace_threshold
    failing = None
    for test in meta.test_slopes:
        evidence, obstructed = _knot_test_evidence(alex, test)
        report.evidence.append(evidence)
        if obstructed:
            failing = test
            break
    citations = ["owens-strle", "negdef-cobordism", "lspace-floor", "lspace-filling-negdef"]
    if meta.genus >= 1:
        criterion = criterion_2g_minus_1(meta.genus, torsion_coefficients(alex))
        report.evidence.append({"kind": "two-g-minus-one", **criterion.to_dict()})
        if failing is None and criterion.holds and floor == 2 * meta.genus - 1:
            failing = floor
            citations = ["two-g-minus-one", "lspace-floor", "lspace-filling-negdef"]
    window = None if failing is None else extend_downward(failing, floor)
    note = f"no negative-definite filling at slope {failing}"
    if k.tag is KnotTag.TORUS:
        from core.slopes import m_torus

        # every filling slope of T(p,q) is at least m(T(p,q)), and [2g-1, m) holds none
        m = m_torus(*k.params)
        if m > floor and (failing is None or m > failing):
            window = SlopeInterval(floor, m, True, False)
            citations = ["sfc-torus", "lspace-floor", "lspace-filling-negdef"]
            note = f"below Sfc = m = {format_slope(m)}"
    if window is None:
        report.notes.append(
            f"obstruction did not fire at slopes {list(meta.test_slopes)}; nothing concluded")
    elif not window.is_empty:
        report.nonfillable.append(_interval_claim(window, citations, note))

    # quoted Stein thresholds are cross-checked against the same obstruction
    thr = meta.stein_threshold
    if thr is not None and thr >= floor and thr > 0:
        evidence, obstructed = _knot_test_evidence(alex, thr)
        evidence["kind"] = "stein-threshold-check"
        report.evidence.append(evidence)
        if obstructed:
            msg = (f"conflict: the d-invariant obstruction also fires at the quoted Stein "
                   f"threshold {thr} (max d = {evidence['max_d']})")
            log.warning("%s: %s", k.label, msg)
            report.notes.append(msg)


def classify(report: FillabilityReport, slope) -> str:
    r = Fraction(slope)
    for label, claims in (("nonfillable", report.nonfillable), ("stein", report.stein),
                          ("unknown", report.unknown)):
        for claim in claims:
            if claim.interval is not None and claim.interval.contains(r):
                return f"slope {format_slope(r)} is {label}: {claim.describe()}"
    return f"slope {format_slope(r)} is not covered"


def link_verdict(link: LinkFamily, p1: int, p2: int) -> FillabilityReport:
    if p1 < 1 or p2 < 1:
        raise SlopeError("link surgery coefficients must be positive integers")
    report = FillabilityReport(subject=f"{link.label} ({p1},{p2})")
    grid = h_function(link)
    table = d_link_from_grid(grid, p1, p2)
    result = owens_strle_test(table.max_entry, table.order)
    report.evidence.append({
        "kind": "d-table",
        "slopes": [p1, p2],
        "max_d": format_rational(table.max_entry),
        "argmax": [list(k) for k in table.argmax()],
        "all_negative": table.all_negative(),
        **{k: v for k, v in result.to_dict().items() if k != "max_d"},
    })

    if link.tag is LinkTag.LN and (p1, p2) == (2, 2 * link.params[0] + 2):
        n = link.params[0]
        if is_square(n + 1):
            report.notes.append(f"criterion inapplicable: n+1 = {n + 1} is a square")

    lspace = link.is_lspace(p1, p2)
    if result.obstructed and lspace:
        report.nonfillable.append(Claim(
            f"({p1}, {p2})", ("owens-strle", "lspace-filling-negdef"),
            f"max d = {format_plain(table.max_entry)} < {format_plain(result.threshold)}"))
        floor = link.lspace_floor()
        if floor is not None and floor[0] <= p1 and floor[1] <= p2:
            report.nonfillable.append(Claim(
                f"[{floor[0]}, {p1}] x [{floor[1]}, {p2}]",
                ("negdef-cobordism", "conditional-rational"),
                "rational (r1, r2) here, provided the surgery is an L-space",
                conditional=True))
    elif result.obstructed:
        report.notes.append(
            "no negative-definite filling, but the L-space property is not recorded here; "
            "fillability undetermined")
    else:
        report.notes.append("obstruction did not fire; nothing concluded")

    if link.tag is LinkTag.LN:
        n = link.params[0]
        report.stein.append(Claim(f"r1 > 0 and r2 > {4 * n + 4}", ("link-stein-region",)))
    elif link.tag is LinkTag.TWO_BRIDGE:
        report.stein.append(Claim(
            "r1, r2 sufficiently large", ("link-stein-region",), "no explicit bound"))
    report.unknown.append(Claim("all other (r1, r2)", ("open",)))
    return report


def verdict(subject, slope=None) -> FillabilityReport:
    """Report for a knot family, or for a (link, p1, p2) triple."""
    if isinstance(subject, tuple):
        link, p1, p2 = subject
        return link_verdict(link, p1, p2)
    if isinstance(subject, LinkFamily):
        raise InvariantError("a link verdict needs surgery coefficients (link, p1, p2)")
    return knot_verdict(subject, slope)


def link_sweep(link: LinkFamily) -> list[FillabilityReport]:
    """Reports at every catalog test point of the link."""
    points = link.test_points()
    if not points:
        raise InvariantError(f"{link.label} has no recorded test slopes; pass --p1 and --p2")
    reports = []
    for p1, p2, case in points:
        report = link_verdict(link, p1, p2)
        report.notes.insert(0, f"case: {case}")
        reports.append(report)
    return reports


__all__ = [
    "SquareFreeDecomposition",
    "square_free_decompose",
    "is_square",
    "OwensStrleResult",
    "owens_strle_test",
    "SlopeInterval",
    "merge_intervals",
    "complement",
    "extend_downward",
    "CriterionResult",
    "criterion_index",
    "criterion_2g_minus_1",
    "Claim",
    "FillabilityReport",
    "format_slope",
    "knot_verdict",
    "link_verdict",
    "classify",
    "verdict",
    "link_sweep",
]
