# data/subjects.py
"""Subject strings used on the command line, e.g. `knm:3,1`, `sum:torus:2,3+torus:2,5`, `Ln:2`."""
from __future__ import annotations

import re

from core.errors import InvariantError, NotInCatalogError, SubjectSyntaxError
from data.catalog import KnotFamily, LinkFamily, link_alexander_two_bridge

_PARAMS_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")

_KNOT_ARITY = {"knm": 2, "kpnm": 2, "torus": 2, "negtorus": 2, "pretzel": 3}
_LINK_ARITY = {"ln": 1, "k2b": 2}


def _params(kind: str, body: str, arity: int) -> tuple[int, ...]:
    if not _PARAMS_RE.match(body):
        raise SubjectSyntaxError(f"{kind}: expected {arity} comma-separated integers, got {body!r}")
    values = tuple(int(v) for v in body.split(","))
    if len(values) != arity:
        raise SubjectSyntaxError(f"{kind}: expected {arity} parameters, got {len(values)}")
    return values


def _pretzel(values: tuple[int, ...]) -> KnotFamily:
    a, b, c = values
    if (a, b) != (-2, 3) or c < 5 or c % 2 == 0:
        raise NotInCatalogError(
            f"pretzel:{a},{b},{c} is not in the catalog; only P(-2,3,2n+1) with n >= 2 is"
        )
    n = (c - 1) // 2
    return KnotFamily.knm(n, 1, alias=f"P(-2,3,{c})")


def parse_knot(text: str) -> KnotFamily:
    raw = text.strip()
    low = raw.lower()
    if low in ("unknot", "torus:unknot"):
        return KnotFamily.unknot()
    if low.startswith("sum:"):
        parts = [p for p in raw[4:].split("+")]
        if len(parts) < 2 or any(not p.strip() for p in parts):
            raise SubjectSyntaxError(f"sum: expected at least two '+'-separated knots, got {raw!r}")
        return KnotFamily.connected_sum(parse_knot(p) for p in parts)
    kind, sep, body = low.partition(":")
    if not sep or kind not in _KNOT_ARITY:
        raise NotInCatalogError(f"unknown knot subject {raw!r}")
    values = _params(kind, body, _KNOT_ARITY[kind])
    try:
        if kind == "knm":
            return KnotFamily.knm(*values)
        if kind == "kpnm":
            return KnotFamily.kpnm(*values)
        if kind == "torus":
            return KnotFamily.torus(*values)
        if kind == "negtorus":
            return KnotFamily.neg_torus(*values)
        return _pretzel(values)
    except NotInCatalogError:
        raise
    except InvariantError as e:
        raise SubjectSyntaxError(str(e)) from e


def parse_link(text: str) -> LinkFamily:
    raw = text.strip()
    low = raw.lower()
    if low == "unlink":
        return LinkFamily.unlink()
    kind, sep, body = low.partition(":")
    if not sep or kind not in _LINK_ARITY:
        raise NotInCatalogError(f"unknown link subject {raw!r}")
    values = _params(kind, body, _LINK_ARITY[kind])
    try:
        if kind == "ln":
            return LinkFamily.ln(*values)
        link = LinkFamily.two_bridge(*values)
    except InvariantError as e:
        raise SubjectSyntaxError(str(e)) from e
    # unsupported two-bridge links are refused here, before any computation
    link_alexander_two_bridge(*values)
    return link


def is_link_subject(text: str) -> bool:
    low = text.strip().lower()
    return low == "unlink" or low.partition(":")[0] in _LINK_ARITY


def parse_subject(text: str) -> KnotFamily | LinkFamily:
    return parse_link(text) if is_link_subject(text) else parse_knot(text)


def subject_string(subject: KnotFamily | LinkFamily) -> str:
    """Inverse of parse_subject, used for report headers and golden files."""
    if isinstance(subject, LinkFamily):
        if not subject.params:
            return subject.tag.value
        return f"{subject.tag.value}:" + ",".join(str(v) for v in subject.params)
    if subject.summands:
        return "sum:" + "+".join(subject_string(p) for p in subject.summands)
    if not subject.params:
        return subject.tag.value
    return f"{subject.tag.value}:" + ",".join(str(v) for v in subject.params)


__all__ = ["parse_knot", "parse_link", "parse_subject", "is_link_subject", "subject_string"]
