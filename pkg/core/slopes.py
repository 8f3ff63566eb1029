# core/slopes.py
"""Modular inverses, Hirzebruch-Jung expansions, m(T(p,q)) and known Stein fillable coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import mod_inverse as _mod_inverse

from core.errors import SlopeError
from core.ring import format_rational
from data.catalog import KnotFamily, KnotTag, family_metadata


def mod_inverse(a: int, n: int) -> int:
    """The inverse of a modulo n, in [1, n-1]."""
    if n < 2:
        raise SlopeError(f"modulus must be at least 2, got {n}")
    if gcd(a, n) != 1:
        raise SlopeError(f"{a} is not invertible modulo {n}")
    return int(_mod_inverse(a, n)) % n


def _check_pair(p: int, q: int, min_q: int) -> None:
    if not p > q >= min_q or gcd(p, q) != 1:
        raise SlopeError(f"need coprime p > q >= {min_q}, got ({p}, {q})")


def cf_expand(p: int, q: int) -> list[int]:
    """p/q = c1 - 1/(c2 - 1/(...)) with every digit >= 2."""
    _check_pair(p, q, 1)
    digits = []
    while q:
        c = -(-p // q)
        digits.append(c)
        p, q = q, c * q - p
    return digits


def cf_evaluate(digits: list[int]) -> Fraction:
    if not digits:
        raise SlopeError("empty expansion")
    value = Fraction(digits[-1])
    for c in reversed(digits[:-1]):
        value = c - 1 / value
    return value


def m_torus(p: int, q: int) -> Fraction:
    p, q = max(p, q), min(p, q)
    _check_pair(p, q, 2)
    if len(cf_expand(p, q)) % 2 == 0:
        return p * q - Fraction(q, mod_inverse(p, q))
    return p * q - Fraction(p, mod_inverse(q, p))


@dataclass(frozen=True)
class SlopeInvariants:
    p: int
    q: int
    q_star: int
    p_star: int
    cf: tuple[int, ...]
    m_value: Fraction

    def identity_holds(self) -> bool:
        return self.p * self.q - self.p * self.p_star - self.q * self.q_star == -1

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "q_star": self.q_star,
            "p_star": self.p_star,
            "cf": list(self.cf),
            "m": format_rational(self.m_value),
        }


def slope_invariants(p: int, q: int) -> SlopeInvariants:
    p, q = max(p, q), min(p, q)
    _check_pair(p, q, 2)
    return SlopeInvariants(
        p=p,
        q=q,
        q_star=mod_inverse(q, p),
        p_star=mod_inverse(p, q),
        cf=tuple(cf_expand(p, q)),
        m_value=m_torus(p, q),
    )


@dataclass(frozen=True)
class SfcValue:
    kind: str  # exact | lower_bound | unknown
    value: Fraction | None
    citation: str
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": None if self.value is None else format_rational(self.value),
            "citation": self.citation,
            "note": self.note,
        }


def sfc_known(k: KnotFamily) -> SfcValue:
    if k.tag is KnotTag.UNKNOT:
        return SfcValue("exact", Fraction(-1), "sfc-torus", "equals TB(unknot) = -1")
    if k.tag is KnotTag.NEG_TORUS:
        p, q = k.params
        return SfcValue("exact", Fraction(-p * q), "sfc-torus", "negative torus knot: -pq")
    torus = k if k.tag is KnotTag.TORUS else k.torus_alias()
    if torus is not None:
        return SfcValue("exact", m_torus(*torus.params), "sfc-torus", f"m({torus.label})")
    if k.tag in (KnotTag.KNM, KnotTag.KPNM):
        from core.floer import d_knot_surgery
        from core.obstruct import owens_strle_test
        from data.catalog import alexander_closed_form

        meta = family_metadata(k)
        slope = meta.test_slopes[0]
        table = d_knot_surgery(alexander_closed_form(k), slope)
        if owens_strle_test(table.max_entry, slope).obstructed:
            return SfcValue(
                "lower_bound", Fraction(slope), "owens-strle",
                f"Sfc >= m(K) >= {slope}: S^3_{slope} bounds no negative-definite manifold",
            )
    return SfcValue("unknown", None, "open", "no value recorded")


__all__ = [
    "mod_inverse",
    "cf_expand",
    "cf_evaluate",
    "m_torus",
    "SlopeInvariants",
    "slope_invariants",
    "SfcValue",
    "sfc_known",
]
