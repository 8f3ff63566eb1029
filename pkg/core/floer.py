# core/floer.py
"""
Torsion coefficients, lens-space d-invariants, d-invariant tables of knot and
two-component link surgeries, and the H/h lattice functions of L-space links.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from core.errors import ConsistencyError, InvariantError, LinkingNumberError, NotSymmetricError
from core.ring import LaurentPoly1, LaurentPoly2, format_rational
from data.catalog import LinkFamily

log = logging.getLogger(__name__)

_QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class TorsionCoefficients:
    values: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> int:
        i = abs(int(i))
        return self.values[i] if i < len(self.values) else 0

    def is_non_increasing(self) -> bool:
        return all(a >= b for a, b in zip(self.values, self.values[1:]))


def _check_alexander(alex: LaurentPoly1) -> None:
    if not alex.is_symmetric():
        raise NotSymmetricError(f"({alex}) is not symmetric under t -> t^-1")
    if alex.at_one() != 1:
        raise NotSymmetricError(f"({alex}) is not normalized: value {alex.at_one()} at t=1")


def torsion_coefficients(alex: LaurentPoly1, strict: bool = True) -> TorsionCoefficients:
    """t_i = sum_{j>0} j * a_{i+j} for 0 <= i <= g.

    With ``strict`` the L-space knot shape is enforced: the list must be non-increasing.
    """
    _check_alexander(alex)
    g = alex.degree
    values = tuple(
        sum(j * alex.coeff(i + j) for j in range(1, g - i + 1)) for i in range(g + 1)
    )
    t = TorsionCoefficients(values)
    if strict and (not t.is_non_increasing() or min(values) < 0):
        raise InvariantError(
            f"torsion coefficients {list(values)} are not those of an L-space knot"
        )
    return t


def d_lens(p: int, i: int) -> Fraction:
    """d-invariant of p-surgery on the unknot in Spin^c structure i."""
    if p < 1:
        raise InvariantError("surgery coefficient must be a positive integer")
    if not 0 <= i <= p:
        raise InvariantError(f"Spin^c label {i} outside [0, {p}]")
    return Fraction((p - 2 * i) ** 2, 4 * p) - _QUARTER


@dataclass(frozen=True)
class DInvariantTable:
    """d-invariants of S^3_p(K), indexed by i in [0, p-1]."""

    p: int
    entries: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return self.p

    def entry(self, i: int) -> Fraction:
        return self.entries[i]

    @property
    def max_entry(self) -> Fraction:
        return max(self.entries)

    def argmax(self) -> list[int]:
        top = self.max_entry
        return [i for i, d in enumerate(self.entries) if d == top]

    def all_negative(self) -> bool:
        return all(d < 0 for d in self.entries)

    def is_symmetric(self) -> bool:
        return all(self.entries[i] == self.entries[self.p - i] for i in range(1, self.p))

    def rows(self) -> list[tuple[str, Fraction]]:
        return [(str(i), d) for i, d in enumerate(self.entries)]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "entries": [{"i": i, "d": format_rational(d)} for i, d in enumerate(self.entries)],
        }


def d_knot_surgery(alex: LaurentPoly1, p: int) -> DInvariantTable:
    if p < 1:
        raise InvariantError("surgery coefficient must be a positive integer")
    t = torsion_coefficients(alex)
    entries = []
    for i in range(p):
        rep = min(i, p - i)
        entries.append(d_lens(p, rep) - 2 * t[rep])
    return DInvariantTable(p, tuple(entries))


def component_tail(numerator: LaurentPoly1, s: int) -> int:
    """sum_{j >= s+1} of the coefficients of numerator / (1 - t^-1), in closed form."""
    return sum(c * (k - s) for k, c in numerator.coeffs.items() if k > s)


def unlink_H(s1: int, s2: int) -> int:
    return max(0, -s1) + max(0, -s2)


class HFunctionGrid:
    """H and h of a two-component L-space link with linking number zero."""

    def __init__(self, delta: LaurentPoly2, numerators: tuple[LaurentPoly1, LaurentPoly1]):
        self.delta = delta
        self.numerators = numerators
        self._terms = list(delta.coeffs.items())
        self._H = lru_cache(maxsize=None)(self._compute_H)

    def _compute_H(self, s1: int, s2: int) -> int:
        tails = component_tail(self.numerators[0], s1) + component_tail(self.numerators[1], s2)
        corner = sum(c for (j1, j2), c in self._terms if j1 >= s1 + 1 and j2 >= s2 + 1)
        return tails - corner

    def H(self, s1: int, s2: int) -> int:
        return self._H(int(s1), int(s2))

    def h(self, s1: int, s2: int) -> int:
        return self.H(s1, s2) - unlink_H(s1, s2)

    @property
    def support_radius(self) -> int:
        """Beyond this radius in both coordinates every tail sum vanishes."""
        lo1, hi1, lo2, hi2 = self.delta.bounds()
        spans = [abs(lo1), abs(hi1), abs(lo2), abs(hi2)]
        for num in self.numerators:
            if num:
                spans += [abs(num.degree), abs(num.low_degree)]
        return max(spans)

    def window(self, radius: int) -> dict[tuple[int, int], int]:
        return {
            (s1, s2): self.h(s1, s2)
            for s1 in range(-radius, radius + 1)
            for s2 in range(-radius, radius + 1)
        }


def h_function(link: LinkFamily) -> HFunctionGrid:
    if link.linking_number != 0:
        raise LinkingNumberError(f"{link} has linking number {link.linking_number}; need 0")
    data = link.alexander()
    return HFunctionGrid(data.delta, data.numerators)


@dataclass(frozen=True)
class LinkDInvariantTable:
    """d-invariants of S^3_{p1,p2}(L), row-major over (i1, i2)."""

    p1: int
    p2: int
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return self.p1 * self.p2

    def entry(self, i1: int, i2: int) -> Fraction:
        return self.entries[i1][i2]

    def as_mapping(self) -> Mapping[tuple[int, int], Fraction]:
        return {(i1, i2): d for i1, row in enumerate(self.entries) for i2, d in enumerate(row)}

    @property
    def max_entry(self) -> Fraction:
        return max(max(row) for row in self.entries)

    def argmax(self) -> list[tuple[int, int]]:
        top = self.max_entry
        return [k for k, d in self.as_mapping().items() if d == top]

    def all_negative(self) -> bool:
        return all(d < 0 for row in self.entries for d in row)

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i1][i2] == self.entries[-i1 % self.p1][-i2 % self.p2]
            for i1 in range(self.p1)
            for i2 in range(self.p2)
        )

    def rows(self) -> list[tuple[str, Fraction]]:
        return [(f"({i1},{i2})", d) for (i1, i2), d in self.as_mapping().items()]

    def to_dict(self) -> dict:
        return {
            "p1": self.p1,
            "p2": self.p2,
            "entries": [
                {"i1": i1, "i2": i2, "d": format_rational(d)}
                for (i1, i2), d in self.as_mapping().items()
            ],
        }


def d_link_from_grid(grid: HFunctionGrid, p1: int, p2: int) -> LinkDInvariantTable:
    if p1 < 1 or p2 < 1:
        raise InvariantError("surgery coefficients must be positive integers")
    rows = []
    for i1 in range(p1):
        row = []
        for i2 in range(p2):
            h = max(grid.h(s1, s2) for s1 in (i1, i1 - p1) for s2 in (i2, i2 - p2))
            row.append(d_lens(p1, i1) + d_lens(p2, i2) - 2 * h)
        rows.append(tuple(row))
    table = LinkDInvariantTable(p1, p2, tuple(rows))
    log.debug("link table (%d,%d): max %s", p1, p2, table.max_entry)
    return table


def d_link_surgery(link: LinkFamily, p1: int, p2: int) -> LinkDInvariantTable:
    return d_link_from_grid(h_function(link), p1, p2)


def check_h_nonnegative(grid: HFunctionGrid, radius: int) -> None:
    bad = {k: v for k, v in grid.window(radius).items() if v < 0}
    if bad:
        raise ConsistencyError(f"negative h values at {sorted(bad)[:5]}")


__all__ = [
    "TorsionCoefficients",
    "torsion_coefficients",
    "d_lens",
    "DInvariantTable",
    "d_knot_surgery",
    "component_tail",
    "unlink_H",
    "HFunctionGrid",
    "h_function",
    "LinkDInvariantTable",
    "d_link_from_grid",
    "d_link_surgery",
    "check_h_nonnegative",
]
