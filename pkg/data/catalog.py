# data/catalog.py
"""
Knot and link families with closed-form invariant data.

The closed forms are the authoritative inputs for surgery computations; the braid
words let the Burau pipeline act as an independent oracle for them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd

from core.braid import BraidWord, normalize_alexander
from core.errors import InvariantError, NotInCatalogError
from core.ring import LaurentPoly1, LaurentPoly2

_ONE = LaurentPoly1.one()


class KnotTag(str, Enum):
    KNM = "knm"
    KPNM = "kpnm"
    TORUS = "torus"
    NEG_TORUS = "negtorus"
    UNKNOT = "unknot"
    SUM = "sum"


class LinkTag(str, Enum):
    LN = "Ln"
    TWO_BRIDGE = "k2b"
    UNLINK = "unlink"


@dataclass(frozen=True)
class KnotMetadata:
    genus: int
    tb: int | None
    lspace_threshold: int | None
    stein_threshold: int | None
    test_slopes: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "tb": self.tb,
            "lspace_threshold": self.lspace_threshold,
            "stein_threshold": self.stein_threshold,
            "test_slopes": list(self.test_slopes),
        }


@dataclass(frozen=True)
class KnotFamily:
    tag: KnotTag
    params: tuple[int, ...] = ()
    summands: tuple[KnotFamily, ...] = ()
    alias: str = field(default="", compare=False)

    def __post_init__(self):
        if self.tag in (KnotTag.KNM, KnotTag.KPNM):
            n, m = self.params
            if n < 2 or m < 1:
                raise InvariantError(f"{self.tag.value} needs n >= 2 and m >= 1, got ({n}, {m})")
        elif self.tag in (KnotTag.TORUS, KnotTag.NEG_TORUS):
            p, q = sorted(self.params, reverse=True)
            if q < 2 or gcd(p, q) != 1:
                raise InvariantError(f"torus knot needs coprime p > q > 1, got ({p}, {q})")
            object.__setattr__(self, "params", (p, q))
        elif self.tag is KnotTag.SUM and len(self.summands) < 2:
            raise InvariantError("a connected sum needs at least two summands")

    # --- constructors
    @classmethod
    def knm(cls, n: int, m: int, alias: str = "") -> KnotFamily:
        return cls(KnotTag.KNM, (n, m), alias=alias)

    @classmethod
    def kpnm(cls, n: int, m: int) -> KnotFamily:
        return cls(KnotTag.KPNM, (n, m))

    @classmethod
    def torus(cls, p: int, q: int) -> KnotFamily:
        return cls(KnotTag.TORUS, (p, q))

    @classmethod
    def neg_torus(cls, p: int, q: int) -> KnotFamily:
        return cls(KnotTag.NEG_TORUS, (p, q))

    @classmethod
    def unknot(cls) -> KnotFamily:
        return cls(KnotTag.UNKNOT)

    @classmethod
    def connected_sum(cls, parts) -> KnotFamily:
        flat: list[KnotFamily] = []
        for part in parts:
            flat.extend(part.summands if part.tag is KnotTag.SUM else (part,))
        return cls(KnotTag.SUM, summands=tuple(flat))

    @property
    def label(self) -> str:
        if self.tag is KnotTag.KNM:
            return "K_{%d,%d}" % self.params
        if self.tag is KnotTag.KPNM:
            return "K'_{%d,%d}" % self.params
        if self.tag is KnotTag.TORUS:
            return "T(%d,%d)" % self.params
        if self.tag is KnotTag.NEG_TORUS:
            return "T(-%d,%d)" % self.params
        if self.tag is KnotTag.UNKNOT:
            return "unknot"
        return " # ".join(part.label for part in self.summands)

    def __str__(self) -> str:
        return f"{self.label} ({self.alias})" if self.alias else self.label

    def torus_alias(self) -> KnotFamily | None:
        """K_{2,m} is T(3,3m+2) and K'_{2,m} is T(3,3m+1)."""
        if self.tag is KnotTag.KNM and self.params[0] == 2:
            return KnotFamily.torus(3 * self.params[1] + 2, 3)
        if self.tag is KnotTag.KPNM and self.params[0] == 2:
            return KnotFamily.torus(3 * self.params[1] + 1, 3)
        return None

    @property
    def is_lspace_knot(self) -> bool:
        return self.tag in (KnotTag.KNM, KnotTag.KPNM, KnotTag.TORUS, KnotTag.UNKNOT)

    def braid_word(self) -> BraidWord | None:
        return braid_word(self)


def knm_braid(n: int, m: int) -> BraidWord:
    """s1^(-2n+4) (s1^-1 s2^-1)^(3m+2)."""
    return BraidWord.from_powers(3, [(1, -2 * n + 4)] + [(1, -1), (2, -1)] * (3 * m + 2))


def kpnm_braid(n: int, m: int) -> BraidWord:
    """s1^(-2n+4) (s1^-1 s2^-1)^(3m+1)."""
    return BraidWord.from_powers(3, [(1, -2 * n + 4)] + [(1, -1), (2, -1)] * (3 * m + 1))


def torus_braid(p: int, q: int) -> BraidWord:
    """(s1 ... s_{q-1})^p on q strands."""
    return BraidWord.from_powers(q, [(i, 1) for i in range(1, q)] * p)


def braid_word(k: KnotFamily) -> BraidWord | None:
    if k.tag is KnotTag.KNM:
        return knm_braid(*k.params)
    if k.tag is KnotTag.KPNM:
        return kpnm_braid(*k.params)
    if k.tag is KnotTag.TORUS:
        return torus_braid(*k.params)
    if k.tag is KnotTag.NEG_TORUS:
        return torus_braid(*k.params).mirror()
    if k.tag is KnotTag.UNKNOT:
        return BraidWord(2, ((1, 1),))
    words = [braid_word(part) for part in k.summands]
    if any(w is None for w in words):
        return None
    result = words[0]
    for w in words[1:]:
        result = result.connect(w)
    return result


# ---- Alexander polynomials ----

def _pair(k: int, c: int = 1) -> LaurentPoly1:
    """c * (t^k + t^-k)."""
    return LaurentPoly1({k: c}) + LaurentPoly1({-k: c})


def knm_closed_form(n: int, m: int) -> LaurentPoly1:
    poly = LaurentPoly1.constant((-1) ** (n - 1))
    for i in range(1, n):
        poly += _pair(i, (-1) ** (n - i - 1))
    for k in range(1, m + 1):
        poly += _pair(n + 3 * k - 1) - _pair(n + 3 * k - 2)
    return poly


def kpnm_closed_form(n: int, m: int) -> LaurentPoly1:
    poly = LaurentPoly1.constant((-1) ** n)
    for i in range(1, n - 1):
        poly += _pair(i, (-1) ** (n - i))
    for k in range(m):
        poly += _pair(n + 3 * k + 1) - _pair(n + 3 * k)
    return poly


def torus_closed_form(p: int, q: int) -> LaurentPoly1:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized."""
    top = (LaurentPoly1.monomial(p * q) - 1) * (LaurentPoly1.monomial(1) - 1)
    bottom = (LaurentPoly1.monomial(p) - 1) * (LaurentPoly1.monomial(q) - 1)
    return normalize_alexander(top.exact_div(bottom))


@lru_cache(maxsize=512)
def alexander_closed_form(k: KnotFamily) -> LaurentPoly1:
    if k.tag is KnotTag.KNM:
        return knm_closed_form(*k.params)
    if k.tag is KnotTag.KPNM:
        return kpnm_closed_form(*k.params)
    if k.tag in (KnotTag.TORUS, KnotTag.NEG_TORUS):
        return torus_closed_form(*k.params)
    if k.tag is KnotTag.UNKNOT:
        return _ONE
    poly = _ONE
    for part in k.summands:
        poly = poly * alexander_closed_form(part)
    return poly


def is_lspace_shaped(alex: LaurentPoly1) -> bool:
    """Nonzero coefficients are ±1 and alternate in sign, top one positive."""
    signs = [c for _, c in alex.items()]
    if any(abs(c) != 1 for c in signs):
        return False
    return all(c == (-1) ** idx for idx, c in enumerate(signs))


# ---- Metadata ----

def family_metadata(k: KnotFamily) -> KnotMetadata:
    genus = alexander_closed_form(k).degree
    if k.tag is KnotTag.KNM:
        n, m = k.params
        return KnotMetadata(n + 3 * m - 1, 2 * n + 6 * m - 3, 2 * n + 6 * m - 3,
                            9 * m + 4 * n - 8, (2 * n + 6 * m - 2,))
    if k.tag is KnotTag.KPNM:
        n, m = k.params
        return KnotMetadata(n + 3 * m - 2, 2 * n + 6 * m - 5, 2 * n + 6 * m - 5,
                            9 * m + 4 * n - 4, (2 * n + 6 * m - 4,))
    if k.tag is KnotTag.TORUS:
        p, q = k.params
        g = (p - 1) * (q - 1) // 2
        return KnotMetadata(g, p * q - p - q, 2 * g - 1, None, (2 * g, 2 * g - 1))
    if k.tag is KnotTag.NEG_TORUS:
        p, q = k.params
        return KnotMetadata((p - 1) * (q - 1) // 2, -p * q, None, -p * q)
    if k.tag is KnotTag.UNKNOT:
        return KnotMetadata(0, -1, None, -1)
    return KnotMetadata(genus, None, None, None)


# printed label for each citation key carried by a claim
CITATION_LABELS = {
    "owens-strle": "Prop 2.2",
    "negdef-cobordism": "Lemma 2.3",
    "lspace-filling-negdef": "Thm 2.1",
    "lspace-floor": "Thm 1.1",
    "two-g-minus-one": "Thm 1.3",
    "stein-threshold": "Thm 1.8",
    "link-stein-region": "Thm 1.4",
    "conditional-rational": "Thm 1.4",
    "sfc-torus": "Sfc = m(T(p,q))",
    "tb-stein": "TB bound",
    "open": "open",
}


def citation_label(key: str) -> str:
    return CITATION_LABELS.get(key, key)


# ---- Links ----

@dataclass(frozen=True)
class LinkAlexander:
    delta: LaurentPoly2
    numerators: tuple[LaurentPoly1, LaurentPoly1]


@dataclass(frozen=True)
class LinkFamily:
    tag: LinkTag
    params: tuple[int, ...] = ()
    linking_number: int = 0

    def __post_init__(self):
        if self.tag is LinkTag.LN and self.params[0] < 0:
            raise InvariantError("Ln needs n >= 0")
        if self.tag is LinkTag.TWO_BRIDGE:
            a1, a2 = self.params
            if a1 < 1 or a2 < 1 or a1 % 2 == 0 or a2 % 2 == 0:
                raise InvariantError(f"K(a1,a2) needs odd positive a1, a2, got ({a1}, {a2})")

    @classmethod
    def ln(cls, n: int) -> LinkFamily:
        return cls(LinkTag.LN, (n,))

    @classmethod
    def two_bridge(cls, a1: int, a2: int) -> LinkFamily:
        return cls(LinkTag.TWO_BRIDGE, (a1, a2))

    @classmethod
    def unlink(cls) -> LinkFamily:
        return cls(LinkTag.UNLINK)

    @property
    def label(self) -> str:
        if self.tag is LinkTag.LN:
            return "L_%d" % self.params
        if self.tag is LinkTag.TWO_BRIDGE:
            return "K(%d,%d)" % self.params
        return "unlink"

    def __str__(self) -> str:
        return self.label

    def alexander(self) -> LinkAlexander:
        if self.tag is LinkTag.LN:
            delta, first, second = link_alexander_Ln(self.params[0])
            return LinkAlexander(delta, (first, second))
        if self.tag is LinkTag.TWO_BRIDGE:
            delta, first, second = link_alexander_two_bridge(*self.params)
            return LinkAlexander(delta, (first, second))
        return LinkAlexander(LaurentPoly2(), (_ONE, _ONE))

    def lspace_floor(self) -> tuple[int, int] | None:
        """Corner of the recorded integral L-space region, where one exists."""
        if self.tag is LinkTag.LN and self.params[0] >= 1:
            return 1, 2 * self.params[0] + 1
        if self.tag is LinkTag.UNLINK:
            return 1, 1
        return None

    def is_lspace(self, p1: int, p2: int) -> bool | None:
        """True where a recorded fact says so, None when nothing is known."""
        floor = self.lspace_floor()
        if floor is not None:
            return True if p1 >= floor[0] and p2 >= floor[1] else None
        if self.tag is LinkTag.TWO_BRIDGE and self.params == (5, 5) and (p1, p2) == (3, 3):
            return True
        return None

    def test_points(self) -> list[tuple[int, int, str]]:
        """Integral slopes the catalog obstruction is stated for, with a case label."""
        if self.tag is LinkTag.LN:
            n = self.params[0]
            if n < 1:
                return []
            points = [(p1, 2 * n + 1, "p1 in {2,3,4}, p2 = 2n+1") for p1 in (2, 3, 4)]
            if 5 < 2 * n + 1:
                points.append((5, 2 * n + 1, "p1 = 5 < p2 = 2n+1"))
            points.append((2, 2 * n + 2, "p1 = 2, p2 = 2n+2"))
            return points
        if self.tag is LinkTag.TWO_BRIDGE and self.params == (5, 5):
            return [(3, 3, "(3,3)")]
        return []


def ln_closed_form(n: int) -> LaurentPoly2:
    """-(t1 - 1)(t2^(n+1) - t2^n + ... + t2^(-n+1) - t2^(-n))."""
    alternating = LaurentPoly1({j: (-1) ** (n + 1 - j) for j in range(-n, n + 2)})
    return LaurentPoly2.from_product(-(LaurentPoly1.monomial(1) - 1), alternating)


def ln_conway_potential(n: int) -> LaurentPoly2:
    """Conway potential via the two-twist skein recursion, from the split link and the Whitehead link."""
    if n < 0:
        return LaurentPoly2()
    t1 = LaurentPoly2.monomial(1, 0)
    t1_inv = LaurentPoly2.monomial(-1, 0)
    t2 = LaurentPoly2.monomial(0, 1)
    t2_inv = LaurentPoly2.monomial(0, -1)
    twist = LaurentPoly2.monomial(0, 2) + LaurentPoly2.monomial(0, -2)
    older, current = LaurentPoly2(), -((t1 - t1_inv) * (t2 - t2_inv))
    for _ in range(n):
        older, current = current, twist * current - older
    return current


def shifted_from_conway(potential: LaurentPoly2) -> LaurentPoly2:
    """Multiply by t1 t2 and substitute t_i^2 -> t_i; every exponent must be odd."""
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in potential.coeffs.items():
        if a % 2 == 0 or b % 2 == 0:
            raise InvariantError(f"exponent ({a}, {b}) is not odd; not a two-component potential")
        out[((a + 1) // 2, (b + 1) // 2)] = c
    return LaurentPoly2(out)


def two_bridge_torus_alexander(n: int) -> LaurentPoly1:
    """T(2,2n+1): t^n - t^(n-1) + ... - t^-n."""
    return LaurentPoly1({j: (-1) ** (n - j) for j in range(-n, n + 1)})


def link_alexander_Ln(n: int) -> tuple[LaurentPoly2, LaurentPoly1, LaurentPoly1]:
    if n < 0:
        raise InvariantError("Ln needs n >= 0")
    return ln_closed_form(n), _ONE, two_bridge_torus_alexander(n)


_K55 = {
    (0, -1): -1, (1, -1): 1,
    (-1, 0): -1, (0, 0): 1, (1, 0): -1, (2, 0): 1,
    (-1, 1): 1, (0, 1): -1, (1, 1): 1, (2, 1): -1,
    (0, 2): 1, (1, 2): -1,
}


def link_alexander_two_bridge(a1: int, a2: int) -> tuple[LaurentPoly2, LaurentPoly1, LaurentPoly1]:
    if (a1, a2) != (5, 5):
        raise NotInCatalogError(f"K({a1},{a2}) is not in the catalog; only K(5,5) is tabulated")
    return LaurentPoly2(_K55), _ONE, _ONE


__all__ = [
    "KnotTag",
    "LinkTag",
    "KnotFamily",
    "KnotMetadata",
    "LinkFamily",
    "LinkAlexander",
    "knm_braid",
    "kpnm_braid",
    "torus_braid",
    "braid_word",
    "knm_closed_form",
    "kpnm_closed_form",
    "torus_closed_form",
    "alexander_closed_form",
    "is_lspace_shaped",
    "family_metadata",
    "CITATION_LABELS",
    "citation_label",
    "ln_closed_form",
    "ln_conway_potential",
    "shifted_from_conway",
    "two_bridge_torus_alexander",
    "link_alexander_Ln",
    "link_alexander_two_bridge",
]
