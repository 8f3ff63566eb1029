# checks/suite.py
"""The reproduce suite: one registered check per scope tag."""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from math import gcd

from core.braid import alexander_of_closure
from core.floer import (
    check_h_nonnegative,
    d_knot_surgery,
    d_link_surgery,
    h_function,
    torsion_coefficients,
)
from core.obstruct import criterion_2g_minus_1, criterion_index, is_square, owens_strle_test
from core.errors import ConsistencyError, InvariantError
from core.ring import format_plain
from core.slopes import cf_evaluate, m_torus, sfc_known, slope_invariants
from data.catalog import (
    KnotFamily,
    KnotTag,
    LinkFamily,
    alexander_closed_form,
    braid_word,
    family_metadata,
    ln_closed_form,
    ln_conway_potential,
    shifted_from_conway,
    torus_closed_form,
)
from utils.settings import AppSettings, parse_grid

from .runner import CheckPlan, CheckRunner, StepOutcome

log = logging.getLogger(__name__)

SCOPES = (
    "alexander",
    "torsion",
    "knm-negative",
    "kpnm-negative",
    "k55-table",
    "ln-hfunction",
    "ln-obstruction",
    "two-g-minus-one",
    "slope-invariants",
)


# result labels accepted by `reproduce --scope`, each naming the steps that reproduce it
SCOPE_ALIASES = {
    "lemma3.1": ("alexander",),
    "lemma3.5": ("alexander",),
    "lemma3.3": ("knm-negative",),
    "lemma3.4": ("knm-negative",),
    "lemma3.6": ("kpnm-negative",),
    "lemma3.7": ("kpnm-negative",),
    "thm1.1": ("knm-negative", "kpnm-negative"),
    "thm1.3": ("two-g-minus-one",),
    "lemma3.10": ("ln-hfunction",),
    "lemma3.11": ("ln-obstruction",),
    "lemma3.12": ("ln-obstruction",),
    "thm1.4": ("ln-obstruction",),
    "prop1.6": ("k55-table",),
    "ex4.5": ("slope-invariants",),
}

K55_TABLE = {
    (0, 0): Fraction(-1),
    (0, 1): Fraction(-5, 3), (0, 2): Fraction(-5, 3),
    (1, 0): Fraction(-5, 3), (2, 0): Fraction(-5, 3),
    (1, 1): Fraction(-1, 3), (1, 2): Fraction(-1, 3),
    (2, 1): Fraction(-1, 3), (2, 2): Fraction(-1, 3),
}


# ---- expected values, written out case by case ----

def knm_torsion(n: int, m: int, i: int) -> int:
    if i <= n - 2:
        if n % 2:
            return m + (n - i) // 2 if i % 2 else m + (n - i - 1) // 2
        return m + (n - i - 1) // 2 if i % 2 else m + (n - i) // 2
    if i <= n + 3 * m - 2:
        return m - (i - n + 1) // 3
    return 0


def kpnm_torsion(n: int, m: int, i: int) -> int:
    if i <= n - 3:
        if n % 2 == 0:
            return m + (n - i - 2) // 2 if i % 2 == 0 else m + (n - i - 1) // 2
        return m + (n - i - 1) // 2 if i % 2 == 0 else m + (n - i - 2) // 2
    if i <= n + 3 * m - 3:
        return m - (i - n + 2) // 3
    return 0


def ln_h(n: int, s1: int, s2: int) -> int:
    a = abs(s2)
    if s1 == 0:
        if n % 2 == 0:
            value = (n - a + 1) // 2 if a % 2 else (n - a + 2) // 2
        else:
            value = (n - a + 2) // 2 if a % 2 else (n - a + 1) // 2
    elif n % 2 == 0:
        value = (n - a + 1) // 2 if a % 2 else (n - a) // 2
    else:
        value = (n - a) // 2 if a % 2 else (n - a + 1) // 2
    return max(value, 0)


# ---- context ----

def build_context(settings: AppSettings, grid_override: str | None = None) -> dict:
    """Grids from settings; a variable named in ``grid_override`` replaces it in every grid."""
    override = parse_grid(grid_override) if grid_override else {}
    grids = {}
    for key, text in (("knot_grid", settings.knot_grid), ("link_grid", settings.link_grid),
                      ("g_range", settings.g_range)):
        grid = parse_grid(text)
        grids[key] = {name: override.get(name, values) for name, values in grid.items()}
    return {
        **grids,
        "torus_limit": settings.torus_limit,
        "h_window_pad": settings.h_window_pad,
    }


def _knot_pairs(ctx: dict) -> list[tuple[int, int]]:
    grid = ctx["knot_grid"]
    return list(product(grid["n"], grid["m"]))


def _twisted(ctx: dict) -> list[KnotFamily]:
    pairs = _knot_pairs(ctx)
    return [KnotFamily.knm(n, m) for n, m in pairs] + [KnotFamily.kpnm(n, m) for n, m in pairs]


def _small_torus(limit: int) -> list[KnotFamily]:
    return [
        KnotFamily.torus(p, q)
        for p in range(3, limit + 1)
        for q in range(2, p)
        if gcd(p, q) == 1
    ]


# ---- checks ----

def check_alexander(runner: CheckRunner, ctx: dict):
    def one(k: KnotFamily) -> list[str]:
        closed = alexander_closed_form(k)
        burau = alexander_of_closure(braid_word(k))
        errs = []
        if burau != closed:
            errs.append(f"{k.label}: Burau gives {burau}, closed form {closed}")
        alias = k.torus_alias()
        if alias is not None and torus_closed_form(*alias.params) != closed:
            errs.append(f"{k.label}: closed form differs from {alias.label}")
        return errs

    count, failures = runner.fan_out(one, _twisted(ctx))
    return ctx, StepOutcome("alexander", count, failures)


def check_torsion(runner: CheckRunner, ctx: dict):
    def one(k: KnotFamily) -> list[str]:
        n, m = k.params
        expected_at = knm_torsion if k.tag is KnotTag.KNM else kpnm_torsion
        t = torsion_coefficients(alexander_closed_form(k))
        return [
            f"{k.label}: t_{i} = {t[i]}, expected {expected_at(n, m, i)}"
            for i in range(t.genus + 2)
            if t[i] != expected_at(n, m, i)
        ]

    count, failures = runner.fan_out(one, _twisted(ctx))
    return ctx, StepOutcome("torsion", count, failures)


def _negative_at_test_slope(name: str, build):
    def step(runner: CheckRunner, ctx: dict):
        def one(pair) -> list[str]:
            k = build(*pair)
            slope = family_metadata(k).test_slopes[0]
            table = d_knot_surgery(alexander_closed_form(k), slope)
            if table.all_negative():
                return []
            return [f"{k.label} at {slope}: max d = {format_plain(table.max_entry)}"]

        count, failures = runner.fan_out(one, _knot_pairs(ctx))
        return ctx, StepOutcome(name, count, failures)

    return step


def check_k55_table(runner: CheckRunner, ctx: dict):
    table = d_link_surgery(LinkFamily.two_bridge(5, 5), 3, 3)
    got = table.as_mapping()
    failures = [
        f"d{key} = {format_plain(got[key])}, expected {format_plain(want)}"
        for key, want in K55_TABLE.items()
        if got.get(key) != want
    ]
    echo = [f"d{key} = {format_plain(d)}" for key, d in sorted(got.items())]
    echo.append(f"max d = {format_plain(table.max_entry)}")
    return ctx, StepOutcome("k55-table", len(K55_TABLE), failures, echo)


def check_ln_hfunction(runner: CheckRunner, ctx: dict):
    pad = int(ctx["h_window_pad"])

    def one(n: int) -> list[str]:
        errs = []
        if shifted_from_conway(ln_conway_potential(n)) != ln_closed_form(n):
            errs.append(f"L_{n}: recursion and closed form disagree")
        grid = h_function(LinkFamily.ln(n))
        try:
            check_h_nonnegative(grid, 2 * n + pad)
        except ConsistencyError as exc:
            return errs + [f"L_{n}: {exc}"]
        for (s1, s2), value in grid.window(2 * n + pad).items():
            if value != ln_h(n, s1, s2):
                errs.append(f"L_{n}: h({s1},{s2}) = {value}, table gives {ln_h(n, s1, s2)}")
        return errs

    count, failures = runner.fan_out(one, ctx["link_grid"]["n"])
    return ctx, StepOutcome("ln-hfunction", count, failures)


def check_ln_obstruction(runner: CheckRunner, ctx: dict):
    notes: list[str] = []

    def one(n: int) -> list[str]:
        link = LinkFamily.ln(n)
        errs = []
        for p1, p2, case in link.test_points():
            table = d_link_surgery(link, p1, p2)
            if (p1, p2) == (2, 2 * n + 2):
                if is_square(n + 1):
                    notes.append(f"L_{n} ({p1},{p2}): inapplicable, n+1 = {n + 1} is a square")
                    continue
                if not owens_strle_test(table.max_entry, table.order).nonsquare_shortcut:
                    errs.append(f"L_{n} ({p1},{p2}) [{case}]: "
                                f"max d = {format_plain(table.max_entry)} not below 1/6")
            elif not table.all_negative():
                errs.append(f"L_{n} ({p1},{p2}) [{case}]: "
                            f"max d = {format_plain(table.max_entry)}")
        return errs

    count, failures = runner.fan_out(one, ctx["link_grid"]["n"])
    return ctx, StepOutcome("ln-obstruction", count, failures, sorted(notes))


def check_two_g_minus_one(runner: CheckRunner, ctx: dict):
    def sequence(g: int) -> list[str]:
        seq = [criterion_index(g, k) for k in range((g - 1) // 4 + 2)]
        errs = []
        if any(a < b for a, b in zip(seq, seq[1:])):
            errs.append(f"g={g}: i_k {seq} increases")
        if seq[-1] != 0:
            errs.append(f"g={g}: last i_k is {seq[-1]}, not 0")
        if seq[0] > g - 1:
            errs.append(f"g={g}: i_0 = {seq[0]} exceeds g-1")
        return errs

    def catalog(k: KnotFamily) -> list[str]:
        meta = family_metadata(k)
        alex = alexander_closed_form(k)
        criterion = criterion_2g_minus_1(meta.genus, torsion_coefficients(alex))
        if not criterion.holds:
            return []
        table = d_knot_surgery(alex, 2 * meta.genus - 1)
        if table.all_negative():
            return []
        return [f"{k.label}: criterion holds but max d = {format_plain(table.max_entry)}"]

    n_seq, failures = runner.fan_out(sequence, ctx["g_range"]["g"])
    knots = _twisted(ctx) + _small_torus(11)
    n_cat, more = runner.fan_out(catalog, knots)
    return ctx, StepOutcome("two-g-minus-one", n_seq + n_cat, failures + more)


def check_slope_invariants(runner: CheckRunner, ctx: dict):
    limit = int(ctx["torus_limit"])
    pairs = [(p, q) for p in range(3, limit + 1) for q in range(2, p) if gcd(p, q) == 1]

    def one(pair) -> list[str]:
        p, q = pair
        inv = slope_invariants(p, q)
        errs = []
        if not inv.identity_holds():
            errs.append(f"({p},{q}): pq - pp* - qq* != -1")
        if (q * inv.q_star) % p != 1 or (p * inv.p_star) % q != 1:
            errs.append(f"({p},{q}): inverse check failed")
        if min(inv.cf) < 2 or cf_evaluate(list(inv.cf)) != Fraction(p, q):
            errs.append(f"({p},{q}): expansion {list(inv.cf)} does not rebuild {p}/{q}")
        sfc = sfc_known(KnotFamily.torus(p, q))
        if sfc.kind != "exact" or sfc.value != inv.m_value:
            errs.append(f"T({p},{q}): Sfc {sfc.value} differs from m = {inv.m_value}")
        if sfc_known(KnotFamily.neg_torus(p, q)).value != -p * q:
            errs.append(f"T({p},{q}) mirror: Sfc is not -pq")
        return errs

    count, failures = runner.fan_out(one, pairs)
    for (p, q), want in (((3, 2), Fraction(4)), ((5, 3), Fraction(27, 2))):
        if m_torus(p, q) != want:
            failures.append(f"m(T({p},{q})) = {m_torus(p, q)}, expected {want}")
    echo = [f"m(T(3,2)) = {format_plain(m_torus(3, 2))}",
            f"m(T(5,3)) = {format_plain(m_torus(5, 3))}"]
    return ctx, StepOutcome("slope-invariants", count + 2, failures, echo)


def build_runner(workers: int = 4) -> CheckRunner:
    runner = CheckRunner(workers)
    runner.register_many({
        "alexander": check_alexander,
        "torsion": check_torsion,
        "knm-negative": _negative_at_test_slope("knm-negative", KnotFamily.knm),
        "kpnm-negative": _negative_at_test_slope("kpnm-negative", KnotFamily.kpnm),
        "k55-table": check_k55_table,
        "ln-hfunction": check_ln_hfunction,
        "ln-obstruction": check_ln_obstruction,
        "two-g-minus-one": check_two_g_minus_one,
        "slope-invariants": check_slope_invariants,
    })
    return runner


def build_plan(scope: str = "all") -> CheckPlan:
    if scope == "all":
        return CheckPlan("all", list(SCOPES))
    if scope in SCOPE_ALIASES:
        return CheckPlan(scope, list(SCOPE_ALIASES[scope]))
    if scope not in SCOPES:
        raise InvariantError(f"unknown scope {scope!r}; choose from all, {', '.join(SCOPES)}")
    return CheckPlan(scope, [scope])


def run_suite(settings: AppSettings, scope: str = "all", grid: str | None = None,
              workers: int | None = None) -> list[StepOutcome]:
    runner = build_runner(workers or settings.workers)
    ctx = runner.run_plan(build_plan(scope), build_context(settings, grid))
    return ctx["outcomes"]


__all__ = [
    "SCOPES",
    "SCOPE_ALIASES",
    "K55_TABLE",
    "knm_torsion",
    "kpnm_torsion",
    "ln_h",
    "build_context",
    "build_runner",
    "build_plan",
    "run_suite",
]
