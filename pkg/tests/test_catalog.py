import pytest

from core.errors import InvariantError, NotInCatalogError
from core.ring import LaurentPoly1, LaurentPoly2, parse_poly1
from data.catalog import (
    KnotFamily,
    KnotTag,
    LinkFamily,
    alexander_closed_form,
    family_metadata,
    is_lspace_shaped,
    knm_closed_form,
    kpnm_closed_form,
    link_alexander_two_bridge,
    ln_closed_form,
    ln_conway_potential,
    shifted_from_conway,
    torus_closed_form,
    two_bridge_torus_alexander,
)


def test_knm_closed_form_at_three_one():
    assert knm_closed_form(3, 1) == parse_poly1(
        "t^5 - t^4 + t^2 - t + 1 - t^-1 + t^-2 - t^-4 + t^-5"
    )


@pytest.mark.parametrize("m", range(1, 6))
def test_twisted_families_at_n_two_are_torus_knots(m):
    assert knm_closed_form(2, m) == torus_closed_form(3 * m + 2, 3)
    assert kpnm_closed_form(2, m) == torus_closed_form(3 * m + 1, 3)
    assert KnotFamily.knm(2, m).torus_alias() == KnotFamily.torus(3 * m + 2, 3)


@pytest.mark.parametrize("n, m", [(2, 1), (3, 2), (4, 1), (7, 3), (8, 5)])
def test_closed_forms_are_normalized_lspace_shaped(n, m):
    for poly, genus in ((knm_closed_form(n, m), n + 3 * m - 1),
                        (kpnm_closed_form(n, m), n + 3 * m - 2)):
        assert poly.is_symmetric()
        assert poly.at_one() == 1
        assert poly.degree == genus
        assert is_lspace_shaped(poly)


def test_torus_knot_polynomials():
    assert torus_closed_form(3, 2) == parse_poly1("t - 1 + t^-1")
    assert torus_closed_form(5, 2) == two_bridge_torus_alexander(2)
    assert not is_lspace_shaped(parse_poly1("2*t - 3 + 2*t^-1"))


def test_family_validation_and_ordering():
    assert KnotFamily.torus(2, 3).params == (3, 2)
    with pytest.raises(InvariantError):
        KnotFamily.knm(1, 1)
    with pytest.raises(InvariantError):
        KnotFamily.torus(4, 2)
    with pytest.raises(InvariantError):
        KnotFamily(KnotTag.SUM, summands=(KnotFamily.unknot(),))


def test_connected_sum_flattens_and_multiplies():
    trefoil = KnotFamily.torus(3, 2)
    nested = KnotFamily.connected_sum([trefoil, KnotFamily.connected_sum([trefoil, trefoil])])
    assert len(nested.summands) == 3
    assert alexander_closed_form(nested) == torus_closed_form(3, 2) ** 3
    assert nested.label == "T(3,2) # T(3,2) # T(3,2)"
    assert not nested.is_lspace_knot


def test_metadata_for_knm_three_one():
    meta = family_metadata(KnotFamily.knm(3, 1))
    assert (meta.genus, meta.tb, meta.lspace_threshold, meta.stein_threshold) == (5, 9, 9, 13)
    assert meta.test_slopes == (10,)


def test_metadata_for_kpnm_and_torus():
    meta = family_metadata(KnotFamily.kpnm(3, 1))
    assert (meta.genus, meta.tb, meta.stein_threshold, meta.test_slopes) == (4, 7, 17, (8,))
    meta = family_metadata(KnotFamily.torus(3, 2))
    assert (meta.genus, meta.tb, meta.lspace_threshold, meta.test_slopes) == (1, 1, 1, (2, 1))
    meta = family_metadata(KnotFamily.neg_torus(3, 5))
    assert (meta.tb, meta.lspace_threshold, meta.stein_threshold) == (-15, None, -15)
    assert family_metadata(KnotFamily.unknot()).to_dict()["tb"] == -1


def test_ln_recursion_matches_closed_form():
    for n in range(0, 7):
        assert shifted_from_conway(ln_conway_potential(n)) == ln_closed_form(n)


def test_ln_closed_form_small_case():
    # -(t1 - 1)(t2^2 - t2 + 1 - t2^-1)
    first = LaurentPoly1({1: -1, 0: 1})
    second = parse_poly1("t^2 - t + 1 - t^-1")
    assert ln_closed_form(1) == LaurentPoly2.from_product(first, second)


def test_shift_requires_odd_exponents():
    with pytest.raises(InvariantError):
        shifted_from_conway(LaurentPoly2({(2, 1): 1}))


def test_link_alexander_data():
    data = LinkFamily.ln(2).alexander()
    assert data.numerators[0] == LaurentPoly1.one()
    assert data.numerators[1] == two_bridge_torus_alexander(2)
    delta, first, second = link_alexander_two_bridge(5, 5)
    assert len(delta) == 12 and first == second == LaurentPoly1.one()
    assert delta.at_one() == 0
    with pytest.raises(NotInCatalogError):
        link_alexander_two_bridge(3, 3)
    assert not LinkFamily.unlink().alexander().delta


def test_link_lspace_facts():
    ln2 = LinkFamily.ln(2)
    assert ln2.lspace_floor() == (1, 5)
    assert ln2.is_lspace(4, 5) is True
    assert ln2.is_lspace(4, 4) is None
    k55 = LinkFamily.two_bridge(5, 5)
    assert k55.is_lspace(3, 3) is True
    assert k55.is_lspace(3, 4) is None


def test_link_test_points():
    points = [(p1, p2) for p1, p2, _ in LinkFamily.ln(3).test_points()]
    assert points == [(2, 7), (3, 7), (4, 7), (5, 7), (2, 8)]
    points = [(p1, p2) for p1, p2, _ in LinkFamily.ln(2).test_points()]
    assert (5, 5) not in points and (2, 6) in points
    assert [p[:2] for p in LinkFamily.two_bridge(5, 5).test_points()] == [(3, 3)]
    assert LinkFamily.unlink().test_points() == []
