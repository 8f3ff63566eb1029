from fractions import Fraction as F

import pytest

from core.errors import ConsistencyError, InvariantError, LinkingNumberError, NotSymmetricError
from core.floer import (
    HFunctionGrid,
    check_h_nonnegative,
    component_tail,
    d_knot_surgery,
    d_lens,
    d_link_surgery,
    h_function,
    torsion_coefficients,
    unlink_H,
)
from core.ring import LaurentPoly1, LaurentPoly2, parse_poly1
from data.catalog import KnotFamily, LinkFamily, alexander_closed_form, knm_closed_form


def test_torsion_of_knm_three_one():
    t = torsion_coefficients(knm_closed_form(3, 1))
    assert t.values == (2, 2, 1, 1, 1, 0)
    assert t.genus == 5
    assert t[-1] == 2 and t[9] == 0
    assert t.is_non_increasing()


def test_torsion_of_trefoil_and_unknot():
    assert torsion_coefficients(parse_poly1("t - 1 + t^-1")).values == (1, 0)
    assert torsion_coefficients(LaurentPoly1.one()).values == (0,)


def test_torsion_input_checks():
    with pytest.raises(NotSymmetricError):
        torsion_coefficients(parse_poly1("t^2 - t + 1"))
    with pytest.raises(NotSymmetricError):
        torsion_coefficients(parse_poly1("t + t^-1"))
    # symmetric, normalized, but not the shape of an L-space knot
    figure_eight = parse_poly1("-t + 3 - t^-1")
    with pytest.raises(InvariantError):
        torsion_coefficients(figure_eight)
    assert torsion_coefficients(figure_eight, strict=False).values == (-1, 0)


def test_lens_space_values():
    assert [d_lens(5, i) for i in range(5)] == [F(1), F(1, 5), F(-1, 5), F(-1, 5), F(1, 5)]
    assert d_lens(1, 0) == 0
    with pytest.raises(InvariantError):
        d_lens(0, 0)
    with pytest.raises(InvariantError):
        d_lens(3, 4)


def test_unknot_surgery_is_a_lens_space():
    table = d_knot_surgery(LaurentPoly1.one(), 5)
    assert table.entries == tuple(d_lens(5, i) for i in range(5))
    assert table.is_symmetric()


def test_knm_three_one_at_ten():
    table = d_knot_surgery(knm_closed_form(3, 1), 10)
    assert table.entries == (
        F(-7, 4), F(-53, 20), F(-27, 20), F(-37, 20), F(-43, 20),
        F(-1, 4), F(-43, 20), F(-37, 20), F(-27, 20), F(-53, 20),
    )
    assert table.all_negative()
    assert table.max_entry == F(-1, 4)
    assert table.argmax() == [5]
    assert table.to_dict()["entries"][5] == {"i": 5, "d": "-1/4"}


def test_knm_three_one_at_the_quoted_stein_threshold():
    table = d_knot_surgery(knm_closed_form(3, 1), 13)
    assert table.max_entry == F(-1, 13)
    assert table.entry(0) == -1


def test_component_tail_closed_form():
    # 1/(1 - t^-1) = 1 + t^-1 + ...: the tail beyond s is max(0, -s)
    one = LaurentPoly1.one()
    assert [component_tail(one, s) for s in (-3, -1, 0, 2)] == [3, 1, 0, 0]
    assert unlink_H(-2, 3) == 2


def test_unlink_h_vanishes():
    grid = h_function(LinkFamily.unlink())
    assert set(grid.window(3).values()) == {0}
    check_h_nonnegative(grid, 3)


def test_negative_h_is_a_consistency_error():
    one = LaurentPoly1.one()
    grid = HFunctionGrid(LaurentPoly2({(0, 0): 1}), (one, one))
    assert grid.h(-1, -1) == -1
    check_h_nonnegative(grid, 0)
    with pytest.raises(ConsistencyError):
        check_h_nonnegative(grid, 1)


def test_k55_h_function():
    grid = h_function(LinkFamily.two_bridge(5, 5))
    ones = {(0, 0), (0, 1), (0, -1), (1, 0), (-1, 0)}
    for (s1, s2), value in grid.window(4).items():
        assert value == (1 if (s1, s2) in ones else 0), (s1, s2)


def test_k55_table():
    table = d_link_surgery(LinkFamily.two_bridge(5, 5), 3, 3)
    m = F(-5, 3)
    assert table.as_mapping() == {
        (0, 0): F(-1),
        (0, 1): m, (0, 2): m, (1, 0): m, (2, 0): m,
        (1, 1): F(-1, 3), (1, 2): F(-1, 3), (2, 1): F(-1, 3), (2, 2): F(-1, 3),
    }
    assert table.order == 9
    assert table.max_entry == F(-1, 3)
    assert table.is_symmetric()
    assert len(table.to_dict()["entries"]) == 9


def test_ln_small_values():
    grid = h_function(LinkFamily.ln(1))
    assert grid.h(0, 0) == 1 and grid.h(0, 1) == 1 and grid.h(0, 2) == 0
    assert grid.h(3, 0) == 1 and grid.h(3, 1) == 0
    assert grid.H(-2, -2) == grid.h(-2, -2) + 4


def test_ln_two_at_four_five_is_negative():
    assert d_link_surgery(LinkFamily.ln(2), 4, 5).all_negative()


def test_linking_number_must_vanish():
    with pytest.raises(LinkingNumberError):
        h_function(LinkFamily(LinkFamily.ln(1).tag, (1,), linking_number=1))


def test_support_radius_covers_the_data():
    grid = HFunctionGrid(LaurentPoly2({(2, -1): 1, (0, 0): -1}), (LaurentPoly1.one(), LaurentPoly1.one()))
    assert grid.support_radius == 2
    assert h_function(LinkFamily.ln(3)).support_radius >= 4


def test_torus_knot_table_entries_use_the_closer_label():
    alex = alexander_closed_form(KnotFamily.torus(3, 2))
    table = d_knot_surgery(alex, 2)
    assert table.entries == (F(-7, 4), F(-1, 4))
