"""Local blowups: charts, transports, composition, and the two lifts."""

from conftest import ideal, ring, scene

from lu.blowup import (
    compose,
    identity_blowup,
    is_compatible,
    lift_from_localization,
    lift_from_quotient,
    local_blowup,
    strict_transform,
    transport_through_blowup,
    verify_center_isos,
)
from lu.errors import (
    ChartMismatch,
    IsomorphismCheckFailed,
    LuError,
    SupportDivision,
    ValueInequalityViolated,
)
from lu.ideals import Ideal
from lu.localring import LocalRing
from lu.valuations import WeightValuation


def _plane():
    R = ring("x", "y")
    return LocalRing(R, Ideal(R, []), ideal(R, "x", "y"))


def test_fat_axis_chart():
    local, nu = scene(
        ["x", "y"], ["x^2", "x*y"], ["x", "y"], ["x"], {"y": (1,)}, 1
    )
    B = local_blowup(local, local.ring.var("y"), [local.ring.var("x")], nu=nu)
    assert B.chart.defining.canonical_strings() == ["x", "t"]
    assert B.chart.center.canonical_strings() == ["y", "x", "t"]
    assert B.t_names == ("t",)
    assert B.stabilization_N == 2
    moved = transport_through_blowup(nu, B)
    # x had infinite value, so t joins the support with a zero column
    assert moved.rows == ((0, 1, 0),)
    assert moved.support.canonical_strings() == ["x", "t"]
    assert verify_center_isos(B, nu).ok


def test_fat_cone_chart():
    local, nu = scene(
        ["u", "v", "x", "y"],
        ["x^2", "x*y", "y^2", "v*x - u*y"],
        ["u", "v", "x", "y"],
        ["x", "y"],
        {"u": (1, 0), "v": (0, 1)},
        2,
    )
    B = local_blowup(local, local.ring.var("v"), [local.ring.var("y")], nu=nu)
    assert B.chart.defining.canonical_strings() == ["y - v*t", "x - u*t", "t^2"]
    assert B.stabilization_N == 2
    moved = transport_through_blowup(nu, B)
    assert moved.rows == ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0))
    assert moved.support.canonical_strings() == ["y", "x", "t"]
    assert verify_center_isos(B, nu).ok


def test_whitney_chart_and_strict_transform():
    local, nu = scene(
        ["u", "x", "y"],
        ["u*y - x^2"],
        ["u", "x", "y"],
        [],
        {"u": (0, 1), "x": (1, 1), "y": (2, 1)},
        2,
    )
    B = local_blowup(local, local.ring.var("u"), [local.ring.var("x")], nu=nu)
    assert B.chart.defining.canonical_strings() == ["y - u*t^2", "x - u*t"]
    assert B.stabilization_N == 1
    moved = transport_through_blowup(nu, B)
    assert moved.rows == ((0, 1, 2, 1), (1, 1, 1, 0))
    assert verify_center_isos(B, nu).ok

    transformed, n = strict_transform(B, ideal(local.ring, "x"))
    assert transformed.canonical_strings() == ["x", "t"]
    assert n == 1


def test_cusp_resolves_in_one_chart():
    local, nu = scene(
        ["x", "y"], ["y^2 - x^3"], ["x", "y"], ["y^2 - x^3"],
        {"x": (2,), "y": (3,)}, 1,
    )
    B = local_blowup(local, local.ring.var("x"), [local.ring.var("y")], nu=nu)
    assert B.chart.defining.canonical_strings() == ["y - t^3", "x - t^2"]
    assert B.stabilization_N == 2
    assert verify_center_isos(B, nu).ok


def test_identity_blowup_is_the_source():
    local, nu = scene(
        ["x", "y"], ["x^2", "x*y"], ["x", "y"], ["x"], {"y": (1,)}, 1
    )
    B = identity_blowup(local)
    assert B.chart == local
    assert B.t_names == ()
    assert is_compatible(B, nu)


def test_refuses_denominator_in_the_support():
    local, nu = scene(
        ["x", "y"], ["x^2", "x*y"], ["x", "y"], ["x"], {"y": (1,)}, 1
    )
    try:
        local_blowup(local, local.ring.var("x"), [local.ring.var("y")], nu=nu)
    except SupportDivision:
        pass
    else:
        raise AssertionError("division by a support element was allowed")


def test_refuses_numerator_of_smaller_value():
    local, nu = scene(["x", "y"], [], ["x", "y"], [], {"x": (2,), "y": (3,)}, 1)
    try:
        local_blowup(local, local.ring.var("y"), [local.ring.var("x")], nu=nu)
    except ValueInequalityViolated:
        pass
    else:
        raise AssertionError("a value decreasing chart was built")


def test_refuses_generators_outside_the_center():
    local, _ = scene(["x", "y"], [], ["x", "y"], [], {"x": (2,), "y": (3,)}, 1)
    R = local.ring
    try:
        local_blowup(local, R.one() + R.var("x"), [R.var("y")])
    except LuError:
        pass
    else:
        raise AssertionError("a unit denominator was accepted")
    try:
        local_blowup(local, R.zero(), [])
    except LuError:
        pass
    else:
        raise AssertionError("a zero denominator was accepted")


def test_compose_two_point_blowups():
    plane = _plane()
    R = plane.ring
    first = local_blowup(plane, R.var("x"), [R.var("y")])
    assert first.chart.defining.canonical_strings() == ["y - x*t"]
    S = first.chart.ring
    second = local_blowup(first.chart, S.var("t"), [S.var("x")])
    assert second.chart.defining.canonical_strings() == ["y - t^2*s", "x - t*s"]

    whole = compose(first, second)
    assert whole.b.text() == "x*y"
    assert [a.text() for a in whole.a_list] == ["y^2", "x^3"]
    assert whole.t_names == ("t", "s")
    assert whole.stabilization_N == 2
    assert whole.chart == second.chart
    assert whole.source == plane


def test_compose_with_identity_is_a_relabel():
    plane = _plane()
    R = plane.ring
    first = local_blowup(plane, R.var("x"), [R.var("y")])
    whole = compose(first, identity_blowup(first.chart))
    assert whole.b.text() == "x"
    assert [a.text() for a in whole.a_list] == ["y"]
    assert whole.chart == first.chart


def test_compose_checks_the_gluing():
    plane = _plane()
    R = plane.ring
    first = local_blowup(plane, R.var("x"), [R.var("y")])
    try:
        compose(first, first)
    except ChartMismatch:
        pass
    else:
        raise AssertionError("composing along mismatched charts was allowed")


def test_localization_lift_swaps_the_denominator():
    plane = _plane()
    R = plane.ring
    # x and y agree on the visible row but x is smaller underneath
    nu = WeightValuation(R, Ideal(R, []), ((1, 1), (1, 2)))
    B = lift_from_localization(plane, nu, 1, R.var("y"), [R.var("x")])
    assert B.b.text() == "x"
    assert [a.text() for a in B.a_list] == ["y"]


def test_localization_lift_keeps_a_legal_denominator():
    plane = _plane()
    R = plane.ring
    nu = WeightValuation(R, Ideal(R, []), ((1, 1), (1, 2)))
    B = lift_from_localization(plane, nu, 1, R.var("x"), [R.var("y")])
    assert B.b.text() == "x"
    assert [a.text() for a in B.a_list] == ["y"]


def test_localization_lift_refuses_a_visible_swap():
    plane = _plane()
    R = plane.ring
    # the first row already distinguishes the candidates
    nu = WeightValuation(R, Ideal(R, []), ((1, 2), (0, 0)))
    try:
        lift_from_localization(plane, nu, 1, R.var("y"), [R.var("x")])
    except IsomorphismCheckFailed:
        pass
    else:
        raise AssertionError("a swap the localized run could see was lifted")


def test_quotient_lift_checks_the_contraction():
    R = ring("u", "v", "w")
    local = LocalRing(R, Ideal(R, []), ideal(R, "u", "v", "w"))
    nu = WeightValuation(R, Ideal(R, []), ((1, 0, 0), (0, 2, 3)))
    p1 = ideal(R, "u")
    B = lift_from_quotient(local, nu, p1, R.var("v"), [R.var("w")])
    assert B.b.text() == "v"
    assert B.chart.defining.canonical_strings() == ["w - v*t"]
    try:
        lift_from_quotient(local, nu, p1, R.var("u"), [R.var("w")])
    except SupportDivision:
        pass
    else:
        raise AssertionError("lifted a denominator that dies in the quotient")
