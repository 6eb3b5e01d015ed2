"""Weight valuations: values, centers, classes, and the rank split."""

import random

from conftest import scene

from lu.errors import (
    InitialIdealNotPrime,
    LuError,
    NotCentered,
    NotMinimalPrime,
    UnsupportedInstance,
)
from lu.valuations import (
    Value,
    axiom_violations,
    center_ideal,
    certify,
    decompose,
    sample_polynomials,
    support_class,
)


def _fat_cone_scene():
    return scene(
        ["u", "v", "x", "y"],
        ["x^2", "x*y", "y^2", "v*x - u*y"],
        ["u", "v", "x", "y"],
        ["x", "y"],
        {"u": (1, 0), "v": (0, 1)},
        2,
    )


def _whitney_scene():
    return scene(
        ["u", "x", "y"],
        ["u*y - x^2"],
        ["u", "x", "y"],
        [],
        {"u": (0, 1), "x": (1, 1), "y": (2, 1)},
        2,
    )


def _cusp_scene():
    return scene(
        ["x", "y"],
        ["y^2 - x^3"],
        ["x", "y"],
        ["y^2 - x^3"],
        {"x": (2,), "y": (3,)},
        1,
    )


def test_value_arithmetic():
    assert Value((1, 2)) + Value((0, 1)) == Value((1, 3))
    assert Value((1, 3)) - Value((0, 1)) == Value((1, 2))
    assert Value.infinite() + Value((5,)) == Value.infinite()
    assert Value.infinite() - Value((1,)) == Value.infinite()


def test_value_order_is_lexicographic():
    assert Value((0, 5)) < Value((1, 0))
    assert Value((1, 0)) < Value((1, 1))
    assert Value((2,)) < Value.infinite()
    assert not Value.infinite() < Value.infinite()
    vals = [Value((1, 0)), Value.infinite(), Value((0, 9)), Value((1, 0))]
    assert sorted(vals)[0] == Value((0, 9))
    assert sorted(vals)[-1].is_infinite


def test_value_predicates_and_truncation():
    assert Value((0, 0)).is_zero
    assert Value((0, 1)).is_positive
    assert not Value((0, 0)).is_positive
    assert Value.infinite().is_positive
    assert Value((1, 2, 3)).truncate(2) == Value((1, 2))
    assert Value.infinite().truncate(1) == Value.infinite()


def test_value_dimension_guards():
    try:
        Value((1, 2)) < Value((1,))
    except LuError:
        pass
    else:
        raise AssertionError("comparing values of different rank was allowed")
    try:
        Value((1,)) - Value.infinite()
    except LuError:
        pass
    else:
        raise AssertionError("subtracting an infinite value was allowed")


def test_fat_cone_value_table():
    local, nu = _fat_cone_scene()
    u, v, x, _ = (local.ring.var(n) for n in "uvxy")
    assert nu.value_of(u) == Value((1, 0))
    assert nu.value_of(v) == Value((0, 1))
    assert nu.value_of(x).is_infinite
    assert nu.value_of(u * v + u * u) == Value((1, 1))
    # the sum takes the smaller of the two values
    assert nu.value_of(u + v) == Value((0, 1))


def test_center_collects_positive_variables():
    local, nu = _fat_cone_scene()
    assert center_ideal(nu).canonical_strings() == ["y", "x", "v", "u"]


def test_support_classes():
    _, cone_nu = _fat_cone_scene()
    assert support_class(cone_nu) == "variables"
    _, whitney_nu = _whitney_scene()
    assert support_class(whitney_nu) == "weight-homogeneous"
    free, free_nu = scene(["x", "y"], [], ["x", "y"], [], {"x": (2,), "y": (3,)}, 1)
    assert support_class(free_nu) == "zero"
    assert free_nu.value_of(
        free.ring.var("y") ** 2 - free.ring.var("x") ** 3
    ) == Value((6,))


def test_certify_accepts_the_instances():
    for builder, cls in [
        (_fat_cone_scene, "variables"),
        (_whitney_scene, "weight-homogeneous"),
        (_cusp_scene, "weight-homogeneous"),
    ]:
        local, nu = builder()
        assert certify(nu, local.defining, local.center) == cls


def test_certify_refuses_inhomogeneous_support():
    local, nu = scene(
        ["x", "y"],
        ["x - y^2 - y^3"],
        ["x", "y"],
        ["x - y^2 - y^3"],
        {"x": (2,), "y": (1,)},
        1,
    )
    assert support_class(nu) is None
    try:
        certify(nu, local.defining, local.center)
    except UnsupportedInstance:
        pass
    else:
        raise AssertionError("inhomogeneous support was certified")


def test_certify_refuses_reducible_support():
    local, nu = scene(
        ["x", "y"], ["x*y"], ["x", "y"], ["x*y"], {"x": (1,), "y": (1,)}, 1
    )
    try:
        certify(nu, local.defining, local.center)
    except InitialIdealNotPrime:
        pass
    else:
        raise AssertionError("zero divisors in the graded ring went unnoticed")


def test_certify_refuses_non_minimal_support():
    local, nu = scene(
        ["x", "y"], ["x^2"], ["x", "y"], ["x", "y"], {"x": (1,), "y": (1,)}, 1
    )
    try:
        certify(nu, local.defining, local.center)
    except NotMinimalPrime:
        pass
    else:
        raise AssertionError("an embedded support was certified")


def test_certify_refuses_off_center_positivity():
    local, nu = scene(["u", "x"], [], ["x"], [], {"u": (1,), "x": (1,)}, 1)
    try:
        certify(nu, local.defining, local.center)
    except NotCentered:
        pass
    else:
        raise AssertionError("a positive variable outside the center passed")


def test_decompose_splits_the_rows():
    local, nu = _fat_cone_scene()
    first, rest = decompose(nu, 1)
    assert first.rank == 1 and rest.rank == 1
    assert center_ideal(first).canonical_strings() == ["y", "x", "u"]
    v = local.ring.var("v")
    u = local.ring.var("u")
    assert rest.value_of(v) == Value((1,))
    assert rest.value_of(u).is_infinite


def test_decompose_rejects_bad_split_index():
    _, nu = _fat_cone_scene()
    for r in (0, 2):
        try:
            decompose(nu, r)
        except LuError:
            pass
        else:
            raise AssertionError(f"split index {r} was accepted at rank 2")


def test_axiom_sampling_sees_no_violations():
    for builder in (_fat_cone_scene, _whitney_scene, _cusp_scene):
        _, nu = builder()
        assert axiom_violations(nu, count=60) == []


def test_truncation_commutes_with_the_split():
    # the coarse half of a split reads off the leading block of the value
    _, nu = _fat_cone_scene()
    first, _ = decompose(nu, 1)
    rng = random.Random(7)
    for _ in range(40):
        f = sample_polynomials(nu.ring, rng)
        assert first.value_of(f) == nu.value_of(f).truncate(1)
