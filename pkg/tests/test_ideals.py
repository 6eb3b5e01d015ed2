import random

import pytest
from hypothesis import given, settings, strategies as st

from lu.errors import ResourceLimit
from lu.ideals import Ideal, Limits
from lu.orders import elimination_order
from lu.parse import parse_many, parse_poly

from conftest import ideal, ring


def test_membership(xy):
    I = ideal(xy, "x^2", "x*y")
    assert I.contains(parse_poly(xy, "x^2*y^3 - x*y"))
    assert not I.contains(parse_poly(xy, "x"))
    assert I.normal_form(parse_poly(xy, "x + 1")).text() == "x + 1"


def test_canonical_strings_frozen(xy):
    assert ideal(xy, "x^2", "x*y").canonical_strings() == ["x*y", "x^2"]
    assert ideal(xy, "y^2 - x^3").canonical_strings() == ["y^2 - x^3"]
    R = ring("u", "v", "x", "y")
    I = ideal(R, "x^2", "x*y", "y^2", "v*x - u*y")
    assert I.canonical_strings() == ["y^2", "x*y", "u*y - v*x", "x^2"]


def test_reduced_gb_is_generator_independent(xy):
    """The reduced basis is an invariant of the ideal, not the presentation."""
    I = ideal(xy, "x^2 - y", "x*y - 1")
    J = ideal(
        xy,
        "x*y - 1",
        "x^2 - y + x*(x*y - 1)",
        "y*(x^2 - y) - (x*y - 1)*x",
    )
    assert I.canonical_gb() == J.canonical_gb()
    assert I == J


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_gb_invariance_random(data):
    R = ring("x", "y")
    texts = ["x^2 - y", "x*y + y^2", "y^3 - x"]
    gens = parse_many(R, texts)
    I = Ideal(R, gens)
    perm = data.draw(st.permutations(gens))
    mults = data.draw(
        st.lists(
            st.sampled_from(["0", "1", "x", "y - 1", "x*y"]),
            min_size=3,
            max_size=3,
        )
    )
    noisy = list(perm)
    for i in range(3):
        noisy.append(perm[i] * parse_poly(R, mults[i]))
    assert Ideal(R, noisy) == I


def test_unit_and_zero(xy):
    assert ideal(xy, "x", "x + 1").is_unit_ideal()
    assert ideal(xy).is_zero_ideal()
    assert not list(ideal(xy, "0").canonical_gb())


def test_colon(xy):
    I = ideal(xy, "x^2", "x*y")
    assert I.colon(parse_poly(xy, "x")) == ideal(xy, "x", "y")
    assert I.colon(parse_poly(xy, "y")) == ideal(xy, "x")
    assert I.colon_ideal(ideal(xy, "x", "y")) == ideal(xy, "x")


def test_power_and_product(xy):
    m = ideal(xy, "x", "y")
    assert m.power(2) == ideal(xy, "x^2", "x*y", "y^2")
    assert m.multiply(ideal(xy, "x")) == ideal(xy, "x^2", "x*y")


def test_intersect(xy):
    assert ideal(xy, "x").intersect(ideal(xy, "y")) == ideal(xy, "x*y")
    got = ideal(xy, "x").intersect(ideal(xy, "x^2", "y^2"))
    assert got == ideal(xy, "x^2", "x*y^2")
    assert not got.contains(parse_poly(xy, "x*y"))


def test_eliminate_recovers_the_cusp():
    R = ring("x", "y", "t")
    I = ideal(R, "x*t - y", "t^2 - x")
    J = I.eliminate(("t",))
    assert J.canonical_strings() == ["y^2 - x^3"]
    small = J.eliminate_restrict(("t",))
    assert small.ring == ring("x", "y")
    assert small == ideal(ring("x", "y"), "y^2 - x^3")


def _saturation_by_elimination(I, f):
    """Independent route: (I + (1 - t*f)) cut back down to the base ring."""
    R = I.ring
    S = R.extend(("sat_t",))
    t = S.var("sat_t")
    lifted = [g.substitute(S) for g in I.gens]
    lifted.append(S.one() - t * f.substitute(S))
    return Ideal(S, lifted).eliminate_restrict(("sat_t",))


@pytest.mark.parametrize(
    "gens,f",
    [
        (("x^2", "x*y"), "y"),
        (("x^2", "x*y"), "x"),
        (("x^2*y - x", "y^2"), "x"),
        (("x^3 - y^2*x",), "x"),
    ],
)
def test_saturation_matches_elimination_route(xy, gens, f):
    I = ideal(xy, *gens)
    ff = parse_poly(xy, f)
    J, n = I.saturation(ff)
    K = _saturation_by_elimination(I, ff)
    assert J == K
    # n is the least colon-chain stabilizer
    chain = [I]
    for _ in range(n):
        chain.append(chain[-1].colon(ff))
    assert chain[-1] == J
    if n:
        assert chain[-2] != J


def test_saturation_frozen_values():
    S = ring("x", "y", "t")
    J0 = ideal(S, "x^2", "x*y", "y*t - x")
    J, n = J0.saturation(parse_poly(S, "y"))
    assert J.canonical_strings() == ["x", "t"]
    assert n == 2


def test_resource_limit():
    R = ring("x", "y", "z")
    I = ideal(
        R,
        "x^4 + y^4 + z^4 - 1",
        "x^3*y - y^3*z + z^3*x",
        "x*y*z - x - y - z",
    )
    with pytest.raises(ResourceLimit):
        I.groebner(limits=Limits(reductions=5, term_ops=200))


def test_minimal_generators(xy):
    I = ideal(xy, "x", "x^2", "x + x*y", "y^3")
    mg = I.minimal_generators()
    assert Ideal(xy, mg) == I
    assert len(mg) == 2
