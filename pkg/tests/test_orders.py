import pytest

from lu.errors import DimensionMismatch
from lu.orders import (
    EQ,
    GT,
    LT,
    DegRevLex,
    Lex,
    WeightRefined,
    canonical_order,
    compare_monomials,
    degrevlex,
    elimination_order,
    weight_order,
)
from lu.parse import parse_poly

from conftest import ring


def _lead(R, text, order):
    return parse_poly(R, text).leading(order)[0]


def test_lex_priority_permutation():
    R = ring("x", "y")
    f = "x*y^3 + x^2"
    assert _lead(R, f, Lex((0, 1))) == (2, 0)
    assert _lead(R, f, Lex((1, 0))) == (1, 3)
    with pytest.raises(DimensionMismatch):
        Lex((0, 2))


def test_degrevlex_classic_degree_two_chain():
    o = degrevlex(3)
    x2, xy, y2, xz = (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)
    assert compare_monomials(o, x2, xy) == GT
    assert compare_monomials(o, xy, y2) == GT
    assert compare_monomials(o, y2, xz) == GT
    assert compare_monomials(o, (1, 1, 2), (3, 0, 0)) == GT  # degree wins first


def test_canonical_order_is_reverse_alphabetical_lex():
    """Later names dominate: on (u, v, x, y, t) the chain is y > x > v > u > t."""
    R = ring("u", "v", "x", "y", "t")
    o = canonical_order(R.names)
    assert compare_monomials(o, _lead(R, "y", o), _lead(R, "x*t^5", o)) == GT
    assert compare_monomials(o, _lead(R, "v^2", o), _lead(R, "u^9", o)) == GT
    assert compare_monomials(o, _lead(R, "u^9", o), _lead(R, "t^3", o)) == GT
    assert compare_monomials(o, _lead(R, "t", o), _lead(R, "t", o)) == EQ


def test_weight_refined_max_convention():
    # heavier total weight wins; ties fall through to the refinement
    o = WeightRefined(((2, 1),), DegRevLex(2))
    assert compare_monomials(o, (1, 2), (2, 0)) == GT  # tie at 4, degree decides
    assert compare_monomials(o, (1, 0), (0, 1)) == GT  # weight 2 beats 1
    assert compare_monomials(o, (1, 0), (0, 2)) == LT  # tie at 2, degree decides


def test_weight_order_tie_is_degrevlex():
    o = weight_order(((1, 1),), 2)
    assert compare_monomials(o, (1, 0), (0, 1)) == GT


def test_weight_refined_arity_check():
    with pytest.raises(DimensionMismatch):
        WeightRefined(((1, 2, 3),), DegRevLex(2))


def test_elimination_order_blocks():
    """Any monomial touching a dropped variable beats any clean one."""
    R = ring("x", "y", "t")
    o = elimination_order(R.names, ("t",))
    assert compare_monomials(o, _lead(R, "t", o), _lead(R, "x^9*y^9", o)) == GT
    # away from the dropped block the tie-break is plain degrevlex
    assert compare_monomials(o, _lead(R, "x^2", o), _lead(R, "x*y", o)) == GT
