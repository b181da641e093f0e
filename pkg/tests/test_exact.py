from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acmgate.exact import (
    ExpressionSyntaxError,
    InconsistentSystemError,
    MissingUnknownError,
    Poly,
    as_int,
    binom4,
    binom4_poly,
    format_value,
    hdim,
    parse_equation,
    parse_poly,
    read_assignment,
    solve_linear,
)

x, y, z = (Poly.var(s) for s in "xyz")


def test_hdim_values():
    assert [hdim(n) for n in range(-3, 7)] == [0, 0, 0, 1, 5, 15, 35, 70, 126, 210]


def test_binom4_is_hom_count():
    assert binom4(4) == 1
    assert binom4(3) == 0
    assert binom4(10) == 210
    assert all(binom4(m) == hdim(m - 4) for m in range(-10, 20))


@pytest.mark.parametrize("shift", range(-8, 9))
def test_binom4_poly_agrees_with_hdim(shift):
    p = binom4_poly(shift)
    for n in range(-shift, -shift + 15):
        assert p(n) == hdim(n + shift)
    # roots at n + shift = -1..-4; disagreement from -5 down
    for m in (-1, -2, -3, -4):
        assert p(m - shift) == 0
    for m in range(-12, -4):
        assert p(m - shift) != hdim(m)


def test_binom4_poly_matches_comb():
    p = binom4_poly(0)
    assert [p(n) for n in range(6)] == [comb(n + 4, 4) for n in range(6)]


polys = st.builds(
    lambda cs: sum((Fraction(c) * m for c, m in zip(cs, (Poly.const(1), x, y, x * y, x * x, z))), Poly()),
    st.lists(st.integers(-9, 9), min_size=6, max_size=6),
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0
    assert parse_poly(str(p)) == p


def test_canonical_printing():
    assert str(30 - Poly.var("d")) == "30 - d"
    assert str(Fraction(10, 3) - Fraction(2, 3) * Poly.var("u1")) == "10/3 - 2/3*u1"
    assert str(Poly()) == "0"


def test_parse_and_power_syntax():
    assert parse_poly("x^2 - 2*x*y") == x * x - 2 * x * y
    assert parse_poly("x**2") == x * x
    assert parse_poly("(a + 3*(27-d))") == Poly.var("a") + 81 - 3 * Poly.var("d")
    assert parse_equation("a+3*(27-d)=b") == Poly.var("a") + 81 - 3 * Poly.var("d") - Poly.var("b")
    with pytest.raises(ExpressionSyntaxError):
        parse_poly("x +")
    with pytest.raises(ExpressionSyntaxError):
        parse_poly("f(x)")


def test_eval_missing_unknown():
    with pytest.raises(MissingUnknownError) as info:
        (x + y).eval({"x": 1})
    assert "y" in str(info.value)
    assert (x + y).eval({"x": 1, "y": 2}) == 3


def test_subs_and_collect():
    p = x * x * y + 3 * x + 1
    assert p.subs({"x": 2}) == 4 * y + 7
    assert p.collect("x") == {2: y, 1: Poly.const(3), 0: Poly.const(1)}


def test_format_value_and_as_int():
    assert format_value(Poly.const(7)) == 7
    assert format_value(x - 1) == "-1 + x"
    assert as_int(Poly.const(5)) == 5
    with pytest.raises(ValueError):
        as_int(Poly.const(Fraction(1, 2)))


def test_solve_linear_prefers_pivots():
    d, a, b, xx = (Poly.var(s) for s in "dabx")
    sol = solve_linear([xx + d - 30, b - a - 81 + 3 * d], prefer=("x", "b"))
    assert sol == {"x": 30 - d, "b": 81 + a - 3 * d}


def test_solve_linear_back_substitution():
    sol = solve_linear([x + y - 3, x - y - 1])
    assert sol == {"x": Poly.const(2), "y": Poly.const(1)}


def test_solve_linear_inconsistent():
    with pytest.raises(InconsistentSystemError):
        solve_linear([x - 1, x - 2])


def test_read_assignment():
    assert read_assignment("a = 3\n# comment\n\nb=-2\n") == {"a": 3, "b": -2}
    with pytest.raises(ValueError):
        read_assignment("a = x")
