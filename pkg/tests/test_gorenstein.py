import pytest

from acmgate.catalog import FIXTURES
from acmgate.exact import Poly, hdim
from acmgate.gorenstein import (
    DOMINANT_IMPOSSIBLE,
    INCONCLUSIVE,
    CurveInvariants,
    GorensteinResolution,
    IncompatibleShapeError,
    flag_gate,
    gate_threshold,
    h0_curve,
    h0_curve_from_invariants,
    h0_ideal,
    hilbert_equations,
    km_h0_normal,
    solve_hilbert,
)

d = Poly.var("d")

# (h0(N_C), h0(I_C(6)), bound), frozen
GATES = {
    "line": (6, 203, 208),
    "conic": (11, 197, 207),
    "plane_cubic": (15, 192, 206),
    "elliptic_quartic": (20, 186, 205),
    "elliptic_quintic": (25, 180, 204),
    "plane_quartic": (20, 188, 207),
    "canonical_sextic": (28, 177, 204),
    "canonical_genus5": (36, 166, 201),
    "c1_2_d14": (62, 147, 208),
    "c1_2_d16": (66, 138, 203),
    "c1_2_d18": (70, 129, 198),
    "c1_2_d20": (74, 120, 193),
    "c1_4_d40": (125, 70, 194),
    "c1_5_d55": (154, 44, 197),
}


@pytest.mark.parametrize("name", sorted(GATES))
def test_gate_values(name):
    f = FIXTURES[name]
    rep = flag_gate(f.res, f.inv, extra=f.extra)
    assert (rep.h0N, rep.h0I6, rep.bound) == GATES[name]
    assert rep.verdict == DOMINANT_IMPOSSIBLE


def test_line_gate_matches_incidence_count():
    # 6-dim family of lines, 202-dim space of sextics through each
    rep = flag_gate(FIXTURES["line"].res, FIXTURES["line"].inv)
    assert rep.h0N == 6
    assert h0_ideal(FIXTURES["line"].res, 6) - 1 == 202
    assert rep.bound == 208
    assert rep.margin == 1


def test_c1_3_family():
    f = FIXTURES["c1_3_family"]
    rep = flag_gate(f.res, f.inv, prefer=("x", "b"))
    assert rep.h0N == 69 + d
    assert rep.h0I6 == 210 - 4 * d
    assert rep.bound == 278 - 3 * d
    assert rep.verdict == INCONCLUSIVE
    assert gate_threshold(rep.bound, "d", 209, range(1, 31)) == 24
    assert flag_gate(f.res, f.inv, prefer=("x", "b"), domains={"d": range(24, 31)}).verdict == DOMINANT_IMPOSSIBLE
    assert flag_gate(f.res, f.inv, prefer=("x", "b"), domains={"d": range(23, 31)}).verdict == INCONCLUSIVE


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_free_unknowns_cancel(name):
    f = FIXTURES[name]
    sol = solve_hilbert(f.res, f.inv, f.extra, ("x", "b"))
    h0N = km_h0_normal(f.res, f.inv).subs(sol)
    assert not (h0N.variables() & set(f.free))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_hilbert_consistent(name):
    f = FIXTURES[name]
    sol = solve_hilbert(f.res, f.inv, f.extra, ("x", "b"))
    for eq in hilbert_equations(f.res, f.inv):
        assert eq.subs(sol).is_zero()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_curve_duality_window(name):
    f = FIXTURES[name]
    sol = solve_hilbert(f.res, f.inv, f.extra, ("x", "b"))
    res = f.res.subs(sol)
    inv = CurveInvariants(f.inv.d.subs(sol), f.inv.g.subs(sol), f.inv.e)
    for n in range(-5, res.e + 11):
        assert h0_curve(res, inv, n) - h0_curve(res, inv, res.e - n) == n * inv.d + 1 - inv.g


def test_nonspecial_range_matches_resolution():
    f = FIXTURES["c1_5_d55"]
    for n in range(f.inv.e + 1, f.inv.e + 6):
        assert h0_curve_from_invariants(f.inv, n) == h0_curve(f.res, f.inv, n)


def test_special_range_error():
    inv = FIXTURES["c1_5_d55"].inv
    with pytest.raises(ValueError, match="special range"):
        h0_curve_from_invariants(inv, inv.e)
    assert h0_curve_from_invariants(inv, -1) == 0


def test_ci_km_matches_direct_count():
    # normal bundle of a c.i. (d1,d2,d3) is O(d1)+O(d2)+O(d3) restricted
    res = GorensteinResolution.complete_intersection(1, 2, 3)
    inv = CurveInvariants(6, 4, 1)
    direct = sum(h0_curve(res, inv, k) for k in (1, 2, 3))
    assert km_h0_normal(res, inv) == direct == 28


def test_incompatible_shape():
    res = GorensteinResolution(3, ((2, 1),))
    with pytest.raises(IncompatibleShapeError):
        solve_hilbert(res, CurveInvariants.from_bundle(2, 14))
    with pytest.raises(IncompatibleShapeError):
        hilbert_equations(GorensteinResolution(2, ((2, 3),)), CurveInvariants.from_bundle(2, 14))


def test_invariant_checks():
    with pytest.raises(ValueError):
        CurveInvariants(5, 2, 1)
    with pytest.raises(ValueError):
        CurveInvariants(0, 1, 0)


def test_no_generators():
    with pytest.raises(ValueError, match="no generators"):
        flag_gate(GorensteinResolution(3, ()), CurveInvariants.from_bundle(2, 14))


def test_other_degree_ambient():
    f = FIXTURES["line"]
    rep = flag_gate(f.res, f.inv, ambient_dim=hdim(5) - 1, degree=5)
    assert rep.h0I6 == hdim(5) - 6
    assert rep.ambient_dim == 125
