"""Betti shapes of the curves that must be excluded from a general sextic.

Each entry pairs a self-dual resolution (multiplicities possibly symbolic)
with the curve invariants ``(d, g, e)`` forced by ``c1``.  The shapes encode
what is known about generators from regularity; that knowledge enters as
input, it is not re-derived here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .exact import Poly
from .gorenstein import CurveInvariants, GorensteinResolution

x, a, b, c, d = (Poly.var(s) for s in "xabcd")


@dataclass(frozen=True)
class Fixture:
    name: str
    c1: int
    res: GorensteinResolution
    inv: CurveInvariants
    label: str
    # values that should cancel from h0(N_C) after the Hilbert constraints
    free: Tuple[str, ...] = ()
    extra: Tuple[Poly, ...] = ()


def _ci(name, c1, degs, label):
    res = GorensteinResolution.complete_intersection(*degs)
    deg = degs[0] * degs[1] * degs[2]
    return Fixture(name, c1, res, CurveInvariants.from_bundle(c1, deg), label)


def _gor(name, c1, pairs, deg, label, free=(), extra=()):
    e = c1 + 1
    return Fixture(
        name, c1, GorensteinResolution(e, tuple(pairs)), CurveInvariants.from_bundle(c1, deg), label,
        tuple(free), tuple(extra),
    )


FIXTURES: Dict[str, Fixture] = {
    f.name: f
    for f in [
        _ci("line", -3, (1, 1, 1), "line"),
        _ci("conic", -2, (1, 1, 2), "conic"),
        _ci("plane_cubic", -1, (1, 1, 3), "plane cubic"),
        _ci("elliptic_quartic", -1, (1, 2, 2), "space curve c.i. type (2,2)"),
        _gor("elliptic_quintic", -1, [(2, 5)], 5, "elliptic non-degenerate quintic"),
        _ci("plane_quartic", 0, (1, 1, 4), "plane quartic"),
        _ci("canonical_sextic", 0, (1, 2, 3), "space curve c.i. type (2,3)"),
        _gor("canonical_genus5", 0, [(2, c), (3, x)], 8, "canonical genus 5, x cubics", free=("x",)),
        _gor("c1_2_d14", 2, [(2, 3), (5, 2)], 14, "c1=2, three quadrics"),
        _gor(
            "c1_2_d16", 2, [(2, 2), (3, a), (4, b), (5, x)], 16, "c1=2, two quadrics",
            free=("a", "b"),
        ),
        _gor("c1_2_d18", 2, [(2, 1), (3, 2), (4, b)], 18, "c1=2, one quadric", free=("b",)),
        _gor("c1_2_d20", 2, [(3, 4), (4, b)], 20, "c1=2, no quadrics", free=("b",)),
        _gor("c1_3_family", 3, [(3, x), (4, a), (5, b)], d, "c1=3, x = 30 - d cubics", free=("a",)),
        _gor("c1_4_d40", 4, [(4, 5), (5, x)], 40, "c1=4, quartics and quintics", free=("x",)),
        _gor("c1_5_d55", 5, [(5, 11)], 55, "c1=5, generated by quintics"),
    ]
}

# c1 = 1: h0(N_C) imported from the earlier quintic-threefold computation,
# not re-derived here (no Betti tables available); degrees below 11 are
# excluded by the same source.
C1_1_EXTERNAL_H0N: Dict[int, int] = {14: 56, 13: 53, 12: 50, 11: 47}
C1_1_MIN_DEGREE = 11

# the Grassmannian of lines in P^4
LINE_FAMILY_DIM = 6
