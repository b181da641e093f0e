"""Second Chern class constraints for normalized rank-2 ACM bundles.

For a bundle ``E`` with a section vanishing on a curve ``C`` we have
``0 -> O_X -> E -> I_C(c1) -> 0``, so ``h0(E(t)) = h0(O_X(t)) + u_{c1+t}``
where ``u_j = h0(I_C(j))``.  ACM kills ``h1`` and ``h2``, Serre duality turns
``h3`` into another ``h0``, and comparing with Riemann-Roch yields a linear
relation between ``c2`` and the ``u_j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .bundle_rr import (
    BundleInvariants,
    HypersurfaceContext,
    SEXTIC,
    chi_rank2,
    h0_OX,
    h3_dual_twist,
    madonna_range,
    twist,
)
from .exact import Poly, hdim

C2 = "c2"


def u_name(j: int) -> str:
    return f"u{j}"


@dataclass(frozen=True)
class IdealSectionSymbols:
    """``j -> h0(I_C(j))`` as zero or a named unknown.

    ``u_j`` vanishes for ``j <= 0`` since ``C`` is a nonempty curve.  With
    ``normalized=True`` it also vanishes for ``j <= c1 - 1``, because
    ``h0(E(-1)) = 0`` forces ``h0(I_C(c1 - 1)) = 0``.
    """

    c1: int
    normalized: bool = False

    def last_zero(self) -> int:
        return max(0, self.c1 - 1) if self.normalized else 0

    def __call__(self, j: int) -> Poly:
        if j <= self.last_zero():
            return Poly()
        return Poly.var(u_name(j))


def h0_E_twist(c1: int, ctx: HypersurfaceContext, t: int, syms: IdealSectionSymbols) -> Poly:
    return h0_OX(ctx, t) + syms(c1 + t)


class DegenerateTwistError(ValueError):
    pass


@dataclass(frozen=True)
class C2Relation:
    """``c2_coefficient * c2 = rhs`` with ``rhs`` linear in the ``u_j``."""

    c2_coefficient: Fraction
    rhs: Poly
    c1: int = 0
    r: int = 6
    t: int = 0

    def __post_init__(self):
        if not self.c2_coefficient:
            raise DegenerateTwistError("degenerate twist choice: c2 drops out")

    @property
    def constant(self) -> Fraction:
        return self.rhs.constant_term()

    @property
    def coefficients(self) -> Dict[str, Fraction]:
        return self.rhs.linear_parts()[1]

    def solved(self) -> Poly:
        """``c2`` as an expression in the unknowns."""
        return self.rhs / self.c2_coefficient

    def unknowns(self) -> List[str]:
        return sorted(self.rhs.variables(), key=lambda s: (len(s), s))

    def key(self):
        return (self.c2_coefficient, self.rhs)

    def restrict(self, syms: IdealSectionSymbols) -> "C2Relation":
        """Substitute the zeros forced by ``syms`` (e.g. normalization)."""
        zeros = {}
        for name in self.rhs.variables():
            j = int(name[1:])
            if syms(j).is_zero():
                zeros[name] = 0
        return C2Relation(self.c2_coefficient, self.rhs.subs(zeros), self.c1, self.r, self.t)

    def __str__(self):
        lhs = "c2" if self.c2_coefficient == 1 else f"{_frac(self.c2_coefficient)}*c2"
        return f"{lhs} = {self.rhs}"


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def derive_c2_relation(
    ctx: HypersurfaceContext, c1: int, t: int, normalized: bool = False
) -> C2Relation:
    syms = IdealSectionSymbols(c1, normalized)
    inv = BundleInvariants(c1, Poly.var(C2), ctx)
    rr = chi_rank2(twist(inv, t))
    m = h3_dual_twist(inv, t)
    direct = h0_E_twist(c1, ctx, t, syms) - h0_E_twist(c1, ctx, m, syms)
    # rr - direct = k*c2 + rest = 0
    parts = (rr - direct).collect(C2)
    if any(p > 1 for p in parts):
        raise AssertionError("Riemann-Roch should be linear in c2")
    k = parts.get(1, Poly()).constant_value() if 1 in parts else Fraction(0)
    rest = parts.get(0, Poly())
    if not k:
        raise DegenerateTwistError(f"degenerate twist choice t={t} for c1={c1}, r={ctx.r}")
    if k < 0:
        k, rest = -k, -rest
    return C2Relation(k, -rest, c1=c1, r=ctx.r, t=t)


def standard_twist_offset(k: int) -> int:
    """Offset ``s`` so that the twist is ``t = r - s`` when ``c1 = k - r``.

    These are the twists used case by case for ``k = c1 + r`` in 3..11.
    """
    table = {3: 3, 4: 3, 5: 4, 6: 6, 7: 5, 8: 6, 9: 6, 10: 7, 11: 7}
    try:
        return table[k]
    except KeyError:
        raise KeyError(f"no tabulated twist for c1 + r = {k}") from None


def standard_twist_rule(k: int) -> Callable[[int], int]:
    s = standard_twist_offset(k)
    return lambda r: r - s


def best_twist(ctx: HypersurfaceContext, c1: int, normalized: bool = False) -> int:
    """Scan ``t`` in ``[-r, r]`` for the relation with fewest surviving unknowns."""
    best = None
    for t in range(-ctx.r, ctx.r + 1):
        try:
            rel = derive_c2_relation(ctx, c1, t, normalized)
        except DegenerateTwistError:
            continue
        score = (len(rel.rhs.variables()), abs(t))
        if best is None or score < best[0]:
            best = (score, t)
    if best is None:
        raise DegenerateTwistError(f"no usable twist for c1={c1}, r={ctx.r}")
    return best[1]


def default_twist(ctx: HypersurfaceContext, c1: int) -> int:
    try:
        return standard_twist_rule(c1 + ctx.r)(ctx.r)
    except KeyError:
        return best_twist(ctx, c1)


@dataclass
class RIndependence:
    ok: bool
    relation: Optional[C2Relation]
    witness: Optional[Tuple[Tuple[int, C2Relation], Tuple[int, C2Relation]]] = None


def verify_r_independence(
    k: int, t_rule: Callable[[int], int], r_range: Iterable[int]
) -> RIndependence:
    rs = list(r_range)
    if not rs:
        raise ValueError("empty range of hypersurface degrees")
    first = None
    for r in rs:
        rel = derive_c2_relation(HypersurfaceContext(r), k - r, t_rule(r))
        if first is None:
            first = (r, rel)
        elif rel.key() != first[1].key():
            return RIndependence(False, None, (first, (r, rel)))
    return RIndependence(True, first[1])


# --------------------------------------------------------------------------
# admissibility filters: geometric facts recorded, not derived


@dataclass(frozen=True)
class Filter:
    name: str
    reason: str
    test: Callable[[int, Dict[str, int]], bool]

    def __call__(self, c2: int, u: Dict[str, int]) -> bool:
        return self.test(c2, u)


def _hyperplanes_ok(c2: int, u: Dict[str, int]) -> bool:
    u1 = u.get("u1", 0)
    # a curve spans at least a line; only a line lies in 3 hyperplanes
    if u1 > 3:
        return False
    return u1 < 3 or c2 == 1


HYPERPLANE_FILTER = Filter(
    "hyperplanes",
    "a curve lies in at most 3 independent hyperplanes, and in 3 only if it is a line",
    _hyperplanes_ok,
)


def _section_bounds(names: Sequence[str]) -> Dict[str, range]:
    # 0 <= h0(I_C(j)) <= h0(O(j)) - 1 since C is nonempty
    return {n: range(0, hdim(int(n[1:]))) for n in names}


def enumerate_solutions(
    rel: C2Relation,
    filters: Sequence[Filter] = (HYPERPLANE_FILTER,),
    monotone: bool = False,
) -> List[Tuple[int, Dict[str, int]]]:
    """All ``(c2, u)`` with integer ``c2 >= 1`` and ``u_j`` in their natural range."""
    names = rel.unknowns()
    bounds = _section_bounds(names)
    out = []
    for values in itertools.product(*(bounds[n] for n in names)):
        u = dict(zip(names, values))
        if monotone and any(
            u[a] > u[b] for a, b in zip(names, names[1:]) if int(a[1:]) < int(b[1:])
        ):
            continue
        c2 = rel.solved().eval(u) if names else rel.solved().constant_value()
        if c2.denominator != 1 or c2 < 1:
            continue
        c2 = int(c2)
        if all(f(c2, u) for f in filters):
            out.append((c2, u))
    return out


SEXTIC_LABELS = {
    (-3, 1): "line",
    (-2, 2): "conic",
    (-1, 3): "plane cubic",
    (-1, 4): "space curve c.i. type (2,2)",
    (-1, 5): "elliptic non-degenerate",
    (0, 4): "plane quartic",
    (0, 6): "space curve c.i. type (2,3)",
    (0, 8): "canonical non-degenerate",
}

SEXTIC_NOTES = {
    1: "h0 I_C(2) = 14 - c2",
    2: "non-degenerate, 2 h0 I_C(2) = 20 - c2",
    3: "h0 I_C(3) = 30 - c2",
    4: "generated by quintics",
    5: "smooth, irreducible, generated by quintics",
}


@dataclass
class CaseRow:
    c1: int
    t: int
    relation: C2Relation
    normalized: C2Relation
    values: Optional[List[int]] = None
    upper_bound: Optional[int] = None
    note: str = ""

    def c2_text(self) -> str:
        if self.values is not None:
            return ", ".join(str(v) for v in self.values)
        if self.upper_bound is not None:
            return f"<= {self.upper_bound}"
        return str(self.normalized.solved())


def _upper_bound(rel: C2Relation) -> Optional[int]:
    expr = rel.solved()
    _, coeffs = expr.linear_parts()
    if coeffs and all(v <= 0 for v in coeffs.values()):
        c = expr.constant_term()
        return c.numerator // c.denominator
    return None


def enumerate_cases(ctx: HypersurfaceContext = SEXTIC) -> List[CaseRow]:
    """One row per admissible ``c1``: raw relation, normalized relation, values."""
    rows = []
    for c1 in madonna_range(ctx):
        t = default_twist(ctx, c1)
        raw = derive_c2_relation(ctx, c1, t)
        norm = raw.restrict(IdealSectionSymbols(c1, normalized=True))
        row = CaseRow(c1, t, raw, norm)
        unknowns = norm.unknowns()
        if not unknowns or unknowns == ["u1"]:
            sols = enumerate_solutions(norm)
            row.values = sorted({c2 for c2, _ in sols})
        else:
            row.upper_bound = _upper_bound(norm)
        if ctx.r == 6:
            labels = [SEXTIC_LABELS[(c1, v)] for v in row.values or () if (c1, v) in SEXTIC_LABELS]
            row.note = "; ".join(labels) if labels else SEXTIC_NOTES.get(c1, "")
        rows.append(row)
    return rows


def enumerate_sextic_cases() -> List[CaseRow]:
    return enumerate_cases(SEXTIC)
