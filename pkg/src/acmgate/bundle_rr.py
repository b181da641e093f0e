"""Chern classes and Riemann-Roch for rank-2 bundles on hypersurfaces of P^4.

A smooth hypersurface ``X`` of degree ``r`` has ``Pic X = Z`` (for general
``X``), canonical sheaf ``O_X(r - 5)`` and no intermediate cohomology of line
bundles, so everything here reduces to exact arithmetic on ``(r, c1, c2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from .exact import Poly, hdim


@dataclass(frozen=True)
class HypersurfaceContext:
    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 3:
            raise ValueError(f"hypersurface degree must be an integer >= 3, got {self.r!r}")

    @property
    def canonical_twist(self) -> int:
        return self.r - 5

    @property
    def parameter_space_dim(self) -> int:
        """Dimension of the projective space of degree-``r`` hypersurfaces."""
        return hdim(self.r) - 1


SEXTIC = HypersurfaceContext(6)


@dataclass(frozen=True)
class BundleInvariants:
    c1: int
    c2: Poly = field(default_factory=lambda: Poly.var("c2"))
    context: HypersurfaceContext = SEXTIC

    def __post_init__(self):
        object.__setattr__(self, "c2", Poly.coerce(self.c2))

    def stability_level(self, b: int = 0) -> int:
        """``2b - c1``: semistable iff <= 0, stable iff < 0."""
        return 2 * b - self.c1


def twist(inv: BundleInvariants, n: int) -> BundleInvariants:
    r = inv.context.r
    return BundleInvariants(
        c1=inv.c1 + 2 * n,
        c2=inv.c2 + r * n * inv.c1 + r * n * n,
        context=inv.context,
    )


def chi_rank2(inv: BundleInvariants) -> Poly:
    r = Fraction(inv.context.r)
    c1 = Fraction(inv.c1)
    c2 = inv.c2
    constant = (
        r * c1**3 / 6
        + (5 - r) * r * c1**2 / 4
        + r * c1 * (2 * r**2 - 15 * r + 35) / 12
        + r * (-(r**3) + 10 * r**2 - 35 * r + 50) / 12
    )
    return c2 * (-(5 - r) / 2 - c1 / 2) + constant


def chi_rank2_sextic(c1: int, c2) -> Poly:
    """The degree-6 specialization, written out separately as a cross-check."""
    c1 = Fraction(c1)
    c2 = Poly.coerce(c2)
    return c2 * (Fraction(1, 2) - c1 / 2) + (c1**3 - Fraction(3, 2) * c1**2 + Fraction(17, 2) * c1 - 8)


def h0_OX(ctx: HypersurfaceContext, n: int) -> int:
    return hdim(n) - hdim(n - ctx.r)


def chi_line_bundle(ctx: HypersurfaceContext, a: int) -> int:
    # h1 = h2 = 0 on X; h3 by Serre duality
    return h0_OX(ctx, a) - h0_OX(ctx, ctx.r - 5 - a)


def h3_dual_twist(inv: BundleInvariants, n: int) -> int:
    """Twist ``m`` with ``h^3(E(n)) = h^0(E(m))``."""
    return -inv.c1 - n + inv.context.r - 5


def madonna_range(ctx: HypersurfaceContext) -> List[int]:
    """Possible ``c1`` of an indecomposable normalized rank-2 ACM bundle."""
    return list(range(3 - ctx.r, ctx.r))
