"""Arithmetically Gorenstein curves in P^4 from their Betti numbers.

An ``e``-subcanonical ACM curve has a self-dual resolution

    0 -> O(-e-5) -> (+) O(-b_i) -> (+) O(-a_i) -> I_C -> 0,   a_i + b_i = e + 5,

so a list of generator twists with (possibly symbolic) multiplicities is all
that is stored.  From it we get ``h0(I_C(n))``, ``h0(O_C(n))``, the
Kleppe-Miro-Roig count for ``h0(N_C)`` and the flag-scheme dimension gate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact import (
    InconsistentSystemError,
    Poly,
    binom4,
    binom4_poly,
    hdim,
    solve_linear,
)

SEXTIC_AMBIENT_DIM = hdim(6) - 1


class IncompatibleShapeError(ValueError):
    pass


@dataclass(frozen=True)
class CurveInvariants:
    d: Poly
    g: Poly
    e: int

    def __post_init__(self):
        d, g = Poly.coerce(self.d), Poly.coerce(self.g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "g", g)
        if not (2 * g - 2 - self.e * d).is_zero():
            raise ValueError(f"2g - 2 != e*d for d={d}, g={g}, e={self.e}")
        if d.is_constant() and d.constant_value() < 1:
            raise ValueError("curve degree must be positive")

    @classmethod
    def from_bundle(cls, c1: int, d, r: int = 6) -> "CurveInvariants":
        """Zero locus of a section of a rank-2 bundle: ``e = c1 + r - 5``."""
        e = c1 + r - 5
        d = Poly.coerce(d)
        return cls(d, 1 + d * Fraction(e, 2), e)


@dataclass(frozen=True)
class GorensteinResolution:
    """Generators ``(a, mult)``; the paired syzygy of twist ``a`` sits at ``e + 5 - a``."""

    e: int
    pairs: Tuple[Tuple[int, Poly], ...] = ()

    def __post_init__(self):
        pairs = tuple((int(a), Poly.coerce(m)) for a, m in self.pairs)
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def complete_intersection(cls, d1: int, d2: int, d3: int) -> "GorensteinResolution":
        return cls(d1 + d2 + d3 - 5, tuple((d, Poly.const(1)) for d in (d1, d2, d3)))

    @property
    def top(self) -> int:
        return self.e + 5

    def syzygy(self, a: int) -> int:
        return self.top - a

    def unknowns(self) -> List[str]:
        seen = []
        for _, m in self.pairs:
            for v in sorted(m.variables()):
                if v not in seen:
                    seen.append(v)
        return seen

    def subs(self, assignment: Mapping[str, object]) -> "GorensteinResolution":
        return GorensteinResolution(self.e, tuple((a, m.subs(assignment)) for a, m in self.pairs))

    def sorted_pairs(self) -> List[Tuple[int, Poly]]:
        # stable: ties keep insertion order
        return sorted(self.pairs, key=lambda p: p[0])

    def to_complex(self):
        from .liaison import GradedComplex

        return GradedComplex(
            [(a, m) for a, m in self.pairs],
            [(self.syzygy(a), m) for a, m in self.pairs],
            [(self.top, Poly.const(1))],
        )


def h0_ideal(res: GorensteinResolution, n: int) -> Poly:
    total = Poly.const(hdim(n - res.top))
    for a, m in res.pairs:
        total = total + m * (hdim(n - a) - hdim(n - res.syzygy(a)))
    return total


def h0_curve(res: GorensteinResolution, inv: Optional[CurveInvariants], n: int) -> Poly:
    # ACM: h1(I_C(n)) = 0, so sections restrict onto O_C(n)
    return hdim(n) - h0_ideal(res, n)


def h0_curve_from_invariants(inv: CurveInvariants, n: int) -> Poly:
    if n < 0:
        return Poly()
    if n <= inv.e:
        raise ValueError("special range: resolution required")
    return n * inv.d + 1 - inv.g


def km_h0_normal(res: GorensteinResolution, inv: Optional[CurveInvariants] = None) -> Poly:
    """``h0(N_C)`` by the Kleppe-Miro-Roig formula, multiplicities kept symbolic.

    Summands are grouped in blocks of equal generator twist, sorted by
    ascending ``a``; ordered pairs ``i < j`` inside one block number
    ``m(m-1)/2`` and across blocks ``m_i m_j``.
    """
    pairs = res.sorted_pairs()
    total = Poly()
    for a, m in pairs:
        total = total + m * (h0_curve(res, inv, a) - binom4(a + 4))
    for i, (ai, mi) in enumerate(pairs):
        for j in range(i, len(pairs)):
            aj, mj = pairs[j]
            count = mi * (mi - 1) / 2 if i == j else mi * mj
            bj = res.syzygy(aj)
            total = total + count * (binom4(-ai + bj + 4) - binom4(ai - bj + 4))
    return total


# --------------------------------------------------------------------------
# Hilbert polynomial constraints


def hilbert_coefficients(terms: Iterable[Tuple[int, Poly, int]]) -> List[Poly]:
    """Coefficients (``n^0..n^4``) of ``sum sign * mult * hdim(n - twist)`` for large ``n``."""
    coeffs = [Poly() for _ in range(5)]
    for twist, mult, sign in terms:
        p = binom4_poly(-twist)
        for k in range(5):
            c = p.coeff(k)
            if c:
                coeffs[k] = coeffs[k] + sign * c * mult
    return coeffs


def ideal_hilbert_coefficients(res: GorensteinResolution) -> List[Poly]:
    terms = [(res.top, Poly.const(1), 1)]
    for a, m in res.pairs:
        terms.append((a, m, 1))
        terms.append((res.syzygy(a), m, -1))
    return hilbert_coefficients(terms)


def _curve_polynomial(inv: CurveInvariants) -> List[Poly]:
    """Hilbert polynomial of ``I_C``: ``hdim(n) - (d n + 1 - g)``."""
    total = hilbert_coefficients([(0, Poly.const(1), 1)])
    total[0] = total[0] - (1 - inv.g)
    total[1] = total[1] - inv.d
    return total


def hilbert_equations(res: GorensteinResolution, inv: CurveInvariants) -> List[Poly]:
    if res.e != inv.e:
        raise IncompatibleShapeError(
            f"resolution shape incompatible with (d,g,e): e={res.e} vs {inv.e}"
        )
    lhs = ideal_hilbert_coefficients(res)
    rhs = _curve_polynomial(inv)
    return [p - q for p, q in zip(lhs, rhs) if not (p - q).is_zero()]


def solve_hilbert(
    res: GorensteinResolution,
    inv: CurveInvariants,
    extra: Sequence[Poly] = (),
    prefer: Sequence[str] = (),
) -> Dict[str, Poly]:
    """Substitution for the unknowns pinned down by the Hilbert polynomial."""
    order = list(prefer) + res.unknowns()
    for v in sorted(inv.d.variables() | inv.g.variables()):
        if v not in order:
            order.append(v)
    try:
        return solve_linear(list(hilbert_equations(res, inv)) + list(extra), order)
    except InconsistentSystemError:
        raise IncompatibleShapeError("resolution shape incompatible with (d,g,e)") from None


def hilbert_constraints(
    res: GorensteinResolution,
    inv: CurveInvariants,
    extra: Sequence[Poly] = (),
    prefer: Sequence[str] = (),
) -> List[Poly]:
    """Reduced linear constraints ``pivot - expression == 0`` on the unknowns."""
    sol = solve_hilbert(res, inv, extra, prefer)
    return [Poly.var(k) - v for k, v in sol.items()]


# --------------------------------------------------------------------------
# dimension gate

DOMINANT_IMPOSSIBLE = "dominant-impossible"
INCONCLUSIVE = "inconclusive"


@dataclass
class GateReport:
    h0N: Poly
    h0I6: Poly
    bound: Poly
    ambient_dim: int
    verdict: str
    substitution: Dict[str, Poly] = field(default_factory=dict)

    @property
    def margin(self) -> Poly:
        return self.ambient_dim - self.bound


def flag_gate(
    res: GorensteinResolution,
    inv: CurveInvariants,
    ambient_dim: int = SEXTIC_AMBIENT_DIM,
    degree: int = 6,
    extra: Sequence[Poly] = (),
    domains: Optional[Mapping[str, Iterable[int]]] = None,
    prefer: Sequence[str] = (),
) -> GateReport:
    """``h0(N_C) + h0(I_C(degree)) - 1`` against the space of hypersurfaces.

    For a degree other than 6 pass ``ambient_dim = hdim(degree) - 1``.
    Leftover unknowns make the verdict inconclusive unless every point of
    the supplied finite ``domains`` passes.
    """
    if not res.pairs or all(m.is_zero() for _, m in res.pairs):
        raise ValueError("no generators")
    sol = solve_hilbert(res, inv, extra, prefer)
    h0N = km_h0_normal(res, inv).subs(sol)
    h0I = h0_ideal(res, degree).subs(sol)
    bound = h0N + h0I - 1
    if bound.is_constant():
        ok = bound.constant_value() < ambient_dim
    elif domains is not None and bound.variables() <= set(domains):
        names = sorted(bound.variables())
        ok = all(
            bound.eval(dict(zip(names, vals))) < ambient_dim
            for vals in itertools.product(*(list(domains[n]) for n in names))
        )
    else:
        ok = False
    verdict = DOMINANT_IMPOSSIBLE if ok else INCONCLUSIVE
    return GateReport(h0N, h0I, bound, ambient_dim, verdict, sol)


def gate_threshold(bound: Poly, name: str, ambient_dim: int, search: Iterable[int]) -> Optional[int]:
    """Smallest value in ``search`` from which ``bound < ambient_dim`` holds throughout."""
    values = list(search)
    good = [bound.eval({name: v}) < ambient_dim for v in values]
    for i, v in enumerate(values):
        if all(good[i:]):
            return v
    return None
