"""Linkage of curves in P^4 at the level of graded Betti numbers.

A complex is three lists of free summands ``O(-twist)^mult`` resolving a curve
ideal.  Linking ``C`` inside a complete intersection ``X`` of type
``(d1, d2, d3)``, ``s = d1 + d2 + d3``, dualizes the mapping cone of the
Koszul complex of ``X`` into the resolution of ``C``:

    0 -> F1^v(-s) -> F2^v(-s) + K1^v(-s) -> F3^v(-s) + K2^v(-s) -> I_C' -> 0

The result is usually not minimal.  Which summands split off is a
geometric question, so :func:`cancel_pair` is left to the caller.

Containment ``C ⊂ X`` cannot be checked from Betti data; every function
here trusts the caller on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exact import InconsistentSystemError, Poly, hdim, solve_linear
from .gorenstein import GorensteinResolution, hilbert_coefficients

Term = Tuple[int, Poly]


def _normalize(entries: Iterable[Tuple[int, object]]) -> Tuple[Term, ...]:
    merged: Dict[int, Poly] = {}
    for t, m in entries:
        merged[int(t)] = merged.get(int(t), Poly()) + Poly.coerce(m)
    return tuple((t, m) for t, m in sorted(merged.items()) if not m.is_zero())


@dataclass(frozen=True)
class GradedComplex:
    F1: Tuple[Term, ...]
    F2: Tuple[Term, ...]
    F3: Tuple[Term, ...]

    def __init__(self, F1=(), F2=(), F3=()):
        object.__setattr__(self, "F1", _normalize(F1))
        object.__setattr__(self, "F2", _normalize(F2))
        object.__setattr__(self, "F3", _normalize(F3))

    @property
    def terms(self) -> Tuple[Tuple[Term, ...], ...]:
        return (self.F1, self.F2, self.F3)

    def mult(self, position: int, twist: int) -> Poly:
        for t, m in self.terms[position - 1]:
            if t == twist:
                return m
        return Poly()

    def rank(self) -> Poly:
        return sum((m for _, m in self.F1), Poly()) - sum((m for _, m in self.F2), Poly()) + sum(
            (m for _, m in self.F3), Poly()
        )

    def subs(self, assignment: Mapping[str, object]) -> "GradedComplex":
        return GradedComplex(*([(t, m.subs(assignment)) for t, m in F] for F in self.terms))

    def variables(self) -> set:
        return {v for F in self.terms for _, m in F for v in m.variables()}

    def h0_ideal(self, n: int) -> Poly:
        out = Poly()
        for sign, F in zip((1, -1, 1), self.terms):
            for t, m in F:
                out = out + sign * m * hdim(n - t)
        return out

    def hilbert_coefficients(self) -> List[Poly]:
        return hilbert_coefficients(
            (t, m, sign) for sign, F in zip((1, -1, 1), self.terms) for t, m in F
        )

    def __str__(self):
        def show(F):
            if not F:
                return "0"
            parts = []
            for t, m in sorted(F, reverse=True):
                s = f"O(-{t})" if t >= 0 else f"O({-t})"
                if m != 1:
                    ms = str(m)
                    s += f"^{ms}" if m.is_constant() or len(m.terms) == 1 and " " not in ms else f"^({ms})"
                parts.append(s)
            return " + ".join(parts)

        return f"0 -> {show(self.F3)} -> {show(self.F2)} -> {show(self.F1)} -> I -> 0"


@dataclass(frozen=True)
class CIType:
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        if min(self.degrees) < 1:
            raise ValueError(f"complete intersection degrees must be >= 1, got {self.degrees}")

    @property
    def degrees(self) -> Tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    @property
    def s(self) -> int:
        return self.d1 + self.d2 + self.d3

    @property
    def degree(self) -> int:
        return self.d1 * self.d2 * self.d3


def _ci(ci) -> CIType:
    return ci if isinstance(ci, CIType) else CIType(*ci)


def koszul_resolution(ci) -> GradedComplex:
    ci = _ci(ci)
    d1, d2, d3 = ci.degrees
    return GradedComplex(
        [(d1, 1), (d2, 1), (d3, 1)],
        [(d1 + d2, 1), (d1 + d3, 1), (d2 + d3, 1)],
        [(d1 + d2 + d3, 1)],
    )


def _as_complex(res) -> GradedComplex:
    if isinstance(res, GorensteinResolution):
        return res.to_complex()
    return res


def link(resC, ci) -> GradedComplex:
    """Resolution (possibly non-minimal) of the curve residual to ``C`` in ``ci``."""
    cx = _as_complex(resC)
    ci = _ci(ci)
    if not cx.F1:
        raise ValueError("not a curve resolution: no generators")
    rank = cx.rank()
    if not (rank.is_constant() and rank.constant_value() == 1):
        raise ValueError(f"not a curve resolution: alternating rank is {rank}, expected 1")
    s = ci.s
    K = koszul_resolution(ci)

    def dual(F):
        return [(s - t, m) for t, m in F]

    return GradedComplex(
        dual(cx.F3) + dual(K.F2),
        dual(cx.F2) + dual(K.F1),
        dual(cx.F1),
    )


def cancel_pair(cx: GradedComplex, position: Tuple[int, int], twist: int, count) -> GradedComplex:
    """Split off ``count`` trivial summands ``O(-twist)`` from adjacent terms.

    ``position`` is ``(1, 2)`` or ``(2, 3)``.  Symbolic counts are accepted;
    the multiplicity check is then only done when both sides are constant.
    """
    cx = _as_complex(cx)
    if tuple(position) not in ((1, 2), (2, 3)):
        raise ValueError(f"positions must be adjacent, got {position}")
    count = Poly.coerce(count)
    if count.is_zero():
        return cx
    terms = [list(F) for F in cx.terms]
    for p in position:
        have = cx.mult(p, twist)
        left = have - count
        if left.is_constant() and left.constant_value() < 0:
            raise ValueError(
                f"insufficient multiplicity: F{p} has {have} copies of O(-{twist}), need {count}"
            )
        terms[p - 1].append((twist, -count))
    return GradedComplex(*terms)


class NotACurveComplexError(ValueError):
    pass


def degree_genus(cx) -> Tuple[Poly, Poly]:
    """Read ``(d, g)`` off the Hilbert polynomial: ``hdim(n) - P_I(n) = d n + 1 - g``."""
    cx = _as_complex(cx)
    ideal = cx.hilbert_coefficients()
    ambient = hilbert_coefficients([(0, Poly.const(1), 1)])
    residual = [p - q for p, q in zip(ambient, ideal)]
    if any(not residual[k].is_zero() for k in (2, 3, 4)):
        raise NotACurveComplexError("not a curve complex")
    return residual[1], 1 - residual[0]


# --------------------------------------------------------------------------
# matching a numeric complex against a symbolic self-dual shape


def match_shape(cx: GradedComplex, shape: GorensteinResolution) -> List[Dict[str, int]]:
    """Assignments making ``shape`` a reduction of the numeric complex ``cx``.

    A non-minimal resolution differs from the minimal one by trivial pairs
    in adjacent terms at equal twist.  We enumerate those cancellations,
    equate what is left with the (symbolic) self-dual shape and keep the
    nonnegative integer solutions that pin every unknown.
    """
    if cx.variables():
        raise ValueError("match_shape needs a numeric complex")
    target = shape.to_complex()
    counts = {(p, t): int(m.constant_value()) for p in (1, 2, 3) for t, m in cx.terms[p - 1]}
    slots = []
    for pos in ((1, 2), (2, 3)):
        shared = {t for (p, t) in counts if p == pos[0]} & {t for (p, t) in counts if p == pos[1]}
        for t in sorted(shared):
            slots.append((pos, t, min(counts[(pos[0], t)], counts[(pos[1], t)])))
    names = shape.unknowns()
    found = []
    for ks in itertools.product(*(range(hi + 1) for _, _, hi in slots)):
        reduced = cx
        for (pos, t, _), k in zip(slots, ks):
            reduced = cancel_pair(reduced, pos, t, k)
        eqs = []
        for p in (1, 2, 3):
            twists = {t for t, _ in reduced.terms[p - 1]} | {t for t, _ in target.terms[p - 1]}
            for t in twists:
                eqs.append(target.mult(p, t) - reduced.mult(p, t))
        try:
            sol = solve_linear(eqs, names)
        except InconsistentSystemError:
            continue
        if set(sol) != set(names) or not all(v.is_integer() for v in sol.values()):
            continue
        values = {k: int(v.constant_value()) for k, v in sol.items()}
        if all(v >= 0 for v in values.values()) and values not in found:
            found.append(values)
    return found
