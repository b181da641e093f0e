"""Exact scalars and sparse polynomials over the rationals.

Scalars are :class:`fractions.Fraction` throughout.  :class:`Poly` is an
immutable sparse polynomial in named unknowns; it carries the symbolic Betti
multiplicities, second Chern classes and section counts that the rest of the
package manipulates.  :class:`IntPoly1` is a small univariate helper used for
Hilbert polynomials.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from math import comb
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]


class MissingUnknownError(KeyError):
    """Raised by :meth:`Poly.eval` when the assignment misses an unknown."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"no value assigned to unknown {self.name!r}"


class InconsistentSystemError(ValueError):
    pass


class ExpressionSyntaxError(ValueError):
    pass


def hdim(n: int) -> int:
    """Dimension of the space of degree-``n`` forms in five variables."""
    if n < 0:
        return 0
    return comb(n + 4, 4)


def binom4(m: int) -> int:
    """``C(m, 4)`` with graded-Hom semantics: zero for every ``m < 4``."""
    return hdim(m - 4)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps: Dict[str, int] = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _format_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(m: Monomial) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)


class Poly:
    """Immutable polynomial with :class:`Fraction` coefficients.

    >>> x = Poly.var("x")
    >>> str((x + 1) * (x - 1))
    '-1 + x^2'
    >>> (20 * x - 20 * x + 36).constant_value()
    Fraction(36, 1)
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            c = _as_fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls({(): value})

    @classmethod
    def var(cls, name: str) -> "Poly":
        if not isinstance(name, str) or not name:
            raise ValueError("unknown names must be nonempty strings")
        return cls({((name, 1),): 1})

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, str):
            return parse_poly(value)
        return cls.const(value)

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def variables(self) -> set:
        return {name for mono in self._terms for name, _ in mono}

    def degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get((), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def is_integer(self) -> bool:
        return self.is_constant() and self.constant_value().denominator == 1

    def linear_parts(self) -> Tuple[Fraction, Dict[str, Fraction]]:
        """Split a degree-1 polynomial into (constant, {name: coefficient})."""
        if self.degree() > 1:
            raise ValueError(f"{self} is not linear")
        coeffs = {mono[0][0]: c for mono, c in self._terms.items() if mono}
        return self.constant_term(), coeffs

    def coefficient(self, name: str) -> Fraction:
        """Coefficient of the bare unknown ``name`` (degree one term)."""
        return self._terms.get(((name, 1),), Fraction(0))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, str):
            return NotImplemented
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly({mono: -c for mono, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, str):
            return NotImplemented
        try:
            return self + (-Poly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, str):
            return NotImplemented
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mul_monomials(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _as_fraction(other.constant_value() if isinstance(other, Poly) else other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly({mono: v / c for mono, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # substitution -------------------------------------------------------

    def subs(self, assignment: Mapping[str, object]) -> "Poly":
        """Substitute scalars or polynomials for some unknowns."""
        if not assignment:
            return self
        values = {k: Poly.coerce(v) for k, v in assignment.items()}
        out = Poly()
        for mono, c in self._terms.items():
            piece = Poly.const(c)
            kept = []
            for name, e in mono:
                if name in values:
                    piece = piece * values[name] ** e
                else:
                    kept.append((name, e))
            if kept:
                piece = piece * Poly({tuple(kept): 1})
            out = out + piece
        return out

    def substitute(self, name: str, value) -> "Poly":
        return self.subs({name: value})

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        missing = sorted(self.variables() - set(assignment))
        if missing:
            raise MissingUnknownError(missing[0])
        return self.subs(assignment).constant_value()

    def collect(self, name: str) -> Dict[int, "Poly"]:
        """Coefficients of the powers of ``name``, as polynomials in the rest."""
        out: Dict[int, Dict[Monomial, Fraction]] = {}
        for mono, c in self._terms.items():
            power = 0
            rest = []
            for n, e in mono:
                if n == name:
                    power = e
                else:
                    rest.append((n, e))
            bucket = out.setdefault(power, {})
            bucket[tuple(rest)] = bucket.get(tuple(rest), Fraction(0)) + c
        return {k: Poly(v) for k, v in out.items()}

    # comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        # constant first, then lexicographic on (name, exponent) pairs
        for mono in sorted(self._terms, key=lambda m: (len(m) > 0, m)):
            yield mono, self._terms[mono]

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = _format_scalar(a)
            elif a == 1:
                body = _format_monomial(mono)
            else:
                body = f"{_format_scalar(a)}*{_format_monomial(mono)}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({str(self)!r})"


def as_int(p) -> int:
    """Return ``p`` as a Python int, raising if it is not an integer constant."""
    value = Poly.coerce(p).constant_value()
    if value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return value.numerator


# --------------------------------------------------------------------------
# parsing


_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def _walk(node) -> Poly:
    if isinstance(node, ast.Expression):
        return _walk(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.UAdd, ast.USub)):
        inner = _walk(node.operand)
        return inner if isinstance(node.op, ast.UAdd) else -inner
    if isinstance(node, ast.BinOp) and isinstance(node.op, _BINOPS):
        left, right = _walk(node.left), _walk(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise ExpressionSyntaxError("division only by nonzero constants")
            return left / right
        if not right.is_integer() or right.constant_value() < 0:
            raise ExpressionSyntaxError("exponents must be nonnegative integers")
        return left ** int(right.constant_value())
    raise ExpressionSyntaxError(f"unsupported syntax: {ast.dump(node)}")


def parse_poly(text: str) -> Poly:
    """Parse ``"a + 3*(27 - d)"``-style text; ``^`` and ``**`` both mean power."""
    try:
        # '^' would bind like XOR, below '+'
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionSyntaxError(f"cannot parse expression {text!r}") from exc
    return _walk(tree)


def parse_equation(text: str) -> Poly:
    """Parse ``"lhs = rhs"`` into the polynomial ``lhs - rhs`` (which must vanish)."""
    if text.count("=") != 1:
        raise ExpressionSyntaxError(f"expected exactly one '=' in {text!r}")
    lhs, rhs = text.split("=")
    return parse_poly(lhs) - parse_poly(rhs)


def format_value(p) -> int | str:
    """JSON-friendly form: a plain int when possible, else canonical text."""
    p = Poly.coerce(p)
    if p.is_integer():
        return int(p.constant_value())
    return str(p)


# --------------------------------------------------------------------------
# univariate polynomials in n


class IntPoly1:
    """Univariate polynomial in ``n`` with rational coefficients (low degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def __call__(self, n: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "IntPoly1"):
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly1(self.coeff(k) + other.coeff(k) for k in range(size))

    def __neg__(self):
        return IntPoly1(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly1"):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, IntPoly1):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return IntPoly1(out)
        c = _as_fraction(other)
        return IntPoly1(c * a for a in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, IntPoly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly1({[_format_scalar(c) for c in self.coeffs]})"


def binom4_poly(shift: int) -> IntPoly1:
    """``(n+s+4)(n+s+3)(n+s+2)(n+s+1)/24`` as a polynomial in ``n``."""
    out = IntPoly1([1])
    for k in range(1, 5):
        out = out * IntPoly1([shift + k, 1])
    return out * Fraction(1, 24)


# --------------------------------------------------------------------------
# linear systems


def solve_linear(equations: Iterable[Poly], prefer: Iterable[str] = ()) -> Dict[str, Poly]:
    """Gauss-Jordan elimination of linear equations ``eq == 0``.

    Returns a substitution eliminating one pivot unknown per independent
    equation; the pivots are chosen following ``prefer`` and then
    alphabetically.  Free unknowns stay symbolic on the right-hand sides.
    """
    prefer = list(prefer)
    rows = []
    for eq in equations:
        const, coeffs = Poly.coerce(eq).linear_parts()
        rows.append((const, coeffs))
    names = set()
    for _, coeffs in rows:
        names.update(coeffs)
    order = [v for v in prefer if v in names] + sorted(names - set(prefer))

    pivots: Dict[str, Tuple[Fraction, Dict[str, Fraction]]] = {}
    for const, coeffs in rows:
        coeffs = dict(coeffs)
        # substitute existing pivots (pivot = pconst + sum pcoeffs)
        for pv, (pconst, pcoeffs) in pivots.items():
            f = coeffs.pop(pv, Fraction(0))
            if f:
                const += f * pconst
                for k, v in pcoeffs.items():
                    coeffs[k] = coeffs.get(k, Fraction(0)) + f * v
        coeffs = {k: v for k, v in coeffs.items() if v}
        if not coeffs:
            if const:
                raise InconsistentSystemError(f"inconsistent linear system: {const} = 0")
            continue
        pv = next(v for v in order if v in coeffs)
        lead = coeffs.pop(pv)
        # pv = -(const + sum coeffs)/lead
        pconst = -const / lead
        pcoeffs = {k: -v / lead for k, v in coeffs.items()}
        # back-substitute into earlier pivots
        for qv, (qconst, qcoeffs) in list(pivots.items()):
            f = qcoeffs.pop(pv, Fraction(0))
            if f:
                qconst += f * pconst
                for k, v in pcoeffs.items():
                    qcoeffs[k] = qcoeffs.get(k, Fraction(0)) + f * v
                pivots[qv] = (qconst, {k: v for k, v in qcoeffs.items() if v})
        pivots[pv] = (pconst, pcoeffs)

    solution = {}
    for pv in order:
        if pv in pivots:
            const, coeffs = pivots[pv]
            expr = Poly.const(const)
            for k, v in coeffs.items():
                expr = expr + v * Poly.var(k)
            solution[pv] = expr
    return solution


def read_assignment(text: str) -> Dict[str, int]:
    """Parse ``key=integer`` lines (blank lines and ``#`` comments ignored)."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key=integer, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key.isidentifier():
            raise ValueError(f"line {lineno}: bad unknown name {key!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise ValueError(f"line {lineno}: {value!r} is not an integer") from None
    return out
