"""JSON forms of resolutions and complexes.

Resolution file::

    {"e": 4,
     "pairs": [{"twist": 3, "mult": "x"}, {"twist": 4, "mult": "a"}],
     "invariants": {"d": "d", "g": "1 + 2*d"},
     "constraints": ["a+3*(27-d)=b"]}

Complex file::

    {"terms": [[{"twist": 2, "mult": 1}], [...], [...]]}

Multiplicities and invariants are ints or polynomial expressions in named
unknowns.  Constraint strings are kept verbatim so that a loaded file dumps
back to the same text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .exact import ExpressionSyntaxError, Poly, format_value, parse_equation
from .gorenstein import CurveInvariants, GorensteinResolution
from .liaison import GradedComplex


class SchemaError(ValueError):
    pass


def _value(raw, where: str) -> Poly:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise SchemaError(f"{where}: expected int or expression string, got {raw!r}")
    try:
        return Poly.coerce(raw)
    except ExpressionSyntaxError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _twist(raw, where: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise SchemaError(f"{where}: twist must be an integer, got {raw!r}")
    return raw


def _terms(raw, where: str) -> List[Tuple[int, Poly]]:
    if not isinstance(raw, list):
        raise SchemaError(f"{where}: expected a list of summands")
    out = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict) or set(item) != {"twist", "mult"}:
            raise SchemaError(f"{where}[{i}]: expected {{'twist', 'mult'}}")
        out.append((_twist(item["twist"], f"{where}[{i}].twist"), _value(item["mult"], f"{where}[{i}].mult")))
    return out


def _dump_terms(terms) -> list:
    return [{"twist": t, "mult": format_value(m)} for t, m in terms]


@dataclass(frozen=True)
class ResolutionFile:
    res: GorensteinResolution
    inv: Optional[CurveInvariants] = None
    constraints: Tuple[str, ...] = ()

    def constraint_polys(self) -> List[Poly]:
        try:
            return [parse_equation(c) for c in self.constraints]
        except ExpressionSyntaxError as exc:
            raise SchemaError(f"constraints: {exc}") from None

    def to_json(self) -> dict:
        out = {"e": self.res.e, "pairs": _dump_terms(self.res.pairs)}
        if self.inv is not None:
            out["invariants"] = {"d": format_value(self.inv.d), "g": format_value(self.inv.g)}
        if self.constraints:
            out["constraints"] = list(self.constraints)
        return out

    @classmethod
    def from_json(cls, data) -> "ResolutionFile":
        if not isinstance(data, dict):
            raise SchemaError("resolution file must be a JSON object")
        unknown = set(data) - {"e", "pairs", "invariants", "constraints"}
        if unknown:
            raise SchemaError(f"unexpected keys: {sorted(unknown)}")
        if "e" not in data or "pairs" not in data:
            raise SchemaError("resolution file needs 'e' and 'pairs'")
        e = _twist(data["e"], "e")
        res = GorensteinResolution(e, tuple(_terms(data["pairs"], "pairs")))
        inv = None
        if "invariants" in data:
            raw = data["invariants"]
            if not isinstance(raw, dict) or set(raw) != {"d", "g"}:
                raise SchemaError("invariants: expected {'d', 'g'}")
            try:
                inv = CurveInvariants(_value(raw["d"], "invariants.d"), _value(raw["g"], "invariants.g"), e)
            except SchemaError:
                raise
            except ValueError as exc:
                raise SchemaError(f"invariants: {exc}") from None
        constraints = data.get("constraints", [])
        if not isinstance(constraints, list) or not all(isinstance(c, str) for c in constraints):
            raise SchemaError("constraints: expected a list of strings")
        out = cls(res, inv, tuple(constraints))
        out.constraint_polys()
        return out


def complex_to_json(cx: GradedComplex) -> dict:
    return {"terms": [_dump_terms(F) for F in cx.terms]}


def complex_from_json(data) -> GradedComplex:
    if not isinstance(data, dict) or set(data) != {"terms"}:
        raise SchemaError("complex file must be {'terms': [F1, F2, F3]}")
    terms = data["terms"]
    if not isinstance(terms, list) or len(terms) != 3:
        raise SchemaError("terms: expected exactly three lists")
    return GradedComplex(*(_terms(F, f"terms[{i}]") for i, F in enumerate(terms)))


def dumps(obj) -> str:
    if isinstance(obj, ResolutionFile):
        data = obj.to_json()
    elif isinstance(obj, GradedComplex):
        data = complex_to_json(obj)
    elif isinstance(obj, GorensteinResolution):
        data = ResolutionFile(obj).to_json()
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(data, indent=2) + "\n"


def loads(text: str):
    """Parse either schema; complexes are recognized by their ``terms`` key."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from None
    if isinstance(data, dict) and "terms" in data:
        return complex_from_json(data)
    return ResolutionFile.from_json(data)
