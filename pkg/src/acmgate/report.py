"""Tables reproduced from scratch: Chern class cases and dimension gates."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import List, Sequence

from .bundle_rr import SEXTIC, HypersurfaceContext, chi_rank2_sextic, madonna_range
from .case_engine import enumerate_cases
from .catalog import C1_1_EXTERNAL_H0N, C1_1_MIN_DEGREE, FIXTURES, LINE_FAMILY_DIM
from .exact import Poly, format_value, hdim
from .gorenstein import (
    CurveInvariants,
    GorensteinResolution,
    SEXTIC_AMBIENT_DIM,
    flag_gate,
    gate_threshold,
    h0_curve_from_invariants,
    h0_ideal,
    solve_hilbert,
)
from .liaison import cancel_pair, degree_genus, koszul_resolution, link, match_shape

EXTERNAL = "external input"


@dataclass
class ReportTable:
    title: str
    columns: List[str]
    rows: List[List[str]] = field(default_factory=list)

    def add(self, *cells):
        if len(cells) != len(self.columns):
            raise ValueError(f"row has {len(cells)} cells, table has {len(self.columns)} columns")
        self.rows.append([_cell(c) for c in cells])

    def to_markdown(self) -> str:
        lines = [f"### {self.title}", ""]
        lines.append("| " + " | ".join(self.columns) + " |")
        lines.append("|" + "|".join("---" for _ in self.columns) + "|")
        for row in self.rows:
            lines.append("| " + " | ".join(row) + " |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["table"] + self.columns)
        for row in self.rows:
            w.writerow([self.title] + row)
        return buf.getvalue()


def _cell(value) -> str:
    if isinstance(value, Poly):
        return str(format_value(value))
    return str(value)


def render(tables: Sequence[ReportTable], fmt: str = "md") -> str:
    if fmt == "md":
        return "\n".join(t.to_markdown() for t in tables)
    if fmt == "csv":
        out = []
        for i, t in enumerate(tables):
            text = t.to_csv()
            out.append(text if i == 0 else text.split("\n", 1)[1])
        return "".join(out)
    raise ValueError(f"unknown format {fmt!r}")


def classification_table(ctx: HypersurfaceContext = SEXTIC) -> ReportTable:
    table = ReportTable(
        f"Normalized rank-2 ACM bundles on a degree-{ctx.r} hypersurface",
        ["c1", "twist", "relation", "c2 (normalized)", "c2 values", "information", "provenance"],
    )
    for row in enumerate_cases(ctx):
        table.add(
            row.c1,
            row.t,
            f"c2 = {row.relation.solved()}",
            f"c2 = {row.normalized.solved()}",
            row.c2_text(),
            row.note,
            f"chi comparison at E({row.t}), c1 + r = {row.c1 + ctx.r}",
        )
    return table


def _gate_row(table, name, provenance, d_text=None):
    f = FIXTURES[name]
    rep = flag_gate(f.res, f.inv)
    table.add(
        f.c1, f.label, d_text or f.inv.d, f.inv.g, rep.h0N, rep.h0I6, rep.bound, rep.verdict, provenance
    )
    return rep


def gate_table() -> ReportTable:
    table = ReportTable(
        "Hilbert flag dimension gate on a general sextic (ambient dimension 209)",
        ["c1", "curve", "d", "g", "h0(N_C)", "h0(I_C(6))", "h0(N)+h0(I(6))-1", "verdict", "provenance"],
    )
    _gate_row(table, "line", "no lines: 6-dim family, 202-dim sextics through each, incidence 208")
    _gate_row(table, "conic", "no conics (derived)")
    _gate_row(table, "plane_cubic", "c1=-1, degree 3")
    _gate_row(table, "elliptic_quartic", "c1=-1, degree 4")
    _gate_row(table, "elliptic_quintic", "c1=-1, degree 5")
    _gate_row(table, "plane_quartic", "c1=0, degree 4 (derived)")
    _gate_row(table, "canonical_sextic", "c1=0, degree 6 (derived)")
    _gate_row(table, "canonical_genus5", "c1=0, degree 8, x cancels")

    for deg in sorted(C1_1_EXTERNAL_H0N, reverse=True):
        inv = CurveInvariants.from_bundle(1, deg)
        h0I6 = hdim(6) - h0_curve_from_invariants(inv, 6)
        h0N = C1_1_EXTERNAL_H0N[deg]
        bound = h0N + h0I6 - 1
        verdict = "dominant-impossible" if bound.constant_value() < SEXTIC_AMBIENT_DIM else "inconclusive"
        table.add(
            1, "c1=1, d = 14 - h0 I_C(2)", deg, inv.g, f"{h0N} ({EXTERNAL})", h0I6, bound, verdict,
            f"{EXTERNAL}: h0(N_C) from the quintic-threefold computation; degree >= {C1_1_MIN_DEGREE}",
        )

    _gate_row(table, "c1_2_d14", "c1=2, degree 14 (close: 208)")
    _gate_row(table, "c1_2_d16", "c1=2, degree 16, a = x")
    _gate_row(table, "c1_2_d18", "c1=2, degree 18")
    _gate_row(table, "c1_2_d20", "c1=2, degree 20")

    f = FIXTURES["c1_3_family"]
    rep = flag_gate(f.res, f.inv, prefer=("x", "b"))
    threshold = gate_threshold(rep.bound, "d", SEXTIC_AMBIENT_DIM, range(1, 31))
    table.add(
        3, f.label, "d", f.inv.g, rep.h0N, rep.h0I6, rep.bound,
        f"dominant-impossible iff d >= {threshold}",
        "c1=3 master formulas, a + 3(27 - d) = b, x = 30 - d",
    )
    _gate_row(table, "c1_4_d40", "c1=4, x cancels")
    _gate_row(table, "c1_5_d55", "c1=5, resolution forced")
    return table


def c1_2_back_propagation():
    """Plane curves ``C''`` tried at the end of the (2,2,5), (1,2,5) chain."""
    c, a, b, x = (Poly.var(s) for s in "cabx")
    shape = GorensteinResolution(3, ((2, c), (3, a), (4, b), (5, x)))
    out = []
    for k in (2, 4):
        plane = koszul_resolution((1, 1, k))
        back = link(link(plane, (1, 2, 5)), (2, 2, 5))
        out.append((k, degree_genus(back), match_shape(back, shape)))
    return out


def c1_3_chain():
    """The (3,3,5), (2,3,5), (2,2,4) chain with the splittings used in the argument."""
    f = FIXTURES["c1_3_family"]
    eps = Poly.var("eps")
    # the two cubics and one quintic of the c.i. are minimal generators of C
    first = link(f.res, (3, 3, 5))
    first = cancel_pair(cancel_pair(first, (2, 3), 8, 2), (2, 3), 6, 1)
    second = link(first, (2, 3, 5))
    # eps in {0, 1} is left open
    for pos, t, k in (((2, 3), 8, 1), ((2, 3), 7, 1), ((2, 3), 5, 1), ((1, 2), 5, 1), ((1, 2), 3, 1 - eps)):
        second = cancel_pair(second, pos, t, k)
    third = link(second, (2, 2, 4))
    return [("C'", (3, 3, 5), first), ("C''", (2, 3, 5), second), ("C'''", (2, 2, 4), third)]


def liaison_table() -> ReportTable:
    table = ReportTable(
        "Linkage chains",
        ["chain", "step", "resolution", "degree", "genus", "provenance"],
    )
    for k, (deg, genus), sols in c1_2_back_propagation():
        if sols:
            s = sols[0]
            verdict = f"forces c={s['c']}, x={s['x']}, a={s['a']}, b={s['b']}"
        else:
            verdict = "no self-dual resolution"
        table.add(
            "c1=2, c >= 3", f"plane curve of degree {k} linked back by (1,2,5), (2,2,5)",
            verdict, deg, genus, "degree of C'' is 4 and x=2, a=b=0",
        )
    f = FIXTURES["c1_3_family"]
    sol = solve_hilbert(f.res, f.inv, prefer=("x", "b"))
    for name, ci, cx in c1_3_chain():
        deg, genus = degree_genus(cx.subs(sol))
        table.add("c1=3, d < 24", f"{name} in c.i. {ci}", str(cx), deg, genus, "resolutions of I(C'), I(C'')")
    return table


def constants_table() -> ReportTable:
    table = ReportTable("Constants", ["quantity", "value", "provenance"])
    table.add("h0(O_P4(6))", hdim(6), "sextics in P^4")
    table.add("dim of the space of sextics", SEXTIC_AMBIENT_DIM, "P^209")
    table.add("admissible c1 for r=6", " ".join(str(v) for v in madonna_range(SEXTIC)), "2 - r < c1 < r")
    table.add("chi(E) at c1 = c2 = 0, r = 6", chi_rank2_sextic(0, 0), "constant term -8")
    table.add("dim of lines in P^4", LINE_FAMILY_DIM, "Grassmannian of lines")
    line = FIXTURES["line"]
    table.add("sextics through a line (projective)", h0_ideal(line.res, 6) - 1, "202-dimensional space")
    return table


def section_tables(section: str) -> List[ReportTable]:
    """``"3"`` (alias ``cases``): Chern classes; ``"5"`` (alias ``gates``): exclusions."""
    if section in ("3", "cases"):
        return [classification_table(SEXTIC)]
    if section in ("5", "gates"):
        return [gate_table(), liaison_table(), constants_table()]
    raise ValueError(f"unknown section {section!r}; expected '3' or '5'")
