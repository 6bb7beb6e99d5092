"""Regenerate the reference tables from first principles.

Every row is computed from the root systems themselves; nothing here reads
stored table data. The golden tests compare the tsv rendering against
independent hand transcriptions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .cascade import XiEntry, Xi, build_cascade, xi_entries
from .rootsys import (
    RootSystem,
    SimpleType,
    all_types,
    build,
    classify_simple,
    classify_subdiagram,
    extended_diagram,
    format_root,
    format_subset,
    format_types,
    support,
)
from .stab import ell_of_set, j_of_weight, make_face
from .theorem import xi_lambda
from .weyl import poincare_quotient


@dataclass(frozen=True)
class Table:
    name: str
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def to_tsv(self) -> str:
        lines = ["\t".join(self.header)] + ["\t".join(r) for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps([dict(zip(self.header, r)) for r in self.rows], ensure_ascii=False, indent=1)

    def to_human(self) -> str:
        widths = [max(len(c) for c in col) for col in zip(self.header, *self.rows)]
        fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
        out = [self.name, fmt(self.header), fmt(tuple("-" * w for w in widths))]
        return "\n".join(out + [fmt(r) for r in self.rows]) + "\n"

    def render(self, fmt: str) -> str:
        return {"tsv": self.to_tsv, "json": self.to_json, "human": self.to_human}[fmt]()


def _xi_key(rs: RootSystem, e: XiEntry) -> tuple:
    return (ell_of_set(rs, j_of_weight(rs, e.xi)), tuple(-c for c in e.xi.coords))


def _beta_key(beta: tuple) -> tuple:
    return tuple(-c for c in beta)


def minuscule_pairs(max_rank: int = 8) -> list[tuple[RootSystem, int]]:
    return [(rs, a) for rs in map(build, all_types(max_rank)) for a in rs.minuscule()]


def table_quotients(max_rank: int = 8) -> Table:
    """Each minuscule simple root, the type of its complement and the degree of ``P(W/W_I)``."""
    rows = []
    for rs, a in minuscule_pairs(max_rank):
        rest = classify_simple(rs, set(rs.simple) - {a})
        deg = poincare_quotient([rs.stype], rest).degree
        rows.append((str(rs.stype), f"α{a}", format_types(rest), str(deg)))
    return Table("minuscule quotients", ("type", "alpha", "complement", "degree"), tuple(rows))


def table_minuscule_xi(max_rank: int = 8) -> Table:
    """``Xi(varpi_alpha)`` for each minuscule ``varpi_alpha``."""
    rows = []
    for rs, a in minuscule_pairs(max_rank):
        face = make_face(rs, set(rs.simple) - {a})
        entries = sorted(xi_lambda(rs, face), key=lambda e: _xi_key(rs, e))
        rows.append((str(rs.stype), f"α{a}", ", ".join(str(e.xi) for e in entries)))
    return Table("Xi of minuscule weights", ("type", "alpha", "M"), tuple(rows))


def table_ell(max_rank: int = 8) -> Table:
    """For each ``xi`` in ``Xi``: the types of ``J(xi)`` and ``J(xi) ∪ {alpha_0}`` and ``ell_xi``."""
    rows = []
    for rs in map(build, all_types(max_rank)):
        ed = extended_diagram(rs)
        for e in sorted(Xi(rs), key=lambda e: _xi_key(rs, e)):
            J = j_of_weight(rs, e.xi)
            rows.append((
                str(rs.stype),
                str(e.xi),
                format_types(classify_simple(rs, J)),
                format_types(classify_subdiagram(ed, J | {0})),
                str(ell_of_set(rs, J)),
            ))
    return Table("ell exponents", ("type", "xi", "J", "J+alpha0", "ell"), tuple(rows))


def _lists_full_cascade(stype: SimpleType) -> bool:
    return stype.family in "ABCDG"


def table_cascades(max_rank: int = 8) -> Table:
    """Cascade members with predecessors, then ``Xi`` with ``supp*``.

    For the exceptional families only members whose ``supp(beta_1 - beta)``
    is a proper subset of the simple roots are listed.
    """
    rows = []
    for rs in map(build, all_types(max_rank)):
        casc = build_cascade(rs)
        b1 = rs.highest_short
        full = frozenset(rs.simple)
        name = str(rs.stype)
        members = [
            n for n in casc
            if _lists_full_cascade(rs.stype) or support(tuple(x - y for x, y in zip(b1, n.beta))) != full
        ]
        for n in sorted(members, key=lambda n: _beta_key(n.beta)):
            pred = "-" if n.predecessor is None else format_root(casc[n.predecessor].beta)
            star = support(tuple(x - y for x, y in zip(b1, n.beta)))
            rows.append((name, "K", format_root(n.beta), pred, format_subset(star)))
        for e in sorted(Xi(rs), key=lambda e: _beta_key(e.node.beta)):
            rows.append((name, "XI", format_root(e.node.beta), str(e.xi), format_subset(e.supp_star)))
    return Table("cascades", ("type", "kind", "beta", "value", "supp"), tuple(rows))


TABLES: dict[str, Callable[[int], Table]] = {
    "1": table_quotients,
    "2": table_minuscule_xi,
    "3": table_ell,
    "A": table_cascades,
}

GOLDEN_NAMES = {"1": "table1.tsv", "2": "table2.tsv", "3": "table3.tsv", "A": "appendix_a.tsv"}


def cascade_rows(rs: RootSystem) -> list[dict]:
    """Full cascade dump: every member with its ``xi`` in both bases."""
    casc = build_cascade(rs)
    out = []
    for e in xi_entries(rs, casc):
        n = e.node
        out.append({
            "index": n.index,
            "beta": list(n.beta),
            "beta_str": format_root(n.beta),
            "predecessor": n.predecessor,
            "depth": n.depth,
            "xi_root": list(e.xi_root),
            "xi": [int(c) for c in e.xi.coords],
            "xi_str": str(e.xi),
            "dominant": e.dominant,
            "supp_star": sorted(e.supp_star),
        })
    return out
