"""The relation set R on the partial conjugations, its verification and export.

Four families are generated, each instance carrying the side conditions it was
admitted under:

* ``inverse``          c_{x,Y} c_{x^-1,Y} = 1
* ``union``            c_{x,Y} c_{x,Z} = c_{x,Y∪Z}            (Y ∩ Z = ∅)
* ``commute``          c_{x,Y} c_{y,Z} = c_{y,Z} c_{x,Y}
* ``inner-stabilize``  ω_y c_{x,Y} ω_y^-1 = c_{x,Y}

with ω_y written as the single generator c_{y, all components of Γ∖st(v(y))}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .autos import equal
from .factorization import GeneratorTable, SWord, evaluate
from .graph import Graph
from .whitehead import PartialConjugation, inner_as_pc
from .words import format_letter, letters_of

FAMILIES = ("inverse", "union", "commute", "inner-stabilize")
SCHEMA_ID = "raagvc.presentation/1"
COMPOSITION_NOTE = (
    "relator words are products of automorphisms composed right to left: "
    "(f*g)(v) = f(g(v)); c[x|{Y}] sends each y in Y to x^-1 y x"
)
OMEGA_NOTE = (
    "the inner automorphism omega_y (v -> y^-1 v y) is written as the generator "
    "c[y|{every vertex outside st(v(y))}]; instances with v(y) central are omitted"
)
COMPLETENESS_NOTICE = (
    "every relator listed here has been checked to hold in Aut(G); "
    "that these relators suffice to define the group is not machine-checked"
)


@dataclass(frozen=True)
class RelationInstance:
    family: str
    left: SWord
    right: SWord
    side_conditions: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def relator(self) -> SWord:
        """``left · right^-1``."""
        return self.left + tuple((i, -s) for i, s in reversed(self.right))


def relations_R(G: Graph, table: GeneratorTable | None = None) -> list[RelationInstance]:
    table = table or GeneratorTable(G)
    pcs = table.pcs
    out: list[RelationInstance] = []
    seen: set[SWord] = set()

    def emit(rel: RelationInstance) -> None:
        r = rel.relator
        if r not in seen:
            seen.add(r)
            out.append(rel)

    for i, pc in enumerate(pcs):
        emit(RelationInstance("inverse", ((i, 1), (table.inverse[i], 1)), (), {}))

    for i, p in enumerate(pcs):
        for j, q in enumerate(pcs):
            if i == j or p.x != q.x or p.Y & q.Y:
                continue
            k = table.index[PartialConjugation(p.x, p.Y | q.Y)]
            emit(RelationInstance("union", ((i, 1), (j, 1)), ((k, 1),), {"Y_cap_Z_empty": True}))

    for i, p in enumerate(pcs):
        vx = p.x >> 1
        for j, q in enumerate(pcs):
            vy = q.x >> 1
            if vx == vy or vx in q.Y or vy in p.Y:
                continue
            disjoint = not (p.Y & q.Y)
            in_link = G.adjacent(vx, vy)
            if not (disjoint or in_link):
                continue
            emit(RelationInstance(
                "commute",
                ((i, 1), (j, 1)),
                ((j, 1), (i, 1)),
                {
                    "vx_not_in_Z": True,
                    "vy_not_in_Y": True,
                    "x_ne_y_or_y_inverse": True,
                    "Y_cap_Z_empty": disjoint,
                    "y_in_lk_L_x": in_link,
                },
            ))

    for i, p in enumerate(pcs):
        vx = p.x >> 1
        for y in letters_of(G):
            vy = y >> 1
            if vy == vx or vy in p.Y:
                continue
            omega = inner_as_pc(G, y)
            if omega is None:
                continue
            k = table.index[omega]
            emit(RelationInstance(
                "inner-stabilize",
                ((k, 1), (i, 1), (k, -1)),
                ((i, 1),),
                {
                    "vy_not_in_Y": True,
                    "x_ne_y_or_y_inverse": True,
                    "y": format_letter(G, y),
                    "omega_y": table.names[k],
                },
            ))
    return out


def verify_relation(G: Graph, rel: RelationInstance, table: GeneratorTable | None = None) -> bool:
    table = table or GeneratorTable(G)
    return equal(G, evaluate(G, rel.left, table), evaluate(G, rel.right, table))


@dataclass
class VerificationReport:
    n_generators: int
    counts: dict[str, int]
    passed: int
    failures: list[RelationInstance]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [f"generators: {self.n_generators}"]
        for fam in FAMILIES:
            lines.append(f"  {fam}: {self.counts.get(fam, 0)}")
        lines.append(f"relations verified: {self.passed}/{self.total}")
        return "\n".join(lines)


@dataclass
class Presentation:
    graph: Graph
    table: GeneratorTable
    relations: list[RelationInstance]
    verified: list[bool] | None = None

    def verify(self) -> VerificationReport:
        self.verified = [verify_relation(self.graph, r, self.table) for r in self.relations]
        counts = {fam: 0 for fam in FAMILIES}
        for r in self.relations:
            counts[r.family] += 1
        failures = [r for r, ok in zip(self.relations, self.verified) if not ok]
        return VerificationReport(len(self.table), counts, len(self.relations) - len(failures), failures)


def build_presentation(G: Graph) -> Presentation:
    table = GeneratorTable(G)
    return Presentation(G, table, relations_R(G, table))


def verify_all(G: Graph) -> VerificationReport:
    return build_presentation(G).verify()


def relator_text(table: GeneratorTable, w: Sequence[tuple[int, int]]) -> str:
    return table.format(w, sep="*")


def export(P: Presentation, format: str = "plain") -> str:
    if format == "plain":
        lines = ["generators:"]
        lines.extend(P.table.names)
        lines.append("relators:")
        lines.extend(relator_text(P.table, r.relator) for r in P.relations)
        return "\n".join(lines)
    if format == "structured":
        return json.dumps(structured(P), indent=2, ensure_ascii=False)
    raise ValueError(f"unknown format {format!r}")


def structured(P: Presentation) -> dict[str, Any]:
    G, table = P.graph, P.table
    gens = [
        {
            "name": table.names[i],
            "x": format_letter(G, pc.x),
            "Y": [G.vertices[y] for y in sorted(pc.Y)],
        }
        for i, pc in enumerate(table.pcs)
    ]
    rels = []
    for k, r in enumerate(P.relations):
        rels.append({
            "family": r.family,
            "word": relator_text(table, r.relator),
            "left": relator_text(table, r.left),
            "right": relator_text(table, r.right),
            "side_conditions": r.side_conditions,
            "verified": None if P.verified is None else P.verified[k],
        })
    return {
        "schema": SCHEMA_ID,
        "graph": {
            "vertices": list(G.vertices),
            "edges": [list(e) for e in G.sorted_edges()],
        },
        "composition": COMPOSITION_NOTE,
        "omega_expansion": OMEGA_NOTE,
        "notice": COMPLETENESS_NOTICE,
        "generators": gens,
        "relators": rels,
    }
