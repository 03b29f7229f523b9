import json
import os
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from raagvc.autos import compose, equal, identity
from raagvc.factorization import GeneratorTable, evaluate
from raagvc.graph import complete, discrete, path
from raagvc.presentation import (
    RelationInstance,
    build_presentation,
    export,
    relations_R,
    verify_all,
    verify_relation,
)
from raagvc.whitehead import conjugate_pc_by_type1, inner, partial_conjugation, type1_group

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("RAAGVC_REGEN_GOLDEN") == "1"

F2, F3, F4 = discrete(2), discrete(3), discrete(4)
a, A, b, B, c, C, d, D = range(8)


def idx(table, x, Y):
    return table.index[partial_conjugation(table.G, x, Y)]


def check_golden(name, text):
    path = GOLDEN / name
    if REGEN:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")


def test_free_group_rank_two_has_only_inverse_relations():
    rels = relations_R(F2)
    assert len(rels) == 4
    assert {r.family for r in rels} == {"inverse"}


def test_union_instance_f3():
    t = GeneratorTable(F3)
    want = (((idx(t, a, "b"), 1), (idx(t, a, "c"), 1)), ((idx(t, a, "bc"), 1),))
    rels = [(r.left, r.right) for r in relations_R(F3, t) if r.family == "union"]
    assert want in rels


def test_commute_instance_f4():
    t = GeneratorTable(F4)
    p, q = idx(t, a, "b"), idx(t, c, "d")
    rels = [r for r in relations_R(F4, t) if r.family == "commute"]
    hit = [r for r in rels if r.left == ((p, 1), (q, 1)) and r.right == ((q, 1), (p, 1))]
    assert len(hit) == 1
    assert hit[0].side_conditions["Y_cap_Z_empty"] is True


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_complete_graphs_are_empty(n):
    P = build_presentation(complete(n))
    assert len(P.table) == 0 and P.relations == []
    assert export(P) == "generators:\nrelators:"


def test_verify_relation_examples():
    t = GeneratorTable(F3)
    union = RelationInstance("union", ((idx(t, a, "b"), 1), (idx(t, a, "c"), 1)), ((idx(t, a, "bc"), 1),))
    assert verify_relation(F3, union, t)
    p, q = idx(t, a, "c"), idx(t, b, "c")
    fake = RelationInstance("commute", ((p, 1), (q, 1)), ((q, 1), (p, 1)))
    assert not verify_relation(F3, fake, t)
    inv = RelationInstance("inverse", ((p, 1), (t.inverse[p], 1)), ())
    assert verify_relation(F3, inv, t)


def test_verify_all_examples():
    r = verify_all(F2)
    assert (r.passed, r.total, r.n_generators) == (4, 4, 4)
    r = verify_all(complete(3))
    assert (r.total, r.n_generators) == (0, 0)
    r = verify_all(path(4))
    assert r.ok and r.total == r.passed > 0


def test_soundness(suite_graph):
    report = verify_all(suite_graph)
    assert report.ok, [r.family for r in report.failures]


def test_relators_evaluate_to_identity(suite_graph):
    G = suite_graph
    P = build_presentation(G)
    ident = identity(G)
    for r in P.relations:
        assert equal(G, evaluate(G, r.relator, P.table), ident)


def test_union_symmetry(suite_graph):
    rels = relations_R(suite_graph)
    pairs = {(r.left[0][0], r.left[1][0]) for r in rels if r.family == "union"}
    assert all((j, i) in pairs for i, j in pairs)


def test_commute_both_orders(suite_graph):
    G = suite_graph
    t = GeneratorTable(G)
    for r in relations_R(G, t):
        if r.family == "commute":
            (i, _), (j, _) = r.left
            swapped = RelationInstance("commute", ((j, 1), (i, 1)), ((i, 1), (j, 1)))
            assert verify_relation(G, swapped, t)


def test_inner_stabilize_matches_direct_inner(suite_graph):
    G = suite_graph
    t = GeneratorTable(G)
    for r in relations_R(G, t):
        if r.family != "inner-stabilize":
            continue
        (k, _), (i, _), _ = r.left
        y = t.pcs[k].x
        omega, omega_inv = inner(G, (y,)), inner(G, (y ^ 1,))
        assert equal(G, t.endos[k], omega)
        assert equal(G, compose(G, omega, t.endos[i], omega_inv), t.endos[i])


def test_relators_unique(suite_graph):
    words = [r.relator for r in relations_R(suite_graph)]
    assert len(words) == len(set(words))


def test_type1_covariance(suite_graph):
    G = suite_graph
    t = GeneratorTable(G)
    words = {r.relator for r in relations_R(G, t)}
    for sigma in type1_group(G):
        image = [t.index[conjugate_pc_by_type1(G, sigma, pc)] for pc in t.pcs]
        for w in words:
            assert tuple((image[i], s) for i, s in w) in words


def test_plain_export_examples():
    assert "c[a|{b}]*c[a^-1|{b}]" in export(build_presentation(F2)).splitlines()
    assert "c[a|{b}]*c[a|{c}]*c[a|{b,c}]^-1" in export(build_presentation(F3)).splitlines()


def test_export_is_deterministic(suite_graph):
    assert export(build_presentation(suite_graph)) == export(build_presentation(suite_graph))


def test_export_rejects_unknown_format():
    with pytest.raises(ValueError):
        export(build_presentation(F2), "xml")


@pytest.mark.parametrize("name, G", [("F2", F2), ("F3", F3), ("P4", path(4)), ("K3", complete(3))])
def test_plain_golden(name, G):
    check_golden(f"{name}.plain.txt", export(build_presentation(G)) + "\n")


def test_structured_golden_and_schema():
    P = build_presentation(path(3))
    P.verify()
    text = export(P, "structured")
    check_golden("P3.structured.json", text + "\n")
    schema = json.loads(resources.files("raagvc").joinpath("schemas/presentation.schema.json").read_text())
    jsonschema.validate(json.loads(text), schema)


def test_structured_schema_suite(suite_graph):
    schema = json.loads(resources.files("raagvc").joinpath("schemas/presentation.schema.json").read_text())
    P = build_presentation(suite_graph)
    doc = json.loads(export(P, "structured"))
    jsonschema.validate(doc, schema)
    assert all(r["verified"] is None for r in doc["relators"])
    P.verify()
    doc = json.loads(export(P, "structured"))
    assert all(r["verified"] is True for r in doc["relators"])
    assert [g["name"] for g in doc["generators"]] == P.table.names
