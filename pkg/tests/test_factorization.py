import pytest
from hypothesis import given, settings, strategies as st

from raagvc.autos import compose, equal, identity, inversion, is_vertex_conjugating
from raagvc.errors import BudgetExceeded, NotVertexConjugating, ParseError
from raagvc.factorization import (
    GeneratorTable,
    _bfs_descent,
    evaluate,
    factor,
    oracle_bfs,
    parse_sword,
    potential,
)
from raagvc.graph import discrete, path
from raagvc.whitehead import inner, partial_conjugation, pc_endo

from conftest import SMALL, SUITE

F2, F3 = discrete(2), discrete(3)
a, A, b, B, c, C = range(6)
TABLES = {name: GeneratorTable(G) for name, G in SUITE.items()}


def random_sword(rng, table, max_len):
    return tuple((rng.randrange(len(table)), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len)))


def test_evaluate_examples():
    t = TABLES["F2"]
    assert equal(F2, evaluate(F2, (), t), identity(F2))
    i = t.by_name["c[a|{b}]"]
    assert evaluate(F2, ((i, 1),), t).images == ((a,), (A, b, a))
    assert evaluate(F2, ((i, -1),), t).images == ((a,), (a, b, A))
    assert equal(F2, evaluate(F2, ((i, 1), (i, -1)), t), identity(F2))


def test_evaluate_composes_right_to_left():
    G = path(3)
    t = GeneratorTable(G)
    p, q = t.by_name["c[a|{c}]"], t.by_name["c[c|{a}]"]
    want = compose(G, t.endos[p], t.endos[q])
    assert evaluate(G, ((p, 1), (q, 1)), t) == want
    assert not equal(G, want, compose(G, t.endos[q], t.endos[p]))


def test_factor_identity_is_empty():
    assert factor(F3, identity(F3)) == ()


def test_factor_inner_on_f2():
    t = TABLES["F2"]
    assert t.format(factor(F2, inner(F2, (a,)), table=t)) == "c[a|{b}]"


def test_factor_single_generator_f3():
    t = TABLES["F3"]
    f = pc_endo(F3, partial_conjugation(F3, a, "bc"))
    w = factor(F3, f, table=t)
    assert equal(F3, evaluate(F3, w, t), f)
    assert len(w) == 1


def test_factor_rejects_inversion():
    with pytest.raises(NotVertexConjugating):
        factor(F2, inversion(F2, "a"))


def test_oracle_examples():
    t = TABLES["F2"]
    assert oracle_bfs(F2, identity(F2), 0, t) == ()
    assert t.format(oracle_bfs(F2, inner(F2, (a,)), 1, t)) == "c[a|{b}]"
    assert oracle_bfs(F2, inversion(F2, "a"), 3, t) is None


def test_oracle_word_order():
    G = path(3)
    t = GeneratorTable(G)
    p, q = t.by_name["c[a|{c}]"], t.by_name["c[c|{a}]"]
    f = evaluate(G, ((p, 1), (q, 1)), t)
    found = oracle_bfs(G, f, 2, t)
    assert found is not None and equal(G, evaluate(G, found, t), f)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_factor_agrees_with_oracle(name, rng):
    G, t = SUITE[name], TABLES[name]
    if not len(t):
        assert oracle_bfs(G, identity(G), 0, t) == ()
        return
    for _ in range(15):
        f = evaluate(G, random_sword(rng, t, 3), t)
        found = oracle_bfs(G, f, 3, t)
        assert found is not None
        assert equal(G, evaluate(G, factor(G, f, table=t), t), evaluate(G, found, t))


def test_round_trip(suite_graph, rng):
    G = suite_graph
    t = GeneratorTable(G)
    if not len(t):
        assert factor(G, identity(G), table=t) == ()
        return
    for _ in range(25):
        f = evaluate(G, random_sword(rng, t, 5), t)
        assert equal(G, evaluate(G, factor(G, f, table=t), t), f)


def test_factor_uses_positive_letters(rng):
    t = TABLES["F3"]
    f = evaluate(F3, random_sword(rng, t, 6), t)
    assert all(s == 1 for _, s in factor(F3, f, table=t))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_evaluate_is_a_monoid_homomorphism(data):
    name = data.draw(st.sampled_from(sorted(SMALL)))
    G, t = SUITE[name], TABLES[name]
    if not len(t):
        return
    gen = st.tuples(st.integers(0, len(t) - 1), st.sampled_from((1, -1)))
    u = tuple(data.draw(st.lists(gen, max_size=4)))
    v = tuple(data.draw(st.lists(gen, max_size=4)))
    assert evaluate(G, u + v, t) == compose(G, evaluate(G, u, t), evaluate(G, v, t))


def test_parse_sword_round_trip(suite_graph, rng):
    t = GeneratorTable(suite_graph)
    if not len(t):
        assert parse_sword(t, "1") == ()
        return
    for _ in range(20):
        w = random_sword(rng, t, 5)
        assert parse_sword(t, t.format(w, sep="*")) == w
        assert parse_sword(t, t.format(w)) == w


@pytest.mark.parametrize("text", ["c[a|{b}", "c[z|{b}]", "c[a|{a}]", "c[a|{b}]^2", "x"])
def test_parse_sword_errors(text):
    with pytest.raises((ParseError, KeyError)):
        parse_sword(TABLES["F2"], text)


def test_bfs_descent_lowers_potential():
    t = TABLES["F3"]
    f = evaluate(F3, ((t.by_name["c[a|{b}]"], 1), (t.by_name["c[c|{b}]"], 1)), t)
    path_, h = _bfs_descent(F3, t, f, 10**5, 4)
    assert potential(h) < potential(f)
    g = f
    for i in path_:
        g = compose(F3, t.endos[i], g)
    assert g == h


def test_bfs_descent_budget():
    t = TABLES["F3"]
    f = evaluate(F3, ((t.by_name["c[a|{b}]"], 1),), t)
    with pytest.raises(BudgetExceeded):
        _bfs_descent(F3, t, f, 2, 4)


def test_factor_falls_back_to_search(monkeypatch, caplog):
    G = path(4)
    t = GeneratorTable(G)
    f = evaluate(G, ((0, 1), (2, 1), (4, 1)), t)
    import raagvc.factorization as fz

    real = fz.potential
    calls = {"n": 0}

    def stubborn(g):
        # make the first greedy sweep see no improvement
        calls["n"] += 1
        return 10**9 if calls["n"] <= len(t) + 1 and calls["n"] > 1 else real(g)

    monkeypatch.setattr(fz, "potential", stubborn)
    with caplog.at_level("DEBUG", logger="raagvc.factorization"):
        w = factor(G, f, table=t)
    assert "stalled" in caplog.text
    assert equal(G, evaluate(G, w, t), f)
    assert is_vertex_conjugating(G, f) is not None
