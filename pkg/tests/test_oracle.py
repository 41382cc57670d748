import pytest
from hypothesis import given, settings, strategies as st

from parity_resilience.game import (
    OMEGA,
    OMEGA_PLUS_ONE,
    FiniteStateStrategy,
    Lasso,
    MemoryStructure,
    ParityGame,
    PositionalStrategy,
    Resilience,
    StrategyError,
)
from parity_resilience.gallery import memory_game, running_example
from parity_resilience.oracle import (
    InstanceTooLarge,
    brute_force_resilience,
    check_resilient,
    positional_strategies,
    restricted_graph,
    strategy_resilience,
)
from parity_resilience.parity import solve_parity

from support import games, one_vertex

F = Resilience.finite


def optimal_running_strategy(g):
    n = g.vertex
    return PositionalStrategy({n("v2"): n("v2"), n("v4"): n("v2"), n("v5"): n("v5"), n("v7"): n("v7"), n("v9"): n("v9")})


def test_restricted_graph_follows_strategy():
    g = running_example()
    graph = restricted_graph(g, optimal_running_strategy(g))
    v4 = graph.index[(g.vertex("v4"), None)]
    assert [graph.vertex(x) for x in graph.standard_succ[v4]] == [g.vertex("v2")]


def test_restricted_graph_without_player0_is_the_arena():
    g = ParityGame.build([1, 1], [0, 1], [(0, 1), (1, 0), (1, 1)])
    graph = restricted_graph(g, PositionalStrategy({}))
    assert [[graph.vertex(x) for x in s] for s in graph.standard_succ] == [list(g.arena.succ[v]) for v in g.vertices]


def test_restricted_graph_finite_state_size():
    g = running_example()
    mem = MemoryStructure.from_functions((0, 1), g.n, lambda v: 0, lambda m, v: 1 - m)
    base = optimal_running_strategy(g)
    fs = FiniteStateStrategy(mem, {(v, m): base(v) for v in base.choice for m in (0, 1)})
    assert len(restricted_graph(g, fs).nodes) == g.n * 2


def test_restricted_graph_reports_undefined_move():
    g = running_example()
    with pytest.raises(StrategyError, match="undefined"):
        restricted_graph(g, PositionalStrategy({}), starts=[g.vertex("v6")])


def test_v5_is_two_but_not_three_resilient():
    g = running_example()
    sigma = optimal_running_strategy(g)
    v5 = g.vertex("v5")
    assert check_resilient(g, sigma, v5, F(2)) is True
    lasso = check_resilient(g, sigma, v5, F(3))
    assert isinstance(lasso, Lasso)
    names = [g.arena.name(v) for v, _ in lasso.stem + lasso.cycle]
    assert {"v3", "v2", "v1"} <= set(names)
    assert lasso.disturbances == F(2)


def test_v7_is_omega_but_not_omega_plus_one():
    g = running_example()
    sigma = optimal_running_strategy(g)
    v7, v8 = g.vertex("v7"), g.vertex("v8")
    assert check_resilient(g, sigma, v7, OMEGA) is True
    lasso = check_resilient(g, sigma, v7, OMEGA_PLUS_ONE)
    assert {v for v, _ in lasso.cycle} == {v7, v8}
    assert max(g.color[v] for v, _ in lasso.cycle) == 1
    assert lasso.disturbances == OMEGA


@given(games(), st.data())
def test_everything_is_zero_resilient(g, data):
    sigma = data.draw(st.sampled_from(list(positional_strategies(g))))
    for v in g.vertices:
        assert check_resilient(g, sigma, v, F(0)) is True


def test_strategy_resilience_examples():
    g = running_example()
    sigma = optimal_running_strategy(g)
    assert strategy_resilience(g, sigma, g.vertex("v9")) == OMEGA_PLUS_ONE
    lazy = PositionalStrategy({**sigma.choice, g.vertex("v4"): g.vertex("v4")})
    assert strategy_resilience(g, lazy, g.vertex("v4")) == F(0)
    assert strategy_resilience(one_vertex(1), PositionalStrategy({0: 0}), 0) == F(0)


def test_brute_force_examples():
    g = running_example()
    got = {g.arena.name(v): str(r) for v, r in enumerate(brute_force_resilience(g))}
    assert got == {
        "v1": "0", "v2": "1", "v3": "1", "v4": "1", "v5": "2", "v6": "1",
        "v7": "omega", "v8": "omega", "v9": "omega+1", "v10": "omega+1",
    }
    assert brute_force_resilience(memory_game()) == [F(0), F(1), F(1)]
    assert brute_force_resilience(one_vertex(0)) == [OMEGA_PLUS_ONE]


def test_brute_force_guard():
    edges = [(v, w) for v in range(12) for w in range(3)]
    g = ParityGame.build([0] * 12, [0] * 12, edges)
    with pytest.raises(InstanceTooLarge) as info:
        brute_force_resilience(g, limit=1000)
    assert info.value.count == 3**12
    assert "instance too large" in str(info.value)


# reference: explicit product with a saturating disturbance counter


def _reaches(succ, start, goal, allowed):
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for w in succ(x):
            if w == goal:
                return True
            if w not in seen and allowed(w):
                seen.add(w)
                todo.append(w)
    return False


def reference_resilient(g, sigma, v, alpha):
    a = g.arena

    def std(u):
        return [sigma(u)] if a.owner[u] == 0 else list(a.succ[u])

    def dist(u):
        return list(a.dsucc[u]) if a.owner[u] == 0 else []

    def on_odd_cycle(u, with_dist):
        c = g.color[u]
        succ = (lambda x: std(x) + dist(x)) if with_dist else std
        return c % 2 == 1 and _reaches(succ, u, u, lambda w: g.color[w] <= c)

    if alpha == F(0):
        return True
    if alpha == OMEGA_PLUS_ONE:
        reach = {v}
        todo = [v]
        while todo:
            x = todo.pop()
            for w in std(x) + dist(x):
                if w not in reach:
                    reach.add(w)
                    todo.append(w)
        return not any(on_odd_cycle(u, True) for u in reach)
    # a shortest stem never repeats a vertex, so |V| disturbances stand in for ω
    budget = g.n if alpha == OMEGA else alpha.value - 1
    # nodes (vertex, disturbances used so far), capped at the budget
    reach = {(v, 0)}
    todo = [(v, 0)]
    while todo:
        x, c = todo.pop()
        nxt = [(w, c) for w in std(x)]
        if c < budget:
            nxt += [(w, c + 1) for w in dist(x)]
        for node in nxt:
            if node not in reach:
                reach.add(node)
                todo.append(node)
    return not any(on_odd_cycle(u, False) for u, _ in reach)


VALUES = [F(0), F(1), F(2), F(3), OMEGA, OMEGA_PLUS_ONE]


@settings(max_examples=200)
@given(games(), st.data())
def test_check_matches_counter_product_reference(g, data):
    sigma = data.draw(st.sampled_from(list(positional_strategies(g))))
    for v in g.vertices:
        verdicts = [check_resilient(g, sigma, v, alpha) is True for alpha in VALUES]
        assert verdicts == [reference_resilient(g, sigma, v, alpha) for alpha in VALUES]
        # monotone in alpha
        assert verdicts == sorted(verdicts, reverse=True)
        best = strategy_resilience(g, sigma, v)
        assert verdicts == [alpha <= best for alpha in VALUES]


@settings(max_examples=200)
@given(games(), st.data())
def test_one_resilient_iff_winning(g, data):
    sigma = data.draw(st.sampled_from(list(positional_strategies(g))))
    w0 = solve_parity(g).w0
    for v in g.vertices:
        if check_resilient(g, sigma, v, F(1)) is True:
            assert v in w0


def replay(g: ParityGame, sigma: PositionalStrategy, lasso: Lasso, alpha: Resilience) -> None:
    a = g.arena
    play = list(lasso.stem) + list(lasso.cycle)
    assert not play[0][1]
    assert lasso.cycle[-1][0] == lasso.stem[-1][0]
    for (u, _), (w, disturbed) in zip(play, play[1:]):
        if disturbed:
            assert a.owner[u] == 0 and w in a.dsucc[u]
        elif a.owner[u] == 0:
            assert sigma(u) == w
        else:
            assert w in a.succ[u]
    assert lasso.disturbances < alpha
    assert max(g.color[v] for v, _ in lasso.cycle) % 2 == 1


@settings(max_examples=200)
@given(games(), st.data())
def test_lassos_replay(g, data):
    sigma = data.draw(st.sampled_from(list(positional_strategies(g))))
    for v in g.vertices:
        for alpha in VALUES:
            lasso = check_resilient(g, sigma, v, alpha)
            if lasso is not True:
                assert lasso.start == v
                replay(g, sigma, lasso, alpha)
