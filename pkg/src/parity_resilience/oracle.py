"""Ground truth for small games, independent of the solving machinery.

A strategy fixes Player 0's standard moves, leaving a graph of all plays
consistent with it. A play with finitely many disturbances that Player 0
loses exists iff the graph has a reachable cycle over standard edges whose
maximal color is odd; with infinitely many disturbances the cycle may use
disturbance edges too. Everything here reduces to that lasso search.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from .game import (
    OMEGA,
    OMEGA_PLUS_ONE,
    FiniteStateStrategy,
    Lasso,
    ParityGame,
    PositionalStrategy,
    Resilience,
    StrategyError,
)

Strategy = PositionalStrategy | FiniteStateStrategy
NodeColor = Callable[[int, Hashable], int]

DEFAULT_LIMIT = 10**6


class InstanceTooLarge(ValueError):
    def __init__(self, count: int, limit: int) -> None:
        super().__init__(f"instance too large: {count} positional strategies (limit {limit})")
        self.count = count


@dataclass
class RestrictedGraph:
    """Plays consistent with a strategy, as a graph over ``(vertex, memory)`` nodes.

    Positional strategies use the memory state ``None`` throughout.
    """

    nodes: list[tuple[int, Hashable]]
    index: dict[tuple[int, Hashable], int]
    standard_succ: list[list[int]]
    disturbance_succ: list[list[int]]
    node_color: list[int]

    def vertex(self, node: int) -> int:
        return self.nodes[node][0]


def _initial_state(strategy: Strategy, v: int) -> Hashable:
    if isinstance(strategy, FiniteStateStrategy):
        return strategy.memory.init[v]
    return None


def restricted_graph(
    game: ParityGame,
    strategy: Strategy,
    starts: Iterable[int] | None = None,
    node_color: NodeColor | None = None,
) -> RestrictedGraph:
    """Build the graph of plays consistent with ``strategy``.

    With ``starts`` only nodes reachable from ``(v, init(v))`` for the given
    vertices are built, and the strategy only needs to be defined there.
    Without ``starts`` every node is built (``|V|·|M|`` for finite-state
    strategies).

    ``node_color`` overrides the coloring per node, which lets a finite-state
    strategy be checked against a condition reduced through the same memory.
    """
    arena = game.arena
    finite_state = isinstance(strategy, FiniteStateStrategy)
    if finite_state:
        upd = strategy.memory.update

        def step(m, w):
            return upd[(m, w)]

        def move(v, m):
            return strategy(v, m)

    else:

        def step(m, w):
            return None

        def move(v, m):
            return strategy(v)

    nodes: list[tuple[int, Hashable]] = []
    index: dict[tuple[int, Hashable], int] = {}
    queue: deque[tuple[int, Hashable]] = deque()

    def add(node):
        if node not in index:
            index[node] = len(nodes)
            nodes.append(node)
            queue.append(node)
        return index[node]

    if starts is None:
        states = strategy.memory.states if finite_state else (None,)
        for v in arena.vertices:
            for m in states:
                add((v, m))
    else:
        for v in starts:
            add((v, _initial_state(strategy, v)))

    std: dict[int, list[int]] = {}
    dist: dict[int, list[int]] = {}
    while queue:
        v, m = node = queue.popleft()
        i = index[node]
        if arena.owner[v] == 0:
            w = move(v, m)
            if w not in arena.succ[v]:
                raise StrategyError(f"strategy picks ({v}, {w}), which is not a standard edge")
            targets = [w]
        else:
            targets = list(arena.succ[v])
        std[i] = [add((w, step(m, w))) for w in targets]
        dist[i] = [add((w, step(m, w))) for w in arena.dsucc[v]]

    colors = [
        node_color(v, m) if node_color is not None else game.color[v] for v, m in nodes
    ]
    return RestrictedGraph(
        nodes=nodes,
        index=index,
        standard_succ=[std[i] for i in range(len(nodes))],
        disturbance_succ=[dist[i] for i in range(len(nodes))],
        node_color=colors,
    )


def _successors(graph: RestrictedGraph, u: int, with_disturbances: bool):
    for w in graph.standard_succ[u]:
        yield w, False
    if with_disturbances:
        for w in graph.disturbance_succ[u]:
            yield w, True


def _odd_cycle(graph: RestrictedGraph, u: int, with_disturbances: bool) -> list[tuple[int, bool]] | None:
    """A cycle through ``u`` whose other nodes have color at most ``u``'s.

    Returned as the entries after ``u`` up to and including ``u`` itself.
    """
    c = graph.node_color[u]
    parent: dict[int, tuple[int, bool]] = {}
    queue = deque()
    for w, d in _successors(graph, u, with_disturbances):
        if graph.node_color[w] <= c and w not in parent:
            parent[w] = (u, d)
            queue.append(w)
    while queue and u not in parent:
        x = queue.popleft()
        for w, d in _successors(graph, x, with_disturbances):
            if graph.node_color[w] <= c and w not in parent:
                parent[w] = (x, d)
                queue.append(w)
    if u not in parent:
        return None
    path = []
    x = u
    while True:
        prev, d = parent[x]
        path.append((x, d))
        if prev == u:
            break
        x = prev
    path.reverse()
    return path


def odd_cycle_nodes(graph: RestrictedGraph, with_disturbances: bool) -> dict[int, list[tuple[int, bool]]]:
    """Odd-colored nodes that dominate some cycle, with one such cycle each."""
    found = {}
    for u, c in enumerate(graph.node_color):
        if c % 2 == 1:
            cycle = _odd_cycle(graph, u, with_disturbances)
            if cycle is not None:
                found[u] = cycle
    return found


def _disturbance_distances(graph: RestrictedGraph, source: int):
    """Fewest disturbance edges needed to reach each node (0-1 BFS)."""
    dist = {source: 0}
    parent: dict[int, tuple[int, bool]] = {}
    dq = deque([source])
    while dq:
        x = dq.popleft()
        for w, d in _successors(graph, x, True):
            nd = dist[x] + d
            if nd < dist.get(w, math.inf):
                dist[w] = nd
                parent[w] = (x, d)
                if d:
                    dq.append(w)
                else:
                    dq.appendleft(w)
    return dist, parent


def _path(parent: dict[int, tuple[int, bool]], source: int, target: int) -> list[tuple[int, bool]]:
    path = []
    x = target
    while x != source:
        prev, d = parent[x]
        path.append((x, d))
        x = prev
    path.append((source, False))
    path.reverse()
    return path


def _lasso(graph: RestrictedGraph, stem: list[tuple[int, bool]], cycle: list[tuple[int, bool]]) -> Lasso:
    return Lasso(
        stem=tuple((graph.vertex(x), d) for x, d in stem),
        cycle=tuple((graph.vertex(x), d) for x, d in cycle),
    )


def check_resilient(
    game: ParityGame,
    strategy: Strategy,
    v: int,
    alpha: Resilience,
    node_color: NodeColor | None = None,
) -> bool | Lasso:
    """``True`` if ``strategy`` is ``alpha``-resilient from ``v``, else a losing lasso.

    The lasso starts in ``v``, is consistent with the strategy, has fewer
    than ``alpha`` disturbances and an odd maximal color on its cycle.
    """
    if alpha == Resilience.finite(0):
        return True
    graph = restricted_graph(game, strategy, [v], node_color)
    source = 0
    if alpha == OMEGA_PLUS_ONE:
        cycles = odd_cycle_nodes(graph, with_disturbances=True)
        if not cycles:
            return True
        dist, parent = _disturbance_distances(graph, source)
        u = min(cycles)
        return _lasso(graph, _path(parent, source, u), cycles[u])
    cycles = odd_cycle_nodes(graph, with_disturbances=False)
    if not cycles:
        return True
    dist, parent = _disturbance_distances(graph, source)
    budget = math.inf if alpha == OMEGA else alpha.value - 1
    best = min(cycles, key=lambda u: (dist[u], u))
    if dist[best] > budget:
        return True
    return _lasso(graph, _path(parent, source, best), cycles[best])


def strategy_resilience(
    game: ParityGame, strategy: Strategy, v: int, node_color: NodeColor | None = None
) -> Resilience:
    """The largest ``alpha`` for which ``strategy`` is ``alpha``-resilient from ``v``."""
    graph = restricted_graph(game, strategy, [v], node_color)
    if not odd_cycle_nodes(graph, with_disturbances=True):
        return OMEGA_PLUS_ONE
    cycles = odd_cycle_nodes(graph, with_disturbances=False)
    if not cycles:
        return OMEGA
    dist, _ = _disturbance_distances(graph, 0)
    return Resilience.finite(min(dist[u] for u in cycles))


def _all_resiliences(game: ParityGame, strategy: PositionalStrategy) -> list[Resilience]:
    """Resilience of a positional strategy from every vertex at once."""
    graph = restricted_graph(game, strategy)
    n = len(graph.nodes)
    rev_all: list[list[int]] = [[] for _ in range(n)]
    rev: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u in range(n):
        for w in graph.standard_succ[u]:
            rev_all[w].append(u)
            rev[w].append((u, 0))
        for w in graph.disturbance_succ[u]:
            rev_all[w].append(u)
            rev[w].append((u, 1))

    doomed = set(odd_cycle_nodes(graph, with_disturbances=True))
    queue = deque(doomed)
    while queue:
        x = queue.popleft()
        for u in rev_all[x]:
            if u not in doomed:
                doomed.add(u)
                queue.append(u)

    dist = {u: 0 for u in odd_cycle_nodes(graph, with_disturbances=False)}
    dq = deque(dist)
    while dq:
        x = dq.popleft()
        for u, d in rev[x]:
            nd = dist[x] + d
            if nd < dist.get(u, math.inf):
                dist[u] = nd
                if d:
                    dq.append(u)
                else:
                    dq.appendleft(u)

    out = []
    for v in game.vertices:
        node = graph.index[(v, None)]
        if node not in doomed:
            out.append(OMEGA_PLUS_ONE)
        elif node not in dist:
            out.append(OMEGA)
        else:
            out.append(Resilience.finite(dist[node]))
    return out


def positional_strategies(game: ParityGame, limit: int = DEFAULT_LIMIT):
    """Iterate over every positional Player-0 strategy."""
    arena = game.arena
    p0 = arena.player_vertices(0)
    count = math.prod(len(arena.succ[v]) for v in p0)
    if count > limit:
        raise InstanceTooLarge(count, limit)
    for choice in itertools.product(*(arena.succ[v] for v in p0)):
        yield PositionalStrategy(dict(zip(p0, choice)))


def brute_force_resilience(game: ParityGame, limit: int = DEFAULT_LIMIT) -> list[Resilience]:
    """Exact resilience of every vertex, by enumerating positional strategies."""
    best = [Resilience.finite(0)] * game.n
    for strategy in positional_strategies(game, limit):
        for v, r in enumerate(_all_resiliences(game, strategy)):
            if r > best[v]:
                best[v] = r
    return best
