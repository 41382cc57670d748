"""Disturbance-free parity solving.

The default solver is the classical recursive algorithm (Zielonka). Any
callable with the signature of :func:`zielonka` can be passed wherever a
``solver`` argument is accepted, e.g. a quasipolynomial algorithm; callers
never depend on how winning regions are computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Callable, Iterable

from .game import Arena, ParityGame, PositionalStrategy, restrict_with_map


@dataclass(frozen=True)
class SolveResult:
    w0: frozenset[int]
    w1: frozenset[int]
    strategy0: PositionalStrategy
    strategy1: PositionalStrategy

    def winning(self, player: int) -> frozenset[int]:
        return self.w0 if player == 0 else self.w1


Solver = Callable[[ParityGame], SolveResult]


def _attractor_in(
    arena: Arena, vertices: AbstractSet[int], player: int, target: Iterable[int]
) -> tuple[set[int], dict[int, int]]:
    """Attractor for ``player`` inside the subgraph induced by ``vertices``.

    Computed in rank layers; a player vertex of layer ``i > 0`` moves to its
    successor of lowest layer, ties broken by lowest id.
    """
    rank = {v: 0 for v in target if v in vertices}
    frontier = list(rank)
    remaining: dict[int, int] = {}
    layer = 0
    while frontier:
        layer += 1
        new = set()
        for w in frontier:
            for u in arena.pred[w]:
                if u not in vertices or u in rank or u in new:
                    continue
                if arena.owner[u] == player:
                    new.add(u)
                    continue
                if u not in remaining:
                    remaining[u] = sum(1 for x in arena.succ[u] if x in vertices)
                remaining[u] -= 1
                if remaining[u] == 0:
                    new.add(u)
        for u in new:
            rank[u] = layer
        frontier = sorted(new)
    strategy = {}
    for u, r in rank.items():
        if r > 0 and arena.owner[u] == player:
            strategy[u] = min((x for x in arena.succ[u] if x in rank), key=lambda x: (rank[x], x))
    return set(rank), strategy


def attractor(arena: Arena, player: int, target: Iterable[int]) -> tuple[frozenset[int], PositionalStrategy]:
    """Least set containing ``target`` into which ``player`` can force the play.

    Only standard edges count. The returned strategy is defined on the
    player's vertices outside ``target`` and strictly decreases the attractor
    rank.
    """
    attr, strategy = _attractor_in(arena, frozenset(arena.vertices), player, target)
    return frozenset(attr), PositionalStrategy(strategy)


def _zielonka(
    arena: Arena, color: tuple[int, ...], vertices: frozenset[int]
) -> tuple[set[int], set[int], dict[int, int], dict[int, int]]:
    if not vertices:
        return set(), set(), {}, {}
    d = max(color[v] for v in vertices)
    p = d % 2
    top = [v for v in vertices if color[v] == d]
    attr, attr_strategy = _attractor_in(arena, vertices, p, top)
    w_sub = _zielonka(arena, color, vertices - attr)
    won = [w_sub[0], w_sub[1]]
    strat = [w_sub[2], w_sub[3]]
    if not won[1 - p]:
        strategy = dict(strat[p])
        strategy.update(attr_strategy)
        for v in top:
            if arena.owner[v] == p:
                strategy[v] = min(x for x in arena.succ[v] if x in vertices)
        regions = [set(), set()]
        regions[p] = set(vertices)
        strategies: list[dict[int, int]] = [{}, {}]
        strategies[p] = strategy
        return regions[0], regions[1], strategies[0], strategies[1]
    opp = 1 - p
    battr, battr_strategy = _attractor_in(arena, vertices, opp, won[opp])
    w_rest = _zielonka(arena, color, vertices - battr)
    regions = [set(w_rest[0]), set(w_rest[1])]
    strategies = [dict(w_rest[2]), dict(w_rest[3])]
    regions[opp] |= battr
    strategies[opp].update(strat[opp])
    strategies[opp].update(battr_strategy)
    return regions[0], regions[1], strategies[0], strategies[1]


def zielonka(game: ParityGame) -> SolveResult:
    """Solve a max-parity game with the recursive algorithm, ignoring disturbances."""
    arena = game.arena
    w0, w1, s0, s1 = _zielonka(arena, game.color, frozenset(arena.vertices))
    s0 = {v: w for v, w in s0.items() if v in w0 and arena.owner[v] == 0}
    s1 = {v: w for v, w in s1.items() if v in w1 and arena.owner[v] == 1}
    return SolveResult(frozenset(w0), frozenset(w1), PositionalStrategy(s0), PositionalStrategy(s1))


class CountingSolver:
    """Wraps a solver and counts how often it is invoked."""

    def __init__(self, solver: Solver = zielonka) -> None:
        self._solver = solver
        self._calls = 0

    @property
    def calls(self) -> int:
        return self._calls

    def __call__(self, game: ParityGame) -> SolveResult:
        self._calls += 1
        return self._solver(game)


def solve_parity(game: ParityGame, solver: Solver | None = None) -> SolveResult:
    """Winning regions and uniform positional winning strategies for both players."""
    return (solver or zielonka)(game)


def solve_parity_safety(
    game: ParityGame, unsafe: Iterable[int], solver: Solver | None = None
) -> SolveResult:
    """Solve the game whose condition is parity and never visiting ``unsafe``.

    Player 1's attractor ``W`` to ``unsafe`` is removed and the remaining
    subgame solved; Player 1 wins ``W`` plus his subgame region. Player 0's
    strategy never leaves the complement of ``W``.
    """
    arena = game.arena
    unsafe = frozenset(unsafe)
    if not unsafe:
        return solve_parity(game, solver)
    attr, attr_strategy = attractor(arena, 1, unsafe)
    rest = [v for v in arena.vertices if v not in attr]
    if not rest:
        return SolveResult(frozenset(), attr, PositionalStrategy({}), attr_strategy)
    sub, kept = restrict_with_map(game, rest)
    res = solve_parity(sub, solver)
    w0 = frozenset(kept[i] for i in res.w0)
    w1 = attr | frozenset(kept[i] for i in res.w1)
    s0 = {kept[i]: kept[j] for i, j in res.strategy0.choice.items()}
    s1 = {kept[i]: kept[j] for i, j in res.strategy1.choice.items()}
    for v, w in attr_strategy.choice.items():
        s1[v] = w
    for v in unsafe:
        if arena.owner[v] == 1:
            s1[v] = arena.succ[v][0]
    return SolveResult(w0, w1, PositionalStrategy(s0), PositionalStrategy(s1))
