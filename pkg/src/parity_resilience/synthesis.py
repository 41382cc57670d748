"""Resilience of every vertex and a positional optimally resilient strategy.

For each vertex ``v`` a constituent strategy ``σ_v`` is taken from the game
that forbids vertices of smaller resilience (or from the rigged game for
resilience ω+1). Vertices are then ordered by resilience and id, and each
vertex follows the constituent of the least vertex whose plays reach it.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Iterable

from .game import OMEGA, OMEGA_PLUS_ONE, ParityGame, PositionalStrategy, Resilience
from .parity import Solver, solve_parity_safety
from .ranking import rank_fixpoint
from .rigged import omega_plus_one_region

ResilienceMap = list[Resilience]


class SynthesisError(RuntimeError):
    """An internal consistency check failed; indicates a bug upstream."""


def resilience_map(
    game: ParityGame, solver: Solver | None = None, incremental: bool = True, debug: bool = False
) -> ResilienceMap:
    ranking = rank_fixpoint(game, solver, incremental=incremental, debug=debug)
    top, _ = omega_plus_one_region(game, solver)
    return _combine(game, ranking, top)


def _combine(game, ranking, top) -> ResilienceMap:
    out = []
    for v in game.vertices:
        if ranking[v] is not None:
            if v in top:
                raise SynthesisError(f"vertex {v} has finite rank and resilience ω+1")
            out.append(Resilience.finite(ranking[v]))
        elif v in top:
            out.append(OMEGA_PLUS_ONE)
        else:
            out.append(OMEGA)
    return out


def _lowest_successor_strategy(game: ParityGame) -> PositionalStrategy:
    arena = game.arena
    return PositionalStrategy({v: arena.succ[v][0] for v in arena.player_vertices(0)})


def constituent_strategies(
    game: ParityGame,
    rmap: ResilienceMap,
    solver: Solver | None = None,
    top_strategy: PositionalStrategy | None = None,
) -> dict[int, PositionalStrategy]:
    """The strategy ``σ_v`` for every vertex ``v``.

    Vertices sharing a resilience value share one uniform strategy, so only
    one game is solved per distinct value.
    """
    by_value: dict[Resilience, PositionalStrategy] = {}
    for value in sorted(set(rmap)):
        if value == Resilience.finite(0):
            by_value[value] = _lowest_successor_strategy(game)
            continue
        if value == OMEGA_PLUS_ONE:
            if top_strategy is None:
                _, top_strategy = omega_plus_one_region(game, solver)
            by_value[value] = top_strategy
            continue
        if value == OMEGA:
            unsafe = [v for v in game.vertices if rmap[v].is_finite]
        else:
            unsafe = [v for v in game.vertices if rmap[v] < value]
        res = solve_parity_safety(game, unsafe, solver)
        missing = [v for v in game.vertices if rmap[v] == value and v not in res.w0]
        if missing:
            raise SynthesisError(
                f"vertices {missing} of resilience {value} are not won in their safety game"
            )
        by_value[value] = res.strategy0
    return {v: by_value[rmap[v]] for v in game.vertices}


def reachable_set(
    game: ParityGame, sigma: PositionalStrategy, v: int, with_disturbances: bool
) -> frozenset[int]:
    """Vertices visited by plays from ``v`` consistent with ``sigma``."""
    arena = game.arena
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        nxt: Iterable[int]
        if arena.owner[u] == 0:
            nxt = [sigma(u)]
            if with_disturbances:
                nxt = nxt + list(arena.dsucc[u])
        else:
            nxt = arena.succ[u]
        for w in nxt:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def resilience_order(rmap: ResilienceMap) -> list[int]:
    """Vertices by ascending resilience, ties by ascending id."""
    return sorted(range(len(rmap)), key=lambda v: (rmap[v], v))


def responsible_vertex(
    game: ParityGame, rmap: ResilienceMap, constituents: dict[int, PositionalStrategy]
) -> list[int]:
    """For each vertex ``v``, the least vertex of the same resilience whose plays reach ``v``.

    "Least" refers to :func:`resilience_order`. Restricting to the same
    resilience matters: a constituent for a lower value can reach a vertex
    of higher value but only guarantees the lower one there.
    """
    owner: list[int | None] = [None] * game.n
    for u in resilience_order(rmap):
        reach = reachable_set(game, constituents[u], u, with_disturbances=rmap[u] == OMEGA_PLUS_ONE)
        for w in reach:
            if owner[w] is None and rmap[w] == rmap[u]:
                owner[w] = u
    if None in owner:
        raise SynthesisError("some vertex is in no reachable set")
    return owner  # type: ignore[return-value]


def compose_optimal(
    game: ParityGame, rmap: ResilienceMap, constituents: dict[int, PositionalStrategy]
) -> PositionalStrategy:
    m = responsible_vertex(game, rmap, constituents)
    return PositionalStrategy({v: constituents[m[v]](v) for v in game.arena.player_vertices(0)})


def synthesize(
    game: ParityGame,
    solver: Solver | None = None,
    incremental: bool = True,
    debug: bool = False,
    trace: Callable[[str], None] | None = None,
) -> tuple[ResilienceMap, PositionalStrategy]:
    """Resilience of every vertex and a positional optimally resilient strategy."""
    ranking = rank_fixpoint(game, solver, incremental=incremental, debug=debug, trace=trace)
    top, top_strategy = omega_plus_one_region(game, solver)
    rmap = _combine(game, ranking, top)
    constituents = constituent_strategies(game, rmap, solver, top_strategy)
    strategy = compose_optimal(game, rmap, constituents)
    return rmap, strategy
