"""The rigged game, in which Player 1 decides when disturbances happen.

Every original vertex becomes a Player-1 vertex. At a former Player-0 vertex
``v`` Player 1 either takes a disturbance edge or hands over to the barred
copy of ``v``, where Player 0 picks a standard edge. Player 0 wins the rigged
game from ``v`` iff she can win from ``v`` under infinitely many
disturbances.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .game import Arena, ParityGame, PositionalStrategy, StrategyError
from .parity import Solver, solve_parity


@dataclass(frozen=True)
class RiggedGame:
    game: ParityGame
    barred_of: dict[int, int]
    original_of: tuple[int, ...]


def build_rigged(game: ParityGame) -> RiggedGame:
    arena = game.arena
    n = arena.n
    p0 = arena.player_vertices(0)
    barred_of = {v: n + i for i, v in enumerate(p0)}
    succ: list[tuple[int, ...]] = []
    for v in arena.vertices:
        if arena.owner[v] == 0:
            succ.append(tuple(sorted(set(arena.dsucc[v]) | {barred_of[v]})))
        else:
            succ.append(arena.succ[v])
    for v in p0:
        succ.append(arena.succ[v])
    names = None
    if arena.names is not None:
        names = tuple(arena.names) + tuple(f"{arena.name(v)}_bar" for v in p0)
    rigged = Arena(
        owner=(1,) * n + (0,) * len(p0),
        succ=tuple(succ),
        dsucc=((),) * (n + len(p0)),
        names=names,
    )
    color = tuple(game.color) + tuple(game.color[v] for v in p0)
    return RiggedGame(
        game=ParityGame(rigged, color),
        barred_of=barred_of,
        original_of=tuple(range(n)) + tuple(p0),
    )


def project_rigged_strategy(
    rigged: RiggedGame, sigma_rig: PositionalStrategy, region: Iterable[int] | None = None
) -> PositionalStrategy:
    """Read Player 0's choice at ``v`` off her choice at the barred copy of ``v``.

    With ``region`` the result is limited to the region, and every Player-0
    vertex of the region must have a choice. (A barred copy can be won while
    its original is lost, since Player 1 may disturb at the original.)
    """
    choice = {
        v: sigma_rig.choice[b] for v, b in rigged.barred_of.items() if b in sigma_rig.choice
    }
    if region is not None:
        region = set(region)
        for v in region:
            if v in rigged.barred_of and v not in choice:
                raise StrategyError(f"rigged strategy undefined at barred copy of vertex {v}")
        choice = {v: w for v, w in choice.items() if v in region}
    return PositionalStrategy(choice)


def omega_plus_one_region(
    game: ParityGame, solver: Solver | None = None
) -> tuple[frozenset[int], PositionalStrategy]:
    """Vertices of resilience ω+1 and a positional strategy achieving it there."""
    rigged = build_rigged(game)
    res = solve_parity(rigged.game, solver)
    region = frozenset(v for v in res.w0 if v < game.n)
    return region, project_rigged_strategy(rigged, res.strategy0, region)
