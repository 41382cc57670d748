"""Rankings and the fixpoint that determines every finite resilience value.

Starting from Player 1's winning region at rank 0, disturbance updates and
risk updates alternate until neither changes the ranking. The vertices that
end up ranked are exactly those of finite resilience, and their rank is
their resilience.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Mapping

from .game import ParityGame
from .parity import Solver, solve_parity, solve_parity_safety

log = logging.getLogger(__name__)


class RankingError(RuntimeError):
    """The fixpoint iteration misbehaved; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Ranking:
    """Partial map from vertices to non-negative integers, stored densely."""

    values: tuple[int | None, ...]

    @classmethod
    def empty(cls, n: int) -> "Ranking":
        return cls((None,) * n)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int]) -> "Ranking":
        return cls(tuple(mapping.get(v) for v in range(n)))

    def __getitem__(self, v: int) -> int | None:
        return self.values[v]

    def __contains__(self, v: int) -> bool:
        return self.values[v] is not None

    def __len__(self) -> int:
        return len(self.values)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(v for v, r in enumerate(self.values) if r is not None)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(r for r in self.values if r is not None)

    def at_most(self, k: int) -> frozenset[int]:
        return frozenset(v for v, r in enumerate(self.values) if r is not None and r <= k)

    def as_dict(self) -> dict[int, int]:
        return {v: r for v, r in enumerate(self.values) if r is not None}

    def refines(self, other: "Ranking") -> bool:
        """Whether this ranking refines ``other`` (larger domain, no larger value)."""
        return all(
            mine is not None and mine <= theirs
            for mine, theirs in zip(self.values, other.values)
            if theirs is not None
        )


def initial_ranking(game: ParityGame, solver: Solver | None = None) -> Ranking:
    w1 = solve_parity(game, solver).w1
    return Ranking.from_mapping(game.n, {v: 0 for v in w1})


def disturbance_update(game: ParityGame, r: Ranking) -> Ranking:
    values = []
    for v in game.vertices:
        options = [r[w] + 1 for w in game.arena.dsucc[v] if r[w] is not None]
        if r[v] is not None:
            options.append(r[v])
        values.append(min(options) if options else None)
    return Ranking(tuple(values))


def _risk_region(game: ParityGame, r: Ranking, k: int, solver: Solver | None) -> frozenset[int]:
    return solve_parity_safety(game, r.at_most(k), solver).w1


def risk_update(game: ParityGame, r: Ranking, solver: Solver | None = None) -> Ranking:
    """Literal risk update: solves one safety-conjoined game per value in the image."""
    values: list[int | None] = [None] * game.n
    for k in sorted(r.image, reverse=True):
        for v in _risk_region(game, r, k, solver):
            values[v] = k
    return Ranking(tuple(values))


def _incremental_risk_update(game: ParityGame, r: Ranking, k: int, solver: Solver | None) -> Ranking:
    # Ranked vertices keep their value and new ones can only receive k, so a
    # single solve for k is enough.
    if k not in r.image:
        return r
    region = _risk_region(game, r, k, solver)
    return Ranking(tuple(k if (x is None and v in region) else x for v, x in enumerate(r.values)))


def ranking_sequence(
    game: ParityGame,
    steps: int | None = None,
    solver: Solver | None = None,
    incremental: bool = False,
) -> list[Ranking]:
    """``r_0, ..., r_steps`` with odd steps disturbance updates, even steps risk updates.

    ``steps`` defaults to ``2|V| + 2``. The literal updates are used unless
    ``incremental`` is set.
    """
    if steps is None:
        steps = 2 * game.n + 2
    seq = [initial_ranking(game, solver)]
    for j in range(1, steps + 1):
        seq.append(_step(game, seq[-1], j, solver, incremental))
    return seq


def _step(game, r, j, solver, incremental):
    if j % 2:
        return disturbance_update(game, r)
    if incremental:
        return _incremental_risk_update(game, r, j // 2, solver)
    return risk_update(game, r, solver)


def _describe(game: ParityGame, before: Ranking, after: Ranking) -> str:
    new = [f"{game.arena.name(v)}={after[v]}" for v in game.vertices if before[v] is None and after[v] is not None]
    return " ".join(new) if new else "-"


def rank_fixpoint(
    game: ParityGame,
    solver: Solver | None = None,
    incremental: bool = True,
    debug: bool = False,
    trace: Callable[[str], None] | None = None,
) -> Ranking:
    """The stable ranking ``r*``.

    Iterates rounds of a disturbance update followed by a risk update until a
    whole round changes nothing. With ``debug`` each incremental risk update is
    checked against the literal one.
    """
    r = initial_ranking(game, solver)
    if trace:
        trace(f"r_0 initial: {_describe(game, Ranking.empty(game.n), r)}")
    # r* = r_{2|V|}; one more full round confirms it
    cap = 2 * game.n + 4
    j = 0
    while True:
        changed = False
        for _ in range(2):
            j += 1
            if j > cap:
                raise RankingError(f"ranking did not stabilise within {cap} steps")
            nxt = _step(game, r, j, solver, incremental)
            if debug and j % 2 == 0:
                literal = risk_update(game, r, solver)
                if literal != nxt:
                    raise RankingError(
                        f"step {j}: incremental risk update {nxt.as_dict()} "
                        f"differs from literal {literal.as_dict()}"
                    )
            if trace:
                kind = "disturbance" if j % 2 else "risk"
                trace(f"r_{j} {kind}: {_describe(game, r, nxt)}")
            changed |= nxt != r
            r = nxt
        if not changed:
            log.debug("ranking stable after %d steps", j)
            return r

