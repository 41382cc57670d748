"""Seeded random games for property tests and benchmarks."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .game import Arena, ParityGame


@dataclass(frozen=True)
class RandomGameParams:
    vertex_count: int
    max_color: int = 3
    min_out_degree: int = 1
    max_out_degree: int = 3
    # chance that a given (Player-0 vertex, vertex) pair gets a disturbance edge
    disturbance_probability: float = 0.2
    # chance that a vertex belongs to Player 0
    owner_balance: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be at least 1")
        if not 1 <= self.min_out_degree <= self.max_out_degree:
            raise ValueError("need 1 <= min_out_degree <= max_out_degree")
        if self.max_color < 0:
            raise ValueError("max_color must be non-negative")


def generate_random(params: RandomGameParams) -> ParityGame:
    """A valid game drawn deterministically from ``params.seed``.

    Games need not be connected. Out-degrees are capped by the vertex count.
    """
    rng = random.Random(params.seed)
    n = params.vertex_count
    owner = tuple(0 if rng.random() < params.owner_balance else 1 for _ in range(n))
    color = tuple(rng.randint(0, params.max_color) for _ in range(n))
    succ = []
    for _ in range(n):
        deg = min(rng.randint(params.min_out_degree, params.max_out_degree), n)
        succ.append(tuple(sorted(rng.sample(range(n), deg))))
    dsucc = []
    for v in range(n):
        if owner[v] == 0 and params.disturbance_probability > 0:
            dsucc.append(tuple(w for w in range(n) if rng.random() < params.disturbance_probability))
        else:
            dsucc.append(())
    return ParityGame(Arena(owner=owner, succ=tuple(succ), dsucc=tuple(dsucc)), color)
