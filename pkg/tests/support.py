"""Shared helpers: the seeded random suite and a hypothesis strategy for games."""
from __future__ import annotations

from hypothesis import strategies as st

from parity_resilience.game import Arena, ParityGame
from parity_resilience.generator import RandomGameParams, generate_random

DISTURBANCE_LEVELS = (0.0, 0.2, 0.5)


def suite_params(count: int = 240, base_seed: int = 7000) -> list[RandomGameParams]:
    """Games with at most 6 vertices, colors <= 3, out-degree <= 3."""
    out = []
    for i in range(count):
        out.append(
            RandomGameParams(
                vertex_count=1 + (i // 3) % 6,
                max_color=3,
                max_out_degree=3,
                disturbance_probability=DISTURBANCE_LEVELS[i % 3],
                seed=base_seed + i,
            )
        )
    return out


def random_suite(count: int = 240, base_seed: int = 7000) -> list[ParityGame]:
    return [generate_random(p) for p in suite_params(count, base_seed)]


@st.composite
def games(draw, max_vertices: int = 6, max_color: int = 3, disturbances: bool = True):
    n = draw(st.integers(1, max_vertices))
    ids = st.integers(0, n - 1)
    owner = tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    color = tuple(draw(st.lists(st.integers(0, max_color), min_size=n, max_size=n)))
    succ = tuple(tuple(sorted(draw(st.sets(ids, min_size=1, max_size=3)))) for _ in range(n))
    dsucc = []
    for v in range(n):
        if disturbances and owner[v] == 0:
            dsucc.append(tuple(sorted(draw(st.sets(ids, max_size=2)))))
        else:
            dsucc.append(())
    return ParityGame(Arena(owner=owner, succ=succ, dsucc=tuple(dsucc)), color)


def one_vertex(color: int, owner: int = 0) -> ParityGame:
    return ParityGame.build([owner], [color], [(0, 0)])
