"""Reductions through memory structures, for prefix-dependent conditions.

A game reduces to a parity game on the product of its arena with a memory
structure when every play and its extended play have the same winner.
Resilience then transfers: ``r(v) = r'(v, init(v))``, and a positional
strategy on the product becomes a finite-state strategy on the original.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .game import (
    Arena,
    FiniteStateStrategy,
    MemoryStructure,
    ParityGame,
    PositionalStrategy,
    StrategyError,
)
from .parity import Solver
from .synthesis import ResilienceMap, synthesize


@dataclass(frozen=True)
class ProductTag:
    """Which ``(vertex, memory state)`` pair each product vertex stands for."""

    pairs: tuple[tuple[int, Hashable], ...]
    _index: dict[tuple[int, Hashable], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.pairs)})

    def id_of(self, v: int, m: Hashable) -> int:
        try:
            return self._index[(v, m)]
        except KeyError:
            raise KeyError(f"missing product vertex ({v}, {m!r})") from None

    def __getitem__(self, pid: int) -> tuple[int, Hashable]:
        return self.pairs[pid]

    def __len__(self) -> int:
        return len(self.pairs)


def product_arena(arena: Arena, memory: MemoryStructure) -> tuple[Arena, ProductTag]:
    """The arena over ``V × M``; moving to ``v'`` updates memory with ``v'``."""
    memory.check(arena.n)
    states = memory.states
    pairs = tuple((v, m) for v in arena.vertices for m in states)
    tag = ProductTag(pairs)
    upd = memory.update

    def lift(v, m, targets):
        return tuple(sorted(tag.id_of(w, upd[(m, w)]) for w in targets))

    names = None
    if arena.names is not None:
        names = tuple(f"({arena.name(v)},{m})" for v, m in pairs)
    product = Arena(
        owner=tuple(arena.owner[v] for v, _ in pairs),
        succ=tuple(lift(v, m, arena.succ[v]) for v, m in pairs),
        dsucc=tuple(lift(v, m, arena.dsucc[v]) for v, m in pairs),
        names=names,
    )
    return product, tag


def reduce_resilience(
    original: Arena,
    memory: MemoryStructure,
    expanded: ParityGame,
    tag: ProductTag,
    solver: Solver | None = None,
) -> ResilienceMap:
    """Resilience on the original arena, read off the expanded game at ``(v, init(v))``.

    Only meaningful when the expanded game's coloring really implements the
    original condition on extended plays; that cannot be checked here.
    """
    rmap, _ = synthesize(expanded, solver)
    return [rmap[tag.id_of(v, memory.init[v])] for v in original.vertices]


def lift_strategy(
    sigma_prod: PositionalStrategy,
    memory: MemoryStructure,
    tag: ProductTag,
    original: Arena | None = None,
) -> FiniteStateStrategy:
    """Turn a positional product strategy into a finite-state one over ``memory``.

    When ``original`` is given, a move is required for every Player-0 vertex
    and memory state.
    """
    next_move = {}
    for pid, target in sigma_prod.choice.items():
        v, m = tag[pid]
        next_move[(v, m)] = tag[target][0]
    if original is not None:
        for v in original.player_vertices(0):
            for m in memory.states:
                if (v, m) not in next_move:
                    raise StrategyError(f"strategy undefined at ({v}, {m!r})")
    return FiniteStateStrategy(memory, next_move)


def counter_memory(n: int, target: int, k: int) -> MemoryStructure:
    """Counts visits to ``target``, saturating at ``k + 1``."""
    cap = k + 1
    return MemoryStructure.from_functions(
        range(cap + 1),
        n,
        lambda v: 1 if v == target else 0,
        lambda m, v: min(m + (v == target), cap),
    )


def counter_reduction(
    arena: Arena, target: int, k: int
) -> tuple[MemoryStructure, ParityGame, ProductTag]:
    """Reduce "visit ``target`` at most ``k`` times" to a parity game.

    Product vertices whose counter has saturated get color 1, all others 0.
    Saturation is absorbing, so a play sees color 1 infinitely often iff it
    visits ``target`` more than ``k`` times.
    """
    if not 0 <= target < arena.n:
        raise ValueError(f"target {target} is not a vertex")
    if k < 0:
        raise ValueError("k must be non-negative")
    memory = counter_memory(arena.n, target, k)
    product, tag = product_arena(arena, memory)
    color = tuple(1 if m == k + 1 else 0 for _, m in tag.pairs)
    return memory, ParityGame(product, color), tag


def counter_colors(k: int):
    """Node coloring matching :func:`counter_reduction`, for the oracle."""

    def color(v: int, m: Hashable) -> int:
        return 1 if m == k + 1 else 0

    return color


def format_tag(tag: ProductTag) -> str:
    return "".join(f"{pid} {v} {m}\n" for pid, (v, m) in enumerate(tag.pairs))


def parse_tag(text: str) -> ProductTag:
    pairs: list[tuple[int, Hashable]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts: Sequence[str] = line.split()
        if len(parts) != 3 or int(parts[0]) != len(pairs):
            raise ValueError(f"line {lineno}: expected '<product-id> <orig-id> <mem-state>' in order")
        state = int(parts[2]) if parts[2].lstrip("-").isdigit() else parts[2]
        pairs.append((int(parts[1]), state))
    return ProductTag(tuple(pairs))
