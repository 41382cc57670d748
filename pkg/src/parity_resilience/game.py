"""Arenas with disturbance edges, parity games, resilience values and strategies.

Vertices are dense integer ids ``0..n-1``. Edge sets are stored as sorted
successor tuples per vertex; duplicate edges collapse at construction.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

PLAYER0 = 0
PLAYER1 = 1


class IllFormedGame(ValueError):
    """Raised when a game or subgame violates the structural invariants."""


def _successor_table(n: int, edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    succ: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IllFormedGame(f"edge ({u}, {v}) has an undeclared endpoint")
        succ[u].add(v)
    return tuple(tuple(sorted(s)) for s in succ)


@dataclass(frozen=True)
class Arena:
    """Game graph with an ownership partition and disturbance edges.

    ``owner[v]`` is 0 or 1. ``succ[v]`` lists the standard successors of ``v``
    and ``dsucc[v]`` its disturbance successors. Construction does not
    validate; call :func:`validate` for that.
    """

    owner: tuple[int, ...]
    succ: tuple[tuple[int, ...], ...]
    dsucc: tuple[tuple[int, ...], ...]
    names: tuple[str | None, ...] | None = None
    pred: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.owner)
        if len(self.succ) != n or len(self.dsucc) != n:
            raise IllFormedGame("owner, succ and dsucc must have one entry per vertex")
        if self.names is not None and len(self.names) != n:
            raise IllFormedGame("names must have one entry per vertex")
        pred: list[list[int]] = [[] for _ in range(n)]
        for u, vs in enumerate(self.succ):
            for v in vs:
                if 0 <= v < n:
                    pred[v].append(u)
        object.__setattr__(self, "pred", tuple(tuple(p) for p in pred))

    @classmethod
    def from_edges(
        cls,
        owner: Sequence[int],
        edges: Iterable[tuple[int, int]],
        disturbances: Iterable[tuple[int, int]] = (),
        names: Sequence[str | None] | None = None,
    ) -> "Arena":
        n = len(owner)
        return cls(
            owner=tuple(owner),
            succ=_successor_table(n, edges),
            dsucc=_successor_table(n, disturbances),
            names=tuple(names) if names is not None else None,
        )

    @property
    def n(self) -> int:
        return len(self.owner)

    @property
    def vertices(self) -> range:
        return range(len(self.owner))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, vs in enumerate(self.succ) for v in vs]

    def disturbance_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, vs in enumerate(self.dsucc) for v in vs]

    def player_vertices(self, player: int) -> list[int]:
        return [v for v, p in enumerate(self.owner) if p == player]

    def name(self, v: int) -> str:
        if self.names is not None and self.names[v] is not None:
            return self.names[v]
        return str(v)


@dataclass(frozen=True)
class ParityGame:
    """An arena with a max-parity coloring."""

    arena: Arena
    color: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.color) != self.arena.n:
            raise IllFormedGame("color must be total on the arena's vertices")
        if any(c < 0 for c in self.color):
            raise IllFormedGame("colors must be non-negative")

    @classmethod
    def build(
        cls,
        owner: Sequence[int],
        color: Sequence[int],
        edges: Iterable[tuple[int, int]],
        disturbances: Iterable[tuple[int, int]] = (),
        names: Sequence[str | None] | None = None,
    ) -> "ParityGame":
        return cls(Arena.from_edges(owner, edges, disturbances, names), tuple(color))

    @property
    def n(self) -> int:
        return self.arena.n

    @property
    def vertices(self) -> range:
        return self.arena.vertices

    def vertex(self, name: str) -> int:
        """Look up a vertex id by its display name."""
        names = self.arena.names or ()
        for v, nm in enumerate(names):
            if nm == name:
                return v
        raise KeyError(name)


def validate(arena: Arena) -> list[str]:
    """Return a description of every violated arena invariant (empty if none)."""
    problems = []
    n = arena.n
    for v in arena.vertices:
        if arena.owner[v] not in (PLAYER0, PLAYER1):
            problems.append(f"vertex {v}: owner {arena.owner[v]} is not 0 or 1")
        if not arena.succ[v]:
            problems.append(f"vertex {v}: no standard successor")
        for w in arena.succ[v]:
            if not 0 <= w < n:
                problems.append(f"edge ({v}, {w}): undeclared endpoint")
        for w in arena.dsucc[v]:
            if not 0 <= w < n:
                problems.append(f"disturbance edge ({v}, {w}): undeclared endpoint")
        if arena.dsucc[v] and arena.owner[v] != PLAYER0:
            for w in arena.dsucc[v]:
                problems.append(f"disturbance edge ({v}, {w}): disturbance edge from Player-1 vertex")
    return problems


def restrict(game: ParityGame, keep: Iterable[int]) -> ParityGame:
    """Induced subgame on ``keep``, with vertices renumbered densely.

    Returns the subgame; the ``i``-th vertex of the result is the ``i``-th
    smallest element of ``keep``. Use :func:`restrict_with_map` to also get the
    id mapping.
    """
    return restrict_with_map(game, keep)[0]


def restrict_with_map(game: ParityGame, keep: Iterable[int]) -> tuple[ParityGame, tuple[int, ...]]:
    kept = tuple(sorted(set(keep)))
    index = {v: i for i, v in enumerate(kept)}
    arena = game.arena
    succ = []
    dsucc = []
    for v in kept:
        s = tuple(index[w] for w in arena.succ[v] if w in index)
        if not s:
            raise IllFormedGame(f"ill-formed subgame: vertex {v} loses all standard successors")
        succ.append(s)
        dsucc.append(tuple(index[w] for w in arena.dsucc[v] if w in index))
    names = tuple(arena.names[v] for v in kept) if arena.names is not None else None
    sub = Arena(
        owner=tuple(arena.owner[v] for v in kept),
        succ=tuple(succ),
        dsucc=tuple(dsucc),
        names=names,
    )
    return ParityGame(sub, tuple(game.color[v] for v in kept)), kept


@functools.total_ordering
class Resilience:
    """An element of ``{0, 1, ...} ∪ {ω, ω+1}``.

    Use :meth:`finite`, :data:`OMEGA` and :data:`OMEGA_PLUS_ONE` to construct.
    """

    __slots__ = ("_level", "_k")

    def __init__(self, level: int, k: int = 0) -> None:
        if level not in (0, 1, 2) or k < 0 or (level and k):
            raise ValueError(f"invalid resilience ({level}, {k})")
        self._level = level
        self._k = k

    @classmethod
    def finite(cls, k: int) -> "Resilience":
        return cls(0, k)

    @classmethod
    def parse(cls, text: str) -> "Resilience":
        text = text.strip()
        if text == "omega":
            return OMEGA
        if text == "omega+1":
            return OMEGA_PLUS_ONE
        if text.isdigit():
            return cls.finite(int(text))
        raise ValueError(f"not a resilience value: {text!r}")

    @property
    def is_finite(self) -> bool:
        return self._level == 0

    @property
    def value(self) -> int:
        """The finite value; raises for ω and ω+1."""
        if self._level:
            raise ValueError(f"{self} is not finite")
        return self._k

    def successor(self) -> "Resilience":
        if self._level == 0:
            return Resilience.finite(self._k + 1)
        if self._level == 1:
            return OMEGA_PLUS_ONE
        raise ValueError("omega+1 has no successor")

    def _key(self) -> tuple[int, int]:
        return (self._level, self._k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self._level == 0 and self._k == other
        if not isinstance(other, Resilience):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Resilience.finite(other)
        if not isinstance(other, Resilience):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return ("{}".format(self._k), "omega", "omega+1")[self._level]

    def __repr__(self) -> str:
        return f"Resilience({self})"


OMEGA = Resilience(1)
OMEGA_PLUS_ONE = Resilience(2)


class StrategyError(ValueError):
    """Raised when a strategy is undefined where it is needed, or picks a non-edge."""


@dataclass(frozen=True)
class PositionalStrategy:
    """Move choices ``choice[v]`` for (some of) one player's vertices."""

    choice: Mapping[int, int]

    def __call__(self, v: int) -> int:
        try:
            return self.choice[v]
        except KeyError:
            raise StrategyError(f"strategy undefined at vertex {v}") from None

    def __contains__(self, v: int) -> bool:
        return v in self.choice

    def __len__(self) -> int:
        return len(self.choice)

    def check(self, arena: Arena) -> None:
        for v, w in self.choice.items():
            if w not in arena.succ[v]:
                raise StrategyError(f"strategy picks ({v}, {w}), which is not a standard edge")


@dataclass(frozen=True)
class MemoryStructure:
    """Memory states, per-vertex initial state and ``(state, vertex)`` update."""

    states: tuple[Hashable, ...]
    init: tuple[Hashable, ...]
    update: Mapping[tuple[Hashable, int], Hashable]

    @classmethod
    def from_functions(cls, states, n: int, init, update) -> "MemoryStructure":
        states = tuple(states)
        return cls(
            states=states,
            init=tuple(init(v) for v in range(n)),
            update={(m, v): update(m, v) for m in states for v in range(n)},
        )

    @classmethod
    def trivial(cls, n: int) -> "MemoryStructure":
        return cls.from_functions((0,), n, lambda v: 0, lambda m, v: 0)

    def check(self, n: int) -> None:
        known = set(self.states)
        if len(self.init) != n or any(m not in known for m in self.init):
            raise IllFormedGame("memory init must map every vertex to a known state")
        for m in self.states:
            for v in range(n):
                if self.update.get((m, v)) not in known:
                    raise IllFormedGame(f"memory update undefined or unknown at ({m!r}, {v})")


@dataclass(frozen=True)
class FiniteStateStrategy:
    """A Player-0 strategy driven by a memory structure.

    The memory state at a vertex already accounts for that vertex, so the move
    at ``v`` with memory ``m`` is ``next_move[(v, m)]``.
    """

    memory: MemoryStructure
    next_move: Mapping[tuple[int, Hashable], int]

    def __call__(self, v: int, m: Hashable) -> int:
        try:
            return self.next_move[(v, m)]
        except KeyError:
            raise StrategyError(f"strategy undefined at ({v}, {m!r})") from None

    def check(self, arena: Arena) -> None:
        for (v, _m), w in self.next_move.items():
            if w not in arena.succ[v]:
                raise StrategyError(f"strategy picks ({v}, {w}), which is not a standard edge")


@dataclass(frozen=True)
class Lasso:
    """The play ``stem · cycle · cycle · ...``.

    Entries are ``(vertex, disturbed)``, where ``disturbed`` marks a vertex
    entered over a disturbance edge. ``stem[0]`` is the start vertex (never
    disturbed) and the stem ends at the vertex where the cycle closes, so
    ``cycle[-1][0] == stem[-1][0]``.
    """

    stem: tuple[tuple[int, bool], ...]
    cycle: tuple[tuple[int, bool], ...]

    @property
    def start(self) -> int:
        return self.stem[0][0]

    @property
    def disturbances(self) -> Resilience:
        """Number of disturbances along the infinite play (finite or ω)."""
        if any(d for _, d in self.cycle):
            return OMEGA
        return Resilience.finite(sum(d for _, d in self.stem))

    def prefix(self, length: int) -> list[tuple[int, bool]]:
        """The first ``length`` entries of the play."""
        out = list(self.stem[:length])
        while len(out) < length:
            out.extend(self.cycle[: length - len(out)])
        return out

    def __str__(self) -> str:
        def fmt(part):
            return " ".join(f"{v}{'*' if d else ''}" for v, d in part)

        return f"stem: {fmt(self.stem)} | cycle: {fmt(self.cycle)}"
