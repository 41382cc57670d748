"""Small hand-built games used in the documentation and as golden test vectors.

In :func:`running_example` vertex ``v1``..``v9`` has id ``1``..``9`` and
``v10`` has id ``0``, so that ids and names agree wherever possible.
"""
from __future__ import annotations

from .game import ParityGame


def _build(layout, edges, disturbances):
    names = list(layout)
    index = {name: i for i, name in enumerate(names)}
    owner = [layout[name][0] for name in names]
    color = [layout[name][1] for name in names]
    return ParityGame.build(
        owner,
        color,
        [(index[a], index[b]) for a, b in edges],
        [(index[a], index[b]) for a, b in disturbances],
        names,
    )


def running_example() -> ParityGame:
    """Ten vertices spanning all four resilience classes.

    Resilience: v1 0; v2, v3, v4, v6 1; v5 2; v7, v8 ω; v9, v10 ω+1.
    """
    layout = {
        "v10": (1, 0),
        "v1": (1, 1),
        "v2": (0, 2),
        "v3": (1, 1),
        "v4": (0, 1),
        "v5": (0, 0),
        "v6": (1, 1),
        "v7": (0, 0),
        "v8": (1, 1),
        "v9": (0, 0),
    }
    edges = [
        ("v6", "v4"), ("v6", "v5"), ("v6", "v7"), ("v6", "v9"),
        ("v4", "v4"), ("v4", "v2"),
        ("v5", "v5"),
        ("v3", "v2"),
        ("v2", "v2"),
        ("v1", "v1"),
        ("v7", "v7"),
        ("v9", "v9"),
        ("v8", "v7"),
        ("v10", "v9"),
    ]
    disturbances = [("v5", "v3"), ("v2", "v1"), ("v7", "v8"), ("v9", "v10")]
    return _build(layout, edges, disturbances)


def omega_split_game() -> ParityGame:
    """Every vertex has resilience ω; only v'3 has an odd color."""
    layout = {
        "v0": (0, 0), "v1": (0, 0), "v2": (0, 0), "v3": (0, 0),
        "v'1": (0, 0), "v'2": (0, 0), "v'3": (0, 1),
    }
    edges = [
        ("v0", "v1"), ("v0", "v'1"),
        ("v1", "v2"), ("v2", "v3"),
        ("v'1", "v'2"), ("v'2", "v3"),
        ("v3", "v0"), ("v'3", "v0"),
    ]
    disturbances = [("v1", "v'2"), ("v'2", "v'3")]
    return _build(layout, edges, disturbances)


def visit_count_arena() -> ParityGame:
    """Two Player-0 vertices ``v -> v'``, ``v'`` loops and may be disturbed back to ``v``.

    The colors are placeholders: the intended condition bounds the number of
    visits to ``v`` and is handled through :func:`reduction.counter_reduction`.
    """
    layout = {"v": (0, 0), "v'": (0, 0)}
    return _build(layout, [("v", "v'"), ("v'", "v'")], [("v'", "v")])


def recovery_game() -> ParityGame:
    """v0 1, v3 ω+1, v1, v2, v'2 0; both moves at v1 are optimal."""
    layout = {"v0": (0, 0), "v1": (0, 1), "v2": (0, 1), "v'2": (0, 1), "v3": (0, 0)}
    edges = [
        ("v0", "v0"), ("v1", "v2"), ("v1", "v'2"),
        ("v2", "v2"), ("v'2", "v'2"), ("v3", "v3"),
    ]
    disturbances = [("v0", "v1"), ("v'2", "v3")]
    return _build(layout, edges, disturbances)


def memory_game() -> ParityGame:
    """Resilience v0 0, v1 1, v2 1; looping forever in v1 loses."""
    layout = {"v0": (0, 1), "v1": (0, 1), "v2": (0, 2)}
    edges = [("v0", "v0"), ("v2", "v1"), ("v1", "v2"), ("v1", "v1")]
    return _build(layout, edges, [("v2", "v0")])


def tradeoff_game() -> ParityGame:
    """From v1, moving to v2 sees color 2 but has resilience 1; v0 has resilience 2."""
    layout = {"v0": (0, 0), "v1": (0, 1), "v2": (0, 2), "v0'": (0, 0), "v3": (0, 3)}
    edges = [
        ("v1", "v0"), ("v1", "v2"),
        ("v3", "v3"), ("v0", "v0"), ("v2", "v2"), ("v0'", "v0'"),
    ]
    disturbances = [("v2", "v3"), ("v0", "v0'"), ("v0'", "v3")]
    return _build(layout, edges, disturbances)


GALLERY = {
    "running": running_example,
    "omega-split": omega_split_game,
    "visit-count": visit_count_arena,
    "recovery": recovery_game,
    "memory": memory_game,
    "tradeoff": tradeoff_game,
}
