"""Resilience of parity games with disturbance edges.

>>> from parity_resilience import running_example, synthesize
>>> rmap, strategy = synthesize(running_example())
>>> [str(r) for r in rmap]
['omega+1', '0', '1', '1', '1', '2', '1', 'omega', 'omega', 'omega+1']
"""
from .formats import FormatError, parse_game, parse_strategy, serialize_game, serialize_report, serialize_strategy
from .gallery import GALLERY, running_example
from .game import (
    OMEGA,
    OMEGA_PLUS_ONE,
    Arena,
    FiniteStateStrategy,
    IllFormedGame,
    Lasso,
    MemoryStructure,
    ParityGame,
    PositionalStrategy,
    Resilience,
    StrategyError,
    restrict,
    validate,
)
from .generator import RandomGameParams, generate_random
from .oracle import InstanceTooLarge, brute_force_resilience, check_resilient, strategy_resilience
from .parity import CountingSolver, SolveResult, attractor, solve_parity, solve_parity_safety, zielonka
from .ranking import Ranking, rank_fixpoint
from .reduction import counter_reduction, lift_strategy, product_arena, reduce_resilience
from .rigged import build_rigged, omega_plus_one_region
from .synthesis import resilience_map, synthesize

__all__ = [
    "OMEGA",
    "OMEGA_PLUS_ONE",
    "Arena",
    "CountingSolver",
    "FiniteStateStrategy",
    "FormatError",
    "GALLERY",
    "IllFormedGame",
    "InstanceTooLarge",
    "Lasso",
    "MemoryStructure",
    "ParityGame",
    "PositionalStrategy",
    "RandomGameParams",
    "Ranking",
    "Resilience",
    "SolveResult",
    "StrategyError",
    "attractor",
    "brute_force_resilience",
    "build_rigged",
    "check_resilient",
    "counter_reduction",
    "generate_random",
    "lift_strategy",
    "omega_plus_one_region",
    "parse_game",
    "parse_strategy",
    "product_arena",
    "rank_fixpoint",
    "reduce_resilience",
    "resilience_map",
    "restrict",
    "running_example",
    "serialize_game",
    "serialize_report",
    "serialize_strategy",
    "solve_parity",
    "solve_parity_safety",
    "strategy_resilience",
    "synthesize",
    "validate",
    "zielonka",
]
