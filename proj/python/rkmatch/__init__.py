"""Rabin-Karp exact matching with a grid/block/thread parallel engine."""

from . import _rkmatch
from ._rkmatch import (
    CorrectnessError,
    DnaSpec,
    LaunchConfig,
    MatchResult,
    PatternSet,
    SearchStats,
    ThreadCoord,
    cli_run,
    generate,
    hash_full,
    hash_pattern_host,
    hash_window,
    offset_of,
    plan_launch,
    plant,
    roll,
    search_multi,
    search_naive,
    search_parallel,
    search_sequential,
    speedup,
    sweep,
)

__all__ = [
    "CorrectnessError",
    "DnaSpec",
    "LaunchConfig",
    "MatchResult",
    "PatternSet",
    "SearchStats",
    "ThreadCoord",
    "cli_run",
    "generate",
    "hash_full",
    "hash_pattern_host",
    "hash_window",
    "offset_of",
    "plan_launch",
    "plant",
    "roll",
    "search_multi",
    "search_naive",
    "search_parallel",
    "search_sequential",
    "speedup",
    "sweep",
]
