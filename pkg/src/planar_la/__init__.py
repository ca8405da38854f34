"""Partition the edges of a planar graph into few linear forests."""

from .bounded import ReductionTrace, choose_k, reduce_bounded, replay, solve_bounded
from .coloring import LinearColoring
from .configurations import ReductionStep, apply_reduction, detect_at, find_any
from .errors import (
    EngineFailure,
    ExtensionFailed,
    NoConfigurationFound,
    PlanarLAError,
    QueueExhausted,
)
from .extensions import extend
from .generate import gen_planar
from .graph import Graph
from .highdegree import highdegree_k, solve_highdegree
from .oracle import brute_force_la
from .solver import solve
from .verify import VerificationReport, verify

__all__ = [
    "EngineFailure",
    "ExtensionFailed",
    "Graph",
    "LinearColoring",
    "NoConfigurationFound",
    "PlanarLAError",
    "QueueExhausted",
    "ReductionStep",
    "ReductionTrace",
    "VerificationReport",
    "apply_reduction",
    "brute_force_la",
    "choose_k",
    "detect_at",
    "extend",
    "find_any",
    "gen_planar",
    "highdegree_k",
    "reduce_bounded",
    "replay",
    "solve",
    "solve_bounded",
    "solve_highdegree",
    "verify",
]
