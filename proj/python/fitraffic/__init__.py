"""Deterministic traffic cellular automaton with maximum speed m."""

from fractions import Fraction

from . import _core
from ._core import (
    __version__,
    asymptotic_block_prob,
    diagram_csv,
    enumerate_preimages,
    exact_block_prob,
    exact_flow,
    flow,
    hypergeometric_flow,
    init_random,
    is_admissible,
    simulate,
    simulate_csv,
    steady_block_prob,
    steady_flow,
    step,
    windowed_evolve,
)


def _rho_text(rho):
    return str(Fraction(rho)) if not isinstance(rho, str) else rho


def exact_block_prob_rational(m, t, rho):
    """P_t as a Fraction; rho may be a Fraction, int or "p/q" string."""
    return Fraction(_core.exact_block_prob_rational(m, t, _rho_text(rho)))


def exact_flow_rational(m, t, rho):
    return Fraction(_core.exact_flow_rational(m, t, _rho_text(rho)))


def flow_identity_residual(config, m):
    return Fraction(_core.flow_identity_residual(config, m))


def path_count(n0, n1, m):
    return int(_core.path_count(n0, n1, m))


def count_preimages(m, n):
    return int(_core.count_preimages(m, n))


__all__ = [
    "__version__",
    "asymptotic_block_prob",
    "count_preimages",
    "diagram_csv",
    "enumerate_preimages",
    "exact_block_prob",
    "exact_block_prob_rational",
    "exact_flow",
    "exact_flow_rational",
    "flow",
    "flow_identity_residual",
    "hypergeometric_flow",
    "init_random",
    "is_admissible",
    "path_count",
    "simulate",
    "simulate_csv",
    "steady_block_prob",
    "steady_flow",
    "step",
    "windowed_evolve",
]
