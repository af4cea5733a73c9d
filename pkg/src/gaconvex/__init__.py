"""Numerical verification of Hermite-Hadamard type inequalities for GA-s-convex functions."""

__version__ = "0.1.0"

from .means import (  # noqa: E402
    arithmetic_mean,
    geometric_mean,
    identric_mean,
    logarithmic_mean,
    mean_chain,
    p_log_mean,
)

__all__ = [
    "__version__", "arithmetic_mean", "geometric_mean", "identric_mean",
    "logarithmic_mean", "mean_chain", "p_log_mean",
]
