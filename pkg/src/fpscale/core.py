"""Population-side data model and exact scale parameters.

A population is a fixed finite set of real values.  Everything downstream
(decompositions, expansions, simulation targets) is computed from the sorted
values, their consecutive spacings and the central moments, so those are
materialized once at construction time and frozen.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _sums
from .errors import ArgumentError, DataError, SizeError


class StatKind(str, Enum):
    """Which degree-two statistic a computation refers to."""

    GMD = "gmd"
    VAR = "var"


@dataclass(frozen=True)
class PopulationFrame:
    """Sorted finite population with derived quantities.

    values      sorted ascending, length N
    spacings    values[i+1] - values[i], length N - 1
    weights_a   (2i - N)/N for spacing index i = 1..N-1
    b1          population mean
    mu2..mu6    central moments
    """

    values: np.ndarray
    spacings: np.ndarray
    weights_a: np.ndarray
    b1: float
    mu2: float
    mu3: float
    mu4: float
    mu5: float
    mu6: float

    @property
    def size(self) -> int:
        return self.values.size


def build_population(raw) -> PopulationFrame:
    """Sort a copy of ``raw`` and populate every derived field.

    Raises SizeError for fewer than two values and DataError for non-finite
    input.  The original input order is not retained.
    """
    values = np.asarray(raw, dtype=np.float64)
    if values.ndim != 1:
        raise DataError("population values must be one-dimensional")
    if values.size < 2:
        raise SizeError(f"population needs at least 2 values, got {values.size}")
    if not np.all(np.isfinite(values)):
        raise DataError("population values must be finite")
    values = np.sort(values)
    values.setflags(write=False)
    n = values.size
    spacings = np.diff(values)
    spacings.setflags(write=False)
    i = np.arange(1, n, dtype=np.float64)
    weights_a = (2.0 * i - n) / n
    weights_a.setflags(write=False)
    b1 = float(values.mean())
    centered = values - b1
    moments = [float(np.mean(centered**k)) for k in range(2, 7)]
    return PopulationFrame(values, spacings, weights_a, b1, *moments)


def central_moment(pop: PopulationFrame, k: int) -> float:
    """k-th central moment, 2 <= k <= 6."""
    if not 2 <= k <= 6:
        raise ArgumentError(f"central moment order must be in 2..6, got {k}")
    return (pop.mu2, pop.mu3, pop.mu4, pop.mu5, pop.mu6)[k - 2]


def population_scale(pop: PopulationFrame, kind: StatKind) -> float:
    """Mean pairwise scale of the population.

    GMD: average absolute pairwise difference.  VAR: average half squared
    pairwise difference, which equals N/(N-1) times the central variance.
    Both are evaluated in O(N) from the sorted values; the pairwise sums are
    the test oracle.
    """
    n = pop.size
    if kind is StatKind.GMD:
        j = np.arange(1, n + 1, dtype=np.float64)
        return float(np.dot(2.0 * j - n - 1.0, pop.values)) * 2.0 / (n * (n - 1))
    return n / (n - 1) * pop.mu2


def delta_form(pop: PopulationFrame, naive: bool = False):
    """Squared GMD scale and VAR scale via the spacing double sums.

    Returns the pair (G_squared, V).  The cross terms are accumulated with
    prefix sums; ``naive=True`` runs the literal O(N^2) double loops.
    """
    n = pop.size
    d = pop.spacings
    g_sq = 4.0 / (n * n * (n - 1.0) ** 2) * _sums.gsq_bracket(d, n, naive=naive)
    v = 1.0 / (n * (n - 1.0)) * _sums.v_bracket(d, n, naive=naive)
    return g_sq, v
