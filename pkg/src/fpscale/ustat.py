"""Sample-side statistics: the two degree-two U-statistics, the L-statistic
form of the mean difference, and the leave-one-out jackknife variance."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import StatKind
from .errors import DataError, DegenerateSampleError, SizeError


@dataclass(frozen=True)
class SampleDraw:
    """One sample drawn without replacement from a population of size
    ``parent_N``.  Order statistics, sample spacings and centered sample
    moments are materialized at construction."""

    values: np.ndarray
    order_stats: np.ndarray
    spacings: np.ndarray
    weights_A: np.ndarray
    m2: float
    m3: float
    m4: float
    m5: float
    m6: float
    parent_N: int

    @property
    def size(self) -> int:
        return self.values.size


def make_sample(values, parent_N: int) -> SampleDraw:
    """Validate and freeze one drawn sample."""
    xs = np.asarray(values, dtype=np.float64)
    if xs.size < 2:
        raise SizeError(f"sample needs at least 2 values, got {xs.size}")
    if not np.all(np.isfinite(xs)):
        raise DataError("sample values must be finite")
    if parent_N <= xs.size:
        raise SizeError(
            f"parent population size {parent_N} must exceed sample size {xs.size}"
        )
    xs = xs.copy()
    xs.setflags(write=False)
    order = np.sort(xs)
    order.setflags(write=False)
    spacings = np.diff(order)
    spacings.setflags(write=False)
    n = xs.size
    i = np.arange(1, n, dtype=np.float64)
    weights = (2.0 * i - n) / n
    weights.setflags(write=False)
    centered = xs - xs.mean()
    m = [float(np.mean(centered**k)) for k in range(2, 7)]
    return SampleDraw(xs, order, spacings, weights, *m, parent_N=int(parent_N))


def _gmd_sorted(xs_sorted: np.ndarray) -> float:
    """Mean difference statistic from sorted values, O(n)."""
    n = xs_sorted.size
    j = np.arange(1, n + 1, dtype=np.float64)
    return float(np.dot(2.0 * j - n - 1.0, xs_sorted)) * 2.0 / (n * (n - 1))


def _gmd_spacing(spacings: np.ndarray, n: int) -> float:
    """Mean difference via spacings: C(n,2)^-1 sum k(n-k) spacing_k."""
    k = np.arange(1, n, dtype=np.float64)
    return float(np.dot(k * (n - k), spacings)) * 2.0 / (n * (n - 1))


def _var_value(xs: np.ndarray) -> float:
    """Empirical variance statistic (pairwise form value), O(n)."""
    n = xs.size
    centered = xs - xs.mean()
    return float(np.dot(centered, centered)) / (n - 1)


def u_statistic(s: SampleDraw, kind: StatKind) -> float:
    """Unbiased scale statistic of the sample.

    GMD is evaluated through the spacing form, VAR through the centered sum
    of squares; both equal the defining average over all sample pairs.
    """
    if kind is StatKind.GMD:
        return _gmd_spacing(s.spacings, s.size)
    return _var_value(s.values)


def gmd_order_form(s: SampleDraw) -> float:
    """L-statistic form C(n,2)^-1 sum_j (2j - n - 1) X_{j:n}."""
    return _gmd_sorted(s.order_stats)


def _jackknife_gmd_sorted(xs_sorted: np.ndarray, parent_N: int) -> float:
    n = xs_sorted.size
    j = np.arange(1, n + 1, dtype=np.float64)
    wgt = 2.0 * j - n - 1.0
    total_w = float(np.dot(wgt, xs_sorted))
    prefix = np.cumsum(xs_sorted)
    total = prefix[-1]
    # weighted sum of the sorted sample after deleting rank r: ranks above r
    # shift down by one, which lowers their weight by 2
    reduced = total_w - wgt * xs_sorted + (prefix - xs_sorted) - (total - prefix)
    loo = reduced * (2.0 / ((n - 1) * (n - 2)))
    dev = loo - loo.mean()
    return (1.0 - n / parent_N) * ((n - 1) / n) * float(np.dot(dev, dev))


def _jackknife_var(xs: np.ndarray, parent_N: int) -> float:
    n = xs.size
    centered = xs - xs.mean()
    ss = float(np.dot(centered, centered))
    loo = (ss - centered**2 * (n / (n - 1))) / (n - 2)
    dev = loo - loo.mean()
    return (1.0 - n / parent_N) * ((n - 1) / n) * float(np.dot(dev, dev))


def jackknife_variance(s: SampleDraw, kind: StatKind) -> float:
    """Jackknife variance estimate with the finite-population factor.

    S^2 = (1 - n/N) (n-1)/n sum_i (U_{n-1}(X without X_i) - mean)^2,
    computed with incremental leave-one-out updates.  Zero is a valid
    result (all leave-one-out values coincide), not an error.
    """
    if s.size < 3:
        raise SizeError(f"jackknife needs n >= 3, got n={s.size}")
    if kind is StatKind.GMD:
        return _jackknife_gmd_sorted(s.order_stats, s.parent_N)
    return _jackknife_var(s.values, s.parent_N)


def studentized_value(s: SampleDraw, kind: StatKind, center: float) -> float:
    """(U - center)/S with the jackknife standard error S.

    ``center`` is the expectation of U, i.e. the population parameter,
    supplied by the caller.  Raises DegenerateSampleError when S^2 = 0.
    """
    s_sq = jackknife_variance(s, kind)
    if s_sq <= 0.0:
        raise DegenerateSampleError("jackknife variance is zero")
    return (u_statistic(s, kind) - center) / np.sqrt(s_sq)


def _studentized_raw(xs: np.ndarray, kind: StatKind, center: float, parent_N: int):
    """Hot-loop studentized value from a raw draw; None when degenerate.

    Equivalent to make_sample + studentized_value but without constructing
    the frozen sample object.
    """
    if kind is StatKind.GMD:
        xs = np.sort(xs)
        s_sq = _jackknife_gmd_sorted(xs, parent_N)
        if s_sq <= 0.0:
            return None
        return (_gmd_sorted(xs) - center) / np.sqrt(s_sq)
    s_sq = _jackknife_var(xs, parent_N)
    if s_sq <= 0.0:
        return None
    return (_var_value(xs) - center) / np.sqrt(s_sq)
