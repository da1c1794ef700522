"""Population-side decomposition of the two statistics: first and second
order influence values, variance components, the exact variance of the
statistic under sampling without replacement, and the skewness/covariance
characteristics driving the one-term expansion.

Every closed form here has a definition-based counterpart (conditional
expectations over the population) used as an oracle; agreement of the two
routes is the correctness criterion for the closed forms.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import _sums
from .core import PopulationFrame, StatKind
from .errors import ArgumentError, DegenerateError, NumericalError

_SIGMA2_CLAMP_REL = 1e-12


@dataclass(frozen=True)
class HoeffdingParts:
    """First-order influence values and variance components for one
    (statistic, sample size, population) triple."""

    kind: StatKind
    n: int
    N: int
    g1: np.ndarray
    sigma1_sq: float
    sigma2_sq: float


@dataclass(frozen=True)
class EdgeworthParams:
    """Characteristics (alpha, kappa) of the one-term expansion together
    with tau^2 = n(1 - n/N); ``n_star`` is diagnostic only."""

    alpha: float
    kappa: float
    tau_sq: float
    n: int
    N: int

    @property
    def n_star(self) -> int:
        return min(self.n, self.N - self.n)


def _check_sizes(pop: PopulationFrame, n: int, minimum_N: int = 3) -> int:
    N = pop.size
    if N < minimum_N:
        raise ArgumentError(f"population size {N} below required {minimum_N}")
    if not 2 <= n < N:
        raise ArgumentError(f"sample size {n} must satisfy 2 <= n < N = {N}")
    return N


def influence_first(pop: PopulationFrame, n: int, kind: StatKind) -> np.ndarray:
    """First-order influence values g1(x_k) for k = 1..N."""
    N = _check_sizes(pop, n)
    if kind is StatKind.VAR:
        centered = pop.values - pop.b1
        return (1.0 / n) * (N / (N - 2.0)) * (centered**2 - pop.mu2)
    w = pop.weights_a * pop.spacings
    i = np.arange(1, N, dtype=np.float64)
    drift = float(np.dot(i / N, w))
    suffix = np.zeros(N)
    suffix[:-1] = np.cumsum(w[::-1])[::-1]
    return -(2.0 / n) * (N / (N - 2.0)) * (suffix - drift)


def _g2_row(pop: PopulationFrame, n: int, kind: StatKind, k: int) -> np.ndarray:
    """Vector of g2(x_k, x_l) for l = k+1 .. N (k is 1-based)."""
    N = pop.size
    if kind is StatKind.VAR:
        xk = pop.values[k - 1]
        xl = pop.values[k:]
        ck = (xk - pop.b1) ** 2
        cl = (xl - pop.b1) ** 2
        shift = 2.0 * N * pop.mu2 / ((N - 1.0) * (N - 2.0))
        return ((xk - xl) ** 2 + shift - (N / (N - 2.0)) * (ck + cl)) / (n * (n - 1.0))
    p1, p2, p3 = _sums.g2_prefix_sums(pop.spacings, N)
    a = (N - 1.0) * (N - 2.0)
    l = np.arange(k + 1, N + 1)
    piece = p1[k - 1] - (p2[l - 1] - p2[k - 1]) + (p3[N - 1] - p3[l - 1])
    return -(4.0 / (n * (n - 1.0))) * piece / a


def influence_second(pop: PopulationFrame, n: int, kind: StatKind, k: int, l: int) -> float:
    """Second-order influence value g2(x_k, x_l), 1-based indices.

    Symmetric in (k, l); k = l is outside the domain.
    """
    N = _check_sizes(pop, n)
    if not (1 <= k <= N and 1 <= l <= N):
        raise ArgumentError(f"indices must lie in 1..{N}, got ({k}, {l})")
    if k == l:
        raise ArgumentError("second-order influence needs two distinct indices")
    if k > l:
        k, l = l, k
    return float(_g2_row(pop, n, kind, k)[l - k - 1])


def sigma_components(
    pop: PopulationFrame, n: int, kind: StatKind, method: str = "fast"
):
    """Variance components (sigma1_sq, sigma2_sq) in closed form.

    The mean-difference double sums run in O(N) with prefix sums; the
    literal O(N^2) accumulation stays available as ``method="naive"``.
    A tiny negative sigma2_sq from cancellation is clamped to zero.
    """
    N = _check_sizes(pop, n)
    if method not in ("fast", "naive"):
        raise ArgumentError(f"unknown method {method!r}")
    naive = method == "naive"
    if kind is StatKind.VAR:
        s1 = (1.0 / n**2) * (N / (N - 2.0)) ** 2 * (pop.mu4 - pop.mu2**2)
        s2 = (
            4.0
            / (n**2 * (n - 1.0) ** 2)
            * N
            / ((N - 1.0) * (N - 2.0))
            * ((N * N - 3.0 * N + 3.0) / (N - 1.0) * pop.mu2**2 - pop.mu4)
        )
    else:
        w = pop.weights_a * pop.spacings
        s1 = (
            4.0 / (n**2 * (N - 2.0) ** 2) * _sums.sigma1_bracket(w, N, naive=naive)
        )
        s2 = (
            16.0
            / (n**2 * (n - 1.0) ** 2)
            / (N * (N - 1.0) ** 2 * (N - 2.0))
            * _sums.sigma2_bracket(pop.spacings, N, naive=naive)
        )
    if s2 < 0.0:
        if abs(s2) < _SIGMA2_CLAMP_REL * max(s1, 1.0):
            warnings.warn("sigma2_sq clamped to zero after cancellation")
            s2 = 0.0
        else:
            raise NumericalError(f"sigma2_sq came out negative: {s2}")
    return s1, s2


def decompose(pop: PopulationFrame, n: int, kind: StatKind) -> HoeffdingParts:
    g1 = influence_first(pop, n, kind)
    s1, s2 = sigma_components(pop, n, kind)
    return HoeffdingParts(kind, n, pop.size, g1, s1, s2)


def u_variance(pop: PopulationFrame, n: int, kind: StatKind) -> float:
    """Exact variance of the statistic over all samples of size n:
    n(N-n)/(N-1) sigma1_sq + C(n,2) C(N-n,2) / C(N-2,2) sigma2_sq.
    """
    N = _check_sizes(pop, n, minimum_N=4)
    s1, s2 = sigma_components(pop, n, kind)
    linear = n * (N - n) / (N - 1.0) * s1
    quad = (
        (n * (n - 1.0) / 2.0)
        * ((N - n) * (N - n - 1.0) / 2.0)
        / ((N - 2.0) * (N - 3.0) / 2.0)
        * s2
    )
    return linear + quad


def _tau_sq(n: int, N: int) -> float:
    return n * (1.0 - n / N)


def _sigma1_cubed(pop: PopulationFrame, n: int, kind: StatKind) -> float:
    s1, _ = sigma_components(pop, n, kind)
    if s1 <= 0.0:
        raise DegenerateError("sigma1_sq is zero; expansion parameters undefined")
    return s1**1.5


def _kappa_pair_sum(pop: PopulationFrame, n: int, kind: StatKind, g1: np.ndarray) -> float:
    """Definition-based pair sum C(N,2)^-1 sum_{k<l} g2 g1(k) g1(l)."""
    N = pop.size
    total = 0.0
    for k in range(1, N):
        row = _g2_row(pop, n, kind, k)
        total += g1[k - 1] * float(np.dot(row, g1[k:]))
    return total * 2.0 / (N * (N - 1.0))


def edgeworth_params_true(
    pop: PopulationFrame,
    n: int,
    kind: StatKind,
    gmd_kappa_method: str = "pair",
    var_kappa_simplified: bool = False,
) -> EdgeworthParams:
    """Expansion characteristics (alpha, kappa) by the closed forms.

    For the mean difference, kappa offers three routes:
      "pair"    definition-based O(N^2) pair sum (default; production),
      "grouped" six-branch triple sum grouped into prefix passes,
      "naive"   literal triple sum, intended for N up to a few hundred.
    ``var_kappa_simplified`` keeps only the cubed-skewness term of the
    variance-statistic kappa.
    """
    N = _check_sizes(pop, n, minimum_N=4)
    tau_sq = _tau_sq(n, N)
    s1c = _sigma1_cubed(pop, n, kind)
    if kind is StatKind.VAR:
        alpha = (
            (1.0 / n**3)
            * (N / (N - 2.0)) ** 3
            * (2.0 * pop.mu2**3 - 3.0 * pop.mu4 * pop.mu2 + pop.mu6)
            / s1c
        )
        inner = -(N - 2.0) * pop.mu3**2
        if not var_kappa_simplified:
            inner += (
                -(2.0 * N - 1.0) / (N - 1.0) * pop.mu4 * pop.mu2
                + N / (N - 1.0) * pop.mu2**3
                + pop.mu6
            )
        kappa = (
            tau_sq
            * (2.0 / (n**3 * (n - 1.0)))
            * (N / (N - 2.0)) ** 3
            / (N - 1.0)
            * inner
            / s1c
        )
        return EdgeworthParams(alpha, kappa, tau_sq, n, N)

    w = pop.weights_a * pop.spacings
    alpha = (
        -(8.0 / n**3) / (N - 2.0) ** 3 * _sums.alpha_bracket(w, N) / s1c
    )
    if gmd_kappa_method == "pair":
        g1 = influence_first(pop, n, kind)
        kappa = tau_sq * _kappa_pair_sum(pop, n, kind, g1) / s1c
    elif gmd_kappa_method in ("grouped", "naive"):
        triple = (
            _sums.cijm_sum_naive(pop.spacings, w, N)
            if gmd_kappa_method == "naive"
            else _sums.cijm_sum(pop.spacings, w, N)
        )
        kappa = (
            -tau_sq
            * (16.0 / (n**3 * (n - 1.0)))
            * N
            / ((N - 1.0) ** 2 * (N - 2.0) ** 3)
            * triple
            / s1c
        )
    else:
        raise ArgumentError(f"unknown gmd_kappa_method {gmd_kappa_method!r}")
    return EdgeworthParams(alpha, float(kappa), tau_sq, n, N)


def edgeworth_params_oracle(
    pop: PopulationFrame, n: int, kind: StatKind
) -> EdgeworthParams:
    """Definition-based characteristics:
    alpha = sigma1^-3 mean(g1^3), kappa = sigma1^-3 tau^2 E g2 g1 g1.

    O(N^2); serves as the cross-check of the closed forms and as an
    alternative production route for kappa.
    """
    N = _check_sizes(pop, n, minimum_N=4)
    s1c = _sigma1_cubed(pop, n, kind)
    g1 = influence_first(pop, n, kind)
    alpha = float(np.mean(g1**3)) / s1c
    tau_sq = _tau_sq(n, N)
    kappa = tau_sq * _kappa_pair_sum(pop, n, kind, g1) / s1c
    return EdgeworthParams(alpha, kappa, tau_sq, n, N)
