"""Spacing-sum kernels shared by the population and sample formulas.

Every public quantity built from ordered spacings reduces to a handful of
weighted sums over one, two or three spacing indices.  The two-index sums all
have separable cross coefficients, so they collapse to prefix-sum passes; the
three-index sum with the six-branch case coefficient is grouped case by case
into prefix/suffix passes as well.  Naive counterparts are kept alongside as
oracles for the grouped code paths.

Index convention: an input vector of length ``M - 1`` holds the values for
spacing indices ``1 .. M-1`` of an ordered set of size ``M``.
"""

from __future__ import annotations

import math

import numpy as np


def _pair_sum(diag: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """sum_i diag_i + 2 sum_{i<j} u_i v_j via one cumulative pass."""
    cu = np.cumsum(u)
    cross = float(np.dot(v[1:], cu[:-1])) if u.size > 1 else 0.0
    return float(np.sum(diag)) + 2.0 * cross


def _pair_sum_naive(diag: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    total = math.fsum(diag.tolist())
    m = u.size
    for i in range(m):
        for j in range(i + 1, m):
            total += 2.0 * u[i] * v[j]
    return total


def gsq_bracket(d: np.ndarray, M: int, naive: bool = False) -> float:
    """sum i^2(M-i)^2 d_i^2 + 2 sum_{i<j} ij(M-i)(M-j) d_i d_j."""
    i = np.arange(1, M, dtype=np.float64)
    f = i * (M - i) * d
    fn = _pair_sum_naive if naive else _pair_sum
    return fn(f * f, f, f)


def v_bracket(d: np.ndarray, M: int, naive: bool = False) -> float:
    """sum i(M-i) d_i^2 + 2 sum_{i<j} i(M-j) d_i d_j."""
    i = np.arange(1, M, dtype=np.float64)
    fn = _pair_sum_naive if naive else _pair_sum
    return fn(i * (M - i) * d * d, i * d, (M - i) * d)


def sigma1_bracket(w: np.ndarray, M: int, naive: bool = False) -> float:
    """sum i(M-i) w_i^2 + 2 sum_{i<j} i(M-j) w_i w_j  (w_i = a_i * d_i)."""
    i = np.arange(1, M, dtype=np.float64)
    fn = _pair_sum_naive if naive else _pair_sum
    return fn(i * (M - i) * w * w, i * w, (M - i) * w)


def sigma2_bracket(d: np.ndarray, M: int, naive: bool = False) -> float:
    """sum i(i-1)(M-i-1)(M-i) d_i^2 + 2 sum_{i<j} i(i-1)(M-j-1)(M-j) d_i d_j."""
    i = np.arange(1, M, dtype=np.float64)
    fn = _pair_sum_naive if naive else _pair_sum
    return fn(
        i * (i - 1) * (M - i - 1) * (M - i) * d * d,
        i * (i - 1) * d,
        (M - i - 1) * (M - i) * d,
    )


def alpha_bracket(w: np.ndarray, M: int, naive: bool = False) -> float:
    """Four-term skewness bracket over weighted spacings w_i = a_i * d_i.

    T1 = sum_i i(M-2i)(M-i) w_i^3
    T2 = 3 sum_{i<j} i(M-2i)(M-j) w_i^2 w_j
    T3 = 3 sum_{i<j} i(M-2j)(M-j) w_i w_j^2
    T4 = 6 sum_{i<j<m} i(M-2j)(M-m) w_i w_j w_m
    """
    if naive:
        return _alpha_bracket_naive(w, M)
    i = np.arange(1, M, dtype=np.float64)
    t1 = float(np.dot(i * (M - 2 * i) * (M - i), w**3))
    # prefix sums over i<j, suffix sums over m>j
    p_lin = np.cumsum(i * w)                     # sum_{i<=t} i w_i
    p_sq = np.cumsum(i * (M - 2 * i) * w * w)    # sum_{i<=t} i(M-2i) w_i^2
    s_tail = np.cumsum(((M - i) * w)[::-1])[::-1]  # sum_{m>=t} (M-m) w_m
    t2 = t3 = t4 = 0.0
    if M >= 3:
        jj = i[1:]
        t2 = 3.0 * float(np.dot((M - jj) * w[1:], p_sq[:-1]))
        t3 = 3.0 * float(np.dot((M - 2 * jj) * (M - jj) * w[1:] ** 2, p_lin[:-1]))
        # middle index j needs both a lower prefix and an upper suffix
        mid = (M - 2 * i) * w
        upper = np.zeros_like(w)
        upper[:-1] = s_tail[1:]
        lower = np.zeros_like(w)
        lower[1:] = p_lin[:-1]
        t4 = 6.0 * float(np.dot(mid, lower * upper))
    return t1 + t2 + t3 + t4


def _alpha_bracket_naive(w: np.ndarray, M: int) -> float:
    m1 = w.size
    terms = []
    for i in range(1, m1 + 1):
        terms.append(i * (M - 2 * i) * (M - i) * w[i - 1] ** 3)
    for i in range(1, m1 + 1):
        for j in range(i + 1, m1 + 1):
            terms.append(3.0 * i * (M - 2 * i) * (M - j) * w[i - 1] ** 2 * w[j - 1])
            terms.append(3.0 * i * (M - 2 * j) * (M - j) * w[i - 1] * w[j - 1] ** 2)
    for i in range(1, m1 + 1):
        for j in range(i + 1, m1 + 1):
            for m in range(j + 1, m1 + 1):
                terms.append(
                    6.0 * i * (M - 2 * j) * (M - m) * w[i - 1] * w[j - 1] * w[m - 1]
                )
    return math.fsum(terms)


def g2_prefix_sums(d: np.ndarray, M: int):
    """Inclusive prefix sums of the three branch weights of the pairwise
    second-order term: i(i-1)d_i, (i-1)(M-i-1)d_i, (M-i-1)(M-i)d_i.

    Returned arrays have length M with a leading zero so that ``P[t]`` is the
    sum over spacing indices ``1..t``.
    """
    i = np.arange(1, M, dtype=np.float64)
    p1 = np.zeros(M)
    p2 = np.zeros(M)
    p3 = np.zeros(M)
    p1[1:] = np.cumsum(i * (i - 1) * d)
    p2[1:] = np.cumsum((i - 1) * (M - i - 1) * d)
    p3[1:] = np.cumsum((M - i - 1) * (M - i) * d)
    return p1, p2, p3


def _case_coeff(i, j, m, M):
    """Six-branch case coefficient, branches applied in printed order."""
    inv = 1.0 / M
    if i <= j <= m:
        return i * (i - 1) * (M - m) * (M - j - 1 + inv * j * (m - j))
    if i <= m < j:
        return i * (i - 1) * (M - j) * (M - m - 1 + inv * m * (m - j))
    if j < i < m:
        return j * (M - m) * (
            (i - 1) * (M - i - 1)
            + inv * ((M - i) * (M - i - 1) * (i - j) + i * (i - 1) * (m - i))
        )
    if m < i < j:
        return m * (M - j) * (
            (i - 1) * (M - i - 1)
            + inv * (i * (i - 1) * (i - j) + (M - i - 1) * (M - i) * (m - i))
        )
    if j < m <= i:
        return j * (M - i - 1) * (M - i) * (m - 1 + inv * (M - m) * (m - j))
    # m <= j <= i
    return m * (M - i - 1) * (M - i) * (j - 1 + inv * (M - j) * (m - j))


def cijm_sum_naive(d: np.ndarray, w: np.ndarray, M: int) -> float:
    """Literal triple sum sum_{i,j,m} c_{ijm} d_i w_j w_m, vectorized over
    (j, m) planes per i with compensated accumulation of the plane totals.
    """
    m1 = d.size
    j = np.arange(1, M, dtype=np.float64)[:, None]
    m = np.arange(1, M, dtype=np.float64)[None, :]
    inv = 1.0 / M
    ww = w[:, None] * w[None, :]
    plane_totals = []
    for ii in range(1, m1 + 1):
        i = float(ii)
        conds = [
            (i <= j) & (j <= m),
            (i <= m) & (m < j),
            (j < i) & (i < m),
            (m < i) & (i < j),
            (j < m) & (m <= i),
            (m <= j) & (j <= i),
        ]
        choices = [
            i * (i - 1) * (M - m) * (M - j - 1 + inv * j * (m - j)),
            i * (i - 1) * (M - j) * (M - m - 1 + inv * m * (m - j)),
            j * (M - m) * (
                (i - 1) * (M - i - 1)
                + inv * ((M - i) * (M - i - 1) * (i - j) + i * (i - 1) * (m - i))
            ),
            m * (M - j) * (
                (i - 1) * (M - i - 1)
                + inv * (i * (i - 1) * (i - j) + (M - i - 1) * (M - i) * (m - i))
            ),
            j * (M - i - 1) * (M - i) * (m - 1 + inv * (M - m) * (m - j)),
            m * (M - i - 1) * (M - i) * (j - 1 + inv * (M - j) * (m - j)),
        ]
        c = np.select(conds, choices)
        plane_totals.append(float(np.sum(c * ww)) * d[ii - 1])
    return math.fsum(plane_totals)


def cijm_sum(d: np.ndarray, w: np.ndarray, M: int) -> float:
    """Grouped evaluation of sum_{i,j,m} c_{ijm} d_i w_j w_m.

    Each of the six branches has, for a fixed middle index, a product region
    for the two outer indices and a coefficient separable per index, so each
    branch reduces to prefix/suffix passes.  Branches one and six both cover
    the full diagonal i=j=m with equal coefficients; the diagonal is counted
    once by subtraction at the end.
    """
    i = np.arange(1, M, dtype=np.float64)
    inv = 1.0 / M

    q = i * (i - 1) * d                       # i-side weight of branches 1-2
    cq = np.cumsum(q)                         # sum_{i<=t} i(i-1) d_i
    jw = i * w
    jw2 = i * i * w
    c_jw = np.cumsum(jw)                      # sum_{j<=t} j w_j
    c_jw2 = np.cumsum(jw2)
    tw = (M - i) * w
    tmw = i * (M - i) * w
    s_tw = np.cumsum(tw[::-1])[::-1]          # sum_{m>=t} (M-m) w_m
    s_tmw = np.cumsum(tmw[::-1])[::-1]        # sum_{m>=t} m(M-m) w_m
    r = (M - i - 1) * (M - i) * d
    s_r = np.cumsum(r[::-1])[::-1]            # sum_{i>=t} (M-i-1)(M-i) d_i

    def lower(arr):
        out = np.zeros_like(arr)
        out[1:] = arr[:-1]
        return out

    def upper(arr):
        out = np.zeros_like(arr)
        out[:-1] = arr[1:]
        return out

    # branch 1: i <= j <= m, middle j
    b1 = float(
        np.dot(
            w * cq,
            (M - i - 1) * s_tw + inv * i * (s_tmw - i * s_tw),
        )
    )
    # branch 2: i <= m < j, middle m
    b2 = float(
        np.dot(
            w * cq,
            (M - i - 1 + inv * i * i) * upper(s_tw) - inv * i * upper(s_tmw),
        )
    )
    # branch 3: j < i < m, middle i
    a1 = lower(c_jw)
    a2 = lower(c_jw2)
    b_1 = upper(s_tw)
    b_2 = upper(s_tmw)
    b3 = float(
        np.dot(
            d,
            (i - 1) * (M - i - 1) * a1 * b_1
            + inv * (M - i) * (M - i - 1) * (i * a1 - a2) * b_1
            + inv * i * (i - 1) * a1 * (b_2 - i * b_1),
        )
    )
    # branch 4: m < i < j, middle i
    b4 = float(
        np.dot(
            d,
            (i - 1) * (M - i - 1) * a1 * b_1
            + inv * i * (i - 1) * a1 * (i * b_1 - b_2)
            + inv * (M - i - 1) * (M - i) * (a2 - i * a1) * b_1,
        )
    )
    # branch 5: j < m <= i, middle m
    b5 = float(
        np.dot(
            w * s_r,
            (i - 1 + inv * (M - i) * i) * lower(c_jw) - inv * (M - i) * lower(c_jw2),
        )
    )
    # branch 6: m <= j <= i, middle j
    b6 = float(
        np.dot(
            w * s_r,
            (i - 1 - inv * (M - i) * i) * c_jw + inv * (M - i) * c_jw2,
        )
    )
    diag = float(np.dot(i * (i - 1) * (M - i) * (M - i - 1) * d, w * w))
    return b1 + b2 + b3 + b4 + b5 + b6 - diag
