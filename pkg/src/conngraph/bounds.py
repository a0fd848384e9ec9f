"""Closed-form lower bounds on the probability that a random subgraph is connected.

Model: a connected template with n vertices, m edges, and degree sequence d
keeps each edge independently with probability p.  Let ell be a uniformly
random nontrivial Laplacian eigenvalue of the result.  Its mean and variance
have closed forms:

    mu      = 2 m p / (n - 1)
    sigma^2 = S^2 / (n - 1)^2,
    S^2     = 2 m p (n - 1)(2 - p) + p^2 (n - 1) sum(d_i^2) - 4 m^2 p^2

An order-statistic argument turns these into a lower bound on the expected
algebraic connectivity, a trace argument gives an upper bound on its second
moment, and a second-moment (Paley-Zygmund) step combines the two into a
lower bound on P[connected].  The free parameter N (how many eigenvalue
draws the order statistic uses) is scanned over an explicit finite range and
the best value kept.

For unions of T independent samples of the same template, connectivity of
the union equals connectivity of a single sample with the collapsed edge
probability p_hat(T) = 1 - (1 - p)^T, so every bound extends to unions by
substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, NegativeRadicand, TStarNotFound
from .graphs import UnderlyingGraph, sum_degree_squares

DEFAULT_N_CAP = 10**6
DEFAULT_T_MAX = 10**5

_SCAN_CHUNK = 4096
_RADICAND_FLOOR = -1e-9

__all__ = [
    "DEFAULT_N_CAP",
    "DEFAULT_T_MAX",
    "ModelParams",
    "BoundResult",
    "TStarResult",
    "r_factor",
    "ell_mean",
    "s_value",
    "ell_variance",
    "ell_first_order_lower",
    "lambda2_mean_lower",
    "lambda2_sq_mean_upper",
    "connectivity_bound_at_N",
    "n_search_max",
    "connectivity_bound",
    "connectivity_bound_from_stats",
    "connectivity_bound_complete",
    "union_edge_probability",
    "t_star",
    "t_star_from_stats",
    "t_star_complete",
]


@dataclass(frozen=True)
class ModelParams:
    """A template graph together with the edge-retention probability.

    p must lie strictly inside (0, 1) and the template must have at least
    3 vertices; smaller templates have exact closed forms instead of bounds.
    """

    graph: UnderlyingGraph
    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))
        if not 0.0 < self.p < 1.0:
            raise InvalidParameter(f"bounds need p strictly inside (0, 1), got {self.p}")
        if self.graph.n < 3:
            raise InvalidParameter(f"bounds need n >= 3 vertices, got {self.graph.n}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.graph.degrees


@dataclass(frozen=True)
class BoundResult:
    """A maximized connectivity bound plus the diagnostics behind it.

    numerator and denominator are the maximized ratio's two sides exactly as
    the evaluating routine parameterizes them; mu, sigma_squared, and s_value
    always refer to the ell statistics of the model.
    """

    probability_lower_bound: float
    maximizing_n: int
    n_search_max: int
    numerator: float
    denominator: float
    s_value: float
    mu: float
    sigma_squared: float


@dataclass(frozen=True)
class TStarResult:
    """Smallest union horizon whose bound reaches the requested target."""

    t_star: int
    epsilon: float
    bound_at_t_star: float
    trace: tuple[tuple[int, float], ...]


def _check_open_probability(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise InvalidParameter(f"need p strictly inside (0, 1), got {p}")
    return p


def _check_count(value, name: str, minimum: int) -> int:
    if not isinstance(value, (int, np.integer)) or value < minimum:
        raise InvalidParameter(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def r_factor(N: int, n: int) -> float:
    """Probability that N index draws hit the spectrum's second position.

    Equals 1 - ((n-2)/(n-1))^(N-1), computed in log space so large n and N
    lose no precision.  Zero at N = 1.
    """
    N = _check_count(N, "N", 1)
    n = _check_count(n, "n", 3)
    return -math.expm1((N - 1) * math.log1p(-1.0 / (n - 1)))


def ell_mean(params: ModelParams) -> float:
    """Mean of the random nontrivial eigenvalue: 2 m p / (n - 1)."""
    return 2.0 * params.m * params.p / (params.n - 1)


def _radicand_split(n: int, m: int, deg_sq: int) -> tuple[int, int]:
    # S^2 = p * (A0 + (1-p) * A1) with exact integer A0, A1; this form adds
    # nonnegative pieces instead of cancelling three large ones, which keeps
    # S accurate when p approaches 1 (union horizons push it there).
    a0 = (n - 1) * (2 * m + deg_sq) - 4 * m * m
    a1 = (n - 1) * (2 * m - deg_sq) + 4 * m * m
    return a0, a1


def _s_squared(n: int, m: int, deg_sq: int, p: float, q: float) -> float:
    a0, a1 = _radicand_split(n, m, deg_sq)
    radicand = p * (a0 + q * a1)
    if radicand < 0.0:
        if radicand < _RADICAND_FLOOR:
            raise NegativeRadicand(f"variance radicand {radicand} is below the rounding floor")
        return 0.0
    return radicand


def s_value(params: ModelParams) -> float:
    """Square root of 2mp(n-1)(2-p) + p^2(n-1)sum(d_i^2) - 4m^2p^2.

    A radicand between -1e-9 and 0 is treated as rounding noise and clamped
    to zero; anything more negative raises NegativeRadicand.
    """
    deg_sq = sum_degree_squares(params.graph)
    return math.sqrt(_s_squared(params.n, params.m, deg_sq, params.p, 1.0 - params.p))


def ell_variance(params: ModelParams) -> float:
    """Variance of the random nontrivial eigenvalue: S^2 / (n - 1)^2."""
    deg_sq = sum_degree_squares(params.graph)
    s_sq = _s_squared(params.n, params.m, deg_sq, params.p, 1.0 - params.p)
    return s_sq / (params.n - 1) ** 2


def ell_first_order_lower(params: ModelParams, N: int) -> float:
    """Lower bound on the expected minimum of N eigenvalue draws.

    max(0, (2mp - S sqrt(N-1)) / (n-1)); at N = 1 it reduces to the mean.
    """
    N = _check_count(N, "N", 1)
    s = s_value(params)
    return max(0.0, (2.0 * params.m * params.p - s * math.sqrt(N - 1.0)) / (params.n - 1))


def lambda2_mean_lower(params: ModelParams, N: int) -> float:
    """Lower bound on the expected algebraic connectivity, at draw count N.

    max(0, (2mp R - S sqrt(N-1)) / ((n-1) R)) with R = r_factor(N, n).
    Needs N >= 2; at N = 1 the factor R vanishes and nothing is learned.
    """
    N = _check_count(N, "N", 2)
    r = r_factor(N, params.n)
    s = s_value(params)
    raw = 2.0 * params.m * params.p * r - s * math.sqrt(N - 1.0)
    return max(0.0, raw / ((params.n - 1) * r))


def _energy(n: int, m: int, deg_sq: int, p: float, q: float) -> float:
    # 4mp - 2mp^2 + p^2 deg_sq  ==  2mp(1 + q) + p^2 deg_sq, all positive.
    return 2.0 * m * p * (1.0 + q) + p * p * deg_sq


def lambda2_sq_mean_upper(params: ModelParams) -> float:
    """Upper bound on the mean squared algebraic connectivity.

    (4mp - 2mp^2 + p^2 sum(d_i^2)) / (n - 1), evaluated as a sum of
    positive terms.
    """
    deg_sq = sum_degree_squares(params.graph)
    return _energy(params.n, params.m, deg_sq, params.p, 1.0 - params.p) / (params.n - 1)


def _general_scales(n: int, m: int, deg_sq: int, p: float, q: float) -> tuple[float, float, float]:
    a = 2.0 * m * p
    b = math.sqrt(_s_squared(n, m, deg_sq, p, q))
    return a, b, _energy(n, m, deg_sq, p, q)


def _complete_scales(n: int, p: float, q: float) -> tuple[float, float, float]:
    a = math.sqrt(n * (n - 1) * p)
    b = math.sqrt(2.0 * (n - 1) * q)
    return a, b, 2.0 * q + n * p


def _range_limit(a: float, b: float, n_cap: int) -> int:
    # Largest N that can make the numerator positive: N - 1 < (a/b)^2 since
    # R < 1, which is exactly the (S^2 + 4m^2p^2) / S^2 ratio in the general
    # parameterization.  Capped, floored, and never below 2.
    b_sq = b * b
    if b_sq <= 0.0:
        return n_cap
    ratio = 1.0 + (a * a) / b_sq
    if not math.isfinite(ratio) or ratio >= n_cap:
        return n_cap
    return max(2, int(math.floor(ratio)))


def _ratio_terms(a: float, b: float, energy: float, n: int, N: int) -> tuple[float, float, float]:
    r = -math.expm1((N - 1) * math.log1p(-1.0 / (n - 1)))
    raw = a * r - b * math.sqrt(N - 1.0)
    num = max(0.0, raw) ** 2
    den = (n - 1) * r * r * energy
    return num, den, min(1.0, num / den)


def _scan_max(a: float, b: float, energy: float, n: int, n_cap: int) -> tuple[float, int, int]:
    """Maximize the bound ratio over N in [2, range limit], ties to smallest N.

    Scans ascending in chunks.  Before each later chunk, an upper envelope
    for everything at or past it (numerator at most a - b sqrt(N0 - 1), R at
    least its value at N0) is compared against the best value so far; once
    the envelope cannot win, the scan stops without losing the true maximum.
    """
    n_hi = _range_limit(a, b, n_cap)
    log_decay = math.log1p(-1.0 / (n - 1))
    best_val = -1.0
    best_n = 2
    lo = 2
    while lo <= n_hi:
        hi = min(n_hi, lo + _SCAN_CHUNK - 1)
        if lo > 2:
            r0 = -math.expm1((lo - 1) * log_decay)
            raw_cap = a - b * math.sqrt(lo - 1.0)
            ceiling = 0.0
            if raw_cap > 0.0:
                ceiling = min(1.0, raw_cap * raw_cap / ((n - 1) * r0 * r0 * energy))
            if ceiling <= best_val:
                break
        ns = np.arange(lo, hi + 1, dtype=float)
        r = -np.expm1((ns - 1.0) * log_decay)
        raw = a * r - b * np.sqrt(ns - 1.0)
        np.clip(raw, 0.0, None, out=raw)
        vals = np.minimum(raw * raw / ((n - 1) * r * r * energy), 1.0)
        i = int(np.argmax(vals))
        if float(vals[i]) > best_val:
            best_val = float(vals[i])
            best_n = lo + i
        lo = hi + 1
    return best_val, best_n, n_hi


def _general_bound_result(n: int, m: int, deg_sq: int, p: float, q: float, n_cap: int) -> BoundResult:
    a, b, energy = _general_scales(n, m, deg_sq, p, q)
    _, best_n, n_hi = _scan_max(a, b, energy, n, n_cap)
    num, den, val = _ratio_terms(a, b, energy, n, best_n)
    s_sq = _s_squared(n, m, deg_sq, p, q)
    return BoundResult(
        probability_lower_bound=val,
        maximizing_n=best_n,
        n_search_max=n_hi,
        numerator=num,
        denominator=den,
        s_value=math.sqrt(s_sq),
        mu=2.0 * m * p / (n - 1),
        sigma_squared=s_sq / (n - 1) ** 2,
    )


def _complete_bound_result(n: int, p: float, q: float, n_cap: int) -> BoundResult:
    a, b, energy = _complete_scales(n, p, q)
    _, best_n, n_hi = _scan_max(a, b, energy, n, n_cap)
    num, den, val = _ratio_terms(a, b, energy, n, best_n)
    sigma_sq = 2.0 * n * p * q
    return BoundResult(
        probability_lower_bound=val,
        maximizing_n=best_n,
        n_search_max=n_hi,
        numerator=num,
        denominator=den,
        s_value=(n - 1) * math.sqrt(sigma_sq),
        mu=n * p,
        sigma_squared=sigma_sq,
    )


def connectivity_bound_at_N(params: ModelParams, N: int) -> float:
    """The maximized quantity at one fixed draw count N >= 2.

    max(0, 2mp R - S sqrt(N-1))^2 / ((n-1) R^2 (4mp - 2mp^2 + p^2 sum d^2)),
    clamped into [0, 1].
    """
    N = _check_count(N, "N", 2)
    deg_sq = sum_degree_squares(params.graph)
    a, b, energy = _general_scales(params.n, params.m, deg_sq, params.p, 1.0 - params.p)
    return _ratio_terms(a, b, energy, params.n, N)[2]


def n_search_max(params: ModelParams, n_cap: int = DEFAULT_N_CAP) -> int:
    """Largest draw count the bound scan needs to consider.

    Floor of (S^2 + 4 m^2 p^2) / S^2, capped at n_cap and lifted to at
    least 2; a vanishing S^2 yields the cap directly.
    """
    n_cap = _check_count(n_cap, "n_cap", 2)
    deg_sq = sum_degree_squares(params.graph)
    a, b, _ = _general_scales(params.n, params.m, deg_sq, params.p, 1.0 - params.p)
    return _range_limit(a, b, n_cap)


def connectivity_bound_from_stats(n: int, m: int, deg_sq: int, p: float, n_cap: int = DEFAULT_N_CAP) -> BoundResult:
    """Maximized connectivity bound from summary statistics alone.

    The statistics must describe a connected template: n >= 3 vertices, m
    edges, deg_sq the sum of squared degrees.  Useful when the template is
    too large to materialize edge by edge.
    """
    n = _check_count(n, "n", 3)
    m = _check_count(m, "m", 1)
    deg_sq = _check_count(deg_sq, "deg_sq", 1)
    n_cap = _check_count(n_cap, "n_cap", 2)
    p = _check_open_probability(p)
    return _general_bound_result(n, m, deg_sq, p, 1.0 - p, n_cap)


def connectivity_bound(params: ModelParams, n_cap: int = DEFAULT_N_CAP) -> BoundResult:
    """Best connectivity lower bound over all admissible draw counts N."""
    n_cap = _check_count(n_cap, "n_cap", 2)
    deg_sq = sum_degree_squares(params.graph)
    return _general_bound_result(params.n, params.m, deg_sq, params.p, 1.0 - params.p, n_cap)


def connectivity_bound_complete(n: int, p: float, n_cap: int = DEFAULT_N_CAP) -> BoundResult:
    """Maximized bound for the complete template, by its simplified form.

    max over N of (max(0, sqrt(n(n-1)p) R - sqrt(2(n-1)(1-p)(N-1))))^2 over
    ((n-1) R^2 (2 - 2p + np)), with the same N range and clamping rules as
    the general route.  The numerator and denominator diagnostics are in
    this reduced parameterization.
    """
    n = _check_count(n, "n", 3)
    n_cap = _check_count(n_cap, "n_cap", 2)
    p = _check_open_probability(p)
    return _complete_bound_result(n, p, 1.0 - p, n_cap)


def union_edge_probability(p: float, T: int) -> float:
    """Collapsed edge probability of a T-fold union: 1 - (1 - p)^T."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"edge probability must lie in [0, 1], got {p}")
    T = _check_count(T, "T", 1)
    if p == 1.0:
        return 1.0
    return -math.expm1(T * math.log1p(-p))


def _t_star_scan(scales, n: int, p: float, epsilon: float, t_max: int, n_cap: int) -> TStarResult:
    # Exhaustive ascending scan; monotonicity of the bound in p is not
    # established, so no bisection.  Once the complement underflows to zero
    # every later horizon evaluates on identical inputs, so one terminal
    # evaluation decides the remainder of the range.
    target = 1.0 - epsilon
    log_q = math.log1p(-p)
    trace: list[tuple[int, float]] = []
    best_t, best_bound = 0, -1.0
    for T in range(1, t_max + 1):
        q_hat = math.exp(T * log_q)
        p_hat = -math.expm1(T * log_q)
        a, b, energy = scales(p_hat, q_hat)
        val, _, _ = _scan_max(a, b, energy, n, n_cap)
        trace.append((T, val))
        if val > best_bound:
            best_bound, best_t = val, T
        if val >= target:
            return TStarResult(T, epsilon, val, tuple(trace))
        if q_hat == 0.0:
            break
    raise TStarNotFound(
        f"no horizon up to {t_max} reaches bound {target} (best {best_bound} at T={best_t})",
        best_t,
        best_bound,
        trace,
    )


def t_star(
    graph: UnderlyingGraph,
    p: float,
    epsilon: float,
    t_max: int = DEFAULT_T_MAX,
    n_cap: int = DEFAULT_N_CAP,
) -> TStarResult:
    """Smallest union horizon T with connectivity bound at least 1 - epsilon.

    Scans T = 1, 2, ... upward, evaluating the maximized bound at the
    collapsed probability p_hat(T); raises TStarNotFound (carrying the best
    horizon seen and the whole trace) when t_max is exhausted.
    """
    p = _check_open_probability(p)
    if not 0.0 < float(epsilon) < 1.0:
        raise InvalidParameter(f"epsilon must lie in (0, 1), got {epsilon}")
    t_max = _check_count(t_max, "t_max", 1)
    n_cap = _check_count(n_cap, "n_cap", 2)
    if graph.n < 3:
        raise InvalidParameter(f"bounds need n >= 3 vertices, got {graph.n}")
    deg_sq = sum_degree_squares(graph)

    def scales(p_hat: float, q_hat: float):
        return _general_scales(graph.n, graph.m, deg_sq, p_hat, q_hat)

    return _t_star_scan(scales, graph.n, p, float(epsilon), t_max, n_cap)


def t_star_from_stats(
    n: int,
    m: int,
    deg_sq: int,
    p: float,
    epsilon: float,
    t_max: int = DEFAULT_T_MAX,
    n_cap: int = DEFAULT_N_CAP,
) -> TStarResult:
    """Union horizon search from summary statistics alone."""
    n = _check_count(n, "n", 3)
    m = _check_count(m, "m", 1)
    deg_sq = _check_count(deg_sq, "deg_sq", 1)
    p = _check_open_probability(p)
    if not 0.0 < float(epsilon) < 1.0:
        raise InvalidParameter(f"epsilon must lie in (0, 1), got {epsilon}")
    t_max = _check_count(t_max, "t_max", 1)
    n_cap = _check_count(n_cap, "n_cap", 2)

    def scales(p_hat: float, q_hat: float):
        return _general_scales(n, m, deg_sq, p_hat, q_hat)

    return _t_star_scan(scales, n, p, float(epsilon), t_max, n_cap)


def t_star_complete(
    n: int,
    p: float,
    epsilon: float,
    t_max: int = DEFAULT_T_MAX,
    n_cap: int = DEFAULT_N_CAP,
) -> TStarResult:
    """Union horizon search for the complete template via its simplified bound."""
    n = _check_count(n, "n", 3)
    p = _check_open_probability(p)
    if not 0.0 < float(epsilon) < 1.0:
        raise InvalidParameter(f"epsilon must lie in (0, 1), got {epsilon}")
    t_max = _check_count(t_max, "t_max", 1)
    n_cap = _check_count(n_cap, "n_cap", 2)

    def scales(p_hat: float, q_hat: float):
        return _complete_scales(n, p_hat, q_hat)

    return _t_star_scan(scales, n, p, float(epsilon), t_max, n_cap)
