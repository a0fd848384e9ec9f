import math
import random

import pytest

from conngraph import (
    InvalidParameter,
    ModelParams,
    NegativeRadicand,
    TStarNotFound,
    complete,
    complete_minus_cycle,
    complete_minus_cycle_stats,
    connectivity_bound,
    connectivity_bound_at_N,
    connectivity_bound_complete,
    connectivity_bound_from_stats,
    ell_first_order_lower,
    ell_mean,
    ell_variance,
    from_edge_list,
    lambda2_mean_lower,
    lambda2_sq_mean_upper,
    n_search_max,
    r_factor,
    s_value,
    sum_degree_squares,
    t_star,
    t_star_complete,
    t_star_from_stats,
    union_edge_probability,
)
from conngraph.bounds import _s_squared

import support

K3_HALF = ModelParams(complete(3), 0.5)


def test_moment_values_triangle():
    # K3 at p = 1/2: mu = 2*3*(1/2)/2 = 3/2, S^2 = 6, sigma^2 = 6/4 = 3/2
    assert ell_mean(K3_HALF) == 1.5
    assert s_value(K3_HALF) == pytest.approx(math.sqrt(6.0), rel=1e-15)
    assert ell_variance(K3_HALF) == pytest.approx(1.5, rel=1e-15)
    assert lambda2_sq_mean_upper(K3_HALF) == 3.75


def test_model_params_validation():
    with pytest.raises(InvalidParameter):
        ModelParams(complete(3), 0.0)
    with pytest.raises(InvalidParameter):
        ModelParams(complete(3), 1.0)
    with pytest.raises(InvalidParameter):
        ModelParams(complete(3), -0.2)
    with pytest.raises(InvalidParameter):
        ModelParams(complete(2), 0.5)


def test_r_factor():
    assert r_factor(1, 5) == 0.0
    assert r_factor(2, 3) == pytest.approx(0.5, rel=1e-15)
    # direct power form, small arguments
    for n in (3, 4, 7, 12):
        for N in (2, 3, 5, 10):
            direct = 1.0 - ((n - 2) / (n - 1)) ** (N - 1)
            assert r_factor(N, n) == pytest.approx(direct, rel=1e-13)
    # increasing in N, always inside [0, 1)
    prev = 0.0
    for N in range(1, 40):
        r = r_factor(N, 6)
        assert 0.0 <= r < 1.0
        assert r >= prev
        prev = r


def test_ell_first_order_lower():
    # N = 1 reduces to the mean
    assert ell_first_order_lower(K3_HALF, 1) == ell_mean(K3_HALF)
    expected = (3.0 - math.sqrt(6.0)) / 2.0
    assert ell_first_order_lower(K3_HALF, 2) == pytest.approx(expected, rel=1e-15)
    # large N clamps at zero
    assert ell_first_order_lower(K3_HALF, 50) == 0.0


def test_lambda2_mean_lower():
    # at K3, p=1/2, N=2: 2mpR - S = 1.5 - sqrt(6) < 0, clamps
    assert lambda2_mean_lower(K3_HALF, 2) == 0.0
    params = ModelParams(complete(3), 0.999)
    val = lambda2_mean_lower(params, 3)
    r = r_factor(3, 3)
    direct = (2 * 3 * 0.999 * r - s_value(params) * math.sqrt(2.0)) / (2 * r)
    assert val == pytest.approx(direct, rel=1e-12)
    assert val > 0
    with pytest.raises(InvalidParameter):
        lambda2_mean_lower(K3_HALF, 1)


def test_bound_triangle_half_is_zero():
    res = connectivity_bound(K3_HALF)
    assert res.probability_lower_bound == 0.0
    assert res.maximizing_n == 2
    assert res.n_search_max == 2
    assert n_search_max(K3_HALF) == 2


def test_bound_triangle_near_one():
    res = connectivity_bound(ModelParams(complete(3), 0.999))
    assert res.probability_lower_bound == pytest.approx(0.9043476190919627, rel=1e-12)
    assert res.maximizing_n == 3
    assert res.n_search_max == 1499


def test_bound_triangle_intermediate():
    res = connectivity_bound(ModelParams(complete(3), 0.8))
    assert res.probability_lower_bound == pytest.approx(0.0454216069316491, rel=1e-12)


def test_bound_at_N_consistent_with_scan():
    params = ModelParams(complete(6), 0.9)
    res = connectivity_bound(params)
    at_star = connectivity_bound_at_N(params, res.maximizing_n)
    assert at_star == pytest.approx(res.probability_lower_bound, rel=1e-14)
    # no other N in range does better
    for N in range(2, res.n_search_max + 1):
        assert connectivity_bound_at_N(params, N) <= at_star + 1e-14


def test_bound_in_unit_interval():
    rng = random.Random(19)
    for _ in range(40):
        n = rng.randrange(3, 10)
        g = from_edge_list(n, support.random_connected_graph(rng, n, rng.randrange(0, 5)))
        p = rng.uniform(0.01, 0.99)
        val = connectivity_bound(ModelParams(g, p)).probability_lower_bound
        assert 0.0 <= val <= 1.0


def test_bound_matches_naive_reference():
    # pruned chunked scan against a from-scratch full scan of the same ratio
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randrange(3, 9)
        g = from_edge_list(n, support.random_connected_graph(rng, n, rng.randrange(0, 4)))
        p = rng.uniform(0.3, 0.995)
        got = connectivity_bound(ModelParams(g, p)).probability_lower_bound
        want, _ = support.reference_bound(n, g.m, sum_degree_squares(g), p)
        assert got == pytest.approx(want, rel=1e-9, abs=1e-12)


def test_s_squared_matches_expanded_formula():
    rng = random.Random(43)
    for _ in range(30):
        n = rng.randrange(3, 10)
        g = from_edge_list(n, support.random_connected_graph(rng, n, rng.randrange(0, 5)))
        p = rng.uniform(0.05, 0.95)
        params = ModelParams(g, p)
        expanded = support.reference_s_squared(n, g.m, sum_degree_squares(g), p)
        assert ell_variance(params) * (n - 1) ** 2 == pytest.approx(expanded, rel=1e-9)


@pytest.mark.parametrize("n", [3, 5, 8, 20])
@pytest.mark.parametrize("p", [0.1, 0.5, 0.9, 0.99])
def test_complete_template_s_identity(n, p):
    # for K_n the variance scale collapses to 2 n (n-1)^2 p (1-p)
    params = ModelParams(complete(n), p)
    assert s_value(params) ** 2 == pytest.approx(2 * n * (n - 1) ** 2 * p * (1 - p), rel=1e-12)


def test_complete_route_matches_general_route():
    for n in (3, 4, 7, 15, 30):
        for p in (0.05, 0.3, 0.5, 0.8, 0.95, 0.999):
            a = connectivity_bound(ModelParams(complete(n), p))
            b = connectivity_bound_complete(n, p)
            # routes may disagree on argmax ties by one ulp, values must agree
            assert b.probability_lower_bound == pytest.approx(
                a.probability_lower_bound, rel=1e-12, abs=1e-15
            )


def test_stats_route_matches_graph_route():
    g = complete_minus_cycle(7)
    p = 0.85
    a = connectivity_bound(ModelParams(g, p))
    b = connectivity_bound_from_stats(7, g.m, sum_degree_squares(g), p)
    assert a == b


def test_n_search_max_formula():
    rng = random.Random(59)
    for _ in range(20):
        n = rng.randrange(3, 9)
        g = from_edge_list(n, support.random_connected_graph(rng, n, rng.randrange(0, 4)))
        p = rng.uniform(0.1, 0.99)
        params = ModelParams(g, p)
        s_sq = ell_variance(params) * (n - 1) ** 2
        expected = max(2, int(math.floor((s_sq + (2 * g.m * p) ** 2) / s_sq)))
        assert n_search_max(params) == expected


def test_n_search_max_honors_cap():
    params = ModelParams(complete(3), 0.999)
    assert n_search_max(params, n_cap=100) == 100
    res = connectivity_bound(params, n_cap=100)
    assert res.n_search_max == 100


def test_negative_radicand_on_impossible_stats():
    # sum of squared degrees far below (2m)^2 / n cannot come from any graph
    with pytest.raises(NegativeRadicand):
        connectivity_bound_from_stats(3, 3, 1, 0.99)


def test_radicand_clamp_boundary():
    # a0 = 0 for these stats; a tiny negative complement lands in the clamp window
    assert _s_squared(3, 5, 40, 1e-3, -1e-12) == 0.0
    with pytest.raises(NegativeRadicand):
        _s_squared(3, 5, 40, 1e-3, -1.0)


def test_union_edge_probability():
    assert union_edge_probability(0.3, 2) == pytest.approx(0.51, rel=1e-15)
    assert union_edge_probability(0.3, 1) == pytest.approx(0.3, rel=1e-15)
    assert union_edge_probability(0.0, 5) == 0.0
    assert union_edge_probability(1.0, 5) == 1.0
    # increasing in T, never below p
    prev = 0.0
    for T in range(1, 60):
        cur = union_edge_probability(0.2, T)
        assert cur >= prev
        prev = cur
    assert union_edge_probability(0.5, 200) == pytest.approx(1.0)
    with pytest.raises(InvalidParameter):
        union_edge_probability(1.2, 3)
    with pytest.raises(InvalidParameter):
        union_edge_probability(0.5, 0)


def test_t_star_triangle_loose_target():
    res = t_star(complete(3), 0.5, 0.2)
    assert res.t_star == 8
    assert res.bound_at_t_star == pytest.approx(0.8143395042952083, rel=1e-12)
    assert len(res.trace) == 8
    assert all(val < 0.8 for _, val in res.trace[:-1])


def test_t_star_triangle_tight_target():
    # the bound keeps climbing as p_hat -> 1, so even 0.99 is reached
    res = t_star(complete(3), 0.5, 0.01)
    assert res.t_star == 17
    assert res.bound_at_t_star >= 0.99
    # cross-check the crossing point against the naive reference scan
    first = None
    for T in range(1, 40):
        p_hat = 1.0 - 0.5**T
        val, _ = support.reference_bound(3, 3, 12, p_hat)
        if val >= 0.99:
            first = T
            break
    assert first == 17


def test_t_star_not_found_carries_trace():
    with pytest.raises(TStarNotFound) as info:
        t_star(complete(3), 0.5, 0.01, t_max=5)
    exc = info.value
    assert exc.best_t == 5
    assert len(exc.trace) == 5
    assert 0.0 <= exc.best_bound < 0.99


def test_t_star_plateau_breaks_early():
    # K5 minus a cycle keeps positive eigenvalue spread even at p_hat = 1,
    # so the bound plateaus; the scan must stop once the complement
    # underflows instead of walking all 10^5 horizons
    with pytest.raises(TStarNotFound) as info:
        t_star(complete_minus_cycle(5), 0.5, 0.01, t_max=10**5)
    assert len(info.value.trace) < 2000


def test_t_star_variants_agree():
    res = t_star(complete(4), 0.4, 0.3)
    comp = t_star_complete(4, 0.4, 0.3)
    assert comp.t_star == res.t_star
    assert comp.bound_at_t_star == pytest.approx(res.bound_at_t_star, rel=1e-12)
    # stats route feeds the same scales, so even the failure payload is bitwise
    # equal (this sparse template's bound plateaus at zero and never reaches 0.5)
    g = complete_minus_cycle(6)
    m, deg_sq = complete_minus_cycle_stats(6)
    with pytest.raises(TStarNotFound) as from_graph:
        t_star(g, 0.7, 0.5)
    with pytest.raises(TStarNotFound) as from_stats:
        t_star_from_stats(6, m, deg_sq, 0.7, 0.5)
    assert from_graph.value.trace == from_stats.value.trace
    assert from_graph.value.best_t == from_stats.value.best_t


def test_t_star_validation():
    with pytest.raises(InvalidParameter):
        t_star(complete(3), 0.5, 0.0)
    with pytest.raises(InvalidParameter):
        t_star(complete(3), 0.5, 1.0)
    with pytest.raises(InvalidParameter):
        t_star(complete(3), 1.0, 0.1)
    with pytest.raises(InvalidParameter):
        t_star(complete(2), 0.5, 0.1)
    with pytest.raises(InvalidParameter):
        t_star_complete(3, 0.5, 0.1, t_max=0)


def test_bound_result_diagnostics_consistent():
    params = ModelParams(complete(5), 0.9)
    res = connectivity_bound(params)
    assert res.mu == pytest.approx(ell_mean(params), rel=1e-15)
    assert res.sigma_squared == pytest.approx(ell_variance(params), rel=1e-15)
    assert res.s_value == pytest.approx(s_value(params), rel=1e-15)
    assert res.numerator / res.denominator == pytest.approx(
        res.probability_lower_bound, rel=1e-12
    )
