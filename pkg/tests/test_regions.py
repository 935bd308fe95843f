import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from avbc.channel import BroadcastChannel, StrategyMap, bsbc_example1, bsbc_example2, enumerate_maps
from avbc.prob import binary_entropy as h
from avbc.regions import (
    RateRegion,
    SearchSpace,
    canonical_maps,
    check_condition_T,
    compound_bounds,
    full_joint_grid,
    hausdorff,
    inner_bound_compound,
    outer_bound,
    pentagon,
    product_bernoulli_grid,
    rate_grid,
    rectangle,
    region_intersection,
    region_jahn_no_si,
    region_random_parameter,
    region_union,
    regions_csv,
    state_grid,
    union_frontier,
)

mi_val = st.floats(0.0, 1.0, allow_nan=False)


def test_pentagon_geometry():
    g = rate_grid(101)
    r = pentagon((0.4, 0.5, 0.7), g)
    assert r.contains(0.0, 0.5)
    assert r.contains(0.2, 0.5)
    assert r.contains(0.4, 0.3)
    assert not r.contains(0.3, 0.5)
    assert not r.contains(0.45, 0.0)
    assert r.max_r0 == pytest.approx(0.4)
    assert np.all(np.isneginf(r.frontier[g > 0.4 + 1e-9]))
    assert np.all(r.frontier[r.feasible] >= 0)


def test_rectangle_and_trivial():
    g = rate_grid(11)
    r = rectangle(0.3, 0.2, g)
    np.testing.assert_allclose(r.frontier[:4], 0.2)
    assert not r.is_trivial()
    assert pentagon((0.0, 0.0, 0.0), g).is_trivial()


@given(st.lists(st.tuples(mi_val, mi_val, mi_val), min_size=1, max_size=6))
def test_union_is_pointwise_max(triples):
    g = rate_grid(64)
    regs = [pentagon(t, g) for t in triples]
    u = region_union(regs)
    np.testing.assert_array_equal(u.frontier, union_frontier(np.array(triples), g))
    for r in regs:
        assert np.all(u.frontier >= r.frontier)
    i = region_intersection(regs)
    for r in regs:
        assert np.all(i.frontier <= r.frontier)


@given(st.tuples(mi_val, mi_val, mi_val), st.tuples(mi_val, mi_val, mi_val))
def test_intersection_of_pentagons_is_min_pentagon(a, b):
    g = rate_grid(64)
    i = region_intersection([pentagon(a, g), pentagon(b, g)])
    m = pentagon(np.minimum(a, b), g)
    np.testing.assert_allclose(i.frontier, m.frontier, atol=1e-12)


def test_grid_mismatch_rejected():
    with pytest.raises(ValueError):
        region_union([pentagon((1, 1, 1), 10), pentagon((1, 1, 1), 11)])
    with pytest.raises(ValueError):
        region_union([])
    with pytest.raises(ValueError):
        RateRegion(np.zeros(3), np.zeros(4))


def test_csv_and_json_roundtrip():
    r = pentagon((0.5, 0.3, 0.6), rate_grid(5))
    lines = r.to_csv().strip().splitlines()
    assert lines[0] == "R0,R1"
    assert lines[1:] == ["0.000000,0.300000", "0.250000,0.300000", "0.500000,0.100000"]
    back = RateRegion.from_json(json.loads(json.dumps(r.to_json())))
    np.testing.assert_array_equal(back.frontier, r.frontier)
    text = regions_csv({"a": r, "b": rectangle(1, 1, rate_grid(5))})
    assert text.splitlines()[0] == "R0,a:R1,b:R1"
    assert text.splitlines()[-1] == "1.000000,,1.000000"


def test_hausdorff():
    g = rate_grid(201)
    a = rectangle(0.5, 0.5, g)
    assert hausdorff(a, a) == 0.0
    b = rectangle(0.5, 0.45, g)
    assert hausdorff(a, b) == pytest.approx(0.05, abs=2e-4)


def test_state_grid_and_families():
    q = state_grid(2, 101)
    assert q.shape == (101, 2)
    np.testing.assert_allclose(q[0], [1, 0])
    assert state_grid(3).shape[0] > 5000
    assert product_bernoulli_grid(11).shape == (121, 2, 2)
    assert full_joint_grid(2, 2, 10).shape == (286, 2, 2)
    # 256 binary maps fall into orbits of size <= 4 under relabelings
    reps = canonical_maps(enumerate_maps(2, 2, 2, 2))
    assert 64 <= len(reps) < 256


def test_search_space_validation():
    W = bsbc_example1(0.005, 0.9, 0.2)
    with pytest.raises(ValueError):
        SearchSpace(2, 2, np.full((1, 2, 2), 0.3), [StrategyMap.xor()], state_grid(2, 3))
    with pytest.raises(ValueError):
        SearchSpace.preset("nope", W)
    big = SearchSpace(7, 2, np.full((1, 7, 2), 1 / 14), [StrategyMap(np.zeros((7, 2, 2), int), 2)],
                      state_grid(2, 3))
    with pytest.raises(ValueError):
        big.validate_for(W)  # |U0| cap is |X||S| + 2 = 6
    sp = SearchSpace.preset("example1-family", W, points=5, q_points=3)
    back = SearchSpace.from_json(json.loads(json.dumps(sp.to_json())))
    np.testing.assert_array_equal(back.p_grid, sp.p_grid)
    assert SearchSpace.from_json({"preset": "example2-family", "points": 5}, W).p_grid.shape == (25, 2, 2)


def _random_channel(rng):
    w = rng.random((2, 2, 2, 2))
    return BroadcastChannel(w / w.sum(axis=(2, 3), keepdims=True))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_inner_within_outer(seed):
    rng = np.random.default_rng(seed)
    W = _random_channel(rng)
    maps = [enumerate_maps(2, 2, 2, 2)[i] for i in rng.choice(256, 4, replace=False)]
    sp = SearchSpace(2, 2, product_bernoulli_grid(6), maps, state_grid(2, 5))
    inner, outer = compound_bounds(W, sp, points=64)
    assert np.all(inner.frontier <= outer.frontier + 1e-12)
    # a single state law collapses the two bounds
    one = sp.with_q([[0.3, 0.7]])
    a, b = compound_bounds(W, one, points=64)
    np.testing.assert_array_equal(a.frontier, b.frontier)
    np.testing.assert_array_equal(region_random_parameter(W, [0.3, 0.7], sp, 64).frontier, a.frontier)


def test_outer_bound_monotone_in_q_family():
    W = bsbc_example2(0.12, 0.85, 0.18, 0.78)
    sp = SearchSpace.preset("example2-family", W, points=21, q_points=11)
    full = outer_bound(W, sp, 128)
    part = outer_bound(W, sp.with_q(sp.q_grid[::5]), 128)
    assert np.all(full.frontier <= part.frontier + 1e-12)
    ib_full = inner_bound_compound(W, sp, 128)
    ib_part = inner_bound_compound(W, sp.with_q(sp.q_grid[::5]), 128)
    assert np.all(ib_full.frontier <= ib_part.frontier + 1e-12)


def test_random_parameter_example1_corners():
    # at q = 1 with the XOR family: max R1 = 1 - h(theta1), max R2 = 1 - h(theta1 * alpha)
    W = bsbc_example1(0.005, 0.9, 0.2)
    sp = SearchSpace.preset("example1-family", W, points=101, q_points=2)
    r = region_random_parameter(W, [0.0, 1.0], sp, 512)
    assert r.frontier[0] == pytest.approx(1 - h(0.1), abs=1e-9)
    assert r.max_r0 == pytest.approx(1 - h(0.26), abs=1 / 511)


def test_condition_T_small():
    W = bsbc_example2(0.12, 0.85, 0.18, 0.78)
    xi = StrategyMap.xor()
    D = np.stack([np.outer([0.5, 0.5], [1 - b, b]) for b in np.linspace(0, 1, 11)])
    rep = check_condition_T(W, xi, D, state_grid(2, 11))
    assert rep.holds
    np.testing.assert_allclose(rep.q_star.values, [0, 1])
    out = rep.to_json()
    assert out["holds"] is True and len(out["per_p_argmin"]) == 11
    with pytest.raises(ValueError):
        check_condition_T(W, xi, D, state_grid(2, 11), tol=0)


def test_jahn_trivial_and_nontrivial():
    assert region_jahn_no_si(bsbc_example2(0.12, 0.85, 0.18, 0.78), points=128).is_trivial()
    # a channel whose states do not matter keeps a nontrivial region
    W = bsbc_example2(0.1, 0.1, 0.2, 0.2)
    r = region_jahn_no_si(W, points=128)
    assert r.frontier[0] == pytest.approx(1 - h(0.1), abs=1e-3)
    with pytest.raises(ValueError):
        region_jahn_no_si(W, SearchSpace.preset("example2-family", W, points=3, q_points=3))
