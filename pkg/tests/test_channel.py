import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from avbc.channel import (
    BroadcastChannel,
    DmcWithState,
    StrategyMap,
    bsbc_example1,
    bsbc_example2,
    degraded_check,
    enumerate_maps,
    induced_joint,
    mi_batch,
    mutual_infos,
    product_bernoulli,
    state_kernels,
    strategy_channels,
    strategy_kernel,
)
from avbc.prob import binary_entropy as h, convolve

E1 = (0.005, 0.9, 0.2)


def test_channel_validation():
    with pytest.raises(ValueError):
        BroadcastChannel(np.full((2, 2, 2, 2), 0.3))
    with pytest.raises(ValueError):
        BroadcastChannel(np.ones((2, 2, 2)))
    W = bsbc_example1(*E1)
    assert (W.nx, W.ns, W.ny1, W.ny2) == (2, 2, 2, 2)
    W2 = BroadcastChannel.from_json(W.to_json())
    np.testing.assert_array_equal(W2.w, W.w)


def test_example1_marginals():
    W = bsbc_example1(*E1)
    # Y1 = X + Z_s, Y2 = Y1 + K
    assert W.w1[0, 1, 1] == pytest.approx(0.9)
    assert W.w2[0, 0, 1] == pytest.approx(convolve(0.005, 0.2))
    assert W.w2[1, 1, 1] == pytest.approx(1 - convolve(0.9, 0.2))


def test_example2_conditionally_independent():
    W = bsbc_example2(0.12, 0.85, 0.18, 0.78)
    np.testing.assert_allclose(W.w, W.w1[..., :, None] * W.w2[..., None, :])
    assert W.w2[1, 1, 0] == pytest.approx(0.78)


def test_strategy_map_examples():
    xi = StrategyMap.xor()
    u0 = np.array([0, 1, 1, 0])
    u1 = np.array([1, 1, 0, 0])
    np.testing.assert_array_equal(xi(u0, u1, np.zeros(4, int)), u0 ^ u1)
    np.testing.assert_array_equal(xi(u0, u1, np.ones(4, int)), u0 ^ u1 ^ 1)
    blind = StrategyMap.state_blind(2, 2, 2)
    assert np.all(blind.table[:, :, 0] == blind.table[:, :, 1])
    with pytest.raises(ValueError):
        StrategyMap(np.full((2, 2, 2), 2), 2)
    with pytest.raises(ValueError):
        StrategyMap(np.zeros((2, 2)), 2)
    assert StrategyMap.from_json(xi.to_json()).table.tolist() == xi.table.tolist()


def test_enumerate_maps():
    maps = enumerate_maps(2, 2, 2, 2)
    assert len(maps) == 256
    assert len({m.table.tobytes() for m in maps}) == 256
    with pytest.raises(ValueError):
        enumerate_maps(2, 3, 3, 2)


def test_example1_closed_form_mis():
    # XOR map, U0 uniform: at q = 1 the public letter sees BSC(theta1 * alpha) when beta = 0
    W = bsbc_example1(*E1)
    xi = StrategyMap.xor()
    for q, th in ((1.0, 0.9), (0.0, 0.005)):
        for beta in (0.0, 0.1, 0.3):
            m = mutual_infos(induced_joint(product_bernoulli(0.5, beta), xi, W, [1 - q, q]))
            assert m.i0 == pytest.approx(1 - h(convolve(convolve(beta, th), 0.2)), abs=1e-12)
            assert m.i1 == pytest.approx(h(convolve(beta, th)) - h(th), abs=1e-12)
            assert m.isum == pytest.approx(1 - h(th), abs=1e-12)


def test_example2_state_mixture():
    # at mixture q the XOR map turns S into extra noise: theta_q = (1-q) theta0 + q (1 - theta1)
    W = bsbc_example2(0.12, 0.85, 0.18, 0.78)
    xi = StrategyMap.xor()
    q = 0.3
    th = (1 - q) * 0.12 + q * (1 - 0.85)
    ep = (1 - q) * 0.18 + q * (1 - 0.78)
    m = mutual_infos(induced_joint(product_bernoulli(0.5, 0.2), xi, W, [1 - q, q]))
    assert m.isum == pytest.approx(1 - h(th), abs=1e-12)
    assert m.i0 == pytest.approx(1 - h(convolve(0.2, ep)), abs=1e-12)


def test_strategy_kernel_shapes():
    W = bsbc_example2(0.12, 0.85, 0.18, 0.78)
    xi = StrategyMap.xor()
    assert state_kernels(xi, W).shape == (2, 2, 2, 2, 2)
    k = strategy_kernel(xi, W, [0.4, 0.6])
    np.testing.assert_allclose(k.sum(axis=(2, 3)), 1.0)
    with pytest.raises(ValueError):
        strategy_kernel(xi, W, [0.5, 0.6])
    with pytest.raises(ValueError):
        induced_joint(np.full((3, 2), 1 / 6), xi, W, [0.5, 0.5])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_mi_batch_matches_scalar(seed):
    rng = np.random.default_rng(seed)
    w = rng.random((2, 2, 3, 2))
    W = BroadcastChannel(w / w.sum(axis=(2, 3), keepdims=True))
    xi = enumerate_maps(2, 2, 2, 2)[rng.integers(256)]
    P = rng.random((4, 2, 2))
    P /= P.sum(axis=(1, 2), keepdims=True)
    q = rng.dirichlet([1, 1])
    got = mi_batch(P, strategy_kernel(xi, W, q))
    for n in range(4):
        ref = mutual_infos(induced_joint(P[n], xi, W, q))
        np.testing.assert_allclose(got[n], ref, atol=1e-10)
        # constraint ordering: I(U1;Y1|U0) <= I(U0,U1;Y1)
        assert got[n, 1] <= got[n, 2] + 1e-12


def test_strategy_channels_xor():
    W = bsbc_example2(0.12, 0.85, 0.18, 0.78)
    xi = StrategyMap.xor()
    V1, V2 = strategy_channels(xi, xi.table[:, 0, :], W)
    assert (V1.nu, V1.ns, V1.ny) == (4, 2, 2)
    # u = (u0, u1) = (1, 0) -> row 2; s = 1 -> x = 0, y1 = 1 w.p. theta1
    assert V1.v[2, 1, 1] == pytest.approx(0.85)
    assert V2.v[0, 0, 1] == pytest.approx(0.18)
    with pytest.raises(ValueError):
        strategy_channels(xi, np.zeros((2, 3), int), W)
    with pytest.raises(ValueError):
        DmcWithState(np.full((2, 2, 2), 0.7))


def test_degraded_check():
    res = degraded_check(bsbc_example1(*E1))
    assert res.degraded
    # witness reproduces W2 = W1 K
    W = bsbc_example1(*E1)
    np.testing.assert_allclose(W.w1 @ res.witness, W.w2, atol=1e-9)
    np.testing.assert_allclose(res.witness, [[0.8, 0.2], [0.2, 0.8]], atol=1e-7)
    assert not degraded_check(bsbc_example2(0.12, 0.85, 0.22, 0.88)).degraded
    assert not degraded_check(bsbc_example2(0.12, 0.85, 0.18, 0.78)).degraded
    # a channel with identical outputs is trivially degraded
    w1 = bsbc_example2(0.1, 0.9, 0.1, 0.9).w1
    assert degraded_check(BroadcastChannel.from_marginals(w1, w1)).degraded
