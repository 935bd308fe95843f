import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from avbc.prob import (
    JointPmf,
    Pmf,
    binary_entropy,
    build_type_grid,
    compositions,
    convolve,
    empirical_type,
    is_typical,
    n_types,
    simplex_lattice,
    type_count_bound,
)

# reference values computed with mpmath at 30 digits
H_01 = 0.468995593589281221
H_011 = 0.499915958164527996


def test_binary_entropy_values():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.1) == pytest.approx(H_01, abs=1e-15)
    assert binary_entropy(0.11) == pytest.approx(H_011, abs=1e-15)


def test_binary_entropy_array_and_domain():
    out = binary_entropy(np.array([0.1, 0.9, 0.5]))
    np.testing.assert_allclose(out, [H_01, H_01, 1.0], atol=1e-15)
    for bad in (-0.1, 1.5, float("nan")):
        with pytest.raises(ValueError):
            binary_entropy(bad)


@given(st.floats(0, 1), st.floats(0, 1))
def test_convolve_properties(a, b):
    c = convolve(a, b)
    assert c == pytest.approx(convolve(b, a), abs=1e-15)
    assert 0.0 <= c <= 1.0 + 1e-15
    assert convolve(a, 0.5) == pytest.approx(0.5, abs=1e-15)
    # a*b stays within [min(a, 1-a), 1 - min(a, 1-a)]
    lo = min(a, 1 - a)
    assert lo - 1e-12 <= c <= 1 - lo + 1e-12


def test_convolve_values():
    assert convolve(0.2, 0.3) == pytest.approx(0.38, abs=1e-15)
    assert convolve(0.0, 0.3) == pytest.approx(0.3)
    assert convolve(0.005, 0.2) == pytest.approx(0.203, abs=1e-15)
    with pytest.raises(ValueError):
        convolve(1.2, 0.1)


def test_pmf_validation():
    Pmf([0.25, 0.75])
    for bad in ([0.5, 0.6], [-0.1, 1.1], [], [float("inf"), 0.0]):
        with pytest.raises(ValueError):
            Pmf(bad)
    assert Pmf.bernoulli(0.3) == Pmf([0.7, 0.3])
    assert Pmf.from_json(Pmf.uniform(3).to_json()) == Pmf.uniform(3)


def test_joint_mutual_information_bsc():
    # uniform input through a BSC(0.1): I = 1 - h(0.1)
    t = 0.5 * np.array([[0.9, 0.1], [0.1, 0.9]])
    j = JointPmf(t)
    assert j.mutual_information([0], [1]) == pytest.approx(1 - H_01, abs=1e-12)
    np.testing.assert_allclose(j.marginal([0]), [0.5, 0.5])
    np.testing.assert_allclose(j.conditional([1], [0]), [[0.9, 0.1], [0.1, 0.9]])


def test_conditional_mi_chain_rule():
    rng = np.random.default_rng(0)
    t = rng.random((2, 3, 2))
    j = JointPmf(t / t.sum())
    lhs = j.mutual_information([0, 1], [2])
    rhs = j.mutual_information([0], [2]) + j.mutual_information([1], [2], given=[0])
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_empirical_type():
    assert empirical_type([0, 1, 1, 0], 2) == Pmf([0.5, 0.5])
    np.testing.assert_allclose(empirical_type([0, 0, 0, 2]).values, [0.75, 0, 0.25])
    with pytest.raises(ValueError):
        empirical_type([])
    with pytest.raises(ValueError):
        empirical_type([0, 3], 2)


def test_is_typical_examples():
    p = np.array([[0.5, 0.0], [0.0, 0.5]])
    assert is_typical(([0, 1, 0, 1], [0, 1, 0, 1]), p, 0.05)
    # visiting a zero-mass cell is atypical at any delta
    assert not is_typical(([0, 1, 0, 1], [0, 1, 0, 0]), p, 0.9)
    q = np.full((2, 2), 0.25)
    assert not is_typical(([0] * 8, [0] * 8), q, 0.05)
    with pytest.raises(ValueError):
        is_typical(([0], [0]), q, 0.0)


def test_compositions_and_lattice():
    c = compositions(4, 3)
    assert c.shape == (n_types(4, 3), 3) == (15, 3)
    assert np.all(c.sum(axis=1) == 4)
    assert len({tuple(r) for r in c}) == 15
    lat = simplex_lattice(4, 10)
    assert lat.shape == (286, 4)
    np.testing.assert_allclose(lat.sum(axis=1), 1.0)


def test_type_grid_counts():
    # full simplex: all n+1 binary types
    g = build_type_grid(None, 0.05, 64, n_states=2)
    assert len(g) == 65
    assert g.delta1 == pytest.approx(0.0125)
    # single member q = (1/2, 1/2): types k/64 with |k/64 - 1/2| <= 0.0125 -> k in {32}
    g = build_type_grid([Pmf.uniform(2)], 0.05, 64)
    np.testing.assert_allclose(g.types, [[0.5, 0.5]])
    # n = 80: |k/80 - 1/2| <= 0.0125 -> k in {39, 40, 41}
    g = build_type_grid([Pmf.uniform(2)], 0.05, 80)
    assert len(g) == 3
    assert len(g) <= type_count_bound(80, 2)
    with pytest.raises(ValueError):
        build_type_grid(None, 0.05, 10)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 40), st.floats(0.01, 0.5))
def test_type_grid_is_delta1_close(n, delta):
    q = np.array([0.3, 0.7])
    g = build_type_grid([q], delta, n)
    if len(g):
        assert np.max(np.abs(g.types - q)) <= delta / 4 + 1e-12
        assert np.allclose(np.round(g.types * n), g.types * n)
    full = compositions(n, 2) / n
    close = np.max(np.abs(full - q), axis=1) <= delta / 4 + 1e-12
    assert close.sum() == len(g)


def test_type_count_bound():
    assert type_count_bound(10, 2) == 121
    assert n_types(10, 2) == 11 <= 121
    assert math.comb(12, 2) == n_types(10, 3)
