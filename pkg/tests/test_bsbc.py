import json

import numpy as np
import pytest

from avbc.bsbc import (
    FIG2,
    FIG3,
    FIG4,
    Example1Params,
    Example2Params,
    beta_grid,
    example1_capacity,
    example1_region_at,
    example2_avbc_case1,
    example2_avbc_case2_bounds,
    example2_rp_capacity,
    figure_regions,
    write_figure,
)
from avbc.channel import StrategyMap, bsbc_example2
from avbc.regions import SearchSpace, hausdorff, region_random_parameter
from avbc.prob import binary_entropy as h

GRID_STEP = 1 / 511


def test_param_validation():
    with pytest.raises(ValueError):
        Example1Params(0.3, 0.9, 0.2)  # theta0 > 1 - theta1
    with pytest.raises(ValueError):
        Example1Params(0.005, 0.9, 0.5)
    with pytest.raises(ValueError):
        Example2Params(0.6, 0.85, 0.18, 0.78)
    assert FIG3.case == "case1"
    assert FIG4.case == "case2"
    assert Example2Params(0.1, 0.9, 0.3, 0.6).case == "case1"
    assert Example2Params(0.1, 0.9, 0.45, 0.6).case == "case2"
    assert FIG2.delta(1.0) == pytest.approx(0.1)
    assert FIG3.eps(1.0) == pytest.approx(0.22)


def test_beta_grid():
    b = beta_grid()
    assert b.size == 1001 and b[0] == 0.0 and b[-1] == 0.5


def test_example1_corners():
    cap = example1_capacity(FIG2)
    # R1 at R2 = 0: beta = 1/2 gives 1 - h(theta1)
    assert cap.frontier[0] == pytest.approx(1 - h(0.9), abs=1e-12)
    # largest R2: beta = 0 gives 1 - h(alpha * theta1) = 1 - h(0.74)
    assert cap.max_r0 == pytest.approx(1 - h(0.74), abs=GRID_STEP)


def test_example1_family_nested_and_capacity_at_q1():
    cap = example1_capacity(FIG2)
    regs = [example1_region_at(FIG2, q) for q in np.linspace(0, 1, 11)]
    np.testing.assert_allclose(np.where(cap.feasible, cap.frontier, 0),
                               np.where(regs[-1].feasible, regs[-1].frontier, 0), atol=1e-12)
    for a, b in zip(regs[:-1], regs[1:]):
        assert np.all(b.frontier <= a.frontier + 1e-12)


def test_example2_case1_is_q1_region():
    cap = example2_avbc_case1(FIG3)
    assert cap.frontier[0] == pytest.approx(1 - h(0.15), abs=1e-12)
    assert cap.max_r0 == pytest.approx(1 - h(0.22), abs=GRID_STEP)
    for q in (0.0, 0.25, 0.5):
        other = example2_rp_capacity(FIG3, q)
        assert np.all(cap.frontier <= other.frontier + 1e-12)
    with pytest.raises(ValueError):
        example2_avbc_case1(FIG4)
    with pytest.raises(ValueError):
        example2_rp_capacity(FIG3, 1.5)


def test_example2_case2_bounds_ordered():
    inner, outer = example2_avbc_case2_bounds(FIG4)
    assert np.all(inner.frontier <= outer.frontier + 1e-12)
    with pytest.raises(ValueError):
        example2_avbc_case2_bounds(FIG3)


def test_closed_form_matches_engine_random_parameter():
    W = bsbc_example2(FIG3.theta0, FIG3.theta1, FIG3.eps0, FIG3.eps1)
    sp = SearchSpace.preset("example2-family", W, points=101, q_points=2)
    for q in (0.0, 0.4, 1.0):
        eng = region_random_parameter(W, [1 - q, q], sp, 512)
        cf = example2_rp_capacity(FIG3, q, points=512)
        # the engine's U0 grid contains gamma = 1/2, so it can only reach up to the formula
        m = cf.feasible & eng.feasible
        assert np.all(eng.frontier[m] <= cf.frontier[m] + 1e-9)
        assert eng.frontier[0] == pytest.approx(cf.frontier[0], abs=1e-12)
        # remaining gap is the staircase between 101 beta samples
        assert hausdorff(eng, cf) < 1e-2


def test_figures(tmp_path):
    for name, curves in (("fig2", 6), ("fig3", 5), ("fig4", 7)):
        regs, meta = figure_regions(name, points=64)
        assert len(regs) == curves == len(meta["curves"])
    paths = write_figure("fig3", tmp_path, points=32)
    header = paths[0].read_text().splitlines()[0].split(",")
    assert header[0] == "R0" and header[1] == "capacity:R1"
    assert json.loads(paths[1].read_text())["case"] == "case1"
    with pytest.raises(ValueError):
        figure_regions("fig9")


def test_xor_map_shape():
    assert StrategyMap.xor().table.shape == (2, 2, 2)
