"""Closed-form regions for the two binary symmetric broadcast examples and figure data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .prob import binary_entropy as h
from .prob import convolve
from .regions import DEFAULT_POINTS, RateRegion, rate_grid, regions_csv, union_frontier

BETA_POINTS = 1001


def beta_grid(points: int = BETA_POINTS) -> np.ndarray:
    """Grid on [0, 1/2]; the unions over beta fold onto it since h(a*(1-b)) = h(a*b)."""
    return np.linspace(0.0, 0.5, points)


@dataclass(frozen=True)
class Example1Params:
    theta0: float
    theta1: float
    alpha: float

    def __post_init__(self):
        for name in ("theta0", "theta1", "alpha"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [0, 1]")
        if not (self.theta0 <= 1 - self.theta1 + 1e-15 and 1 - self.theta1 <= 0.5 + 1e-15):
            raise ValueError("need theta0 <= 1 - theta1 <= 1/2")
        if not self.alpha < 0.5:
            raise ValueError("need alpha < 1/2")

    def delta(self, q: float) -> float:
        """Effective crossover of S + Z_S under the state law Bern(q)."""
        return (1 - q) * self.theta0 + q * (1 - self.theta1)


@dataclass(frozen=True)
class Example2Params:
    theta0: float
    theta1: float
    eps0: float
    eps1: float

    def __post_init__(self):
        for name in ("theta0", "theta1", "eps0", "eps1"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [0, 1]")
        # the full ordering theta0 <= eps0 and eps1 <= theta1 is not enforced:
        # the case-2 figure parameters have eps1 > theta1
        t = 1e-15
        if not (self.theta0 <= 0.5 + t and self.eps0 <= 0.5 + t
                and 0.5 <= self.eps1 + t and 0.5 <= self.theta1 + t):
            raise ValueError("need theta0, eps0 <= 1/2 <= eps1, theta1")

    @property
    def case(self) -> str:
        c1 = self.eps0 <= 1 - self.eps1 + 1e-15
        c2 = 1 - self.eps1 <= self.eps0 + 1e-15
        if c1:
            return "case1"
        if c2:
            return "case2"
        return "other"

    def delta(self, q: float) -> float:
        return (1 - q) * self.theta0 + q * (1 - self.theta1)

    def eps(self, q: float) -> float:
        return (1 - q) * self.eps0 + q * (1 - self.eps1)


def _union_of_rectangles(r0: np.ndarray, r1: np.ndarray, points: int, labels) -> RateRegion:
    grid = rate_grid(points, 1.0)
    t = np.column_stack([r0, r1, np.full_like(r0, np.inf)])
    return RateRegion(grid, union_frontier(t, grid), labels)


def example1_region_at(params: Example1Params, q: float, betas: np.ndarray | None = None,
                       points: int = DEFAULT_POINTS) -> RateRegion:
    """Per-q region: R2 <= 1 - h(alpha*beta*delta_q), R1 <= h(beta*delta_q) - h(delta_q)."""
    b = beta_grid() if betas is None else np.asarray(betas, float)
    d = params.delta(q)
    bd = convolve(b, d)
    r2 = 1 - h(convolve(params.alpha, bd))
    r1 = h(bd) - h(d)
    return _union_of_rectangles(r2, r1, points, ("R2", "R1"))


def example1_capacity(params: Example1Params, betas: np.ndarray | None = None,
                      points: int = DEFAULT_POINTS) -> RateRegion:
    """Union over beta of {R2 <= 1 - h(alpha*beta*theta1), R1 <= h(beta*theta1) - h(theta1)}."""
    b = beta_grid() if betas is None else np.asarray(betas, float)
    bt = convolve(b, params.theta1)
    r2 = 1 - h(convolve(params.alpha, bt))
    r1 = h(bt) - h(params.theta1)
    return _union_of_rectangles(r2, r1, points, ("R2", "R1"))


def example2_rp_capacity(params: Example2Params, q: float, betas: np.ndarray | None = None,
                         points: int = DEFAULT_POINTS) -> RateRegion:
    """Union over beta of {R0 <= 1 - h(beta*eps_q), R1 <= h(beta*delta_q) - h(delta_q)}."""
    if not 0.0 <= q <= 1.0:
        raise ValueError("q outside [0, 1]")
    b = beta_grid() if betas is None else np.asarray(betas, float)
    d, e = params.delta(q), params.eps(q)
    r0 = 1 - h(convolve(b, e))
    r1 = h(convolve(b, d)) - h(d)
    return _union_of_rectangles(r0, r1, points, ("R0", "R1"))


def example2_avbc_case1(params: Example2Params, betas: np.ndarray | None = None,
                        points: int = DEFAULT_POINTS) -> RateRegion:
    if params.case != "case1":
        raise ValueError("parameters are not in case 1 (eps0 <= 1 - eps1)")
    return example2_rp_capacity(params, 1.0, betas, points)


def example2_avbc_case2_bounds(params: Example2Params, betas: np.ndarray | None = None,
                               points: int = DEFAULT_POINTS) -> tuple[RateRegion, RateRegion]:
    """Inner: union over beta of {R0 <= 1 - h(beta*eps0), R1 <= h(beta*theta1) - h(theta1)}.
    Outer: pointwise minimum of the q = 0 and q = 1 regions."""
    if params.case not in ("case2",) and not np.isclose(params.eps0, 1 - params.eps1):
        raise ValueError("parameters are not in case 2 (1 - eps1 <= eps0)")
    b = beta_grid() if betas is None else np.asarray(betas, float)
    r0 = 1 - h(convolve(b, params.eps0))
    r1 = h(convolve(b, params.theta1)) - h(params.theta1)
    inner = _union_of_rectangles(r0, r1, points, ("R0", "R1"))
    a = example2_rp_capacity(params, 0.0, b, points)
    c = example2_rp_capacity(params, 1.0, b, points)
    outer = RateRegion(a.grid, np.minimum(a.frontier, c.frontier), ("R0", "R1"))
    return inner, outer


FIG2 = Example1Params(0.005, 0.9, 0.2)
FIG3 = Example2Params(0.12, 0.85, 0.18, 0.78)
FIG4 = Example2Params(0.12, 0.85, 0.22, 0.88)

FIGURES = ("fig2", "fig3", "fig4")


def figure_regions(name: str, points: int = DEFAULT_POINTS) -> tuple[dict[str, RateRegion], dict]:
    """Frontier families plotted in each figure, plus metadata."""
    if name == "fig2":
        regs = {"capacity": example1_capacity(FIG2, points=points)}
        for q in (0.0, 0.25, 0.5, 0.75, 1.0):
            regs[f"q={q:g}"] = example1_region_at(FIG2, q, points=points)
        meta = {"params": FIG2.__dict__, "axes": ["R2", "R1"]}
    elif name == "fig3":
        regs = {"capacity": example2_avbc_case1(FIG3, points=points)}
        for q in (0.0, 1 / 3, 2 / 3, 1.0):
            regs[f"q={q:.4g}"] = example2_rp_capacity(FIG3, q, points=points)
        meta = {"params": FIG3.__dict__, "axes": ["R0", "R1"], "case": FIG3.case}
    elif name == "fig4":
        inner, outer = example2_avbc_case2_bounds(FIG4, points=points)
        regs = {"inner": inner, "outer": outer}
        for q in np.linspace(0, 1, 5):
            regs[f"q={q:g}"] = example2_rp_capacity(FIG4, float(q), points=points)
        meta = {"params": FIG4.__dict__, "axes": ["R0", "R1"], "case": FIG4.case}
    else:
        raise ValueError(f"unknown figure {name!r}; choose from {FIGURES}")
    meta["curves"] = list(regs)
    return regs, meta


def write_figure(name: str, out_dir: str | Path, points: int = DEFAULT_POINTS) -> list[Path]:
    """Write <name>.csv (labeled frontier columns) and <name>.json (metadata)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    regs, meta = figure_regions(name, points)
    csv_path, json_path = out / f"{name}.csv", out / f"{name}.json"
    csv_path.write_text(regions_csv(regs))
    json_path.write_text(json.dumps(meta, indent=2))
    return [csv_path, json_path]
