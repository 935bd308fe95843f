"""Rate-region geometry and minimax bounds over Shannon strategies.

A region is stored as its upper frontier on a uniform grid of the first rate
coordinate. Unions and intersections of downward-closed sets are exact
pointwise max/min on a shared grid. Grid points where no rate pair is
feasible carry ``-inf``.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .channel import (
    BroadcastChannel,
    MiTriple,
    StrategyMap,
    enumerate_maps,
    mi_batch,
    state_kernels,
)
from .prob import JointPmf, Pmf, simplex_lattice

DEFAULT_POINTS = 512
FEAS_TOL = 1e-12
_CHUNK = 1 << 22  # grid cells evaluated per block in union sweeps


@dataclass(frozen=True, eq=False)
class RateRegion:
    grid: np.ndarray
    frontier: np.ndarray
    labels: tuple[str, str] = ("R0", "R1")

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        f = np.asarray(self.frontier, dtype=float)
        if g.shape != f.shape or g.ndim != 1:
            raise ValueError("grid and frontier must be 1-D arrays of equal length")
        if np.any(np.isnan(f)):
            raise ValueError("frontier contains NaN")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "frontier", f)

    @property
    def r0max(self) -> float:
        return float(self.grid[-1])

    @property
    def feasible(self) -> np.ndarray:
        return np.isfinite(self.frontier)

    @property
    def max_r0(self) -> float:
        """Largest grid value of the first coordinate with a feasible point."""
        idx = np.flatnonzero(self.feasible)
        return float(self.grid[idx[-1]]) if idx.size else -np.inf

    def is_trivial(self, tol: float = 1e-9) -> bool:
        """True when the region is (up to tol and grid resolution) just the origin."""
        f = self.frontier[self.feasible]
        if f.size == 0:
            return True
        return bool(f.max() <= tol and self.max_r0 <= self.grid[1] - self.grid[0] + tol)

    def contains(self, r0: float, r1: float, tol: float = 1e-9) -> bool:
        """Membership of (r0, r1), using the frontier at the next grid point up."""
        if r0 < -tol or r1 < -tol:
            return False
        i = int(np.searchsorted(self.grid, r0 - tol))
        if i >= self.grid.size:
            return False
        return bool(self.frontier[i] >= r1 - tol)

    def boundary(self) -> np.ndarray:
        """Polyline of the upper-right boundary, including the final vertical drop."""
        m = self.feasible
        pts = np.column_stack([self.grid[m], self.frontier[m]])
        if pts.size == 0:
            return np.zeros((1, 2))
        drop = np.array([[pts[-1, 0], 0.0]])
        return np.vstack([pts, drop])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(self.labels))
        for g, f in zip(self.grid, self.frontier):
            if np.isfinite(f):
                w.writerow([f"{g:.6f}", f"{f:.6f}"])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "grid": self.grid.tolist(),
            "frontier": [float(f) if np.isfinite(f) else None for f in self.frontier],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RateRegion":
        fr = [(-np.inf if v is None else v) for v in obj["frontier"]]
        return cls(np.asarray(obj["grid"], float), np.asarray(fr, float), tuple(obj.get("labels", ("R0", "R1"))))


def rate_grid(points: int = DEFAULT_POINTS, r0max: float = 1.0) -> np.ndarray:
    if points < 2:
        raise ValueError("need at least two grid points")
    return np.linspace(0.0, r0max, points)


def union_frontier(triples: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """Frontier of the union of pentagons {r0 <= a, r1 <= b, r0 + r1 <= c}.

    ``triples`` is (K, 3) with columns (a, b, c); c may be +inf for rectangles.
    """
    t = np.asarray(triples, dtype=float).reshape(-1, 3)
    out = np.full(grid.shape, -np.inf)
    if t.shape[0] == 0:
        return out
    t = _dedupe(t)
    lim = np.minimum(t[:, 0], t[:, 2])
    step = max(1, _CHUNK // max(grid.size, 1))
    for lo in range(0, t.shape[0], step):
        blk = t[lo:lo + step]
        ok = grid[None, :] <= lim[lo:lo + step, None] + FEAS_TOL
        val = np.minimum(blk[:, 1:2], blk[:, 2:3] - grid[None, :])
        val = np.where(ok, np.maximum(val, 0.0), -np.inf)
        np.maximum(out, val.max(axis=0), out=out)
    return out


def _dedupe(t: np.ndarray) -> np.ndarray:
    if t.shape[0] < 2:
        return t
    key = np.where(np.isfinite(t), np.round(t, 12), np.inf)
    _, idx = np.unique(key, axis=0, return_index=True)
    return t[np.sort(idx)]


def pentagon(mi: MiTriple | Sequence[float], grid: np.ndarray | int = DEFAULT_POINTS,
             r0max: float = 1.0, labels=("R0", "R1")) -> RateRegion:
    """{R0 <= i0, R1 <= i1, R0 + R1 <= isum} sampled on the grid."""
    g = rate_grid(grid, r0max) if np.isscalar(grid) else np.asarray(grid, float)
    return RateRegion(g, union_frontier(np.asarray(mi, float)[None, :], g), tuple(labels))


def rectangle(i0: float, i1: float, grid: np.ndarray | int = DEFAULT_POINTS, r0max: float = 1.0,
              labels=("R0", "R1")) -> RateRegion:
    return pentagon((i0, i1, np.inf), grid, r0max, labels)


def _check_grids(regions: Sequence[RateRegion]) -> None:
    if not regions:
        raise ValueError("no regions supplied")
    g = regions[0].grid
    for r in regions[1:]:
        if r.grid.shape != g.shape or not np.array_equal(r.grid, g):
            raise ValueError("regions are sampled on different grids")


def region_union(regions: Iterable[RateRegion]) -> RateRegion:
    regions = list(regions)
    _check_grids(regions)
    f = np.max(np.stack([r.frontier for r in regions]), axis=0)
    return RateRegion(regions[0].grid, f, regions[0].labels)


def region_intersection(regions: Iterable[RateRegion]) -> RateRegion:
    regions = list(regions)
    _check_grids(regions)
    f = np.min(np.stack([r.frontier for r in regions]), axis=0)
    return RateRegion(regions[0].grid, f, regions[0].labels)


def hausdorff(a: RateRegion, b: RateRegion, spacing: float = 1e-4) -> float:
    """Hausdorff distance between densified boundary polylines."""
    pa, pb = _densify(a.boundary(), spacing), _densify(b.boundary(), spacing)
    da = cKDTree(pb).query(pa)[0].max()
    db = cKDTree(pa).query(pb)[0].max()
    return float(max(da, db))


def _densify(poly: np.ndarray, spacing: float) -> np.ndarray:
    if poly.shape[0] < 2:
        return poly
    pieces = []
    for p, q in zip(poly[:-1], poly[1:]):
        k = max(1, int(np.ceil(np.linalg.norm(q - p) / spacing)))
        t = np.linspace(0.0, 1.0, k, endpoint=False)[:, None]
        pieces.append(p + t * (q - p))
    pieces.append(poly[-1:])
    return np.vstack(pieces)


# search spaces ---------------------------------------------------------------

def cardinality_caps(W: BroadcastChannel) -> tuple[int, int]:
    xs = W.nx * W.ns
    return xs + 2, xs * (xs + 2)


def product_bernoulli_grid(points: int = 101, beta_max: float = 1.0) -> np.ndarray:
    """Strategy pmfs U0 ~ Bern(gamma), U1 ~ Bern(beta) on a points x points grid.

    gamma spans [0, 1] and beta spans [0, beta_max].
    """
    g, b = np.meshgrid(np.linspace(0.0, 1.0, points), np.linspace(0.0, beta_max, points), indexing="ij")
    g, b = g.ravel(), b.ravel()
    p = np.empty((g.size, 2, 2))
    p[:, 0, 0] = (1 - g) * (1 - b)
    p[:, 0, 1] = (1 - g) * b
    p[:, 1, 0] = g * (1 - b)
    p[:, 1, 1] = g * b
    return p


def full_joint_grid(nu0: int, nu1: int, resolution: int = 10) -> np.ndarray:
    """All joint pmfs over U0 x U1 whose entries are multiples of 1/resolution."""
    return simplex_lattice(nu0 * nu1, resolution).reshape(-1, nu0, nu1)


def state_grid(ns: int, points: int = 101, resolution: int | None = None) -> np.ndarray:
    """Discretized simplex of state pmfs: uniform line for |S|=2, lattice otherwise."""
    if ns == 1:
        return np.ones((1, 1))
    if ns == 2:
        q = np.linspace(0.0, 1.0, points)
        return np.column_stack([1 - q, q])
    if resolution is None:
        # ~1e4 points for |S|=3
        resolution = 140 if ns == 3 else max(4, int(round((1e4 * np.prod(range(1, ns))) ** (1 / (ns - 1)))))
    return simplex_lattice(ns, resolution)


def canonical_maps(maps: Sequence[StrategyMap]) -> list[StrategyMap]:
    """One representative per orbit under relabeling of U0 and of U1.

    Valid whenever the strategy-pmf grid is closed under those relabelings,
    since relabeled maps then yield the same set of mutual-information triples.
    """
    seen, out = set(), []
    for m in maps:
        t = m.table
        keys = []
        for p0 in itertools.permutations(range(m.nu0)):
            for p1 in itertools.permutations(range(m.nu1)):
                keys.append(t[list(p0)][:, list(p1)].tobytes())
        k = min(keys)
        if k not in seen:
            seen.add(k)
            out.append(m)
    return out


@dataclass(eq=False)
class SearchSpace:
    u0_size: int
    u1_size: int
    p_grid: np.ndarray  # (Np, u0, u1)
    xi_family: list[StrategyMap]
    q_grid: np.ndarray  # (Nq, |S|)
    name: str = "custom"

    def __post_init__(self):
        p = np.asarray(self.p_grid, dtype=float)
        if p.ndim == 2:
            p = p[None]
        if p.size == 0 or not self.xi_family or np.asarray(self.q_grid).size == 0:
            raise ValueError("search space families must be nonempty")
        if p.shape[1:] != (self.u0_size, self.u1_size):
            raise ValueError(f"strategy pmfs have shape {p.shape[1:]}, expected ({self.u0_size}, {self.u1_size})")
        if np.any(p < 0) or np.max(np.abs(p.sum(axis=(1, 2)) - 1)) > 1e-9:
            raise ValueError("p_grid contains an invalid pmf")
        for m in self.xi_family:
            if (m.nu0, m.nu1) != (self.u0_size, self.u1_size):
                raise ValueError("strategy map sizes do not match the search space")
        q = np.atleast_2d(np.asarray(self.q_grid, dtype=float))
        if np.any(q < 0) or np.max(np.abs(q.sum(axis=1) - 1)) > 1e-9:
            raise ValueError("q_grid contains an invalid pmf")
        self.p_grid = p
        self.q_grid = q

    def validate_for(self, W: BroadcastChannel) -> None:
        c0, c1 = cardinality_caps(W)
        if self.u0_size > c0 or self.u1_size > c1:
            raise ValueError(f"auxiliary sizes ({self.u0_size}, {self.u1_size}) exceed caps ({c0}, {c1})")
        if self.q_grid.shape[1] != W.ns:
            raise ValueError("q_grid does not match the channel state alphabet")
        for m in self.xi_family:
            if m.nx != W.nx or m.ns != W.ns:
                raise ValueError("strategy map does not fit the channel")

    def with_q(self, q_grid) -> "SearchSpace":
        return SearchSpace(self.u0_size, self.u1_size, self.p_grid, self.xi_family,
                           np.atleast_2d(np.asarray(q_grid, float)), self.name)

    @classmethod
    def preset(cls, name: str, W: BroadcastChannel, points: int = 101, q_points: int = 101,
               joint_resolution: int = 10) -> "SearchSpace":
        """Named presets: binary-exhaustive, example1-family, example2-family."""
        qg = state_grid(W.ns, q_points)
        if name == "binary-exhaustive":
            if W.nx != 2:
                raise ValueError("binary-exhaustive needs a binary input alphabet")
            pg = np.concatenate([product_bernoulli_grid(points), full_joint_grid(2, 2, joint_resolution)])
            maps = canonical_maps(enumerate_maps(2, 2, 2, W.ns))
            return cls(2, 2, pg, maps, qg, name)
        if name in ("example1-family", "example2-family"):
            if W.nx != 2 or W.ns != 2:
                raise ValueError(f"{name} needs a binary-input, binary-state channel")
            # beta and 1 - beta differ by an output relabeling under the XOR map
            return cls(2, 2, product_bernoulli_grid(points, 0.5), [StrategyMap.xor()], qg, name)
        raise ValueError(f"unknown search-space preset {name!r}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "u0_size": self.u0_size,
            "u1_size": self.u1_size,
            "p_grid": self.p_grid.tolist(),
            "xi_family": [m.to_json() for m in self.xi_family],
            "q_grid": self.q_grid.tolist(),
        }

    @classmethod
    def from_json(cls, obj: dict, W: BroadcastChannel | None = None) -> "SearchSpace":
        if "preset" in obj:
            if W is None:
                raise ValueError("a preset search space needs the channel")
            return cls.preset(obj["preset"], W, obj.get("points", 101), obj.get("q_points", 101))
        return cls(int(obj["u0_size"]), int(obj["u1_size"]), np.asarray(obj["p_grid"], float),
                   [StrategyMap.from_json(m) for m in obj["xi_family"]],
                   np.asarray(obj["q_grid"], float), obj.get("name", "custom"))


# mutual-information tensors --------------------------------------------------

def mi_tensor(W: BroadcastChannel, space: SearchSpace) -> np.ndarray:
    """MI triples for every (q, xi, p): shape (Nq, Nxi, Np, 3)."""
    space.validate_for(W)
    out = np.empty((space.q_grid.shape[0], len(space.xi_family), space.p_grid.shape[0], 3))
    for j, xi in enumerate(space.xi_family):
        ks = state_kernels(xi, W)  # (S, u0, u1, y1, y2)
        for i, q in enumerate(space.q_grid):
            out[i, j] = mi_batch(space.p_grid, np.tensordot(q, ks, axes=(0, 0)))
    return out


def _min_over_q_refined(W: BroadcastChannel, space: SearchSpace, mi: np.ndarray, iters: int = 40) -> np.ndarray:
    """Componentwise min over q in [0,1] (|S| = 2), refining the grid argmin.

    For fixed (p, xi) each mutual information is convex in q, because the
    strategy channel is affine in q. Golden-section search runs inside the
    grid cells adjacent to the grid minimizer.
    """
    qv = space.q_grid[:, 1]
    order = np.argsort(qv)
    qv, mi = qv[order], mi[order]
    best = mi.min(axis=0)  # (Nxi, Np, 3)
    arg = mi.argmin(axis=0)
    gr = (np.sqrt(5) - 1) / 2
    for j, xi in enumerate(space.xi_family):
        ks = state_kernels(xi, W)
        for c in range(3):
            a_idx = np.clip(arg[j, :, c] - 1, 0, qv.size - 1)
            b_idx = np.clip(arg[j, :, c] + 1, 0, qv.size - 1)
            lo, hi = qv[a_idx].copy(), qv[b_idx].copy()
            x1 = hi - gr * (hi - lo)
            x2 = lo + gr * (hi - lo)
            f1 = _mi_at(space.p_grid, ks, x1)[:, c]
            f2 = _mi_at(space.p_grid, ks, x2)[:, c]
            for _ in range(iters):
                left = f1 < f2
                hi = np.where(left, x2, hi)
                lo = np.where(left, lo, x1)
                newx = np.where(left, hi - gr * (hi - lo), lo + gr * (hi - lo))
                fn = _mi_at(space.p_grid, ks, newx)[:, c]
                x1, x2, f1, f2 = (np.where(left, newx, x2), np.where(left, x1, newx),
                                  np.where(left, fn, f2), np.where(left, f1, fn))
            best[j, :, c] = np.minimum(best[j, :, c], np.minimum(f1, f2))
    return best


def _mi_at(P: np.ndarray, ks: np.ndarray, q1: np.ndarray) -> np.ndarray:
    # per-pmf state pmf (1-q1, q1)
    K = ks[0][None] * (1 - q1)[:, None, None, None, None] + ks[1][None] * q1[:, None, None, None, None]
    return mi_batch(P, K)


def _frontier_from_triples(triples: np.ndarray, grid: np.ndarray, two_constraint: bool) -> np.ndarray:
    t = triples.reshape(-1, 3).copy()
    if two_constraint:
        t[:, 2] = np.inf
    return union_frontier(t, grid)


def _grid_for(W: BroadcastChannel, points: int) -> np.ndarray:
    return rate_grid(points, float(np.log2(W.ny2)))


def inner_bound_compound(W: BroadcastChannel, space: SearchSpace, points: int = DEFAULT_POINTS,
                         refine_q: bool = False, _two_constraint: bool = False,
                         _mi: np.ndarray | None = None) -> RateRegion:
    """Union over (p, xi) of the intersection over q of the pentagons."""
    mi = mi_tensor(W, space) if _mi is None else _mi
    if refine_q and W.ns == 2 and space.q_grid.shape[0] > 1:
        worst = _min_over_q_refined(W, space, mi)
    else:
        worst = mi.min(axis=0)
    grid = _grid_for(W, points)
    labels = ("R2", "R1") if _two_constraint else ("R0", "R1")
    return RateRegion(grid, _frontier_from_triples(worst, grid, _two_constraint), labels)


def outer_bound(W: BroadcastChannel, space: SearchSpace, points: int = DEFAULT_POINTS,
                _two_constraint: bool = False, _mi: np.ndarray | None = None) -> RateRegion:
    """Intersection over q of the union over (p, xi) of the pentagons."""
    mi = mi_tensor(W, space) if _mi is None else _mi
    grid = _grid_for(W, points)
    f = np.full(grid.shape, np.inf)
    for i in range(mi.shape[0]):
        np.minimum(f, _frontier_from_triples(mi[i], grid, _two_constraint), out=f)
    labels = ("R2", "R1") if _two_constraint else ("R0", "R1")
    return RateRegion(grid, f, labels)


def compound_bounds(W: BroadcastChannel, space: SearchSpace, points: int = DEFAULT_POINTS,
                    refine_q: bool = False, two_constraint: bool = False) -> tuple[RateRegion, RateRegion]:
    """Inner and outer bounds sharing one MI evaluation."""
    mi = mi_tensor(W, space)
    inner = inner_bound_compound(W, space, points, refine_q, two_constraint, mi)
    outer = outer_bound(W, space, points, two_constraint, mi)
    return inner, outer


def _is_simplex_grid(q: np.ndarray) -> bool:
    ns = q.shape[1]
    corners = np.eye(ns)
    return all(np.any(np.all(np.abs(q - c) < 1e-12, axis=1)) for c in corners)


def avbc_bounds(W: BroadcastChannel, space: SearchSpace, points: int = DEFAULT_POINTS,
                refine_q: bool = True) -> tuple[RateRegion, RateRegion]:
    """Compound bounds with the state family equal to the whole simplex."""
    if not _is_simplex_grid(space.q_grid):
        raise ValueError("avbc bounds need a q grid discretizing the whole simplex")
    return compound_bounds(W, space, points, refine_q)


def region_random_parameter(W: BroadcastChannel, q, space: SearchSpace,
                            points: int = DEFAULT_POINTS) -> RateRegion:
    """Union over (p, xi) of the pentagons at one known state law q."""
    qv = q.values if isinstance(q, Pmf) else np.asarray(q, float)
    return inner_bound_compound(W, space.with_q(qv[None, :]), points)


def degraded_bounds(W: BroadcastChannel, space: SearchSpace, points: int = DEFAULT_POINTS,
                    refine_q: bool = False) -> tuple[RateRegion, RateRegion]:
    """Two-constraint bounds R2 <= I(U2;Y2), R1 <= I(U1;Y1|U2); axes (R2, R1)."""
    return compound_bounds(W, space, points, refine_q, two_constraint=True)


def jahn_space(W: BroadcastChannel, nu: int = 2, resolution: int = 20, q_points: int = 101) -> SearchSpace:
    """Search space realizing U -> X directly: U1 plays X, the map is state-blind."""
    pg = full_joint_grid(nu, W.nx, resolution)
    return SearchSpace(nu, W.nx, pg, [StrategyMap.state_blind(nu, W.nx, W.ns)],
                       state_grid(W.ns, q_points), "jahn")


def region_jahn_no_si(W: BroadcastChannel, space: SearchSpace | None = None,
                      points: int = DEFAULT_POINTS) -> RateRegion:
    """Union over p(u, x) of the intersection over q of the no-side-information pentagons.

    With x = u1 the three constraints become I(U;Y2), I(X;Y1|U), I(X;Y1).
    """
    space = jahn_space(W) if space is None else space
    for m in space.xi_family:
        if np.any(m.table != m.table[:, :, :1]):
            raise ValueError("the no-side-information region needs state-blind maps")
    return inner_bound_compound(W, space, points, refine_q=True)


# condition T -------------------------------------------------------------------

@dataclass
class ConditionTReport:
    holds: bool
    q_star: Pmf | None
    argmins: list[tuple[np.ndarray, np.ndarray, np.ndarray]]  # per p: q-grid indices per constraint
    common: tuple[np.ndarray, np.ndarray, np.ndarray]  # per constraint, intersection over p
    q_grid: np.ndarray
    tol: float
    values: np.ndarray = field(repr=False, default=None)  # (Nq, Np, 3)

    def to_json(self) -> dict:
        qs = lambda idx: self.q_grid[idx].tolist()
        return {
            "holds": self.holds,
            "q_star": None if self.q_star is None else self.q_star.to_json(),
            "tol": self.tol,
            "common_argmin": {k: qs(v) for k, v in zip(("i0", "i1", "isum"), self.common)},
            "per_p_argmin": [{k: qs(v) for k, v in zip(("i0", "i1", "isum"), a)} for a in self.argmins],
        }


def check_condition_T(W: BroadcastChannel, xi: StrategyMap, D: np.ndarray, q_grid: np.ndarray,
                      tol: float = 1e-6) -> ConditionTReport:
    """Is there one q minimizing all three mutual informations for every p in D?"""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    D = np.asarray(D, dtype=float)
    if D.ndim == 2:
        D = D[None]
    q_grid = np.atleast_2d(np.asarray(q_grid, dtype=float))
    if D.shape[0] == 0 or q_grid.shape[0] == 0:
        raise ValueError("families must be nonempty")
    space = SearchSpace(xi.nu0, xi.nu1, D, [xi], q_grid, "condition-T")
    vals = mi_tensor(W, space)[:, 0]  # (Nq, Np, 3)
    near = vals <= vals.min(axis=0, keepdims=True) + tol  # (Nq, Np, 3)
    argmins = [tuple(np.flatnonzero(near[:, i, c]) for c in range(3)) for i in range(D.shape[0])]
    per_c = near.all(axis=1)  # (Nq, 3)
    common = tuple(np.flatnonzero(per_c[:, c]) for c in range(3))
    both = np.flatnonzero(per_c.all(axis=1))
    holds = both.size > 0
    q_star = None
    if holds:
        # prefer a vertex of the simplex when several grid points qualify
        cand = q_grid[both]
        vert = np.flatnonzero(np.isclose(cand.max(axis=1), 1.0))
        q_star = Pmf(cand[vert[-1]] if vert.size else cand[0])
    return ConditionTReport(holds, q_star, argmins, common, q_grid, tol, vals)


def regions_csv(regions: dict[str, RateRegion]) -> str:
    """Several regions on one grid as labeled columns (blank where infeasible)."""
    names = list(regions)
    _check_grids([regions[n] for n in names])
    first = regions[names[0]]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([first.labels[0]] + [f"{n}:{first.labels[1]}" for n in names])
    for i, g in enumerate(first.grid):
        row = [f"{g:.6f}"]
        for n in names:
            v = regions[n].frontier[i]
            row.append(f"{v:.6f}" if np.isfinite(v) else "")
        w.writerow(row)
    return buf.getvalue()


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2)
