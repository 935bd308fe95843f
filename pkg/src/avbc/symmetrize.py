"""Symmetrizability of state channels V(y|u,s) and the nonempty-interior test."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .channel import BroadcastChannel, DmcWithState, StrategyMap, strategy_channels

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SymmetrizerWitness:
    kernel: np.ndarray  # J(s|u), indexed (u, s)

    def to_json(self) -> dict:
        return {"J": self.kernel.tolist()}


@dataclass(frozen=True)
class SymmetrizabilityResult:
    symmetrizable: bool
    witness: SymmetrizerWitness | None
    residual: float  # optimal max-norm violation

    def to_json(self) -> dict:
        return {
            "symmetrizable": self.symmetrizable,
            "residual": self.residual,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def symmetrization_residual(V: DmcWithState, J: np.ndarray) -> float:
    """max over u != u', y of |sum_s J(s|u') V(y|u,s) - sum_s J(s|u) V(y|u',s)|."""
    v = V.v
    # A[u, u', y] = sum_s J(s|u') V(y|u,s)
    A = np.einsum("bs,asy->aby", J, v)
    diff = A - A.transpose(1, 0, 2)
    return float(np.abs(diff).max()) if V.nu > 1 else 0.0


def is_symmetrizable(V: DmcWithState, tol: float = DEFAULT_TOL) -> SymmetrizabilityResult:
    """Decide whether some row-stochastic J(s|u) symmetrizes V.

    Solves min t subject to |sum_s J(s|u')V(y|u,s) - sum_s J(s|u)V(y|u',s)| <= t
    over all pairs u < u' and letters y. Symmetrizable iff t* <= tol.
    A single-letter input alphabet is symmetrizable by convention.
    """
    nu, ns, ny = V.nu, V.ns, V.ny
    if nu == 1:
        J = np.full((1, ns), 1.0 / ns)
        return SymmetrizabilityResult(True, SymmetrizerWitness(J), 0.0)
    nj = nu * ns
    nv = nj + 1
    rows, rhs = [], []
    for u, up in itertools.combinations(range(nu), 2):
        for y in range(ny):
            coef = np.zeros(nv)
            # + sum_s J(s|u') V(y|u,s)  - sum_s J(s|u) V(y|u',s)
            coef[up * ns:(up + 1) * ns] += V.v[u, :, y]
            coef[u * ns:(u + 1) * ns] -= V.v[up, :, y]
            for sign in (1.0, -1.0):
                r = sign * coef
                r[-1] = -1.0
                rows.append(r)
                rhs.append(0.0)
    a_eq = np.zeros((nu, nv))
    for u in range(nu):
        a_eq[u, u * ns:(u + 1) * ns] = 1.0
    c = np.zeros(nv)
    c[-1] = 1.0
    res = linprog(c, A_ub=np.array(rows), b_ub=np.array(rhs), A_eq=a_eq, b_eq=np.ones(nu),
                  bounds=[(0, 1)] * nj + [(0, None)], method="highs")
    if res.status != 0:
        raise RuntimeError(f"symmetrizability LP failed: {res.message}")
    J = np.clip(res.x[:nj].reshape(nu, ns), 0.0, None)
    J /= J.sum(axis=1, keepdims=True)
    t = symmetrization_residual(V, J)
    if t <= tol:
        return SymmetrizabilityResult(True, SymmetrizerWitness(J), t)
    return SymmetrizabilityResult(False, None, t)


def brute_force_symmetrizable(V: DmcWithState, step: float = 1e-3, tol: float | None = None) -> bool:
    """Grid search over J for binary states: lambda_u = J(1|u) on a step grid.

    Intended as an independent check of the LP for small |U| with |S| = 2.
    The default tolerance allows for the grid spacing.
    """
    if V.ns != 2:
        raise ValueError("grid oracle implemented for binary states only")
    if V.nu == 1:
        return True
    lam = np.arange(0.0, 1.0 + step / 2, step)
    tol = step * 2.0 if tol is None else tol
    best = np.inf
    grids = np.meshgrid(*([lam] * V.nu), indexing="ij")
    L = np.stack([g.ravel() for g in grids], axis=1)  # (G, nu)
    v0, v1 = V.v[:, 0, :], V.v[:, 1, :]  # (u, y)
    for u, up in itertools.combinations(range(V.nu), 2):
        lhs = (1 - L[:, up, None]) * v0[u] + L[:, up, None] * v1[u]
        rhs = (1 - L[:, u, None]) * v0[up] + L[:, u, None] * v1[up]
        d = np.abs(lhs - rhs).max(axis=1)
        best = d if np.isscalar(best) else np.maximum(best, d)
    return bool(np.min(best) <= tol)


def nonempty_interior_check(W: BroadcastChannel, xi: StrategyMap, xi_pub: np.ndarray,
                            tol: float = DEFAULT_TOL) -> bool:
    """Sufficient condition for a nonempty capacity interior: both strategy channels
    are non-symmetrizable."""
    v1, v2 = strategy_channels(xi, xi_pub, W)
    return (not is_symmetrizable(v1, tol).symmetrizable) and (not is_symmetrizable(v2, tol).symmetrizable)


def public_part(xi: StrategyMap, u1: int = 0) -> np.ndarray:
    """Public map (u0, s) -> x obtained by freezing the private auxiliary."""
    return np.array(xi.table[:, u1, :])


def scan_maps(W: BroadcastChannel, maps, pub_maps=None, tol: float = DEFAULT_TOL):
    """First (xi, xi_pub) in the family whose strategy channels are both non-symmetrizable.

    ``pub_maps`` defaults to every map U0 x S -> X. Returns None when no pair works;
    this certifies nothing unless the families are exhaustive.
    """
    if pub_maps is None:
        nu0 = maps[0].nu0
        pub_maps = [np.array(c).reshape(nu0, W.ns)
                    for c in itertools.product(range(W.nx), repeat=nu0 * W.ns)]
    pub_ok = None
    for pm in pub_maps:
        dummy = StrategyMap(np.repeat(pm[:, None, :], maps[0].nu1, axis=1), W.nx)
        _, v2 = strategy_channels(dummy, pm, W)
        if not is_symmetrizable(v2, tol).symmetrizable:
            pub_ok = pm
            break
    if pub_ok is None:
        return None
    for m in maps:
        v1, _ = strategy_channels(m, pub_ok, W)
        if not is_symmetrizable(v1, tol).symmetrizable:
            return m, pub_ok
    return None
