"""State-dependent broadcast channels, Shannon strategies and induced laws.

A channel is a table ``w[x, s, y1, y2] = W(y1, y2 | x, s)``. A strategy map
is an integer table ``xi[u0, u1, s] -> x``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np
from scipy.optimize import linprog

from .prob import NORM_TOL, JointPmf, Pmf, plogp


@dataclass(frozen=True, eq=False)
class BroadcastChannel:
    w: np.ndarray  # (nx, ns, ny1, ny2)

    def __post_init__(self):
        w = np.array(self.w, dtype=float)
        if w.ndim != 4:
            raise ValueError("channel table must be indexed (x, s, y1, y2)")
        if np.any(w < 0) or np.any(~np.isfinite(w)):
            raise ValueError("channel entries must be finite and nonnegative")
        rows = w.sum(axis=(2, 3))
        if np.max(np.abs(rows - 1.0)) > NORM_TOL:
            raise ValueError("W(.,.|x,s) must sum to 1 for every (x, s)")
        w.setflags(write=False)
        object.__setattr__(self, "w", w)

    @property
    def nx(self) -> int:
        return self.w.shape[0]

    @property
    def ns(self) -> int:
        return self.w.shape[1]

    @property
    def ny1(self) -> int:
        return self.w.shape[2]

    @property
    def ny2(self) -> int:
        return self.w.shape[3]

    @property
    def w1(self) -> np.ndarray:
        """Marginal W(y1 | x, s), indexed (x, s, y1)."""
        return self.w.sum(axis=3)

    @property
    def w2(self) -> np.ndarray:
        """Marginal W(y2 | x, s), indexed (x, s, y2)."""
        return self.w.sum(axis=2)

    def to_json(self) -> dict:
        return {"nx": self.nx, "ns": self.ns, "ny1": self.ny1, "ny2": self.ny2, "w": self.w.tolist()}

    @classmethod
    def from_json(cls, obj: dict | str) -> "BroadcastChannel":
        if isinstance(obj, str):
            obj = json.loads(obj)
        w = np.asarray(obj["w"], dtype=float)
        dims = tuple(obj.get(k, w.shape[i]) for i, k in enumerate(("nx", "ns", "ny1", "ny2")))
        if w.shape != dims:
            raise ValueError(f"channel table shape {w.shape} does not match declared sizes {dims}")
        return cls(w)

    @classmethod
    def from_marginals(cls, w1: np.ndarray, w2: np.ndarray) -> "BroadcastChannel":
        """Channel with conditionally independent outputs given (x, s)."""
        return cls(np.einsum("xsa,xsb->xsab", w1, w2))


def _bsc(p: float) -> np.ndarray:
    return np.array([[1.0 - p, p], [p, 1.0 - p]])


def bsbc_example1(theta0: float, theta1: float, alpha: float) -> BroadcastChannel:
    """Y1 = X + Z_S, Y2 = Y1 + K (mod 2), Z_s ~ Bern(theta_s), K ~ Bern(alpha)."""
    w = np.zeros((2, 2, 2, 2))
    k = _bsc(alpha)
    for x, s in itertools.product(range(2), range(2)):
        w1 = _bsc((theta0, theta1)[s])[x]
        w[x, s] = w1[:, None] * k
    return BroadcastChannel(w)


def bsbc_example2(theta0: float, theta1: float, eps0: float, eps1: float) -> BroadcastChannel:
    """Y1 = X + Z_S, Y2 = X + N_S (mod 2) with independent Z_s ~ Bern(theta_s), N_s ~ Bern(eps_s)."""
    w1 = np.zeros((2, 2, 2))
    w2 = np.zeros((2, 2, 2))
    for x, s in itertools.product(range(2), range(2)):
        w1[x, s] = _bsc((theta0, theta1)[s])[x]
        w2[x, s] = _bsc((eps0, eps1)[s])[x]
    return BroadcastChannel.from_marginals(w1, w2)


@dataclass(frozen=True, eq=False)
class StrategyMap:
    """Deterministic Shannon strategy xi(u0, u1, s) -> x."""

    table: np.ndarray  # int (nu0, nu1, ns)
    nx: int

    def __post_init__(self):
        t = np.array(self.table)
        if t.ndim != 3:
            raise ValueError("strategy table must be indexed (u0, u1, s)")
        if not np.issubdtype(t.dtype, np.integer):
            if np.any(t != np.round(t)):
                raise ValueError("strategy table entries must be integers")
        t = t.astype(np.int64)
        if np.any(t < 0) or np.any(t >= self.nx):
            raise ValueError("strategy map leaves the input alphabet")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def nu0(self) -> int:
        return self.table.shape[0]

    @property
    def nu1(self) -> int:
        return self.table.shape[1]

    @property
    def ns(self) -> int:
        return self.table.shape[2]

    def __call__(self, u0, u1, s):
        return self.table[u0, u1, s]

    def to_json(self) -> dict:
        return {"nx": self.nx, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "StrategyMap":
        return cls(np.asarray(obj["table"], dtype=int), int(obj["nx"]))

    @classmethod
    def xor(cls, nu0: int = 2, nu1: int = 2, ns: int = 2) -> "StrategyMap":
        """x = u0 + u1 + s mod 2 (binary input)."""
        u0, u1, s = np.meshgrid(np.arange(nu0), np.arange(nu1), np.arange(ns), indexing="ij")
        return cls((u0 + u1 + s) % 2, 2)

    @classmethod
    def state_blind(cls, nu0: int, nx: int, ns: int) -> "StrategyMap":
        """x = u1, ignoring u0 and s (U1 plays the role of X)."""
        t = np.broadcast_to(np.arange(nx)[None, :, None], (nu0, nx, ns))
        return cls(np.array(t), nx)


def enumerate_maps(nx: int, nu0: int, nu1: int, ns: int, limit: int = 65536) -> list[StrategyMap]:
    """Every map U0 x U1 x S -> X; refuses when there are more than ``limit``."""
    cells = nu0 * nu1 * ns
    count = nx ** cells
    if count > limit:
        raise ValueError(f"{count} strategy maps exceed the enumeration limit {limit}")
    maps = []
    for combo in itertools.product(range(nx), repeat=cells):
        maps.append(StrategyMap(np.array(combo).reshape(nu0, nu1, ns), nx))
    return maps


def product_bernoulli(gamma: float, beta: float) -> JointPmf:
    """p(u0, u1) with independent U0 ~ Bern(gamma), U1 ~ Bern(beta)."""
    return JointPmf(np.outer([1 - gamma, gamma], [1 - beta, beta]))


def state_kernels(xi: StrategyMap, W: BroadcastChannel) -> np.ndarray:
    """K[s, u0, u1, y1, y2] = W(y1, y2 | xi(u0, u1, s), s)."""
    _check_dims(xi, W)
    s_idx = np.arange(W.ns)
    # W.w[x, s] with x = xi[u0, u1, s]
    k = W.w[xi.table, s_idx[None, None, :]]  # (u0, u1, s, y1, y2)
    return np.moveaxis(k, 2, 0)


def strategy_kernel(xi: StrategyMap, W: BroadcastChannel, q) -> np.ndarray:
    """P^q(y1, y2 | u0, u1) = sum_s q(s) W(y1, y2 | xi(u0, u1, s), s)."""
    qv = _qvec(q, W.ns)
    return np.tensordot(qv, state_kernels(xi, W), axes=(0, 0))


def induced_joint(p: JointPmf, xi: StrategyMap, W: BroadcastChannel, q) -> JointPmf:
    """Joint law of (U0, U1, Y1, Y2) when X = xi(U0, U1, S), S ~ q independent of (U0, U1)."""
    pt = p.table if isinstance(p, JointPmf) else np.asarray(p, float)
    if pt.shape != (xi.nu0, xi.nu1):
        raise ValueError(f"strategy pmf shape {pt.shape} does not match map ({xi.nu0}, {xi.nu1})")
    k = strategy_kernel(xi, W, q)
    return JointPmf(pt[:, :, None, None] * k)


class MiTriple(NamedTuple):
    i0: float  # I(U0; Y2)
    i1: float  # I(U1; Y1 | U0)
    isum: float  # I(U0, U1; Y1)


def mutual_infos(joint: JointPmf) -> MiTriple:
    """The three rate constraints of the superposition bound, in bits."""
    if joint.table.ndim != 4:
        raise ValueError("expected a joint over (U0, U1, Y1, Y2)")
    i0 = joint.mutual_information((0,), (3,))
    i1 = joint.mutual_information((1,), (2,), given=(0,))
    isum = joint.mutual_information((0, 1), (2,))
    return MiTriple(i0, i1, isum)


def mi_batch(P: np.ndarray, K: np.ndarray) -> np.ndarray:
    """Vectorized MI triples.

    P: (N, A, B) strategy pmfs. K: (A, B, Y1, Y2) or (N, A, B, Y1, Y2) channel
    from (u0, u1) to (y1, y2). Returns (N, 3) with columns (i0, i1, isum).
    """
    shared = K.ndim == 4
    k1 = K.sum(axis=-1)  # (..., A, B, Y1)
    k2 = K.sum(axis=-2)  # (..., A, B, Y2)
    if shared:
        # H(Y1 | U0=a, U1=b) per cell
        h1_cell = -plogp(k1).sum(axis=-1)  # (A, B)
        h_y1_given_u = np.einsum("nab,ab->n", P, h1_cell)
        p_u0y1 = np.einsum("nab,aby->nay", P, k1)
        p_u0y2 = np.einsum("nab,aby->nay", P, k2)
    else:
        h1_cell = -plogp(k1).sum(axis=-1)  # (N, A, B)
        h_y1_given_u = np.einsum("nab,nab->n", P, h1_cell)
        p_u0y1 = np.einsum("nab,naby->nay", P, k1)
        p_u0y2 = np.einsum("nab,naby->nay", P, k2)
    p_u0 = P.sum(axis=2)
    h_u0 = -plogp(p_u0).sum(axis=1)
    h_y1 = -plogp(p_u0y1.sum(axis=1)).sum(axis=1)
    h_y2 = -plogp(p_u0y2.sum(axis=1)).sum(axis=1)
    h_u0y1 = -plogp(p_u0y1).sum(axis=(1, 2))
    h_u0y2 = -plogp(p_u0y2).sum(axis=(1, 2))
    i0 = h_y2 - (h_u0y2 - h_u0)
    i1 = (h_u0y1 - h_u0) - h_y1_given_u
    isum = h_y1 - h_y1_given_u
    out = np.stack([i0, i1, isum], axis=1)
    return np.maximum(out, 0.0)


@dataclass(frozen=True, eq=False)
class DmcWithState:
    """Single-user state channel V(y | u, s), indexed (u, s, y)."""

    v: np.ndarray

    def __post_init__(self):
        v = np.array(self.v, dtype=float)
        if v.ndim != 3:
            raise ValueError("state DMC table must be indexed (u, s, y)")
        if np.any(v < 0) or np.max(np.abs(v.sum(axis=2) - 1.0)) > NORM_TOL:
            raise ValueError("V(.|u,s) must be a pmf for every (u, s)")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    @property
    def nu(self) -> int:
        return self.v.shape[0]

    @property
    def ns(self) -> int:
        return self.v.shape[1]

    @property
    def ny(self) -> int:
        return self.v.shape[2]

    def to_json(self) -> dict:
        return {"nu": self.nu, "ns": self.ns, "ny": self.ny, "v": self.v.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "DmcWithState":
        return cls(np.asarray(obj["v"], dtype=float))


def strategy_channels(xi: StrategyMap, xi_pub: np.ndarray, W: BroadcastChannel) -> tuple[DmcWithState, DmcWithState]:
    """Strategy channels seen by the two users.

    V1(y1 | u, s) = W(y1 | xi(u, s), s) with u = (u0, u1) flattened row-major,
    V2(y2 | u0, s) = W(y2 | xi_pub(u0, s), s).
    """
    _check_dims(xi, W)
    xi_pub = np.asarray(xi_pub, dtype=int)
    if xi_pub.ndim != 2 or xi_pub.shape[1] != W.ns:
        raise ValueError("public strategy table must be indexed (u0, s)")
    if np.any(xi_pub < 0) or np.any(xi_pub >= W.nx):
        raise ValueError("public strategy map leaves the input alphabet")
    s = np.arange(W.ns)
    flat = xi.table.reshape(xi.nu0 * xi.nu1, W.ns)
    v1 = W.w1[flat, s[None, :]]
    v2 = W.w2[xi_pub, s[None, :]]
    return DmcWithState(v1), DmcWithState(v2)


class DegradedResult(NamedTuple):
    degraded: bool
    witness: np.ndarray | None  # p~(y2 | y1), indexed (y1, y2)


def degraded_check(W: BroadcastChannel, tol: float = 1e-9) -> DegradedResult:
    """Is W stochastically degraded, i.e. W2 = W1 @ p~ for some stochastic p~(y2|y1)?

    Solved as a linear program minimizing the max-norm residual; degraded iff
    the optimum is within ``tol``.
    """
    a = W.w1.reshape(-1, W.ny1)  # rows (x, s)
    b = W.w2.reshape(-1, W.ny2)
    n1, n2 = W.ny1, W.ny2
    nv = n1 * n2 + 1  # kernel entries + slack t
    rows, rhs = [], []
    # |a @ K - b| <= t, elementwise
    for r in range(a.shape[0]):
        for y2 in range(n2):
            coef = np.zeros(nv)
            for y1 in range(n1):
                coef[y1 * n2 + y2] = a[r, y1]
            up = coef.copy()
            up[-1] = -1.0
            rows.append(up)
            rhs.append(b[r, y2])
            dn = -coef
            dn[-1] = -1.0
            rows.append(dn)
            rhs.append(-b[r, y2])
    a_eq = np.zeros((n1, nv))
    for y1 in range(n1):
        a_eq[y1, y1 * n2:(y1 + 1) * n2] = 1.0
    c = np.zeros(nv)
    c[-1] = 1.0
    res = linprog(c, A_ub=np.array(rows), b_ub=np.array(rhs), A_eq=a_eq, b_eq=np.ones(n1),
                  bounds=[(0, 1)] * (nv - 1) + [(0, None)], method="highs")
    if res.status != 0:
        raise RuntimeError(f"degradedness LP failed: {res.message}")
    kernel = np.clip(res.x[:-1].reshape(n1, n2), 0.0, None)
    kernel /= kernel.sum(axis=1, keepdims=True)
    resid = np.max(np.abs(a @ kernel - b))
    if resid <= tol:
        return DegradedResult(True, kernel)
    return DegradedResult(False, None)


def _qvec(q, ns: int) -> np.ndarray:
    qv = q.values if isinstance(q, Pmf) else np.asarray(q, dtype=float)
    if qv.shape != (ns,):
        raise ValueError(f"state pmf has shape {qv.shape}, expected ({ns},)")
    if np.any(qv < 0) or abs(qv.sum() - 1.0) > NORM_TOL:
        raise ValueError("state pmf is not a probability vector")
    return qv


def _check_dims(xi: StrategyMap, W: BroadcastChannel) -> None:
    if xi.ns != W.ns or xi.nx != W.nx:
        raise ValueError(f"map (nx={xi.nx}, ns={xi.ns}) does not fit channel (nx={W.nx}, ns={W.ns})")


def iter_binary_maps() -> Iterator[StrategyMap]:
    yield from enumerate_maps(2, 2, 2, 2)
