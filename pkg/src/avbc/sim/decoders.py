"""Type-grid joint-typicality decoders and the deterministic superposition code."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..channel import BroadcastChannel, StrategyMap, state_kernels
from ..prob import TypeGrid, build_type_grid
from .codebook import Codebook

DEFAULT_DELTA = 0.05
_BLOCK = 1 << 24  # booleans per typicality block


@dataclass(frozen=True)
class Targets:
    """Reference joints P_U0 P^q'_{Y2|U0} and P_U0U1 P^q'_{Y1|U0U1} for every grid type."""

    t2: np.ndarray  # (G, U0, Y2)
    t1: np.ndarray  # (G, U0, U1, Y1)


def decoding_targets(p: np.ndarray, xi: StrategyMap, W: BroadcastChannel, types: np.ndarray) -> Targets:
    ks = state_kernels(xi, W)  # (S, u0, u1, y1, y2)
    k = np.tensordot(types, ks, axes=(1, 0))  # (G, u0, u1, y1, y2)
    joint = p[None, :, :, None, None] * k
    return Targets(t2=joint.sum(axis=(2, 3)), t1=joint.sum(axis=4))


def _onehot(a: np.ndarray, k: int) -> np.ndarray:
    return (a[..., None] == np.arange(k)).astype(np.float32)


def typical_any(freq: np.ndarray, targets: np.ndarray, delta: float) -> np.ndarray:
    """freq (..., C), targets (G, C) -> True where some grid target is delta-typical."""
    shape = freq.shape[:-1]
    f = freq.reshape(-1, freq.shape[-1])
    out = np.zeros(f.shape[0], dtype=bool)
    zero = targets <= 0
    step = max(1, _BLOCK // max(1, targets.size))
    for lo in range(0, f.shape[0], step):
        blk = f[lo:lo + step, None, :]
        ok = (np.abs(blk - targets[None]) <= delta + 1e-12) & ~(zero[None] & (blk > 0))
        out[lo:lo + step] = ok.all(axis=2).any(axis=1)
    return out.reshape(shape)


def _unique(passed: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """passed (T, M) -> decoded index (-1 unless exactly one) and candidate counts."""
    cnt = passed.sum(axis=1)
    idx = np.where(cnt == 1, passed.argmax(axis=1), -1)
    return idx, cnt


class SuperpositionCode:
    """Deterministic code: codebook plus the two uniqueness decoders."""

    def __init__(self, cb: Codebook, W: BroadcastChannel, delta: float = DEFAULT_DELTA,
                 Q=None, grid: TypeGrid | None = None):
        if delta <= 0:
            raise ValueError("delta must be positive")
        self.cb, self.W, self.delta = cb, W, delta
        self.grid = grid if grid is not None else build_type_grid(Q, delta, cb.n, W.ns)
        self.targets = decoding_targets(cb.p, cb.xi, W, self.grid.types)
        self._t2 = self.targets.t2.reshape(len(self.grid), -1)
        self._t1 = self.targets.t1.reshape(len(self.grid), -1)

    @property
    def n(self) -> int:
        return self.cb.n

    @property
    def M0(self) -> int:
        return self.cb.M0

    @property
    def M1(self) -> int:
        return self.cb.M1

    def encode_batch(self, m0, m1, S) -> np.ndarray:
        return self.cb.encode_batch(m0, m1, S)

    def decode2(self, Y2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Unique m0 whose u0 word is jointly typical with y2 for some grid type."""
        Y2 = np.atleast_2d(Y2)
        cb, n = self.cb, self.cb.n
        oh_u = _onehot(cb.u0, cb.xi.nu0)  # (M0, n, A)
        oh_y = _onehot(Y2, self.W.ny2)  # (T, n, Y)
        counts = np.einsum("mia,tiy->tmay", oh_u, oh_y, optimize=True)
        freq = counts.reshape(Y2.shape[0], cb.M0, -1) / n
        return _unique(typical_any(freq, self._t2, self.delta))

    def decode1(self, Y1: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Unique (m0, m1) whose word pair is jointly typical with y1 for some grid type."""
        Y1 = np.atleast_2d(Y1)
        cb, n = self.cb, self.cb.n
        nu1 = cb.xi.nu1
        pair = (cb.u0[:, None, :] * nu1 + cb.u1).reshape(cb.M0 * cb.M1, n)
        oh_u = _onehot(pair, cb.xi.nu0 * nu1)
        oh_y = _onehot(Y1, self.W.ny1)
        counts = np.einsum("mia,tiy->tmay", oh_u, oh_y, optimize=True)
        freq = counts.reshape(Y1.shape[0], cb.M0 * cb.M1, -1) / n
        idx, cnt = _unique(typical_any(freq, self._t1, self.delta))
        m0 = np.where(idx >= 0, idx // cb.M1, -1)
        m1 = np.where(idx >= 0, idx % cb.M1, -1)
        return m0, m1, cnt

    def decode_batch(self, Y1, Y2):
        m0a, m1a, c1 = self.decode1(Y1)
        m0b, c2 = self.decode2(Y2)
        return m0a, m1a, m0b, c1, c2
