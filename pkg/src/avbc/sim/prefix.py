"""Deterministic two-stage code: a short index code announcing which member of a
reduced random-code family is used, followed by that member's block."""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import nnls

from ..channel import BroadcastChannel
from .robust import RandomPermutationCode
from .trials import Decisions, channel_outputs


class IndexCode:
    """Repetition code over a public strategy map x = map[bit, s].

    Each of the ``bits`` bits of the index is repeated ``reps`` times. Each
    receiver decides a bit by the distance from the block's output type to the
    convex hull of {V(.|bit, s) : s in S}.
    """

    def __init__(self, k: int, W: BroadcastChannel, reps: int, xmap: np.ndarray | None = None):
        if k < 1 or reps < 1:
            raise ValueError("need k >= 1 and reps >= 1")
        self.k, self.reps = k, reps
        self.bits = max(1, math.ceil(math.log2(k)))
        if xmap is None:
            s = np.arange(W.ns)
            xmap = np.stack([(b + s) % W.nx for b in range(2)])
        self.xmap = np.asarray(xmap, dtype=np.int64)
        if self.xmap.shape != (2, W.ns) or np.any(self.xmap >= W.nx) or np.any(self.xmap < 0):
            raise ValueError("index map must be a (2, |S|) table into the input alphabet")
        self.W = W
        s = np.arange(W.ns)
        self._v = (W.w1[self.xmap, s[None, :]], W.w2[self.xmap, s[None, :]])  # (2, S, Y)

    @property
    def nu(self) -> int:
        return self.bits * self.reps

    @property
    def capacity_count(self) -> int:
        return 2 ** self.bits

    def encode_batch(self, gamma: np.ndarray, S: np.ndarray) -> np.ndarray:
        bits = (np.asarray(gamma)[:, None] >> np.arange(self.bits)[None, :]) & 1
        u = np.repeat(bits, self.reps, axis=1)
        return self.xmap[u, S]

    def _decide(self, Y: np.ndarray, v: np.ndarray) -> np.ndarray:
        T = Y.shape[0]
        ny = v.shape[2]
        blocks = Y.reshape(T, self.bits, self.reps)
        emp = np.stack([(blocks == y).mean(axis=2) for y in range(ny)], axis=2)  # (T, bits, Y)
        # distance to the hull for each distinct type (few distinct types per block)
        flat = emp.reshape(-1, ny)
        uniq, inv = np.unique(np.round(flat, 12), axis=0, return_inverse=True)
        d = np.array([[_hull_distance(v[b], e) for b in range(2)] for e in uniq])
        bit = d.argmin(axis=1)[inv.reshape(-1)].reshape(T, self.bits)
        return (bit << np.arange(self.bits)[None, :]).sum(axis=1)

    def decode_batch(self, Y1: np.ndarray, Y2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        g1, g2 = self._decide(Y1, self._v[0]), self._decide(Y2, self._v[1])
        g1 = np.where(g1 < self.k, g1, -1)
        g2 = np.where(g2 < self.k, g2, -1)
        return g1, g2


def _hull_distance(v: np.ndarray, e: np.ndarray, weight: float = 1e3) -> float:
    """Euclidean distance from e to conv{v[s]} via nonnegative least squares."""
    A = np.vstack([v.T, weight * np.ones((1, v.shape[0]))])
    b = np.concatenate([e, [weight]])
    x, _ = nnls(A, b)
    return float(np.linalg.norm(v.T @ x - e))


def index_code_for(k: int, W: BroadcastChannel, reps: int | None = None, n: int | None = None) -> IndexCode:
    """Index code for k codes; reps defaults to about 2*log2(n) (logarithmic prefix length)."""
    if reps is None:
        reps = max(3, 2 * math.ceil(math.log2(max(n or k, 2)))) | 1
    return IndexCode(k, W, reps)


class TwoStageCode:
    def __init__(self, index_code: IndexCode, family, prefix_channel: BroadcastChannel | None = None):
        k = family.support_size
        if k is None:
            raise ValueError("the family must have finite support")
        if k > index_code.capacity_count or k > index_code.k:
            raise ValueError(f"family of {k} codes exceeds the index code's {index_code.k} messages")
        self.index, self.family, self.prefix_channel = index_code, family, prefix_channel
        self.k = k

    @property
    def nu(self) -> int:
        return self.index.nu

    @property
    def n_suffix(self) -> int:
        return self.family.n

    @property
    def n(self) -> int:
        return self.nu + self.n_suffix

    M0 = property(lambda self: self.family.M0)
    M1 = property(lambda self: self.family.M1)

    def effective_rates(self) -> tuple[float, float]:
        r0 = math.log2(self.M0) / self.n
        r1 = math.log2(self.M1) / self.n
        return r0, r1

    def transmit(self, W: BroadcastChannel, m0, m1, S, U, rng) -> Decisions:
        nu = self.nu
        t = len(m0)
        gamma = rng.integers(self.k, size=t)  # encoder's private choice
        Xp = self.index.encode_batch(gamma, S[:, :nu])
        Y1p, Y2p = channel_outputs(self.prefix_channel or W, Xp, S[:, :nu], U[:, :nu])
        g1, g2 = self.index.decode_batch(Y1p, Y2p)
        Ss, Us = S[:, nu:], U[:, nu:]
        if isinstance(self.family, RandomPermutationCode):
            return self._suffix_perm(W, m0, m1, Ss, Us, gamma, g1, g2)
        return self._suffix_generic(W, m0, m1, Ss, Us, gamma, g1, g2, rng)

    def _suffix_perm(self, W, m0, m1, S, U, gamma, g1, g2) -> Decisions:
        fam = self.family
        base, perms = fam.base, fam.perms
        P = perms[gamma]
        inv = np.argsort(P, axis=1)
        cb = base.cb
        u0 = np.take_along_axis(cb.u0[m0], inv, axis=1)
        u1 = np.take_along_axis(cb.u1[m0, m1], inv, axis=1)
        X = cb.xi.table[u0, u1, S]
        Y1, Y2 = channel_outputs(W, X, S, U)
        P1 = perms[np.maximum(g1, 0)]
        P2 = perms[np.maximum(g2, 0)]
        a0, a1, c1 = base.decode1(np.take_along_axis(Y1, P1, axis=1))
        b0, c2 = base.decode2(np.take_along_axis(Y2, P2, axis=1))
        a0 = np.where(g1 >= 0, a0, -1)
        a1 = np.where(g1 >= 0, a1, -1)
        b0 = np.where(g2 >= 0, b0, -1)
        return Decisions(a0, a1, b0, c1, c2)

    def _suffix_generic(self, W, m0, m1, S, U, gamma, g1, g2, rng) -> Decisions:
        codes = self.family.codes
        t = len(m0)
        X = np.empty_like(S)
        for k in np.unique(gamma):
            sel = gamma == k
            X[sel] = codes[k].encode_batch(m0[sel], m1[sel], S[sel])
        Y1, Y2 = channel_outputs(W, X, S, U)
        out = Decisions(*(np.full(t, -1, dtype=np.int64) for _ in range(3)),
                        np.zeros(t, dtype=np.int64), np.zeros(t, dtype=np.int64))
        for k in np.unique(g1[g1 >= 0]):
            sel = np.flatnonzero(g1 == k)
            a0, a1, _, c1, _ = codes[k].decode_batch(Y1[sel], Y2[sel])
            out.m0_1[sel], out.m1_1[sel], out.c1[sel] = a0, a1, c1
        for k in np.unique(g2[g2 >= 0]):
            sel = np.flatnonzero(g2 == k)
            _, _, b0, _, c2 = codes[k].decode_batch(Y1[sel], Y2[sel])
            out.m0_2[sel], out.c2[sel] = b0, c2
        return out


def prefix_concatenate(index_code: IndexCode, reduced_family, prefix_channel: BroadcastChannel | None = None) -> TwoStageCode:
    return TwoStageCode(index_code, reduced_family, prefix_channel)
