"""Superposition Shannon-strategy codebooks and causal encoding."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ..channel import StrategyMap
from ..prob import JointPmf


def message_count(n: int, rate: float, tol: float = 1e-9) -> int:
    """2^{nR}, which must be an integer."""
    v = 2.0 ** (n * rate)
    m = int(round(v))
    if m < 1 or abs(v - m) > tol * max(1.0, v):
        raise ValueError(f"2^(n*R) = {v:.6g} is not an integer for n={n}, R={rate}")
    return m


def rate_for(n: int, count: int) -> float:
    return math.log2(count) / n


@dataclass(frozen=True, eq=False)
class Codebook:
    n: int
    u0: np.ndarray  # (M0, n)
    u1: np.ndarray  # (M0, M1, n)
    xi: StrategyMap
    p: np.ndarray  # strategy pmf table (|U0|, |U1|)
    seed: int | None = None

    @property
    def M0(self) -> int:
        return self.u0.shape[0]

    @property
    def M1(self) -> int:
        return self.u1.shape[1]

    @property
    def R0(self) -> float:
        return rate_for(self.n, self.M0)

    @property
    def R1(self) -> float:
        return rate_for(self.n, self.M1)

    def words(self, m0, m1) -> tuple[np.ndarray, np.ndarray]:
        m0, m1 = np.asarray(m0), np.asarray(m1)
        self._check_messages(m0, m1)
        return self.u0[m0], self.u1[m0, m1]

    def _check_messages(self, m0, m1) -> None:
        if np.any(m0 < 0) or np.any(m0 >= self.M0) or np.any(m1 < 0) or np.any(m1 >= self.M1):
            raise IndexError("message index out of range")

    def encoder(self, m0: int, m1: int) -> "StreamEncoder":
        u0, u1 = self.words(m0, m1)
        return StreamEncoder(self.xi, u0, u1)

    def encode_batch(self, m0: np.ndarray, m1: np.ndarray, S: np.ndarray) -> np.ndarray:
        """Vectorized encoding; position i uses only s_i."""
        u0, u1 = self.words(m0, m1)
        return self.xi.table[u0, u1, S]

    def with_words(self, u0: np.ndarray, u1: np.ndarray) -> "Codebook":
        return Codebook(self.n, u0, u1, self.xi, self.p, self.seed)


class StreamEncoder:
    """Emits x_i after receiving s_i, never earlier."""

    def __init__(self, xi: StrategyMap, u0: np.ndarray, u1: np.ndarray):
        self.xi, self.u0, self.u1 = xi, u0, u1
        self.i = 0

    def send(self, s: int) -> int:
        if self.i >= self.u0.size:
            raise IndexError("block already complete")
        x = int(self.xi.table[self.u0[self.i], self.u1[self.i], s])
        self.i += 1
        return x


def encode(cb: Codebook, m0: int, m1: int, s_stream: Iterable[int]) -> np.ndarray:
    """Encode one message pair while consuming the state stream in order."""
    enc = cb.encoder(m0, m1)
    xs = [enc.send(s) for _, s in zip(range(cb.n), s_stream)]
    if len(xs) != cb.n:
        raise ValueError("state stream ended before the block")
    return np.array(xs, dtype=np.int64)


def _table(p) -> np.ndarray:
    return p.table if isinstance(p, JointPmf) else np.asarray(p, dtype=float)


def generate_codebook_counts(p, xi: StrategyMap, n: int, M0: int, M1: int, seed: int | None) -> Codebook:
    """u0 words i.i.d. from P_U0; u1 words conditionally i.i.d. from P_U1|U0."""
    pt = _table(p)
    if pt.shape != (xi.nu0, xi.nu1):
        raise ValueError("strategy pmf does not match the map")
    if M0 < 1 or M1 < 1 or n < 1:
        raise ValueError("need M0, M1, n >= 1")
    rng = np.random.default_rng(seed)
    p0 = pt.sum(axis=1)
    u0 = rng.choice(xi.nu0, size=(M0, n), p=p0)
    cond = np.where(p0[:, None] > 0, pt / np.where(p0[:, None] > 0, p0[:, None], 1), 1.0 / xi.nu1)
    cdf = np.cumsum(cond, axis=1)
    r = rng.random((M0, M1, n))
    u1 = (r[..., None] >= cdf[u0][:, None, :, :]).sum(axis=-1)
    u1 = np.minimum(u1, xi.nu1 - 1)
    return Codebook(n, u0.astype(np.int64), u1.astype(np.int64), xi, pt, seed)


def generate_codebook(p, xi: StrategyMap, n: int, R0: float, R1: float, seed: int | None) -> Codebook:
    return generate_codebook_counts(p, xi, n, message_count(n, R0), message_count(n, R1), seed)


def word_iter(cb: Codebook) -> Iterator[tuple[int, int, np.ndarray, np.ndarray]]:
    for m0 in range(cb.M0):
        for m1 in range(cb.M1):
            yield m0, m1, cb.u0[m0], cb.u1[m0, m1]
