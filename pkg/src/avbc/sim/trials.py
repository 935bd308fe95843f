"""Monte Carlo trial runner with paired randomness and Wilson intervals."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.stats import binomtest

from ..channel import BroadcastChannel
from .jammer import JammerSpec

CHUNK = 250
THREADS_ENV = "AVBC_THREADS"


@dataclass
class Decisions:
    m0_1: np.ndarray  # decoder-1 common message (-1 = error)
    m1_1: np.ndarray  # decoder-1 private message
    m0_2: np.ndarray  # decoder-2 common message
    c1: np.ndarray  # decoder-1 candidate counts
    c2: np.ndarray  # decoder-2 candidate counts


def channel_outputs(W: BroadcastChannel, X: np.ndarray, S: np.ndarray, U: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sample (y1, y2) letter by letter by inverse CDF from uniforms U.

    Driving two runs with the same U gives common random numbers.
    """
    cdf = np.cumsum(W.w.reshape(W.nx, W.ns, -1), axis=2)
    c = cdf[X, S]  # (..., n, ny1*ny2)
    idx = (U[..., None] >= c).sum(axis=-1)
    idx = np.minimum(idx, W.ny1 * W.ny2 - 1)
    return idx // W.ny2, idx % W.ny2


def transmit(code, W: BroadcastChannel, m0, m1, S, U, rng: np.random.Generator) -> Decisions:
    """One batch through a deterministic or random code."""
    if hasattr(code, "transmit"):
        return code.transmit(W, m0, m1, S, U, rng)
    X = code.encode_batch(m0, m1, S)
    Y1, Y2 = channel_outputs(W, X, S, U)
    return Decisions(*code.decode_batch(Y1, Y2))


def wilson(k: int, n: int, level: float = 0.95) -> tuple[float, float]:
    ci = binomtest(int(k), int(n)).proportion_ci(confidence_level=level, method="wilson")
    return float(ci.low), float(ci.high)


@dataclass
class TrialSummary:
    trials: int
    ok1: np.ndarray
    ok2: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    state_types: np.ndarray  # (T, |S|)

    @property
    def err1(self) -> float:
        return float(1 - self.ok1.mean())

    @property
    def err2(self) -> float:
        return float(1 - self.ok2.mean())

    @property
    def ok(self) -> np.ndarray:
        return self.ok1 & self.ok2

    @property
    def err_total(self) -> float:
        return float(1 - self.ok.mean())

    def stderr(self, which: str = "total") -> float:
        e = {"total": self.err_total, "1": self.err1, "2": self.err2}[which]
        return float(np.sqrt(max(e * (1 - e), 1e-300) / self.trials))

    def ci(self, which: str = "total") -> tuple[float, float]:
        ok = {"total": self.ok, "1": self.ok1, "2": self.ok2}[which]
        return wilson(int((~ok).sum()), self.trials)

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "error_decoder1": self.err1,
            "error_decoder2": self.err2,
            "error_total": self.err_total,
            "ci_decoder1": self.ci("1"),
            "ci_decoder2": self.ci("2"),
            "ci_total": self.ci("total"),
            "mean_candidates_decoder1": float(self.c1.mean()),
            "mean_candidates_decoder2": float(self.c2.mean()),
        }


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_trials(code, W: BroadcastChannel, jammer: JammerSpec | None, trials: int, seed: int | None,
               states: np.ndarray | None = None, noise: np.ndarray | None = None,
               messages: tuple[np.ndarray, np.ndarray] | None = None, chunk: int = CHUNK) -> TrialSummary:
    """Run ``trials`` independent uses of ``code`` over ``W``.

    Messages are uniform. Each block of ``chunk`` trials draws messages,
    states, channel uniforms and shared randomness from its own spawned seed,
    so results do not depend on the thread count. Explicit ``states``,
    ``noise`` or ``messages`` arrays override the generated ones.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    n = code.n
    root = np.random.SeedSequence(seed)
    starts = list(range(0, trials, chunk))
    seqs = root.spawn(len(starts))

    def work(k: int):
        lo = starts[k]
        hi = min(trials, lo + chunk)
        t = hi - lo
        r_msg, r_state, r_noise, r_common = (np.random.default_rng(s) for s in seqs[k].spawn(4))
        m0 = r_msg.integers(code.M0, size=t)
        m1 = r_msg.integers(code.M1, size=t)
        if messages is not None:
            m0, m1 = np.asarray(messages[0])[lo:hi], np.asarray(messages[1])[lo:hi]
        if states is not None:
            S = np.asarray(states)[lo:hi]
        else:
            if jammer is None:
                raise ValueError("need a jammer or explicit states")
            S = jammer.sample(n, r_state, t, code=code, W=W)
        U = r_noise.random((t, n)) if noise is None else np.asarray(noise)[lo:hi]
        d = transmit(code, W, m0, m1, S, U, r_common)
        ok1 = (d.m0_1 == m0) & (d.m1_1 == m1)
        ok2 = d.m0_2 == m0
        types = np.stack([(S == s).mean(axis=1) for s in range(W.ns)], axis=1)
        return ok1, ok2, d.c1, d.c2, types

    nt = _threads()
    if nt > 1 and len(starts) > 1:
        with ThreadPoolExecutor(nt) as ex:
            parts = list(ex.map(work, range(len(starts))))
    else:
        parts = [work(k) for k in range(len(starts))]
    cat = [np.concatenate([p[i] for p in parts]) for i in range(5)]
    return TrialSummary(trials, cat[0], cat[1], cat[2], cat[3], cat[4])
