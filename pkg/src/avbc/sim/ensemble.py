"""Random-coding-ensemble simulation for message sets too large to store.

Each trial draws the transmitted words, the states and the channel output.
Wrong codewords are i.i.d. and independent of the output given the common
word, so the chance that one of them passes the typicality test is computed
exactly; the number of passing wrong candidates is then Binomial(M1 - 1, p).

Only a single common message (M0 = 1) is handled: with several common
messages the two decoders' wrong candidates share their u0 words and the
events stop factorizing.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from ..channel import BroadcastChannel, StrategyMap
from ..prob import build_type_grid, compositions
from .decoders import DEFAULT_DELTA, decoding_targets, typical_any
from .jammer import JammerSpec
from .trials import CHUNK, TrialSummary, channel_outputs


class EnsembleDecoderModel:
    """Decoder-1 false-candidate probabilities for a fixed (p, xi, W, n, delta, Q)."""

    def __init__(self, p: np.ndarray, xi: StrategyMap, W: BroadcastChannel, n: int,
                 delta: float = DEFAULT_DELTA, Q=None):
        if W.ns > 2:
            raise ValueError("ensemble route needs |S| <= 2 (interval structure of the type grid)")
        self.p, self.xi, self.W, self.n, self.delta = np.asarray(p, float), xi, W, n, delta
        grid = build_type_grid(Q, delta, n, W.ns)
        order = np.argsort(grid.types[:, -1], kind="stable")
        self.types = grid.types[order]
        self.targets = decoding_targets(self.p, xi, W, self.types)
        self.G = self.types.shape[0]
        p0 = self.p.sum(axis=1)
        self.cond = np.where(p0[:, None] > 0, self.p / np.where(p0[:, None] > 0, p0[:, None], 1), 0.0)
        self._class_stats = lru_cache(maxsize=None)(self._class_stats_uncached)

    def _class_stats_uncached(self, a: int, y: int, m: int) -> tuple[np.ndarray, np.ndarray]:
        """For class (u0=a, y1=y) holding m positions: F(L) = P(L in pass set),
        H(L) = P(pass set contains L and starts before L)."""
        nu1 = self.xi.nu1
        r = self.cond[a]
        supp = np.flatnonzero(r > 0)
        tg = self.targets.t1[:, a, :, y]  # (G, nu1)
        comp = compositions(m, supp.size) if m > 0 else np.zeros((1, supp.size), dtype=int)
        c = np.zeros((comp.shape[0], nu1))
        c[:, supp] = comp
        logp = gammaln(m + 1) - gammaln(comp + 1).sum(axis=1) + (comp * np.log(r[supp])[None, :]).sum(axis=1)
        prob = np.exp(logp)
        f = c / self.n
        ok = (np.abs(f[:, None, :] - tg[None]) <= self.delta + 1e-12) & ~((tg[None] <= 0) & (f[:, None, :] > 0))
        mask = ok.all(axis=2)  # (C, G)
        any_ = mask.any(axis=1)
        lo = np.where(any_, mask.argmax(axis=1), self.G)
        hi = np.where(any_, self.G - 1 - mask[:, ::-1].argmax(axis=1), -1)
        width = hi - lo + 1
        if np.any(any_ & (mask.sum(axis=1) != width)):
            raise RuntimeError("pass set is not contiguous on the sorted type grid")
        L = np.arange(self.G)
        inside = (lo[:, None] <= L[None]) & (hi[:, None] >= L[None])
        before = (lo[:, None] <= L[None] - 1) & (hi[:, None] >= L[None])
        return prob @ inside, prob @ before

    def false_pass_prob(self, u0: np.ndarray, y1: np.ndarray) -> float:
        """P(a fresh u1 word, drawn from P_U1|U0 given u0, passes decoder 1 with y1)."""
        Fp = np.ones(self.G)
        Hp = np.ones(self.G)
        for a in range(self.xi.nu0):
            for y in range(self.W.ny1):
                m = int(np.count_nonzero((u0 == a) & (y1 == y)))
                F, H = self._class_stats(a, y, m)
                Fp *= F
                Hp *= H
        return float(np.clip(np.sum(Fp - Hp), 0.0, 1.0))


def run_ensemble_trials(p, xi: StrategyMap, W: BroadcastChannel, n: int, M0: int, M1: int,
                        jammer: JammerSpec, trials: int, seed: int | None,
                        delta: float = DEFAULT_DELTA, Q=None, chunk: int = CHUNK,
                        model: EnsembleDecoderModel | None = None) -> TrialSummary:
    """Error of the random-coding ensemble (fresh codebook per trial)."""
    if M0 != 1:
        raise ValueError("ensemble route supports a single common message (M0 = 1) only")
    if M1 < 1 or trials < 1:
        raise ValueError("need M1 >= 1 and trials >= 1")
    if jammer.kind == "greedy":
        raise ValueError("the greedy jammer needs an explicit codebook")
    pt = p.table if hasattr(p, "table") else np.asarray(p, float)
    model = model or EnsembleDecoderModel(pt, xi, W, n, delta, Q)
    t1 = model.targets.t1.reshape(model.G, -1)
    t2 = model.targets.t2.reshape(model.G, -1)
    p0 = pt.sum(axis=1)
    cdf1 = np.cumsum(model.cond, axis=1)
    root = np.random.SeedSequence(seed)
    starts = list(range(0, trials, chunk))
    parts = []
    for k, ss in zip(range(len(starts)), root.spawn(len(starts))):
        t = min(trials, starts[k] + chunk) - starts[k]
        r_code, r_state, r_noise, r_count = (np.random.default_rng(s) for s in ss.spawn(4))
        u0 = r_code.choice(xi.nu0, size=(t, n), p=p0)
        u1 = np.minimum((r_code.random((t, n))[..., None] >= cdf1[u0]).sum(axis=-1), xi.nu1 - 1)
        S = jammer.sample(n, r_state, t)
        X = xi.table[u0, u1, S]
        Y1, Y2 = channel_outputs(W, X, S, r_noise.random((t, n)))
        nu1 = xi.nu1
        c1 = np.stack([np.bincount((u0[i] * nu1 + u1[i]) * W.ny1 + Y1[i], minlength=t1.shape[1]) for i in range(t)])
        c2 = np.stack([np.bincount(u0[i] * W.ny2 + Y2[i], minlength=t2.shape[1]) for i in range(t)])
        true1 = typical_any(c1 / n, t1, delta)
        true2 = typical_any(c2 / n, t2, delta)
        pf = np.array([model.false_pass_prob(u0[i], Y1[i]) for i in range(t)])
        wrong = r_count.binomial(M1 - 1, pf) if M1 > 1 else np.zeros(t, dtype=np.int64)
        ok1 = true1 & (wrong == 0)
        ok2 = true2.copy()
        types = np.stack([(S == s).mean(axis=1) for s in range(W.ns)], axis=1)
        parts.append((ok1, ok2, wrong + true1, true2.astype(np.int64), types))
    cat = [np.concatenate([q[i] for q in parts]) for i in range(5)]
    return TrialSummary(trials, cat[0], cat[1], cat[2], cat[3], cat[4])
