"""Oblivious state-sequence generators.

A jammer may depend on the code (or code family) but never on the realized
messages, channel noise or shared randomness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..channel import BroadcastChannel, StrategyMap, mi_batch, state_kernels

_TARGETS = {"i0": 0, "i1": 1, "isum": 2}


@dataclass(frozen=True, eq=False)
class JammerSpec:
    kind: str  # "iid", "fixed" or "greedy"
    q: np.ndarray | None = None
    seq: np.ndarray | None = None
    target: str = "isum"
    ns: int = 2
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "iid":
            q = np.asarray(self.q, dtype=float)
            if q.ndim != 1 or np.any(q < 0) or abs(q.sum() - 1) > 1e-12:
                raise ValueError("iid jammer needs a state pmf")
            object.__setattr__(self, "q", q)
            object.__setattr__(self, "ns", q.size)
        elif self.kind == "fixed":
            s = np.asarray(self.seq, dtype=np.int64)
            if s.ndim != 1 or np.any(s < 0):
                raise ValueError("fixed jammer needs a 1-D state sequence")
            object.__setattr__(self, "seq", s)
        elif self.kind == "greedy":
            if self.target not in _TARGETS:
                raise ValueError(f"greedy target must be one of {sorted(_TARGETS)}")
        else:
            raise ValueError(f"unknown jammer kind {self.kind!r}")

    @classmethod
    def iid(cls, q) -> "JammerSpec":
        q = np.asarray(q, dtype=float)
        if q.ndim == 0:
            q = np.array([1 - float(q), float(q)])
        return cls("iid", q=q)

    @classmethod
    def fixed(cls, seq) -> "JammerSpec":
        return cls("fixed", seq=np.asarray(seq))

    @classmethod
    def greedy(cls, target: str = "isum", ns: int = 2) -> "JammerSpec":
        return cls("greedy", target=target, ns=ns)

    def sample(self, n: int, rng: np.random.Generator, size: int, code=None, W: BroadcastChannel | None = None) -> np.ndarray:
        """State sequences, shape (size, n)."""
        if self.kind == "iid":
            return rng.choice(self.q.size, size=(size, n), p=self.q)
        if self.kind == "fixed":
            if self.seq.size != n:
                raise ValueError(f"fixed sequence has length {self.seq.size}, block is {n}")
            return np.broadcast_to(self.seq, (size, n)).copy()
        if code is None or W is None:
            raise ValueError("greedy jammer needs the code and the channel")
        return np.broadcast_to(greedy_sequence(code, W, self.target), (size, n)).copy()

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "iid":
            out["q"] = self.q.tolist()
        elif self.kind == "fixed":
            out["seq"] = self.seq.tolist()
        else:
            out["target"] = self.target
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "JammerSpec":
        kind = obj["kind"]
        if kind == "iid":
            return cls.iid(obj["q"])
        if kind == "fixed":
            return cls.fixed(obj["seq"])
        return cls.greedy(obj.get("target", "isum"))


def column_pmfs(u0: np.ndarray, u1: np.ndarray, nu0: int, nu1: int) -> np.ndarray:
    """Per-position empirical pmf of (u0, u1) across all codeword pairs: (n, nu0, nu1)."""
    M0, M1, n = u1.shape
    a = np.broadcast_to(u0[:, None, :], u1.shape).reshape(-1, n)
    flat = a * nu1 + u1.reshape(-1, n)
    counts = np.stack([np.bincount(flat[:, i], minlength=nu0 * nu1) for i in range(n)])
    return (counts / flat.shape[0]).reshape(n, nu0, nu1)


def greedy_sequence(code, W: BroadcastChannel, target: str = "isum") -> np.ndarray:
    """Heuristic: at each position pick the state minimizing the chosen per-letter
    mutual information under the codebook's column statistics.

    Searching all of S^n is out of reach, so this is a per-letter heuristic only.
    """
    cb = getattr(code, "cb", code)
    xi: StrategyMap = cb.xi
    P = column_pmfs(cb.u0, cb.u1, xi.nu0, xi.nu1)
    ks = state_kernels(xi, W)  # (S, u0, u1, y1, y2)
    vals = np.stack([mi_batch(P, ks[s])[:, _TARGETS[target]] for s in range(W.ns)], axis=1)
    return vals.argmin(axis=1).astype(np.int64)


def adversarial_family(n: int, count: int = 50, seed: int = 0) -> np.ndarray:
    """Binary sequences with one of each type j/(count-1), ones placed at random."""
    rng = np.random.default_rng(seed)
    out = np.zeros((count, n), dtype=np.int64)
    for j in range(count):
        k = int(round(n * j / (count - 1)))
        out[j, rng.permutation(n)[:k]] = 1
    return out
