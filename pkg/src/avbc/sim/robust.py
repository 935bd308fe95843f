"""Random codes built from a deterministic code: permutations and elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..channel import BroadcastChannel
from .decoders import SuperpositionCode
from .trials import Decisions, channel_outputs, transmit


def _check_perm(pi: np.ndarray, n: int) -> np.ndarray:
    pi = np.asarray(pi, dtype=np.int64)
    if pi.shape != (n,) or not np.array_equal(np.sort(pi), np.arange(n)):
        raise ValueError("pi must be a permutation of 0..n-1")
    return pi


class PermutedCode:
    """Encoder sends the inverse-permuted strategy words; decoders read y[pi].

    Only the state-independent words are permuted, so encoding stays causal.
    """

    def __init__(self, base: SuperpositionCode, pi):
        self.base = base
        self.pi = _check_perm(pi, base.n)
        self.inv = np.argsort(self.pi)
        cb = base.cb
        self.cb = cb.with_words(cb.u0[:, self.inv], cb.u1[:, :, self.inv])

    n = property(lambda self: self.base.n)
    M0 = property(lambda self: self.base.M0)
    M1 = property(lambda self: self.base.M1)

    def encode_batch(self, m0, m1, S):
        return self.cb.encode_batch(m0, m1, S)

    def decode_batch(self, Y1, Y2):
        return self.base.decode_batch(np.atleast_2d(Y1)[:, self.pi], np.atleast_2d(Y2)[:, self.pi])


class RandomPermutationCode:
    """Random code over permutations of a base code.

    Each use draws pi (uniform over all permutations, or uniform over a finite
    list) as randomness shared by the encoder and both decoders.
    """

    def __init__(self, base: SuperpositionCode, perms: np.ndarray | None = None):
        self.base = base
        if perms is not None:
            perms = np.atleast_2d(np.asarray(perms, dtype=np.int64))
            for p in perms:
                _check_perm(p, base.n)
        self.perms = perms

    n = property(lambda self: self.base.n)
    M0 = property(lambda self: self.base.M0)
    M1 = property(lambda self: self.base.M1)

    @property
    def support_size(self) -> int | None:
        return None if self.perms is None else self.perms.shape[0]

    def draw_perms(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.perms is None:
            return rng.permuted(np.tile(np.arange(self.n), (size, 1)), axis=1)
        return self.perms[rng.integers(self.perms.shape[0], size=size)]

    def draw(self, rng: np.random.Generator) -> PermutedCode:
        return PermutedCode(self.base, self.draw_perms(rng, 1)[0])

    def transmit(self, W: BroadcastChannel, m0, m1, S, U, rng) -> Decisions:
        P = self.draw_perms(rng, len(m0))
        inv = np.argsort(P, axis=1)
        cb = self.base.cb
        u0 = np.take_along_axis(cb.u0[m0], inv, axis=1)
        u1 = np.take_along_axis(cb.u1[m0, m1], inv, axis=1)
        X = cb.xi.table[u0, u1, S]
        Y1, Y2 = channel_outputs(W, X, S, U)
        return Decisions(*self.base.decode_batch(np.take_along_axis(Y1, P, axis=1),
                                                 np.take_along_axis(Y2, P, axis=1)))


class FiniteRandomCode:
    """Random code with finite support: codes[i] chosen with probability weights[i]."""

    def __init__(self, codes: Sequence, weights: np.ndarray | None = None):
        if not codes:
            raise ValueError("empty code family")
        self.codes = list(codes)
        k = len(self.codes)
        w = np.full(k, 1.0 / k) if weights is None else np.asarray(weights, dtype=float)
        if w.shape != (k,) or np.any(w < 0) or abs(w.sum() - 1) > 1e-12:
            raise ValueError("weights must be a pmf over the codes")
        self.weights = w
        c0 = self.codes[0]
        if any((c.n, c.M0, c.M1) != (c0.n, c0.M0, c0.M1) for c in self.codes):
            raise ValueError("codes in a family must share blocklength and message sets")

    n = property(lambda self: self.codes[0].n)
    M0 = property(lambda self: self.codes[0].M0)
    M1 = property(lambda self: self.codes[0].M1)

    @property
    def support_size(self) -> int:
        return len(self.codes)

    def draw(self, rng: np.random.Generator):
        return self.codes[rng.choice(len(self.codes), p=self.weights)]

    def transmit(self, W: BroadcastChannel, m0, m1, S, U, rng) -> Decisions:
        t = len(m0)
        g = rng.choice(len(self.codes), size=t, p=self.weights)
        out = Decisions(*(np.full(t, -1, dtype=np.int64) for _ in range(3)),
                        np.zeros(t, dtype=np.int64), np.zeros(t, dtype=np.int64))
        for k in np.unique(g):
            sel = np.flatnonzero(g == k)
            d = transmit(self.codes[k], W, m0[sel], m1[sel], S[sel], U[sel], rng)
            for f in ("m0_1", "m1_1", "m0_2", "c1", "c2"):
                getattr(out, f)[sel] = getattr(d, f)
        return out


@dataclass
class EliminationResult:
    code: object  # reduced random code, uniform over k members
    k: int
    alpha: float | None


def eliminate(family, n: int, alpha: float | None = None, seed: int | None = None,
              replace: bool = True) -> EliminationResult:
    """Keep k = n^2 codes drawn from the family's distribution, with weights 1/k.

    Draws are i.i.d. by default; ``replace=False`` subsamples distinct support
    members and needs k <= support size.
    """
    k = n * n
    rng = np.random.default_rng(seed)
    support = getattr(family, "support_size", None)
    if not replace:
        if support is None or k > support:
            raise ValueError(f"cannot take {k} distinct codes from a support of size {support}")
    if isinstance(family, RandomPermutationCode):
        if family.perms is None:
            perms = family.draw_perms(rng, k)
        else:
            idx = rng.choice(support, size=k, replace=replace) if not replace else rng.integers(support, size=k)
            perms = family.perms[idx]
        return EliminationResult(RandomPermutationCode(family.base, perms), k, alpha)
    if isinstance(family, FiniteRandomCode):
        idx = rng.choice(support, size=k, replace=replace, p=family.weights if replace else None)
        return EliminationResult(FiniteRandomCode([family.codes[i] for i in idx]), k, alpha)
    return EliminationResult(FiniteRandomCode([family.draw(rng) for _ in range(k)]), k, alpha)
