"""Finite-alphabet probability primitives.

Entropies are in bits. Probabilities are kept in linear scale; logs only
appear inside entropy computations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

NORM_TOL = 1e-12


def _check_unit(name: str, x: float) -> None:
    if not (0.0 <= x <= 1.0):
        raise ValueError(f"{name}={x!r} outside [0, 1]")


def binary_entropy(x):
    """h(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.

    Accepts scalars or arrays; raises ValueError outside [0, 1].
    """
    arr = np.asarray(x, dtype=float)
    if np.any((arr < 0.0) | (arr > 1.0)) or np.any(np.isnan(arr)):
        raise ValueError("binary_entropy argument outside [0, 1]")
    out = -(plogp(arr) + plogp(1.0 - arr))
    return float(out) if out.ndim == 0 else out


def convolve(a, b):
    """Binary convolution a*b = a(1-b) + (1-a)b."""
    a_arr = np.asarray(a, dtype=float)
    b_arr = np.asarray(b, dtype=float)
    for name, v in (("a", a_arr), ("b", b_arr)):
        if np.any((v < 0.0) | (v > 1.0)):
            raise ValueError(f"convolve: {name} outside [0, 1]")
    out = a_arr * (1.0 - b_arr) + (1.0 - a_arr) * b_arr
    return float(out) if out.ndim == 0 else out


def plogp(p: np.ndarray) -> np.ndarray:
    """Elementwise p*log2(p) with the 0*log 0 = 0 convention."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = p[pos] * np.log2(p[pos])
    return out


def entropy(p, axis=None) -> float | np.ndarray:
    """Shannon entropy in bits of a pmf (summed over ``axis``, all by default)."""
    return -np.sum(plogp(p), axis=axis)


@dataclass(frozen=True, eq=False)
class Pmf:
    """Pmf over a finite alphabet {0, ..., k-1}."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float).reshape(-1)
        if v.size == 0:
            raise ValueError("empty pmf")
        if np.any(v < 0) or np.any(~np.isfinite(v)):
            raise ValueError("pmf entries must be finite and nonnegative")
        if abs(v.sum() - 1.0) > NORM_TOL:
            raise ValueError(f"pmf sums to {v.sum()!r}, not 1")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return self.values.size

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, Pmf):
            return NotImplemented
        return self.values.shape == other.values.shape and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    @classmethod
    def bernoulli(cls, p1: float) -> "Pmf":
        _check_unit("p1", p1)
        return cls(np.array([1.0 - p1, p1]))

    @classmethod
    def uniform(cls, k: int) -> "Pmf":
        return cls(np.full(k, 1.0 / k))

    @classmethod
    def point(cls, k: int, i: int) -> "Pmf":
        v = np.zeros(k)
        v[i] = 1.0
        return cls(v)

    def entropy(self) -> float:
        return float(entropy(self.values))

    def to_json(self) -> list:
        return self.values.tolist()

    @classmethod
    def from_json(cls, obj) -> "Pmf":
        return cls(np.asarray(obj, dtype=float))


@dataclass(frozen=True, eq=False)
class JointPmf:
    """Pmf over a product alphabet, stored as an n-dimensional table."""

    table: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=float)
        if t.size == 0:
            raise ValueError("empty joint pmf")
        if np.any(t < 0) or np.any(~np.isfinite(t)):
            raise ValueError("joint pmf entries must be finite and nonnegative")
        if abs(t.sum() - 1.0) > NORM_TOL:
            raise ValueError(f"joint pmf sums to {t.sum()!r}, not 1")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @property
    def shape(self) -> tuple:
        return self.table.shape

    def marginal(self, axes: Sequence[int]) -> np.ndarray:
        """Marginal table over ``axes`` (kept in the given order)."""
        axes = tuple(axes)
        drop = tuple(i for i in range(self.table.ndim) if i not in axes)
        m = self.table.sum(axis=drop)
        # sum keeps remaining axes in ascending order; reorder to request
        order = sorted(axes)
        return np.transpose(m, [order.index(a) for a in axes])

    def conditional(self, target: Sequence[int], given: Sequence[int]) -> np.ndarray:
        """P(target | given) as a table indexed (given..., target...).

        Rows where the conditioning marginal is zero are left as zeros.
        """
        given, target = tuple(given), tuple(target)
        joint = self.marginal(given + target)
        cond = self.marginal(given)
        expand = cond.reshape(cond.shape + (1,) * len(target))
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.where(expand > 0, joint / np.where(expand > 0, expand, 1.0), 0.0)
        return out

    def entropy(self, axes: Sequence[int] | None = None) -> float:
        t = self.table if axes is None else self.marginal(axes)
        return float(entropy(t))

    def mutual_information(self, a: Sequence[int], b: Sequence[int], given: Sequence[int] = ()) -> float:
        """I(A;B|C) in bits via entropies of marginals."""
        a, b, c = tuple(a), tuple(b), tuple(given)
        h = self.entropy
        hc = h(c) if c else 0.0
        return max(0.0, h(a + c) + h(b + c) - h(a + b + c) - hc)

    def to_json(self) -> list:
        return self.table.tolist()

    @classmethod
    def from_json(cls, obj) -> "JointPmf":
        return cls(np.asarray(obj, dtype=float))


def empirical_type(seq: Sequence[int], alphabet_size: int | None = None) -> Pmf:
    """Letter frequencies of a nonempty sequence over {0, ..., k-1}."""
    arr = np.asarray(seq, dtype=int).reshape(-1)
    if arr.size == 0:
        raise ValueError("empirical_type of an empty sequence")
    if arr.min() < 0:
        raise ValueError("letters must be nonnegative integers")
    k = int(arr.max()) + 1 if alphabet_size is None else alphabet_size
    if arr.max() >= k:
        raise ValueError("letter outside alphabet")
    counts = np.bincount(arr, minlength=k)
    return Pmf(counts / arr.size)


def joint_counts(seqs: Sequence[Sequence[int]], shape: Sequence[int]) -> np.ndarray:
    """Joint letter counts N(a1, ..., ak) of equal-length sequences."""
    arrs = [np.asarray(s, dtype=int).reshape(-1) for s in seqs]
    n = arrs[0].size
    if any(a.size != n for a in arrs):
        raise ValueError("sequences must have equal length")
    flat = np.ravel_multi_index(tuple(arrs), tuple(shape))
    return np.bincount(flat, minlength=int(np.prod(shape))).reshape(tuple(shape))


def typical_mask(freq: np.ndarray, target: np.ndarray, delta: float) -> np.ndarray:
    """Letter-typicality test on the trailing axes.

    ``freq`` (..., *cells) are empirical frequencies, ``target`` broadcastable
    against it. True where every cell is within delta and no cell with zero
    target mass is visited.
    """
    cell_axes = tuple(range(-target.ndim, 0)) if target.ndim else ()
    close = np.abs(freq - target) <= delta + 1e-12
    support = (target > 0) | (freq == 0)
    return np.all(close & support, axis=cell_axes)


def is_typical(seq_tuple: Sequence[Sequence[int]], joint: JointPmf | np.ndarray, delta: float) -> bool:
    """True iff the joint type of ``seq_tuple`` is delta-letter-typical for ``joint``.

    |N(a)/n - P(a)| <= delta for every joint letter a, and N(a) = 0 wherever
    P(a) = 0.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    table = joint.table if isinstance(joint, JointPmf) else np.asarray(joint, dtype=float)
    if len(seq_tuple) != table.ndim:
        raise ValueError("need one sequence per joint axis")
    counts = joint_counts(seq_tuple, table.shape)
    n = counts.sum()
    return bool(typical_mask(counts / n, table, delta))


def compositions(n: int, k: int) -> np.ndarray:
    """All k-part compositions of n (nonnegative), shape (C(n+k-1, k-1), k)."""
    if k == 1:
        return np.array([[n]], dtype=int)
    # stars and bars: choose k-1 bar positions among n+k-1 slots
    rows = []
    for bars in itertools.combinations(range(n + k - 1), k - 1):
        prev = -1
        row = []
        for b in bars:
            row.append(b - prev - 1)
            prev = b
        row.append(n + k - 1 - prev - 1)
        rows.append(row)
    return np.array(rows, dtype=int)


def simplex_lattice(k: int, resolution: int) -> np.ndarray:
    """Pmfs over k letters with entries in multiples of 1/resolution."""
    return compositions(resolution, k) / resolution


@dataclass(frozen=True, eq=False)
class TypeGrid:
    """n-types over S that are delta1-close (max norm) to some member of a family Q."""

    types: np.ndarray  # (G, |S|)
    delta1: float
    n: int

    def __len__(self):
        return self.types.shape[0]

    def __iter__(self):
        return (Pmf(t) for t in self.types)


def build_type_grid(Q: Iterable[Pmf] | None, delta: float, n: int, n_states: int | None = None) -> TypeGrid:
    """Set of n-types within delta1 = delta / (2|S|) of Q.

    ``Q=None`` stands for the full simplex over ``n_states`` letters, in which
    case every n-type is returned.
    """
    if n < 1:
        raise ValueError("blocklength must be >= 1")
    if Q is None:
        if n_states is None:
            raise ValueError("n_states required when Q is the full simplex")
        k = n_states
        members = None
    else:
        members = np.array([np.asarray(q.values if isinstance(q, Pmf) else q, float) for q in Q])
        if members.size == 0:
            raise ValueError("Q must be nonempty")
        k = members.shape[1]
    delta1 = delta / (2 * k)
    types = compositions(n, k) / n
    if members is not None:
        dist = np.max(np.abs(types[:, None, :] - members[None, :, :]), axis=2).min(axis=1)
        types = types[dist <= delta1 + 1e-12]
    return TypeGrid(types=types, delta1=delta1, n=n)


def type_count_bound(n: int, k: int) -> int:
    """(n+1)^k, the classical bound on the number of n-types over k letters."""
    return (n + 1) ** k


def n_types(n: int, k: int) -> int:
    return math.comb(n + k - 1, k - 1)
