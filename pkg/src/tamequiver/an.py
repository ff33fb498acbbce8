"""Indecomposables of the equioriented A_n quiver and its two decomposition algorithms.

Vertices are numbered ``1..n`` with arrows ``a -> a+1``. The indecomposable
``S_ij`` has dimension vector ``e_i + ... + e_j``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import DimensionMismatch
from .quiver import Quiver, euler_form


class Interval(NamedTuple):
    i: int
    j: int

    def dim(self, n: int) -> tuple[int, ...]:
        return tuple(int(self.i <= a <= self.j) for a in range(1, n + 1))

    def __str__(self) -> str:
        return f"S[{self.i},{self.j}]"


@dataclass(frozen=True)
class AnDecomposition:
    """Multiset of intervals, stored sorted by ``(i, j)``."""

    terms: tuple[tuple[Interval, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[int, int], int]) -> AnDecomposition:
        return cls(tuple((Interval(*iv), m) for iv, m in sorted(counts.items()) if m > 0))

    def support(self) -> list[Interval]:
        return [iv for iv, _ in self.terms]

    def total(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for iv, m in self.terms:
            for a in range(iv.i, iv.j + 1):
                out[a - 1] += m
        return tuple(out)

    def to_json(self) -> list[dict]:
        return [{"interval": [iv.i, iv.j], "mult": m} for iv, m in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{iv}" if m != 1 else str(iv) for iv, m in self.terms)


def equioriented(n: int) -> Quiver:
    return Quiver(n, tuple((a, a + 1) for a in range(n - 1)))


def _check(n: int, *ivs: Interval) -> None:
    for iv in ivs:
        if not 1 <= iv.i <= iv.j <= n:
            raise ValueError(f"interval {tuple(iv)} outside [1, {n}]")


def an_hom_dim(n: int, source: Interval, target: Interval) -> int:
    """dim Hom(S_kl, S_ij) for source (k, l) and target (i, j)."""
    _check(n, source, target)
    k, l = source
    i, j = target
    return int(i <= k <= j <= l)


def an_ext_dim(n: int, a: Interval, b: Interval) -> int:
    q = equioriented(n)
    return an_hom_dim(n, a, b) - euler_form(q, a.dim(n), b.dim(n))


def hom_orthogonal(a: Interval, b: Interval) -> bool:
    """Disjoint, or one strictly inside the other."""
    (i, j), (k, l) = a, b
    return j < k or l < i or (i < k <= l < j) or (k < i <= j < l)


def ext_orthogonal(a: Interval, b: Interval) -> bool:
    """Distance at least 2, or one contains the other."""
    (i, j), (k, l) = a, b
    return j < k - 1 or l < i - 1 or (i <= k <= l <= j) or (k <= i <= j <= l)


def an_is_lss(n: int, d: AnDecomposition) -> bool:
    ivs = d.support()
    _check(n, *ivs)
    return all(hom_orthogonal(a, b) for x, a in enumerate(ivs) for b in ivs[x + 1 :])


def _validate(alpha: Sequence[int]) -> list[int]:
    alpha = [int(x) for x in alpha]
    if any(x < 0 for x in alpha):
        raise DimensionMismatch(f"dimension vector {tuple(alpha)} has a negative entry")
    return alpha


def an_generic(alpha: Sequence[int]) -> AnDecomposition:
    work = _validate(alpha)
    counts: Counter = Counter()

    def run(lo: int, hi: int) -> None:
        if lo > hi:
            return
        m = min(work[lo - 1 : hi])
        if m > 0:
            counts[(lo, hi)] += m
            for a in range(lo - 1, hi):
                work[a] -= m
        t = next(a for a in range(lo, hi + 1) if work[a - 1] == 0)
        run(lo, t - 1)
        run(t + 1, hi)

    run(1, len(work))
    return AnDecomposition.from_counts(counts)


def an_generic_lss(alpha: Sequence[int]) -> AnDecomposition:
    work = _validate(alpha)
    counts: Counter = Counter()

    def run(lo: int, hi: int) -> None:
        if lo > hi:
            return
        seg = work[lo - 1 : hi]
        m = min(seg)
        t = lo + seg.index(m)
        if m == 0:
            run(lo, t - 1)
            run(t + 1, hi)
            return
        s = hi - seg[::-1].index(m)
        counts[(t, s)] += m
        for a in range(t + 1, s):
            work[a - 1] -= m
        run(lo, t - 1)
        run(s + 1, hi)
        run(t + 1, s - 1)

    run(1, len(work))
    return AnDecomposition.from_counts(counts)


def all_intervals(n: int) -> Iterable[Interval]:
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield Interval(i, j)
