"""Explicit representations over the rationals: a brute-force oracle for the closed formulas."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .an import Interval, equioriented
from .errors import (
    DimensionMismatch,
    EulerNonzero,
    InternalInconsistency,
    RetryExhausted,
)
from .quiver import DimVector, Quiver, euler_form

DEFAULT_BOUND = 10
DEFAULT_RETRIES = 20

Mat = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Representation:
    """One matrix per arrow, shaped ``dims[head] x dims[tail]``."""

    quiver: Quiver
    dims: DimVector
    maps: tuple[Mat, ...]

    def __post_init__(self) -> None:
        self.quiver.check(self.dims)
        if any(d < 0 for d in self.dims):
            raise DimensionMismatch("negative dimension")
        if len(self.maps) != len(self.quiver.arrows):
            raise DimensionMismatch(f"{len(self.maps)} matrices for {len(self.quiver.arrows)} arrows")
        fixed = []
        for (t, h), m in zip(self.quiver.arrows, self.maps):
            m = tuple(tuple(Fraction(x) for x in row) for row in m)
            if len(m) != self.dims[h] or any(len(row) != self.dims[t] for row in m):
                raise DimensionMismatch(f"matrix for arrow {t}->{h} must be {self.dims[h]}x{self.dims[t]}")
            fixed.append(m)
        object.__setattr__(self, "maps", tuple(fixed))

    @classmethod
    def from_json(cls, q: Quiver, data: dict) -> Representation:
        dims = tuple(int(x) for x in data["dims"])
        q.check(dims)
        maps = []
        flat_maps = data["maps"]
        if len(flat_maps) != len(q.arrows):
            raise DimensionMismatch(f"{len(flat_maps)} matrices for {len(q.arrows)} arrows")
        for (t, h), flat in zip(q.arrows, flat_maps):
            rows, cols = dims[h], dims[t]
            if len(flat) != rows * cols:
                raise DimensionMismatch(f"arrow {t}->{h} needs {rows * cols} entries, got {len(flat)}")
            vals = [Fraction(x) for x in flat]
            maps.append(tuple(tuple(vals[r * cols : (r + 1) * cols]) for r in range(rows)))
        return cls(q, dims, tuple(maps))

    def to_json(self) -> dict:
        def enc(x: Fraction):
            return int(x) if x.denominator == 1 else str(x)

        return {"dims": list(self.dims), "maps": [[enc(x) for row in m for x in row] for m in self.maps]}


def _same_quiver(u: Representation, v: Representation) -> None:
    if u.quiver != v.quiver:
        raise DimensionMismatch("representations of different quivers")


def intertwining_matrix(u: Representation, v: Representation) -> tuple[list[list[Fraction]], int]:
    """Matrix of ``(H_i) -> (H_h U_phi - V_phi H_t)_phi`` and its column count.

    Unknowns are the entries of ``H_i`` (a ``v_i x u_i`` matrix), vertex by
    vertex, row-major; equations follow the arrows in quiver order, row-major.
    """
    _same_quiver(u, v)
    q = u.quiver
    offset = []
    total = 0
    for i in range(q.n_vertices):
        offset.append(total)
        total += v.dims[i] * u.dims[i]
    rows: list[list[Fraction]] = []
    for (t, h), um, vm in zip(q.arrows, u.maps, v.maps):
        for r in range(v.dims[h]):
            for c in range(u.dims[t]):
                row = [Fraction(0)] * total
                for k in range(u.dims[h]):
                    row[offset[h] + r * u.dims[h] + k] += um[k][c]
                for k in range(v.dims[t]):
                    row[offset[t] + k * u.dims[t] + c] -= vm[r][k]
                rows.append(row)
    return rows, total


def hom_dim(u: Representation, v: Representation) -> int:
    rows, ncols = intertwining_matrix(u, v)
    return ncols - linalg.rank(rows, ncols)


def ext_dim(u: Representation, v: Representation) -> int:
    e = hom_dim(u, v) - euler_form(u.quiver, u.dims, v.dims)
    if e < 0:
        raise InternalInconsistency(f"negative Ext dimension {e}")
    return e


def schofield_pairing(v: Representation, w: Representation) -> Fraction:
    _same_quiver(v, w)
    e = euler_form(v.quiver, v.dims, w.dims)
    if e != 0:
        raise EulerNonzero(f"<dim V, dim W> = {e}, pairing undefined")
    rows, _ = intertwining_matrix(v, w)
    return linalg.det(rows)


def random_rep(q: Quiver, d: Sequence[int], seed: int, bound: int = DEFAULT_BOUND) -> Representation:
    return _random_rep(q, tuple(int(x) for x in d), random.Random(seed), bound)


def _random_rep(q: Quiver, d: DimVector, rng: random.Random, bound: int) -> Representation:
    q.check(d)
    maps = tuple(
        tuple(tuple(rng.randint(-bound, bound) for _ in range(d[t])) for _ in range(d[h])) for t, h in q.arrows
    )
    return Representation(q, d, maps)


def is_schurian(v: Representation) -> bool:
    return hom_dim(v, v) == 1


def sample_schurian(
    q: Quiver, d: Sequence[int], seed: int, retries: int = DEFAULT_RETRIES, bound: int = DEFAULT_BOUND
) -> Representation:
    rng = random.Random(seed)
    d = tuple(int(x) for x in d)
    for _ in range(retries):
        v = _random_rep(q, d, rng, bound)
        if is_schurian(v):
            return v
    raise RetryExhausted(f"no Schurian representation of dimension {d} in {retries} samples (seed {seed})")


def in_right_perp(v: Representation, w: Representation) -> bool:
    return hom_dim(v, w) == 0 and ext_dim(v, w) == 0


def interval_rep(n: int, iv: Interval) -> Representation:
    """``S_ij`` on the equioriented A_n: identity maps inside the segment."""
    q = equioriented(n)
    dims = iv.dim(n)
    maps = tuple(((1,),) if dims[a] and dims[a + 1] else tuple(() for _ in range(dims[a + 1])) for a in range(n - 1))
    return Representation(q, dims, maps)


def direct_sum(u: Representation, v: Representation) -> Representation:
    _same_quiver(u, v)
    q = u.quiver
    dims = tuple(a + b for a, b in zip(u.dims, v.dims))
    maps = []
    for (t, h), um, vm in zip(q.arrows, u.maps, v.maps):
        top = [list(row) + [Fraction(0)] * v.dims[t] for row in um]
        bottom = [[Fraction(0)] * u.dims[t] + list(row) for row in vm]
        maps.append(tuple(tuple(r) for r in top + bottom))
    return Representation(q, dims, tuple(maps))
