"""Regular simple roots, Coxeter orbits and the canonical decomposition of a tame quiver."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    NotRegular,
    WrongQuiverClass,
)
from .quiver import (
    DimVector,
    Quiver,
    apply,
    classify_graph,
    coxeter_matrix,
    defect,
    euler_form,
    is_acyclic,
    is_connected,
    null_root,
    tits_form,
)


@dataclass(frozen=True)
class RegularStructure:
    """Non-homogeneous regular simples ``e_i`` with ``c(e_i) = e_{next[i]}``.

    ``simples`` is sorted lexicographically; ``orbits`` lists each c-orbit in
    successor order starting from its lowest index, orbits ordered by that index.
    """

    delta: DimVector
    simples: tuple[DimVector, ...]
    next: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def n_o(self) -> int:
        return len(self.orbits)

    @property
    def prev(self) -> tuple[int, ...]:
        out = [0] * len(self.next)
        for i, j in enumerate(self.next):
            out[j] = i
        return tuple(out)

    def orbit_of(self, i: int) -> int:
        return next(k for k, orb in enumerate(self.orbits) if i in orb)

    def arc(self, start: int, length: int) -> list[int]:
        out = [start]
        while len(out) < length:
            out.append(self.next[out[-1]])
        return out

    def arc_sum(self, start: int, length: int) -> DimVector:
        return vsum(self.simples[i] for i in self.arc(start, length))


def arc_candidates(rs: RegularStructure) -> dict[DimVector, list[tuple[int, int]]]:
    """Map each proper arc sum to the ``(start, length)`` pairs producing it."""
    out: dict[DimVector, list[tuple[int, int]]] = {}
    for orb in rs.orbits:
        for k in orb:
            for length in range(1, len(orb)):
                out.setdefault(rs.arc_sum(k, length), []).append((k, length))
    return out


def vsum(vectors, n: int | None = None) -> DimVector:
    vectors = list(vectors)
    if not vectors:
        return tuple([0] * (n or 0))
    return tuple(sum(col) for col in zip(*vectors))


def require_tame(q: Quiver) -> DimVector:
    if not is_connected(q):
        raise WrongQuiverClass("quiver is not connected")
    if not is_acyclic(q):
        raise WrongQuiverClass("quiver has an oriented cycle")
    gc = classify_graph(q)
    if not gc.extended:
        raise WrongQuiverClass(f"quiver is not extended Dynkin (type {gc.tag})")
    return null_root(q)


def regular_simples(q: Quiver) -> RegularStructure:
    delta = require_tame(q)
    c = coxeter_matrix(q)
    cap = 4 * q.n_vertices
    sigma = [defect(q, q.basis(v), delta) for v in range(q.n_vertices)]
    found = []
    for beta in itertools.product(*(range(d + 1) for d in delta)):
        if sum(s * b for s, b in zip(sigma, beta)) != 0 or not any(beta) or beta == delta:
            continue
        if tits_form(q, beta) != 1:
            continue
        orbit = [beta]
        while True:
            nxt = apply(c, orbit[-1])
            if nxt == beta:
                break
            orbit.append(nxt)
            if len(orbit) > cap:
                raise InternalInconsistency(f"c-orbit of {beta} did not close within {cap} steps")
        if vsum(orbit) == delta:
            found.append(beta)
    simples = tuple(sorted(found))
    index = {e: i for i, e in enumerate(simples)}
    try:
        nxt = tuple(index[apply(c, e)] for e in simples)
    except KeyError as exc:
        raise InternalInconsistency("Coxeter transformation does not permute the regular simples") from exc
    orbits = []
    seen: set[int] = set()
    for i in range(len(simples)):
        if i in seen:
            continue
        orb = [i]
        while nxt[orb[-1]] != i:
            orb.append(nxt[orb[-1]])
        seen.update(orb)
        orbits.append(tuple(orb))
    return RegularStructure(delta, simples, nxt, tuple(orbits))


@dataclass(frozen=True)
class CanonicalDecomp:
    """``alpha = p * delta + sum(coeffs[i] * e_i)`` with a zero coefficient in every orbit."""

    p: int
    coeffs: tuple[int, ...]

    def total(self, rs: RegularStructure) -> DimVector:
        n = len(rs.delta)
        out = [self.p * d for d in rs.delta]
        for c, e in zip(self.coeffs, rs.simples):
            for a in range(n):
                out[a] += c * e[a]
        return tuple(out)


def canonical_decomposition(
    q: Quiver, alpha: Sequence[int], rs: RegularStructure | None = None
) -> CanonicalDecomp:
    if rs is None:
        rs = regular_simples(q)
    q.check(alpha)
    alpha = tuple(int(x) for x in alpha)
    if any(x < 0 for x in alpha):
        raise DimensionMismatch(f"dimension vector {alpha} has a negative entry")
    sigma = defect(q, alpha, rs.delta)
    if sigma != 0:
        raise NotRegular(f"defect = {sigma}, not regular")
    d = [euler_form(q, e, alpha) for e in rs.simples]
    coeffs = [0] * len(rs.simples)
    for orb in rs.orbits:
        if sum(d[i] for i in orb) != 0:
            raise NotRegular(f"Euler pairings with orbit {orb} do not sum to zero")
        t = {orb[0]: 0}
        for i in orb:
            t[rs.next[i]] = t[i] - d[i]
        if t[orb[0]] != 0:
            raise NotRegular("cycle integration is inconsistent")
        low = min(t[i] for i in orb)
        for i in orb:
            coeffs[i] = t[i] - low
    residue = list(alpha)
    for c, e in zip(coeffs, rs.simples):
        for a in range(len(residue)):
            residue[a] -= c * e[a]
    p, rem = divmod(residue[0], rs.delta[0])
    if rem or p < 0 or any(r != p * dl for r, dl in zip(residue, rs.delta)):
        raise NotRegular(f"residue {tuple(residue)} is not a nonnegative multiple of delta")
    return CanonicalDecomp(p, tuple(coeffs))


def in_regular_dims(q: Quiver, alpha: Sequence[int], rs: RegularStructure | None = None) -> bool:
    try:
        canonical_decomposition(q, alpha, rs)
    except NotRegular:
        return False
    return True


def eq_quiver(rs: RegularStructure) -> Quiver:
    """One vertex per regular simple, one arrow ``i -> next(i)``."""
    n = len(rs.simples)
    return Quiver(n, tuple((i, rs.next[i]) for i in range(n)), tuple(f"e{i + 1}" for i in range(n)))
