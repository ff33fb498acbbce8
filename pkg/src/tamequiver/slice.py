"""Local quivers at locally semi-simple points and the tame decomposition pipeline.

The canonical decomposition gives a locally semi-simple representation whose
local quiver is a union of one-loop vertices (one per homogeneous summand)
and equioriented A_m paths cut out of the Coxeter orbits. Decomposing each
path with the A_m algorithms and pushing the pieces back along the map that
sends a local-quiver vertex to its summand root yields the decompositions of
the original dimension vector.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .an import AnDecomposition, an_generic, an_generic_lss
from .errors import DimensionMismatch, InternalInconsistency, QuiverError
from .quiver import DimVector, Quiver, euler_form, tits_form
from .regular import (
    CanonicalDecomp,
    RegularStructure,
    canonical_decomposition,
    regular_simples,
)


class InvalidSummands(QuiverError):
    pass


@dataclass(frozen=True)
class LocalQuiver:
    quiver: Quiver
    dims: DimVector
    back_map: tuple[DimVector, ...]


def local_quiver(
    q: Quiver, summands: Sequence[tuple[Sequence[int], int]], names: Sequence[str] | None = None
) -> LocalQuiver:
    roots = [tuple(int(x) for x in r) for r, _ in summands]
    mults = tuple(int(m) for _, m in summands)
    q.check(*roots)
    if any(m < 1 for m in mults):
        raise InvalidSummands("summand multiplicities must be positive")
    for root, count in Counter(roots).items():
        # equal summands can only be pairwise non-isomorphic imaginary ones
        if count > 1 and tits_form(q, root) > 0:
            raise InvalidSummands(f"real root {root} listed more than once")
    arrows = []
    for i, a in enumerate(roots):
        for j, b in enumerate(roots):
            k = int(i == j) - euler_form(q, a, b)
            if k < 0:
                raise InvalidSummands(f"negative arrow count {k} from summand {i} to summand {j}")
            arrows.extend([(i, j)] * k)
    labels = tuple(names) if names else ()
    return LocalQuiver(Quiver(len(roots), tuple(arrows), labels), mults, tuple(roots))


def dv_map(lq: LocalQuiver, g: Sequence[int]) -> DimVector:
    if len(g) != lq.quiver.n_vertices:
        raise DimensionMismatch(f"vector of length {len(g)} for a local quiver on {lq.quiver.n_vertices} vertices")
    n = len(lq.back_map[0]) if lq.back_map else 0
    out = [0] * n
    for coef, root in zip(g, lq.back_map):
        for a in range(n):
            out[a] += coef * root[a]
    return tuple(out)


@dataclass(frozen=True)
class Term:
    root: DimVector
    mult: int
    kind: str  # "real" | "imaginary"


@dataclass(frozen=True)
class Decomposition:
    """Terms sorted by ``(kind, root)``; ``delta_mult`` counts the homogeneous terms."""

    delta_mult: int
    terms: tuple[Term, ...]

    def total(self, n: int) -> DimVector:
        out = [0] * n
        for t in self.terms:
            for a in range(n):
                out[a] += t.mult * t.root[a]
        return tuple(out)

    def as_counter(self) -> Counter:
        c: Counter = Counter()
        for t in self.terms:
            c[t.root] += t.mult
        return c

    def real_terms(self) -> list[Term]:
        return [t for t in self.terms if t.kind == "real"]

    def to_json(self) -> dict:
        return {
            "delta_mult": self.delta_mult,
            "terms": [{"root": list(t.root), "mult": t.mult, "kind": t.kind} for t in self.terms],
        }


def _kind(q: Quiver, root: DimVector) -> str:
    v = tits_form(q, root)
    if v == 1:
        return "real"
    if v == 0:
        return "imaginary"
    raise InternalInconsistency(f"term {root} has Tits form {v}")


@dataclass(frozen=True)
class SliceData:
    rs: RegularStructure
    canonical: CanonicalDecomp
    lq: LocalQuiver
    homogeneous: tuple[int, ...]  # local-quiver vertices carrying delta
    segments: tuple[tuple[int, ...], ...]  # equioriented paths, in arrow order


def canonical_slice(q: Quiver, alpha: Sequence[int], rs: RegularStructure | None = None) -> SliceData:
    if rs is None:
        rs = regular_simples(q)
    canon = canonical_decomposition(q, alpha, rs)
    summands: list[tuple[DimVector, int]] = [(rs.delta, 1)] * canon.p
    names = [f"d{k + 1}" for k in range(canon.p)]
    for i, c in enumerate(canon.coeffs):
        if c > 0:
            summands.append((rs.simples[i], c))
            names.append(f"e{i + 1}")
    lq = local_quiver(q, summands, names)
    homogeneous, segments = _split_components(lq.quiver)
    return SliceData(rs, canon, lq, homogeneous, segments)


def _split_components(sq: Quiver) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    seen: set[int] = set()
    homogeneous = []
    segments = []
    for v in range(sq.n_vertices):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in sq.neighbours(x):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        arrows = [(t, h) for t, h in sq.arrows if t in comp]
        if len(comp) == 1 and len(arrows) == 1:
            homogeneous.append(v)
            continue
        heads = Counter(h for _, h in arrows)
        tails = Counter(t for t, _ in arrows)
        starts = [x for x in comp if heads[x] == 0]
        if (
            len(arrows) != len(comp) - 1
            or len(starts) != 1
            or any(t == h for t, h in arrows)
            or any(c > 1 for c in heads.values())
            or any(c > 1 for c in tails.values())
        ):
            raise InternalInconsistency(f"local quiver component {sorted(comp)} is not an equioriented path")
        succ = dict(arrows)
        path = [starts[0]]
        while path[-1] in succ:
            path.append(succ[path[-1]])
        segments.append(tuple(path))
    return tuple(homogeneous), tuple(segments)


def _pipeline(
    q: Quiver, alpha: Sequence[int], algorithm: Callable[[Sequence[int]], AnDecomposition], rs: RegularStructure | None
) -> Decomposition:
    data = canonical_slice(q, alpha, rs)
    lq = data.lq
    terms: list[Term] = []
    for v in data.homogeneous:
        terms.append(Term(lq.back_map[v], lq.dims[v], _kind(q, lq.back_map[v])))
    for path in data.segments:
        piece = algorithm([lq.dims[v] for v in path])
        for iv, m in piece.terms:
            g = [0] * lq.quiver.n_vertices
            for v in path[iv.i - 1 : iv.j]:
                g[v] = 1
            root = dv_map(lq, g)
            terms.append(Term(root, m, _kind(q, root)))
    terms.sort(key=lambda t: (t.kind, t.root, t.mult))
    dec = Decomposition(data.canonical.p, tuple(terms))
    if dec.total(q.n_vertices) != tuple(alpha):
        raise InternalInconsistency("decomposition terms do not sum to the input")
    return dec


def tame_generic(q: Quiver, alpha: Sequence[int], rs: RegularStructure | None = None) -> Decomposition:
    return _pipeline(q, alpha, an_generic, rs)


def tame_generic_lss(q: Quiver, alpha: Sequence[int], rs: RegularStructure | None = None) -> Decomposition:
    return _pipeline(q, alpha, an_generic_lss, rs)
