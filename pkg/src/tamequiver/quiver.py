"""Quivers, their Euler and Tits forms, reflections and the Coxeter transformation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionMismatch, LoopAtVertex, WrongQuiverClass

DimVector = tuple[int, ...]

EXTENDED_TAGS = ("A-tilde", "D-tilde", "E6-tilde", "E7-tilde", "E8-tilde")


@dataclass(frozen=True)
class Quiver:
    """A finite quiver on vertices ``0..n_vertices-1``.

    ``labels`` are only used for I/O; all operations index vertices from 0.
    Loops and parallel arrows are allowed here and rejected by the operations
    that cannot handle them.
    """

    n_vertices: int
    arrows: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrows", tuple((int(t), int(h)) for t, h in self.arrows))
        if self.n_vertices < 0:
            raise ValueError("negative vertex count")
        for t, h in self.arrows:
            if not (0 <= t < self.n_vertices and 0 <= h < self.n_vertices):
                raise ValueError(f"arrow ({t}, {h}) has an endpoint outside [0, {self.n_vertices})")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(self.n_vertices)))
        elif len(self.labels) != self.n_vertices or len(set(self.labels)) != self.n_vertices:
            raise ValueError("labels must be distinct, one per vertex")

    @classmethod
    def from_labels(cls, labels: Sequence[str], arrows: Iterable[tuple[str, str]]) -> Quiver:
        index = {lab: i for i, lab in enumerate(labels)}
        pairs = []
        for t, h in arrows:
            if t not in index or h not in index:
                raise ValueError(f"arrow [{t!r}, {h!r}] references an unknown vertex label")
            pairs.append((index[t], index[h]))
        return cls(len(labels), tuple(pairs), tuple(labels))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def check(self, *vectors: Sequence[int]) -> None:
        for v in vectors:
            if len(v) != self.n_vertices:
                raise DimensionMismatch(f"vector of length {len(v)} for a quiver with {self.n_vertices} vertices")

    def basis(self, i: int) -> DimVector:
        return tuple(int(j == i) for j in range(self.n_vertices))

    def loops(self, v: int) -> int:
        return sum(1 for t, h in self.arrows if t == h == v)

    def edge_counts(self) -> Counter:
        """Undirected edge multiplicities keyed by sorted vertex pairs."""
        return Counter((min(t, h), max(t, h)) for t, h in self.arrows)

    def neighbours(self, v: int) -> list[int]:
        out = []
        for t, h in self.arrows:
            if t == v and h != v:
                out.append(h)
            elif h == v and t != v:
                out.append(t)
        return out


def euler_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    q.check(a, b)
    return sum(x * y for x, y in zip(a, b)) - sum(a[t] * b[h] for t, h in q.arrows)


def tits_form(q: Quiver, a: Sequence[int]) -> int:
    return euler_form(q, a, a)


def symmetric_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    return euler_form(q, a, b) + euler_form(q, b, a)


def reflect(q: Quiver, vertex: int, a: Sequence[int]) -> DimVector:
    q.check(a)
    if q.loops(vertex):
        raise LoopAtVertex(f"reflection undefined at vertex {q.labels[vertex]} (loop)")
    out = list(a)
    out[vertex] = -a[vertex] + sum(a[w] for w in q.neighbours(vertex))
    return tuple(out)


def reflection_matrix(q: Quiver, vertex: int) -> list[list[int]]:
    n = q.n_vertices
    cols = [reflect(q, vertex, q.basis(j)) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def is_acyclic(q: Quiver) -> bool:
    try:
        sink_sequence(q)
    except WrongQuiverClass:
        return False
    return True


def is_connected(q: Quiver) -> bool:
    if q.n_vertices == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in q.neighbours(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == q.n_vertices


def sink_sequence(q: Quiver) -> list[int]:
    """Admissible order: peel all current sinks (lowest index first), repeat."""
    remaining = set(range(q.n_vertices))
    order: list[int] = []
    while remaining:
        sinks = sorted(
            v for v in remaining if not any(t == v and h in remaining for t, h in q.arrows)
        )
        if not sinks:
            raise WrongQuiverClass("quiver has an oriented cycle")
        order.extend(sinks)
        remaining.difference_update(sinks)
    return order


def coxeter_matrix(q: Quiver, order: Sequence[int] | None = None) -> list[list[int]]:
    """Matrix ``C`` with ``c(a) = C a``: the reflection at the first sink is applied first."""
    if order is None:
        order = sink_sequence(q)
    n = q.n_vertices
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for v in order:
        m = linalg.matmul(reflection_matrix(q, v), m)
    return m


def apply(matrix: Sequence[Sequence[int]], a: Sequence[int]) -> DimVector:
    return tuple(sum(x * y for x, y in zip(row, a)) for row in matrix)


@dataclass(frozen=True)
class GraphClass:
    """Type of the underlying undirected graph.

    ``rank`` is the subscript (``E6-tilde`` has rank 6 and 7 vertices).
    ``order`` lists vertex indices along the matched shape: a path from one
    end for A and A-tilde (around the cycle), otherwise the branch vertex
    followed by its arms ordered by length, each arm read outwards.
    """

    tag: str
    rank: int | None = None
    order: tuple[int, ...] = ()

    @property
    def extended(self) -> bool:
        return self.tag in EXTENDED_TAGS


_STAR_TYPES = {
    (1, 2, 2): ("E6", 6),
    (1, 2, 3): ("E7", 7),
    (1, 2, 4): ("E8", 8),
    (2, 2, 2): ("E6-tilde", 6),
    (1, 3, 3): ("E7-tilde", 7),
    (1, 2, 5): ("E8-tilde", 8),
}


def _arm(adj: dict[int, list[int]], start: int, prev: int) -> list[int]:
    arm = [start]
    while len(adj[arm[-1]]) == 2:
        nxt = [w for w in adj[arm[-1]] if w != prev]
        prev = arm[-1]
        arm.append(nxt[0])
    return arm


def classify_graph(q: Quiver) -> GraphClass:
    n = q.n_vertices
    other = GraphClass("other")
    if n == 0 or not is_connected(q):
        return other
    edges = q.edge_counts()
    loops = sum(c for (a, b), c in edges.items() if a == b)
    if loops:
        if n == 1 and loops == 1:
            return GraphClass("A-tilde", 0, (0,))
        return other
    if any(c > 1 for c in edges.values()):
        if n == 2 and edges[(0, 1)] == 2:
            return GraphClass("A-tilde", 1, (0, 1))
        return other
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    deg = {v: len(adj[v]) for v in range(n)}
    if len(edges) == n:
        if all(d == 2 for d in deg.values()):
            order = [0]
            prev = None
            while len(order) < n:
                nxt = min(w for w in adj[order[-1]] if w != prev and w not in order)
                prev = order[-1]
                order.append(nxt)
            return GraphClass("A-tilde", n - 1, tuple(order))
        return other
    if len(edges) != n - 1:
        return other
    branch = sorted(v for v in range(n) if deg[v] >= 3)
    if not branch:
        if n == 1:
            return GraphClass("A", 1, (0,))
        end = min(v for v in range(n) if deg[v] == 1)
        return GraphClass("A", n, tuple(_arm(adj, end, -1)) if n > 1 else (end,))
    if len(branch) == 1:
        c = branch[0]
        arms = sorted((_arm(adj, w, c) for w in adj[c]), key=lambda arm: (len(arm), arm))
        lengths = tuple(len(a) for a in arms)
        order = (c,) + tuple(v for arm in arms for v in arm)
        if lengths == (1, 1, 1, 1):
            return GraphClass("D-tilde", 4, order)
        if len(lengths) != 3:
            return other
        if lengths[:2] == (1, 1):
            return GraphClass("D", n, order)
        if lengths in _STAR_TYPES:
            tag, r = _STAR_TYPES[lengths]
            return GraphClass(tag, r, order)
        return other
    if len(branch) == 2 and all(deg[b] == 3 for b in branch):
        b0, b1 = branch
        leaves0 = sorted(w for w in adj[b0] if deg[w] == 1)
        leaves1 = sorted(w for w in adj[b1] if deg[w] == 1)
        if len(leaves0) == 2 and len(leaves1) == 2:
            # path from b0 to b1 through the remaining neighbour
            spine = [b0]
            prev = -1
            while spine[-1] != b1:
                nxt = [w for w in adj[spine[-1]] if w != prev and deg[w] != 1]
                prev = spine[-1]
                spine.append(nxt[0])
            return GraphClass("D-tilde", n - 1, tuple(leaves0 + spine + leaves1))
    return other


def symmetrized_matrix(q: Quiver) -> list[list[int]]:
    n = q.n_vertices
    return [[symmetric_form(q, q.basis(i), q.basis(j)) for j in range(n)] for i in range(n)]


def null_root(q: Quiver) -> DimVector:
    """Positive primitive generator of the radical of the symmetrized Euler form."""
    gc = classify_graph(q)
    if not gc.extended:
        raise WrongQuiverClass(f"quiver is not extended Dynkin (type {gc.tag})")
    kernel = linalg.nullspace(symmetrized_matrix(q), q.n_vertices)
    if len(kernel) != 1:
        raise WrongQuiverClass("radical of the symmetrized form is not one-dimensional")
    delta = tuple(linalg.primitive(kernel[0]))
    if any(x <= 0 for x in delta):
        raise WrongQuiverClass("radical vector is not sincere")
    return delta


def defect(q: Quiver, a: Sequence[int], delta: Sequence[int] | None = None) -> int:
    if delta is None:
        delta = null_root(q)
    return euler_form(q, a, delta)
