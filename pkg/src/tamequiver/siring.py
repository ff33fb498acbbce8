"""Shape of the algebra of SL(alpha)-invariants on R(Q, alpha) for a tame quiver.

Generators are reported as weight descriptors, not as polynomials:

* ``simple``: the determinantal invariant of a regular simple ``E_i``,
* ``arc``: the product of the ``E_i`` invariants along an extended arc,
* ``delta``: one of the needed invariants of weight sigma (defect weight).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalInconsistency
from .quiver import DimVector, Quiver, euler_form
from .regular import (
    RegularStructure,
    arc_candidates,
    canonical_decomposition,
    regular_simples,
)
from .slice import Decomposition, tame_generic_lss

SYZYGY = "c_1P_1+c_2P_2+c_3P_3=0"


def weight_of(q: Quiver, e: Sequence[int]) -> DimVector:
    """Weight ``-<., e>`` of the semi-invariant attached to a representation of dimension ``e``."""
    q.check(e)
    return tuple(-euler_form(q, q.basis(a), e) for a in range(q.n_vertices))


@dataclass(frozen=True)
class Arc:
    """Consecutive run ``start, next(start), ...`` of ``length`` simples inside one orbit."""

    orbit: int
    start: int
    length: int
    end: int

    @classmethod
    def make(cls, rs: RegularStructure, start: int, length: int) -> Arc:
        return cls(rs.orbit_of(start), start, length, rs.arc(start, length)[-1])

    def elements(self, rs: RegularStructure) -> list[int]:
        return rs.arc(self.start, self.length)

    def root(self, rs: RegularStructure) -> DimVector:
        return rs.arc_sum(self.start, self.length)

    def extended_root(self, rs: RegularStructure) -> DimVector:
        """``e_{k, n(l)}``: the arc prolonged by one step past its end."""
        return rs.arc_sum(self.start, self.length + 1)

    def to_json(self) -> dict:
        return {"orbit": self.orbit + 1, "start": self.start + 1, "length": self.length, "end": self.end + 1}

    @classmethod
    def from_json(cls, d: dict) -> Arc:
        return cls(d["orbit"] - 1, d["start"] - 1, d["length"], d["end"] - 1)

    def label(self) -> str:
        if self.length == 1:
            return f"[e{self.start + 1}]"
        return f"[e{self.start + 1}..e{self.end + 1}]"


def _inside_interior(inner: list[int], outer: list[int]) -> bool:
    return set(inner) <= set(outer[1:-1])


def omega_arcs(lss: Decomposition, rs: RegularStructure) -> list[tuple[Arc, int]]:
    candidates = arc_candidates(rs)
    out = []
    for term in lss.real_terms():
        found = candidates.get(term.root, [])
        if len(found) != 1:
            raise InternalInconsistency(f"real term {term.root} matches {len(found)} arcs")
        out.append((Arc.make(rs, *found[0]), term.mult))
    out.sort(key=lambda am: (am[0].orbit, rs.orbits[am[0].orbit].index(am[0].start), am[0].length))
    for x, (a, ma) in enumerate(out):
        ea = a.elements(rs)
        for b, mb in out[x + 1 :]:
            if a.orbit != b.orbit:
                continue
            eb = b.elements(rs)
            if set(ea) & set(eb) and not (_inside_interior(ea, eb) or _inside_interior(eb, ea)):
                raise InternalInconsistency(f"arcs {a.label()} and {b.label()} overlap without nesting")
            if (rs.next[a.end] == b.start or rs.next[b.end] == a.start) and ma == mb:
                raise InternalInconsistency(f"adjacent arcs {a.label()} and {b.label()} share multiplicity {ma}")
    return out


def delta_arcs(omega: Sequence[tuple[Arc, int]], rs: RegularStructure) -> tuple[list[Arc], list[int]]:
    """Merge chains of adjacent Omega arcs; also return the endpoint set J.

    Arcs are merged only when one starts right after another ends, so an arc
    nested in the interior of another keeps its own entry.
    """
    arcs = [a for a, _ in omega]
    by_start = {a.start: a for a in arcs}
    has_pred = {by_start[rs.next[a.end]].start for a in arcs if rs.next[a.end] in by_start}
    merged = []
    for a in arcs:
        if a.start in has_pred:
            continue
        length = a.length
        cur = a
        while rs.next[cur.end] in by_start:
            cur = by_start[rs.next[cur.end]]
            length += cur.length
            if length >= len(rs.orbits[a.orbit]):
                raise InternalInconsistency("adjacent arcs wrap a whole orbit")
        merged.append(Arc.make(rs, a.start, length))
    merged.sort(key=lambda a: (a.orbit, rs.orbits[a.orbit].index(a.start), a.length))
    endpoints = sorted({x for a in arcs for x in (a.start, rs.next[a.end])})
    return merged, endpoints


@dataclass(frozen=True)
class Generator:
    kind: str  # "simple" | "arc" | "delta"
    root: DimVector
    weight: DimVector
    simple: int | None = None
    arc: Arc | None = None
    index: int | None = None
    note: str | None = None

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.simple is not None:
            d["simple"] = self.simple + 1
        if self.arc is not None:
            d["arc"] = self.arc.to_json()
        if self.index is not None:
            d["index"] = self.index
        d["root"] = list(self.root)
        d["weight"] = list(self.weight)
        if self.note is not None:
            d["note"] = self.note
        return d

    @classmethod
    def from_json(cls, d: dict) -> Generator:
        return cls(
            kind=d["kind"],
            root=tuple(d["root"]),
            weight=tuple(d["weight"]),
            simple=d["simple"] - 1 if "simple" in d else None,
            arc=Arc.from_json(d["arc"]) if "arc" in d else None,
            index=d.get("index"),
            note=d.get("note"),
        )

    def label(self) -> str:
        if self.kind == "simple":
            return f"c(E{self.simple + 1})"
        if self.kind == "arc":
            return f"prod c(E) over {self.arc.label()} extended"
        return f"f{self.index}"


@dataclass(frozen=True)
class RingReport:
    case: str  # "polynomial" | "hypersurface"
    alpha: DimVector
    p: int
    n: int
    n_o: int
    krull_dim: int | None
    generators: tuple[Generator, ...] = ()
    syzygy: str | None = None
    lambda_weights: tuple[DimVector, ...] = ()
    omega: tuple[tuple[Arc, int], ...] = ()
    delta_arcs: tuple[Arc, ...] = ()
    J: tuple[int, ...] = ()
    redundant: tuple[Generator, ...] = ()
    note: str | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "alpha": list(self.alpha),
            "p": self.p,
            "n": self.n,
            "n_o": self.n_o,
            "krull_dim": self.krull_dim,
            "generators": [g.to_json() for g in self.generators],
            "syzygy": self.syzygy,
            "lambda_weights": [list(w) for w in self.lambda_weights],
            "omega": [{"arc": a.to_json(), "mult": m} for a, m in self.omega],
            "delta_arcs": [a.to_json() for a in self.delta_arcs],
            "J": [j + 1 for j in self.J],
            "redundant": [g.to_json() for g in self.redundant],
            "note": self.note,
        }

    @classmethod
    def from_json(cls, d: dict) -> RingReport:
        return cls(
            case=d["case"],
            alpha=tuple(d["alpha"]),
            p=d["p"],
            n=d["n"],
            n_o=d["n_o"],
            krull_dim=d["krull_dim"],
            generators=tuple(Generator.from_json(g) for g in d["generators"]),
            syzygy=d["syzygy"],
            lambda_weights=tuple(tuple(w) for w in d["lambda_weights"]),
            omega=tuple((Arc.from_json(o["arc"]), o["mult"]) for o in d["omega"]),
            delta_arcs=tuple(Arc.from_json(a) for a in d["delta_arcs"]),
            J=tuple(j - 1 for j in d["J"]),
            redundant=tuple(Generator.from_json(g) for g in d["redundant"]),
            note=d["note"],
        )


def ring_report(q: Quiver, alpha: Sequence[int], rs: RegularStructure | None = None) -> RingReport:
    if rs is None:
        rs = regular_simples(q)
    alpha = tuple(int(x) for x in alpha)
    canon = canonical_decomposition(q, alpha, rs)
    n = q.n_vertices - 1
    p = canon.p
    if p == 0:
        return RingReport(
            case="polynomial",
            alpha=alpha,
            p=0,
            n=n,
            n_o=rs.n_o,
            krull_dim=None,
            note="no homogeneous part: R(Q, alpha) has a dense orbit, so the invariant algebra is "
            "polynomial; generators are not computed",
        )
    lss = tame_generic_lss(q, alpha, rs)
    omega = omega_arcs(lss, rs)
    merged, J = delta_arcs(omega, rs)
    sigma_weight = weight_of(q, rs.delta)

    generators: list[Generator] = []
    for i in range(len(rs.simples)):
        if i not in J:
            generators.append(Generator("simple", rs.simples[i], weight_of(q, rs.simples[i]), simple=i))
    for arc in merged:
        ext = arc.extended_root(rs)
        generators.append(Generator("arc", ext, weight_of(q, ext), arc=arc))
    lambda_weights = tuple(g.weight for g in generators)
    for k in range(max(p + 1 - rs.n_o, 0)):
        generators.append(Generator("delta", rs.delta, sigma_weight, index=k))

    zeros = [sum(1 for i in orb if canon.coeffs[i] == 0) for orb in rs.orbits]
    hypersurface = p == 1 and rs.n_o == 3 and all(z >= 2 for z in zeros)
    redundant: list[Generator] = []
    if p == 1 and rs.n_o == 3 and not hypersurface:
        for x, g in enumerate(generators):
            if g.kind == "arc" and g.root == rs.delta:
                j = g.arc.orbit + 1
                redundant.append(Generator(g.kind, g.root, g.weight, arc=g.arc, note=f"equals P_{j}"))
                del generators[x]
                break
        else:
            raise InternalInconsistency("expected an arc generator equal to an orbit product")

    krull = n + p - len(omega)
    report = RingReport(
        case="hypersurface" if hypersurface else "polynomial",
        alpha=alpha,
        p=p,
        n=n,
        n_o=rs.n_o,
        krull_dim=krull,
        generators=tuple(generators),
        syzygy=SYZYGY if hypersurface else None,
        lambda_weights=lambda_weights,
        omega=tuple(omega),
        delta_arcs=tuple(merged),
        J=tuple(J),
        redundant=tuple(redundant),
    )
    excess = len(generators) - krull
    if excess != int(hypersurface):
        raise InternalInconsistency(f"{len(generators)} generators for Krull dimension {krull}")
    return report
