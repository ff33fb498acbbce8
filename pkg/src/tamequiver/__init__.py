"""Decompositions and semi-invariants of tame (extended Dynkin) quivers."""

from __future__ import annotations

from .an import (
    AnDecomposition,
    Interval,
    an_ext_dim,
    an_generic,
    an_generic_lss,
    an_hom_dim,
    an_is_lss,
)
from .errors import (
    DimensionMismatch,
    EulerNonzero,
    InternalInconsistency,
    LoopAtVertex,
    NotRegular,
    QuiverError,
    RetryExhausted,
    WrongQuiverClass,
)
from .quiver import (
    Quiver,
    classify_graph,
    coxeter_matrix,
    defect,
    euler_form,
    null_root,
    reflect,
    tits_form,
)
from .regular import (
    CanonicalDecomp,
    RegularStructure,
    canonical_decomposition,
    eq_quiver,
    regular_simples,
)
from .siring import RingReport, ring_report, weight_of
from .slice import Decomposition, dv_map, local_quiver, tame_generic, tame_generic_lss

__version__ = "0.1.0"

__all__ = [
    "AnDecomposition",
    "CanonicalDecomp",
    "Decomposition",
    "DimensionMismatch",
    "EulerNonzero",
    "InternalInconsistency",
    "Interval",
    "LoopAtVertex",
    "NotRegular",
    "Quiver",
    "QuiverError",
    "RegularStructure",
    "RetryExhausted",
    "RingReport",
    "WrongQuiverClass",
    "an_ext_dim",
    "an_generic",
    "an_generic_lss",
    "an_hom_dim",
    "an_is_lss",
    "canonical_decomposition",
    "classify_graph",
    "coxeter_matrix",
    "defect",
    "dv_map",
    "eq_quiver",
    "euler_form",
    "local_quiver",
    "null_root",
    "reflect",
    "regular_simples",
    "ring_report",
    "tame_generic",
    "tame_generic_lss",
    "tits_form",
    "weight_of",
]
