"""Domain models package."""

from .family import FamilyName, FamilySpec
from .graph import MAX_VERTICES, Graph, GraphError, VertexSet, full_mask, iter_bits
from .report import (
    AnalysisReport,
    ConjectureSummary,
    CounterexampleRecord,
    ErrorRecord,
    FastJoinFlags,
)
from .results import FamilyKind, ForcingReport, FortFamily, PropagationRecord, PtSet, SetFamily
from .rule import Rule
from .tree import ConstructionTree, NodeKind
from .verdicts import (
    ComponentShape,
    ConjectureVerdict,
    DominatedPair,
    FastJoinVerdict,
    Pattern,
    PatternEmbedding,
    ShapeKind,
    SlowSetWitness,
    Twin,
    TwinKind,
)

__all__ = [
    "AnalysisReport",
    "ComponentShape",
    "ConjectureSummary",
    "ConjectureVerdict",
    "ConstructionTree",
    "CounterexampleRecord",
    "DominatedPair",
    "ErrorRecord",
    "FamilyKind",
    "FamilyName",
    "FamilySpec",
    "FastJoinFlags",
    "FastJoinVerdict",
    "ForcingReport",
    "FortFamily",
    "Graph",
    "GraphError",
    "MAX_VERTICES",
    "NodeKind",
    "Pattern",
    "PatternEmbedding",
    "PropagationRecord",
    "PtSet",
    "Rule",
    "SetFamily",
    "ShapeKind",
    "SlowSetWitness",
    "Twin",
    "TwinKind",
    "VertexSet",
    "full_mask",
    "iter_bits",
]
