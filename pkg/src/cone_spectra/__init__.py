"""Spectral extremal graphs of t-cone c-cyclic graphs with a prescribed degree sequence."""

__version__ = "0.1.0"

from .construct import maximal_cone_graph, maximal_construction, maximal_for
from .degseq import ConeDegreeSequence, classify, enumerate_sequences, star_chain
from .enumeration import oracle_maximal, realize_all
from .graph import ConeGraph, LabeledGraph, join_cone
from .report import TheoremReport, Verdict
from .spectral import PerronResult, theta

__all__ = [
    "ConeDegreeSequence",
    "ConeGraph",
    "LabeledGraph",
    "PerronResult",
    "TheoremReport",
    "Verdict",
    "__version__",
    "classify",
    "enumerate_sequences",
    "join_cone",
    "maximal_cone_graph",
    "maximal_construction",
    "maximal_for",
    "oracle_maximal",
    "realize_all",
    "star_chain",
    "theta",
]
