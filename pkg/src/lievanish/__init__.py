"""Exact root-system combinatorics for low-degree cohomology of finite Chevalley groups.

Weights are tuples of fundamental-weight coordinates; partition targets are
in simple-root coordinates. All arithmetic is exact.
"""

from __future__ import annotations

from .cohomology import (
    CertificateStatus,
    CohomRecord,
    Decomposition,
    DegreeBoundReport,
    PrimeTooSmall,
    ZeroMu,
    candidates,
    cohom_dim,
    decompose,
    decompositions_for_mu,
    degree_bounds,
    least_nonvanishing,
    min_parts,
    nonvanishing_certificate,
    parts_lower_bound,
)
from .kostant import PartitionQuery, alternating_sum, count, count_oracle
from .report import TableReport, TableRow
from .rootsys import InvalidRank, Root, RootSystem, UnsupportedType, Weight, build
from .tables import TABLE_IDS, UnknownTable, reproduce_table
from .theorems import BoundResult, OutOfTheoremScope, theorem_bound
from .weyl import WeylElement, dot, enumerate_group, inversion_set, linked

__version__ = "0.1.0"

__all__ = [
    "CertificateStatus", "CohomRecord", "Decomposition", "DegreeBoundReport", "PrimeTooSmall",
    "ZeroMu", "candidates", "cohom_dim", "decompose", "decompositions_for_mu", "degree_bounds",
    "least_nonvanishing", "min_parts", "nonvanishing_certificate", "parts_lower_bound",
    "PartitionQuery", "alternating_sum", "count", "count_oracle", "TableReport", "TableRow",
    "InvalidRank", "Root", "RootSystem", "UnsupportedType", "Weight", "build", "TABLE_IDS",
    "UnknownTable", "reproduce_table", "BoundResult", "OutOfTheoremScope", "theorem_bound",
    "WeylElement", "dot", "enumerate_group", "inversion_set", "linked",
]
