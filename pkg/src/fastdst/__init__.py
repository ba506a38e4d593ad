"""Recursive radix-2 discrete sine transforms (types I-IV).

The transforms are built entirely from sparse scaled-orthogonal factors
(butterflies, a rotation-reflection, a mixer, and permutations), report
exact operation counts that match their closed-form complexity, and ship
with a dense definition-based oracle, a sparse-factor materializer, and
a signal-flow-graph generator for cross-validation.
"""

__version__ = "0.1.0"

from . import errors
from .counts import CountFormulaResult, CountRow, count_table, formula_counts, recurrence_counts
from .flowgraph import FlowGraph, build_flowgraph, evaluate_flowgraph, export_dot
from .kernels import OpCount, RotationConstants, rotation_constants
from .oracle import (
    SparseFactor,
    build_kernel_matrix,
    build_matrix,
    factor_product,
    materialize_factors,
    matvec,
)
from .transforms import (
    ScaleMode,
    TransformKind,
    TransformPlan,
    dst1_scaled,
    dst2_scaled,
    dst3_scaled,
    dst4_scaled,
    dst_scaled,
    dst_unitary,
    idst_unitary,
    unitary_scale_count,
)

__all__ = [
    "CountFormulaResult",
    "CountRow",
    "FlowGraph",
    "OpCount",
    "RotationConstants",
    "ScaleMode",
    "SparseFactor",
    "TransformKind",
    "TransformPlan",
    "build_flowgraph",
    "build_kernel_matrix",
    "build_matrix",
    "count_table",
    "dst1_scaled",
    "dst2_scaled",
    "dst3_scaled",
    "dst4_scaled",
    "dst_scaled",
    "dst_unitary",
    "errors",
    "evaluate_flowgraph",
    "export_dot",
    "factor_product",
    "formula_counts",
    "idst_unitary",
    "materialize_factors",
    "matvec",
    "recurrence_counts",
    "rotation_constants",
    "unitary_scale_count",
]
