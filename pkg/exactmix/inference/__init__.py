"""Exact inference: dense subset lattice and tree-decomposition elimination."""

from .results import InferenceResult
from .dense import (
    factorial_table,
    log_pochhammer,
    pochhammer,
    posterior_mean,
    probability,
    ptilde_all,
)
from .graph import InteractionGraph, interaction_graph
from .decomposition import (
    TreeDecomposition,
    ValidationReport,
    Violation,
    describe_decomposition,
    reroot,
    topological_order,
    tree_decompose,
    validate_decomposition,
)
from .sparse import (
    SparseContext,
    build_sparse_context,
    sparse_coefficient,
    sparse_posterior_mean,
    sparse_probability,
)

__all__ = [
    'InferenceResult', 'factorial_table', 'log_pochhammer', 'pochhammer',
    'posterior_mean', 'probability', 'ptilde_all', 'InteractionGraph',
    'interaction_graph', 'TreeDecomposition', 'ValidationReport', 'Violation',
    'describe_decomposition', 'reroot', 'topological_order', 'tree_decompose',
    'validate_decomposition', 'SparseContext', 'build_sparse_context',
    'sparse_coefficient', 'sparse_posterior_mean', 'sparse_probability',
]
