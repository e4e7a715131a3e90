"""Problem instances and their subset moments."""

from .types import Model, MomentTable, ObservationSeq
from .moments import cause_block_products, cause_subset_products, moments, support, supports
from .transforms import scaled_alpha, subdivide_cause, with_virtual_observation
from .generators import block_sparse_instance, chain_instance, random_instance

__all__ = [
    'Model', 'MomentTable', 'ObservationSeq', 'cause_block_products',
    'cause_subset_products', 'moments', 'support', 'supports',
    'scaled_alpha', 'subdivide_cause', 'with_virtual_observation',
    'block_sparse_instance', 'chain_instance', 'random_instance',
]
