"""Independent brute-force references for p~ and the permanent."""

from .enumeration import brute_force_ptilde, pochhammer_table
from .partitions import bell_number, partition_ptilde, set_partitions
from .factor_product import factor_product_ptilde
from .permanent import permanent

__all__ = [
    'brute_force_ptilde', 'pochhammer_table', 'bell_number',
    'partition_ptilde', 'set_partitions', 'factor_product_ptilde', 'permanent',
]
