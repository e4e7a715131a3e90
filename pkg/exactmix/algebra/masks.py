"""
Subset masks over observation positions.

A SubsetMask is a plain int whose bit i stands for observation position i.
Dense coefficient tables are indexed by mask value, so the number of
positions a dense table may span is capped.
"""

from collections.abc import Iterable, Iterator

from exactmix.config.defaults import DEFAULT_CONFIG, HARD_MASK_CAP
from exactmix.utils.errors import CapacityError, ConfigurationError, DomainError

SubsetMask = int

DEFAULT_MASK_CAP: int = DEFAULT_CONFIG["mask_cap"]


def check_capacity(n: int, cap: int | None = None) -> None:
    """Refuse dense tables over more than ``cap`` positions.

    Raises:
        CapacityError: n is above the cap
        ConfigurationError: the cap itself is above HARD_MASK_CAP
    """
    cap = DEFAULT_MASK_CAP if cap is None else cap
    if cap < 0 or cap > HARD_MASK_CAP:
        raise ConfigurationError(f"mask cap {cap} outside [0, {HARD_MASK_CAP}]")
    if n < 0:
        raise DomainError(f"negative variable count {n}")
    if n > cap:
        raise CapacityError(
            f"{n} observation positions exceed the mask cap of {cap} "
            f"(dense tables need 2^{n} entries)"
        )


def mask_of(positions: Iterable[int]) -> SubsetMask:
    mask = 0
    for i in positions:
        mask |= 1 << i
    return mask


def positions_of(mask: SubsetMask) -> list[int]:
    """Positions of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: SubsetMask) -> int:
    return mask.bit_count()


def full_mask(n: int) -> SubsetMask:
    return (1 << n) - 1


def submasks(mask: SubsetMask, include_empty: bool = True) -> Iterator[SubsetMask]:
    """Yield every submask of ``mask`` in descending order."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask
    if include_empty:
        yield 0


def check_in_range(mask: SubsetMask, n: int) -> None:
    if mask < 0 or mask >> n:
        raise DomainError(f"mask {mask:#b} uses positions outside 0..{n - 1}")
