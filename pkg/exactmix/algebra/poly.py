"""
Dense polynomials modulo squared variables.

An element of R[X_0..X_{n-1}]/(X_0^2, ..., X_{n-1}^2) is stored as a float64
table of 2^n coefficients, entry M holding the coefficient of X^M. Kernels view
the table as an n-dimensional (2, ..., 2) array: bit i of the mask is axis
n-1-i, so "all masks with J set and K clear" is a basic slice and the update
for a whole family of masks is a single numpy operation.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from exactmix.algebra.masks import (
    SubsetMask,
    check_capacity,
    check_in_range,
    full_mask,
    positions_of,
)
from exactmix.utils.errors import DomainError


@dataclass(frozen=True, eq=False)
class TruncatedPoly:
    """Element of the algebra in n variables with squared variables set to zero.

    Attributes:
        n: number of variables
        coeff: read-only float64 array of length 2^n
    """
    n: int
    coeff: np.ndarray

    def __post_init__(self):
        if self.coeff.shape != (1 << self.n,):
            raise DomainError(
                f"coefficient table of shape {self.coeff.shape} does not match n={self.n}"
            )
        self.coeff.setflags(write=False)

    def __mul__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        return poly_mul(self, other)

    def __getitem__(self, mask: SubsetMask) -> float:
        return coefficient(self, mask)

    def __repr__(self) -> str:
        terms = [f"{c:g}*X{positions_of(m)}" for m, c in enumerate(self.coeff) if c != 0.0]
        return f"TruncatedPoly(n={self.n}, {' + '.join(terms) or '0'})"


def _wrap(n: int, coeff: np.ndarray) -> TruncatedPoly:
    return TruncatedPoly(n, coeff)


def _slot(n: int, ones: SubsetMask = 0, zeros: SubsetMask = 0) -> tuple:
    """Index tuple into the (2,)*n view fixing bits of ``ones`` to 1 and ``zeros`` to 0."""
    index = []
    for axis in range(n):
        bit = 1 << (n - 1 - axis)
        if ones & bit:
            index.append(1)
        elif zeros & bit:
            index.append(0)
        else:
            index.append(slice(None))
    return tuple(index)


def _cube(coeff: np.ndarray, n: int) -> np.ndarray:
    return coeff.reshape((2,) * n)


def poly_one(n: int, cap: int | None = None) -> TruncatedPoly:
    """Multiplicative identity in n variables."""
    check_capacity(n, cap)
    coeff = np.zeros(1 << n)
    coeff[0] = 1.0
    return _wrap(n, coeff)


def poly_zero(n: int, cap: int | None = None) -> TruncatedPoly:
    check_capacity(n, cap)
    return _wrap(n, np.zeros(1 << n))


def poly_from_terms(n: int, terms: Mapping[SubsetMask, float], cap: int | None = None) -> TruncatedPoly:
    """Build a polynomial from {mask: coefficient}."""
    check_capacity(n, cap)
    coeff = np.zeros(1 << n)
    for mask, value in terms.items():
        check_in_range(mask, n)
        coeff[mask] += value
    return _wrap(n, coeff)


def poly_from_array(n: int, values: Sequence[float] | np.ndarray, cap: int | None = None) -> TruncatedPoly:
    check_capacity(n, cap)
    return _wrap(n, np.array(values, dtype=np.float64))


def mul_affine_inplace(coeff: np.ndarray, n: int, J: SubsetMask, c: float) -> None:
    """Multiply the table in place by (1 + c X^J).

    Only masks disjoint from J are read and only masks containing J are
    written, so the update never reads a slot it has already written.
    """
    cube = _cube(coeff, n)
    cube[_slot(n, ones=J)] += c * cube[_slot(n, zeros=J)]


def mul_affine(p: TruncatedPoly, J: SubsetMask, c: float) -> TruncatedPoly:
    """Return p * (1 + c X^J).

    Raises:
        DomainError: J is empty or outside p's variables
    """
    if J == 0:
        raise DomainError("affine factor needs a nonempty subset J")
    check_in_range(J, p.n)
    coeff = p.coeff.copy()
    mul_affine_inplace(coeff, p.n, J, c)
    return _wrap(p.n, coeff)


def poly_mul(p: TruncatedPoly, q: TruncatedPoly) -> TruncatedPoly:
    """Disjoint-subset convolution r[M] = sum_{A u B = M, A n B = 0} p[A] q[B]."""
    if p.n != q.n:
        raise DomainError(f"cannot multiply polynomials in {p.n} and {q.n} variables")
    n = p.n
    out = np.zeros(1 << n)
    cube = _cube(out, n)
    q_cube = _cube(q.coeff, n)
    for a in np.flatnonzero(p.coeff).tolist():
        cube[_slot(n, ones=a)] += p.coeff[a] * q_cube[_slot(n, zeros=a)]
    return _wrap(n, out)


def coefficient(p: TruncatedPoly, M: SubsetMask) -> float:
    check_in_range(M, p.n)
    return float(p.coeff[M])


def select_variables(p: TruncatedPoly, required: SubsetMask, forbidden: SubsetMask) -> TruncatedPoly:
    """Keep monomials containing ``required`` and avoiding ``forbidden``, divide by X^required.

    The result lives in the algebra of the remaining variables, renumbered
    0..k-1 in ascending order of their original positions.
    """
    if required & forbidden:
        raise DomainError(
            f"required {required:#b} and forbidden {forbidden:#b} overlap"
        )
    check_in_range(required | forbidden, p.n)
    remaining = full_mask(p.n) & ~(required | forbidden)
    k = remaining.bit_count()
    picked = _cube(p.coeff, p.n)[_slot(p.n, ones=required, zeros=forbidden)]
    return _wrap(k, np.ascontiguousarray(picked, dtype=np.float64).reshape(1 << k))


def embed_variables(p: TruncatedPoly, positions: Sequence[int], n: int) -> TruncatedPoly:
    """Place p into the algebra in n variables, variable i going to ``positions[i]``."""
    if len(positions) != p.n or len(set(positions)) != p.n:
        raise DomainError(f"need {p.n} distinct target positions, got {list(positions)}")
    target = 0
    for pos in positions:
        if pos < 0 or pos >= n:
            raise DomainError(f"target position {pos} outside 0..{n - 1}")
        target |= 1 << pos
    out = np.zeros(1 << n)
    if p.n == 0:
        out[0] = p.coeff[0]
        return _wrap(n, out)
    # axes of the target slice run over target positions in descending order
    order = sorted(range(p.n), key=lambda i: -positions[i])
    source = _cube(p.coeff, p.n).transpose([p.n - 1 - i for i in order])
    _cube(out, n)[_slot(n, zeros=full_mask(n) & ~target)] = source
    return _wrap(n, out)


def restrict_and_divide(p: TruncatedPoly, required: SubsetMask, forbidden: SubsetMask) -> TruncatedPoly:
    """Filter monomials by ``required``/``forbidden`` and divide by X^required.

    The result stays in p's algebra and only uses variables outside
    required | forbidden.
    """
    selected = select_variables(p, required, forbidden)
    remaining = full_mask(p.n) & ~(required | forbidden)
    return embed_variables(selected, positions_of(remaining), p.n)


def multiply_monomial(p: TruncatedPoly, M: SubsetMask) -> TruncatedPoly:
    """Return p * X^M (monomials sharing a variable with M vanish)."""
    check_in_range(M, p.n)
    out = np.zeros(1 << p.n)
    cube = _cube(out, p.n)
    cube[_slot(p.n, ones=M)] = _cube(p.coeff, p.n)[_slot(p.n, zeros=M)]
    return _wrap(p.n, out)
