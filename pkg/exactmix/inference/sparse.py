"""
Exact inference along a tree decomposition of the interaction graph.

Only subsets J inside a single cause's support have <beta_J> != 0, and each
such J is a clique of the interaction graph, so it fits in some bag. Every bag
gets the product of the affine factors assigned to it, written over the bag's
own variables. Bags are then folded into their parents leaves first: variables
a bag loses on the way to its parent never come back (running intersection),
so their fate in the target monomial is settled right there.
"""

import math
import time
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from exactmix.algebra.masks import SubsetMask, check_capacity, full_mask, positions_of
from exactmix.algebra.poly import (
    TruncatedPoly,
    coefficient,
    embed_variables,
    mul_affine_inplace,
    poly_mul,
    select_variables,
)
from exactmix.inference.decomposition import (
    TreeDecomposition,
    check_elimination_order,
    topological_order,
    tree_decompose,
)
from exactmix.inference.dense import factorial_table, log_pochhammer, pochhammer
from exactmix.inference.graph import interaction_graph
from exactmix.inference.results import InferenceResult
from exactmix.model.moments import supports
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.errors import DecompositionMismatchError, DegenerateEvidenceError, DomainError
from exactmix.utils.logger import logger


def _compress(mask: SubsetMask, positions: list[int]) -> SubsetMask:
    """Re-express ``mask`` in the local numbering given by ``positions``."""
    local = 0
    for k, pos in enumerate(positions):
        if mask >> pos & 1:
            local |= 1 << k
    return local


def _local_products(rows: np.ndarray, positions: list[int], causes: list[int]) -> tuple[np.ndarray, list[SubsetMask]]:
    """Products over the submasks of one support, for a group of causes sharing it.

    Returns the 2^k x c product block and, per local submask, the global mask.
    """
    k = len(positions)
    block = np.empty((1 << k, len(causes)))
    block[0] = 1.0
    global_masks = [0] * (1 << k)
    for i, pos in enumerate(positions):
        half = 1 << i
        np.multiply(block[:half], rows[pos, causes], out=block[half:2 * half])
        for s in range(half):
            global_masks[half + s] = global_masks[s] | (1 << pos)
    return block, global_masks


def _group_by_support(masks: list[SubsetMask]) -> dict[SubsetMask, list[int]]:
    groups: dict[SubsetMask, list[int]] = defaultdict(list)
    for z, mask in enumerate(masks):
        groups[mask].append(z)
    return groups


@dataclass
class SparseContext:
    """Bag-local factor products for one (model, observations, decomposition, eps).

    Target-independent; ``coefficient`` folds the bags for a given target and
    memoizes the result by target mask.
    """
    n: int
    td: TreeDecomposition
    bag_positions: list[list[int]]
    local_polys: list[TruncatedPoly]
    order: list[int]
    memo: dict[SubsetMask, float] = field(default_factory=dict)

    def coefficient(self, target: SubsetMask) -> float:
        if target < 0 or target >> self.n:
            raise DomainError(f"target {target:#b} uses positions outside 0..{self.n - 1}")
        if target not in self.memo:
            self.memo[target] = self._eliminate(target)
        return self.memo[target]

    def _eliminate(self, target: SubsetMask) -> float:
        bags = self.td.bags
        polys = list(self.local_polys)
        for t in self.order:
            s = self.td.parent[t]
            if s is None:
                continue
            lost = bags[t] & ~bags[s]
            here = self.bag_positions[t]
            residue = select_variables(
                polys[t],
                required=_compress(lost & target, here),
                forbidden=_compress(lost & ~target, here),
            )
            # remaining local variables are the shared positions, ascending
            there = self.bag_positions[s]
            slots = [there.index(pos) for pos in positions_of(bags[t] & bags[s])]
            lifted = embed_variables(residue, slots, len(there))
            polys[s] = poly_mul(lifted, polys[s])
        root = self.td.root
        return coefficient(polys[root], _compress(bags[root] & target, self.bag_positions[root]))


def build_sparse_context(
    model: Model,
    obs: ObservationSeq,
    td: TreeDecomposition,
    eps: float = 0.0,
    cap: int | None = None,
    order: list[int] | None = None,
) -> SparseContext:
    """Compute <beta_J> for the contributing J, assign each to a bag, build bag products.

    Raises:
        DecompositionMismatchError: a contributing J fits in no bag
    """
    if eps < 0:
        raise DomainError(f"eps must be non-negative, got {eps}")
    n = obs.n
    rows = obs.emission_rows(model)
    for t, bag in enumerate(td.bags):
        if bag >> n:
            raise DecompositionMismatchError(f"bag {t} names positions beyond {n - 1}")
        check_capacity(bag.bit_count(), cap)

    moments: dict[SubsetMask, float] = defaultdict(float)
    for mask, causes in _group_by_support(supports(model, obs, eps)).items():
        if not mask:
            continue
        block, global_masks = _local_products(rows, positions_of(mask), causes)
        sums = block @ model.alpha[causes]
        for s in range(1, len(global_masks)):
            moments[global_masks[s]] += float(sums[s])

    bag_positions = [positions_of(bag) for bag in td.bags]
    assigned: list[list[SubsetMask]] = [[] for _ in td.bags]
    for J in sorted(moments):
        if moments[J] == 0.0:
            continue
        t = next((t for t, bag in enumerate(td.bags) if J & ~bag == 0), None)
        if t is None:
            raise DecompositionMismatchError(
                f"subset {positions_of(J)} fits in no bag; the decomposition does not match eps={eps}"
            )
        assigned[t].append(J)

    gamma = factorial_table(max(n - 1, 0))
    local_polys = []
    for t, positions in enumerate(bag_positions):
        k = len(positions)
        coeff = np.zeros(1 << k)
        coeff[0] = 1.0
        for J in assigned[t]:
            mul_affine_inplace(coeff, k, _compress(J, positions), moments[J] * gamma[J.bit_count() - 1])
        local_polys.append(TruncatedPoly(k, coeff))

    if order is None:
        order = topological_order(td)
    else:
        check_elimination_order(td, list(order))
    logger.debug(
        f"sparse context: n={n} bags={len(td.bags)} width={td.width} subsets={len(moments)} eps={eps}"
    )
    return SparseContext(n, td, bag_positions, local_polys, list(order))


def _resolve_decomposition(model: Model, obs: ObservationSeq, td: TreeDecomposition | None, eps: float) -> TreeDecomposition:
    return td if td is not None else tree_decompose(interaction_graph(model, obs, eps))


def sparse_coefficient(
    model: Model,
    obs: ObservationSeq,
    td: TreeDecomposition | None,
    target: SubsetMask,
    eps: float = 0.0,
    cap: int | None = None,
    order: list[int] | None = None,
) -> float:
    """p~(target) by elimination along ``td`` (built by min-fill when None)."""
    td = _resolve_decomposition(model, obs, td, eps)
    return build_sparse_context(model, obs, td, eps, cap, order).coefficient(target)


def _diagnostics(td: TreeDecomposition, eps: float, n: int, m: int) -> dict:
    return {
        "n": n,
        "m": m,
        "width": td.width,
        "bags": len(td.bags),
        "eps": eps,
        "approximate": eps > 0,
    }


def sparse_probability(
    model: Model,
    obs: ObservationSeq,
    td: TreeDecomposition | None = None,
    eps: float = 0.0,
    cap: int | None = None,
) -> InferenceResult:
    """Evidence p(w) via the tree decomposition; no posterior means."""
    model.require_statistical("sparse_probability")
    td = _resolve_decomposition(model, obs, td, eps)
    context = build_sparse_context(model, obs, td, eps, cap)
    evidence = context.coefficient(full_mask(obs.n))
    alpha_total = model.alpha_total
    return InferenceResult(
        method="sparse",
        ptilde_full=evidence,
        probability=evidence / pochhammer(alpha_total, obs.n),
        log_probability=(math.log(evidence) if evidence > 0 else -math.inf) - log_pochhammer(alpha_total, obs.n),
        diagnostics=_diagnostics(td, eps, obs.n, model.m),
    )


def sparse_posterior_mean(
    model: Model,
    obs: ObservationSeq,
    td: TreeDecomposition | None = None,
    eps: float = 0.0,
    cap: int | None = None,
) -> InferenceResult:
    """E[theta_z | w] summing only over J inside the support of z.

    Each needed p~(W \\ J) comes from one elimination with that target,
    memoized across causes.

    Raises:
        DegenerateEvidenceError: p~(W) = 0
    """
    model.require_statistical("sparse_posterior_mean")
    started = time.perf_counter()
    n = obs.n
    td = _resolve_decomposition(model, obs, td, eps)
    context = build_sparse_context(model, obs, td, eps, cap)
    everything = full_mask(n)
    evidence = context.coefficient(everything)
    if not evidence > 0:
        raise DegenerateEvidenceError(
            f"p~(W) = {evidence}: the observations are impossible under this model"
        )

    rows = obs.emission_rows(model)
    factorials = factorial_table(n)
    alpha_total = model.alpha_total
    theta = np.empty(model.m)
    for mask, causes in _group_by_support(supports(model, obs, eps)).items():
        block, global_masks = _local_products(rows, positions_of(mask), causes)
        weights = np.array([
            factorials[J.bit_count()] * context.coefficient(everything & ~J) / evidence
            for J in global_masks
        ])
        theta[causes] = model.alpha[causes] / (n + alpha_total) * (weights @ block)

    diagnostics = _diagnostics(td, eps, n, model.m)
    diagnostics.update({
        "targets": len(context.memo),
        "theta_sum": float(theta.sum()),
        "seconds": time.perf_counter() - started,
    })
    return InferenceResult(
        method="sparse",
        theta_mean=theta,
        ptilde_full=evidence,
        probability=evidence / pochhammer(alpha_total, n),
        log_probability=math.log(evidence) - log_pochhammer(alpha_total, n),
        diagnostics=diagnostics,
    )
