"""Exact methods: dense subset lattice and tree-decomposition elimination."""

from exactmix.inference.decomposition import describe_decomposition, tree_decompose
from exactmix.inference.dense import posterior_mean
from exactmix.inference.graph import interaction_graph
from exactmix.inference.results import InferenceResult
from exactmix.inference.sparse import sparse_posterior_mean
from exactmix.model.types import Model, ObservationSeq
from exactmix.utils.logger import logger

from .base import InferenceMethod


class ExactMethod(InferenceMethod):
    """Dense O(3^n + m 2^n) evaluation, refused above the mask cap."""

    name = "exact"

    @property
    def is_exact(self) -> bool:
        return True

    def run(self, model: Model, obs: ObservationSeq) -> InferenceResult:
        return posterior_mean(
            model,
            obs,
            cap=self.config.get("mask_cap"),
            chunk=self.config.get("cause_chunk"),
        )


class SparseMethod(InferenceMethod):
    """Elimination along a min-fill tree decomposition of the interaction graph."""

    name = "sparse"

    @property
    def is_exact(self) -> bool:
        return self.config.get("eps", 0.0) == 0.0

    def run(self, model: Model, obs: ObservationSeq) -> InferenceResult:
        eps = self.config.get("eps", 0.0)
        td = tree_decompose(interaction_graph(model, obs, eps))
        logger.info(f"sparse: decomposition width {td.width} over {len(td.bags)} bags")
        result = sparse_posterior_mean(model, obs, td, eps, cap=self.config.get("mask_cap"))
        if self.config.get("dump_decomposition"):
            result.diagnostics["decomposition"] = describe_decomposition(td)
        return result
