"""Interaction graph: observations joined when some cause can emit both."""

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from exactmix.algebra.masks import positions_of
from exactmix.model.moments import supports
from exactmix.model.types import Model, ObservationSeq


@dataclass(frozen=True, eq=False)
class InteractionGraph:
    """Undirected graph over observation positions 0..n-1 (no self-loops)."""
    n: int
    graph: nx.Graph

    @classmethod
    def from_edges(cls, n: int, edges) -> "InteractionGraph":
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from((i, j) for i, j in edges if i != j)
        return cls(n, graph)

    def has_edge(self, i: int, j: int) -> bool:
        return self.graph.has_edge(i, j)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(i, j), max(i, j)) for i, j in self.graph.edges())

    def neighbours(self, i: int) -> list[int]:
        return sorted(self.graph.adj[i])


def interaction_graph(model: Model, obs: ObservationSeq, eps: float = 0.0) -> InteractionGraph:
    """Edge (i, j) iff some cause has beta(w_i|z) > eps and beta(w_j|z) > eps."""
    edges = set()
    for mask in set(supports(model, obs, eps)):
        if mask & (mask - 1):
            edges.update(combinations(positions_of(mask), 2))
    return InteractionGraph.from_edges(obs.n, edges)
