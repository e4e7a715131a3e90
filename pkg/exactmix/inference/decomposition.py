"""
Tree decompositions of the interaction graph.

Decompositions come from greedy min-fill elimination: each eliminated vertex
contributes the bag {v} + its remaining neighbours, hung below the bag of
whichever of those neighbours is eliminated next. Bags contained in an
adjacent bag are contracted away, so there are at most n bags.
"""

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from exactmix.algebra.masks import SubsetMask, mask_of, positions_of
from exactmix.inference.graph import InteractionGraph
from exactmix.utils.errors import DomainError
from exactmix.utils.logger import logger


@dataclass(frozen=True)
class TreeDecomposition:
    """Rooted tree of bags.

    Attributes:
        bags: bag contents V_t as position masks
        parent: parent bag index per bag, None for the root
        root: index of the root bag
    """
    bags: tuple[SubsetMask, ...]
    parent: tuple[int | None, ...]
    root: int

    def __post_init__(self):
        if len(self.bags) != len(self.parent):
            raise DomainError("bags and parent relation differ in length")
        if not 0 <= self.root < len(self.bags):
            raise DomainError(f"root {self.root} is not a bag index")

    @property
    def width(self) -> int:
        return max(bag.bit_count() for bag in self.bags) - 1

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.bags)))
        tree.add_edges_from((t, p) for t, p in enumerate(self.parent) if p is not None)
        return tree

    def children(self, t: int) -> list[int]:
        return [c for c, p in enumerate(self.parent) if p == t]


@dataclass
class Violation:
    kind: str
    detail: str
    bag: int | None = None
    position: int | None = None


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def _fill_cost(graph: nx.Graph, v: int) -> int:
    return sum(1 for a, b in combinations(graph.adj[v], 2) if not graph.has_edge(a, b))


def tree_decompose(graph: InteractionGraph) -> TreeDecomposition:
    """Min-fill tree decomposition (ties broken by lowest vertex index)."""
    if graph.n == 0:
        return TreeDecomposition(bags=(0,), parent=(None,), root=0)

    working = graph.graph.copy()
    order: list[int] = []
    bag_of: dict[int, SubsetMask] = {}
    later_neighbours: dict[int, set[int]] = {}
    while working.number_of_nodes():
        v = min(working.nodes, key=lambda u: (_fill_cost(working, u), u))
        nbrs = set(working.adj[v])
        working.add_edges_from(combinations(sorted(nbrs), 2))
        working.remove_node(v)
        order.append(v)
        bag_of[v] = mask_of(nbrs | {v})
        later_neighbours[v] = nbrs

    rank = {v: r for r, v in enumerate(order)}
    last = order[-1]
    parent: dict[int, int | None] = {}
    for v in order:
        if later_neighbours[v]:
            parent[v] = min(later_neighbours[v], key=rank.__getitem__)
        else:
            # component root; separate components hang below the last bag
            parent[v] = None if v == last else last

    # contract bags contained in their parent (or containing it)
    alive = set(order)
    for v in order:
        p = parent[v]
        if p is None:
            continue
        if bag_of[v] & ~bag_of[p] and bag_of[p] & ~bag_of[v]:
            continue
        bag_of[p] |= bag_of[v]
        for c in order:
            if parent.get(c) == v:
                parent[c] = p
        alive.discard(v)
        parent[v] = None

    kept = [v for v in order if v in alive]
    index = {v: t for t, v in enumerate(kept)}
    td = TreeDecomposition(
        bags=tuple(bag_of[v] for v in kept),
        parent=tuple(None if parent[v] is None else index[parent[v]] for v in kept),
        root=index[last],
    )
    logger.debug(f"tree_decompose: n={graph.n} bags={len(kept)} width={td.width}")
    return td


def reroot(td: TreeDecomposition, root: int) -> TreeDecomposition:
    """Same tree, oriented towards a different root bag."""
    if not 0 <= root < len(td.bags):
        raise DomainError(f"root {root} is not a bag index")
    parent: list[int | None] = [None] * len(td.bags)
    for child, par in nx.bfs_predecessors(td.tree(), root):
        parent[child] = par
    return TreeDecomposition(td.bags, tuple(parent), root)


def topological_order(td: TreeDecomposition) -> list[int]:
    """Bags leaves first, every bag after all of its children, root last."""
    return list(nx.dfs_postorder_nodes(td.tree(), source=td.root))


def check_elimination_order(td: TreeDecomposition, order: list[int]) -> None:
    if sorted(order) != list(range(len(td.bags))) or order[-1] != td.root:
        raise DomainError(f"elimination order {order} must list every bag once and end at the root")
    seen: set[int] = set()
    for t in order:
        if any(c not in seen for c in td.children(t)):
            raise DomainError(f"bag {t} is eliminated before one of its children")
        seen.add(t)


def validate_decomposition(graph: InteractionGraph, td: TreeDecomposition) -> ValidationReport:
    """Check tree shape, vertex coverage, edge coverage and running intersection."""
    report = ValidationReport()
    tree = td.tree()

    if not nx.is_tree(tree):
        report.violations.append(Violation("tree", "parent relation does not form a tree"))
    for t, p in enumerate(td.parent):
        if (p is None) != (t == td.root):
            report.violations.append(Violation("tree", f"bag {t} has parent {p}", bag=t))

    covered = 0
    for bag in td.bags:
        covered |= bag
    for i in range(graph.n):
        if not covered >> i & 1:
            report.violations.append(Violation("coverage", f"position {i} lies in no bag", position=i))
    for t, bag in enumerate(td.bags):
        if bag >> graph.n:
            report.violations.append(
                Violation("coverage", f"bag {t} names positions beyond {graph.n - 1}", bag=t)
            )

    for i, j in graph.edges():
        pair = (1 << i) | (1 << j)
        if not any(bag & pair == pair for bag in td.bags):
            report.violations.append(
                Violation("edge-coverage", f"no bag holds both ends of edge ({i}, {j})", position=i)
            )

    for i in range(graph.n):
        holders = [t for t, bag in enumerate(td.bags) if bag >> i & 1]
        if len(holders) > 1 and not nx.is_connected(tree.subgraph(holders)):
            report.violations.append(
                Violation(
                    "running-intersection",
                    f"bags {holders} holding position {i} are not connected in the tree",
                    bag=holders[0],
                    position=i,
                )
            )
    return report


def describe_decomposition(td: TreeDecomposition) -> str:
    """Plain-text dump of bags, tree edges, root and width."""
    lines = [f"width {td.width}, {len(td.bags)} bags, root {td.root}"]
    for t, bag in enumerate(td.bags):
        par = "-" if td.parent[t] is None else str(td.parent[t])
        lines.append(f"bag {t}: {{{', '.join(map(str, positions_of(bag)))}}} -> {par}")
    return "\n".join(lines)
