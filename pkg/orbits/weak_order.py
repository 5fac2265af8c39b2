"""
Weak Order Graphs of Orbit Closures

This module builds the labeled weak-order graph of K-orbit closures for a
symmetric pair. Nodes are (fixed-point-free) involutions; an edge
pi -> s_i.pi labelled i is drawn whenever the weak action moves pi. Edges
run from the closed orbit w0 upwards towards the dense orbit and Coxeter
length strictly drops along each of them.

The graph is stored as a networkx MultiDiGraph keyed by label, so two labels
on the same pair of nodes stay separate edges; they are merged only when
rendering DOT.
"""

import logging
import threading
from typing import Dict, List, Tuple

import networkx as nx
from cachetools import LRUCache, cached
from graphviz import Digraph

from config.settings import AppConfig
from core.error_handler import create_input_error, create_verification_error
from core.permutations import EdgeStyle, Permutation, format_permutation, length
from core.reports import EdgeRecord, GraphExport
from orbits.pairs import PairKind, SymmetricPair

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class WeakOrderEdge:
    """One labelled edge source -> target"""

    __slots__ = ("source", "target", "label", "style")

    def __init__(self, source: Permutation, target: Permutation, label: int, style: EdgeStyle):
        self.source = source
        self.target = target
        self.label = label
        self.style = style

    def __repr__(self) -> str:
        return (f"WeakOrderEdge({format_permutation(self.source)} -> "
                f"{format_permutation(self.target)}, {self.label}, {self.style.value})")


class WeakOrderGraph:
    """
    Labeled DAG of orbit closures for one symmetric pair
    """

    def __init__(self, pair: SymmetricPair, graph: nx.MultiDiGraph):
        self.pair = pair
        self.graph = graph
        self.closed_orbit = pair.closed_orbit()
        self.dense_orbit = pair.dense_orbit()

    @property
    def nodes(self) -> List[Permutation]:
        """Nodes ordered by descending length, then one-line notation"""
        return sorted(self.graph.nodes, key=lambda pi: (-length(pi), pi.images))

    def rank(self, pi: Permutation) -> int:
        return self.graph.nodes[pi]["length"]

    def edges(self) -> List[WeakOrderEdge]:
        result = [WeakOrderEdge(u, v, label, data["style"])
                  for u, v, label, data in self.graph.edges(keys=True, data=True)]
        return sorted(result, key=lambda e: (-length(e.source), e.source.images, e.label))

    def out_edges(self, pi: Permutation) -> List[WeakOrderEdge]:
        return sorted((WeakOrderEdge(u, v, label, data["style"])
                       for u, v, label, data in self.graph.out_edges(pi, keys=True, data=True)),
                      key=lambda e: e.label)

    def in_edges(self, pi: Permutation) -> List[WeakOrderEdge]:
        return sorted((WeakOrderEdge(u, v, label, data["style"])
                       for u, v, label, data in self.graph.in_edges(pi, keys=True, data=True)),
                      key=lambda e: (e.source.images, e.label))

    def orbit_rank(self, pi: Permutation) -> int:
        """Edges on any saturated path from pi up to the dense orbit"""
        self._require_node(pi)
        return nx.shortest_path_length(self.graph, pi, self.dense_orbit)

    def orbit_ranks(self) -> Dict[Permutation, int]:
        """orbit_rank for every node at once"""
        return dict(nx.shortest_path_length(self.graph.reverse(copy=False), source=self.dense_orbit))

    def codimension(self, pi: Permutation) -> int:
        """Edges on any saturated path from the closed orbit to pi"""
        self._require_node(pi)
        return nx.shortest_path_length(self.graph, self.closed_orbit, pi)

    def has_dashed_edges(self) -> bool:
        return any(data["style"] == EdgeStyle.DASHED for _, _, data in self.graph.edges(data=True))

    def _require_node(self, pi: Permutation):
        if pi not in self.graph:
            raise create_input_error(f"{format_permutation(pi)} is not an orbit of {self.pair.label}")

    def saturated_paths(self, source: Permutation, target: Permutation) -> List[List[int]]:
        """
        All label sequences along paths from source up to target

        Labels are listed in operator order: the rightmost label is the first
        edge taken out of source.

        Args:
            source: Lower node (closer to w0)
            target: Upper node

        Returns:
            Label sequences; [[]] when source == target, [] when unreachable
        """
        self._require_node(source)
        self._require_node(target)
        if source == target:
            return [[]]
        paths = []
        for edge_path in nx.all_simple_edge_paths(self.graph, source, target):
            paths.append([label for _, _, label in reversed(edge_path)])
        return sorted(paths)

    def saturated_edge_paths(self, source: Permutation, target: Permutation) -> List[List[WeakOrderEdge]]:
        """Same paths as saturated_paths, as edges in traversal order"""
        self._require_node(source)
        self._require_node(target)
        if source == target:
            return [[]]
        return [[WeakOrderEdge(u, v, label, self.graph.edges[u, v, label]["style"])
                 for u, v, label in edge_path]
                for edge_path in nx.all_simple_edge_paths(self.graph, source, target)]

    def export_dot(self) -> str:
        """Deterministic DOT source; one node rank per Coxeter length"""
        dot = Digraph(name="weak_order", comment=f"weak order of {self.pair.label}")
        dot.attr(rankdir="BT")
        dot.attr("node", shape="box")

        by_length: Dict[int, List[Permutation]] = {}
        for pi in self.nodes:
            by_length.setdefault(self.rank(pi), []).append(pi)
        for ell in sorted(by_length, reverse=True):
            with dot.subgraph() as level:
                level.attr(rank="same")
                for pi in by_length[ell]:
                    level.node(pi.one_line(), format_permutation(pi))

        merged: Dict[Tuple[Permutation, Permutation], List[WeakOrderEdge]] = {}
        for edge in self.edges():
            merged.setdefault((edge.source, edge.target), []).append(edge)
        for (source, target), group in merged.items():
            labels = ",".join(str(e.label) for e in sorted(group, key=lambda e: e.label))
            dot.edge(source.one_line(), target.one_line(), label=labels, style=group[0].style.value)
        return dot.source

    def to_export(self) -> GraphExport:
        """JSON edge list {pair, n, nodes, edges}"""
        return GraphExport(
            pair=self.pair.kind.value,
            n=self.pair.size,
            nodes=[format_permutation(pi) for pi in self.nodes],
            edges=[EdgeRecord(src=format_permutation(e.source), dst=format_permutation(e.target),
                              label=e.label, style=e.style.value) for e in self.edges()],
        )

    def __len__(self) -> int:
        return self.graph.number_of_nodes()


def build_graph(pair: SymmetricPair) -> WeakOrderGraph:
    """
    Generate the weak-order graph from the closed orbit by the weak action

    Args:
        pair: Symmetric pair

    Returns:
        WeakOrderGraph with every orbit of the pair as a node
    """
    action = pair.weak_action()
    graph = nx.MultiDiGraph()
    orbits = pair.orbits()
    for pi in orbits:
        graph.add_node(pi, length=length(pi))
    for pi in orbits:
        for i in range(1, pair.size):
            target, style = action(i, pi)
            if style == EdgeStyle.NONE:
                continue
            if target not in graph:
                raise create_verification_error(
                    f"s_{i} moves {format_permutation(pi)} outside the orbit set",
                    {"source": format_permutation(pi), "label": i},
                )
            graph.add_edge(pi, target, key=i, style=style)

    result = WeakOrderGraph(pair, graph)
    reachable = nx.descendants(graph, result.closed_orbit) | {result.closed_orbit}
    if len(reachable) != graph.number_of_nodes():
        raise create_verification_error(f"weak order of {pair.label} is not generated by w0")
    if pair.kind == PairKind.SYMPLECTIC and result.has_dashed_edges():
        raise create_verification_error(f"symplectic weak order of {pair.label} has a dashed edge")
    logger.info(f"Built weak order for {pair.label}: {graph.number_of_nodes()} orbits, "
                f"{graph.number_of_edges()} edges")
    return result


class StabilityChain:
    """A verified labelled path from w0 in the larger ambient size to the embedded smaller w0"""

    def __init__(self, pair: SymmetricPair, steps: List[WeakOrderEdge], removed_factors: List[Tuple[int, int]]):
        self.pair = pair
        self.steps = steps
        self.removed_factors = removed_factors

    @property
    def labels(self) -> List[int]:
        """Labels in traversal order, first edge first"""
        return [step.label for step in self.steps]

    @property
    def styles(self) -> List[EdgeStyle]:
        return [step.style for step in self.steps]

    @property
    def end(self) -> Permutation:
        return self.steps[-1].target if self.steps else self.pair.closed_orbit()


def stability_chain(kind: PairKind, size: int) -> StabilityChain:
    """
    Labelled chain from w0 in S_size to the embedding of w0 from the next smaller size

    Symplectic (size 2N): labels 1, 2, ..., 2N-2, all solid, ending at iota_fpf(w0).
    Orthogonal (size N+1): labels floor(N/2)+1, ..., N; the first edge is dashed
    exactly when N+1 is even, the rest are solid; ends at iota(w0).

    Each step is checked against the weak action. The linear factor (x_i + x_j)
    removed by each step is recorded in traversal order.

    Args:
        kind: Pair kind
        size: Larger ambient size

    Returns:
        StabilityChain
    """
    if size < 2 or (kind == PairKind.SYMPLECTIC and (size % 2 or size < 4)):
        raise create_input_error(f"no stability chain for {kind.value} at size {size}")
    pair = SymmetricPair(kind, size)
    action = pair.weak_action()
    if kind == PairKind.SYMPLECTIC:
        half = size // 2
        labels = list(range(1, size - 1))
        removed = [(k, size - k) for k in range(1, half)] + [(size - 1 - k, k) for k in range(half, size - 1)]
        smaller = size - 2
    else:
        n = size - 1
        labels = list(range(n // 2 + 1, n + 1))
        removed = [(size - k, k) for k in labels]
        smaller = size - 1

    current = pair.closed_orbit()
    steps: List[WeakOrderEdge] = []
    for position, label in enumerate(labels):
        target, style = action(label, current)
        expected = EdgeStyle.DASHED if (kind == PairKind.ORTHOGONAL and position == 0
                                        and size % 2 == 0) else EdgeStyle.SOLID
        if style != expected:
            raise create_verification_error(
                f"stability chain step {label} from {format_permutation(current)} is {style.value}, "
                f"expected {expected.value}",
                {"pair": pair.label, "label": label, "source": format_permutation(current)},
            )
        steps.append(WeakOrderEdge(current, target, label, style))
        current = target

    end = pair.embed(Permutation.longest(smaller), size)
    if current != end:
        raise create_verification_error(
            f"stability chain of {pair.label} ends at {format_permutation(current)}, "
            f"expected {format_permutation(end)}",
            {"pair": pair.label, "end": format_permutation(current)},
        )
    return StabilityChain(pair, steps, removed)


@cached(cache=LRUCache(maxsize=64), lock=threading.RLock())
def weak_order_of(pair: SymmetricPair) -> WeakOrderGraph:
    """Memoized build_graph; the returned graph must not be mutated"""
    return build_graph(pair)
