"""
Orbit Closure Representatives

Computes the cohomology representatives Upsilon_pi and, for the symplectic
pair, the K-theory representatives Upsilon^K_pi of every orbit closure.

The closed orbit w0 gets an explicit product; every other orbit is reached
by operator recursion along the weak-order graph. Nodes are processed in
decreasing Coxeter length and every incoming edge produces a candidate:

- solid edge, cohomology:  d_i
- dashed edge, cohomology: (1/2) d_i
- any edge, K-theory:      D_i

All candidates for a node must agree exactly.
"""

import logging
import threading
from typing import Any, Dict, Iterator, List, Optional, Tuple

from cachetools import LRUCache, cached

from config.settings import AppConfig
from core.error_handler import create_input_error, create_verification_error
from core.operators import Operator, demazure, divided_difference, half_divided_difference
from core.permutations import EdgeStyle, Permutation, format_permutation
from core.polynomial import Polynomial, k_product, linear_product
from core.reports import OrbitRow
from core.reports import OrbitTable as OrbitTableReport
from core.schubert import BasisExpansion, expand_grothendieck, expand_schubert
from orbits.pairs import PairKind, SymmetricPair, Theory
from orbits.weak_order import WeakOrderEdge, WeakOrderGraph, stability_chain, weak_order_of

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


def closed_orbit_factors(pair: SymmetricPair) -> List[Tuple[int, int]]:
    """Index pairs (i, j) of the closed-orbit product"""
    if pair.is_symplectic:
        return [(i, j) for i in range(1, pair.size) for j in range(i + 1, pair.size - i + 1)]
    return [(i, j) for i in range(1, pair.size) for j in range(i, pair.size - i + 1)]


def closed_orbit_upsilon(pair: SymmetricPair) -> Polynomial:
    """
    Upsilon of the closed orbit w0

    prod_{1<=i<=j<=n-i} (x_i + x_j) for (GL_n, O_n);
    prod_{1<=i<j<=2n-i} (x_i + x_j) for (GL_2n, Sp_2n).
    """
    return linear_product(closed_orbit_factors(pair))


def closed_orbit_upsilon_k(pair: SymmetricPair) -> Polynomial:
    """The closed-orbit product with each (x_i + x_j) replaced by (1 - x_i x_j)"""
    return k_product(closed_orbit_factors(pair))


def edge_operator(theory: Theory, style: EdgeStyle) -> Operator:
    if theory == Theory.KTHEORY:
        return demazure
    if style == EdgeStyle.DASHED:
        return half_divided_difference
    return divided_difference


def evaluate_path(edges: List[WeakOrderEdge], start: Polynomial, theory: Theory) -> Polynomial:
    """Apply the edge operators along a path, first edge first"""
    value = start
    for edge in edges:
        value = edge_operator(theory, edge.style)(edge.label, value)
    return value


def _propagate(graph: WeakOrderGraph, top: Polynomial, theory: Theory) -> Dict[Permutation, Polynomial]:
    values: Dict[Permutation, Polynomial] = {graph.closed_orbit: top}
    for pi in graph.nodes:
        if pi == graph.closed_orbit:
            continue
        incoming = graph.in_edges(pi)
        if not incoming:
            raise create_verification_error(f"{format_permutation(pi)} has no incoming edge",
                                            {"pair": graph.pair.label, "orbit": format_permutation(pi)})
        first = incoming[0]
        value = edge_operator(theory, first.style)(first.label, values[first.source])
        for edge in incoming[1:]:
            candidate = edge_operator(theory, edge.style)(edge.label, values[edge.source])
            if candidate != value:
                raise create_verification_error(
                    f"path dependence at {format_permutation(pi)} in {graph.pair.label}",
                    {
                        "orbit": format_permutation(pi),
                        "theory": theory.value,
                        "first_edge": f"{format_permutation(first.source)} -{first.label}-> ",
                        "first_value": str(value),
                        "second_edge": f"{format_permutation(edge.source)} -{edge.label}-> ",
                        "second_value": str(candidate),
                    },
                )
        if not value.is_integral():
            raise create_verification_error(
                f"non-integral representative at {format_permutation(pi)}",
                {"orbit": format_permutation(pi), "value": str(value)},
            )
        values[pi] = value
        logger.debug(f"{graph.pair.label} {theory.value} {format_permutation(pi)}: {value}")
    return values


def _check_degrees(graph: WeakOrderGraph, values: Dict[Permutation, Polynomial]):
    ranks = graph.orbit_ranks()
    for pi, value in values.items():
        if value.is_zero() or not value.is_homogeneous() or value.degree() != ranks[pi]:
            raise create_verification_error(
                f"degree of Upsilon at {format_permutation(pi)} is not its orbit rank {ranks[pi]}",
                {"orbit": format_permutation(pi), "value": str(value), "orbit_rank": ranks[pi]},
            )


@cached(cache=LRUCache(maxsize=64), lock=threading.RLock())
def orbit_values(pair: SymmetricPair, theory: Theory) -> Dict[Permutation, Polynomial]:
    """
    Upsilon (or Upsilon^K) for every orbit of the pair

    Args:
        pair: Symmetric pair
        theory: Cohomology, or K-theory for the symplectic pair

    Returns:
        Mapping involution -> representative
    """
    pair.require_theory(theory)
    graph = weak_order_of(pair)
    if theory == Theory.KTHEORY:
        values = _propagate(graph, closed_orbit_upsilon_k(pair), theory)
    else:
        values = _propagate(graph, closed_orbit_upsilon(pair), theory)
        _check_degrees(graph, values)
    logger.info(f"Computed {len(values)} {theory.value} representatives for {pair.label}")
    return values


class OrbitRecord:
    """Representatives and expansions for one orbit closure"""

    def __init__(self,
                 involution: Permutation,
                 length: int,
                 orbit_rank: int,
                 upsilon: Polynomial,
                 upsilon_k: Optional[Polynomial] = None,
                 schubert_expansion: Optional[BasisExpansion] = None,
                 grothendieck_expansion: Optional[BasisExpansion] = None):
        self.involution = involution
        self.length = length
        self.orbit_rank = orbit_rank
        self.upsilon = upsilon
        self.upsilon_k = upsilon_k
        self.schubert_expansion = schubert_expansion
        self.grothendieck_expansion = grothendieck_expansion

    @property
    def label(self) -> str:
        return format_permutation(self.involution)

    def to_row(self) -> OrbitRow:
        return OrbitRow(
            involution=self.label,
            one_line=self.involution.one_line(),
            length=self.length,
            orbit_rank=self.orbit_rank,
            upsilon=str(self.upsilon),
            upsilon_k=str(self.upsilon_k) if self.upsilon_k is not None else None,
            schubert_expansion=(self.schubert_expansion.as_dict()
                                if self.schubert_expansion is not None else {}),
            grothendieck_expansion=(self.grothendieck_expansion.as_dict()
                                    if self.grothendieck_expansion is not None else None),
        )

    def __repr__(self) -> str:
        return f"OrbitRecord({self.label}, {self.upsilon})"


class OrbitTable:
    """All records of one pair, in table order: descending length, then one-line notation"""

    def __init__(self, pair: SymmetricPair, theory: Theory, records: List[OrbitRecord]):
        self.pair = pair
        self.theory = theory
        self.records = records
        self._index = {record.involution: record for record in records}

    def __getitem__(self, pi: Permutation) -> OrbitRecord:
        if pi not in self._index:
            raise create_input_error(f"{format_permutation(pi)} is not an orbit of {self.pair.label}")
        return self._index[pi]

    def __contains__(self, pi: Permutation) -> bool:
        return pi in self._index

    def __iter__(self) -> Iterator[OrbitRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def to_report(self) -> OrbitTableReport:
        return OrbitTableReport(pair=self.pair.kind.value, size=self.pair.size, theory=self.theory.value,
                                 rows=[record.to_row() for record in self.records])


def compute_all(pair: SymmetricPair, theory: Theory = Theory.COHOMOLOGY, expand: bool = True) -> OrbitTable:
    """
    Representatives of every orbit closure of the pair

    Args:
        pair: Symmetric pair
        theory: COHOMOLOGY, or KTHEORY (symplectic only; also fills upsilon)
        expand: Attach Schubert (and for K-theory Grothendieck) expansions

    Returns:
        OrbitTable in table order
    """
    pair.require_theory(theory)
    graph = weak_order_of(pair)
    upsilon = orbit_values(pair, Theory.COHOMOLOGY)
    upsilon_k = orbit_values(pair, Theory.KTHEORY) if theory == Theory.KTHEORY else None
    ranks = graph.orbit_ranks()

    records = []
    for pi in graph.nodes:
        record = OrbitRecord(pi, graph.rank(pi), ranks[pi], upsilon[pi],
                             upsilon_k[pi] if upsilon_k is not None else None)
        if expand:
            record.schubert_expansion = expand_schubert(record.upsilon, pair.size)
            if record.upsilon_k is not None:
                record.grothendieck_expansion = expand_grothendieck(record.upsilon_k, pair.size)
        records.append(record)
    return OrbitTable(pair, theory, records)


def embed_orthogonal(pi: Permutation, size: int) -> Permutation:
    """iota: extend an involution of S_n by fixed points n+1..N"""
    if not pi.is_involution():
        raise create_input_error(f"{pi.one_line()} is not an involution")
    if size < pi.size:
        raise create_input_error(f"cannot embed S_{pi.size} into S_{size}")
    return pi.embed(size)


def embed_fpf(pi: Permutation, size: int) -> Permutation:
    """iota_fpf: append the transpositions (2n+1,2n+2), (2n+3,2n+4), ..."""
    if pi.size % 2 or size % 2:
        raise create_input_error(f"fixed-point-free embedding needs even sizes, got {pi.size} -> {size}")
    if size < pi.size:
        raise create_input_error(f"cannot embed S_{pi.size} into S_{size}")
    if not pi.is_fixed_point_free_involution():
        raise create_input_error(f"{pi.one_line()} is not a fixed-point-free involution")
    images = list(pi.images)
    for a in range(pi.size + 1, size + 1, 2):
        images += [a + 1, a]
    return Permutation(images)


def check_stability(kind: PairKind, n: int, N: int, theory: Theory = Theory.COHOMOLOGY) -> Dict[str, Any]:
    """
    Representatives are unchanged by the embedding into a larger ambient size

    Args:
        kind: Pair kind
        n: Smaller ambient size
        N: Larger ambient size
        theory: Theory to compare

    Returns:
        Summary dict {pair, from, to, theory, checked}
    """
    if N < n:
        raise create_input_error(f"stability needs N >= n, got n={n}, N={N}")
    small = SymmetricPair(kind, n)
    large = SymmetricPair(kind, N)
    small.require_theory(theory)
    small_values = orbit_values(small, theory)
    large_values = orbit_values(large, theory)
    for pi, value in small_values.items():
        image = small.embed(pi, N)
        if large_values[image] != value:
            raise create_verification_error(
                f"representative of {format_permutation(pi)} changes under embedding {n} -> {N}",
                {"orbit": format_permutation(pi), "image": format_permutation(image),
                 "small": str(value), "large": str(large_values[image])},
            )
    logger.info(f"Stability {kind.value} {n} -> {N} ({theory.value}): {len(small_values)} orbits agree")
    return {"pair": kind.value, "from": n, "to": N, "theory": theory.value, "checked": len(small_values)}


def strip_closed_orbit_factors(kind: PairKind, size: int) -> List[Dict[str, Any]]:
    """
    Walk the stability chain from w0 and confirm each step removes one linear factor

    At every step the previous value must equal (x_i + x_j) times the new
    value; the last value must be the closed-orbit product of the next smaller
    ambient size.

    Returns:
        One dict per step: label, style, removed factor
    """
    chain = stability_chain(kind, size)
    pair = chain.pair
    value = closed_orbit_upsilon(pair)
    steps = []
    for edge, (i, j) in zip(chain.steps, chain.removed_factors):
        following = edge_operator(Theory.COHOMOLOGY, edge.style)(edge.label, value)
        factor = linear_product([(i, j)])
        if factor * following != value:
            raise create_verification_error(
                f"step {edge.label} of the {pair.label} stability chain does not strip x{i}+x{j}",
                {"label": edge.label, "before": str(value), "after": str(following)},
            )
        steps.append({"label": edge.label, "style": edge.style.value, "removed": f"x{i} + x{j}"})
        value = following
    smaller = SymmetricPair(kind, size - 2 if kind == PairKind.SYMPLECTIC else size - 1)
    if value != closed_orbit_upsilon(smaller):
        raise create_verification_error(
            f"stability chain of {pair.label} does not end at the smaller closed-orbit product",
            {"end": str(value), "expected": str(closed_orbit_upsilon(smaller))},
        )
    return steps


def k_to_cohomology(f: Polynomial) -> Polynomial:
    """Lowest degree part of f(1 - x)"""
    if f.is_zero():
        raise create_input_error("k_to_cohomology needs a nonzero polynomial")
    return f.substitute_one_minus_x().lowest_degree_part()
