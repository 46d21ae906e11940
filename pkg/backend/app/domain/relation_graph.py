"""
Linear relation graph of an equigenerated monomial ideal.

{i, j} is an edge when x_i*u = x_j*v for generators u, v, i.e. when some
monomial w has both w*x_i and w*x_j in G(I).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from app.core.exceptions import InputError
from app.domain.ideals import MonomialIdeal, multiply, embed
from app.domain.monomials import Monomial


@dataclass(frozen=True)
class RelationGraph:
    n: int
    vertices: FrozenSet[int]
    edges: FrozenSet[Tuple[int, int]]  # (i, j) with i < j, 0-based
    components: Tuple[FrozenSet[int], ...]

    @property
    def s(self) -> int:
        return len(self.components)

    @property
    def covers_all_variables(self) -> bool:
        return self.vertices == frozenset(range(self.n))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(sorted(self.vertices))
        G.add_edges_from(sorted(self.edges))
        return G

    def edge_list(self) -> List[List[int]]:
        """1-based sorted edge list, the report form."""
        return [[i + 1, j + 1] for i, j in sorted(self.edges)]


@dataclass(frozen=True)
class GraphAnalysis:
    component_count: int
    cutpoints: Tuple[int, ...]
    biconnected_components: Tuple[FrozenSet[int], ...]

    @property
    def is_biconnected(self) -> bool:
        return self.component_count == 1 and not self.cutpoints


@dataclass(frozen=True)
class Factor:
    variables: Tuple[int, ...]  # ambient indices, ascending
    ideal: MonomialIdeal  # dense on `variables`

    @property
    def degree(self) -> Optional[int]:
        return self.ideal.degree


@dataclass(frozen=True)
class ComponentFactorization:
    factors: Tuple[Factor, ...]
    verified: bool
    witness: Optional[Monomial] = None


def _sorted_components(parts: Iterable[Iterable[int]]) -> Tuple[FrozenSet[int], ...]:
    return tuple(sorted((frozenset(c) for c in parts), key=lambda c: min(c)))


def build_gamma(I: MonomialIdeal) -> RelationGraph:
    if I.is_zero:
        raise InputError("the zero ideal has no linear relation graph")
    if not I.is_equigenerated:
        raise InputError("linear relation graph needs an equigenerated ideal")

    buckets: Dict[Tuple[int, ...], Set[int]] = defaultdict(set)
    for g in I.exps:
        for i, e in enumerate(g):
            if e:
                w = g[:i] + (e - 1,) + g[i + 1:]
                buckets[w].add(i)

    edges = set()
    for members in buckets.values():
        if len(members) < 2:
            continue
        ordered = sorted(members)
        for a in range(len(ordered)):
            for b in range(a + 1, len(ordered)):
                edges.add((ordered[a], ordered[b]))

    vertices = frozenset(v for e in edges for v in e)
    G = nx.Graph()
    G.add_nodes_from(vertices)
    G.add_edges_from(edges)
    return RelationGraph(
        n=I.n,
        vertices=vertices,
        edges=frozenset(edges),
        components=_sorted_components(nx.connected_components(G)),
    )


def is_complete(g: RelationGraph) -> bool:
    k = len(g.vertices)
    return len(g.edges) == k * (k - 1) // 2


def is_complete_on_all_variables(g: RelationGraph) -> bool:
    """Complete with V(Γ) = {1..n}; an edgeless Γ on n >= 2 variables fails."""
    if g.n == 1:
        return True
    return g.covers_all_variables and is_complete(g)


def graph_analysis(graph: nx.Graph) -> GraphAnalysis:
    """Cutpoints and biconnected components (depth-first low-link)."""
    if nx.number_of_selfloops(graph):
        raise InputError("graph analysis needs a simple graph")
    return GraphAnalysis(
        component_count=nx.number_connected_components(graph),
        cutpoints=tuple(sorted(nx.articulation_points(graph))),
        biconnected_components=_sorted_components(nx.biconnected_components(graph)),
    )


def component_factorization(I: MonomialIdeal) -> ComponentFactorization:
    """
    Split I along the components of its relation graph and verify I = prod J_j.

    Support variables outside V(Γ) form singleton blocks.
    """
    gamma = build_gamma(I)
    blocks = [tuple(sorted(c)) for c in gamma.components]
    covered = set(gamma.vertices)
    for i in sorted(I.support - covered):
        blocks.append((i,))
    blocks.sort(key=lambda b: b[0])

    factors = []
    for block in blocks:
        image = MonomialIdeal._from_exps((tuple(g[i] for i in block) for g in I.exps), len(block))
        factors.append(Factor(variables=block, ideal=image))

    product = MonomialIdeal.unit(I.n)
    for f in factors:
        product = multiply(product, embed(f.ideal, f.variables, I.n))

    if product == I:
        return ComponentFactorization(tuple(factors), True)

    # prefer a generator of I the product misses, then a spurious one
    mine = set(I.gens)
    theirs = set(product.gens)
    diff = sorted(mine - theirs, key=lambda m: m.sort_key) or sorted(theirs - mine, key=lambda m: m.sort_key)
    return ComponentFactorization(tuple(factors), False, diff[0] if diff else None)
