"""
Polymatroidal recognition and the standard matroidal families.

Graphic ideals index variables by edges: x_i <-> the i-th edge of the
input list. Vertices are 1-based labels.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind
from sympy import Matrix

from app.core.exceptions import InputError, ResourceLimitError
from app.domain.ideals import MonomialIdeal, basic_invariants, multiply
from app.domain.monomials import Monomial, PrimeSupport

logger = logging.getLogger("polystab.domain.matroids")

DEFAULT_MAX_EDGES = 16


@dataclass(frozen=True)
class ExchangeVerdict:
    holds: bool
    reason: Optional[str] = None
    witness: Optional[Tuple[Monomial, Monomial, int]] = None  # (u, v, i) with i 0-based

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class CoverProfile:
    """|A_i| = number of generators with exponent exactly 1 in x_i."""

    counts: Tuple[int, ...]

    @property
    def minimum(self) -> int:
        return min(self.counts) if self.counts else 0


def is_polymatroidal(I: MonomialIdeal) -> ExchangeVerdict:
    """Direct check of the exchange property over all generator pairs."""
    if I.is_zero:
        return ExchangeVerdict(False, "zero ideal")
    if not I.is_equigenerated:
        return ExchangeVerdict(False, "not equigenerated")

    n = I.n
    gens = I.exps
    lookup = set(gens)
    for u in gens:
        for v in gens:
            if u is v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                found = False
                for j in range(n):
                    if v[j] <= u[j]:
                        continue
                    w = list(u)
                    w[i] -= 1
                    w[j] += 1
                    if tuple(w) in lookup:
                        found = True
                        break
                if not found:
                    return ExchangeVerdict(
                        False,
                        "exchange property fails",
                        (Monomial._make(u), Monomial._make(v), i),
                    )
    return ExchangeVerdict(True)


def is_matroidal(I: MonomialIdeal) -> bool:
    return (not I.is_zero) and I.is_squarefree and is_polymatroidal(I).holds


def is_certifiable(I: MonomialIdeal) -> bool:
    """Matroidal with gcd 1 and full support."""
    if not is_matroidal(I):
        return False
    inv = basic_invariants(I)
    return inv.gcd_is_one and inv.full_support


def cover_profile(I: MonomialIdeal) -> CoverProfile:
    if not I.is_zero and not I.is_equigenerated:
        raise InputError("cover profile needs an equigenerated ideal")
    counts = [0] * I.n
    for g in I.exps:
        for i, e in enumerate(g):
            if e == 1:
                counts[i] += 1
    return CoverProfile(tuple(counts))


# ── constructors ───────────────────────────────────────────────────────


def veronese_type(n: int, d: int, caps: Sequence[int]) -> MonomialIdeal:
    """All degree-d monomials with t_j <= caps[j]."""
    if n < 1 or d < 1:
        raise InputError("veronese type needs n >= 1 and d >= 1")
    if len(caps) != n:
        raise InputError(f"expected {n} caps, got {len(caps)}")
    for a in caps:
        if not 1 <= a <= d:
            raise InputError(f"cap {a} outside 1..{d}")
    if sum(caps) < d:
        logger.warning("Veronese caps sum to %d < d=%d; returning the zero ideal", sum(caps), d)
        return MonomialIdeal.zero(n)

    out: List[Tuple[int, ...]] = []

    def fill(prefix: List[int], remaining: int, pos: int) -> None:
        if pos == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        room = sum(caps[pos + 1:])
        for t in range(min(caps[pos], remaining), -1, -1):
            if remaining - t > room:
                break
            prefix.append(t)
            fill(prefix, remaining - t, pos + 1)
            prefix.pop()

    fill([], d, 0)
    return MonomialIdeal.from_exponents(out, n)


def uniform_ideal(n: int, d: int) -> MonomialIdeal:
    """Square-free Veronese ideal: the bases of the uniform matroid U(d, n)."""
    if not 1 <= d <= n:
        raise InputError(f"uniform ideal needs 1 <= d <= n, got d={d}, n={n}")
    return veronese_type(n, d, [1] * n)


def build_graph(vertex_count: int, edges: Sequence[Tuple[int, int]]) -> nx.Graph:
    """Simple graph on vertices 1..vertex_count; rejects loops and repeats."""
    if vertex_count < 1:
        raise InputError("a graph needs at least one vertex")
    G = nx.Graph()
    G.add_nodes_from(range(1, vertex_count + 1))
    seen = set()
    for a, b in edges:
        if not (1 <= a <= vertex_count and 1 <= b <= vertex_count):
            raise InputError(f"edge {a}-{b} uses a vertex outside 1..{vertex_count}")
        if a == b:
            raise InputError(f"loop at vertex {a} is not allowed")
        key = frozenset((a, b))
        if key in seen:
            raise InputError(f"duplicate edge {a}-{b}")
        seen.add(key)
        G.add_edge(a, b)
    return G


def graphic_ideal(
    vertex_count: int,
    edges: Sequence[Tuple[int, int]],
    max_edges: int = DEFAULT_MAX_EDGES,
) -> MonomialIdeal:
    """One square-free generator per maximal spanning forest."""
    if len(edges) > max_edges:
        raise ResourceLimitError("graphic edge", max_edges, len(edges))
    G = build_graph(vertex_count, edges)
    n = len(edges)
    rank = vertex_count - nx.number_connected_components(G)

    bases = []
    for subset in itertools.combinations(range(n), rank):
        uf = UnionFind()
        acyclic = True
        for idx in subset:
            a, b = edges[idx]
            if uf[a] == uf[b]:
                acyclic = False
                break
            uf.union(a, b)
        if acyclic:
            bases.append(Monomial.from_support(subset, n))
    return MonomialIdeal.from_generators(bases, n)


def spanning_tree_count(vertex_count: int, edges: Sequence[Tuple[int, int]]) -> int:
    """Kirchhoff: determinant of the reduced Laplacian (0 if disconnected)."""
    G = build_graph(vertex_count, edges)
    if vertex_count == 1:
        return 1
    L = Matrix.zeros(vertex_count, vertex_count)
    for a, b in G.edges():
        L[a - 1, a - 1] += 1
        L[b - 1, b - 1] += 1
        L[a - 1, b - 1] -= 1
        L[b - 1, a - 1] -= 1
    return int(L[1:, 1:].det())


def transversal_ideal(sets: Sequence[PrimeSupport], n: int) -> MonomialIdeal:
    """Product of the monomial primes generated by each set."""
    if not sets:
        raise InputError("transversal ideal needs at least one set")
    result = MonomialIdeal.unit(n)
    for p in sets:
        if not p.vars:
            raise InputError("transversal sets must be nonempty")
        result = multiply(result, MonomialIdeal.prime(p, n))
    return result


def normalize(I: MonomialIdeal) -> Tuple[MonomialIdeal, Tuple[int, ...]]:
    """
    Divide out gcd(I) and drop variables outside the support.

    Returns the ideal on the kept variables and their ambient indices.
    """
    inv = basic_invariants(I)
    g = inv.gcd.exps
    reduced = [tuple(a - b for a, b in zip(e, g)) for e in I.exps]
    kept = sorted({i for e in reduced for i, x in enumerate(e) if x})
    out = MonomialIdeal.from_exponents(([e[i] for i in kept] for e in reduced), len(kept))
    return out, tuple(kept)
