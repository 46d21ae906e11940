"""
Reduced simplicial homology over a prime field.

Complexes are given by facets (frozensets of vertex labels). Ranks of the
boundary maps are computed exactly with sympy's sparse DomainMatrix over
GF(p); no floating point is involved.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence

from sympy import GF
from sympy.polys.matrices import DomainMatrix

Face = FrozenSet[int]


def maximal_faces(faces: Iterable[Face]) -> List[Face]:
    """Drop faces contained in another; result sorted by (size desc, labels)."""
    unique = sorted(set(faces), key=lambda f: (-len(f), sorted(f)))
    kept: List[Face] = []
    for f in unique:
        if not any(f <= k for k in kept):
            kept.append(f)
    return kept


def is_cone(facets: Sequence[Face]) -> bool:
    """Some vertex lies in every facet; such a complex is contractible."""
    if not facets:
        return False
    common = frozenset.intersection(*facets)
    return bool(common)


def nerve(facets: Sequence[Face]) -> List[Face]:
    """Facets of the nerve of the facet cover (same homotopy type)."""
    idx = range(len(facets))
    faces = []
    for size in range(1, len(facets) + 1):
        for combo in combinations(idx, size):
            if frozenset.intersection(*(facets[i] for i in combo)):
                faces.append(frozenset(combo))
    return maximal_faces(faces)


def all_faces(facets: Sequence[Face]) -> Dict[int, List[Face]]:
    """Faces grouped by dimension, each group sorted; dimension -1 holds the empty face."""
    seen = set()
    for f in facets:
        items = sorted(f)
        for r in range(len(items) + 1):
            for sub in combinations(items, r):
                seen.add(frozenset(sub))
    by_dim: Dict[int, List[Face]] = {}
    for f in seen:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for dim in by_dim:
        by_dim[dim].sort(key=sorted)
    return by_dim


@lru_cache(maxsize=8)
def _field(prime: int):
    return GF(prime)


def _boundary_rank(higher: List[Face], lower: List[Face], prime: int) -> int:
    if not higher or not lower:
        return 0
    K = _field(prime)
    one, minus_one = K(1), K(-1)
    position = {f: i for i, f in enumerate(lower)}
    rows: Dict[int, Dict[int, object]] = {}
    for col, face in enumerate(higher):
        items = sorted(face)
        for j, v in enumerate(items):
            row = position[face - {v}]
            rows.setdefault(row, {})[col] = one if j % 2 == 0 else minus_one
    return DomainMatrix(rows, (len(lower), len(higher)), K).rank()


def reduced_homology(facets: Sequence[Face], prime: int) -> Dict[int, int]:
    """
    Nonzero reduced Betti numbers {dimension: rank} of the complex.

    The void complex (no facets) has no homology; the complex {∅} has
    rank one in dimension -1.
    """
    facets = maximal_faces(facets)
    if not facets:
        return {}
    if facets == [frozenset()]:
        return {-1: 1}
    if is_cone(facets):
        return {}

    vertex_count = len(frozenset.union(*facets))
    if len(facets) < vertex_count:
        facets = nerve(facets)
        if is_cone(facets):
            return {}

    faces = all_faces(facets)
    top = max(faces)
    ranks = {dim: _boundary_rank(faces.get(dim, []), faces.get(dim - 1, []), prime)
             for dim in range(0, top + 1)}

    out: Dict[int, int] = {}
    for dim in range(-1, top + 1):
        h = len(faces.get(dim, [])) - ranks.get(dim, 0) - ranks.get(dim + 1, 0)
        if h:
            out[dim] = h
    return out
