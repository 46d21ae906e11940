"""
Multigraded Betti numbers and exact depth of R/J for monomial J.

For a multidegree a in the lcm lattice of G(J), the upper Koszul complex
K^a(J) = {S : x^(a - e_S) in J} computes beta_{i,a}(J) = dim H~_{i-1}(K^a).
A face S lies in K^a exactly when S ⊆ {i : g_i < a_i} for some generator
g dividing a, so those sets are the facets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from app.core.exceptions import InputError, ResourceLimitError
from app.core.parallel import ordered_map
from app.domain.ideals import Exps, MonomialIdeal, _grlex
from app.domain.simplicial import reduced_homology

logger = logging.getLogger("polystab.domain.betti")

DEFAULT_MAX_GENERATORS = 25
DEFAULT_MAX_LATTICE = 20000
DEFAULT_FIELD_PRIME = 32003


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,a}(J) for i >= 0; beta_{i+1,a}(R/J) is the same number."""

    n: int
    entries: Dict[Tuple[int, Exps], int] = field(default_factory=dict)

    @property
    def max_index(self) -> Optional[int]:
        return max((i for i, _ in self.entries), default=None)

    @property
    def pd(self) -> int:
        """Projective dimension of R/J."""
        top = self.max_index
        return 0 if top is None else top + 1

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def totals(self) -> Dict[int, int]:
        """Total Betti numbers of R/J by homological index (beta_0 = 1)."""
        out = {0: 1}
        for (i, _), rank in self.entries.items():
            out[i + 1] = out.get(i + 1, 0) + rank
        return dict(sorted(out.items()))


@dataclass(frozen=True)
class DepthResult:
    depth: int
    pd: int
    table: BettiTable
    field_prime: int
    lattice_size: int
    second_prime: Optional[int] = None
    discrepancy: Optional[bool] = None


def lcm_lattice(J: MonomialIdeal, max_size: int = DEFAULT_MAX_LATTICE) -> List[Exps]:
    """
    All lcms of nonempty subsets of G(J), grlex-sorted.

    Built by closing the generator set under lcm with single generators,
    which reaches every subset lcm.
    """
    gens = J.exps
    seen = set(gens)
    if len(seen) > max_size:
        raise ResourceLimitError("lcm lattice", max_size, len(seen))
    frontier = list(seen)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                m = tuple(a if a > b else b for a, b in zip(x, g))
                if m not in seen:
                    seen.add(m)
                    fresh.append(m)
                    if len(seen) > max_size:
                        raise ResourceLimitError("lcm lattice", max_size, len(seen))
        frontier = fresh
    return sorted(seen, key=_grlex)


def koszul_facets(gens: Sequence[Exps], a: Exps) -> List[FrozenSet[int]]:
    facets = []
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            facets.append(frozenset(i for i, (x, y) in enumerate(zip(g, a)) if x < y))
    return facets


def _ranks_at(a: Exps, gens: Tuple[Exps, ...], prime: int) -> Dict[int, int]:
    # H~_{i-1}(K^a) gives beta_{i,a}
    return {dim + 1: h for dim, h in reduced_homology(koszul_facets(gens, a), prime).items()}


def betti_table(
    J: MonomialIdeal,
    prime: int = DEFAULT_FIELD_PRIME,
    max_lattice: int = DEFAULT_MAX_LATTICE,
    workers: int = 1,
    lattice: Optional[List[Exps]] = None,
) -> BettiTable:
    if lattice is None:
        lattice = lcm_lattice(J, max_lattice)
    gens = tuple(J.exps)
    per_degree = ordered_map(partial(_ranks_at, gens=gens, prime=prime), lattice, workers)
    entries: Dict[Tuple[int, Exps], int] = {}
    for a, ranks in zip(lattice, per_degree):
        for i, r in ranks.items():
            entries[(i, a)] = r
    return BettiTable(J.n, entries)


def exact_depth(
    J: MonomialIdeal,
    field_prime: int = DEFAULT_FIELD_PRIME,
    second_prime: Optional[int] = None,
    max_generators: int = DEFAULT_MAX_GENERATORS,
    max_lattice: int = DEFAULT_MAX_LATTICE,
    workers: int = 1,
) -> DepthResult:
    if J.is_unit:
        raise InputError("exact depth of R/R is undefined (unit ideal)")
    if J.is_zero:
        return DepthResult(J.n, 0, BettiTable(J.n), field_prime, 0)
    if J.size > max_generators:
        raise ResourceLimitError("exact-depth generator", max_generators, J.size)

    lattice = lcm_lattice(J, max_lattice)
    table = betti_table(J, field_prime, max_lattice, workers, lattice)
    logger.debug("Betti table over GF(%d): %d multidegrees, pd(R/J)=%d", field_prime, len(lattice), table.pd)

    if second_prime and second_prime != field_prime:
        other = betti_table(J, second_prime, max_lattice, workers, lattice)
        discrepancy = other.entries != table.entries
        if discrepancy:
            logger.warning(
                "Betti numbers differ between GF(%d) and GF(%d) for %s", field_prime, second_prime, J
            )
        return DepthResult(table.depth, table.pd, table, field_prime, len(lattice), second_prime, discrepancy)

    return DepthResult(table.depth, table.pd, table, field_prime, len(lattice))
