"""
Irreducible decomposition of monomial ideals by generator splitting.

Used as an independent oracle for associated primes: the radicals of
the irredundant irreducible components are exactly Ass(R/J).
"""

from __future__ import annotations

from typing import List, Set, Tuple

from app.core.exceptions import InputError, ResourceLimitError
from app.domain.ideals import MonomialIdeal, is_subideal
from app.domain.monomials import PrimeSupport, sort_primes

DEFAULT_MAX_COMPONENTS = 20000


def _is_irreducible(J: MonomialIdeal) -> bool:
    return all(len(g.support) <= 1 for g in J.gens)


def _split_point(J: MonomialIdeal) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    for g in J.exps:
        support = [i for i, e in enumerate(g) if e]
        if len(support) >= 2:
            i = support[0]
            v = tuple(g[i] if j == i else 0 for j in range(J.n))
            w = tuple(0 if j == i else e for j, e in enumerate(g))
            return g, v, w
    raise AssertionError("irreducible ideal has no split point")


def _add_generator(J: MonomialIdeal, e: Tuple[int, ...]) -> MonomialIdeal:
    return MonomialIdeal._from_exps([e] + [g for g in J.exps], J.n)


def irreducible_decomposition(
    J: MonomialIdeal, max_components: int = DEFAULT_MAX_COMPONENTS
) -> List[MonomialIdeal]:
    """J = (J + (v)) ∩ (J + (w)) for u = v*w with coprime nontrivial v, w."""
    if J.is_zero:
        raise InputError("the zero ideal has no irreducible decomposition")
    if J.is_unit:
        raise InputError("the unit ideal has no irreducible decomposition")

    leaves: Set[MonomialIdeal] = set()
    visited: Set[MonomialIdeal] = set()
    stack = [J]
    while stack:
        K = stack.pop()
        if K in visited:
            continue
        visited.add(K)
        if _is_irreducible(K):
            leaves.add(K)
            if len(leaves) > max_components:
                raise ResourceLimitError("irreducible component", max_components, len(leaves))
            continue
        if len(visited) > 4 * max_components:
            raise ResourceLimitError("decomposition step", 4 * max_components, len(visited))
        _, v, w = _split_point(K)
        stack.append(_add_generator(K, w))
        stack.append(_add_generator(K, v))

    # Irreducible monomial ideals are lcm-prime, so dropping every component
    # that contains another leaves an irredundant decomposition.
    ordered = sorted(leaves, key=lambda C: (len(C.gens), [g.sort_key for g in C.gens]))
    kept: List[MonomialIdeal] = []
    for C in ordered:
        if not any(is_subideal(K, C) for K in kept):
            kept = [K for K in kept if not is_subideal(C, K)]
            kept.append(C)
    return sorted(kept, key=lambda C: (radical(C).sort_key, [g.sort_key for g in C.gens]))


def radical(C: MonomialIdeal) -> PrimeSupport:
    """Radical of an irreducible component: the prime on its generator supports."""
    return PrimeSupport(frozenset(i for g in C.gens for i in g.support))


def ass_from_decomposition(J: MonomialIdeal, max_components: int = DEFAULT_MAX_COMPONENTS) -> Tuple[PrimeSupport, ...]:
    return sort_primes({radical(C) for C in irreducible_decomposition(J, max_components)})
