"""
Associated primes, the socle test and analytic spread.

p ∈ Ass(R/J) iff the maximal ideal of the subring on p's variables is
associated to the localization J(p), i.e. J(p) has a socle monomial.
Localization commutes with powers, so Ass(J^k) for several k is computed
from powers of the (much smaller) localizations.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from app.core.exceptions import InputError, ResourceLimitError
from app.core.parallel import ordered_map
from app.domain.ideals import MonomialIdeal, _grlex, localize_with_map, multiply, socle_candidates
from app.domain.monomials import Monomial, PrimeSupport, sort_primes

logger = logging.getLogger("polystab.domain.stability")

DEFAULT_MAX_VARIABLES = 14


@dataclass(frozen=True)
class AssSet:
    """Canonically ordered associated primes; witnesses do not take part in equality."""

    n: int
    primes: Tuple[PrimeSupport, ...]
    witnesses: Dict[PrimeSupport, Monomial] = field(default_factory=dict, compare=False, hash=False)

    def __contains__(self, p: PrimeSupport) -> bool:
        return p in self.primes

    def __len__(self) -> int:
        return len(self.primes)

    def issubset(self, other: "AssSet") -> bool:
        return set(self.primes) <= set(other.primes)

    @property
    def has_maximal(self) -> bool:
        return PrimeSupport.maximal(self.n) in self.primes

    def labels(self) -> List[List[int]]:
        return [p.labels for p in self.primes]


# ── socle test ─────────────────────────────────────────────────────────


def _linear_socle(J: MonomialIdeal) -> Optional[Tuple[int, ...]]:
    # With a linear resolution the socle of R/J sits in degree D-1, so a
    # socle monomial is some g/x_i that reaches every variable.
    buckets: Dict[Tuple[int, ...], set] = defaultdict(set)
    for g in J.exps:
        for i, e in enumerate(g):
            if e:
                buckets[g[:i] + (e - 1,) + g[i + 1:]].add(i)
    full = [u for u, hits in buckets.items() if len(hits) == J.n]
    return min(full, key=_grlex) if full else None


def socle_witness(J: MonomialIdeal, assume_linear: bool = False) -> Optional[Monomial]:
    """
    A monomial u ∉ J with u*x_i ∈ J for every i, or None.

    assume_linear is only sound for polymatroidal J (linear quotients).
    """
    if J.is_unit:
        raise InputError("socle test needs a proper ideal (got the unit ideal)")
    if J.is_zero or J.n == 0:
        return None
    if assume_linear and J.is_equigenerated:
        u = _linear_socle(J)
    else:
        candidates = socle_candidates(J)
        u = min(candidates, key=_grlex) if candidates else None
    return Monomial._make(u) if u is not None else None


def max_ideal_associated(J: MonomialIdeal, assume_linear: bool = False) -> bool:
    """m ∈ Ass(R/J), equivalently depth R/J = 0."""
    return socle_witness(J, assume_linear) is not None


# ── associated primes ──────────────────────────────────────────────────


def _candidate_primes(J: MonomialIdeal) -> List[PrimeSupport]:
    """Nonempty p covering every generator, each of p's variables used by J(p)."""
    supports = [g.support for g in J.gens]
    out = []
    for size in range(1, J.n + 1):
        for combo in itertools.combinations(range(J.n), size):
            p = frozenset(combo)
            if not all(s & p for s in supports):
                continue
            if not all(any(i in s for s in supports) for i in p):
                continue
            out.append(PrimeSupport(p))
    return out


def _check_sweep(J: MonomialIdeal, max_variables: int) -> None:
    if J.is_unit:
        raise InputError("associated primes need a proper ideal (got the unit ideal)")
    if J.is_zero:
        raise InputError("associated primes of the zero ideal are not computed")
    if J.n > max_variables:
        raise ResourceLimitError("Ass sweep variable", max_variables, J.n)


def _prime_profile(
    p: PrimeSupport, I: MonomialIdeal, powers: int, assume_linear: bool
) -> List[Optional[Monomial]]:
    """Socle witnesses of I(p)^k for k = 1..powers, embedded in the ambient ring."""
    local, index_map = localize_with_map(I, p)
    out: List[Optional[Monomial]] = []
    current = local
    for k in range(1, powers + 1):
        if k > 1:
            current = multiply(current, local)
        u = socle_witness(current, assume_linear)
        out.append(u.embed(index_map, I.n) if u is not None else None)
    return out


def ass_chain(
    I: MonomialIdeal,
    powers: int,
    assume_linear: bool = False,
    max_variables: int = DEFAULT_MAX_VARIABLES,
    workers: int = 1,
) -> List[AssSet]:
    """[Ass(I^1), ..., Ass(I^powers)]."""
    _check_sweep(I, max_variables)
    if powers < 1:
        raise InputError(f"power bound must be positive, got {powers}")
    candidates = _candidate_primes(I)
    logger.debug("Ass sweep over %d candidate primes up to power %d", len(candidates), powers)
    profiles = ordered_map(
        partial(_prime_profile, I=I, powers=powers, assume_linear=assume_linear),
        candidates,
        workers,
    )
    chain = []
    for k in range(powers):
        witnesses = {p: prof[k] for p, prof in zip(candidates, profiles) if prof[k] is not None}
        chain.append(AssSet(I.n, sort_primes(witnesses), witnesses))
    return chain


def ass_primes(
    J: MonomialIdeal,
    assume_linear: bool = False,
    max_variables: int = DEFAULT_MAX_VARIABLES,
    workers: int = 1,
) -> AssSet:
    return ass_chain(J, 1, assume_linear, max_variables, workers)[0]


def prime_in_ass(J: MonomialIdeal, p: PrimeSupport, assume_linear: bool = False) -> bool:
    local, _ = localize_with_map(J, p)
    if local.is_unit or not p.vars:
        return False
    return max_ideal_associated(local, assume_linear)


# ── analytic spread ────────────────────────────────────────────────────


def exponent_rank(rows: Sequence[Sequence[int]], n: int) -> int:
    if not rows or n == 0:
        return 0
    M = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), n), ZZ)
    return M.convert_to(QQ).rank()


def analytic_spread(I: MonomialIdeal) -> int:
    """Rank over Q of the exponent matrix of G(I) (equigenerated I)."""
    if not I.is_equigenerated:
        raise InputError("analytic spread is computed for equigenerated ideals only")
    return exponent_rank(I.exps, I.n)
