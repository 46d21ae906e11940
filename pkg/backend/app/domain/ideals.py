"""
Monomial ideals and their exact arithmetic.

Every MonomialIdeal holds its minimal generating set G(I) in graded
lexicographic order, so ideal equality is tuple equality. All operations
are pure and return new ideals.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.core.exceptions import DimensionMismatchError, InputError
from app.domain.monomials import (
    DEFAULT_EXPONENT_LIMIT,
    Monomial,
    PrimeSupport,
    check_length,
)

Exps = Tuple[int, ...]


def _grlex(e: Exps) -> Tuple:
    return (sum(e), tuple(-x for x in e))


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal_exps(exps: Iterable[Exps]) -> List[Exps]:
    """Divisibility-minimal elements of a set of exponent vectors, grlex-sorted."""
    unique = set(exps)
    if len(unique) <= 1:
        return list(unique)

    by_degree: Dict[int, List[Exps]] = defaultdict(list)
    for e in unique:
        by_degree[sum(e)].append(e)

    if len(by_degree) == 1:
        return sorted(unique, key=_grlex)

    kept: List[Exps] = []
    for deg in sorted(by_degree):
        lower = list(kept)
        for e in by_degree[deg]:
            if not any(_divides(k, e) for k in lower):
                kept.append(e)
    kept.sort(key=_grlex)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of K[x1..xn] given by its minimal monomial generators."""

    n: int
    gens: Tuple[Monomial, ...]

    # ── constructors ───────────────────────────────────────────────────

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial], n: int) -> "MonomialIdeal":
        return minimalize(gens, n)

    @classmethod
    def from_exponents(cls, rows: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
        return minimalize((Monomial(tuple(r)) for r in rows), n)

    @classmethod
    def _from_exps(cls, exps: Iterable[Exps], n: int) -> "MonomialIdeal":
        return cls(n, tuple(Monomial._make(e) for e in _minimal_exps(exps)))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.one(n),))

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls._from_exps((Monomial.variable(i, n).exps for i in range(n)), n)

    @classmethod
    def prime(cls, p: PrimeSupport, n: int) -> "MonomialIdeal":
        p.check(n)
        return cls._from_exps((Monomial.variable(i, n).exps for i in p.vars), n)

    # ── shape ──────────────────────────────────────────────────────────

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def size(self) -> int:
        return len(self.gens)

    @property
    def exps(self) -> List[Exps]:
        return [g.exps for g in self.gens]

    @property
    def is_equigenerated(self) -> bool:
        return len({g.degree for g in self.gens}) == 1

    @property
    def degree(self) -> Optional[int]:
        degrees = {g.degree for g in self.gens}
        return degrees.pop() if len(degrees) == 1 else None

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def support(self) -> frozenset:
        out = set()
        for g in self.gens:
            out |= g.support
        return frozenset(out)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, {self})"


@dataclass(frozen=True)
class IdealInvariants:
    support: frozenset
    gcd: Monomial
    is_squarefree: bool
    is_equigenerated: bool
    degree: Optional[int]

    @property
    def full_support(self) -> bool:
        return self.support == frozenset(range(self.gcd.n))

    @property
    def gcd_is_one(self) -> bool:
        return self.gcd.is_one


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatchError(I.n, J.n)


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Divisibility-minimal, canonically ordered generating set."""
    exps = []
    for g in gens:
        check_length(g.exps, n)
        exps.append(g.exps)
    return MonomialIdeal._from_exps(exps, n)


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u.exps) != I.n:
        raise DimensionMismatchError(I.n, len(u.exps))
    ue = u.exps
    return any(_divides(g.exps, ue) for g in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I ⊆ J."""
    _same_ring(I, J)
    return all(contains(J, g) for g in I.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    products = set()
    for a in I.exps:
        for b in J.exps:
            products.add(tuple(x + y for x, y in zip(a, b)))
    if products and max(max(p) for p in products) > DEFAULT_EXPONENT_LIMIT:
        raise InputError("exponent overflow in ideal product")
    return MonomialIdeal._from_exps(products, I.n)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by repeated squaring; I^0 is the unit ideal."""
    if k < 0:
        raise InputError(f"power must be nonnegative, got {k}")
    result = MonomialIdeal.unit(I.n)
    base = I
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """(I : u), generated by g / gcd(g, u)."""
    check_length(u.exps, I.n)
    ue = u.exps
    return MonomialIdeal._from_exps(
        (tuple(a - b if a > b else 0 for a, b in zip(g, ue)) for g in I.exps), I.n
    )


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal._from_exps(I.exps + J.exps, I.n)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    lcms = {tuple(max(x, y) for x, y in zip(a, b)) for a in I.exps for b in J.exps}
    return MonomialIdeal._from_exps(lcms, I.n)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise InputError("intersection of an empty family")
    result = ideals[0]
    for J in ideals[1:]:
        result = intersect(result, J)
    return result


def socle_candidates(J: MonomialIdeal) -> List[Exps]:
    """
    Minimal monomials of (J : m) that are not in J.

    Folds the colons (J : x_i) in variable order; partial lcms already in J
    are dropped since every multiple of them stays in J.
    """
    n = J.n
    if J.is_zero or n == 0:
        return []
    gens = J.exps

    def outside(e: Exps) -> bool:
        return not any(_divides(g, e) for g in gens)

    frontier: Optional[List[Exps]] = None
    for i in range(n):
        colon_i = _minimal_exps(
            tuple(x - 1 if (j == i and x > 0) else x for j, x in enumerate(g)) for g in gens
        )
        if frontier is None:
            candidates = colon_i
        else:
            candidates = {
                tuple(max(x, y) for x, y in zip(w, h)) for w in frontier for h in colon_i
            }
        frontier = [e for e in _minimal_exps(candidates) if outside(e)]
        if not frontier:
            return []
    return frontier or []


def socle_colon(J: MonomialIdeal) -> MonomialIdeal:
    """(J : m) = J + (socle monomials)."""
    if J.n == 0:
        return J
    if J.is_zero:
        return J
    return MonomialIdeal._from_exps(J.exps + socle_candidates(J), J.n)


def localize_with_map(I: MonomialIdeal, p: PrimeSupport) -> Tuple[MonomialIdeal, Tuple[int, ...]]:
    """
    Monomial localization I(p): set x_i = 1 for i not in p.

    Returns the ideal in the dense subring on p's variables and the map
    from subring positions to ambient variable indices.
    """
    p.check(I.n)
    index_map = p.sorted_vars
    m = len(index_map)
    if I.is_zero:
        return MonomialIdeal.zero(m), index_map
    return (
        MonomialIdeal._from_exps((tuple(g[i] for i in index_map) for g in I.exps), m),
        index_map,
    )


def localize(I: MonomialIdeal, p: PrimeSupport) -> MonomialIdeal:
    return localize_with_map(I, p)[0]


def restrict(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """I[i]: delete the i-th exponent (0-based) of every generator."""
    if not 0 <= i < I.n:
        raise InputError(f"variable index {i + 1} outside 1..{I.n}")
    return MonomialIdeal._from_exps((g[:i] + g[i + 1:] for g in I.exps), I.n - 1)


def basic_invariants(I: MonomialIdeal) -> IdealInvariants:
    if I.is_zero:
        raise InputError("the zero ideal has no generator invariants")
    gcd = I.gens[0]
    for g in I.gens[1:]:
        gcd = gcd.gcd(g)
    return IdealInvariants(
        support=I.support,
        gcd=gcd,
        is_squarefree=I.is_squarefree,
        is_equigenerated=I.is_equigenerated,
        degree=I.degree,
    )


def lcm_of_generators(I: MonomialIdeal) -> Monomial:
    out = Monomial.one(I.n)
    for g in I.gens:
        out = out.lcm(g)
    return out


def embed(I: MonomialIdeal, variables: Sequence[int], n: int) -> MonomialIdeal:
    """Ideal of a subring (dense positions -> variables) seen in n variables."""
    if len(variables) != I.n:
        raise DimensionMismatchError(I.n, len(variables))
    return MonomialIdeal._from_exps((g.embed(variables, n).exps for g in I.gens), n)


def permute_variables(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Rename x_i -> x_{perm[i]} (0-based permutation of range(n))."""
    if sorted(perm) != list(range(I.n)):
        raise InputError("not a permutation of the variables")
    out = []
    for g in I.exps:
        e = [0] * I.n
        for i, x in enumerate(g):
            e[perm[i]] = x
        out.append(tuple(e))
    return MonomialIdeal._from_exps(out, I.n)
