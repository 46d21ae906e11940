"""
Monomial ideal tests: minimal generators, ideal operations, socle
candidates, localization and restriction.
"""

import itertools
import random

import pytest

from app.core.exceptions import DimensionMismatchError, InputError
from app.domain.ideals import (
    MonomialIdeal,
    basic_invariants,
    colon,
    contains,
    embed,
    ideal_sum,
    intersect,
    intersect_all,
    is_subideal,
    lcm_of_generators,
    localize,
    localize_with_map,
    minimalize,
    multiply,
    permute_variables,
    power,
    restrict,
    socle_candidates,
    socle_colon,
)
from app.domain.monomials import Monomial, PrimeSupport
from tests.helpers import ideal, mono, random_ideal, random_monomial, random_prime


class TestMinimalGenerators:
    """Generators are divisibility-minimal and grlex-sorted."""

    def test_redundant_generators_dropped(self):
        I = ideal(2, (1, 1), (1, 0), (0, 2))
        assert I.gens == (mono(1, 0), mono(0, 2))

    def test_duplicates_collapse(self):
        I = ideal(2, (1, 1), (1, 1))
        assert I.size == 1

    def test_wrong_length_rejected(self):
        with pytest.raises(DimensionMismatchError):
            ideal(3, (1, 1))

    def test_unit_absorbs_everything(self):
        I = ideal(2, (0, 0), (1, 1))
        assert I.is_unit

    def test_shape_properties(self, k3):
        assert k3.is_equigenerated
        assert k3.degree == 2
        assert k3.is_squarefree
        assert str(k3) == "(x1*x2, x1*x3, x2*x3)"

    def test_zero_ideal(self):
        Z = MonomialIdeal.zero(3)
        assert Z.is_zero
        assert str(Z) == "(0)"


class TestMembership:
    """contains and is_subideal."""

    def test_contains(self, k3):
        assert contains(k3, mono(1, 1, 1))
        assert not contains(k3, mono(2, 0, 0))

    def test_subideal(self, k3):
        assert is_subideal(power(k3, 2), k3)
        assert not is_subideal(k3, power(k3, 2))

    def test_contains_checks_length(self, k3):
        with pytest.raises(DimensionMismatchError):
            contains(k3, mono(1, 1))


class TestProducts:
    """multiply and power."""

    def test_power_of_maximal_ideal(self):
        m2 = power(MonomialIdeal.maximal(2), 2)
        assert m2.gens == (mono(2, 0), mono(1, 1), mono(0, 2))

    def test_zeroth_power_is_unit(self, k3):
        assert power(k3, 0).is_unit

    def test_square_of_k3(self, k3):
        assert power(k3, 2).size == 6

    def test_multiply_by_zero(self, k3):
        assert multiply(k3, MonomialIdeal.zero(3)).is_zero

    def test_negative_power(self, k3):
        with pytest.raises(InputError):
            power(k3, -1)

    def test_power_matches_repeated_multiply(self, k3):
        cube = multiply(multiply(k3, k3), k3)
        assert power(k3, 3) == cube


class TestColonSumIntersection:
    """colon, ideal_sum and intersect."""

    def test_colon(self):
        I = ideal(2, (2, 0), (1, 1))
        assert colon(I, mono(1, 0)) == MonomialIdeal.maximal(2)

    def test_colon_by_element_is_unit(self, k3):
        assert colon(k3, mono(1, 1, 0)).is_unit

    def test_sum(self):
        assert ideal_sum(ideal(2, (1, 0)), ideal(2, (0, 1))) == MonomialIdeal.maximal(2)

    def test_intersect(self):
        assert intersect(ideal(2, (1, 0)), ideal(2, (0, 1))) == ideal(2, (1, 1))

    def test_intersect_all_requires_input(self):
        with pytest.raises(InputError):
            intersect_all([])

    def test_intersection_of_primes_is_k3(self, k3):
        primes = [ideal(3, (1, 0, 0), (0, 1, 0)), ideal(3, (1, 0, 0), (0, 0, 1)), ideal(3, (0, 1, 0), (0, 0, 1))]
        assert intersect_all(primes) == k3

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_intersection_is_lower_bound(self, seed):
        rng = random.Random(seed)
        rows = lambda: [tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(3)]
        I, J = ideal(3, *rows()), ideal(3, *rows())
        K = intersect(I, J)
        assert is_subideal(K, I) and is_subideal(K, J)
        assert is_subideal(multiply(I, J), K)


class TestSocleCandidates:
    """Minimal monomials of (J : m) outside J."""

    def test_square_of_maximal_ideal(self):
        J = power(MonomialIdeal.maximal(2), 2)
        assert socle_candidates(J) == [(1, 0), (0, 1)]

    def test_maximal_ideal_has_unit_socle(self):
        assert socle_candidates(MonomialIdeal.maximal(2)) == [(0, 0)]

    def test_principal_ideal_has_none(self):
        assert socle_candidates(ideal(2, (1, 1))) == []

    def test_socle_colon(self):
        J = power(MonomialIdeal.maximal(2), 2)
        assert socle_colon(J) == MonomialIdeal.maximal(2)


class TestLocalization:
    """Setting variables outside p to 1."""

    def test_localize(self):
        I = ideal(3, (1, 1, 0), (0, 1, 1))
        local, index_map = localize_with_map(I, PrimeSupport.from_labels([1, 3]))
        assert index_map == (0, 2)
        assert local == MonomialIdeal.maximal(2)

    def test_localize_to_unit(self):
        I = ideal(3, (1, 1, 0), (0, 1, 1))
        assert localize(I, PrimeSupport.from_labels([1])).is_unit

    def test_empty_prime(self, k3):
        local = localize(k3, PrimeSupport(frozenset()))
        assert local.n == 0 and local.is_unit
        assert localize(MonomialIdeal.zero(3), PrimeSupport(frozenset())).is_zero

    def test_restrict(self):
        I = ideal(3, (1, 1, 0), (0, 1, 1))
        assert restrict(I, 1) == MonomialIdeal.maximal(2)

    def test_restrict_out_of_range(self, k3):
        with pytest.raises(InputError):
            restrict(k3, 3)


class TestInvariantsAndRelabeling:
    """gcd/support invariants, embedding and permutation."""

    def test_invariants(self):
        inv = basic_invariants(ideal(3, (1, 1, 0), (1, 0, 1)))
        assert inv.gcd == mono(1, 0, 0)
        assert not inv.gcd_is_one
        assert inv.full_support

    def test_zero_ideal_has_no_invariants(self):
        with pytest.raises(InputError):
            basic_invariants(MonomialIdeal.zero(2))

    def test_lcm_of_generators(self, k3):
        assert lcm_of_generators(k3) == mono(1, 1, 1)

    def test_embed(self):
        J = embed(MonomialIdeal.maximal(2), (1, 3), 4)
        assert J == ideal(4, (0, 1, 0, 0), (0, 0, 0, 1))

    def test_permute(self):
        I = ideal(3, (2, 1, 0))
        assert permute_variables(I, (2, 0, 1)) == ideal(3, (1, 0, 2))

    def test_permute_rejects_non_permutation(self, k3):
        with pytest.raises(InputError):
            permute_variables(k3, (0, 0, 1))


def brute_force_socle(J: MonomialIdeal):
    """Monomials u not in J with u*x_i in J for all i, found among divisors of lcm(G(J))."""
    top = lcm_of_generators(J).exps
    found = []
    for exps in itertools.product(*(range(e + 1) for e in top)):
        u = Monomial(exps)
        if contains(J, u):
            continue
        if all(contains(J, u * Monomial.variable(i, J.n)) for i in range(J.n)):
            found.append(u)
    return found


class TestSeededIdealProperties:
    """Algebraic identities on seeded random ideals."""

    @pytest.mark.parametrize("seed", range(20))
    def test_minimalize_ignores_order(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 5)
        gens = [random_monomial(rng, n) for _ in range(rng.randint(1, 8))]
        gens += gens[: rng.randint(0, len(gens))]
        shuffled = list(gens)
        rng.shuffle(shuffled)
        I = minimalize(gens, n)
        assert minimalize(shuffled, n) == I
        assert minimalize(I.gens, n) == I

    @pytest.mark.parametrize("seed", range(30))
    def test_colon_adjunction(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 6)
        I = random_ideal(rng, n)
        for _ in range(10):
            u, v = random_monomial(rng, n), random_monomial(rng, n)
            assert contains(colon(I, u), v) == contains(I, u * v)

    @pytest.mark.parametrize("seed", range(12))
    def test_power_exponents_add(self, seed):
        rng = random.Random(seed)
        I = random_ideal(rng, rng.randint(2, 4), max_gens=4, max_exp=1)
        a = rng.randint(1, 3)
        b = rng.randint(1, 5 - a)
        assert power(I, a + b) == multiply(power(I, a), power(I, b))

    @pytest.mark.parametrize("seed", range(20))
    def test_localization_commutes_with_powers(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 5)
        I = random_ideal(rng, n, max_gens=4)
        p = random_prime(rng, n)
        for k in (1, 2, 3):
            assert localize(power(I, k), p) == power(localize(I, p), k)

    @pytest.mark.parametrize("seed", range(20))
    def test_squarefree_localization_is_colon(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 6)
        I = random_ideal(rng, n, max_exp=1)
        p = random_prime(rng, n)
        excluded = Monomial.from_support([i for i in range(n) if i not in p.vars], n)
        assert embed(localize(I, p), p.sorted_vars, n) == colon(I, excluded)

    @pytest.mark.parametrize("seed", range(25))
    def test_socle_colon_matches_divisor_search(self, seed):
        rng = random.Random(seed)
        J = random_ideal(rng, rng.randint(1, 4), max_gens=5)
        witnesses = brute_force_socle(J)
        S = socle_colon(J)
        assert is_subideal(J, S)
        assert (S == J) == (not witnesses)
        assert S == minimalize(list(J.gens) + witnesses, J.n)
