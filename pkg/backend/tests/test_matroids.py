"""
Matroid tests: exchange property, constructors and normalization.
"""

import random

import pytest

from app.core.exceptions import InputError, ResourceLimitError
from app.domain.ideals import MonomialIdeal, colon, permute_variables, power
from app.domain.matroids import (
    build_graph,
    cover_profile,
    graphic_ideal,
    is_certifiable,
    is_matroidal,
    is_polymatroidal,
    normalize,
    spanning_tree_count,
    transversal_ideal,
    uniform_ideal,
    veronese_type,
)
from app.domain.monomials import PrimeSupport
from tests.helpers import (
    ideal,
    mono,
    random_connected_edges,
    random_monomial,
    random_polymatroidal,
)

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


class TestExchangeProperty:
    """Direct pairwise check of the polymatroidal exchange property."""

    def test_uniform_is_polymatroidal(self):
        assert is_polymatroidal(uniform_ideal(4, 2)).holds

    def test_failure_carries_witness(self):
        verdict = is_polymatroidal(ideal(4, (1, 1, 0, 0), (0, 0, 1, 1)))
        assert not verdict.holds
        assert verdict.witness == (mono(1, 1, 0, 0), mono(0, 0, 1, 1), 0)

    def test_not_equigenerated(self):
        verdict = is_polymatroidal(ideal(2, (1, 0), (0, 2)))
        assert not verdict
        assert verdict.reason == "not equigenerated"

    def test_zero_ideal(self):
        assert not is_polymatroidal(MonomialIdeal.zero(2)).holds

    def test_polymatroidal_but_not_matroidal(self, km4):
        assert is_polymatroidal(km4).holds
        assert not is_matroidal(km4)

    @pytest.mark.parametrize("seed", range(6))
    def test_verdict_is_permutation_invariant(self, seed):
        rng = random.Random(seed)
        rows = {tuple(rng.randint(0, 1) for _ in range(4)) for _ in range(5)}
        rows = [r for r in rows if sum(r) == 2] or [(1, 1, 0, 0)]
        I = ideal(4, *rows)
        perm = list(range(4))
        rng.shuffle(perm)
        assert is_polymatroidal(I).holds == is_polymatroidal(permute_variables(I, perm)).holds


class TestCertification:
    """Matroidal with gcd 1 and full support."""

    def test_k3_is_certifiable(self, k3):
        assert is_certifiable(k3)

    def test_gcd_blocks_certification(self):
        assert not is_certifiable(ideal(3, (1, 1, 0), (1, 0, 1)))

    def test_cover_profile(self, k3):
        profile = cover_profile(k3)
        assert profile.counts == (2, 2, 2)
        assert profile.minimum == 2

    def test_cover_profile_needs_equigenerated(self):
        with pytest.raises(InputError):
            cover_profile(ideal(2, (1, 0), (0, 2)))


class TestVeroneseType:
    """Degree-d monomials under per-variable caps."""

    def test_squarefree_case_is_uniform(self, k3):
        assert veronese_type(3, 2, [1, 1, 1]) == k3

    def test_capped(self):
        assert veronese_type(2, 2, [2, 2]).gens == (mono(2, 0), mono(1, 1), mono(0, 2))

    def test_count(self):
        # degree 3 in 3 variables, caps 2: 10 monomials minus x^3, y^3, z^3
        assert veronese_type(3, 3, [2, 2, 2]).size == 7

    def test_small_caps_give_zero_ideal(self):
        assert veronese_type(2, 3, [1, 1]).is_zero

    def test_cap_outside_range(self):
        with pytest.raises(InputError):
            veronese_type(2, 2, [3, 1])

    def test_uniform_range(self):
        with pytest.raises(InputError):
            uniform_ideal(2, 3)

    def test_veronese_is_polymatroidal(self):
        assert is_polymatroidal(veronese_type(4, 3, [2, 1, 2, 1])).holds


class TestGraphicIdeal:
    """One generator per spanning forest; variables are edges."""

    def test_triangle(self, k3):
        assert graphic_ideal(3, [(1, 2), (1, 3), (2, 3)]) == k3

    def test_k4_tree_count(self):
        I = graphic_ideal(4, K4_EDGES)
        assert I.size == 16 == spanning_tree_count(4, K4_EDGES)
        assert is_matroidal(I)

    def test_cycle(self):
        edges = [(1, 2), (2, 3), (3, 4), (1, 4)]
        assert graphic_ideal(4, edges).size == 4 == spanning_tree_count(4, edges)

    def test_tree_is_principal(self):
        assert graphic_ideal(4, [(1, 2), (2, 3), (3, 4)]).gens == (mono(1, 1, 1),)

    def test_disconnected_count_is_zero(self):
        assert spanning_tree_count(4, [(1, 2), (3, 4)]) == 0

    def test_loop_rejected(self):
        with pytest.raises(InputError):
            build_graph(2, [(1, 1)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(InputError):
            build_graph(2, [(1, 2), (2, 1)])

    def test_edge_cap(self):
        with pytest.raises(ResourceLimitError):
            graphic_ideal(4, K4_EDGES, max_edges=5)

    def test_every_generator_is_a_spanning_tree(self):
        I = graphic_ideal(4, K4_EDGES)
        for g in I.gens:
            assert g.degree == 3
        assert len(set(I.gens)) == 16


class TestTransversalIdeal:
    """Products of monomial primes."""

    def test_disjoint_blocks(self, two_blocks):
        sets = [PrimeSupport.from_labels([1, 2]), PrimeSupport.from_labels([3, 4])]
        assert transversal_ideal(sets, 4) == two_blocks

    def test_overlapping_sets(self):
        sets = [PrimeSupport.from_labels([1, 2]), PrimeSupport.from_labels([2, 3])]
        I = transversal_ideal(sets, 3)
        assert I.gens == (mono(1, 1, 0), mono(1, 0, 1), mono(0, 2, 0), mono(0, 1, 1))
        assert is_polymatroidal(I).holds

    def test_empty_family(self):
        with pytest.raises(InputError):
            transversal_ideal([], 3)


class TestNormalize:
    """Divide out the gcd and drop unused variables."""

    def test_normalize(self):
        I, kept = normalize(ideal(4, (1, 1, 0, 1), (1, 0, 1, 1)))
        assert kept == (1, 2)
        assert I == MonomialIdeal.maximal(2)

    def test_normalized_graphic_drops_bridges(self):
        # triangle 1-2-3 plus pendant edge 3-4 (the bridge is in every tree)
        raw = graphic_ideal(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
        I, kept = normalize(raw)
        assert kept == (0, 1, 2)
        assert is_certifiable(I)


class TestPolymatroidalClosure:
    """Powers and monomial colons of polymatroidal ideals stay polymatroidal."""

    @pytest.mark.parametrize("seed", range(12))
    def test_powers(self, seed):
        I = random_polymatroidal(random.Random(seed))
        assert is_polymatroidal(I).holds
        for k in (2, 3):
            assert is_polymatroidal(power(I, k)).holds

    @pytest.mark.parametrize("seed", range(20))
    def test_colons(self, seed):
        rng = random.Random(seed)
        I = random_polymatroidal(rng)
        for _ in range(5):
            u = random_monomial(rng, I.n)
            assert is_polymatroidal(colon(I, u)).holds


class TestSpanningTreeCount:
    """Generator count of a connected graphic ideal equals Kirchhoff's count."""

    @pytest.mark.parametrize("seed", range(15))
    def test_random_connected_graphs(self, seed):
        rng = random.Random(seed)
        vertices = rng.randint(2, 5)
        edges = random_connected_edges(rng, vertices)
        assert graphic_ideal(vertices, edges).size == spanning_tree_count(vertices, edges)
