import math
import random

import pytest

from conftest import brute_closure
from telescope.perm import PermGroup, Permutation, orbit


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


class TestPermutation:
    def test_compose_involution(self):
        swap = cyc(2, (0, 1))
        assert (swap * swap).is_identity()

    def test_compose_identity_law(self):
        p = cyc(5, (0, 3, 1))
        assert Permutation.identity(5) * p == p
        assert p * Permutation.identity(5) == p

    def test_compose_rightmost_first(self):
        # (0 2) after (0 1) walks 0 -> 1 -> 2 -> 0
        assert cyc(3, (0, 2)) * cyc(3, (0, 1)) == cyc(3, (0, 1, 2))

    def test_compose_degree_mismatch(self):
        with pytest.raises(ValueError):
            cyc(3, (0, 1)) * cyc(4, (0, 1))

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 2))

    def test_degree_zero(self):
        empty = Permutation(())
        assert empty.is_identity()
        assert (empty * empty).degree == 0
        assert empty.order() == 1
        assert empty.sign() == 1

    def test_order(self):
        assert Permutation.identity(4).order() == 1
        assert cyc(5, (0, 1), (2, 3, 4)).order() == 6
        assert cyc(3, (0, 1, 2)).order() == 3

    def test_order_by_iterated_composition(self):
        p = cyc(5, (0, 1), (2, 3, 4))
        power = p
        count = 1
        while not power.is_identity():
            power = power * p
            count += 1
        assert count == p.order()

    def test_order_minimality(self):
        rng = random.Random(5)
        for _ in range(50):
            images = list(range(7))
            rng.shuffle(images)
            p = Permutation(images)
            n = p.order()
            assert (p ** n).is_identity()
            for d in range(1, n):
                if n % d == 0:
                    assert not (p ** d).is_identity()

    def test_sign(self):
        assert Permutation.identity(6).sign() == 1
        assert cyc(6, (2, 5)).sign() == -1
        assert cyc(3, (0, 1, 2)).sign() == 1

    def test_sign_homomorphism(self):
        rng = random.Random(11)
        for _ in range(1000):
            a = list(range(8))
            b = list(range(8))
            rng.shuffle(a)
            rng.shuffle(b)
            p, q = Permutation(a), Permutation(b)
            assert (p * q).sign() == p.sign() * q.sign()

    def test_inverse_and_associativity(self):
        rng = random.Random(12)
        for _ in range(300):
            perms = []
            for _ in range(3):
                images = list(range(6))
                rng.shuffle(images)
                perms.append(Permutation(images))
            p, q, r = perms
            assert (p * q) * r == p * (q * r)
            assert (p * q).inverse() == q.inverse() * p.inverse()
            assert (p * p.inverse()).is_identity()


class TestOrbit:
    def test_identity_generator(self):
        assert orbit([Permutation.identity(4)], 0) == [0]

    def test_transitive_cycle(self):
        assert set(orbit([cyc(3, (0, 1, 2))], 1)) == {0, 1, 2}

    def test_product_of_transpositions(self):
        assert set(orbit([cyc(4, (0, 1), (2, 3))], 2)) == {2, 3}

    def test_point_out_of_domain(self):
        with pytest.raises(ValueError):
            orbit([cyc(3, (0, 1))], 3)

    def test_orbit_sizes_partition_the_domain(self):
        gens = [cyc(7, (0, 1, 2)), cyc(7, (4, 5))]
        seen = set()
        total = 0
        for point in range(7):
            if point not in seen:
                part = orbit(gens, point)
                seen.update(part)
                total += len(part)
        assert total == 7


class TestPermGroup:
    def test_single_transposition(self):
        assert PermGroup([cyc(2, (0, 1))]).order() == 2

    def test_sym4_from_cycle_and_transposition(self):
        group = PermGroup([cyc(4, (0, 1, 2)), cyc(4, (2, 3))])
        assert group.order() == 24
        assert len(brute_closure(group.generators)) == 24

    def test_sym5(self):
        group = PermGroup([cyc(5, (0, 1, 2, 3, 4)), cyc(5, (0, 1))])
        assert group.order() == 120

    def test_dihedral(self):
        group = PermGroup([cyc(4, (0, 2), (1, 3)), cyc(4, (0, 1))])
        assert group.order() == len(brute_closure(group.generators))

    def test_trivial_group(self):
        assert PermGroup([Permutation.identity(5)]).order() == 1

    def test_build_chain_idempotent(self):
        group = PermGroup([cyc(4, (0, 1, 2)), cyc(4, (2, 3))])
        assert group.build_chain().order() == group.build_chain().order() == 24

    def test_generators_are_members(self):
        group = PermGroup([cyc(6, (0, 1, 2)), cyc(6, (3, 4)), cyc(6, (1, 5))])
        for g in group.generators:
            assert group.contains(g)

    def test_contains_examples(self):
        three_cycle = PermGroup([cyc(3, (0, 1, 2))])
        assert three_cycle.contains(Permutation.identity(3))
        assert not three_cycle.contains(cyc(3, (0, 1)))
        sym4 = PermGroup([cyc(4, (0, 1, 2)), cyc(4, (2, 3))])
        assert sym4.contains(cyc(4, (0, 2)))

    def test_contains_degree_mismatch(self):
        with pytest.raises(ValueError):
            PermGroup([cyc(3, (0, 1))]).contains(cyc(4, (0, 1)))

    def test_order_of_element_divides_group_order(self):
        rng = random.Random(13)
        for _ in range(30):
            images = list(range(7))
            rng.shuffle(images)
            p = Permutation(images)
            assert PermGroup([p]).order() % p.order() == 0

    def test_agreement_with_closure(self):
        rng = random.Random(99)
        for _ in range(25):
            degree = rng.randrange(2, 8)
            gens = []
            for _ in range(rng.randrange(1, 4)):
                images = list(range(degree))
                rng.shuffle(images)
                gens.append(Permutation(images))
            group = PermGroup(gens)
            closure = brute_closure(gens)
            assert group.order() == len(closure)
            for _ in range(100):
                images = list(range(degree))
                rng.shuffle(images)
                candidate = Permutation(images)
                assert group.contains(candidate) == (candidate.images in closure)


class TestRecognition:
    def test_full_symmetric(self):
        assert PermGroup([cyc(4, (0, 1, 2)), cyc(4, (2, 3))]).is_full_symmetric()
        assert not PermGroup([cyc(3, (0, 1))]).is_full_symmetric()

    def test_full_alternating(self):
        assert PermGroup([cyc(3, (0, 1, 2))]).is_full_alternating()
        group = PermGroup([cyc(3, (0, 1))])
        assert not group.is_full_alternating()
        assert not group.is_full_symmetric()

    def test_alt5(self):
        group = PermGroup([cyc(5, (0, 1, 2, 3, 4)), cyc(5, (0, 1, 2))])
        assert group.order() == 60
        assert group.is_full_alternating()
        assert not group.is_full_symmetric()

    def test_tiny_degree_conventions(self):
        for degree in (0, 1):
            trivial = PermGroup([Permutation.identity(degree)])
            assert trivial.is_full_symmetric()
            assert trivial.is_full_alternating()
        two = PermGroup([cyc(2, (0, 1))])
        assert two.is_full_symmetric()
        assert not two.is_full_alternating()
        assert PermGroup([Permutation.identity(2)]).is_full_alternating()

    def test_exactness_against_factorial(self):
        group = PermGroup([cyc(6, (0, 1, 2, 3, 4, 5)), cyc(6, (0, 1))])
        assert group.order() == math.factorial(6)
        assert group.is_full_symmetric()
