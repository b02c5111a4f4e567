import itertools

import pytest

from blockperm.partitions import block_shuffles, set_partitions
from blockperm.perms import (
    Permutation,
    adjacent_transposition,
    all_permutations,
    concat_perms,
    max_shuffle,
    parse_permutation,
    rotation_shuffle,
    shuffles,
    weak_leq,
)


def inversion_set(sigma):
    """Oracle: scan all position pairs directly."""
    return {
        (i, j)
        for i in range(1, sigma.n + 1)
        for j in range(i + 1, sigma.n + 1)
        if sigma(i) > sigma(j)
    }


class TestBasics:
    def test_identity_and_call(self):
        e = Permutation.identity(4)
        assert [e(i) for i in range(1, 5)] == [1, 2, 3, 4]

    def test_invalid(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    def test_compose_order(self):
        # tau first: (sigma * tau)(i) == sigma(tau(i))
        sigma = Permutation((2, 3, 1))
        tau = Permutation((1, 3, 2))
        prod = sigma * tau
        for i in range(1, 4):
            assert prod(i) == sigma(tau(i))

    def test_inverse(self):
        for p in all_permutations(4):
            assert p * p.inverse() == Permutation.identity(4)
            assert p.inverse() * p == Permutation.identity(4)

    def test_text_roundtrip(self):
        assert str(Permutation((2, 3, 1))) == "[2,3,1]"
        for p in all_permutations(3):
            assert parse_permutation(str(p)) == p
        assert parse_permutation("[]") == Permutation(())


class TestInversions:
    def test_identity_empty(self):
        assert Permutation.identity(5).inversions() == set()

    def test_adjacent_transposition(self):
        assert adjacent_transposition(2, 1).inversions() == {(1, 2)}

    def test_max_shuffle_2_2(self):
        xi = max_shuffle(2, 2)
        assert xi.images == (3, 4, 1, 2)
        assert xi.inversions() == {(1, 3), (1, 4), (2, 3), (2, 4)}

    def test_matches_oracle(self):
        for p in all_permutations(4):
            assert p.inversions() == inversion_set(p)


class TestWeakOrder:
    def test_identity_is_bottom(self):
        e = Permutation.identity(4)
        for p in all_permutations(4):
            assert weak_leq(e, p)

    def test_reflexive(self):
        for p in all_permutations(4):
            assert weak_leq(p, p)

    def test_containment_matches_oracle(self):
        for s in all_permutations(4):
            for t in all_permutations(4):
                assert weak_leq(s, t) == (inversion_set(s) <= inversion_set(t))

    def test_s1_not_below_max_shuffle_2_2(self):
        # computed with the inversion-set oracle: (1,2) is not an inversion
        # of [3,4,1,2], so the containment fails
        s1 = adjacent_transposition(4, 1)
        assert weak_leq(s1, max_shuffle(2, 2)) is False

    def test_partial_order(self):
        perms = all_permutations(4)
        for s, t in itertools.combinations(perms, 2):
            assert not (weak_leq(s, t) and weak_leq(t, s))
        for s, t, u in itertools.product(perms, repeat=3):
            if weak_leq(s, t) and weak_leq(t, u):
                assert weak_leq(s, u)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            weak_leq(Permutation.identity(2), Permutation.identity(3))


class TestShuffles:
    def test_one_one(self):
        assert set(shuffles(1, 1)) == {Permutation.identity(2), Permutation((2, 1))}

    def test_degenerate(self):
        assert shuffles(0, 3) == [Permutation.identity(3)]
        assert shuffles(3, 0) == [Permutation.identity(3)]

    @pytest.mark.parametrize("p,q", [(1, 2), (2, 2), (2, 3), (3, 2)])
    def test_counts_and_monotonicity(self, p, q):
        import math

        sh = shuffles(p, q)
        assert len(sh) == math.comb(p + q, p)
        assert len(set(sh)) == len(sh)
        for xi in sh:
            assert all(xi(i) < xi(i + 1) for i in range(1, p))
            assert all(xi(i) < xi(i + 1) for i in range(p + 1, p + q))

    def test_max_shuffle_is_maximum(self):
        for p in range(4):
            for q in range(4 - p + 2):
                top = max_shuffle(p, q)
                candidates = shuffles(p, q)
                assert top in candidates
                assert all(weak_leq(xi, top) for xi in candidates)

    def test_max_shuffle_degenerate(self):
        assert max_shuffle(3, 0) == Permutation.identity(3)
        assert max_shuffle(1, 1) == Permutation((2, 1))

    def test_lower_ideal(self):
        perms = all_permutations(5)
        for p in range(6):
            sh = set(shuffles(p, 5 - p))
            for t in sh:
                for s in perms:
                    if weak_leq(s, t):
                        assert s in sh

    def test_block_shuffles_lower_ideal(self):
        perms = all_permutations(4)
        for a in set_partitions(4):
            sh = set(block_shuffles(a))
            for t in sh:
                for s in perms:
                    if weak_leq(s, t):
                        assert s in sh


class TestRotationShuffle:
    def test_three_four(self):
        assert rotation_shuffle(3, 4).images == (5, 6, 7, 1, 2, 3, 4)

    def test_degenerate(self):
        assert rotation_shuffle(4, 0) == Permutation.identity(4)
        assert rotation_shuffle(0, 4) == Permutation.identity(4)

    def test_inverse_pair(self):
        for n in range(4):
            for m in range(4):
                prod = rotation_shuffle(n, m) * rotation_shuffle(m, n)
                assert prod == Permutation.identity(n + m)

    def test_equals_max_shuffle(self):
        for n in range(4):
            for m in range(4):
                assert rotation_shuffle(n, m) == max_shuffle(n, m)


def test_concat_perms():
    s = Permutation((2, 1))
    t = Permutation((1, 3, 2))
    assert concat_perms(s, t).images == (2, 1, 3, 5, 4)
