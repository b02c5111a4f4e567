import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from blockperm.monoid import (
    EnumerationCeilingError,
    breaking_points,
    closure_from_generators,
    compose,
    concat,
    count_ubp,
    count_ubp_recursive,
    diagram_inverse,
    elements_with_domain,
    enumerate_ubp,
    from_block_images,
    from_permutation,
    hasse_component,
    id_of_partition,
    identity,
    left_compose_perm,
    make_ubp,
    merge_generator,
    parse_ubp,
    right_compose_perm,
    shuffle_factorization,
    split_at_breaking_point,
    to_labels,
    from_labels,
    transposition_generator,
    ubp_from_json,
    ubp_to_json,
    weak_leq,
)
from blockperm.partitions import (
    SetPartition,
    block_shuffles,
    meet,
    parse_set_partition,
    partition_action,
    set_partitions,
)
from blockperm.perms import Permutation, all_permutations, shuffles


def the_f1():
    # {1,3} -> {1,2}, {2} -> {3}
    return from_block_images(3, [((1, 3), (1, 2)), ((2,), (3,))])


class TestConstruction:
    def test_uniform_example(self):
        f = the_f1()
        assert f.domain == parse_set_partition("{1,3}{2}")
        assert f.codomain == parse_set_partition("{1,2}{3}")
        assert f.image_block(0) == (1, 2)
        assert f.image_block(1) == (3,)

    def test_non_uniform_rejected(self):
        domain = parse_set_partition("{1,3}{2}")
        codomain = parse_set_partition("{1,2}{3}")
        with pytest.raises(ValueError, match="non-uniform"):
            make_ubp(domain, codomain, (1, 0))

    def test_non_bijective_rejected(self):
        domain = parse_set_partition("{1}{2}")
        with pytest.raises(ValueError, match="bijection"):
            make_ubp(domain, domain, (0, 0))

    def test_empty_element(self):
        e = identity(0)
        assert e.n == 0
        assert str(e) == "{}->{}"

    def test_eight_point_example(self):
        f = from_block_images(
            8,
            [
                ((1, 3, 4), (3, 5, 6)),
                ((2,), (4,)),
                ((5, 7), (1, 2)),
                ((6,), (8,)),
                ((8,), (7,)),
            ],
        )
        assert str(f) == "{1,3,4}->{3,5,6};{2}->{4};{5,7}->{1,2};{6}->{8};{8}->{7}"
        assert parse_ubp(str(f)) == f


class TestLabels:
    def test_roundtrip(self):
        for n in range(5):
            for f in enumerate_ubp(n):
                top, bot = to_labels(f)
                assert from_labels(n, top, bot) == f

    def test_canonical_rows(self):
        for f in enumerate_ubp(3):
            top, bot = to_labels(f)
            seen = []
            for label in top:
                if label not in seen:
                    seen.append(label)
            assert seen == sorted(seen)


class TestCompose:
    def test_identity_neutral(self):
        for f in enumerate_ubp(3):
            assert compose(identity(3), f) == f
            assert compose(f, identity(3)) == f

    def test_merge_absorbs_swap(self):
        for n in range(2, 5):
            for i in range(1, n):
                s = transposition_generator(n, i)
                b = merge_generator(n, i)
                assert compose(b, s) == b
                assert compose(s, b) == b

    def test_adjacent_merges_chain(self):
        b1 = merge_generator(3, 1)
        b2 = merge_generator(3, 2)
        whole = id_of_partition(parse_set_partition("{1,2,3}"))
        assert compose(b1, b2) == whole
        assert compose(b2, b1) == whole

    def test_permutation_embedding(self):
        for s in all_permutations(3):
            for t in all_permutations(3):
                assert from_permutation(s * t) == compose(
                    from_permutation(s), from_permutation(t)
                )

    def test_meet_of_idempotents(self):
        parts = set_partitions(4)
        for a in parts:
            for b in parts:
                assert compose(id_of_partition(a), id_of_partition(b)) == id_of_partition(
                    meet(a, b)
                )

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="size mismatch"):
            compose(identity(2), identity(3))

    def test_fast_paths_match_general_route(self):
        for f in enumerate_ubp(3):
            for sigma in all_permutations(3):
                u = from_permutation(sigma)
                assert left_compose_perm(sigma, f) == compose(u, f)
                assert right_compose_perm(f, sigma) == compose(f, u)

    def test_relabeling_sides(self):
        for f in enumerate_ubp(3):
            for sigma in all_permutations(3):
                left = left_compose_perm(sigma, f)
                assert left.domain == f.domain
                assert left.codomain == partition_action(sigma, f.codomain)
                right = right_compose_perm(f, sigma)
                assert right.domain == partition_action(sigma.inverse(), f.domain)
                assert right.codomain == f.codomain

    def test_associative_exhaustive_n2(self):
        elems = enumerate_ubp(2)
        for f, g, h in itertools.product(elems, repeat=3):
            assert compose(compose(h, g), f) == compose(h, compose(g, f))


@st.composite
def ubp_strategy(draw, n=4):
    elems = enumerate_ubp(n)
    return draw(st.sampled_from(elems))


class TestComposeProperties:
    @given(ubp_strategy(), ubp_strategy(), ubp_strategy())
    @settings(max_examples=200, deadline=None)
    def test_associativity_sampled(self, f, g, h):
        assert compose(compose(h, g), f) == compose(h, compose(g, f))

    @given(ubp_strategy(), ubp_strategy())
    @settings(max_examples=200, deadline=None)
    def test_antihomomorphism_of_inversion(self, f, g):
        assert diagram_inverse(compose(f, g)) == compose(
            diagram_inverse(g), diagram_inverse(f)
        )


class TestDiagramInverse:
    def test_on_permutations(self):
        for s in all_permutations(4):
            assert diagram_inverse(from_permutation(s)) == from_permutation(s.inverse())

    def test_involution(self):
        for f in enumerate_ubp(3):
            assert diagram_inverse(diagram_inverse(f)) == f

    def test_field_swap_example(self):
        f = the_f1()
        g = diagram_inverse(f)
        assert g.domain == parse_set_partition("{1,2}{3}")
        assert g.codomain == parse_set_partition("{1,3}{2}")
        assert g.image_block(0) == (1, 3)

    def test_inverse_monoid_identities(self):
        for f in enumerate_ubp(3):
            fi = diagram_inverse(f)
            assert compose(compose(f, fi), f) == f
            assert compose(compose(fi, f), fi) == fi

    def test_idempotents_are_partition_identities(self):
        for n in range(4):
            idem = {f for f in enumerate_ubp(n) if compose(f, f) == f}
            assert idem == {id_of_partition(a) for a in set_partitions(n)}


class TestConcat:
    def test_unit(self):
        e = identity(0)
        for f in enumerate_ubp(3):
            assert concat(f, e) == f
            assert concat(e, f) == f

    def test_associative(self):
        elems = enumerate_ubp(2)
        for f, g, h in itertools.product(elems[:3], elems[:3], elems[:3]):
            assert concat(concat(f, g), h) == concat(f, concat(g, h))

    def test_block_structure(self):
        f = the_f1()
        g = identity(2)
        fg = concat(f, g)
        assert fg.n == 5
        assert fg.domain == parse_set_partition("{1,3}{2}{4}{5}")
        assert fg.codomain == parse_set_partition("{1,2}{3}{4}{5}")


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 3), (3, 16), (4, 131)])
    def test_counts(self, n, count):
        assert len(enumerate_ubp(n)) == count
        assert count_ubp(n) == count
        assert count_ubp_recursive(n) == count

    def test_known_sequence(self):
        assert [count_ubp(n) for n in range(7)] == [1, 1, 3, 16, 131, 1496, 22482]
        assert [count_ubp_recursive(n) for n in range(7)] == [
            1, 1, 3, 16, 131, 1496, 22482,
        ]

    def test_degree_two_elements(self):
        assert set(enumerate_ubp(2)) == {
            identity(2),
            from_permutation(Permutation((2, 1))),
            merge_generator(2, 1),
        }

    def test_closure_matches(self):
        for n in range(5):
            assert set(closure_from_generators(n)) == set(enumerate_ubp(n))

    def test_count_by_components(self):
        for n in range(5):
            total = sum(len(block_shuffles(a)) for a in set_partitions(n))
            assert total == count_ubp(n)

    def test_ceiling(self):
        with pytest.raises(EnumerationCeilingError, match="ceiling"):
            enumerate_ubp(7)
        with pytest.raises(EnumerationCeilingError):
            closure_from_generators(9, ceiling=4)

    def test_ceiling_env_override(self, monkeypatch):
        monkeypatch.setenv("BLOCKPERM_CEILING", "2")
        with pytest.raises(EnumerationCeilingError):
            enumerate_ubp(3)


def breaking_points_oracle(f):
    """Subset-sum oracle over all subsets of codomain blocks."""
    found = set()
    blocks = f.codomain.blocks
    for r in range(len(blocks) + 1):
        for chosen in itertools.combinations(blocks, r):
            union = sorted(i for b in chosen for i in b)
            if union == list(range(1, len(union) + 1)):
                found.add(len(union))
    return tuple(sorted(found))


class TestBreakingPoints:
    def test_permutations_break_everywhere(self):
        for s in all_permutations(3):
            assert breaking_points(from_permutation(s)) == (0, 1, 2, 3)

    def test_single_block(self):
        f = id_of_partition(parse_set_partition("{1,2,3,4}"))
        assert breaking_points(f) == (0, 4)

    def test_matches_subset_oracle(self):
        for n in range(5):
            for f in enumerate_ubp(n):
                assert breaking_points(f) == breaking_points_oracle(f)


class TestSplit:
    def test_boundary_splits(self):
        f = the_f1()
        xi, left, right = split_at_breaking_point(f, 0)
        assert (xi, left, right) == (Permutation.identity(3), identity(0), f)
        xi, left, right = split_at_breaking_point(f, 3)
        assert (xi, left, right) == (Permutation.identity(3), f, identity(0))

    def test_f1_at_two(self):
        xi, left, right = split_at_breaking_point(the_f1(), 2)
        assert left == merge_generator(2, 1)
        assert right == identity(1)
        assert xi == Permutation((1, 3, 2))

    def test_not_a_breaking_point(self):
        f = id_of_partition(parse_set_partition("{1,2,3}"))
        with pytest.raises(ValueError, match="not a breaking point"):
            split_at_breaking_point(f, 1)

    def test_reassembly_and_uniqueness(self):
        for n in range(5):
            for f in enumerate_ubp(n):
                for i in breaking_points(f):
                    xi, left, right = split_at_breaking_point(f, i)
                    assert left.n == i and right.n == n - i
                    rebuilt = compose(
                        concat(left, right), from_permutation(xi.inverse())
                    )
                    assert rebuilt == f
                    matches = [
                        eta
                        for eta in shuffles(i, n - i)
                        if compose(concat(left, right), from_permutation(eta.inverse()))
                        == f
                    ]
                    assert matches == [xi]


class TestShuffleFactorization:
    def test_idempotents_have_trivial_factor(self):
        for a in set_partitions(4):
            cert = shuffle_factorization(id_of_partition(a))
            assert cert.shuffle == Permutation.identity(4)
            assert cert.domain == a

    def test_permutations_factor_as_themselves(self):
        for s in all_permutations(4):
            cert = shuffle_factorization(from_permutation(s))
            assert cert.shuffle == s

    def test_f1(self):
        cert = shuffle_factorization(the_f1())
        assert cert.shuffle == Permutation((1, 3, 2))

    def test_reconstruction(self):
        for n in range(5):
            for f in enumerate_ubp(n):
                cert = shuffle_factorization(f)
                assert cert.reconstruct() == f
                assert cert.shuffle in set(block_shuffles(f.domain))


class TestWeakOrder:
    def test_reflexive(self):
        for f in enumerate_ubp(3):
            assert weak_leq(f, f)

    def test_partition_identity_is_minimum(self):
        for a in set_partitions(3):
            bottom = id_of_partition(a)
            for g in elements_with_domain(a):
                assert weak_leq(bottom, g)

    def test_different_domains_incomparable(self):
        s1 = transposition_generator(2, 1)
        b1 = merge_generator(2, 1)
        assert not weak_leq(s1, b1)
        assert not weak_leq(b1, s1)

    def test_component_sizes(self):
        a = parse_set_partition("{1,2}{3}{4}")
        nodes, covers = hasse_component(a)
        assert len(nodes) == 12
        total = sum(len(hasse_component(b)[0]) for b in set_partitions(4))
        assert total == 131

    def test_single_node_component(self):
        nodes, covers = hasse_component(parse_set_partition("{1,2,3,4}"))
        assert len(nodes) == 1 and covers == []

    def test_covers_are_covers(self):
        a = parse_set_partition("{1,4}{2,3}")
        nodes, covers = hasse_component(a)
        assert len(nodes) == math.factorial(4) // 4
        for i, j in covers:
            assert weak_leq(nodes[i], nodes[j]) and nodes[i] != nodes[j]
            for k in range(len(nodes)):
                if k in (i, j):
                    continue
                assert not (weak_leq(nodes[i], nodes[k]) and weak_leq(nodes[k], nodes[j]))


class TestText:
    def test_roundtrip_all_small(self):
        for n in range(5):
            for f in enumerate_ubp(n):
                assert parse_ubp(str(f)) == f
                assert ubp_from_json(ubp_to_json(f)) == f

    def test_examples(self):
        assert str(the_f1()) == "{1,3}->{1,2};{2}->{3}"
        assert parse_ubp("{}->{}") == identity(0)

    def test_noncanonical_rejected_with_hint(self):
        with pytest.raises(ValueError, match="canonical form is"):
            parse_ubp("{2}->{3};{1,3}->{1,2}")

    def test_bad_arrow(self):
        with pytest.raises(ValueError, match="arrow"):
            parse_ubp("{1}-{1}")
