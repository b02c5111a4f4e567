"""Named verification batteries over the whole package.

Each check is a top-level function taking an optional size cap and returning
a :class:`Check`; suites are fixed lists of checks so reports are stable and
the command line can run them, optionally in parallel across checks.  The
acceptance tests call the same functions with their stated bounds.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from blockperm import hopf, schurweyl
from blockperm.hopf import Element, TensorElement, domain_class_sum
from blockperm.monoid import (
    UBP,
    breaking_points,
    closure_from_generators,
    compose,
    concat,
    count_ubp,
    count_ubp_recursive,
    diagram_inverse,
    elements_with_domain,
    enumerate_ubp,
    from_permutation,
    hasse_component,
    id_of_partition,
    identity,
    left_compose_perm,
    merge_generator,
    right_compose_perm,
    shuffle_factorization,
    split_at_breaking_point,
    transposition_generator,
    weak_leq as ubp_weak_leq,
)
from blockperm.ncsym import (
    NCSymElement,
    p_coproduct,
    p_product,
    power_sum_words,
    to_element,
    from_element,
)
from blockperm.partitions import (
    SetPartition,
    block_shuffles,
    block_stabilizer,
    cross,
    meet,
    partition_action,
    set_partitions,
)
from blockperm.perms import (
    Permutation,
    all_permutations,
    max_shuffle,
    shuffles,
    weak_leq,
)

# Counts of the monoid per degree, 0..6 (OEIS A023998).
FIRST_COUNTS = [1, 1, 3, 16, 131, 1496, 22482]
# Dimensions of the primitive space per degree, 1..6.
FIRST_PRIMITIVE_DIMS = [1, 2, 11, 98, 1202, 19052]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _cap(default: int, max_n: int | None) -> int:
    return default if max_n is None else min(default, max_n)


def _fail(name: str, detail: str) -> Check:
    return Check(name, False, detail)


def _ok(name: str, detail: str = "") -> Check:
    return Check(name, True, detail)


# ---------------------------------------------------------------------------
# monoid suite


def check_counts_closed_forms(max_n: int | None = None) -> Check:
    name = "counts: closed formula = recursion (= known values up to degree 6)"
    limit = _cap(8, max_n)
    for n in range(limit + 1):
        a, b = count_ubp(n), count_ubp_recursive(n)
        if a != b:
            return _fail(name, f"n={n}: formula {a} != recursion {b}")
        if n < len(FIRST_COUNTS) and a != FIRST_COUNTS[n]:
            return _fail(name, f"n={n}: got {a}, expected {FIRST_COUNTS[n]}")
    return _ok(name, f"checked n <= {limit}")


def check_counts_enumeration(max_n: int | None = None) -> Check:
    name = "counts: enumeration and generator closure match the formula"
    limit = _cap(5, max_n)
    for n in range(limit + 1):
        enum = enumerate_ubp(n, ceiling=limit)
        if len(enum) != count_ubp(n):
            return _fail(name, f"n={n}: enumerated {len(enum)}")
        if len(set(enum)) != len(enum):
            return _fail(name, f"n={n}: duplicates in enumeration")
        closure = closure_from_generators(n, ceiling=limit)
        if set(closure) != set(enum):
            return _fail(name, f"n={n}: closure has {len(closure)} elements")
    return _ok(name, f"checked n <= {limit}")


def check_type_counts(max_n: int | None = None) -> Check:
    name = "partition counts by type match the multinomial formula"
    from blockperm.partitions import count_of_type

    limit = _cap(6, max_n)
    for n in range(limit + 1):
        tally = Counter(p.type() for p in set_partitions(n))
        for t, observed in tally.items():
            if count_of_type(t) != observed:
                return _fail(name, f"type {t.multiplicities}: formula disagrees")
        total = sum(tally.values())
        if total != len(set_partitions(n)):
            return _fail(name, f"n={n}: bad total")
    return _ok(name, f"checked n <= {limit}")


def check_presentation_relations(max_n: int | None = None) -> Check:
    name = "generator relations (braid, mixed braid, commuting, absorbing)"
    limit = _cap(5, max_n)
    for n in range(2, limit + 1):
        s = {i: transposition_generator(n, i) for i in range(1, n)}
        b = {i: merge_generator(n, i) for i in range(1, n)}
        e = identity(n)
        for i in range(1, n):
            if compose(s[i], s[i]) != e:
                return _fail(name, f"n={n}: s_{i}^2 != 1")
            if compose(b[i], b[i]) != b[i]:
                return _fail(name, f"n={n}: b_{i}^2 != b_{i}")
            if compose(b[i], s[i]) != b[i] or compose(s[i], b[i]) != b[i]:
                return _fail(name, f"n={n}: b_{i} s_{i} = s_{i} b_{i} = b_{i} fails")
        for i in range(1, n - 1):
            lhs = compose(s[i], compose(s[i + 1], s[i]))
            rhs = compose(s[i + 1], compose(s[i], s[i + 1]))
            if lhs != rhs:
                return _fail(name, f"n={n}: braid relation fails at {i}")
            lhs = compose(s[i], compose(b[i + 1], s[i]))
            rhs = compose(s[i + 1], compose(b[i], s[i + 1]))
            if lhs != rhs:
                return _fail(name, f"n={n}: mixed braid relation fails at {i}")
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) > 1:
                    if compose(s[i], s[j]) != compose(s[j], s[i]):
                        return _fail(name, f"n={n}: s_{i} s_{j} commuting fails")
                    if compose(b[i], s[j]) != compose(s[j], b[i]):
                        return _fail(name, f"n={n}: b_{i} s_{j} commuting fails")
                if compose(b[i], b[j]) != compose(b[j], b[i]):
                    return _fail(name, f"n={n}: b_{i} b_{j} commuting fails")
    return _ok(name, f"checked n <= {limit}")


def check_inverse_monoid(max_n: int | None = None) -> Check:
    name = "inverse-monoid identities and idempotent classification"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        elems = enumerate_ubp(n, ceiling=limit)
        for f in elems:
            finv = diagram_inverse(f)
            if compose(compose(f, finv), f) != f:
                return _fail(name, f"n={n}: f finv f != f for {f}")
            if compose(compose(finv, f), finv) != finv:
                return _fail(name, f"n={n}: finv f finv != finv for {f}")
            if diagram_inverse(finv) != f:
                return _fail(name, f"n={n}: inversion not involutive for {f}")
        for f in elems:
            for g in elems:
                lhs = diagram_inverse(compose(f, g))
                rhs = compose(diagram_inverse(g), diagram_inverse(f))
                if lhs != rhs:
                    return _fail(name, f"n={n}: (fg)~ != g~ f~ for {f}, {g}")
        idempotents = {f for f in elems if compose(f, f) == f}
        expected = {id_of_partition(a) for a in set_partitions(n)}
        if idempotents != expected:
            return _fail(name, f"n={n}: idempotents are not the partition identities")
    return _ok(name, f"checked n <= {limit}")


def check_factorization(max_n: int | None = None) -> Check:
    name = "unique factorization through a block shuffle and an idempotent"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n, ceiling=limit):
            cert = shuffle_factorization(f)
            if cert.reconstruct() != f:
                return _fail(name, f"n={n}: reconstruction fails for {f}")
            increasing = all(
                cert.shuffle(block[t]) < cert.shuffle(block[t + 1])
                for block in cert.domain.blocks
                for t in range(len(block) - 1)
            )
            if not increasing:
                return _fail(name, f"n={n}: factor not a block shuffle for {f}")
    return _ok(name, f"checked n <= {limit}")


def check_meet_morphism(max_n: int | None = None) -> Check:
    name = "partition identities compose through the lattice meet"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        parts = set_partitions(n)
        for a in parts:
            for b in parts:
                lhs = compose(id_of_partition(a), id_of_partition(b))
                if lhs != id_of_partition(meet(a, b)):
                    return _fail(name, f"n={n}: fails for {a}, {b}")
    return _ok(name, f"checked n <= {limit}")


def check_relabeling_laws(max_n: int | None = None) -> Check:
    name = "permutations relabel the codomain on the left, the domain on the right"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        elems = enumerate_ubp(n, ceiling=limit)
        for sigma in all_permutations(n):
            u = from_permutation(sigma)
            for f in elems:
                left = left_compose_perm(sigma, f)
                if left != compose(u, f):
                    return _fail(name, f"n={n}: left fast path disagrees")
                if left.domain != f.domain:
                    return _fail(name, f"n={n}: left composition moved the domain")
                if left.codomain != partition_action(sigma, f.codomain):
                    return _fail(name, f"n={n}: left codomain not sigma(image)")
                right = right_compose_perm(f, sigma)
                if right != compose(f, u):
                    return _fail(name, f"n={n}: right fast path disagrees")
                if right.domain != partition_action(sigma.inverse(), f.domain):
                    return _fail(name, f"n={n}: right domain not sigma^-1(domain)")
    return _ok(name, f"checked n <= {limit}")


def check_associativity(max_n: int | None = None) -> Check:
    name = "composition is associative"
    limit = _cap(5, max_n)
    for n in range(min(limit, 3) + 1):
        elems = enumerate_ubp(n, ceiling=limit)
        for f, g, h in itertools.product(elems, repeat=3):
            if compose(compose(h, g), f) != compose(h, compose(g, f)):
                return _fail(name, f"n={n}: fails on {f}, {g}, {h}")
    rng = random.Random(20108)
    for n in range(4, limit + 1):
        elems = enumerate_ubp(n, ceiling=limit)
        for _ in range(300):
            f, g, h = (rng.choice(elems) for _ in range(3))
            if compose(compose(h, g), f) != compose(h, compose(g, f)):
                return _fail(name, f"n={n}: fails on {f}, {g}, {h}")
    return _ok(name, f"exhaustive n <= 3, sampled n <= {limit}")


def check_breaking_splits(max_n: int | None = None) -> Check:
    name = "breaking-point splits reassemble uniquely"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n, ceiling=limit):
            points = breaking_points(f)
            if 0 not in points or n not in points:
                return _fail(name, f"n={n}: 0 or n missing from {points}")
            for i in points:
                xi, left, right = split_at_breaking_point(f, i)
                rebuilt = compose(
                    concat(left, right), from_permutation(xi.inverse())
                )
                if rebuilt != f:
                    return _fail(name, f"n={n}: reassembly fails for {f} at {i}")
                matches = [
                    eta
                    for eta in shuffles(i, n - i)
                    if compose(concat(left, right), from_permutation(eta.inverse()))
                    == f
                ]
                if matches != [xi]:
                    return _fail(name, f"n={n}: shuffle not unique for {f} at {i}")
    return _ok(name, f"checked n <= {limit}")


def check_weak_order_poset(max_n: int | None = None) -> Check:
    name = "weak order is a partial order on permutations"
    limit = _cap(5, max_n)
    for n in range(limit + 1):
        perms = all_permutations(n)
        for s in perms:
            if not weak_leq(s, s):
                return _fail(name, f"n={n}: not reflexive at {s}")
        for s, t in itertools.combinations(perms, 2):
            if weak_leq(s, t) and weak_leq(t, s):
                return _fail(name, f"n={n}: antisymmetry fails on {s}, {t}")
        for s, t, u in itertools.product(perms, repeat=3):
            if weak_leq(s, t) and weak_leq(t, u) and not weak_leq(s, u):
                return _fail(name, f"n={n}: transitivity fails")
    return _ok(name, f"checked n <= {limit}")


def check_shuffle_posets(max_n: int | None = None) -> Check:
    name = "shuffle sets are lower ideals with the expected maximum"
    limit = _cap(5, max_n)
    for n in range(limit + 1):
        perms = all_permutations(n)
        for p in range(n + 1):
            sh = set(shuffles(p, n - p))
            top = max_shuffle(p, n - p)
            if top not in sh:
                return _fail(name, f"(p,q)=({p},{n-p}): maximum not a shuffle")
            for t in sh:
                if not weak_leq(t, top):
                    return _fail(name, f"(p,q)=({p},{n-p}): {t} not below maximum")
                for s in perms:
                    if weak_leq(s, t) and s not in sh:
                        return _fail(name, f"(p,q)=({p},{n-p}): not a lower ideal")
        for a in set_partitions(n):
            sh = set(block_shuffles(a))
            for t in sh:
                for s in perms:
                    if weak_leq(s, t) and s not in sh:
                        return _fail(name, f"a={a}: block shuffles not a lower ideal")
    return _ok(name, f"checked n <= {limit}")


def check_coset_decomposition(max_n: int | None = None) -> Check:
    name = "every permutation factors uniquely as block shuffle times stabilizer"
    limit = _cap(5, max_n)
    import math

    for n in range(limit + 1):
        for a in set_partitions(n):
            sh = block_shuffles(a)
            st = block_stabilizer(a)
            if len(sh) * len(st) != math.factorial(n):
                return _fail(name, f"a={a}: |Sh| |S_a| != n!")
            products = {xi * pi for xi in sh for pi in st}
            if len(products) != math.factorial(n):
                return _fail(name, f"a={a}: products not distinct")
    return _ok(name, f"checked n <= {limit}")


def check_component_decomposition(max_n: int | None = None) -> Check:
    name = "weak-order components partition the monoid by domain"
    limit = _cap(5, max_n)
    for n in range(limit + 1):
        total = 0
        for a in set_partitions(n):
            comp = elements_with_domain(a)
            if len(comp) != len(block_shuffles(a)):
                return _fail(name, f"a={a}: component size mismatch")
            total += len(comp)
        if total != count_ubp(n):
            return _fail(name, f"n={n}: components sum to {total}")
    return _ok(name, f"checked n <= {limit}")


def check_hasse_components(max_n: int | None = None) -> Check:
    name = "Hasse components are transitively reduced and correctly sized"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for a in set_partitions(n):
            nodes, covers = hasse_component(a)
            if len(nodes) != len(block_shuffles(a)):
                return _fail(name, f"a={a}: node count")
            for i, j in covers:
                if not ubp_weak_leq(nodes[i], nodes[j]) or nodes[i] == nodes[j]:
                    return _fail(name, f"a={a}: bad cover")
                for k in range(len(nodes)):
                    if k in (i, j):
                        continue
                    if ubp_weak_leq(nodes[i], nodes[k]) and ubp_weak_leq(
                        nodes[k], nodes[j]
                    ):
                        return _fail(name, f"a={a}: cover not a cover")
    return _ok(name, f"checked n <= {limit}")


MONOID_CHECKS = [
    check_counts_closed_forms,
    check_counts_enumeration,
    check_type_counts,
    check_presentation_relations,
    check_inverse_monoid,
    check_factorization,
    check_meet_morphism,
    check_relabeling_laws,
    check_associativity,
    check_breaking_splits,
]


# ---------------------------------------------------------------------------
# hopf suite


def _basis_elements(n: int) -> list[Element]:
    return [Element.basis(f) for f in enumerate_ubp(n)]


def check_hopf_associativity(max_n: int | None = None) -> Check:
    name = "product is associative"
    limit = _cap(4, max_n)
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            for r in range(limit + 1 - p - q):
                for x in _basis_elements(p):
                    for y in _basis_elements(q):
                        for z in _basis_elements(r):
                            lhs = hopf.product(hopf.product(x, y), z)
                            rhs = hopf.product(x, hopf.product(y, z))
                            if lhs != rhs:
                                return _fail(name, f"fails at degrees {p},{q},{r}")
    return _ok(name, f"total degree <= {limit}")


def check_hopf_coassociativity(max_n: int | None = None) -> Check:
    name = "coproduct is coassociative"
    limit = _cap(5, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n):
            delta = hopf.coproduct(Element.basis(f))
            lhs: Counter = Counter()
            rhs: Counter = Counter()
            for (a, b), c in delta.terms.items():
                for (a1, a2), c2 in hopf.coproduct(Element.basis(a)).terms.items():
                    lhs[(a1, a2, b)] += c * c2
                for (b1, b2), c2 in hopf.coproduct(Element.basis(b)).terms.items():
                    rhs[(a, b1, b2)] += c * c2
            lhs = Counter({k: v for k, v in lhs.items() if v})
            rhs = Counter({k: v for k, v in rhs.items() if v})
            if lhs != rhs:
                return _fail(name, f"fails for {f}")
    return _ok(name, f"degree <= {limit}")


def check_counit_axiom(max_n: int | None = None) -> Check:
    name = "counit is a two-sided counit for the coproduct"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n):
            x = Element.basis(f)
            delta = hopf.coproduct(x)
            left = Element.zero()
            right = Element.zero()
            for (a, b), c in delta.terms.items():
                left = left + (c * hopf.counit(Element.basis(a))) * Element.basis(b)
                right = right + (c * hopf.counit(Element.basis(b))) * Element.basis(a)
            if left != x or right != x:
                return _fail(name, f"fails for {f}")
    return _ok(name, f"degree <= {limit}")


def check_bialgebra_compatibility(max_n: int | None = None) -> Check:
    name = "coproduct of a product is the product of coproducts"
    limit = _cap(4, max_n)
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            for x in _basis_elements(p):
                for y in _basis_elements(q):
                    lhs = hopf.coproduct(hopf.product(x, y))
                    rhs = hopf.tensor_product(hopf.coproduct(x), hopf.coproduct(y))
                    if lhs != rhs:
                        return _fail(name, f"fails at degrees {p},{q}")
    return _ok(name, f"total degree <= {limit}")


def check_antipode_axioms(max_n: int | None = None) -> Check:
    name = "antipode satisfies both defining identities"
    limit = _cap(4, max_n)
    unit = Element.unit()
    for n in range(limit + 1):
        for f in enumerate_ubp(n):
            x = Element.basis(f)
            delta = hopf.coproduct(x)
            left = Element.zero()
            right = Element.zero()
            for (a, b), c in delta.terms.items():
                left = left + c * hopf.product(
                    hopf.antipode(Element.basis(a)), Element.basis(b)
                )
                right = right + c * hopf.product(
                    Element.basis(a), hopf.antipode(Element.basis(b))
                )
            target = hopf.counit(x) * unit
            if left != target or right != target:
                return _fail(name, f"fails for {f}")
    return _ok(name, f"degree <= {limit}")


def check_ideal_lemma(max_n: int | None = None) -> Check:
    name = "domain-class sums absorb permutations and merge generators"
    import math

    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for a in set_partitions(n):
            za = domain_class_sum(a)
            for sigma in all_permutations(n):
                left = Element.zero()
                for f, c in za.terms.items():
                    left = left + c * Element.basis(left_compose_perm(sigma, f))
                if left != za:
                    return _fail(name, f"left absorption fails for {a}, {sigma}")
                moved = hopf.right_action(za, from_permutation(sigma))
                expected = domain_class_sum(partition_action(sigma.inverse(), a))
                if moved != expected:
                    return _fail(name, f"right relabeling fails for {a}, {sigma}")
            labels = a.position_labels()
            for i in range(1, n):
                res = hopf.right_action(za, merge_generator(n, i))
                k1, k2 = labels[i - 1], labels[i]
                if k1 == k2:
                    if res != za:
                        return _fail(name, f"same-block merge fails for {a}, i={i}")
                else:
                    s1 = len(a.blocks[k1])
                    s2 = len(a.blocks[k2])
                    merged_blocks = [
                        b for k, b in enumerate(a.blocks) if k not in (k1, k2)
                    ]
                    merged_blocks.append(a.blocks[k1] + a.blocks[k2])
                    merged = SetPartition.from_blocks(n, merged_blocks)
                    coeff = math.comb(s1 + s2, s1)
                    if res != coeff * domain_class_sum(merged):
                        return _fail(name, f"merge rule fails for {a}, i={i}")
    return _ok(name, f"checked n <= {limit}")


def check_right_ideal(max_n: int | None = None) -> Check:
    name = "the span of domain-class sums is a right ideal"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        elems = enumerate_ubp(n, ceiling=limit)
        for a in set_partitions(n):
            za = domain_class_sum(a)
            for h in elems:
                moved = hopf.right_action(za, h)
                try:
                    from_element(moved)
                except ValueError as exc:
                    return _fail(name, f"a={a}, h={h}: {exc}")
    return _ok(name, f"checked n <= {limit}")


def check_primitives(max_n: int | None = None) -> Check:
    name = "expected primitive and non-primitive elements"
    one = Element.basis(identity(1))
    if not hopf.is_primitive(one):
        return _fail(name, "the degree-1 element is not primitive")
    b1 = Element.basis(merge_generator(2, 1))
    if not hopf.is_primitive(b1):
        return _fail(name, "the merge generator of degree 2 is not primitive")
    if hopf.is_primitive(Element.basis(identity(2))):
        return _fail(name, "the degree-2 identity should not be primitive")
    from blockperm.monoid import from_block_images

    f1 = from_block_images(3, [((1, 3), (1, 2)), ((2,), (3,))])
    f2 = from_block_images(3, [((1,), (3,)), ((2, 3), (1, 2))])
    if not hopf.is_primitive(Element.basis(f1) - Element.basis(f2)):
        return _fail(name, "the degree-3 difference element is not primitive")
    return _ok(name)


def _word_shuffle_product(u: tuple[int, ...], v: tuple[int, ...]) -> Counter:
    """Independent shuffle-relabeling product on one-line words."""
    p, q = len(u), len(v)
    out: Counter = Counter()
    universe = range(1, p + q + 1)
    for chosen in itertools.combinations(universe, p):
        taken = set(chosen)
        rest = [x for x in universe if x not in taken]
        word = tuple(chosen[a - 1] for a in u) + tuple(rest[b - 1] for b in v)
        out[word] += 1
    return out


def check_permutation_subalgebra(max_n: int | None = None) -> Check:
    name = "permutations close under product/coproduct and match word shuffles"
    limit = _cap(4, max_n)
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            for sigma in all_permutations(p):
                for tau in all_permutations(q):
                    prod = hopf.product(
                        Element.basis(from_permutation(sigma)),
                        Element.basis(from_permutation(tau)),
                    )
                    got: Counter = Counter()
                    for f, c in prod.terms.items():
                        if not f.is_permutation():
                            return _fail(name, f"non-permutation term in {sigma}*{tau}")
                        got[f.to_permutation().images] += c
                    expected = _word_shuffle_product(sigma.images, tau.images)
                    if got != expected:
                        return _fail(name, f"word-shuffle oracle disagrees at {sigma}, {tau}")
    for n in range(limit + 1):
        for sigma in all_permutations(n):
            delta = hopf.coproduct(Element.basis(from_permutation(sigma)))
            for (a, b), _ in delta.terms.items():
                if not (a.is_permutation() and b.is_permutation()):
                    return _fail(name, f"coproduct of {sigma} leaves the subalgebra")
    return _ok(name, f"total degree <= {limit}")


HOPF_CHECKS = [
    check_hopf_associativity,
    check_hopf_coassociativity,
    check_counit_axiom,
    check_bialgebra_compatibility,
    check_antipode_axioms,
    check_ideal_lemma,
    check_right_ideal,
    check_primitives,
    check_permutation_subalgebra,
]


# ---------------------------------------------------------------------------
# duality suite


def check_pairing_basics(max_n: int | None = None) -> Check:
    name = "pairing is the diagram-inversion permutation form"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n):
            for g in enumerate_ubp(n):
                expected = 1 if g == diagram_inverse(f) else 0
                if hopf.pairing(Element.basis(f), Element.basis(g)) != expected:
                    return _fail(name, f"fails at {f}, {g}")
                sym = hopf.pairing(Element.basis(g), Element.basis(f))
                if sym != expected:
                    return _fail(name, f"not symmetric at {f}, {g}")
    return _ok(name, f"degree <= {limit}")


def check_duality_adjunction(max_n: int | None = None) -> Check:
    name = "the pairing turns the product into the coproduct"
    limit = _cap(4, max_n)
    for deg in range(limit + 1):
        zs = enumerate_ubp(deg)
        for p in range(deg + 1):
            q = deg - p
            for x in _basis_elements(p):
                for y in _basis_elements(q):
                    prod = hopf.product(x, y)
                    xy = TensorElement(
                        {
                            (fx, fy): cx * cy
                            for fx, cx in x.terms.items()
                            for fy, cy in y.terms.items()
                        }
                    )
                    for z in zs:
                        lhs = hopf.pairing(prod, Element.basis(z))
                        rhs = hopf.tensor_pairing(
                            xy, hopf.coproduct(Element.basis(z))
                        )
                        if lhs != rhs:
                            return _fail(name, f"fails at degrees {p},{q} on {z}")
    return _ok(name, f"degree <= {limit}")


DUALITY_CHECKS = [check_pairing_basics, check_duality_adjunction]


# ---------------------------------------------------------------------------
# bases suite (weak order and the two triangular bases)


def check_lower_basis_roundtrip(max_n: int | None = None) -> Check:
    name = "lower-sum basis change is an exact round trip"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n):
            e = Element.basis(f)
            if hopf.to_lower_basis(hopf.from_lower_basis(e)) != e:
                return _fail(name, f"coords->expand->coords fails at {f}")
            if hopf.from_lower_basis(hopf.to_lower_basis(e)) != e:
                return _fail(name, f"expand->coords->expand fails at {f}")
    return _ok(name, f"degree <= {limit}")


def check_upper_basis_roundtrip(max_n: int | None = None) -> Check:
    name = "upper-sum basis change is an exact round trip"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for f in enumerate_ubp(n):
            e = Element.basis(f)
            if hopf.to_upper_basis(hopf.from_upper_basis(e)) != e:
                return _fail(name, f"coords->expand->coords fails at {f}")
            if hopf.from_upper_basis(hopf.to_upper_basis(e)) != e:
                return _fail(name, f"expand->coords->expand fails at {f}")
    return _ok(name, f"degree <= {limit}")


def check_lower_basis_product(max_n: int | None = None) -> Check:
    name = "lower-sum basis multiplies through the maximal shuffle"
    limit = _cap(4, max_n)
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            for g1 in enumerate_ubp(p):
                for g2 in enumerate_ubp(q):
                    lhs = hopf.product(
                        hopf.from_lower_basis(Element.basis(g1)),
                        hopf.from_lower_basis(Element.basis(g2)),
                    )
                    top = left_compose_perm(max_shuffle(p, q), concat(g1, g2))
                    rhs = hopf.from_lower_basis(Element.basis(top))
                    if lhs != rhs:
                        return _fail(name, f"fails at {g1}, {g2}")
    return _ok(name, f"total degree <= {limit}")


def check_upper_basis_product(max_n: int | None = None) -> Check:
    name = "upper-sum basis multiplies by concatenation"
    limit = _cap(4, max_n)
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            for g1 in enumerate_ubp(p):
                for g2 in enumerate_ubp(q):
                    lhs = hopf.product(
                        hopf.from_upper_basis(Element.basis(g1)),
                        hopf.from_upper_basis(Element.basis(g2)),
                    )
                    rhs = hopf.from_upper_basis(Element.basis(concat(g1, g2)))
                    if lhs != rhs:
                        return _fail(name, f"fails at {g1}, {g2}")
    return _ok(name, f"total degree <= {limit}")


def check_upper_basis_domain_sums(max_n: int | None = None) -> Check:
    name = "upper sums at partition identities are the domain-class sums"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for a in set_partitions(n):
            lhs = hopf.from_upper_basis(Element.basis(id_of_partition(a)))
            if lhs != domain_class_sum(a):
                return _fail(name, f"fails at {a}")
    return _ok(name, f"degree <= {limit}")


def check_series(max_n: int | None = None) -> Check:
    name = "primitive dimensions by series inversion"
    limit = _cap(6, max_n)
    v = hopf.primitive_series(limit)
    if v != FIRST_PRIMITIVE_DIMS[:limit]:
        return _fail(name, f"got {v}")
    u = hopf.counts_from_primitives(v)
    if u != FIRST_COUNTS[: limit + 1]:
        return _fail(name, f"recomposition gives {u}")
    return _ok(name, f"degrees 1..{limit}")


BASES_CHECKS = [
    check_weak_order_poset,
    check_shuffle_posets,
    check_coset_decomposition,
    check_component_decomposition,
    check_hasse_components,
    check_lower_basis_roundtrip,
    check_upper_basis_roundtrip,
    check_lower_basis_product,
    check_upper_basis_product,
    check_upper_basis_domain_sums,
    check_series,
]


# ---------------------------------------------------------------------------
# ncsym suite


def check_power_sum_counts(max_n: int | None = None) -> Check:
    name = "power-sum truncations have one word per block colouring"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for a in set_partitions(n):
            for k in (1, 2, 3):
                words = power_sum_words(a, k)
                if len(words) != k**a.num_blocks:
                    return _fail(name, f"a={a}, k={k}: {len(words)} words")
                if len(set(words)) != len(words):
                    return _fail(name, f"a={a}, k={k}: duplicate words")
    return _ok(name, f"degree <= {limit}")


def check_power_sum_invariance(max_n: int | None = None) -> Check:
    name = "power-sum truncations are stable under renaming the letters"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for a in set_partitions(n):
            words = power_sum_words(a, 3)
            for sigma in all_permutations(3):
                renamed = sorted(tuple(sigma(x) for x in w) for w in words)
                if renamed != words:
                    return _fail(name, f"a={a}: fails under {sigma}")
    return _ok(name, f"degree <= {limit}, alphabet of 3")


def check_p_product_oracle(max_n: int | None = None) -> Check:
    name = "p-basis product matches word concatenation"
    limit = _cap(5, max_n)
    for na in range(limit + 1):
        for nb in range(limit + 1 - na):
            for a in set_partitions(na):
                for b in set_partitions(nb):
                    prod = p_product(NCSymElement.basis(a), NCSymElement.basis(b))
                    if prod != NCSymElement.basis(cross(a, b)):
                        return _fail(name, f"fails at {a}, {b}")
                    for k in (1, 2, 3):
                        concat_words = Counter(
                            wa + wb
                            for wa in power_sum_words(a, k)
                            for wb in power_sum_words(b, k)
                        )
                        direct = Counter(power_sum_words(cross(a, b), k))
                        if concat_words != direct:
                            return _fail(name, f"oracle disagrees at {a}, {b}, k={k}")
    return _ok(name, f"total degree <= {limit}, alphabets <= 3")


def check_p_coproduct_oracle(max_n: int | None = None) -> Check:
    name = "p-basis coproduct matches two-alphabet word counting"
    limit = _cap(4, max_n)
    k1 = k2 = 2
    for n in range(limit + 1):
        for a in set_partitions(n):
            delta = p_coproduct(NCSymElement.basis(a))
            expected: Counter = Counter()
            for (left, right), c in delta.terms.items():
                for wl in power_sum_words(left, k1):
                    for wr in power_sum_words(right, k2):
                        expected[(wl, wr)] += c
            labels = a.position_labels()
            actual: Counter = Counter()
            for colours in itertools.product(
                range(1, k1 + k2 + 1), repeat=a.num_blocks
            ):
                word = [colours[labels[i]] for i in range(n)]
                wl = tuple(x for x in word if x <= k1)
                wr = tuple(x - k1 for x in word if x > k1)
                actual[(wl, wr)] += 1
            if +expected != +actual:
                return _fail(name, f"fails at {a}")
    return _ok(name, f"degree <= {limit}, alphabets of 2+2")


def check_p_coproduct_display(max_n: int | None = None) -> Check:
    name = "six-element coproduct example expands to the eight expected terms"
    from blockperm.partitions import parse_set_partition as pp

    a = pp("{1,2,6}{3,5}{4}")
    delta = p_coproduct(NCSymElement.basis(a))
    empty = SetPartition(0, ())
    expected = {
        (a, empty): 1,
        (pp("{1,2,5}{3,4}"), pp("{1}")): 1,
        (pp("{1,2,4}{3}"), pp("{1,2}")): 1,
        (pp("{1,3}{2}"), pp("{1,2,3}")): 1,
        (pp("{1,2,3}"), pp("{1,3}{2}")): 1,
        (pp("{1,2}"), pp("{1,2,4}{3}")): 1,
        (pp("{1}"), pp("{1,2,5}{3,4}")): 1,
        (empty, a): 1,
    }
    if dict(delta.terms) != expected:
        return _fail(name, f"got {delta}")
    return _ok(name)


def check_transport(max_n: int | None = None) -> Check:
    name = "the p-basis and the domain-class sums exchange product and coproduct"
    limit = _cap(4, max_n)
    for na in range(limit + 1):
        for nb in range(limit + 1 - na):
            for a in set_partitions(na):
                for b in set_partitions(nb):
                    lhs = hopf.product(
                        to_element(NCSymElement.basis(a)),
                        to_element(NCSymElement.basis(b)),
                    )
                    rhs = to_element(
                        p_product(NCSymElement.basis(a), NCSymElement.basis(b))
                    )
                    if lhs != rhs:
                        return _fail(name, f"product transport fails at {a}, {b}")
    for n in range(limit + 1):
        for a in set_partitions(n):
            lhs = hopf.coproduct(to_element(NCSymElement.basis(a)))
            rhs = TensorElement.zero()
            for (left, right), c in p_coproduct(NCSymElement.basis(a)).terms.items():
                piece = TensorElement(
                    {
                        (fl, fr): c * cl * cr
                        for fl, cl in to_element(NCSymElement.basis(left)).terms.items()
                        for fr, cr in to_element(NCSymElement.basis(right)).terms.items()
                    }
                )
                rhs = rhs + piece
            if lhs != rhs:
                return _fail(name, f"coproduct transport fails at {a}")
    return _ok(name, f"total degree <= {limit}")


def check_roundtrip_embedding(max_n: int | None = None) -> Check:
    name = "embedding into the diagram algebra round-trips"
    limit = _cap(4, max_n)
    for n in range(limit + 1):
        for a in set_partitions(n):
            u = NCSymElement.basis(a)
            if from_element(to_element(u)) != u:
                return _fail(name, f"fails at {a}")
    bad = Element.basis(identity(2))
    try:
        from_element(bad)
    except ValueError:
        pass
    else:
        return _fail(name, "accepted an element outside the span")
    return _ok(name, f"degree <= {limit}")


NCSYM_CHECKS = [
    check_power_sum_counts,
    check_power_sum_invariance,
    check_p_product_oracle,
    check_p_coproduct_oracle,
    check_p_coproduct_display,
    check_transport,
    check_roundtrip_embedding,
]


# ---------------------------------------------------------------------------
# schurweyl suite


def check_action_orientation(max_n: int | None = None) -> Check:
    name = "action matrices reverse composition in exactly one orientation"
    limit = _cap(3, max_n)
    saw_noncommuting = False
    for n in range(limit + 1):
        for m in (2, 3):
            mats = {
                f: schurweyl.ubp_action_matrix(f, m) for f in enumerate_ubp(n)
            }
            for f, g in itertools.product(mats, repeat=2):
                lhs = mats[g] @ mats[f]
                if schurweyl.ubp_action_matrix(compose(g, f), m) != lhs:
                    return _fail(name, f"pinned orientation fails at n={n}, m={m}")
                if lhs != mats[f] @ mats[g]:
                    saw_noncommuting = True
    if limit >= 3 and not saw_noncommuting:
        # below degree 3 all the matrices commute, so no witness can exist
        return _fail(name, "both orientations held everywhere; nothing is pinned")
    return _ok(name, f"checked n <= {limit}, m <= 3")


def check_generator_matrix_relations(max_n: int | None = None) -> Check:
    name = "generator matrices satisfy the monoid relations"
    limit = _cap(3, max_n)
    for n in range(2, limit + 1):
        for m in (2, 3):
            dim = m**n
            s = {
                i: schurweyl.ubp_action_matrix(transposition_generator(n, i), m)
                for i in range(1, n)
            }
            b = {
                i: schurweyl.ubp_action_matrix(merge_generator(n, i), m)
                for i in range(1, n)
            }
            eye = schurweyl.ActionMatrix.identity(dim)
            for i in range(1, n):
                if s[i] @ s[i] != eye or b[i] @ b[i] != b[i]:
                    return _fail(name, f"square relations fail at n={n}, m={m}")
                if b[i] @ s[i] != b[i] or s[i] @ b[i] != b[i]:
                    return _fail(name, f"absorption fails at n={n}, m={m}")
            for i in range(1, n - 1):
                if s[i] @ s[i + 1] @ s[i] != s[i + 1] @ s[i] @ s[i + 1]:
                    return _fail(name, f"braid fails at n={n}, m={m}")
                if s[i] @ b[i + 1] @ s[i] != s[i + 1] @ b[i] @ s[i + 1]:
                    return _fail(name, f"mixed braid fails at n={n}, m={m}")
            for i in range(1, n):
                for j in range(1, n):
                    if b[i] @ b[j] != b[j] @ b[i]:
                        return _fail(name, f"merge commuting fails at n={n}, m={m}")
    return _ok(name, f"checked n <= {limit}, m <= 3")


def check_generator_factorization_route(max_n: int | None = None) -> Check:
    name = "direct action matrices match generator-word products"
    limit = _cap(3, max_n)
    for n in range(limit + 1):
        for m in (2, 3):
            gens = schurweyl.monoid_generators(n)
            gen_mats = [schurweyl.ubp_action_matrix(g, m) for g in gens]
            words: dict[UBP, tuple[int, ...]] = {identity(n): ()}
            frontier = [identity(n)]
            while frontier:
                fresh = []
                for x in frontier:
                    for gi, g in enumerate(gens):
                        y = compose(g, x)
                        if y not in words:
                            words[y] = words[x] + (gi,)
                            fresh.append(y)
                frontier = fresh
            dim = m**n
            for f, word in words.items():
                mat = schurweyl.ActionMatrix.identity(dim)
                for gi in word:
                    mat = gen_mats[gi] @ mat
                if mat != schurweyl.ubp_action_matrix(f, m):
                    return _fail(name, f"routes disagree for {f} at m={m}")
    return _ok(name, f"checked n <= {limit}, m <= 3")


def check_commutation(max_n: int | None = None) -> Check:
    name = "diagram action commutes with the wreath-product action"
    limit = _cap(8, max_n)
    cases = 0
    for n in range(1, limit + 1):
        for m in range(1, 257):
            if m**n > 256:
                break
            for r in range(1, 5):
                if not schurweyl.commutation_check(n, m, r):
                    return _fail(name, f"fails at (n,m,r)=({n},{m},{r})")
                cases += 1
    return _ok(name, f"{cases} cases with dimension <= 256, root order <= 4")


def check_span_ranks(max_n: int | None = None) -> Check:
    name = "action matrices span a space of the full monoid dimension"
    targets = [(1, 1), (2, 4), (3, 6)]
    limit = _cap(3, max_n)
    for n, m in targets:
        if n > limit:
            continue
        rank = schurweyl.action_span_rank(n, m)
        if rank != count_ubp(n):
            return _fail(name, f"(n,m)=({n},{m}): rank {rank}")
    return _ok(name, f"checked degrees up to {limit} at doubled dimension")


def check_convolution(max_n: int | None = None) -> Check:
    name = "tensor-algebra convolution realizes the shuffle product"
    limit = _cap(4, max_n)
    m = 2
    for p in range(limit + 1):
        for q in range(limit + 1 - p):
            for f in enumerate_ubp(p):
                for g in enumerate_ubp(q):
                    conv = schurweyl.convolution_action(f, g, m)
                    prod = hopf.product(Element.basis(f), Element.basis(g))
                    if conv != schurweyl.element_action_matrix(prod, m):
                        return _fail(name, f"fails at {f}, {g}")
    return _ok(name, f"total degree <= {limit}, m = {m}")


SCHURWEYL_CHECKS = [
    check_action_orientation,
    check_generator_matrix_relations,
    check_generator_factorization_route,
    check_commutation,
    check_span_ranks,
    check_convolution,
]


# ---------------------------------------------------------------------------
# suite registry


SUITES: dict[str, list[Callable[..., Check]]] = {
    "monoid": MONOID_CHECKS,
    "hopf": HOPF_CHECKS,
    "duality": DUALITY_CHECKS,
    "bases": BASES_CHECKS,
    "ncsym": NCSYM_CHECKS,
    "schurweyl": SCHURWEYL_CHECKS,
}
SUITES["all"] = [fn for key in ("monoid", "hopf", "duality", "bases", "ncsym", "schurweyl") for fn in SUITES[key]]


def run_check(fn: Callable[..., Check], max_n: int | None = None) -> Check:
    try:
        return fn(max_n)
    except Exception as exc:  # a crash is a failure, not an abort
        return Check(getattr(fn, "__name__", str(fn)), False, f"raised {exc!r}")


def run_suite(
    suite: str, max_n: int | None = None, jobs: int = 1
) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(
            f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}"
        )
    fns = SUITES[suite]
    if jobs <= 1:
        return [run_check(fn, max_n) for fn in fns]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_check, fn, max_n) for fn in fns]
        return [fut.result() for fut in futures]
