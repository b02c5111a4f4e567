"""The monoid of uniform block permutations of [n].

An element is a bijection between the blocks of two set partitions of [n]
(the domain and the codomain) matching blocks of equal size.  Diagrams are
drawn with the domain on top; ``compose(g, f)`` glues the bottom of f's
diagram to the top of g's and means "apply f first, then g".  Consequences
of this orientation, all covered by tests:

* ``compose(from_permutation(sigma), f)`` relabels only the codomain side;
* ``compose(f, from_permutation(sigma))`` has domain ``sigma^{-1}(dom f)``;
* ``id_of_partition(a) . id_of_partition(b) == id_of_partition(meet(a, b))``.

Text form: domain-ordered block arrows joined by ";", e.g.
``{1,3}->{1,2};{2}->{3}``; the empty diagram (n = 0) prints as ``{}->{}``.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from blockperm._kernels import canonical_labels, glue_labels
from blockperm.partitions import (
    SetPartition,
    block_shuffles,
    cross,
    restrict_standardize,
    set_partitions,
)
from blockperm.perms import Permutation, weak_leq as perm_weak_leq

DEFAULT_CEILING = 6


class EnumerationCeilingError(RuntimeError):
    """Raised when an enumeration would exceed the configured size ceiling."""


def enumeration_ceiling() -> int:
    """Default ceiling on n for full enumerations of the monoid; override
    with the BLOCKPERM_CEILING environment variable."""
    raw = os.environ.get("BLOCKPERM_CEILING")
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"BLOCKPERM_CEILING must be an integer, got {raw!r}") from None


def _check_ceiling(n: int, ceiling: int | None) -> None:
    limit = enumeration_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise EnumerationCeilingError(
            f"refusing to enumerate at n={n}: ceiling is {limit} "
            "(raise it explicitly or via BLOCKPERM_CEILING)"
        )


@dataclass(frozen=True, order=True)
class UniformBlockPermutation:
    """A size-preserving bijection between the blocks of two partitions.

    ``block_map[k]`` is the index, in canonical block order of the codomain,
    of the image of the k-th domain block.  Instances are validated on
    construction, so every value in circulation is uniform.
    """

    domain: SetPartition
    codomain: SetPartition
    block_map: tuple[int, ...]

    def __post_init__(self):
        dom, cod = self.domain, self.codomain
        if dom.n != cod.n:
            raise ValueError(f"domain on [{dom.n}] but codomain on [{cod.n}]")
        k = dom.num_blocks
        if cod.num_blocks != k:
            raise ValueError(
                f"domain has {k} blocks but codomain has {cod.num_blocks}"
            )
        if sorted(self.block_map) != list(range(k)):
            raise ValueError(f"block map {self.block_map!r} is not a bijection")
        for i, j in enumerate(self.block_map):
            if len(dom.blocks[i]) != len(cod.blocks[j]):
                raise ValueError(
                    f"non-uniform: block {dom.blocks[i]} maps to {cod.blocks[j]}"
                )

    @property
    def n(self) -> int:
        return self.domain.n

    def image_block(self, k: int) -> tuple[int, ...]:
        return self.codomain.blocks[self.block_map[k]]

    def is_permutation(self) -> bool:
        """True iff all blocks are singletons."""
        return self.domain.num_blocks == self.n

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise ValueError("not a permutation: has a block of size > 1")
        images = [0] * self.n
        for k, block in enumerate(self.domain.blocks):
            images[block[0] - 1] = self.image_block(k)[0]
        return Permutation(tuple(images))

    def __str__(self) -> str:
        if self.n == 0:
            return "{}->{}"
        arrows = []
        for k, block in enumerate(self.domain.blocks):
            dom = "{" + ",".join(str(i) for i in block) + "}"
            cod = "{" + ",".join(str(i) for i in self.image_block(k)) + "}"
            arrows.append(dom + "->" + cod)
        return ";".join(arrows)


UBP = UniformBlockPermutation


def make_ubp(
    domain: SetPartition, codomain: SetPartition, block_map: Sequence[int]
) -> UBP:
    return UBP(domain, codomain, tuple(block_map))


def from_block_images(n: int, arrows: Iterable[tuple[Iterable[int], Iterable[int]]]) -> UBP:
    """Build an element from (domain block, image block) pairs in any order."""
    pairs = [(tuple(sorted(d)), tuple(sorted(c))) for d, c in arrows]
    pairs.sort(key=lambda p: p[0][0] if p[0] else 0)
    domain = SetPartition.from_blocks(n, [d for d, _ in pairs])
    codomain = SetPartition.from_blocks(n, [c for _, c in pairs])
    rank = {block: j for j, block in enumerate(codomain.blocks)}
    return UBP(domain, codomain, tuple(rank[c] for _, c in pairs))


def identity(n: int) -> UBP:
    """All-singletons identity element."""
    singles = tuple((i,) for i in range(1, n + 1))
    part = SetPartition(n, singles)
    return UBP(part, part, tuple(range(n)))


def id_of_partition(a: SetPartition) -> UBP:
    """The identity map on the blocks of ``a``; idempotent."""
    return UBP(a, a, tuple(range(a.num_blocks)))


def from_permutation(sigma: Permutation) -> UBP:
    """View a permutation as an element with all blocks singletons."""
    n = sigma.n
    singles = tuple((i,) for i in range(1, n + 1))
    part = SetPartition(n, singles)
    return UBP(part, part, tuple(sigma(i) - 1 for i in range(1, n + 1)))


def transposition_generator(n: int, i: int) -> UBP:
    """The adjacent transposition of i and i+1, as a diagram."""
    from blockperm.perms import adjacent_transposition

    return from_permutation(adjacent_transposition(n, i))


def merge_generator(n: int, i: int) -> UBP:
    """The idempotent joining {i, i+1} on both rows, all else singletons."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"merge generator index {i} out of range for n={n}")
    blocks = [(j,) for j in range(1, i)] + [(i, i + 1)] + [(j,) for j in range(i + 2, n + 1)]
    part = SetPartition(n, tuple(blocks))
    return UBP(part, part, tuple(range(len(blocks))))


def to_labels(f: UBP) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical label rows (top = domain side, bottom = codomain side).

    Component ids are domain-block indices; the encoding is the one the
    composition kernels operate on.
    """
    top = f.domain.position_labels()
    inverse_map = [0] * len(f.block_map)
    for k, j in enumerate(f.block_map):
        inverse_map[j] = k
    cod_labels = f.codomain.position_labels()
    bot = tuple(inverse_map[label] for label in cod_labels)
    return top, bot


def from_labels(n: int, top: Sequence[int], bot: Sequence[int]) -> UBP:
    """Inverse of :func:`to_labels`; expects canonical label rows."""
    k = max(top, default=-1) + 1
    dom_blocks: list[list[int]] = [[] for _ in range(k)]
    cod_fibers: list[list[int]] = [[] for _ in range(k)]
    for i, label in enumerate(top, start=1):
        dom_blocks[label].append(i)
    for j, label in enumerate(bot, start=1):
        cod_fibers[label].append(j)
    domain = SetPartition(n, tuple(tuple(b) for b in dom_blocks))
    order = sorted(range(k), key=lambda label: cod_fibers[label][0])
    rank = [0] * k
    for pos, label in enumerate(order):
        rank[label] = pos
    codomain = SetPartition(n, tuple(tuple(cod_fibers[label]) for label in order))
    return UBP(domain, codomain, tuple(rank))


def compose(g: UBP, f: UBP) -> UBP:
    """The product g.f: apply f first, then g (f's diagram on top).

    >>> str(compose(merge_generator(3, 1), merge_generator(3, 2)))
    '{1,2,3}->{1,2,3}'
    >>> compose(merge_generator(2, 1), transposition_generator(2, 1)) == merge_generator(2, 1)
    True
    """
    if f.n != g.n:
        raise ValueError(f"size mismatch: {g.n} vs {f.n}")
    ftop, fbot = to_labels(f)
    gtop, gbot = to_labels(g)
    top, bot = glue_labels(ftop, fbot, gtop, gbot)
    return from_labels(f.n, top, bot)


def left_compose_perm(sigma: Permutation, f: UBP) -> UBP:
    """compose(from_permutation(sigma), f): relabels the codomain side only."""
    if sigma.n != f.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {f.n}")
    top, bot = to_labels(f)
    new_bot = [0] * f.n
    for i in range(1, f.n + 1):
        new_bot[sigma(i) - 1] = bot[i - 1]
    return from_labels(f.n, top, tuple(new_bot))


def right_compose_perm(f: UBP, sigma: Permutation) -> UBP:
    """compose(f, from_permutation(sigma)): domain becomes sigma^{-1}(dom f)."""
    if sigma.n != f.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {f.n}")
    top, bot = to_labels(f)
    new_top = tuple(top[sigma(i) - 1] for i in range(1, f.n + 1))
    ctop, cbot = canonical_labels(new_top, bot)
    return from_labels(f.n, ctop, cbot)


def diagram_inverse(f: UBP) -> UBP:
    """Swap domain and codomain and invert the block bijection.

    This is the unique inverse-monoid partner of f: f.finv.f == f and
    finv.f.finv == finv; on permutations it is the group inverse.
    """
    inverse_map = [0] * len(f.block_map)
    for k, j in enumerate(f.block_map):
        inverse_map[j] = k
    return UBP(f.codomain, f.domain, tuple(inverse_map))


def concat(f: UBP, g: UBP) -> UBP:
    """Place g's diagram, shifted by f.n, to the right of f's."""
    domain = cross(f.domain, g.domain)
    codomain = cross(f.codomain, g.codomain)
    a = f.domain.num_blocks
    block_map = f.block_map + tuple(j + a for j in g.block_map)
    return UBP(domain, codomain, block_map)


def enumerate_ubp(n: int, ceiling: int | None = None) -> list[UBP]:
    """All elements on [n], each once, in canonical order: every ordered pair
    of equal-type partitions with every size-preserving block bijection."""
    _check_ceiling(n, ceiling)
    parts = set_partitions(n)
    by_type: dict[tuple[int, ...], list[SetPartition]] = {}
    for p in parts:
        by_type.setdefault(p.type().multiplicities, []).append(p)
    out: list[UBP] = []
    for group in by_type.values():
        for domain, codomain in itertools.product(group, group):
            out.extend(_block_bijections(domain, codomain))
    out.sort()
    return out


def _block_bijections(domain: SetPartition, codomain: SetPartition) -> list[UBP]:
    """All uniform elements between two partitions of the same type."""
    dom_by_size: dict[int, list[int]] = {}
    cod_by_size: dict[int, list[int]] = {}
    for k, b in enumerate(domain.blocks):
        dom_by_size.setdefault(len(b), []).append(k)
    for k, b in enumerate(codomain.blocks):
        cod_by_size.setdefault(len(b), []).append(k)
    sizes = sorted(dom_by_size)
    choices = [
        list(itertools.permutations(cod_by_size[s])) for s in sizes
    ]
    out = []
    for combo in itertools.product(*choices):
        block_map = [0] * domain.num_blocks
        for s, arrangement in zip(sizes, combo):
            for k, j in zip(dom_by_size[s], arrangement):
                block_map[k] = j
        out.append(UBP(domain, codomain, tuple(block_map)))
    return out


def elements_with_domain(a: SetPartition) -> list[UBP]:
    """All elements with the given domain partition, in canonical order."""
    parts = set_partitions(a.n)
    key = a.type().multiplicities
    out = []
    for codomain in parts:
        if codomain.type().multiplicities == key:
            out.extend(_block_bijections(a, codomain))
    out.sort()
    return out


def closure_from_generators(n: int, ceiling: int | None = None) -> list[UBP]:
    """Breadth-first closure of the transposition and merge generators under
    composition; equals enumerate_ubp(n) as a set."""
    _check_ceiling(n, ceiling)
    gens = [transposition_generator(n, i) for i in range(1, n)]
    gens += [merge_generator(n, i) for i in range(1, n)]
    start = identity(n)
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return sorted(seen)


def _integer_partition_multiplicities(n: int) -> list[tuple[int, ...]]:
    """Multiplicity vectors (m_1..m_n) of all integer partitions of n."""
    out: list[tuple[int, ...]] = []
    mult = [0] * n

    def descend(remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(tuple(mult))
            return
        for part in range(min(remaining, max_part), 0, -1):
            mult[part - 1] += 1
            descend(remaining - part, part)
            mult[part - 1] -= 1

    if n == 0:
        return [()]
    descend(n, n)
    return out


def count_ubp(n: int) -> int:
    """Closed-form count: sum over types of (number of partitions of that
    type) squared times the block bijections within each size class."""
    from blockperm.partitions import PartitionType, count_of_type

    total = 0
    for mult in _integer_partition_multiplicities(n):
        per_type = count_of_type(PartitionType(mult))
        bijections = 1
        for m in mult:
            bijections *= math.factorial(m)
        total += per_type * per_type * bijections
    return total


def count_ubp_recursive(n: int) -> int:
    """Count via u_{k+1} = sum_j C(k, j) C(k+1, j) u_j with u_0 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    u = [1]
    for k in range(n):
        u.append(sum(math.comb(k, j) * math.comb(k + 1, j) * u[j] for j in range(k + 1)))
    return u[n]


def breaking_points(f: UBP) -> tuple[int, ...]:
    """All i in {0..n} such that {1..i} is a union of codomain blocks.

    0 and n are always breaking points; for a permutation every i is.

    >>> breaking_points(parse_ubp("{1,3}->{1,2};{2}->{3}"))
    (0, 2, 3)
    """
    spans = [(block[0], block[-1]) for block in f.codomain.blocks]
    out = []
    for i in range(f.n + 1):
        if all(last <= i or first > i for first, last in spans):
            out.append(i)
    return tuple(out)


def split_at_breaking_point(f: UBP, i: int) -> tuple[Permutation, UBP, UBP]:
    """Factor f through the breaking point i.

    Returns (xi, left, right) where left and right are the standardized
    restrictions of f to the codomain prefix {1..i} and suffix {i+1..n}
    (and their domain preimages), and xi is the unique (i, n-i)-shuffle with

        f == compose(concat(left, right), from_permutation(xi.inverse()))

    Uniqueness of xi among the (i, n-i)-shuffles is checked exhaustively in
    the test suite rather than assumed.
    """
    n = f.n
    if i not in breaking_points(f):
        raise ValueError(f"{i} is not a breaking point of {f}")
    prefix_ids = [
        k for k, j in enumerate(f.block_map) if f.codomain.blocks[j][-1] <= i
    ]
    chosen = set(prefix_ids)
    suffix_ids = [k for k in range(len(f.block_map)) if k not in chosen]
    left = _restrict_to_blocks(f, prefix_ids)
    right = _restrict_to_blocks(f, suffix_ids)
    support = sorted(x for k in prefix_ids for x in f.domain.blocks[k])
    rest = sorted(set(range(1, n + 1)) - set(support))
    xi = Permutation(tuple(support + rest))
    return xi, left, right


def _restrict_to_blocks(f: UBP, ids: Sequence[int]) -> UBP:
    """Standardized restriction of f to the given domain-block indices."""
    dom = restrict_standardize(f.domain, ids)
    cod = restrict_standardize(f.codomain, [f.block_map[k] for k in ids])
    dom_sorted = sorted(ids, key=lambda k: f.domain.blocks[k][0])
    cod_order = sorted(
        (f.block_map[k] for k in ids),
        key=lambda j: f.codomain.blocks[j][0],
    )
    rank = {j: pos for pos, j in enumerate(cod_order)}
    block_map = tuple(rank[f.block_map[k]] for k in dom_sorted)
    return UBP(dom, cod, block_map)


@dataclass(frozen=True)
class ShuffleFactorization:
    """The unique factorization f = shuffle . id_of_partition(domain) with
    the shuffle increasing on every domain block."""

    shuffle: Permutation
    domain: SetPartition

    def reconstruct(self) -> UBP:
        return compose(from_permutation(self.shuffle), id_of_partition(self.domain))


def shuffle_factorization(f: UBP) -> ShuffleFactorization:
    """Extract the block-shuffle factor: each domain block, in increasing
    order, maps onto its image block in increasing order."""
    images = [0] * f.n
    for k, block in enumerate(f.domain.blocks):
        for src, dst in zip(block, f.image_block(k)):
            images[src - 1] = dst
    return ShuffleFactorization(Permutation(tuple(images)), f.domain)


def weak_leq(f: UBP, g: UBP) -> bool:
    """Weak order on the monoid: same domain and comparable shuffle factors.

    Elements with different domain partitions are incomparable, so the poset
    is a disjoint union of components indexed by domain partitions.
    """
    if f.n != g.n:
        raise ValueError(f"size mismatch: {f.n} vs {g.n}")
    if f.domain != g.domain:
        return False
    return perm_weak_leq(
        shuffle_factorization(f).shuffle, shuffle_factorization(g).shuffle
    )


def hasse_component(a: SetPartition) -> tuple[list[UBP], list[tuple[int, int]]]:
    """Hasse diagram of the weak-order component of elements with domain a.

    Returns (nodes, covers): nodes in canonical order and covers as index
    pairs (i, j) meaning nodes[i] is covered by nodes[j].
    """
    nodes = [
        compose(from_permutation(xi), id_of_partition(a)) for xi in block_shuffles(a)
    ]
    nodes.sort()
    k = len(nodes)
    less = [[False] * k for _ in range(k)]
    for i, f in enumerate(nodes):
        for j, g in enumerate(nodes):
            if i != j and weak_leq(f, g):
                less[i][j] = True
    covers = []
    for i in range(k):
        for j in range(k):
            if less[i][j] and not any(less[i][m] and less[m][j] for m in range(k)):
                covers.append((i, j))
    return nodes, covers


def parse_ubp(text: str) -> UBP:
    """Parse the arrow text form, e.g. "{1,3}->{1,2};{2}->{3}".

    The empty diagram is written "{}->{}".  Valid but non-canonical input is
    rejected with the canonical spelling in the error message.
    """
    s = text.strip()
    if s == "{}->{}":
        return identity(0)
    arrows = []
    for pos, piece in enumerate(s.split(";")):
        halves = piece.split("->")
        if len(halves) != 2:
            raise ValueError(f"arrow {pos} must look like '{{..}}->{{..}}': {piece!r}")
        arrows.append((_parse_block(halves[0], piece), _parse_block(halves[1], piece)))
    n = max((i for d, _ in arrows for i in d), default=0)
    result = from_block_images(n, arrows)
    if str(result) != s:
        raise ValueError(f"non-canonical element {text!r}; canonical form is {result}")
    return result


def _parse_block(text: str, context: str) -> tuple[int, ...]:
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")) or len(s) < 3:
        raise ValueError(f"bad block {text!r} in {context!r}")
    try:
        return tuple(int(tok) for tok in s[1:-1].split(","))
    except ValueError:
        raise ValueError(f"bad block contents {text!r} in {context!r}") from None


def ubp_to_json(f: UBP) -> dict:
    """JSON form: blocks and images are the canonical block lists, map holds
    0-based codomain block indices."""
    return {
        "n": f.n,
        "blocks": [list(b) for b in f.domain.blocks],
        "images": [list(b) for b in f.codomain.blocks],
        "map": list(f.block_map),
    }


def ubp_from_json(data: dict) -> UBP:
    domain = SetPartition.from_blocks(data["n"], data["blocks"])
    codomain = SetPartition.from_blocks(data["n"], data["images"])
    return UBP(domain, codomain, tuple(data["map"]))
