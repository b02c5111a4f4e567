"""Symmetric functions in non-commuting variables on the power-sum basis.

An element is an integer combination of set partitions, where the partition
``a`` stands for the series summing every word whose letters are constant
on each block of ``a`` (equivalently: words whose kernel coarsens to ``a``).
The series themselves are never materialized; :func:`power_sum_words` gives
the finite-alphabet truncation used as an oracle by the tests.

The assignment (partition a) -> (sum of all diagrams with domain a) is an
isomorphism onto the span of those sums inside the diagram Hopf algebra;
:func:`to_element` and :func:`from_element` move across it.

Text form: "p" followed by the partition, e.g. ``1*p{1,3}{2,4} + 2*p{1,2}``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from blockperm._linear import LinearCombination
from blockperm.hopf import Element, domain_class_sum
from blockperm.partitions import (
    SetPartition,
    cross,
    parse_set_partition,
    restrict_standardize,
)

Word = tuple[int, ...]


class NCSymElement(LinearCombination):
    """Integer combination of set partitions (power-sum coordinates)."""

    @classmethod
    def unit(cls) -> "NCSymElement":
        return cls.basis(SetPartition(0, ()))

    @staticmethod
    def term_str(key) -> str:
        return f"p{key}"


class NCSymTensor(LinearCombination):
    """Integer combination of ordered pairs of set partitions."""

    @staticmethod
    def term_str(key) -> str:
        return f"p{key[0]} (x) p{key[1]}"


def kernel(word: Sequence[int]) -> SetPartition:
    """Partition of the positions of a word by equal letters."""
    fibers: dict[int, list[int]] = {}
    for pos, letter in enumerate(word, start=1):
        fibers.setdefault(letter, []).append(pos)
    return SetPartition.from_blocks(len(word), fibers.values())


def power_sum_words(a: SetPartition, alphabet_size: int) -> list[Word]:
    """All words over {1..alphabet_size} of length a.n whose letters are
    constant on every block of ``a``; exactly alphabet_size**(number of
    blocks) of them, in lexicographic order."""
    if alphabet_size < 1:
        raise ValueError("alphabet size must be at least 1")
    labels = a.position_labels()
    out = []
    for assignment in itertools.product(
        range(1, alphabet_size + 1), repeat=a.num_blocks
    ):
        out.append(tuple(assignment[label] for label in labels))
    out.sort()
    return out


def p_product(u: NCSymElement, v: NCSymElement) -> NCSymElement:
    """Bilinear extension of p_a p_b = p over the side-by-side partition."""
    out: dict[SetPartition, int] = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            key = cross(a, b)
            acc = out.get(key, 0) + ca * cb
            if acc:
                out[key] = acc
            else:
                del out[key]
    return NCSymElement(out)


def p_coproduct(u: NCSymElement) -> NCSymTensor:
    """Sum over all splits of the blocks into two complementary sets, each
    side standardized down to an initial segment."""
    out: dict[tuple[SetPartition, SetPartition], int] = {}
    for a, c in u.terms.items():
        k = a.num_blocks
        for bits in itertools.product((False, True), repeat=k):
            left = restrict_standardize(a, [i for i in range(k) if bits[i]])
            right = restrict_standardize(a, [i for i in range(k) if not bits[i]])
            key = (left, right)
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                del out[key]
    return NCSymTensor(out)


def to_element(u: NCSymElement) -> Element:
    """Send each partition coordinate to the sum of diagrams with that domain."""
    out = Element.zero()
    for a, c in u.terms.items():
        out = out + c * domain_class_sum(a)
    return out


def from_element(x: Element) -> NCSymElement:
    """Inverse of :func:`to_element` on its image.

    Raises ValueError, reporting the residual, if ``x`` is not in the span
    of the domain-class sums.
    """
    by_domain: dict[SetPartition, dict] = {}
    for f, c in x.terms.items():
        by_domain.setdefault(f.domain, {})[f] = c
    coords: dict[SetPartition, int] = {}
    for a, chunk in sorted(by_domain.items()):
        coeffs = set(chunk.values())
        expected = domain_class_sum(a)
        if len(coeffs) == 1 and len(chunk) == len(expected.terms):
            coords[a] = coeffs.pop()
        else:
            got = Element(chunk)
            c = min(chunk.values(), key=abs)
            residual = got - c * expected
            raise ValueError(
                f"not in the span of domain-class sums: residual {residual} "
                f"on domain {a}"
            )
    return NCSymElement(coords)


def parse_p_element(text: str) -> NCSymElement:
    """Parse the p-basis text form, e.g. "1*p{1,3}{2,4} + -1*p{1,2}"."""
    s = text.strip()
    if s == "0":
        return NCSymElement.zero()
    out = NCSymElement.zero()
    for pos, piece in enumerate(s.split(" + ")):
        if "*" in piece:
            coeff_text, _, token = piece.partition("*")
            try:
                coeff = int(coeff_text)
            except ValueError:
                raise ValueError(
                    f"term {pos}: bad coefficient {coeff_text!r} in {piece!r}"
                ) from None
        else:
            coeff, token = 1, piece
        token = token.strip()
        if not token.startswith("p"):
            raise ValueError(f"term {pos}: expected a p{{...}} token, got {token!r}")
        out = out + NCSymElement.basis(parse_set_partition(token[1:]), coeff)
    return out
