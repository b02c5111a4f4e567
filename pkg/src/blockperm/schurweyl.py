"""Exact verification of the tensor-power actions and their commutation.

The diagram monoid acts on the right of the n-th tensor power of an
m-dimensional space: a basis word survives iff it is constant on every
codomain block, and is then rewritten through the shuffle factor onto the
domain blocks.  The wreath product of a cyclic group of order r with the
symmetric group on m letters acts diagonally on the left, with the cyclic
generator scaling one coordinate by a primitive r-th root of unity.

All scalars live in the ring of integer polynomials modulo zeta^r - 1, so
every identity checked here is exact and implies the corresponding complex
statement.  Matrices are stored sparsely (row -> column -> scalar); every
single-diagram action matrix has at most one entry per row.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from blockperm.hopf import Element
from blockperm.monoid import (
    UBP,
    enumerate_ubp,
    merge_generator,
    shuffle_factorization,
    transposition_generator,
)
from blockperm.perms import Permutation, adjacent_transposition

DEFAULT_DIM_CEILING = 4096


@dataclass(frozen=True)
class CyclotomicInteger:
    """Integer combination of the powers 1, zeta, ..., zeta^{r-1} of an
    abstract r-th root of unity; arithmetic reduces exponents mod r."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @staticmethod
    def zero(r: int) -> "CyclotomicInteger":
        return CyclotomicInteger((0,) * r)

    @staticmethod
    def one(r: int) -> "CyclotomicInteger":
        return CyclotomicInteger((1,) + (0,) * (r - 1))

    @staticmethod
    def root_power(r: int, exponent: int) -> "CyclotomicInteger":
        coeffs = [0] * r
        coeffs[exponent % r] = 1
        return CyclotomicInteger(tuple(coeffs))

    def __add__(self, other):
        other = _promote(other, self.order)
        return CyclotomicInteger(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-_promote(other, self.order))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(tuple(other * a for a in self.coeffs))
        r = self.order
        out = [0] * r
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % r] += a * b
        return CyclotomicInteger(tuple(out))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)


def _promote(value, r: int) -> CyclotomicInteger:
    if isinstance(value, CyclotomicInteger):
        return value
    coeffs = [0] * r
    coeffs[0] = value
    return CyclotomicInteger(tuple(coeffs))


@dataclass(frozen=True)
class GroupElement:
    """Element of the wreath product: per-coordinate root exponents followed
    by a permutation of the m coordinates."""

    torus: tuple[int, ...]
    perm: Permutation

    def __post_init__(self):
        if len(self.torus) != self.perm.n:
            raise ValueError("torus length must match the permutation size")


class ActionMatrix:
    """Sparse square matrix with rows indexed by words in lexicographic order."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: dict[int, dict[int, object]] | None = None):
        self.dim = dim
        self.rows = {}
        if rows:
            for i, row in rows.items():
                clean = {j: v for j, v in row.items() if v}
                if clean:
                    self.rows[i] = clean

    @staticmethod
    def identity(dim: int) -> "ActionMatrix":
        return ActionMatrix(dim, {i: {i: 1} for i in range(dim)})

    def __matmul__(self, other: "ActionMatrix") -> "ActionMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        rows: dict[int, dict[int, object]] = {}
        for i, row in self.rows.items():
            acc: dict[int, object] = {}
            for j, a in row.items():
                brow = other.rows.get(j)
                if not brow:
                    continue
                for k, b in brow.items():
                    prev = acc.get(k)
                    val = a * b if prev is None else prev + a * b
                    acc[k] = val
            clean = {k: v for k, v in acc.items() if v}
            if clean:
                rows[i] = clean
        out = ActionMatrix(self.dim)
        out.rows = rows
        return out

    def scaled(self, c: int) -> "ActionMatrix":
        out = ActionMatrix(self.dim)
        if c:
            out.rows = {
                i: {j: c * v for j, v in row.items()} for i, row in self.rows.items()
            }
        return out

    def plus(self, other: "ActionMatrix") -> "ActionMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        rows = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            acc = rows.setdefault(i, {})
            for j, v in row.items():
                prev = acc.get(j)
                val = v if prev is None else prev + v
                if val:
                    acc[j] = val
                else:
                    acc.pop(j, None)
            if not acc:
                del rows[i]
        out = ActionMatrix(self.dim)
        out.rows = rows
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ActionMatrix)
            and self.dim == other.dim
            and self.rows == other.rows
        )

    def entries(self) -> list[tuple[int, int, object]]:
        return [
            (i, j, v)
            for i in sorted(self.rows)
            for j, v in sorted(self.rows[i].items())
        ]


def _check_dim(m: int, n: int, dim_ceiling: int) -> int:
    if m < 1:
        raise ValueError("m must be at least 1")
    dim = m**n
    if dim > dim_ceiling:
        raise ValueError(
            f"refusing a {dim}-dimensional tensor space (ceiling {dim_ceiling})"
        )
    return dim


def tensor_words(m: int, n: int) -> list[tuple[int, ...]]:
    """Words (i_1, ..., i_n) over {1..m} in lexicographic order."""
    return list(itertools.product(range(1, m + 1), repeat=n))


def word_index(word: Sequence[int], m: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * m + (letter - 1)
    return idx


def ubp_word_action(f: UBP, word: Sequence[int]) -> tuple[int, ...] | None:
    """Right action of a diagram on a basis word.

    The word survives iff it is constant on every codomain block; the result
    carries each block's letter back to the domain block through the block
    bijection (position t receives the letter at the shuffle factor's image
    of t)."""
    xi = shuffle_factorization(f).shuffle
    for block in f.codomain.blocks:
        letter = word[block[0] - 1]
        if any(word[i - 1] != letter for i in block[1:]):
            return None
    return tuple(word[xi(t) - 1] for t in range(1, f.n + 1))


def ubp_action_matrix(
    f: UBP, m: int, dim_ceiling: int = DEFAULT_DIM_CEILING
) -> ActionMatrix:
    """Matrix of the right action on words; at most one entry per row."""
    dim = _check_dim(m, f.n, dim_ceiling)
    rows: dict[int, dict[int, object]] = {}
    for i, word in enumerate(tensor_words(m, f.n)):
        target = ubp_word_action(f, word)
        if target is not None:
            rows[i] = {word_index(target, m): 1}
    out = ActionMatrix(dim)
    out.rows = rows
    return out


def element_action_matrix(
    x: Element, m: int, dim_ceiling: int = DEFAULT_DIM_CEILING
) -> ActionMatrix:
    """Action matrix of a linear combination of diagrams of equal degree."""
    n = x.degree()
    acc = ActionMatrix(_check_dim(m, n, dim_ceiling))
    for f, c in x.terms.items():
        acc = acc.plus(ubp_action_matrix(f, m, dim_ceiling).scaled(c))
    return acc


def group_action_matrix(
    g: GroupElement, m: int, r: int, n: int, dim_ceiling: int = DEFAULT_DIM_CEILING
) -> ActionMatrix:
    """Diagonal left action on words: permute letters coordinate-wise and
    multiply by the root power accumulated over the letters."""
    if g.perm.n != m:
        raise ValueError(f"group element lives on {g.perm.n} coordinates, not {m}")
    if r < 1:
        raise ValueError("r must be at least 1")
    dim = _check_dim(m, n, dim_ceiling)
    rows: dict[int, dict[int, object]] = {}
    for i, word in enumerate(tensor_words(m, n)):
        exponent = sum(g.torus[letter - 1] for letter in word)
        target = tuple(g.perm(letter) for letter in word)
        rows[i] = {word_index(target, m): CyclotomicInteger.root_power(r, exponent)}
    out = ActionMatrix(dim)
    out.rows = rows
    return out


def monoid_generators(n: int) -> list[UBP]:
    gens = [transposition_generator(n, i) for i in range(1, n)]
    gens += [merge_generator(n, i) for i in range(1, n)]
    return gens


def group_generators(m: int) -> list[GroupElement]:
    """One torus generator per coordinate plus the adjacent transpositions."""
    gens = []
    for l in range(m):
        torus = tuple(1 if t == l else 0 for t in range(m))
        gens.append(GroupElement(torus, Permutation.identity(m)))
    for j in range(1, m):
        gens.append(GroupElement((0,) * m, adjacent_transposition(m, j)))
    return gens


def commutation_check(
    n: int, m: int, r: int, dim_ceiling: int = DEFAULT_DIM_CEILING
) -> bool:
    """True iff every monoid generator matrix commutes with every group
    generator matrix on the degree-n tensor space."""
    _check_dim(m, n, dim_ceiling)
    if n < 2:
        return True  # no monoid generators below degree 2
    monoid_mats = [ubp_action_matrix(f, m, dim_ceiling) for f in monoid_generators(n)]
    group_mats = [
        group_action_matrix(g, m, r, n, dim_ceiling) for g in group_generators(m)
    ]
    for a in monoid_mats:
        for b in group_mats:
            if a @ b != b @ a:
                return False
    return True


def exact_sparse_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over the rationals of integer vectors given as sparse dicts,
    by fraction-free elimination with gcd normalization."""
    pivots: list[tuple[int, dict[int, int]]] = []
    rank = 0
    for row in rows:
        current = dict(row)
        for col, pivot_row in pivots:
            coeff = current.get(col)
            if not coeff:
                continue
            lead = pivot_row[col]
            merged: dict[int, int] = {c: lead * v for c, v in current.items()}
            for c, v in pivot_row.items():
                val = merged.get(c, 0) - coeff * v
                if val:
                    merged[c] = val
                else:
                    merged.pop(c, None)
            current = merged
        if current:
            g = 0
            for v in current.values():
                g = gcd(g, v)
            if g > 1:
                current = {c: v // g for c, v in current.items()}
            pivots.append((min(current), current))
            rank += 1
    return rank


def action_span_rank(
    n: int, m: int, dim_ceiling: int = DEFAULT_DIM_CEILING
) -> int:
    """Rank of the span of all degree-n diagram action matrices, flattened
    to integer vectors.  Equals the monoid size whenever m >= 2n (the
    injectivity half of the centralizer statement); below that threshold the
    rank may drop and is only reported."""
    dim = _check_dim(m, n, dim_ceiling)
    vectors = []
    for f in enumerate_ubp(n):
        mat = ubp_action_matrix(f, m, dim_ceiling)
        vectors.append(
            {i * dim + j: v for i, row in mat.rows.items() for j, v in row.items()}
        )
    return exact_sparse_rank(vectors)


def convolution_action(
    f: UBP, g: UBP, m: int, dim_ceiling: int = DEFAULT_DIM_CEILING
) -> ActionMatrix:
    """Degree-(p+q) block of (multiply) o (f tensor g) o (unshuffle coproduct)
    on the tensor algebra.

    The coproduct splits a word over every subset of positions (the
    multiplicative extension of v -> v (x) 1 + 1 (x) v); the product
    concatenates.  The result coincides with the action matrix of the Hopf
    product of f and g.
    """
    p, q = f.n, g.n
    n = p + q
    dim = _check_dim(m, n, dim_ceiling)
    rows: dict[int, dict[int, object]] = {}
    for i, word in enumerate(tensor_words(m, n)):
        acc: dict[int, int] = {}
        for subset in itertools.combinations(range(n), p):
            chosen = set(subset)
            left = tuple(word[t] for t in subset)
            right = tuple(word[t] for t in range(n) if t not in chosen)
            a = ubp_word_action(f, left)
            if a is None:
                continue
            b = ubp_word_action(g, right)
            if b is None:
                continue
            j = word_index(a + b, m)
            acc[j] = acc.get(j, 0) + 1
        if acc:
            rows[i] = acc
    out = ActionMatrix(dim)
    out.rows = rows
    return out
