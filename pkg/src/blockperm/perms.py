"""Permutations in one-line form, shuffles, and the weak order.

Conventions used by the whole package:

* permutations act on ``{1, ..., n}``; ``images[i - 1]`` is the image of ``i``
* composition is right-to-left: ``(sigma * tau)(i) == sigma(tau(i))``
* an inversion of ``sigma`` is a pair of positions ``(i, j)`` with ``i < j``
  and ``sigma(i) > sigma(j)``; the weak order is containment of inversion
  sets.  This convention is validated (lower ideals, maximum shuffle, basis
  products) rather than assumed; with inversions of the inverse permutation
  the same battery fails.

Text form is the bracketed one-line word, e.g. ``[2,3,1]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images!r}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose, applying ``other`` first."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def inversions(self) -> set[tuple[int, int]]:
        """Pairs of positions (i, j), i < j, mapped out of order."""
        ims = self.images
        n = self.n
        return {
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if ims[i - 1] > ims[j - 1]
        }

    def length(self) -> int:
        return len(self.inversions())

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def adjacent_transposition(n: int, i: int) -> Permutation:
    """The transposition swapping ``i`` and ``i + 1`` in S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"adjacent transposition index {i} out of range for n={n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic one-line order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _inversion_mask(images: tuple[int, ...]) -> int:
    n = len(images)
    mask = 0
    for i in range(n):
        vi = images[i]
        for j in range(i + 1, n):
            if vi > images[j]:
                mask |= 1 << (i * n + j)
    return mask


def weak_leq(sigma: Permutation, tau: Permutation) -> bool:
    """Weak order: inversion set of ``sigma`` contained in that of ``tau``.

    >>> weak_leq(Permutation((1, 3, 2)), Permutation((3, 1, 2)))
    False
    >>> weak_leq(Permutation((1, 3, 2)), Permutation((2, 3, 1)))
    True
    """
    if sigma.n != tau.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {tau.n}")
    a = _inversion_mask(sigma.images)
    b = _inversion_mask(tau.images)
    return a & ~b == 0


def shuffles(p: int, q: int) -> list[Permutation]:
    """All (p, q)-shuffles: permutations of S_{p+q} increasing on the first
    p and on the last q positions.  C(p+q, p) of them, in lexicographic
    order of the image set of the first p positions.

    >>> [str(xi) for xi in shuffles(1, 2)]
    ['[1,2,3]', '[2,1,3]', '[3,1,2]']
    >>> len(shuffles(2, 2))
    6
    """
    if p < 0 or q < 0:
        raise ValueError("shuffle sizes must be non-negative")
    n = p + q
    universe = range(1, n + 1)
    out = []
    for chosen in itertools.combinations(universe, p):
        taken = set(chosen)
        rest = tuple(v for v in universe if v not in taken)
        out.append(Permutation(chosen + rest))
    return out


def max_shuffle(p: int, q: int) -> Permutation:
    """The (p, q)-shuffle sending i to q + i for i <= p; the unique maximum
    of shuffles(p, q) in the weak order.

    >>> str(max_shuffle(2, 2))
    '[3,4,1,2]'
    """
    if p < 0 or q < 0:
        raise ValueError("shuffle sizes must be non-negative")
    return Permutation(tuple(range(q + 1, q + p + 1)) + tuple(range(1, q + 1)))


def rotation_shuffle(n: int, m: int) -> Permutation:
    """The (n, m)-shuffle moving the first n positions past the last m:
    i -> m + i for i <= n, i -> i - n otherwise.  Its inverse is
    rotation_shuffle(m, n)."""
    if n < 0 or m < 0:
        raise ValueError("shuffle sizes must be non-negative")
    return Permutation(tuple(range(m + 1, m + n + 1)) + tuple(range(1, m + 1)))


def concat_perms(sigma: Permutation, tau: Permutation) -> Permutation:
    """The permutation acting as sigma on 1..p and as tau shifted on p+1..p+q."""
    p = sigma.n
    return Permutation(sigma.images + tuple(v + p for v in tau.images))


def parse_permutation(text: str) -> Permutation:
    """Parse the bracketed one-line form, e.g. "[2,3,1]" or "[]"."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"permutation must be bracketed one-line form: {text!r}")
    body = s[1:-1]
    if not body:
        return Permutation(())
    try:
        images = tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"bad permutation entry in {text!r}") from None
    return Permutation(images)
