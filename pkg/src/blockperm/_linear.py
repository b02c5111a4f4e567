"""Integer linear combinations over hashable, orderable basis keys."""

from __future__ import annotations

from typing import Iterable, Mapping


class LinearCombination:
    """Finite integer linear combination of basis keys.

    Zero coefficients are never stored.  Instances are treated as immutable;
    arithmetic returns fresh objects of the same subclass.  Printing joins
    the terms, sorted by basis key, with " + ", each term rendered as
    ``coefficient*key`` via the subclass hook ``term_str``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = data.get(key, 0) + coeff
            if c:
                data[key] = c
            else:
                data.pop(key, None)
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, key, coeff: int = 1):
        return cls({key: coeff})

    def coeff(self, key) -> int:
        return self.terms.get(key, 0)

    def support(self) -> list:
        return sorted(self.terms)

    def sorted_terms(self) -> list[tuple]:
        return [(key, self.terms[key]) for key in sorted(self.terms)]

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            c = data.get(key, 0) + coeff
            if c:
                data[key] = c
            else:
                data.pop(key, None)
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = type(self).__new__(type(self))
        out.terms = {key: -coeff for key, coeff in self.terms.items()}
        return out

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return type(self)()
        out = type(self).__new__(type(self))
        out.terms = {key: scalar * coeff for key, coeff in self.terms.items()}
        return out

    def __eq__(self, other):
        return type(other) is type(self) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __hash__(self):
        return hash((type(self).__name__, tuple(self.sorted_terms())))

    @staticmethod
    def term_str(key) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{coeff}*{self.term_str(key)}" for key, coeff in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.terms!r})"
