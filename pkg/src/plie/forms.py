"""Graded exterior algebra over the dual of a fixed n-dimensional basis.

A :class:`FormElement` is a finite sum of monomials ``c * e_{i1} ^ ... ^ e_{ik}``
stored as a map from strictly increasing index tuples to nonzero rational
coefficients. Component index tuples are 1-based (entries in ``1..dim``);
degree-0 elements use the empty tuple. Canonicalization (sorting with sign,
dropping repeated indices and zero coefficients) happens at construction, so
equality is plain map equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidInputError
from .rationals import rational

_ZERO = Fraction(0)


def sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Sort an index tuple, tracking the permutation sign.

    Returns None when an index repeats (the monomial vanishes).
    """
    items = list(indices)
    sign = 1
    # insertion sort; tuples stay tiny
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            return None
    return tuple(items), sign


class FormElement:
    """Element of the exterior algebra on basis covectors ``e_1 .. e_dim``."""

    __slots__ = ("dim", "components")

    def __init__(self, dim: int, components: Mapping[tuple[int, ...], Fraction] | None = None):
        dim = int(dim)
        if dim <= 0:
            raise InvalidInputError("dim must be positive")
        canon: dict[tuple[int, ...], Fraction] = {}
        for indices, coeff in (components or {}).items():
            coeff = rational(coeff)
            if not coeff:
                continue
            indices = tuple(int(i) for i in indices)
            for i in indices:
                if not 1 <= i <= dim:
                    raise InvalidInputError(f"index {i} out of range 1..{dim}")
            sorted_sign = sort_with_sign(indices)
            if sorted_sign is None:
                continue
            key, sign = sorted_sign
            value = canon.get(key, _ZERO) + sign * coeff
            if value:
                canon[key] = value
            else:
                canon.pop(key, None)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "components", canon)

    def __setattr__(self, name, value):
        raise AttributeError("FormElement is immutable")

    @classmethod
    def zero(cls, dim: int) -> "FormElement":
        return cls(dim)

    @classmethod
    def one(cls, dim: int) -> "FormElement":
        return cls(dim, {(): Fraction(1)})

    @classmethod
    def monomial(cls, dim: int, indices: Sequence[int], coeff=1) -> "FormElement":
        return cls(dim, {tuple(indices): rational(coeff)})

    @classmethod
    def basis_covector(cls, dim: int, index1: int) -> "FormElement":
        """The basis 1-form e_{index1}; ``index1`` is 1-based."""
        return cls(dim, {(index1,): Fraction(1)})

    @classmethod
    def from_covector(cls, coords: Sequence[Fraction]) -> "FormElement":
        """Degree-1 form with the given coordinates (0-based sequence)."""
        return cls(len(coords), {(i + 1,): c for i, c in enumerate(coords) if c})

    def to_covector(self) -> tuple[Fraction, ...]:
        if any(len(k) != 1 for k in self.components):
            raise InvalidInputError("not a homogeneous 1-form")
        return tuple(self.components.get((i + 1,), _ZERO) for i in range(self.dim))

    def is_zero(self) -> bool:
        return not self.components

    def degrees(self) -> set[int]:
        return {len(k) for k in self.components}

    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise InvalidInputError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = self.degrees()
        if k is None:
            return len(degs) <= 1
        return degs <= {k}

    def homogeneous_part(self, k: int) -> "FormElement":
        return FormElement(self.dim, {i: c for i, c in self.components.items() if len(i) == k})

    def terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        for key in sorted(self.components, key=lambda t: (len(t), t)):
            yield key, self.components[key]

    def coefficient(self, indices: Sequence[int]) -> Fraction:
        sorted_sign = sort_with_sign(tuple(int(i) for i in indices))
        if sorted_sign is None:
            return _ZERO
        key, sign = sorted_sign
        return sign * self.components.get(key, _ZERO)

    def __add__(self, other: "FormElement") -> "FormElement":
        self._check_compatible(other)
        merged = dict(self.components)
        for key, coeff in other.components.items():
            value = merged.get(key, _ZERO) + coeff
            if value:
                merged[key] = value
            else:
                merged.pop(key, None)
        return FormElement(self.dim, merged)

    def __sub__(self, other: "FormElement") -> "FormElement":
        return self + (-other)

    def __neg__(self) -> "FormElement":
        return FormElement(self.dim, {k: -c for k, c in self.components.items()})

    def __mul__(self, scalar) -> "FormElement":
        c = rational(scalar)
        if not c:
            return FormElement.zero(self.dim)
        return FormElement(self.dim, {k: c * v for k, v in self.components.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "FormElement") -> "FormElement":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormElement):
            return NotImplemented
        return self.dim == other.dim and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.components.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"FormElement({self.dim}, 0)"
        parts = []
        for key, coeff in self.terms():
            mono = "^".join(f"e{i}" for i in key) if key else "1"
            parts.append(f"{coeff}*{mono}")
        return f"FormElement({self.dim}, {' + '.join(parts)})"

    def _check_compatible(self, other: "FormElement") -> None:
        if not isinstance(other, FormElement):
            raise InvalidInputError(f"expected a FormElement, got {type(other).__name__}")
        if self.dim != other.dim:
            raise InvalidInputError(f"dimension mismatch: {self.dim} vs {other.dim}")


def wedge(a: FormElement, b: FormElement) -> FormElement:
    """Graded-commutative associative product; degrees add, coefficients exact."""
    a._check_compatible(b)
    out: dict[tuple[int, ...], Fraction] = {}
    for ka, ca in a.components.items():
        for kb, cb in b.components.items():
            sorted_sign = sort_with_sign(ka + kb)
            if sorted_sign is None:
                continue
            key, sign = sorted_sign
            value = out.get(key, _ZERO) + sign * ca * cb
            if value:
                out[key] = value
            else:
                out.pop(key, None)
    return FormElement(a.dim, out)


def wedge_all(factors: Iterable[FormElement]) -> FormElement:
    factors = list(factors)
    if not factors:
        raise InvalidInputError("wedge_all needs at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = wedge(acc, f)
    return acc
