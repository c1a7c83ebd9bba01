"""Dense multi-index tensors over a fixed basis, with exact rational entries.

Indices are 0-based throughout the core. Storage is dense and lexicographic:
dimensions stay small (<= ~12 after doubling), so sparsity is not worth the
complexity. All values are immutable; operations are pure functions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .errors import InvalidInputError, SingularMatrixError
from .rationals import rational

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale_vector(c: Fraction, u: Sequence[Fraction]) -> Vector:
    if not c:
        return zero_vector(len(u))
    return tuple(c * a for a in u)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    total = _ZERO
    for a, b in zip(u, v, strict=True):
        if a and b:
            total += a * b
    return total


def as_vector(values: Iterable) -> Vector:
    return tuple(rational(v) for v in values)


class Tensor:
    """Immutable dense tensor. ``shape`` lists positive axis extents."""

    __slots__ = ("shape", "_data", "_strides")

    def __init__(self, shape: Sequence[int], entries: Iterable):
        shape = tuple(int(s) for s in shape)
        if any(s <= 0 for s in shape):
            raise InvalidInputError(f"tensor shape must be positive: {shape}")
        data = tuple(rational(e) for e in entries)
        size = 1
        for s in shape:
            size *= s
        if len(data) != size:
            raise InvalidInputError(
                f"entry count {len(data)} does not match shape {shape} (need {size})"
            )
        strides = []
        acc = 1
        for s in reversed(shape):
            strides.append(acc)
            acc *= s
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "_strides", tuple(reversed(strides)))

    def __setattr__(self, name, value):
        raise AttributeError("Tensor is immutable")

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> "Tensor":
        size = 1
        for s in shape:
            size *= s
        return cls(shape, [_ZERO] * size)

    @classmethod
    def from_function(cls, shape: Sequence[int], fn: Callable[[tuple[int, ...]], Fraction]) -> "Tensor":
        return cls(shape, [fn(idx) for idx in itertools.product(*(range(s) for s in shape))])

    @classmethod
    def from_nested(cls, nested) -> "Tensor":
        shape = []
        probe = nested
        while isinstance(probe, (list, tuple)):
            shape.append(len(probe))
            probe = probe[0]

        def flatten(node, depth):
            if depth == len(shape):
                yield node
                return
            if len(node) != shape[depth]:
                raise InvalidInputError("ragged nested structure")
            for child in node:
                yield from flatten(child, depth + 1)

        return cls(shape, list(flatten(nested, 0)))

    @property
    def rank(self) -> int:
        return len(self.shape)

    def _flat_index(self, idx: tuple[int, ...]) -> int:
        if len(idx) != len(self.shape):
            raise InvalidInputError(f"index {idx} has wrong rank for shape {self.shape}")
        flat = 0
        for i, (k, s) in enumerate(zip(idx, self.shape)):
            if not 0 <= k < s:
                raise InvalidInputError(f"index {idx} out of range for shape {self.shape}")
            flat += k * self._strides[i]
        return flat

    def __getitem__(self, idx) -> Fraction:
        if isinstance(idx, int):
            idx = (idx,)
        return self._data[self._flat_index(tuple(idx))]

    def indices(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(s) for s in self.shape))

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """Yield (index, value) for the nonzero entries, in lexicographic order."""
        for idx, value in zip(self.indices(), self._data):
            if value:
                yield idx, value

    def is_zero(self) -> bool:
        return not any(self._data)

    def first_nonzero(self) -> tuple[tuple[int, ...], Fraction] | None:
        for idx, value in self.items():
            return idx, value
        return None

    def to_vector(self) -> Vector:
        if len(self.shape) != 1:
            raise InvalidInputError("to_vector requires a rank-1 tensor")
        return self._data

    def to_rows(self) -> list[list[Fraction]]:
        if len(self.shape) != 2:
            raise InvalidInputError("to_rows requires a rank-2 tensor")
        n, m = self.shape
        return [list(self._data[i * m : (i + 1) * m]) for i in range(n)]

    def outer(self, other: "Tensor") -> "Tensor":
        entries = [a * b for a in self._data for b in other._data]
        return Tensor(self.shape + other.shape, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        nonzero = sum(1 for v in self._data if v)
        return f"Tensor(shape={self.shape}, nonzero={nonzero})"


def tensor_contract(t: Tensor, axis_a: int, axis_b: int) -> Tensor:
    """Contract two axes of equal extent; the result drops both axes.

    A rank-2 tensor contracted over both axes yields a rank-0 tensor whose
    single entry is the trace.
    """
    r = t.rank
    if not (0 <= axis_a < r and 0 <= axis_b < r) or axis_a == axis_b:
        raise InvalidInputError(f"invalid contraction axes ({axis_a}, {axis_b}) for rank {r}")
    if t.shape[axis_a] != t.shape[axis_b]:
        raise InvalidInputError(
            f"contraction axes have different extents: {t.shape[axis_a]} vs {t.shape[axis_b]}"
        )
    lo, hi = sorted((axis_a, axis_b))
    out_shape = tuple(s for i, s in enumerate(t.shape) if i not in (lo, hi))
    extent = t.shape[lo]

    def entry(out_idx: tuple[int, ...]) -> Fraction:
        total = _ZERO
        for k in range(extent):
            full = list(out_idx)
            full.insert(lo, k)
            full.insert(hi, k)
            total += t[tuple(full)]
        return total

    return Tensor.from_function(out_shape, entry)


def _eliminate(rows: list[list[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int], int]:
    """Row-reduce in place over Q. Returns (rows, pivot columns, rank)."""
    n = len(rows)
    pivots: list[int] = []
    row = 0
    for col in range(width):
        pivot = next((r for r in range(row, n) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = 1 / rows[row][col]
        rows[row] = [v * inv for v in rows[row]]
        for r in range(n):
            if r != row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return rows, pivots, row


def solve_rows(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector:
    """Exact solution x of matrix . x = rhs for a square invertible matrix."""
    n = len(matrix)
    if any(len(r) != n for r in matrix) or len(rhs) != n:
        raise InvalidInputError("solve needs a square matrix and a matching right-hand side")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, pivots, rank = _eliminate(aug, n)
    if rank < n:
        raise SingularMatrixError("matrix is singular over Q", rank)
    solution = [_ZERO] * n
    for r, col in enumerate(pivots):
        solution[col] = reduced[r][n]
    return tuple(solution)


def invert_rows(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix, by Gauss-Jordan on [M | I]."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise InvalidInputError("inverse needs a square matrix")
    aug = [list(row) + [Fraction(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, _, rank = _eliminate(aug, n)
    if rank < n:
        raise SingularMatrixError("matrix is singular over Q", rank)
    return [row[n:] for row in reduced]


def matrix_rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in matrix]
    width = len(rows[0]) if rows else 0
    _, _, rank = _eliminate(rows, width)
    return rank


def determinant_rows(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return _ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def solve_linear(m: Tensor, rhs: Tensor) -> Tensor:
    """Solve m . x = rhs exactly; m rank-2 square, rhs rank-1."""
    if m.rank != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInputError("solve_linear needs a square rank-2 tensor")
    if rhs.rank != 1 or rhs.shape[0] != m.shape[0]:
        raise InvalidInputError("right-hand side does not match the matrix")
    return Tensor((m.shape[0],), solve_rows(m.to_rows(), rhs.to_vector()))
