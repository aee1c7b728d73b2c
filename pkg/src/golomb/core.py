"""Rulers, difference triangles, and gracefulness verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

U64_MAX = 2**64 - 1


def _check_u64(value: int) -> int:
    if value < 0 or value > U64_MAX:
        raise OverflowError("value %d outside unsigned 64-bit range" % value)
    return value


@dataclass(frozen=True)
class Ruler:
    """A strictly increasing sequence of integer marks starting at 0.

    The number of marks is the *order*; the largest mark is the *length*
    (the span measured by the ruler, since the first mark is pinned at 0).
    """

    marks: Tuple[int, ...]

    def __post_init__(self):
        marks = tuple(self.marks)
        object.__setattr__(self, "marks", marks)
        if not marks:
            raise ValueError("ruler needs at least one mark")
        if marks[0] != 0:
            raise ValueError("first mark must be 0, got %d" % marks[0])
        for a, b in zip(marks, marks[1:]):
            if b <= a:
                raise ValueError("marks must be strictly increasing")
        _check_u64(marks[-1])

    @property
    def order(self) -> int:
        return len(self.marks)

    def length(self) -> int:
        return self.marks[-1]


@dataclass(frozen=True)
class DifferenceTriangle:
    """Lower-triangular table of every pairwise difference of a ruler.

    Entry (i, j), 1-based with 1 <= j <= i <= order-1, holds
    marks[i+1] - marks[i+1-j] in the ruler's 1-based indexing.  The
    diagonal entry (i, i) recovers mark i+1, since the first mark is 0.
    Storage is a flat row-major lower-triangular array.
    """

    order: int
    entries: Tuple[int, ...]

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, column j (1-based, 1 <= j <= i <= order-1)."""
        if not (1 <= j <= i <= self.order - 1):
            raise IndexError("triangle position (%d, %d) out of range" % (i, j))
        return self.entries[i * (i - 1) // 2 + (j - 1)]

    def row(self, i: int) -> Tuple[int, ...]:
        if not (1 <= i <= self.order - 1):
            raise IndexError("triangle row %d out of range" % i)
        base = i * (i - 1) // 2
        return self.entries[base : base + i]

    def rows(self) -> list:
        return [list(self.row(i)) for i in range(1, self.order)]


@dataclass(frozen=True)
class CollisionSite:
    """Two distinct triangle positions holding the same difference."""

    first: Tuple[int, int]
    second: Tuple[int, int]
    value: int


@dataclass(frozen=True)
class GracefulnessReport:
    graceful: bool
    witness: Optional[CollisionSite] = None

    def __post_init__(self):
        if self.graceful and self.witness is not None:
            raise ValueError("graceful report cannot carry a witness")
        if not self.graceful and self.witness is None:
            raise ValueError("non-graceful report needs a witness")


@dataclass(frozen=True)
class ResidueForm:
    """value = quotient * modulus + residue with 0 <= residue < modulus."""

    value: int
    modulus: int
    quotient: int
    residue: int


def build_difference_triangle(ruler: Ruler) -> DifferenceTriangle:
    """Arrange all C(n,2) pairwise differences of a ruler into a triangle.

    Raises ValueError for order < 2: a triangle needs at least one row.
    """
    n = ruler.order
    if n < 2:
        raise ValueError("order-too-small: need at least 2 marks, got %d" % n)
    marks = ruler.marks
    entries = []
    for i in range(1, n):
        top = marks[i]  # row i ends at the (i+1)-th mark, 1-based
        for j in range(1, i + 1):
            entries.append(_check_u64(top - marks[i - j]))
    return DifferenceTriangle(order=n, entries=tuple(entries))


def verify_graceful(ruler: Ruler) -> GracefulnessReport:
    """Check that all pairwise differences of a ruler are distinct.

    On failure the witness is the lexicographically first duplicate by
    (value, i1, j1, i2, j2), so output is deterministic.
    """
    if ruler.order == 1:
        return GracefulnessReport(graceful=True)
    tri = build_difference_triangle(ruler)
    positions = {}  # value -> list of (i, j) in row-major order
    for i in range(1, ruler.order):
        for j in range(1, i + 1):
            positions.setdefault(tri.entry(i, j), []).append((i, j))
    best = None
    for value, where in positions.items():
        if len(where) < 2:
            continue
        cand = (value, where[0], where[1])
        if best is None or cand < best:
            best = cand
    if best is None:
        return GracefulnessReport(graceful=True)
    value, first, second = best
    return GracefulnessReport(
        graceful=False, witness=CollisionSite(first=first, second=second, value=value)
    )


def decompose_residue(value: int, modulus: int) -> ResidueForm:
    """Write value as quotient * modulus + residue, 0 <= residue < modulus."""
    if modulus < 1:
        raise ValueError("modulus must be positive, got %d" % modulus)
    if value < 0:
        raise ValueError("value must be non-negative, got %d" % value)
    quotient, residue = divmod(value, modulus)
    return ResidueForm(value=value, modulus=modulus, quotient=quotient, residue=residue)


def lower_bound(n: int) -> int:
    """Trivial length lower bound C(n,2): one unit per induced difference."""
    if n < 1:
        raise ValueError("order must be positive, got %d" % n)
    return n * (n - 1) // 2
