"""Explicit ruler families and the quadratic-formula impossibility engine.

Three constructions are provided: the exponential family x_i = 2^(i-1) - 1,
the cubic family x_i = C(i-1,2)*n + (i-1), and the half-cubic family which
swaps the modulus n for roughly n/2 and cuts the length in half.  The
collision engine certifies that no quadratic polynomial in the index can
produce a ruler with all differences distinct once the order is large enough.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Ruler, _check_u64


@dataclass(frozen=True)
class TriangularParams:
    """Order and modulus for the family x_i = C(i-1,2)*modulus + (i-1)."""

    order: int
    modulus: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be at least 2, got %d" % self.order)
        if self.modulus < 1:
            raise ValueError("modulus must be positive, got %d" % self.modulus)


@dataclass(frozen=True)
class QuadraticFamilyParams:
    """Coefficients of the reduced quadratic x_i = a(i-1)^2 + bn(i-1) + c(i-1).

    The four constraints below are exactly the ones any candidate graceful
    family must satisfy; everything outside them is trivially non-graceful.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("constraint violated: a must be nonzero")
        if self.b <= 0:
            raise ValueError("constraint violated: b must be positive")
        if 2 * self.a + self.b <= 0:
            raise ValueError("constraint violated: 2a + b must be positive")
        if self.c <= -self.a - 2 * self.b:
            raise ValueError("constraint violated: c must exceed -a - 2b")


@dataclass(frozen=True)
class CollisionWitness:
    """A duplicated difference in the quadratic family's triangle at order n."""

    n: int
    i1: int
    j1: int
    i2: int
    j2: int
    value: int


def construct_powers_of_two(n: int) -> Ruler:
    """Exponential ruler x_i = 2^(i-1) - 1; always graceful, huge length."""
    if n < 1:
        raise ValueError("order must be positive, got %d" % n)
    if n > 63:
        raise OverflowError("order-too-large: 2^(n-1) - 1 exceeds 64 bits for n > 63")
    return Ruler(tuple(2 ** (i - 1) - 1 for i in range(1, n + 1)))


def construct_triangular(params: TriangularParams) -> Ruler:
    """Build x_i = (i-1)(i-2)/2 * modulus + (i-1).

    Gracefulness is only guaranteed for modulus n, n-2, or the half-cubic
    parity rule; smaller moduli may collide and are left to verify_graceful.
    """
    n, mod = params.order, params.modulus
    marks = tuple(
        _check_u64((i - 1) * (i - 2) // 2 * mod + (i - 1)) for i in range(1, n + 1)
    )
    return Ruler(marks)


def construct_cubic(n: int) -> Ruler:
    """Cubic ruler: the triangular family with modulus equal to the order."""
    return construct_triangular(TriangularParams(order=n, modulus=n))


def half_cubic_modulus(n: int) -> int:
    """Parity rule: (n-1)/2 for odd n, n/2 for even n."""
    if n < 2:
        raise ValueError("order must be at least 2, got %d" % n)
    return (n - 1) // 2 if n % 2 == 1 else n // 2


def construct_half_cubic(n: int) -> Ruler:
    """Half-cubic ruler: triangular family with the parity-rule modulus."""
    return construct_triangular(TriangularParams(order=n, modulus=half_cubic_modulus(n)))


def cubic_bound(n: int) -> int:
    """Length of the cubic ruler: (n-1)((n-1)^2 + 1)/2."""
    if n < 2:
        raise ValueError("order must be at least 2, got %d" % n)
    numerator = (n - 1) * ((n - 1) ** 2 + 1)
    assert numerator % 2 == 0
    return _check_u64(numerator // 2)


def half_cubic_bound(n: int) -> int:
    """Length of the half-cubic ruler, dispatched on the parity of n."""
    if n < 2:
        raise ValueError("order must be at least 2, got %d" % n)
    if n % 2 == 1:
        numerator = (n - 1) ** 2 * (n - 2)
    else:
        numerator = n * (n - 1) * (n - 2)
    assert numerator % 4 == 0
    return _check_u64((n - 1) + numerator // 4)


def shifted_cubic_bound(n: int) -> int:
    """Length of the triangular family at modulus n - 2 (older published bound)."""
    if n < 2:
        raise ValueError("order must be at least 2, got %d" % n)
    return _check_u64((n - 1) * (n - 2) // 2 * (n - 2) + (n - 1))


def check_star_inequality(n: int) -> bool:
    """Confirm the half-cubic triangle's two residue blocks cannot collide.

    For each column j in the first block, the largest entry must stay below
    the smallest entry of column N+j, the column in the second block with the
    same residue.  In closed form that is

        [j(n-2) - j(j-1)/2] * N + j  <  [(N+j)(N+j-1)/2] * N + N + j

    which reduces to (N+j)(N+j-1)/2 + 1 > j(n-2) - j(j-1)/2.  Always true;
    exposed so tests can confirm it numerically over a large range of n.
    """
    if n < 2:
        raise ValueError("order must be at least 2, got %d" % n)
    mod = half_cubic_modulus(n)
    for j in range(1, mod + 1):
        if (mod + j) * (mod + j - 1) // 2 + 1 <= j * (n - 2) - j * (j - 1) // 2:
            return False
    return True


def quadratic_sequence(params: QuadraticFamilyParams, n: int) -> list:
    """Evaluate x_i = a(i-1)^2 + bn(i-1) + c(i-1) for i = 1..n.

    Returned as a raw list: for a < 0 the sequence eventually decreases, and
    the collision engine does not need monotonicity.
    """
    if n < 3:
        raise ValueError("order must be at least 3, got %d" % n)
    a, b, c = params.a, params.b, params.c
    return [a * (i - 1) ** 2 + b * n * (i - 1) + c * (i - 1) for i in range(1, n + 1)]


def find_quadratic_collision(params: QuadraticFamilyParams) -> CollisionWitness:
    """Produce the order and triangle positions where the family repeats a difference.

    At n = 2a^2 + b^2 + 2ab + 2a + 3b + 2 + c the entries at (n-1, b+1) and
    (2a+b+1, 2a+b+1) coincide.  Both entries are recomputed directly from the
    sequence before returning; a mismatch would be an implementation bug.
    """
    a, b, c = params.a, params.b, params.c
    n = 2 * a * a + b * b + 2 * a * b + 2 * a + 3 * b + 2 + c
    i1, j1 = n - 1, b + 1
    i2 = j2 = 2 * a + b + 1
    for i, j in ((i1, j1), (i2, j2)):
        if not (1 <= j <= i <= n - 1) or not (j < n - 1):
            raise RuntimeError(
                "internal-inconsistency: position (%d, %d) invalid at n=%d" % (i, j, n)
            )
    xs = quadratic_sequence(params, n)
    # t_{i,j} = x_{i+1} - x_{i+1-j}; xs is 0-based so that is xs[i] - xs[i-j]
    t1 = xs[i1] - xs[i1 - j1]
    t2 = xs[i2] - xs[i2 - j2]
    if t1 != t2:
        raise RuntimeError(
            "internal-inconsistency: entries differ (%d vs %d) at n=%d" % (t1, t2, n)
        )
    return CollisionWitness(n=n, i1=i1, j1=j1, i2=i2, j2=j2, value=t1)
