"""Numerical K-theory of coherent systems on a curve.

Classes are integer triples ``(r, d, n)``: rank and degree of the sheaf,
dimension of the vector space.  The Euler pairing factors through them via
a genus-dependent 3x3 matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

# Class of the Brill-Noether exceptional object of a trigonal line bundle
# on a genus-4 curve; generates the kernel of the degeneration.
KERNEL_GENERATOR = (1, 3, 2)


@dataclass(frozen=True, order=True)
class ClassVector:
    r: int
    d: int
    n: int

    def __post_init__(self):
        for name in ("r", "d", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")

    @classmethod
    def of(cls, v: "ClassVector | Sequence[int]") -> "ClassVector":
        if isinstance(v, ClassVector):
            return v
        if len(v) != 3:
            raise ValueError(f"class vector needs three entries, got {len(v)}")
        return cls(*v)

    def __add__(self, other: "ClassVector") -> "ClassVector":
        return ClassVector(self.r + other.r, self.d + other.d, self.n + other.n)

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        return ClassVector(self.r - other.r, self.d - other.d, self.n - other.n)

    def __neg__(self) -> "ClassVector":
        return ClassVector(-self.r, -self.d, -self.n)

    def scale(self, k: int) -> "ClassVector":
        return ClassVector(k * self.r, k * self.d, k * self.n)

    def __iter__(self):
        return iter((self.r, self.d, self.n))

    def is_zero(self) -> bool:
        return self.r == 0 and self.d == 0 and self.n == 0

    def primitive(self) -> "ClassVector":
        """Divide out the gcd of the entries (sign kept)."""
        g = gcd(gcd(self.r, self.d), self.n)
        if g == 0:
            return self
        return ClassVector(self.r // g, self.d // g, self.n // g)

    def to_json(self) -> list[int]:
        return [self.r, self.d, self.n]

    def __str__(self) -> str:
        return f"({self.r},{self.d},{self.n})"


@dataclass(frozen=True, order=True)
class QuotientClass:
    """Element ``(a, c)`` of Z^3 / Z(1,3,2), in the section a = d - 3r, c = n - 2r."""

    a: int
    c: int

    def __add__(self, other: "QuotientClass") -> "QuotientClass":
        return QuotientClass(self.a + other.a, self.c + other.c)

    def to_json(self) -> list[int]:
        return [self.a, self.c]


def _check_genus(g: int) -> None:
    if isinstance(g, bool) or not isinstance(g, int):
        raise TypeError(f"genus must be an integer, got {g!r}")
    if g < 1:
        raise ValueError(f"genus must be at least 1, got {g}")


def euler_matrix(g: int) -> tuple[tuple[int, int, int], ...]:
    _check_genus(g)
    return (
        (1 - g, 1, 0),
        (-1, 0, 0),
        (g - 1, -1, 1),
    )


def euler_pairing(v1, v2, g: int) -> int:
    """chi(v1, v2) = v1 . M . v2^T."""
    a, b = ClassVector.of(v1), ClassVector.of(v2)
    m = euler_matrix(g)
    x, y = tuple(a), tuple(b)
    return sum(x[i] * m[i][j] * y[j] for i in range(3) for j in range(3))


def project_mod_kernel(v) -> QuotientClass:
    v = ClassVector.of(v)
    return QuotientClass(v.d - 3 * v.r, v.n - 2 * v.r)


def in_kernel(v) -> bool:
    """True iff ``v`` is an integer multiple of (1,3,2)."""
    v = ClassVector.of(v)
    return v.d == 3 * v.r and v.n == 2 * v.r


def parse_class(text: str) -> ClassVector:
    """Parse ``"r,d,n"``; negative entries need no escaping."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(parts):
        raise ValueError(f"expected three comma-separated integers, got {text!r}")
    try:
        return ClassVector(*(int(p) for p in parts))
    except ValueError as exc:
        raise ValueError(f"non-integer entry in class vector {text!r}") from exc


def vectors(vs: Iterable) -> list[ClassVector]:
    return [ClassVector.of(v) for v in vs]
