"""Central charges Z_{b,w}, exact slope classification and comparison.

Slopes are never computed as angles.  A class with positive imaginary part
has finite slope ``-Re/Im``; classes on the real axis are either phase one
(``Re < 0``), kernel classes (``Z = 0``, possible only at weak parameters
such as (3, 2)) or impossible in the tilted heart.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .brillnoether import PiecewiseBound, evaluate
from .klattice import ClassVector
from .rational import RationalLike, as_fraction, fmt


@dataclass(frozen=True)
class ChargeParams:
    b: Fraction
    w: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "w", as_fraction(self.w))

    @classmethod
    def of(cls, p) -> "ChargeParams":
        return p if isinstance(p, ChargeParams) else cls(*p)


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im: Fraction

    def to_json(self) -> dict:
        return {"re": fmt(self.re), "im": fmt(self.im)}


def central_charge(v, p) -> ChargeValue:
    v, p = ClassVector.of(v), ChargeParams.of(p)
    return ChargeValue(-v.n + p.w * v.r, v.d - p.b * v.r)


class SlopeKind(enum.Enum):
    FINITE = "finite"
    INF = "inf"
    KERNEL = "kernel"
    INVALID = "invalid"


@dataclass(frozen=True)
class Slope:
    kind: SlopeKind
    value: Optional[Fraction] = None

    @property
    def comparable(self) -> bool:
        return self.kind in (SlopeKind.FINITE, SlopeKind.INF)

    def tag(self) -> str:
        if self.kind is SlopeKind.FINITE:
            return f"finite:{fmt(self.value)}"
        return self.kind.value

    def __str__(self) -> str:
        return self.tag()


def classify(z: ChargeValue) -> Slope:
    if z.im > 0:
        return Slope(SlopeKind.FINITE, -z.re / z.im)
    if z.im == 0 and z.re < 0:
        return Slope(SlopeKind.INF)
    if z.im == 0 and z.re == 0:
        return Slope(SlopeKind.KERNEL)
    return Slope(SlopeKind.INVALID)


def heart_slope(v, p) -> Slope:
    return classify(central_charge(v, p))


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def _cmp(a, b) -> Ordering:
    return Ordering.LESS if a < b else Ordering.GREATER if a > b else Ordering.EQUAL


def compare_slopes(v1, v2, p) -> Ordering:
    """Order ``v1`` against ``v2`` by slope at ``p``; +inf is maximal."""
    z1, z2 = central_charge(v1, p), central_charge(v2, p)
    s1, s2 = classify(z1), classify(z2)
    if not (s1.comparable and s2.comparable):
        return Ordering.INCOMPARABLE
    inf1, inf2 = s1.kind is SlopeKind.INF, s2.kind is SlopeKind.INF
    if inf1 or inf2:
        return _cmp(int(inf1), int(inf2))
    # -re1/im1 vs -re2/im2 with im1, im2 > 0
    return _cmp(-z1.re * z2.im, -z2.re * z1.im)


def mu_slope(r: int, d: int) -> Optional[Fraction]:
    """Classical slope deg/rk on coherent systems; ``None`` stands for +inf."""
    if r < 0:
        raise ValueError(f"rank must be nonnegative in the abelian category, got {r}")
    if r == 0:
        return None
    return Fraction(d, r)


def is_admissible(p, bound: PiecewiseBound) -> bool:
    """Sufficient test for ``w > Phi(b)`` using an upper bound of Phi."""
    p = ChargeParams.of(p)
    return p.w > evaluate(bound, p.b)


def parse_params(b: RationalLike, w: RationalLike) -> ChargeParams:
    return ChargeParams(as_fraction(b), as_fraction(w))
