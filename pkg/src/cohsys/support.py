"""The support quadratic form ``Q(r,d,n) = s(d - b0 r)^2 + r^2 (w0 - t) - n r``.

The genus-4 degeneration uses ``(b0, w0, s, t) = (3, 2, 1, 1/10)``, i.e.
``Q = (d - 3r)^2 + (19/10) r^2 - n r``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .brillnoether import Dominance, PiecewiseBound, evaluate, quadratic_dominates
from .charge import ChargeParams
from .klattice import ClassVector
from .rational import RationalLike, as_fraction, fmt

F = Fraction


class PreconditionError(ValueError):
    """Inputs outside an operation's regime (distinct from a negative verdict)."""


@dataclass(frozen=True)
class QuadFormParams:
    b0: Fraction
    w0: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("b0", "w0", "s", "t"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.s <= 0 or self.t <= 0:
            raise ValueError("s and t must be positive")

    @classmethod
    def certified(cls, b0, w0, s, t, bound: PiecewiseBound) -> "QuadFormParams":
        """Construct and require ``s(x-b0)^2 + w0 - t > bound(x)`` for ``x != b0``."""
        q = cls(b0, w0, s, t)
        cert = q.certificate(bound)
        if not cert.holds:
            raise ValueError(
                f"parabola does not dominate {bound.name}: violated at x = {fmt(cert.witness)}"
            )
        return q

    def certificate(self, bound: PiecewiseBound) -> Dominance:
        return quadratic_dominates(bound, self.s, self.b0, self.w0 - self.t, {self.b0})

    def to_json(self) -> dict:
        return {k: fmt(getattr(self, k)) for k in ("b0", "w0", "s", "t")}


GENUS4_PARAMS = QuadFormParams(F(3), F(2), F(1), F(1, 10))


def qform(v, q: QuadFormParams) -> Fraction:
    v = ClassVector.of(v)
    return q.s * (v.d - q.b0 * v.r) ** 2 + v.r**2 * (q.w0 - q.t) - v.n * v.r


def genus4_qform(v) -> Fraction:
    return qform(v, GENUS4_PARAMS)


def in_base_kernel(v, q: QuadFormParams) -> bool:
    """Nonzero ``v`` with ``Z_{b0,w0}(v) = 0``, where ``Q`` is negative by design."""
    v = ClassVector.of(v)
    return not v.is_zero() and v.d == q.b0 * v.r and v.n == q.w0 * v.r


def kernel_negative(q: QuadFormParams, p) -> bool:
    """Is ``Q`` negative on ``ker Z_{b,w}`` (spanned by (1, b, w))?"""
    p = ChargeParams.of(p)
    if p.b != q.b0:
        raise PreconditionError(f"need b = b0 = {fmt(q.b0)}, got b = {fmt(p.b)}")
    if p.w < q.w0:
        raise PreconditionError(f"need w >= w0 = {fmt(q.w0)}, got w = {fmt(p.w)}")
    value = q.s * (p.b - q.b0) ** 2 + (q.w0 - q.t) - p.w
    return value < 0


def t_grid(w0: Fraction) -> list[Fraction]:
    w0 = as_fraction(w0)
    out = [w0 / 2**k for k in range(1, 13)]
    out += [F(j, 10) for j in range(1, int(10 * w0) + 1)]
    seen, grid = set(), []
    for t in out:
        if t > 0 and t not in seen:
            seen.add(t)
            grid.append(t)
    return grid


S_GRID = (F(1), F(2), F(4), F(1, 2), F(1, 4))


@dataclass(frozen=True)
class ParamSearch:
    params: Optional[QuadFormParams]
    certificate: Optional[Dominance]
    tried: int

    def to_json(self) -> dict:
        return {
            "params": None if self.params is None else self.params.to_json(),
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "tried": self.tried,
        }


def search_params(b0, w0, bound: PiecewiseBound, require_strong: bool = False) -> ParamSearch:
    b0, w0 = as_fraction(b0), as_fraction(w0)
    floor = evaluate(bound, b0)
    tried = 0
    for s in S_GRID:
        for t in t_grid(w0):
            tried += 1
            if require_strong and not w0 - t > floor:
                continue
            cert = quadratic_dominates(bound, s, b0, w0 - t, {b0})
            if cert.holds:
                return ParamSearch(QuadFormParams(b0, w0, s, t), cert, tried)
    return ParamSearch(None, None, tried)


def find_params(b0, w0, bound: PiecewiseBound, require_strong: bool = False):
    """First grid pair ``(s, t)`` whose parabola dominates ``bound`` off ``b0``.

    The ``s`` grid is {1, 2, 4, 1/2, 1/4}; for each ``s`` the ``t`` grid is
    ``w0 / 2^k`` (k = 1..12) followed by ``j/10`` (j = 1..10 w0).  With
    ``require_strong`` the pair must also satisfy ``w0 - t > bound(b0)``.
    Returns ``None`` when the grid is exhausted.
    """
    return search_params(b0, w0, bound, require_strong).params


class Phase1Verdict(enum.Enum):
    SUPPORTED = "supported"
    KERNEL_CLASS = "kernel_class"
    VIOLATES = "violates"


@dataclass(frozen=True)
class Phase1Check:
    verdict: Phase1Verdict
    q: Fraction
    certified: bool

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "Q": fmt(self.q), "bn_certified": self.certified}


def phase1_support_check(r: int, n: int) -> Phase1Check:
    """Support inequality for the slope-3 class ``(r, 3r, n)`` at (3, 2).

    ``certified`` records whether the Brill-Noether input constraint covers
    the class: ``n <= 2`` with nonzero charge for rank one, ``n / r <= 3/2``
    for rank at least two.  The engine takes that constraint as given.
    """
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    value = genus4_qform((r, 3 * r, n))
    if n == 2 * r:
        return Phase1Check(Phase1Verdict.KERNEL_CLASS, value, False)
    certified = n <= 2 if r == 1 else F(n, r) <= F(3, 2)
    verdict = Phase1Verdict.SUPPORTED if value >= 0 else Phase1Verdict.VIOLATES
    return Phase1Check(verdict, value, certified and verdict is Phase1Verdict.SUPPORTED)


def parse_quad(b0: RationalLike, w0: RationalLike, s: RationalLike, t: RationalLike) -> QuadFormParams:
    return QuadFormParams(as_fraction(b0), as_fraction(w0), as_fraction(s), as_fraction(t))
