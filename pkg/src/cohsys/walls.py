"""Numerical walls along the vertical ray ``b = const`` of the (b, w) plane.

At fixed ``b`` the imaginary part ``d - b r`` of a class does not depend on
``w`` and slope equality is linear in ``w``, so every numerical wall is a
single rational ``w``.  Everything reported here is a *numerical* wall or
candidate: whether objects realize it is not decided.

Candidate destabilizers ``v'`` of ``v`` obey the support-form constraints
``Q(v') >= 0`` and ``Q(v - v') >= 0``, except that a class in the kernel of
the base charge ``Z_{b0,w0}`` is exempt (``Q`` is negative there by
construction, and such classes are exactly the ones the weak point admits).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .charge import ChargeParams, Slope, SlopeKind, heart_slope, mu_slope
from .klattice import ClassVector
from .rational import as_fraction, fmt
from .support import PreconditionError, QuadFormParams, in_base_kernel, qform

F = Fraction


@dataclass(frozen=True)
class SearchBounds:
    """Caps for the candidate search and the scanned range ``(w_min, w_max]``.

    Walls exactly at ``w_min`` are still reported, flagged as boundary walls.
    """

    r_max: int = 3
    n_window: int = 3
    w_min: Fraction = F(2)
    w_max: Fraction = F(10)

    def __post_init__(self):
        object.__setattr__(self, "w_min", as_fraction(self.w_min))
        object.__setattr__(self, "w_max", as_fraction(self.w_max))
        if self.r_max < 0 or self.n_window < 0:
            raise ValueError("caps must be nonnegative")
        if not self.w_min < self.w_max:
            raise ValueError("need w_min < w_max")

    def contains(self, w: Fraction) -> bool:
        return self.w_min <= w <= self.w_max

    def to_json(self) -> dict:
        return {
            "r_max": self.r_max,
            "n_window": self.n_window,
            "w_min": fmt(self.w_min),
            "w_max": fmt(self.w_max),
        }


class WallKind(enum.Enum):
    FINITE_WALL = "finite_wall"
    PHASE1_FAMILY = "phase1_family"
    KERNEL_BOUNDARY = "kernel_boundary"


@dataclass(frozen=True)
class WallReport:
    destabilizer: ClassVector
    wall_w: Optional[Fraction]
    kind: WallKind
    # finite_wall: the wall sits on an end of the scanned range
    boundary: bool = False
    # phase1_family: which of sub / quotient lies on the negative real axis
    side: Optional[str] = None
    # kernel_boundary: where the sub's charge vanishes
    vanishes_at: Optional[Fraction] = None

    def __post_init__(self):
        if (self.kind is WallKind.FINITE_WALL) != (self.wall_w is not None):
            raise ValueError("only finite walls carry a wall value")

    def to_json(self) -> dict:
        out = {
            "w": fmt(self.wall_w),
            "destabilizer": self.destabilizer.to_json(),
            "kind": self.kind.value,
        }
        if self.kind is WallKind.FINITE_WALL:
            out["boundary"] = self.boundary
        if self.side is not None:
            out["side"] = self.side
        if self.vanishes_at is not None:
            out["vanishes_at"] = fmt(self.vanishes_at)
        return out


def _im(v: ClassVector, b: Fraction) -> Fraction:
    return v.d - b * v.r


def _n_limits(v: ClassVector, rp: int, dp: int, q: QuadFormParams) -> list[Fraction]:
    """Finite ends of the n'-interval cut out by Q(v') >= 0 and Q(v - v') >= 0."""
    ends = []
    base = q.s * (dp - q.b0 * rp) ** 2 + rp**2 * (q.w0 - q.t)
    if rp != 0:
        ends.append(base / rp)
    ru, du = v.r - rp, v.d - dp
    base_u = q.s * (du - q.b0 * ru) ** 2 + ru**2 * (q.w0 - q.t)
    if ru != 0:
        ends.append(v.n - base_u / ru)
    # exempt kernel classes may sit outside the interval
    if dp == q.b0 * rp:
        ends.append(q.w0 * rp)
    if du == q.b0 * ru:
        ends.append(v.n - q.w0 * ru)
    return ends


def n_cap(v: ClassVector, rp: int, dp: int, q: QuadFormParams, n_window: int) -> int:
    ends = _n_limits(v, rp, dp, q)
    n_bound = max((math.ceil(abs(e)) for e in ends), default=0)
    return n_bound + n_window


def supported(c: ClassVector, q: QuadFormParams) -> bool:
    return qform(c, q) >= 0 or in_base_kernel(c, q)


def _check_positive(v: ClassVector, b: Fraction) -> Fraction:
    im = _im(v, b)
    if im <= 0:
        raise PreconditionError(
            f"class {v} has nonpositive imaginary part {fmt(im)} at b = {fmt(b)}"
        )
    return im


def _rank_slice(v, b, q, sb, im_v, rp) -> Iterator[ClassVector]:
    lo_d = math.ceil(b * rp)
    hi_d = math.floor(b * rp + im_v)
    for dp in range(lo_d, hi_d + 1):
        cap = n_cap(v, rp, dp, q, sb.n_window)
        for np_ in range(-cap, cap + 1):
            c = ClassVector(rp, dp, np_)
            if c.is_zero() or c == v:
                continue
            if supported(c, q) and supported(v - c, q):
                yield c


def enumerate_candidates(v, b, q: QuadFormParams, sb: SearchBounds) -> list[ClassVector]:
    """All ``v'`` with ``|r'| <= r_max``, ``0 <= Im v' <= Im v`` and both forms nonnegative.

    ``n'`` runs over ``|n'| <= n_bound + n_window`` where ``n_bound`` is the
    largest finite end of the feasible ``n'`` range (rank-0 slices have none,
    so the window alone caps them).  Output is lexicographic in (r', d', n').
    """
    v, b = ClassVector.of(v), as_fraction(b)
    im_v = _check_positive(v, b)
    out: list[ClassVector] = []
    for rp in range(-sb.r_max, sb.r_max + 1):
        out.extend(_rank_slice(v, b, q, sb, im_v, rp))
    return out


def _proportional(v: ClassVector, u: ClassVector) -> bool:
    a, c = tuple(v), tuple(u)
    return all(a[i] * c[j] == a[j] * c[i] for i in range(3) for j in range(3))


def wall_locus(v, v2, b) -> Optional[Fraction]:
    """The ``w`` where ``v`` and ``v2`` have equal slope at fixed ``b``, if any."""
    v, v2, b = ClassVector.of(v), ClassVector.of(v2), as_fraction(b)
    im1, im2 = _im(v, b), _im(v2, b)
    if im1 <= 0 and im2 <= 0 or im1 < 0 or im2 < 0:
        raise PreconditionError("need one class with positive and one with nonnegative Im")
    if _proportional(v, v2):
        raise PreconditionError(f"classes {v} and {v2} are proportional")
    # (-n2 + w r2) im1 = (-n1 + w r1) im2
    coef = v2.r * im1 - v.r * im2
    const = v2.n * im1 - v.n * im2
    if coef == 0:
        return None
    return const / coef


def _real_axis_sign(c: ClassVector, sb: SearchBounds):
    """Sign of ``Re Z = -n + w r`` over the half-open range ``(w_min, w_max]``.

    Returns ``("neg", None)``, ``("pos", None)`` or ``("zero", w)`` with the
    root inside the range.
    """
    at_min = -c.n + sb.w_min * c.r
    at_max = -c.n + sb.w_max * c.r
    if at_min == 0:
        # Re Z = r (w - w_min) just above w_min
        return ("neg", None) if c.r < 0 else ("pos", None)
    if at_min < 0 and at_max < 0:
        return "neg", None
    if at_min > 0 and at_max > 0:
        return "pos", None
    return "zero", F(c.n, c.r)


@dataclass
class Gap:
    """Finite-candidate analog of the slope gap at the bottom of the range."""

    at_w: Fraction
    slope: Optional[Fraction]
    gap: Optional[Fraction] = None
    delta0: Optional[Fraction] = None

    def to_json(self) -> dict:
        return {
            "at_w": fmt(self.at_w),
            "slope": fmt(self.slope),
            "min_gap": fmt(self.gap),
            "delta0": fmt(self.delta0),
            "note": "restricted to enumerated candidates; not the full discreteness argument",
        }


@dataclass
class ScanResult:
    v: ClassVector
    b: Fraction
    q: QuadFormParams
    sb: SearchBounds
    walls: list[WallReport] = field(default_factory=list)
    phase1_families: list[WallReport] = field(default_factory=list)
    kernel_boundaries: list[WallReport] = field(default_factory=list)
    gap: Optional[Gap] = None

    @property
    def reports(self) -> list[WallReport]:
        return self.walls + self.kernel_boundaries + self.phase1_families

    def interior_walls(self) -> list[WallReport]:
        return [r for r in self.walls if self.sb.w_min < r.wall_w < self.sb.w_max]

    def to_json(self) -> dict:
        return {
            "class": self.v.to_json(),
            "b": fmt(self.b),
            "walls": [r.to_json() for r in self.walls],
            "kernel_boundaries": [r.to_json() for r in self.kernel_boundaries],
            "phase1_families": [r.to_json() for r in self.phase1_families],
            "bounds": self.sb.to_json(),
            "qform": self.q.to_json(),
            "gap": None if self.gap is None else self.gap.to_json(),
            "status": "numerical candidates; realizability by objects unverified",
        }


def classify_candidate(v: ClassVector, c: ClassVector, b: Fraction, sb: SearchBounds):
    """WallReport for candidate ``c`` of ``v``, or None if it plays no role in range."""
    u = v - c
    if _im(c, b) == 0:
        sign, root = _real_axis_sign(c, sb)
        if sign == "neg":
            return WallReport(c, None, WallKind.PHASE1_FAMILY, side="sub")
        if sign == "zero":
            return WallReport(c, None, WallKind.KERNEL_BOUNDARY, vanishes_at=root)
        return None
    if _proportional(v, c):
        return None
    w = wall_locus(v, c, b)
    if _im(u, b) == 0:
        sign, _ = _real_axis_sign(u, sb)
        if sign == "pos":
            return None
        if w is not None and sb.contains(w):
            return WallReport(c, w, WallKind.FINITE_WALL, boundary=w in (sb.w_min, sb.w_max))
        if sign == "neg":
            return WallReport(c, None, WallKind.PHASE1_FAMILY, side="quotient")
        return None
    if w is not None and sb.contains(w):
        return WallReport(c, w, WallKind.FINITE_WALL, boundary=w in (sb.w_min, sb.w_max))
    return None


def _slope_key(s: Slope):
    return (1, 0) if s.kind is SlopeKind.INF else (0, s.value)


def chamber_scan(v, b, q: QuadFormParams, sb: SearchBounds) -> ScanResult:
    v, b = ClassVector.of(v), as_fraction(b)
    result = ScanResult(v, b, q, sb)
    seen = set()
    kept: list[ClassVector] = []
    for c in enumerate_candidates(v, b, q, sb):
        rep = classify_candidate(v, c, b, sb)
        if rep is None:
            continue
        kept.append(c)
        key = (rep.kind, rep.wall_w, rep.side, c.primitive())
        if key in seen:
            continue
        seen.add(key)
        {
            WallKind.FINITE_WALL: result.walls,
            WallKind.PHASE1_FAMILY: result.phase1_families,
            WallKind.KERNEL_BOUNDARY: result.kernel_boundaries,
        }[rep.kind].append(rep)
    result.walls.sort(key=lambda r: (r.wall_w, tuple(r.destabilizer)))
    result.kernel_boundaries.sort(key=lambda r: (r.vanishes_at, tuple(r.destabilizer)))
    result.phase1_families.sort(key=lambda r: (r.side, tuple(r.destabilizer)))
    result.gap = _gap(v, b, sb, kept)
    return result


def _gap(v, b, sb, kept) -> Gap:
    p = ChargeParams(b, sb.w_min)
    sv = heart_slope(v, p)
    if sv.kind is not SlopeKind.FINITE:
        return Gap(sb.w_min, None)
    gaps = []
    for c in kept:
        sc = heart_slope(c, p)
        if sc.kind is SlopeKind.FINITE and sc.value < sv.value:
            gaps.append(sv.value - sc.value)
    if not gaps:
        return Gap(sb.w_min, sv.value)
    g = min(gaps)
    return Gap(sb.w_min, sv.value, g, g / (sb.r_max + 1))


# -- candidate Harder-Narasimhan decompositions --------------------------------


def hn_candidates(v, p, q: QuadFormParams, max_parts: int, r_cap: Optional[int] = None, n_window: int = 3):
    """Ordered splittings ``v = v1 + ... + vk`` (2 <= k <= max_parts) with strictly
    decreasing slopes at ``p``, each part nonzero, in the heart numerically
    (finite or infinite slope) and with ``Q(vi) >= 0``.

    Every part has ``0 <= Im vi <= Im v``.  The rank cap defaults to
    ``|r(v)| + max(1, ceil(Im v))`` and ``|n_i| <= |n(v)| + n_window``.
    """
    if max_parts < 2:
        raise ValueError("max_parts must be at least 2")
    v, p = ClassVector.of(v), ChargeParams.of(p)
    if v.is_zero():
        raise ValueError("zero class has no decompositions")
    im_v = _im(v, p.b)
    if im_v < 0:
        return []
    if r_cap is None:
        r_cap = abs(v.r) + max(1, math.ceil(im_v))
    n_cap_ = abs(v.n) + n_window

    def admissible(c: ClassVector):
        if c.is_zero() or abs(c.r) > r_cap or abs(c.n) > n_cap_:
            return None
        im = _im(c, p.b)
        if im < 0 or im > im_v:
            return None
        s = heart_slope(c, p)
        if not s.comparable or qform(c, q) < 0:
            return None
        return _slope_key(s)

    atoms = []
    for r in range(-r_cap, r_cap + 1):
        for d in range(math.ceil(p.b * r), math.floor(p.b * r + im_v) + 1):
            for n in range(-n_cap_, n_cap_ + 1):
                c = ClassVector(r, d, n)
                key = admissible(c)
                if key is not None:
                    atoms.append((key, c))
    atoms.sort(key=lambda kc: (kc[0], tuple(kc[1])), reverse=True)

    out = []

    def extend(prefix, rest, last_key):
        parts_left = max_parts - len(prefix)
        key = admissible(rest)
        if prefix and key is not None and key < last_key:
            out.append((*prefix, rest))
        if parts_left <= 1:
            return
        for k, c in atoms:
            if last_key is not None and not k < last_key:
                continue
            if c == rest:
                continue
            extend((*prefix, c), rest - c, k)

    extend((), v, None)
    out.sort(key=lambda parts: tuple(tuple(c) for c in parts))
    return out


# -- the arithmetic behind the moduli stability statement ---------------------


@dataclass(frozen=True)
class ModuliRow:
    r: int
    solutions: tuple[int, ...]
    quotient_sheaf_slope: Optional[Fraction]

    @property
    def ok(self) -> bool:
        return self.solutions == (3 * self.r + 1,) and self.quotient_sheaf_slope == 3


@dataclass(frozen=True)
class ModuliReport:
    rows: tuple[ModuliRow, ...]

    @property
    def counterexamples(self) -> list[ModuliRow]:
        return [row for row in self.rows if not row.ok]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "r_max": len(self.rows),
            "ok": self.ok,
            "counterexamples": [
                {"r": row.r, "solutions": list(row.solutions)} for row in self.counterexamples
            ],
        }


def _moduli_solutions(r: int) -> tuple[int, ...]:
    def holds(d):
        return F(d + 2, r + 1) <= 3 < F(d, r)

    lo, hi = 3 * r - 3, 3 * r + 4
    # both inequalities are monotone in d, so failing at the window ends
    # in the right direction rules out everything outside it
    assert not (3 < F(lo, r)) and not (F(hi + 2, r + 1) <= 3)
    return tuple(d for d in range(lo, hi + 1) if holds(d))


def verify_moduli_arithmetic(r_max: int) -> ModuliReport:
    """Check that ``(d+2)/(r+1) <= 3 < d/r`` forces ``d = 3r + 1`` for r <= r_max.

    For each solution the quotient's sheaf part ``(r+1, d+2)`` has slope
    exactly 3, i.e. the quotient lies on the real axis at b = 3 (phase one)
    rather than above the wall.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    rows = []
    for r in range(1, r_max + 1):
        sols = _moduli_solutions(r)
        slope = mu_slope(r + 1, sols[0] + 2) if len(sols) == 1 else None
        rows.append(ModuliRow(r, sols, slope))
    return ModuliReport(tuple(rows))
