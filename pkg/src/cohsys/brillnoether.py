"""Exact piecewise-affine upper bounds for the Brill-Noether function.

A :class:`PiecewiseBound` is a list of affine pieces on disjoint intervals
plus isolated point overrides, covering the whole real line.  All values
are :class:`~fractions.Fraction`; an unbounded end of an interval is
``None``.

Open convention: the refined genus-4 bound is only stated on ``[0, 3]``.
The pieces on ``(3, 6]`` come from the duality reflection
``p(x) -> p(6 - x) + x - 3``.  The closed/open endpoint tags at ``x = 2``
and ``x = 5/2`` follow the interval notation of the source table literally,
so ``evaluate(2) = 4/3`` (the larger, closed value) and the reflected
``evaluate(4) = 7/3``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .klattice import _check_genus
from .rational import RationalLike, as_fraction, fmt

F = Fraction


@dataclass(frozen=True)
class Piece:
    """``slope * x + intercept`` on an interval; ``None`` endpoints are infinite."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_closed: bool
    hi_closed: bool
    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        if self.lo is None and self.lo_closed or self.hi is None and self.hi_closed:
            raise ValueError("an infinite endpoint cannot be closed")
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
                raise ValueError(f"empty interval {self.interval_str()}")

    def __call__(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def contains(self, x: Fraction) -> bool:
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def interval_str(self) -> str:
        left = "(-inf" if self.lo is None else ("[" if self.lo_closed else "(") + fmt(self.lo)
        right = "inf)" if self.hi is None else fmt(self.hi) + ("]" if self.hi_closed else ")")
        return f"{left}, {right}"

    def to_json(self) -> dict:
        return {
            "interval": self.interval_str(),
            "slope": fmt(self.slope),
            "intercept": fmt(self.intercept),
        }


def piece(lo, hi, lo_closed, hi_closed, slope, intercept) -> Piece:
    return Piece(
        None if lo is None else as_fraction(lo),
        None if hi is None else as_fraction(hi),
        lo_closed,
        hi_closed,
        as_fraction(slope),
        as_fraction(intercept),
    )


@dataclass(frozen=True)
class PiecewiseBound:
    pieces: tuple[Piece, ...]
    overrides: Mapping[Fraction, Fraction] = field(default_factory=dict)
    name: str = "bound"

    def __post_init__(self):
        pieces = tuple(sorted(self.pieces, key=_sort_key))
        overrides = {as_fraction(k): as_fraction(v) for k, v in dict(self.overrides).items()}
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "overrides", overrides)
        _check_cover(pieces, overrides)
        bad = [x for x in self.breakpoints() if not self._usc_at(x)]
        if bad:
            raise ValueError(f"bound is not upper-semicontinuous at {[fmt(x) for x in bad]}")

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def piece_at(self, x: Fraction) -> Optional[Piece]:
        if x in self.overrides:
            return None
        for p in self.pieces:
            if p.contains(x):
                return p
        raise AssertionError(f"no piece covers {x}")  # excluded by _check_cover

    def breakpoints(self) -> list[Fraction]:
        pts = set(self.overrides)
        for p in self.pieces:
            pts.update(e for e in (p.lo, p.hi) if e is not None)
        return sorted(pts)

    def one_sided_limits(self, x: Fraction) -> tuple[Fraction, Fraction]:
        """(left limit, right limit) at ``x``."""
        left = right = None
        for p in self.pieces:
            if p.hi is not None and p.hi == x and (p.lo is None or p.lo < x):
                left = p(x)
            if p.lo is not None and p.lo == x and (p.hi is None or p.hi > x):
                right = p(x)
            if p.contains(x) and (p.lo is None or p.lo < x) and (p.hi is None or p.hi > x):
                left = right = p(x)
        return left, right

    def _usc_at(self, x: Fraction) -> bool:
        value = evaluate(self, x)
        return all(lim is None or value >= lim for lim in self.one_sided_limits(x))

    def is_upper_semicontinuous(self) -> bool:
        return all(self._usc_at(x) for x in self.breakpoints())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pieces": [p.to_json() for p in self.pieces],
            "overrides": {fmt(k): fmt(v) for k, v in sorted(self.overrides.items())},
        }


def _sort_key(p: Piece):
    # the (-inf, ...) piece first; a closed start sorts before an open one
    return (p.lo is not None, p.lo or 0, not p.lo_closed)


def _check_cover(pieces: tuple[Piece, ...], overrides: Mapping[Fraction, Fraction]) -> None:
    if not pieces:
        raise ValueError("a bound needs at least one piece")
    if pieces[0].lo is not None:
        raise ValueError("first piece must start at -inf")
    if pieces[-1].hi is not None:
        raise ValueError("last piece must extend to +inf")
    for left, right in zip(pieces, pieces[1:]):
        if left.hi is None or right.lo is None or left.hi != right.lo:
            raise ValueError(
                f"pieces {left.interval_str()} and {right.interval_str()} are not adjacent"
            )
        x = left.hi
        covered = int(left.hi_closed) + int(right.lo_closed) + int(x in overrides)
        if covered != 1:
            what = "gap" if covered == 0 else "overlap"
            raise ValueError(f"{what} at x = {fmt(x)}")
    for x in overrides:
        if any(p.contains(x) for p in pieces):
            raise ValueError(f"override at {fmt(x)} lies inside a piece")


def evaluate(bound: PiecewiseBound, x: RationalLike) -> Fraction:
    x = as_fraction(x)
    if x in bound.overrides:
        return bound.overrides[x]
    return bound.piece_at(x)(x)


def general_bound(g: int) -> PiecewiseBound:
    """Vanishing below 0, Clifford on [0, 2g-2], Riemann-Roch above."""
    _check_genus(g)
    top = 2 * g - 2
    return PiecewiseBound(
        (
            piece(None, 0, False, False, 0, 0),
            piece(0, top, True, True, F(1, 2), 1),
            piece(top, None, False, False, 1, 1 - g),
        ),
        name=f"general(g={g})",
    )


def reflect(p: Piece, centre: Fraction, shift: Fraction) -> Piece:
    """Duality image of ``p``: ``x -> p(2c - x) + x - shift`` on ``2c - I``.

    For genus 4, ``centre = 3`` (so ``2c = 2g - 2 = 6``) and ``shift = 3 = g - 1``.
    """
    two_c = 2 * centre
    lo = None if p.hi is None else two_c - p.hi
    hi = None if p.lo is None else two_c - p.lo
    # p(2c - x) + x - shift = (1 - a) x + (a * 2c + c0 - shift)
    return Piece(lo, hi, p.hi_closed, p.lo_closed, 1 - p.slope, p.slope * two_c + p.intercept - shift)


def genus4_bound() -> PiecewiseBound:
    """Refined bound for a general genus-4 curve, extended to all of R."""
    left = [
        piece(0, 2, False, False, F(1, 4), F(3, 4)),
        piece(2, F(5, 2), True, False, F(1, 3), F(2, 3)),
        piece(F(5, 2), 3, True, False, F(1, 2), F(1, 4)),
    ]
    right = [reflect(p, F(3), F(3)) for p in left]
    overrides = {F(0): F(1), F(3): F(2), F(6): F(1) + 3}
    return PiecewiseBound(
        (
            piece(None, 0, False, False, 0, 0),
            *left,
            *right,
            piece(6, None, False, False, 1, -3),
        ),
        overrides,
        name="genus4",
    )


# -- comparison against a dominating parabola --------------------------------


@dataclass(frozen=True)
class PieceGap:
    """Infimum of ``parabola - bound`` over one piece (or override point)."""

    where: str
    infimum: Fraction
    at: Fraction
    attained: bool

    def to_json(self) -> dict:
        return {
            "where": self.where,
            "infimum": fmt(self.infimum),
            "at": fmt(self.at),
            "attained": self.attained,
        }


@dataclass(frozen=True)
class Dominance:
    holds: bool
    witness: Optional[Fraction]
    gaps: tuple[PieceGap, ...]

    def __bool__(self) -> bool:
        return self.holds

    @property
    def min_gap(self) -> Fraction:
        return min(g.infimum for g in self.gaps)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": fmt(self.witness),
            "min_gap": fmt(self.min_gap),
            "gaps": [g.to_json() for g in self.gaps],
        }


def parabola(s, b0, k):
    s, b0, k = as_fraction(s), as_fraction(b0), as_fraction(k)
    return lambda x: s * (x - b0) ** 2 + k


def _split(p: Piece, cuts: list[Fraction]) -> list[Piece]:
    """Remove the points ``cuts`` from the interval of ``p``."""
    out = [p]
    for e in cuts:
        nxt = []
        for q in out:
            if not q.contains(e):
                nxt.append(q)
            elif q.lo == q.hi:
                continue
            elif q.lo == e:
                nxt.append(replace(q, lo_closed=False))
            elif q.hi == e:
                nxt.append(replace(q, hi_closed=False))
            else:
                nxt.append(replace(q, hi=e, hi_closed=False))
                nxt.append(replace(q, lo=e, lo_closed=False))
        out = nxt
    return out


def _interior_point(p: Piece, e: Fraction, gap) -> Fraction:
    """A point of ``p`` near its open endpoint ``e`` where ``gap`` is negative."""
    toward = 1 if p.lo == e else -1
    other = p.hi if toward == 1 else p.lo
    h = F(1) if other is None else abs(other - e) / 2
    while True:
        x = e + toward * h
        if p.contains(x) and gap(x) < 0:
            return x
        h /= 2


def _piece_gap(p: Piece, s: Fraction, b0: Fraction, k: Fraction):
    """Infimum of ``s(x-b0)^2 + k - p(x)`` over the piece interval."""
    a, c = p.slope, p.intercept

    def gap(x):
        return s * (x - b0) ** 2 + k - (a * x + c)

    vertex = b0 + a / (2 * s)
    if (p.lo is None or vertex >= p.lo) and (p.hi is None or vertex <= p.hi):
        at = vertex
    elif p.lo is not None and vertex < p.lo:
        at = p.lo
    else:
        at = p.hi
    return gap, at, gap(at), p.contains(at)


def quadratic_dominates(
    bound: PiecewiseBound,
    s: RationalLike,
    b0: RationalLike,
    k: RationalLike,
    excluded: Iterable[RationalLike] = (),
) -> Dominance:
    """Decide exactly whether ``s(x-b0)^2 + k > bound(x)`` for all real x off ``excluded``.

    The difference is a convex quadratic on every piece, so its infimum sits
    at the vertex or at an endpoint.  When the infimum lies at an open
    endpoint, a value of zero there is still a strict pass inside.
    """
    s, b0, k = as_fraction(s), as_fraction(b0), as_fraction(k)
    if s <= 0:
        raise ValueError("s must be positive")
    cuts = sorted({as_fraction(e) for e in excluded})
    q = parabola(s, b0, k)
    gaps: list[PieceGap] = []
    witness = None

    for x, value in sorted(bound.overrides.items()):
        if x in cuts:
            continue
        g = q(x) - value
        gaps.append(PieceGap(f"x={fmt(x)}", g, x, True))
        if g <= 0 and witness is None:
            witness = x

    for original in bound.pieces:
        for p in _split(original, cuts):
            gap, at, inf, attained = _piece_gap(p, s, b0, k)
            gaps.append(PieceGap(p.interval_str(), inf, at, attained))
            if witness is not None:
                continue
            if attained and inf <= 0:
                witness = at
            elif not attained and inf < 0:
                witness = _interior_point(p, at, gap)

    gaps.sort(key=lambda g: g.at)
    return Dominance(witness is None, witness, tuple(gaps))


# -- plot data ----------------------------------------------------------------


def emit_plot_data(bound, x_min, x_max, step, overlay=None) -> list[tuple]:
    """Exact sample rows ``(x, bound(x), overlay(x) or None)``.

    Override points inside the range are always included.
    """
    x_min, x_max, step = as_fraction(x_min), as_fraction(x_max), as_fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    if x_min > x_max:
        raise ValueError("empty range: x_min > x_max")
    curve = parabola(*overlay) if overlay is not None else None
    xs = set()
    x = x_min
    while x <= x_max:
        xs.add(x)
        x += step
    xs.update(p for p in bound.overrides if x_min <= p <= x_max)
    return [(x, evaluate(bound, x), curve(x) if curve else None) for x in sorted(xs)]


def plot_csv(rows, with_float: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["x", "bound", "overlay"]
    if with_float:
        header += ["x_approx_lossy", "bound_approx_lossy", "overlay_approx_lossy"]
    writer.writerow(header)
    for row in rows:
        out = [fmt(v) if v is not None else "" for v in row]
        if with_float:
            out += ["" if v is None else repr(float(v)) for v in row]
        writer.writerow(out)
    return buf.getvalue()


def plot_json(rows, with_float: bool = False) -> str:
    records = []
    for x, y, o in rows:
        rec = {"x": fmt(x), "bound": fmt(y), "overlay": fmt(o)}
        if with_float:
            rec["approx_lossy"] = {
                "x": float(x),
                "bound": float(y),
                "overlay": None if o is None else float(o),
            }
        records.append(rec)
    return json.dumps(records, indent=2)
