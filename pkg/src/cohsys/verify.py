"""The genus-4 verification suite run by ``cohsys verify``.

Each check returns a :class:`Check` with the exact values it compared.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import brillnoether as bn
from .charge import ChargeParams, Ordering, central_charge, compare_slopes, heart_slope
from .degeneration import descended_charge, s_equivalent
from .klattice import ClassVector, euler_matrix, euler_pairing, project_mod_kernel
from .rational import fmt
from .support import (
    GENUS4_PARAMS,
    Phase1Verdict,
    genus4_qform,
    kernel_negative,
    phase1_support_check,
    qform,
    search_params,
)
from .walls import SearchBounds, chamber_scan, verify_moduli_arithmetic

F = Fraction


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def euler_check() -> Check:
    m = euler_matrix(4)
    chi = euler_pairing((1, 3, 2), (1, 3, 2), 4)
    ok = m == ((-3, 1, 0), (-1, 0, 0), (3, -1, 1)) and chi == 1
    return Check("euler matrix g=4", ok, f"M={m}, chi((1,3,2),(1,3,2))={chi}")


def genus4_table_check() -> Check:
    b = bn.genus4_bound()
    expected = {
        F(0): F(1),
        F(1): F(1, 4) + F(3, 4),
        F(2): F(2, 3) + F(2, 3),
        F(9, 4): F(9, 4) / 3 + F(2, 3),
        F(5, 2): F(5, 4) + F(1, 4),
        F(11, 4): F(11, 8) + F(1, 4),
        F(3): F(2),
    }
    got = {x: b(x) for x in expected}
    ok = got == expected
    return Check(
        "genus-4 bound table",
        ok,
        ", ".join(f"Phi({fmt(x)})<={fmt(y)}" for x, y in got.items()),
    )


def parabola_check() -> Check:
    b = bn.genus4_bound()
    off = bn.quadratic_dominates(b, 1, 3, F(19, 10), {3})
    on = bn.quadratic_dominates(b, 1, 3, F(19, 10), set())
    ok = off.holds and not on.holds and on.witness == 3
    return Check(
        "parabola (x-3)^2+19/10 dominates off x=3",
        ok,
        f"excluded={{3}}: {off.holds} (min gap {fmt(off.min_gap)}); "
        f"excluded={{}}: {on.holds}, witness x={fmt(on.witness)}",
    )


def kernel_check() -> Check:
    z = central_charge((1, 3, 2), (3, 2))
    q = genus4_qform((1, 3, 2))
    neg = {w: kernel_negative(GENUS4_PARAMS, (3, w)) for w in (2, 3, 10)}
    ok = (z.re, z.im) == (0, 0) and q == F(-1, 10) and all(neg.values())
    return Check(
        "kernel class (1,3,2)",
        ok,
        f"Z_(3,2)={z.re}+{z.im}i, Q={fmt(q)}, negative on ker Z_(3,w) for w=2,3,10: {all(neg.values())}",
    )


def phase1_check() -> Check:
    a = phase1_support_check(1, 1)
    k = phase1_support_check(1, 2)
    bad = [
        (r, n)
        for r in range(1, 51)
        for n in range(0, 3 * r // 2 + 1)
        if n != 2 * r and genus4_qform((r, 3 * r, n)) < 0
    ]
    ok = (
        a.verdict is Phase1Verdict.SUPPORTED
        and a.q == F(9, 10)
        and k.verdict is Phase1Verdict.KERNEL_CLASS
        and not bad
    )
    return Check(
        "slope-3 phase-1 support",
        ok,
        f"(1,1)->{a.verdict.value} Q={fmt(a.q)}; (1,2)->{k.verdict.value}; "
        f"violations for r<=50, n<=3r/2: {len(bad)}",
    )


def scan_check(r_max: int = 3, n_window: int = 3, w_min=F(2), w_max=F(10)) -> Check:
    sb = SearchBounds(r_max, n_window, w_min, w_max)
    res = chamber_scan((-1, -2, -1), 3, GENUS4_PARAMS, sb)
    interior = res.interior_walls()
    boundary = [r for r in res.walls if r.wall_w == w_min and r.destabilizer == ClassVector(0, 1, 1)]
    family = [
        r for r in res.phase1_families
        if r.side == "quotient" and r.destabilizer.d == 3 * r.destabilizer.r + 1
    ]
    ok = not interior and bool(boundary) and bool(family)
    return Check(
        "chamber scan of (-1,-2,-1) at b=3",
        ok,
        f"interior walls in ({fmt(w_min)},{fmt(w_max)}]: {len(interior)}; "
        f"boundary wall w={fmt(w_min)} vs (0,1,1): {bool(boundary)}; "
        f"(r,3r+1,n) phase-1 candidates: {len(family)}",
    )


def moduli_check(r_max: int = 1000) -> Check:
    rep = verify_moduli_arithmetic(r_max)
    return Check(
        "moduli arithmetic (d+2)/(r+1)<=3<d/r",
        rep.ok,
        f"r<= {r_max}: counterexamples {len(rep.counterexamples)}",
    )


def degeneration_check(box: int = 12) -> Check:
    rng = range(-box, box + 1)
    mismatches = 0
    for r, d, n in itertools.product(rng, rng, rng):
        z = central_charge((r, d, n), (3, 2))
        zb = descended_charge(project_mod_kernel((r, d, n)))
        mismatches += (z.re, z.im) != (zb.re, zb.im)
    p1, p2 = project_mod_kernel((-1, -2, -1)), project_mod_kernel((0, 1, 1))
    eq = s_equivalent((-1, -2, -1), (0, 1, 1))
    ok = mismatches == 0 and eq and p1 == p2 and p1.to_json() == [1, 1]
    return Check(
        "degeneration round-trip",
        ok,
        f"mismatches over |entries|<={box}: {mismatches}; (-1,-2,-1)~(0,1,1): {eq}, "
        f"projection {p1.to_json()}",
    )


def _rand_vec(rnd: random.Random, lim: int = 20) -> ClassVector:
    return ClassVector(*(rnd.randint(-lim, lim) for _ in range(3)))


def property_check(cases: int = 10_000, seed: int = 4) -> Check:
    rnd = random.Random(seed)
    failures = []
    b4 = bn.genus4_bound()
    for _ in range(cases):
        v1, v1b, v2 = _rand_vec(rnd), _rand_vec(rnd), _rand_vec(rnd)
        g = rnd.randint(1, 10)
        if euler_pairing(v1 + v1b, v2, g) != euler_pairing(v1, v2, g) + euler_pairing(v1b, v2, g):
            failures.append("bilinearity")
        if euler_pairing(v2, v1 + v1b, g) != euler_pairing(v2, v1, g) + euler_pairing(v2, v1b, g):
            failures.append("bilinearity")

        p = ChargeParams(F(rnd.randint(-40, 40), rnd.randint(1, 8)), F(rnd.randint(-40, 80), rnd.randint(1, 8)))
        k = rnd.randint(1, 9)
        if heart_slope(v1.scale(k), p) != heart_slope(v1, p):
            failures.append("scaling")
        if compare_slopes(v1.scale(k), v2, p) != compare_slopes(v1, v2, p):
            failures.append("scaling")

        a, b, c = v1, v1b, v2
        ab, bc, ac = compare_slopes(a, b, p), compare_slopes(b, c, p), compare_slopes(a, c, p)
        if Ordering.INCOMPARABLE not in (ab, bc):
            if ab in (Ordering.LESS, Ordering.EQUAL) and bc in (Ordering.LESS, Ordering.EQUAL):
                want = Ordering.EQUAL if ab == bc == Ordering.EQUAL else Ordering.LESS
                if ac != want:
                    failures.append("transitivity")
            if compare_slopes(b, a, p) != {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS}.get(ab, ab):
                failures.append("antisymmetry")

        kk = rnd.randint(-6, 6)
        if qform(-v1, GENUS4_PARAMS) != qform(v1, GENUS4_PARAMS):
            failures.append("qform sign")
        if qform(v1.scale(kk), GENUS4_PARAMS) != kk * kk * qform(v1, GENUS4_PARAMS):
            failures.append("qform scaling")

        x = F(rnd.randint(0, 3 * 64), 64)
        if b4(6 - x) - b4(x) != 3 - x:
            failures.append("duality reflection")
    usc = b4.is_upper_semicontinuous()
    if not usc:
        failures.append("upper semicontinuity")
    return Check(
        "randomized property suites",
        not failures,
        f"{cases} cases each; failures: {sorted(set(failures)) or 'none'}",
    )


def find_params_check() -> Check:
    b = bn.genus4_bound()
    strong = search_params(3, 2, b, require_strong=True)
    weak = search_params(3, 2, b, require_strong=False)
    ok = (
        strong.params is None
        and weak.params is not None
        and weak.params.certificate(b).holds
    )
    got = None if weak.params is None else f"(s,t)=({fmt(weak.params.s)},{fmt(weak.params.t)})"
    return Check(
        "support parameter search at (3,2)",
        ok,
        f"strong: {strong.params}; weak: {got}, certificate min gap "
        f"{fmt(weak.certificate.min_gap) if weak.certificate else None}",
    )


CHECKS: list[Callable[[], Check]] = [
    euler_check,
    genus4_table_check,
    parabola_check,
    kernel_check,
    phase1_check,
    scan_check,
    moduli_check,
    degeneration_check,
    property_check,
    find_params_check,
]


def run_all(r_max_moduli: int = 1000, scan_bounds: SearchBounds | None = None) -> list[Check]:
    results = []
    for fn in CHECKS:
        if fn is moduli_check:
            results.append(fn(r_max_moduli))
        elif fn is scan_check and scan_bounds is not None:
            sb = scan_bounds
            results.append(fn(sb.r_max, sb.n_window, sb.w_min, sb.w_max))
        else:
            results.append(fn())
    return results
