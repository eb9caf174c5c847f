"""The w -> 2+ degeneration at b = 3 and its quotient lattice Z^3 / Z(1,3,2).

Since Z_{3,2}(1,3,2) = 0 the charge descends to the quotient, where it reads
``(a, c) -> -c + i a``.  The quotient lattice has rank two, so no support
form is checked downstairs.
"""
from __future__ import annotations

import enum
from typing import Iterable

from .charge import ChargeParams, ChargeValue, central_charge
from .klattice import ClassVector, QuotientClass, in_kernel, project_mod_kernel

WEAK_POINT = ChargeParams(3, 2)


def descended_charge(qc: QuotientClass) -> ChargeValue:
    return ChargeValue(-qc.c, qc.a)


def s_equivalent(v1, v2) -> bool:
    return in_kernel(ClassVector.of(v1) - ClassVector.of(v2))


class WeakClass(enum.Enum):
    POSITIVE = "positive"
    PHASE1 = "phase1"
    KERNEL = "kernel"
    VIOLATION = "violation"


def weak_classify(v) -> WeakClass:
    z = central_charge(v, WEAK_POINT)
    if z.im > 0:
        return WeakClass.POSITIVE
    if z.im == 0 and z.re < 0:
        return WeakClass.PHASE1
    if z.im == 0 and z.re == 0:
        return WeakClass.KERNEL
    return WeakClass.VIOLATION


def _rep_key(v: ClassVector):
    return (abs(v.r), abs(v.d), abs(v.n), v.r, v.d, v.n)


def sequiv_classes(vs: Iterable) -> list[list[ClassVector]]:
    """Partition into S-equivalence classes, canonical representative first.

    The representative minimizes ``(|r|, |d|, |n|)`` lexicographically (ties
    broken by the signed entries); classes are ordered by representative.
    """
    groups: dict[QuotientClass, list[ClassVector]] = {}
    for v in vs:
        v = ClassVector.of(v)
        groups.setdefault(project_mod_kernel(v), []).append(v)
    out = []
    for members in groups.values():
        rep = min(members, key=_rep_key)
        rest = list(members)
        rest.remove(rep)
        out.append([rep, *rest])
    out.sort(key=lambda cls: _rep_key(cls[0]))
    return out


def partition_json(parts: list[list[ClassVector]]) -> list:
    return [[v.to_json() for v in part] for part in parts]
