"""The projective line P^1(Z/NZ) and its preferred representatives.

A class (a:b) with gcd(a,b,N)=1 is affine when gcd(a,N)=1 and at
infinity otherwise.  Affine classes store (1, a^-1 b).  Classes at
infinity store the unit-scaled pair (j, l) pinned down by M(j:l)*j - l
= 1 mod N, where M(a:b) is the least m >= 0 with m*a - b a unit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import gcd

from .residues import Level, Residue, sym_rep


class NotOnProjLine(ValueError):
    """gcd(a, b, N) > 1: the pair defines no class on P^1(Z/NZ)."""


class NotInH(ValueError):
    """M is only defined on the classes at infinity."""


class PointKind(Enum):
    AFFINE = "affine"
    INFINITY = "infinity"


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A class of P^1(Z/NZ) held by its preferred representative.

    Structural equality of the stored pair is class equality.
    """

    level: Level
    a: Residue
    b: Residue
    kind: PointKind


def _check_class(a: int, b: int, n: int):
    if gcd(gcd(a, b), n) != 1:
        raise NotOnProjLine(f"gcd({a}, {b}, {n}) > 1")


def big_m(a: int, b: int, level: Level) -> int:
    """Least m >= 0 with m*a - b a unit mod N; defined on H only.

    The sequence m*a - b mod N has period dividing N, so a unit shows
    up before m reaches N or never; never is impossible for a class of
    P^1, which we enforce as an internal invariant.
    """
    n = level.n
    _check_class(a, b, n)
    if gcd(a, n) == 1:
        raise NotInH(f"({a}:{b}) is affine mod {n}")
    for m in range(n):
        if gcd(m * a - b, n) == 1:
            return m
    raise AssertionError(f"no unit m*{a}-{b} mod {n}; broken invariant")


def normalize(a: int, b: int, level: Level) -> ProjPoint:
    """The preferred representative of the class (a:b)."""
    n = level.n
    _check_class(a, b, n)
    if gcd(a, n) == 1:
        ainv = pow(a, -1, n)
        return ProjPoint(
            level, sym_rep(1, level), sym_rep(ainv * b, level), PointKind.AFFINE
        )
    c = big_m(a, b, level) * a - b
    cinv = pow(c, -1, n)
    return ProjPoint(
        level,
        sym_rep(a * cinv, level),
        sym_rep(b * cinv, level),
        PointKind.INFINITY,
    )


@dataclass(frozen=True)
class MTable:
    """j -> M_j over the nonunits j, where M_j is the max of M over the
    H classes whose preferred first coordinate is j."""

    level: Level
    entries: dict

    def __getitem__(self, j: int) -> int:
        return self.entries[self.level.reduce(j)]


def _h_classes(level: Level):
    """One preferred representative per class at infinity."""
    n = level.n
    seen = {}
    for a in range(-level.n1, level.n2 + 1):
        if gcd(a, n) == 1:
            continue
        for b in range(-level.n1, level.n2 + 1):
            if gcd(gcd(a, b), n) != 1:
                continue
            p = normalize(a, b, level)
            seen[(p.a.value, p.b.value)] = p
    return list(seen.values())


def m_table(level: Level) -> MTable:
    entries: dict[int, int] = {}
    for p in _h_classes(level):
        j = p.a.value
        m = big_m(j, p.b.value, level)
        entries[j] = max(entries.get(j, 0), m)
    return MTable(level, dict(sorted(entries.items())))


def enumerate_p1(level: Level) -> list[ProjPoint]:
    """All classes of P^1(Z/NZ), affine part first, each exactly once."""
    n = level.n
    seen = {}
    for a in range(-level.n1, level.n2 + 1):
        for b in range(-level.n1, level.n2 + 1):
            if gcd(gcd(a, b), n) != 1:
                continue
            p = normalize(a, b, level)
            seen.setdefault((p.kind.value, p.a.value, p.b.value), p)
    return sorted(
        seen.values(), key=lambda p: (p.kind.value, p.a.value, p.b.value)
    )


def psi(level: Level) -> int:
    """Index [Gamma(1):Gamma_0(N)], counted as |P^1(Z/NZ)|."""
    return len(enumerate_p1(level))


def m_distribution(level: Level) -> dict[int, int]:
    """Histogram of M over all classes at infinity."""
    hist = Counter(
        big_m(p.a.value, p.b.value, level) for p in _h_classes(level)
    )
    return dict(sorted(hist.items()))
