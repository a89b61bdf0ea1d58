"""
Intersection theory on the Picard lattice of the plane blown up at n points.

A class is stored as ``(d; m_1, ..., m_n)`` and stands for ``d*L - sum m_i*E_i``,
so strict transforms of plane curves have non-negative entries (their
multiplicities at the blown-up points).  The pairing is

    L.L = 1,  E_i.E_i = -1,  L.E_i = E_i.E_j = 0  (i != j)

and the canonical class is ``K = -3L + sum E_i = (-3; -1, ..., -1)``.

Everything is exact: Python integers never overflow and genera are returned
as ``fractions.Fraction``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable

from .errors import DimensionError, InvalidInputError


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An integral class ``d*L - sum m_i*E_i``.

    Ordering is lexicographic on ``(d, m)``, which is the canonical output
    order used throughout the package.
    """

    d: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))

    @classmethod
    def of(cls, d: int, m: Iterable[int]) -> "DivisorClass":
        return cls(d, tuple(m))

    @property
    def n(self) -> int:
        return len(self.m)

    def is_zero(self) -> bool:
        return self.d == 0 and not any(self.m)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.n != other.n:
            raise DimensionError(f"cannot add classes of rank {self.n} and {other.n}")
        return DivisorClass(self.d + other.d, tuple(a + b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.d, tuple(-v for v in self.m))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def scale(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.d, tuple(k * v for v in self.m))

    def __str__(self) -> str:
        return f"{self.d};" + ",".join(str(v) for v in self.m)


@dataclass(frozen=True)
class LatticeContext:
    """Ambient lattice for ``n`` blown-up points (Picard rank ``n + 1``)."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInputError(f"number of points must be a positive integer, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n + 1

    @cached_property
    def canonical(self) -> DivisorClass:
        return DivisorClass(-3, (-1,) * self.n)

    @cached_property
    def line(self) -> DivisorClass:
        return DivisorClass(1, (0,) * self.n)

    def exceptional(self, i: int) -> DivisorClass:
        """The class ``E_i`` for 1-based ``i``; it reads ``(0; 0,..,-1,..,0)``."""
        if not 1 <= i <= self.n:
            raise InvalidInputError(f"exceptional index {i} out of range 1..{self.n}")
        m = [0] * self.n
        m[i - 1] = -1
        return DivisorClass(0, tuple(m))

    def zero(self) -> DivisorClass:
        return DivisorClass(0, (0,) * self.n)

    def make(self, d: int, m: Iterable[int]) -> DivisorClass:
        """Build a class, zero-padding ``m`` on the right up to ``n`` entries."""
        m = tuple(m)
        if len(m) > self.n:
            raise DimensionError(f"{len(m)} multiplicities do not fit in rank n={self.n}")
        return DivisorClass(d, m + (0,) * (self.n - len(m)))

    def check(self, *xs: DivisorClass) -> None:
        for x in xs:
            if len(x.m) != self.n:
                raise DimensionError(f"class {x} has {len(x.m)} entries, context expects n={self.n}")


def pair(ctx: LatticeContext, x: DivisorClass, y: DivisorClass) -> int:
    ctx.check(x, y)
    return x.d * y.d - sum(a * b for a, b in zip(x.m, y.m))


def self_int(ctx: LatticeContext, x: DivisorClass) -> int:
    return pair(ctx, x, x)


def k_degree(ctx: LatticeContext, x: DivisorClass) -> int:
    """``K.x = -3d + sum m_i``."""
    ctx.check(x)
    return -3 * x.d + sum(x.m)


def adjunction_genus(ctx: LatticeContext, x: DivisorClass) -> Fraction:
    """Arithmetic genus ``1 + (x^2 + K.x)/2``.

    A half-integer result is returned unrounded; it means ``x`` cannot be the
    class of a curve.
    """
    return 1 + Fraction(self_int(ctx, x) + k_degree(ctx, x), 2)


def content(x: DivisorClass) -> int:
    g = abs(x.d)
    for v in x.m:
        g = gcd(g, v)
    return g


def primitive(ctx: LatticeContext, x: DivisorClass) -> DivisorClass:
    """Primitive generator of the ray through ``x`` (same direction, coprime entries)."""
    ctx.check(x)
    g = content(x)
    if g == 0:
        raise InvalidInputError("the zero class spans no ray")
    return DivisorClass(x.d // g, tuple(v // g for v in x.m))


def support_count(ctx: LatticeContext, x: DivisorClass) -> int:
    """Number of exceptional coefficients that are nonzero."""
    ctx.check(x)
    return sum(1 for v in x.m if v)


class QRegion(str, enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"
    ZERO = "zero"


def q_membership(ctx: LatticeContext, x: DivisorClass) -> QRegion:
    """Locate ``x`` relative to the forward cone ``{x^2 >= 0, L.x >= 0}``.

    The line class ``L`` plays the role of the ample class: on ``{x^2 >= 0}``
    the sign of ``d`` already picks the nappe, because ``x^2 >= 0`` and
    ``d = 0`` force ``x = 0``.
    """
    ctx.check(x)
    if x.is_zero():
        return QRegion.ZERO
    s = self_int(ctx, x)
    if s < 0 or x.d < 0:
        return QRegion.OUTSIDE
    return QRegion.BOUNDARY if s == 0 else QRegion.INTERIOR
