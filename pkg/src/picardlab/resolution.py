"""
Base points of the local pencil ``lambda*u^a + mu*v^b``.

For coprime ``(rho, delta)`` the base points form a single chain of
infinitely near points.  Their multiplicities on the generic member are the
successive minima of the subtractive Euclidean algorithm started at
``(rho, delta)``, so the chain length is the sum of the partial quotients of
``rho/delta``.  :func:`simulate_blowups` recomputes the same chain by
blowing up in explicit affine charts and is kept as an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .errors import InvalidInputError


@dataclass(frozen=True)
class LocalType:
    """Local first integral ``u^a / v^b``."""

    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)) or self.a < 1 or self.b < 1:
            raise InvalidInputError(f"local type needs positive exponents, got {self.a}/{self.b}")

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


class NormalizedType(NamedTuple):
    rho: int
    delta: int
    g: int
    swapped: bool


def normalize_type(t: LocalType | tuple[int, int]) -> NormalizedType:
    """Divide out the gcd and order so that ``rho >= delta``.

    ``swapped`` records whether ``a < b`` in the input.
    """
    if not isinstance(t, LocalType):
        t = LocalType(*t)
    g = gcd(t.a, t.b)
    rho, delta = t.a // g, t.b // g
    if rho < delta:
        return NormalizedType(delta, rho, g, True)
    return NormalizedType(rho, delta, g, False)


@dataclass(frozen=True)
class ResolutionChain:
    mults: tuple[int, ...]
    satellite: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.mults)

    def weighted(self, k: int) -> "ResolutionChain":
        """Chain of the pencil whose members are degree-``k`` forms in ``u^rho, v^delta``."""
        if k < 1:
            raise InvalidInputError(f"weight must be positive, got {k}")
        return ResolutionChain(tuple(k * v for v in self.mults), self.satellite)

    def to_json(self) -> dict:
        return {"mults": list(self.mults), "satellite": list(self.satellite)}


def _check_coprime(rho: int, delta: int) -> None:
    if rho < 1 or delta < 1:
        raise InvalidInputError(f"exponents must be positive, got ({rho}, {delta})")
    if gcd(rho, delta) != 1:
        raise InvalidInputError(f"({rho}, {delta}) not coprime; normalize the type first")


def resolution_chain(rho: int, delta: int) -> ResolutionChain:
    """Multiplicities and proximity flags of the base-point chain.

    Euclidean iteration on ``(rho, delta)``: each state emits its smaller
    entry and subtracts it from the larger one, stopping after ``(1, 1)``.
    Runs of equal subtractions are taken at once with ``divmod``.  The
    first run (as many points as the integer part of ``max/min``) and the
    point right after it are free; every later point is satellite.
    """
    _check_coprime(rho, delta)
    a, b = max(rho, delta), min(rho, delta)
    mults: list[int] = []
    while b:
        q, r = divmod(a, b)
        mults.extend([b] * q)
        a, b = b, r
    first_run = max(rho, delta) // min(rho, delta)
    return ResolutionChain(tuple(mults), tuple(i > first_run for i in range(len(mults))))


def chain_length(t: LocalType | tuple[int, int]) -> int:
    """Sum of the partial quotients of ``rho/delta``."""
    rho, delta, _, _ = normalize_type(t)
    total = 0
    while delta:
        q, r = divmod(rho, delta)
        total += q
        rho, delta = delta, r
    return total


def simulate_blowups(rho: int, delta: int) -> ResolutionChain:
    """Track the base point of ``lambda*x^rho + mu*y^delta`` through point blow-ups.

    The pencil is held as its two generators, monomials stored by exponent
    pair in local coordinates ``(x, y)`` at the current base point, together
    with the exceptional curves through that point (as coordinate axes).
    Each step blows up the origin, divides both generators by the generic
    multiplicity, and moves to the unique direction on the new exceptional
    line where both initial forms vanish.  It stops when the members no
    longer share a point.
    """
    _check_coprime(rho, delta)
    # generators P = x^pi y^pj and Q = x^qi y^qj
    pi, pj, qi, qj = rho, 0, 0, delta
    # whether the axis x = 0 (resp. y = 0) is an earlier exceptional curve
    on_x = on_y = False
    mults = []
    satellite = []
    while pi + pj > 0 and qi + qj > 0:
        dp, dq = pi + pj, qi + qj
        e = dp if dp < dq else dq
        mults.append(e)
        satellite.append(on_x and on_y)
        # a generator of order > e has zero initial form and vanishes in every
        # direction; otherwise x^i y^j vanishes at [1:0] iff j > 0, at [0:1] iff i > 0
        at_x = (pj > 0 or dp > e) and (qj > 0 or dq > e)
        at_y = (pi > 0 or dp > e) and (qi > 0 or dq > e)
        if at_x and at_y:
            raise RuntimeError("pencil splits into several base points")
        if at_x:
            # chart y = x*y1: x^i y^j -> x^(i+j-e) y1^j; new exceptional curve x = 0
            pi, qi = dp - e, dq - e
            on_x = True
        elif at_y:
            # chart x = x1*y: x^i y^j -> x1^i y^(i+j-e); new exceptional curve y = 0
            pj, qj = dp - e, dq - e
            on_y = True
        else:
            break
    return ResolutionChain(tuple(mults), tuple(satellite))
