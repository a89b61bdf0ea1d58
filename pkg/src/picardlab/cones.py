"""
Ray-level experiments that combine the lattice, the Cremona action and the
family catalog.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .catalog import config_size, inventory
from .cremona import cremona_reduce, orbit_ball
from .errors import DimensionError, InvalidInputError
from .lattice import (
    DivisorClass,
    LatticeContext,
    QRegion,
    adjunction_genus,
    k_degree,
    primitive,
    q_membership,
    self_int,
    support_count,
)
from .resolution import normalize_type, resolution_chain


class KRegion(str, enum.Enum):
    NEGATIVE = "K<0"
    ZERO = "K=0"
    POSITIVE = "K>0"


def k_region(k: int) -> KRegion:
    if k < 0:
        return KRegion.NEGATIVE
    return KRegion.ZERO if k == 0 else KRegion.POSITIVE


@dataclass(frozen=True)
class RayReport:
    input: DivisorClass
    primitive_gen: DivisorClass
    self_int: int
    k_deg: int
    support: int
    q_region: QRegion
    k_region: KRegion
    genus: Fraction

    def to_json(self) -> dict:
        return {
            "input": str(self.input),
            "primitive": str(self.primitive_gen),
            "self_int": self.self_int,
            "k_deg": self.k_deg,
            "support": self.support,
            "q_region": self.q_region.value,
            "k_region": self.k_region.value,
            "genus": str(self.genus),
        }


def _nonzero(x: DivisorClass) -> None:
    if x.is_zero():
        raise InvalidInputError("the zero class has no ray")


def classify_ray(ctx: LatticeContext, x: DivisorClass) -> RayReport:
    ctx.check(x)
    _nonzero(x)
    k = k_degree(ctx, x)
    return RayReport(
        input=x,
        primitive_gen=primitive(ctx, x),
        self_int=self_int(ctx, x),
        k_deg=k,
        support=support_count(ctx, x),
        q_region=q_membership(ctx, x),
        k_region=k_region(k),
        genus=adjunction_genus(ctx, x),
    )


class Verdict(str, enum.Enum):
    NEG1 = "neg1-class"
    CONSISTENT = "conjecture-consistent"
    NEGATIVE_NOT_NEG1 = "negative-not-neg1"
    CANDIDATE = "counterexample-candidate"


def conjecture_screen(ctx: LatticeContext, x: DivisorClass) -> Verdict:
    """Numerical screen against the negative-curve and K-positive-ray conjectures.

    Only class data is inspected.  ``CANDIDATE`` means ``x^2 < 0`` and
    ``K.x >= 0``: such a class would contradict the conjectures only if an
    integral curve on a very general blow-up actually had it.
    ``NEGATIVE_NOT_NEG1`` (``x^2 < 0``, ``K.x < 0``, not a (-1)-class) is
    harmless since no integral curve can have those numbers.
    """
    ctx.check(x)
    _nonzero(x)
    s, k = self_int(ctx, x), k_degree(ctx, x)
    if s == -1 and k == -1:
        return Verdict.NEG1
    if s >= 0:
        return Verdict.CONSISTENT
    if k < 0:
        return Verdict.NEGATIVE_NOT_NEG1
    return Verdict.CANDIDATE


@dataclass(frozen=True)
class WeightAssignment:
    family_degree: int
    m: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.m < 1:
            raise InvalidInputError(f"pencil degree must be positive, got {self.m}")
        if any(k < 1 for k in self.weights):
            raise InvalidInputError("weights must be positive")
        expected = inventory(self.family_degree).total_points
        if len(self.weights) != expected:
            raise DimensionError(
                f"family {self.family_degree} has {expected} dicritical points, got {len(self.weights)} weights"
            )

    def to_json(self) -> dict:
        return {"family": self.family_degree, "m": self.m, "weights": list(self.weights)}


def _point_chains(family_degree: int):
    chains = {}
    out = []
    for t in inventory(family_degree).points():
        key = (t.a, t.b)
        if key not in chains:
            rho, delta, _, _ = normalize_type(t)
            chains[key] = resolution_chain(rho, delta)
        out.append(chains[key])
    return out


def build_candidate_class(ctx: LatticeContext, w: WeightAssignment) -> DivisorClass:
    """``(m; k_p * chain(p) for each dicritical point p)``, zero-padded to ``n``.

    Self-intersection is ``m^2 - sum k_p^2 rho_p delta_p`` and the K-degree is
    ``-3m + sum k_p (rho_p + delta_p - 1)``.
    """
    size = config_size(w.family_degree)
    if ctx.n < size:
        raise DimensionError(f"family {w.family_degree} needs n >= {size}, got n={ctx.n}")
    mults: list[int] = []
    for k, chain in zip(w.weights, _point_chains(w.family_degree)):
        mults.extend(chain.weighted(k).mults)
    return ctx.make(w.m, mults)


def candidate_invariants(w: WeightAssignment) -> tuple[int, int]:
    """``(x^2, K.x)`` of the candidate class, from the closed formulas."""
    sq = w.m * w.m
    kd = -3 * w.m
    for k, t in zip(w.weights, inventory(w.family_degree).points()):
        rho, delta, _, _ = normalize_type(t)
        sq -= k * k * rho * delta
        kd += k * (rho + delta - 1)
    return sq, kd


def search_candidate_degrees(
    family_degree: int,
    m_bound: int,
    k_bound: int,
    require_elliptic: bool = False,
) -> list[WeightAssignment]:
    """Weight assignments whose candidate class has ``x^2 = 0``.

    With ``require_elliptic`` the K-degree must also vanish.  For families of
    degree >= 5 the K-degree must be at least ``m``, a bound imported from
    the finiteness argument for K-positive rays.  Points of equal local type
    are interchangeable, so each type group carries a non-increasing weight
    tuple; results are sorted by ``(m, weights)``.
    """
    if m_bound < 1 or k_bound < 1:
        raise InvalidInputError("search bounds must be positive")
    inv = inventory(family_degree)
    groups = []
    for count, t in inv.entries:
        rho, delta, _, _ = normalize_type(t)
        options = []
        for ws in itertools.combinations_with_replacement(range(k_bound, 0, -1), count):
            options.append((sum(k * k for k in ws) * rho * delta, sum(ws) * (rho + delta - 1), ws))
        groups.append(options)

    max_sq = m_bound * m_bound
    partial: dict[tuple[int, int], list[tuple]] = {(0, 0): [()]}
    for options in groups:
        nxt: dict[tuple[int, int], list[tuple]] = {}
        for (sq, kd), prefixes in partial.items():
            for osq, okd, ws in options:
                s = sq + osq
                if s > max_sq:
                    continue
                nxt.setdefault((s, kd + okd), []).extend(p + (ws,) for p in prefixes)
        partial = nxt

    out = []
    for (sq, kd_pos), assignments in partial.items():
        m = _isqrt_exact(sq)
        if m is None or not 1 <= m <= m_bound:
            continue
        kd = kd_pos - 3 * m
        if require_elliptic and kd != 0:
            continue
        if family_degree >= 5 and kd < m:
            continue
        for groups_ws in assignments:
            out.append(WeightAssignment(family_degree, m, tuple(k for ws in groups_ws for k in ws)))
    out.sort(key=lambda w: (w.m, w.weights))
    return out


def _isqrt_exact(v: int) -> int | None:
    r = isqrt(v)
    return r if r * r == v else None


@dataclass
class OrbitCheckReport:
    k_constant: list[bool]
    primitive_k_constant: list[bool]
    ball_sizes: list[int]
    k_degrees: list[int]
    cells: list[list[int]] = field(default_factory=list)
    canonical: list[DivisorClass] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.k_constant) and all(self.primitive_k_constant)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "k_constant": self.k_constant,
            "primitive_k_constant": self.primitive_k_constant,
            "ball_sizes": self.ball_sizes,
            "k_degrees": self.k_degrees,
            "cells": self.cells,
            "canonical": [str(c) for c in self.canonical],
        }


def orbit_k_invariance_check(ctx: LatticeContext, xs: Sequence[DivisorClass], budget: int) -> OrbitCheckReport:
    """Explore an orbit ball around each class and check that the K-degree,
    and the K-degree of the primitive generator, stay constant.  Also groups
    ``xs`` by their reduced representative (indices into ``xs``)."""
    if budget < 1:
        raise InvalidInputError("budget must be positive")
    k_const, pk_const, sizes, kds = [], [], [], []
    for x in xs:
        _nonzero(x)
        ball = orbit_ball(ctx, x, max_size=budget)
        k0 = k_degree(ctx, x)
        pk0 = k_degree(ctx, primitive(ctx, x))
        k_const.append(all(k_degree(ctx, y) == k0 for y in ball.classes))
        pk_const.append(all(k_degree(ctx, primitive(ctx, y)) == pk0 for y in ball.classes))
        sizes.append(len(ball))
        kds.append(k0)
    canon = [cremona_reduce(ctx, x)[0] for x in xs] if ctx.n >= 3 else list(xs)
    cells: dict[DivisorClass, list[int]] = {}
    for i, c in enumerate(canon):
        cells.setdefault(c, []).append(i)
    ordered = sorted(cells.items(), key=lambda kv: kv[1][0])
    return OrbitCheckReport(
        k_const, pk_const, sizes, kds,
        cells=[idx for _, idx in ordered],
        canonical=[c for c, _ in ordered],
    )

