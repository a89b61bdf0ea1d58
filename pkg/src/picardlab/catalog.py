"""
Dicritical singularities of the Lins Neto families and derived counts.

Each family of degree ``d >= 2`` has a hard-coded inventory of local types
``u^a/v^b``.  The size of its base-point configuration is the sum of the
chain lengths of those types, and it agrees with the quadratic closed forms
implemented in :func:`closed_form_size`.

Inventories:

====================  ===============================================
degree                inventory (count x type)
====================  ===============================================
2                     2 x 2/1 (points M, N), 3 x 3/2 (points J, K, L)
3                     3 x 1/1, 5 x 2/1
4                     12 x 1/1 (pairwise intersections of 9 lines)
3r - 1, r >= 2        3r^2 x 3/2, 2r x r/2
3r,     r >= 2        1 x 1/1, 3r^2 x 2/1, 2r x r/1, 2r x r/2
3r + 1, r >= 2        (3r^2 + 3) x 1/1, 6r x r/1
====================  ===============================================

For degree 3 only the radial count (3 of 8 points) is given directly; the
5 points of type 2/1 are the remainder, which the size 13 = 3*1 + 5*2
confirms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import InvalidInputError
from .resolution import LocalType, chain_length


@dataclass(frozen=True)
class FamilyInventory:
    degree: int
    entries: tuple[tuple[int, LocalType], ...]

    @property
    def total_points(self) -> int:
        return sum(c for c, _ in self.entries)

    def points(self) -> list[LocalType]:
        """One local type per dicritical point, in inventory order."""
        return [t for c, t in self.entries for _ in range(c)]

    def to_json(self) -> list:
        return [[c, [t.a, t.b]] for c, t in self.entries]


def _check_degree(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise InvalidInputError(f"family degree must be an integer >= 2, got {d!r}")


def inventory(d: int) -> FamilyInventory:
    _check_degree(d)
    T = LocalType
    if d == 2:
        entries = [(2, T(2, 1)), (3, T(3, 2))]
    elif d == 3:
        entries = [(3, T(1, 1)), (5, T(2, 1))]
    elif d == 4:
        entries = [(12, T(1, 1))]
    elif d % 3 == 2:
        r = (d + 1) // 3
        entries = [(3 * r * r, T(3, 2)), (2 * r, T(r, 2))]
    elif d % 3 == 0:
        r = d // 3
        entries = [(1, T(1, 1)), (3 * r * r, T(2, 1)), (2 * r, T(r, 1)), (2 * r, T(r, 2))]
    else:
        r = (d - 1) // 3
        entries = [(3 * r * r + 3, T(1, 1)), (6 * r, T(r, 1))]
    return FamilyInventory(d, tuple(entries))


@lru_cache(maxsize=4096)
def config_size(d: int) -> int:
    """Number of base points, infinitely near ones included, of the degree-``d`` family."""
    return sum(c * chain_length(t) for c, t in inventory(d).entries)


def closed_form_size(d: int) -> int:
    _check_degree(d)
    if d in (2, 3):
        return 13
    if d == 4:
        return 12
    q, rem = divmod(d, 3)
    if rem == 1:
        return 9 * q * q + 3
    # 3(1 - (-1)^n)n/2 is 3n for odd n and 0 for even n
    if rem == 2:
        n = q + 1
        return 10 * n * n + (3 * n if n % 2 else 0)
    n = q
    return 9 * n * n + 1 + (3 * n if n % 2 else 0)


def degree_search_bound(n: int) -> int:
    """Every ``d`` above this bound has ``config_size(d) > n``.

    For ``d >= 5`` each closed form is at least ``9r^2`` with ``r >= (d-1)/3``,
    so ``d > 3*(ceil(sqrt(n/9)) + 1)`` forces the size past ``n``.
    """
    r = isqrt(max(n, 0) // 9)
    while 9 * r * r < n:
        r += 1
    return max(4, 3 * (r + 1))


def admissible_degrees(n: int) -> list[int]:
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    return [d for d in range(2, degree_search_bound(n) + 1) if config_size(d) <= n]


def support_max(n: int) -> int | None:
    sizes = [config_size(d) for d in admissible_degrees(n)]
    return max(sizes) if sizes else None


def thresholds(search_bound: int = 100) -> tuple[int, int]:
    """Smallest configuration size over all degrees, and over degrees ``>= 5``."""
    first = min(config_size(d) for d in range(2, search_bound + 1))
    second = min(config_size(d) for d in range(5, search_bound + 1))
    return first, second


def argmin_degrees(search_bound: int = 100) -> tuple[list[int], list[int]]:
    t1, t2 = thresholds(search_bound)
    return (
        [d for d in range(2, search_bound + 1) if config_size(d) == t1],
        [d for d in range(5, search_bound + 1) if config_size(d) == t2],
    )
