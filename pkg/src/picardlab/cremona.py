"""
Cremona group action on the Picard lattice.

The group is generated by permutations of the exceptional classes and by
the quadratic reflection ``x -> x + (x.e)e`` in the root
``e = L - E_i - E_j - E_k`` (written ``(1; 1 at i,j,k)``).  Every generator
is an isometry of the intersection form and fixes ``K``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import InvalidGeneratorError, InvalidInputError, UnsupportedContextError
from .lattice import DivisorClass, LatticeContext, k_degree, self_int


@dataclass(frozen=True)
class Permute:
    """Send the entry in slot ``i`` to slot ``sigma[i-1]`` (all 1-based)."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> "Permute":
        sigma = list(range(1, n + 1))
        sigma[i - 1], sigma[j - 1] = j, i
        return cls(tuple(sigma))

    def validate(self, ctx: LatticeContext) -> None:
        if sorted(self.sigma) != list(range(1, ctx.n + 1)):
            raise InvalidGeneratorError(f"{self.sigma} is not a permutation of 1..{ctx.n}")

    def __str__(self) -> str:
        return "p:" + ",".join(map(str, self.sigma))


@dataclass(frozen=True)
class Reflect:
    """Reflection in the root ``L - E_i - E_j - E_k``."""

    i: int
    j: int
    k: int

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def validate(self, ctx: LatticeContext) -> None:
        if ctx.n < 3:
            raise InvalidGeneratorError(f"reflections need n >= 3, got n={ctx.n}")
        if len(set(self.indices)) != 3:
            raise InvalidGeneratorError(f"reflection indices {self.indices} are not distinct")
        if not all(1 <= t <= ctx.n for t in self.indices):
            raise InvalidGeneratorError(f"reflection indices {self.indices} out of range 1..{ctx.n}")

    def root(self, ctx: LatticeContext) -> DivisorClass:
        return ctx.make(1, (1 if t in self.indices else 0 for t in range(1, ctx.n + 1)))

    def __str__(self) -> str:
        return f"r:{self.i},{self.j},{self.k}"


GeneratorAction = Union[Permute, Reflect]


@dataclass(frozen=True)
class WeylWord:
    """A finite word in the generators, applied left to right."""

    generators: tuple[GeneratorAction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __add__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.generators + other.generators)

    def tokens(self) -> list[str]:
        return [str(g) for g in self.generators]


def _reflect_raw(d: int, m: Sequence[int], i: int, j: int, k: int) -> tuple[int, tuple[int, ...]]:
    # 0-based i, j, k; x.e = d - m_i - m_j - m_k
    t = d - m[i] - m[j] - m[k]
    if t == 0:
        return d, tuple(m)
    out = list(m)
    out[i] += t
    out[j] += t
    out[k] += t
    return d + t, tuple(out)


def reflect(ctx: LatticeContext, x: DivisorClass, triple: Iterable[int] | Reflect) -> DivisorClass:
    g = triple if isinstance(triple, Reflect) else Reflect(*triple)
    g.validate(ctx)
    ctx.check(x)
    d, m = _reflect_raw(x.d, x.m, g.i - 1, g.j - 1, g.k - 1)
    return DivisorClass(d, m)


def permute(ctx: LatticeContext, x: DivisorClass, sigma: Iterable[int] | Permute) -> DivisorClass:
    g = sigma if isinstance(sigma, Permute) else Permute(tuple(sigma))
    g.validate(ctx)
    ctx.check(x)
    out = [0] * ctx.n
    for src, dst in enumerate(g.sigma):
        out[dst - 1] = x.m[src]
    return DivisorClass(x.d, tuple(out))


def apply_generator(ctx: LatticeContext, x: DivisorClass, g: GeneratorAction) -> DivisorClass:
    if isinstance(g, Reflect):
        return reflect(ctx, x, g)
    if isinstance(g, Permute):
        return permute(ctx, x, g)
    raise InvalidGeneratorError(f"unknown generator {g!r}")


def apply_word(ctx: LatticeContext, x: DivisorClass, word: WeylWord | Iterable[GeneratorAction]) -> DivisorClass:
    for g in word:
        x = apply_generator(ctx, x, g)
    return x


def _sorting_permutation(m: Sequence[int]) -> tuple[int, ...] | None:
    """Permutation putting ``m`` in non-increasing order (ties by index), or None if sorted."""
    order = sorted(range(len(m)), key=lambda i: (-m[i], i))
    if order == list(range(len(m))):
        return None
    sigma = [0] * len(m)
    for slot, src in enumerate(order):
        sigma[src] = slot + 1
    return tuple(sigma)


def is_reduced(x: DivisorClass) -> bool:
    """Sorted non-increasing with ``m_1 + m_2 + m_3 <= d``."""
    m = x.m
    if any(m[i] < m[i + 1] for i in range(len(m) - 1)):
        return False
    return sum(m[:3]) <= x.d


def cremona_reduce(ctx: LatticeContext, x: DivisorClass) -> tuple[DivisorClass, WeylWord]:
    """Sort-and-reflect reduction.

    Sorts the multiplicities, reflects in the three largest while their sum
    exceeds ``d``, and stops once the class is reduced or ``d <= 0``.  Returns
    the terminal class and a word carrying ``x`` to it.
    """
    if ctx.n < 3:
        raise UnsupportedContextError(f"Cremona reduction needs n >= 3, got n={ctx.n}")
    ctx.check(x)
    word: list[GeneratorAction] = []
    d, m = x.d, x.m
    while True:
        sigma = _sorting_permutation(m)
        if sigma is not None:
            word.append(Permute(sigma))
            m = tuple(sorted(m, reverse=True))
        if d <= 0 or m[0] + m[1] + m[2] <= d:
            break
        d, m = _reflect_raw(d, m, 0, 1, 2)
        word.append(Reflect(1, 2, 3))
    return DivisorClass(d, m), WeylWord(tuple(word))


def same_orbit(ctx: LatticeContext, x: DivisorClass, y: DivisorClass) -> bool:
    """Compare terminal classes of :func:`cremona_reduce`.

    Equal terminal classes prove ``x`` and ``y`` share an orbit (the two
    witness words compose to a map).  The converse holds whenever the
    reduction ends inside the fundamental chamber, e.g. for classes with
    ``x^2 >= 0, d > 0`` and for the exceptional-curve orbit; a run that
    stops at ``d <= 0`` outside the chamber may separate classes that are in
    fact equivalent.
    """
    if k_degree(ctx, x) != k_degree(ctx, y) or self_int(ctx, x) != self_int(ctx, y):
        return False
    return cremona_reduce(ctx, x)[0] == cremona_reduce(ctx, y)[0]


def all_generators(ctx: LatticeContext) -> list[GeneratorAction]:
    """All transpositions followed by all reflections, in a fixed order."""
    gens: list[GeneratorAction] = [Permute.swap(ctx.n, i, j) for i, j in itertools.combinations(range(1, ctx.n + 1), 2)]
    if ctx.n >= 3:
        gens.extend(Reflect(*t) for t in itertools.combinations(range(1, ctx.n + 1), 3))
    return gens


def _neighbours(n: int, x: DivisorClass) -> Iterable[DivisorClass]:
    d, m = x.d, x.m
    for i, j in itertools.combinations(range(n), 2):
        if m[i] != m[j]:
            out = list(m)
            out[i], out[j] = out[j], out[i]
            yield DivisorClass(d, tuple(out))
    if n >= 3:
        for i, j, k in itertools.combinations(range(n), 3):
            if d != m[i] + m[j] + m[k]:
                yield DivisorClass(*_reflect_raw(d, m, i, j, k))


@dataclass
class OrbitBall:
    classes: list[DivisorClass]
    truncated: bool
    depth: int
    levels: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.classes)


def orbit_ball(
    ctx: LatticeContext,
    x: DivisorClass,
    max_size: int | None = None,
    max_depth: int | None = None,
) -> OrbitBall:
    """Breadth-first closure of ``{x}`` under :func:`all_generators`.

    Exploration goes level by level.  When a level would overflow
    ``max_size`` only its lexicographically smallest classes are kept, so the
    result does not depend on traversal order.  Output is sorted.
    """
    if max_size is None and max_depth is None:
        raise InvalidInputError("orbit_ball needs max_size or max_depth")
    if (max_size is not None and max_size < 1) or (max_depth is not None and max_depth < 0):
        raise InvalidInputError("orbit budget must be positive")
    ctx.check(x)
    seen = {x}
    frontier = [x]
    levels = [1]
    depth = 0
    truncated = False
    while frontier:
        nxt = set()
        for y in frontier:
            for z in _neighbours(ctx.n, y):
                if z not in seen:
                    nxt.add(z)
        if not nxt:
            break
        if max_depth is not None and depth >= max_depth:
            truncated = True
            break
        if max_size is not None and len(seen) >= max_size:
            truncated = True
            break
        new = sorted(nxt)
        if max_size is not None and len(seen) + len(new) > max_size:
            new = new[: max_size - len(seen)]
            truncated = True
        seen.update(new)
        levels.append(len(new))
        depth += 1
        frontier = new
        if truncated:
            break
    return OrbitBall(sorted(seen), truncated, depth, levels)


def _partitions_with_constraints(slots: int, total: int, squares: int, cap: int):
    """Non-increasing tuples of length ``slots`` with entries in ``[0, cap]``,
    prescribed sum and sum of squares."""
    if slots == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    # entries are integers, so squares >= total; Cauchy-Schwarz gives total^2 <= slots*squares
    if total < 0 or squares < total or total * total > slots * squares:
        return
    hi = min(cap, total)
    lo = -(-total // slots)  # the largest entry is at least the mean
    for v in range(hi, lo - 1, -1):
        if v * v > squares:
            continue
        for rest in _partitions_with_constraints(slots - 1, total - v, squares - v * v, v):
            yield (v,) + rest


def _distinct_permutations(values: tuple[int, ...]):
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    n = len(values)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def enumerate_neg1(ctx: LatticeContext, degree_bound: int) -> list[DivisorClass]:
    """Numerical (-1)-classes of degree at most ``degree_bound``.

    These are the classes with ``x^2 = -1`` and ``K.x = -1`` whose
    multiplicities are all non-negative, together with the exceptional
    classes ``E_i``.  Sorted lexicographically.
    """
    if degree_bound < 0:
        raise InvalidInputError("degree bound must be non-negative")
    n = ctx.n
    found = [ctx.exceptional(i) for i in range(1, n + 1)]
    for d in range(1, degree_bound + 1):
        # sum m = 3d - 1, sum m^2 = d^2 + 1
        for shape in _partitions_with_constraints(n, 3 * d - 1, d * d + 1, d):
            found.extend(DivisorClass(d, p) for p in _distinct_permutations(shape))
    return sorted(set(found))
