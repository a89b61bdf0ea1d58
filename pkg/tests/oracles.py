"""Independent brute-force oracles used to freeze expected values."""
from __future__ import annotations

import itertools


def neg1_bruteforce(n: int, bound: int) -> list[tuple[int, tuple[int, ...]]]:
    """All (d, m) with d^2 - sum m^2 = -1, -3d + sum m = -1, 0 <= m_i <= d, 1 <= d <= bound,
    plus the exceptional classes.  Searches ordered tuples slot by slot, pruning
    on the running sums only."""
    out = []
    for i in range(n):
        m = [0] * n
        m[i] = -1
        out.append((0, tuple(m)))
    for d in range(1, bound + 1):
        target_sum, target_sq = 3 * d - 1, d * d + 1
        prefix: list[int] = []

        def rec(s: int, q: int) -> None:
            k = n - len(prefix)
            if k == 0:
                if s == target_sum and q == target_sq:
                    out.append((d, tuple(prefix)))
                return
            rs, rq = target_sum - s, target_sq - q
            # remaining k entries need sum rs and squares rq: rs^2 <= k*rq and rq >= rs
            if rs < 0 or rq < rs or rs * rs > k * rq:
                return
            for v in range(0, d + 1):
                if v * v > rq:
                    break
                prefix.append(v)
                rec(s + v, q + v * v)
                prefix.pop()

        rec(0, 0)
    return sorted(out)


def candidate_bruteforce(points: list[tuple[int, int]], m_bound: int, k_bound: int, elliptic: bool, family_degree: int):
    """Enumerate every ordered weight tuple; ``points`` lists normalized (rho, delta) per point."""
    hits = set()
    for ks in itertools.product(range(1, k_bound + 1), repeat=len(points)):
        sq = sum(k * k * r * s for k, (r, s) in zip(ks, points))
        kd_pos = sum(k * (r + s - 1) for k, (r, s) in zip(ks, points))
        for m in range(1, m_bound + 1):
            if m * m != sq:
                continue
            kd = kd_pos - 3 * m
            if elliptic and kd != 0:
                continue
            if family_degree >= 5 and kd < m:
                continue
            hits.add((m, ks))
    return hits


def blowup_count_line_pencil_point(a: int, b: int) -> int:
    """Chain length via the Euclidean algorithm in division form (sum of partial quotients)."""
    total = 0
    while b:
        total += a // b
        a, b = b, a % b
    return total
