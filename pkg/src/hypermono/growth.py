"""Empirical ball-growth probe: breadth-first enumeration of group elements
with trace(g^t g) <= T^2 and a log-log least-squares slope fit."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import mat_inv, mat_mul, mat_to_int


def _frob_sq(mat) -> int:
    return sum(x * x for row in mat for x in row)


def _key(mat) -> tuple:
    return tuple(x for row in mat for x in row)


def closure_under_inverse(generators):
    out = []
    seen = set()
    for g in generators:
        for h in (g, mat_to_int(mat_inv([list(r) for r in g]))):
            k = _key(h)
            if k not in seen:
                seen.add(k)
                out.append([list(r) for r in h])
    return out


@dataclass(frozen=True)
class BallCount:
    count: int
    truncated: bool  # word limit reached with the frontier still growing


def enumerate_ball(generators, t: int, word_limit: int, *,
                   margin: int = 4) -> BallCount:
    """Lower bound for |{g in the group : trace(g^t g) <= T^2}| from words of
    length <= word_limit, pruning words with trace(g^t g) > (margin*T)^2.

    Balls are not prefix-closed, hence the margin; the result is an explicit
    lower bound, never an exact count."""
    if margin < 1:
        raise ValueError("margin must be at least 1")
    gens = closure_under_inverse(generators)
    if not gens:
        raise ValueError("at least one generator required")
    n = len(gens[0])
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    seen = {_key(ident)}
    frontier = [ident]
    prune_sq = (margin * t) ** 2
    t_sq = t * t
    count = 1 if _frob_sq(ident) <= t_sq else 0
    for _ in range(word_limit):
        nxt = []
        for g in frontier:
            for h in gens:
                prod = mat_mul(g, h)
                if _frob_sq(prod) > prune_sq:
                    continue
                k = _key(prod)
                if k in seen:
                    continue
                seen.add(k)
                nxt.append(prod)
                if _frob_sq(prod) <= t_sq:
                    count += 1
        frontier = nxt
        if not frontier:
            break
    return BallCount(count, truncated=bool(frontier))


@dataclass(frozen=True)
class GrowthRun:
    t_grid: tuple[int, ...]
    counts: tuple[int, ...]
    word_limit: int
    margin: int
    slope: float
    residual: float


def geometric_grid(t_min: int, t_max: int, points: int) -> list[int]:
    if points < 2 or t_min < 1 or t_max <= t_min:
        raise ValueError("need t_max > t_min >= 1 and at least 2 points")
    ratio = (t_max / t_min) ** (1 / (points - 1))
    grid = sorted({round(t_min * ratio ** i) for i in range(points)})
    return grid


def fit_slope(t_grid, counts) -> tuple[float, float]:
    """Ordinary least squares of log(count) on log(T); returns (slope, rss)."""
    pts = [(math.log(t), math.log(c)) for t, c in zip(t_grid, counts)
           if c >= 2]
    if len(pts) < 4:
        raise ValueError("need at least 4 grid points with counts >= 2")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    if sxx == 0:
        raise ValueError("degenerate grid (all T equal)")
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sxx
    rss = sum((y - ybar - slope * (x - xbar)) ** 2 for x, y in zip(xs, ys))
    return slope, rss


def growth_run(generators, t_min: int, t_max: int, points: int,
               word_limit: int, *, margin: int = 4) -> GrowthRun:
    """Single enumeration at t_max, counts read off per grid threshold."""
    gens = closure_under_inverse(generators)
    n = len(gens[0])
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    seen = {_key(ident)}
    norms = [_frob_sq(ident)]
    frontier = [ident]
    prune_sq = (margin * t_max) ** 2
    for _ in range(word_limit):
        nxt = []
        for g in frontier:
            for h in gens:
                prod = mat_mul(g, h)
                fs = _frob_sq(prod)
                if fs > prune_sq:
                    continue
                k = _key(prod)
                if k in seen:
                    continue
                seen.add(k)
                nxt.append(prod)
                norms.append(fs)
        frontier = nxt
        if not frontier:
            break
    norms.sort()
    grid = geometric_grid(t_min, t_max, points)
    counts = []
    for t in grid:
        t_sq = t * t
        lo, hi = 0, len(norms)
        while lo < hi:
            mid = (lo + hi) // 2
            if norms[mid] <= t_sq:
                lo = mid + 1
            else:
                hi = mid
        counts.append(lo)
    slope, rss = fit_slope(grid, counts)
    return GrowthRun(tuple(grid), tuple(counts), word_limit, margin,
                     slope, rss)


def saturated_word_limit(generators, t: int, *, start: int = 4,
                         margin: int = 4, max_limit: int = 64) -> int:
    """Smallest word limit whose ball count matches the count at limit + 2."""
    limit = start
    prev = enumerate_ball(generators, t, limit, margin=margin).count
    while limit < max_limit:
        cur = enumerate_ball(generators, t, limit + 2, margin=margin).count
        if cur == prev:
            return limit
        limit += 2
        prev = cur
    raise ValueError(f"no saturation below word limit {max_limit}")
