"""Minimal distance graph on the norm -2 vectors of a hyperbolic lattice:
neighbor enumeration, bidirectional path search, the reflection-product
factorization witness, and the explicit 2-edge paths for the j = 3 family."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    bilinear,
    enumerate_short_vectors,
    identity,
    integer_kernel_and_solution,
    mat_eq,
    mat_inv,
    mat_mul,
    mat_vec,
    vec_add,
    vec_sub,
)
from .exponents import classify
from .lattice import (
    CERTIFIED,
    EVEN_TYPE,
    QuadLattice,
    QuotientGate,
    RootVector,
    invariant_form,
    quotient_gate,
    reflection,
    root_vector,
)
from .levelt import MonodromySystem


@dataclass(frozen=True)
class GraphConfig:
    lattice: QuadLattice
    edge_value: int  # -3 for EvenType, -4 for OddType
    max_depth: int = 5
    node_budget: int = 1_000_000

    def __post_init__(self):
        expected = -3 if self.lattice.parity == EVEN_TYPE else -4
        if self.edge_value != expected:
            raise ValueError(
                f"edge value {self.edge_value} does not match parity "
                f"{self.lattice.parity}")
        if self.max_depth < 1 or self.node_budget < 1:
            raise ValueError("max_depth and node_budget must be positive")


def config_for(lattice: QuadLattice, *, max_depth: int = 5,
               node_budget: int = 1_000_000) -> GraphConfig:
    edge = -3 if lattice.parity == EVEN_TYPE else -4
    return GraphConfig(lattice, edge, max_depth, node_budget)


def _size_reduce(basis: list[list[int]], gram: list[list[int]]) -> list[list[int]]:
    """Pairwise integer size reduction of a basis w.r.t. a positive definite
    form; keeps the lattice, shrinks the vectors so enumeration prunes well."""
    b = [list(v) for v in basis]
    k = len(b)
    for _ in range(4 * k * k):
        changed = False
        norms = [bilinear(gram, v, v) for v in b]
        order = sorted(range(k), key=lambda i: norms[i])
        b = [b[i] for i in order]
        norms = [norms[i] for i in order]
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                p = bilinear(gram, b[i], b[j])
                q = (2 * p + norms[j]) // (2 * norms[j])  # round(p / norms[j])
                if q:
                    b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                    norms[i] += q * q * norms[j] - 2 * q * p
                    changed = True
        if not changed:
            break
    return b


def neighbors(cfg: GraphConfig, u) -> list[tuple[int, ...]]:
    """All lattice vectors w with (w,w) = -2 and (u,w) = edge_value.

    The slice {w : (u,w) = e} is an affine coset over the orthogonal
    complement of u, which is positive definite, so the candidates are the
    short vectors of a definite form shifted by a rational offset."""
    g = [list(r) for r in cfg.lattice.gram]
    u = list(u)
    if bilinear(g, u, u) != -2:
        raise ValueError("neighbor enumeration requires a norm -2 vertex")
    row = mat_vec(g, u)
    x0, kernel = integer_kernel_and_solution(row, cfg.edge_value)
    if x0 is None:
        return []
    kernel = _size_reduce(kernel, g)
    m = [[bilinear(g, bi, bj) for bj in kernel] for bi in kernel]
    b = [Fraction(bilinear(g, bi, x0)) for bi in kernel]
    minv = mat_inv(m)
    offset = mat_vec(minv, b)
    c = bilinear(g, x0, x0)
    bound = Fraction(-2) - c + bilinear(minv, b, b)
    out = []
    for z in enumerate_short_vectors(m, bound, offset):
        w = list(x0)
        for zi, bi in zip(z, kernel):
            if zi:
                w = [x + zi * y for x, y in zip(w, bi)]
        if bilinear(g, w, w) == -2:
            out.append(tuple(w))
    out.sort()
    return out


@dataclass(frozen=True)
class PathSearch:
    path: tuple[tuple[int, ...], ...] | None
    budget_exhausted: bool
    nodes_expanded: int


def find_path(cfg: GraphConfig, src, dst) -> PathSearch:
    """Bidirectional breadth-first search for a shortest path of length at
    most max_depth; deterministic (frontiers and children in sorted order)."""
    g = [list(r) for r in cfg.lattice.gram]
    src = tuple(src)
    dst = tuple(dst)
    for end in (src, dst):
        if bilinear(g, list(end), list(end)) != -2:
            raise ValueError("path endpoints must have norm -2")
    if src == dst:
        return PathSearch((src,), False, 0)

    parents_s: dict = {src: None}
    parents_d: dict = {dst: None}
    frontier_s = [src]
    frontier_d = [dst]
    depth_s = depth_d = 0
    expanded = 0

    def build(meet, side_parent_s, side_parent_d):
        left = []
        node = meet
        while node is not None:
            left.append(node)
            node = side_parent_s[node]
        left.reverse()
        node = side_parent_d[meet]
        while node is not None:
            left.append(node)
            node = side_parent_d[node]
        return tuple(left)

    while frontier_s and frontier_d and depth_s + depth_d < cfg.max_depth:
        if len(frontier_s) <= len(frontier_d):
            frontier, parents, other = frontier_s, parents_s, parents_d
            forward = True
        else:
            frontier, parents, other = frontier_d, parents_d, parents_s
            forward = False
        new_frontier = []
        meets = []
        for node in frontier:
            if expanded >= cfg.node_budget:
                return PathSearch(None, True, expanded)
            expanded += 1
            for w in neighbors(cfg, node):
                if w in parents:
                    continue
                parents[w] = node
                new_frontier.append(w)
                if w in other:
                    meets.append(w)
        if meets:
            meet = min(meets)
            return PathSearch(build(meet, parents_s, parents_d), False,
                              expanded)
        new_frontier.sort()
        if forward:
            frontier_s = new_frontier
            depth_s += 1
        else:
            frontier_d = new_frontier
            depth_d += 1
    return PathSearch(None, False, expanded)


@dataclass(frozen=True)
class FactorizationWitness:
    pairs: tuple[tuple[RootVector, RootVector], ...]


def factorize_path(cfg: GraphConfig, path) -> FactorizationWitness:
    """For each edge (u,w): the roots u-w and u-2w (even; both norm +2) or
    u-w and u-3w (odd; both norm +4) with r_u r_w = r_{u-w} r_{u-2w} (resp.
    r_{u-w} r_{u-3w}) and r_{u-w}(u) = w, verified exactly, plus the
    telescoped product identity over the whole path."""
    lat = cfg.lattice
    g = [list(r) for r in lat.gram]
    path = [list(p) for p in path]
    mult = 2 if lat.parity == EVEN_TYPE else 3
    root_norm = 2 if lat.parity == EVEN_TYPE else 4
    pairs = []
    telescoped = identity(lat.n)
    for u, w in zip(path, path[1:]):
        if bilinear(g, u, w) != cfg.edge_value:
            raise ValueError("consecutive path vertices are not adjacent")
        a = root_vector(lat, vec_sub(u, w))
        bvec = vec_sub(u, [mult * x for x in w])
        b = root_vector(lat, bvec)
        if a.norm != root_norm or b.norm != root_norm:
            raise AssertionError("factorization roots have the wrong norm")
        if not (a.is_root and b.is_root):
            raise AssertionError("factorization roots are not integral roots")
        ra, rb = reflection(lat, a), reflection(lat, b)
        ru = reflection(lat, root_vector(lat, u))
        rw = reflection(lat, root_vector(lat, w))
        if not mat_eq(mat_mul(ru, rw), mat_mul(ra, rb)):
            raise AssertionError("reflection product identity failed")
        if mat_vec(ra, u) != w:
            raise AssertionError("r_{u-w} does not swap the edge endpoints")
        pairs.append((a, b))
        telescoped = mat_mul(telescoped, mat_mul(ra, rb))
    if path:
        r_first = reflection(lat, root_vector(lat, path[0]))
        r_last = reflection(lat, root_vector(lat, path[-1]))
        if not mat_eq(mat_mul(r_first, r_last), telescoped):
            raise AssertionError("telescoped product identity failed")
    return FactorizationWitness(tuple(pairs))


def explicit_path_N1_3(n: int) -> list[list[int]]:
    """The 2-edge path for the j = 3 family, built from the norm +2 vector u
    with 6-periodic coordinates (1,-2,2,-1,0,0,...): w = u + v_{n-1} when
    n = 1 (mod 6) (pattern up to m = n-3), w = u + v_{n-2} when n = 3 (mod 6)
    (up to m = n-5). Returns [v_a, w, v_b] in lattice coordinates."""
    from .exponents import FamilyId, make_family
    from .levelt import build

    if n % 2 == 0 or n < 7:
        raise ValueError("n must be odd and at least 7")
    from math import gcd
    if gcd(n + 1, 3) != 1:
        raise ValueError("the j = 3 family requires gcd(n+1, 3) = 1")
    if n % 6 == 1:
        m, through = n - 3, n - 2  # w = u + v_{n-1} (0-indexed n-2)
        ends = (n - 2, n - 1)  # w is adjacent to v_{n-1} and v_n
    elif n % 6 == 3:
        m, through = n - 5, n - 3  # w = u + v_{n-2}
        ends = (n - 3, n - 2)  # w is adjacent to v_{n-2} and v_{n-1}
    else:
        raise ValueError(f"n = {n} is outside both residue constructions")
    pattern = [1, -2, 2, -1, 0, 0]
    u = [pattern[i % 6] if i < m else 0 for i in range(n)]
    w = list(u)
    w[through] += 1
    lat = invariant_form(build(make_family(FamilyId("N1", 3, n, n))))
    g = [list(r) for r in lat.gram]
    if bilinear(g, u, u) != 2:
        raise AssertionError("auxiliary vector does not have norm +2")
    if bilinear(g, w, w) != -2:
        raise AssertionError("constructed midpoint does not have norm -2")
    a = [0] * n
    b = [0] * n
    a[ends[0]], b[ends[1]] = 1, 1
    if bilinear(g, w, a) != -3 or bilinear(g, w, b) != -3:
        raise AssertionError("midpoint pairings are not -3")
    return [a, w, b]


@dataclass(frozen=True)
class CertificateReport:
    status: str  # ThinCertified | PathFoundGateInconclusive | NoPathFound
    path: tuple[tuple[int, ...], ...]
    factorization: tuple[tuple[RootVector, RootVector], ...]
    gate: QuotientGate
    detail: str


THIN_CERTIFIED = "ThinCertified"
PATH_FOUND_GATE_INCONCLUSIVE = "PathFoundGateInconclusive"
NO_PATH_FOUND = "NoPathFound"


def certify(m: MonodromySystem, *, max_depth: int = 5,
            node_budget: int = 1_000_000) -> CertificateReport:
    """Path from v to g.v in the distance graph + infinite-quotient gate."""
    cls = classify(m.pair)
    if not cls.hyperbolic:
        raise ValueError("certificate applies to hyperbolic groups only")
    lat = invariant_form(m)
    cfg = config_for(lat, max_depth=max_depth, node_budget=node_budget)
    gate = quotient_gate(lat)
    src = tuple(1 if i == 0 else 0 for i in range(lat.n))
    gv = tuple(1 if i == 1 else 0 for i in range(lat.n))
    # r_w = r_{-w}, so either sheet of the target certifies; try the one
    # pairing negatively with v first
    targets = [gv, tuple(-x for x in gv)]
    if bilinear([list(r) for r in lat.gram], list(src), list(gv)) > 0:
        targets.reverse()
    exhausted = False
    result = None
    for dst in targets:
        search = find_path(cfg, src, dst)
        exhausted = exhausted or search.budget_exhausted
        if search.path is not None:
            result = search
            break
    if result is None:
        detail = ("node budget exhausted before the depth limit"
                  if exhausted else
                  f"no path within depth {max_depth}")
        return CertificateReport(NO_PATH_FOUND, (), (), gate, detail)
    witness = factorize_path(cfg, result.path)
    status = (THIN_CERTIFIED if gate.verdict == CERTIFIED
              else PATH_FOUND_GATE_INCONCLUSIVE)
    detail = f"path of length {len(result.path) - 1}; {gate.reason}"
    return CertificateReport(status, result.path, witness.pairs, gate, detail)


def component_generators(cfg: GraphConfig, u) -> list[list[list[int]]]:
    """The reflections r_{u - u_j} over the immediate neighbors u_j of u."""
    out = []
    for w in neighbors(cfg, u):
        r = root_vector(cfg.lattice, vec_sub(list(u), list(w)))
        out.append(reflection(cfg.lattice, r))
    return out
