"""Invariant quadratic form, normalized lattice Gram matrix, parity,
invariant factors, k-roots/reflections and the infinite-quotient gates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import (
    bilinear,
    mat_eq,
    mat_inv,
    mat_mul,
    mat_to_int,
    mat_vec,
    nullspace,
    signature_of_symmetric,
    smith_normal_form,
    transpose,
)
from .levelt import MonodromySystem, lattice_basis

EVEN_TYPE = "EvenType"
ODD_TYPE = "OddType"


def classify_parity(gram) -> str | None:
    entries = [x for row in gram for x in row]
    diag = [gram[i][i] for i in range(len(gram))]
    some_odd = any(x % 2 for x in entries)
    if some_odd:
        if all(d % 2 == 0 for d in diag):
            return EVEN_TYPE
        return None
    return ODD_TYPE


@dataclass(frozen=True)
class QuadLattice:
    gram: tuple[tuple[int, ...], ...]
    parity: str | None
    inv_factors: tuple[int, ...]  # nontrivial (> 1) invariant factors, sorted
    signature: tuple[int, int]

    @property
    def n(self) -> int:
        return len(self.gram)

    @classmethod
    def from_gram(cls, gram) -> "QuadLattice":
        g = [[int(x) for x in row] for row in gram]
        n = len(g)
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        pos, neg, zero = signature_of_symmetric(g)
        if zero:
            raise ValueError("Gram matrix is degenerate")
        snf = smith_normal_form(g)
        factors = tuple(sorted(d for d in snf.diagonal if d > 1))
        return cls(tuple(tuple(r) for r in g), classify_parity(g), factors,
                   (pos, neg))


@dataclass(frozen=True)
class RootVector:
    vec: tuple[int, ...]
    norm: int
    is_root: bool


@dataclass(frozen=True)
class QuotientGate:
    verdict: str  # "InfiniteIndexCertified" | "Inconclusive"
    reason: str


CERTIFIED = "InfiniteIndexCertified"
INCONCLUSIVE = "Inconclusive"


def _solve_invariant_form_direct(m: MonodromySystem):
    """Nullspace of {A^t f A = f, B^t f B = f, f symmetric}; unknowns are the
    upper-triangle entries. Returns a basis of solutions as full matrices."""
    n = m.n
    idx = {}
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(idx)
    nun = len(idx)

    def entry(mat, i, j):
        return mat[i][j]

    rows = []
    for gen in (m.A, m.B):
        for r in range(n):
            for c in range(r, n):
                # (g^t f g - f)[r][c] = sum_{i,j} g[i][r] f[i][j] g[j][c] - f[r][c]
                coeff = [0] * nun
                for i in range(n):
                    gir = gen[i][r]
                    if not gir:
                        continue
                    for j in range(n):
                        gjc = gen[j][c]
                        if not gjc:
                            continue
                        k = idx[(i, j)] if i <= j else idx[(j, i)]
                        coeff[k] += gir * gjc
                coeff[idx[(r, c)]] -= 1
                rows.append(coeff)
    sols = nullspace(rows)
    out = []
    for s in sols:
        f = [[None] * n for _ in range(n)]
        for (i, j), k in idx.items():
            f[i][j] = f[j][i] = s[k]
        out.append(f)
    return out


def _solve_invariant_form_fast(m: MonodromySystem):
    """Use f v = -e_n (the normalized pairing identity) plus invariance:
    f (g^i v) = -(row n of g^{-i})^t on the lattice basis, then verify."""
    n = m.n
    g = m.basis_generator()
    ginv = mat_to_int(mat_inv(g))
    basis = lattice_basis(m)
    rhs_cols = []
    gi = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(n):
        rhs_cols.append([-Fraction(x) for x in gi[n - 1]])
        gi = mat_mul(ginv, gi)
    bmat = [list(col) for col in zip(*basis)]  # columns are basis vectors
    rhs = [list(col) for col in zip(*rhs_cols)]
    f = mat_mul(rhs, mat_inv(bmat))
    return f


def invariant_form(m: MonodromySystem, *, _direct_threshold: int = 12) -> QuadLattice:
    n = m.n
    if n <= _direct_threshold:
        sols = _solve_invariant_form_direct(m)
        if len(sols) != 1:
            raise ValueError(
                f"invariant form space has dimension {len(sols)}; "
                "group is not irreducible/primitive in the expected sense")
        f = sols[0]
    else:
        f = _solve_invariant_form_fast(m)
    # verify invariance and symmetry exactly
    for gen in (m.A, m.B):
        gl = [list(r) for r in gen]
        if not mat_eq(mat_mul(mat_mul(transpose(gl), f), gl), f):
            raise AssertionError("invariant form verification failed")
    if not mat_eq(f, transpose(f)):
        raise AssertionError("invariant form is not symmetric")
    # normalize (v, v) = -2
    vv = bilinear(f, list(m.v), list(m.v))
    if vv == 0:
        raise ValueError("Cartan vector is isotropic; cannot normalize")
    f = [[x * Fraction(-2) / vv for x in row] for row in f]
    basis = lattice_basis(m)
    gram = [[bilinear(f, bi, bj) for bj in basis] for bi in basis]
    gram = mat_to_int(gram)
    lat = QuadLattice.from_gram(gram)
    if lat.parity is None:
        raise ValueError("Gram matrix has mixed parity pattern")
    return lat


def root_vector(l: QuadLattice, vec) -> RootVector:
    v = [int(x) for x in vec]
    k = bilinear([list(r) for r in l.gram], v, v)
    gv = mat_vec([list(r) for r in l.gram], v)
    is_root = k != 0 and all((2 * x) % k == 0 for x in gv)
    return RootVector(tuple(v), k, is_root)


def reflection(l: QuadLattice, r: RootVector) -> list[list[int]]:
    """Matrix of y -> y - 2(r,y)/(r,r) r on the lattice basis (integral)."""
    if not r.is_root:
        raise ValueError("vector is not a k-root; reflection is not integral")
    n = l.n
    gv = mat_vec([list(row) for row in l.gram], list(r.vec))
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            c = (1 if i == j else 0) - 2 * gv[j] * r.vec[i] // r.norm
            row.append(c)
        out.append(row)
    return out


def two_elementary(l: QuadLattice) -> bool:
    return all(d == 2 for d in l.inv_factors)


# Invariant-factor multisets for which the R_2 quotient may be finite,
# by dimension (odd n >= 5); dimensions not listed have no exceptions.
_EXCEPTIONAL_FACTORS: dict[int, list[tuple[int, ...]]] = {
    5: [(2, 3), (4,), (2, 3, 3, 3), (2, 2, 2, 4, 4), (4, 4), (4, 8), (4, 16)],
    7: [(2, 3, 3), (2, 2, 4), (3, 4), (2, 5), (2, 3), (4,)],
    9: [(8,), (4, 4), (3, 4), (4,), (3, 3)],
    11: [],
    13: [(4,)],
}


def quotient_gate(l: QuadLattice) -> QuotientGate:
    n = l.n
    if sorted(l.signature) != [1, n - 1]:
        raise ValueError("quotient gate requires a hyperbolic lattice")
    if l.parity == EVEN_TYPE:
        if n % 2 == 0 or n < 5:
            return QuotientGate(INCONCLUSIVE, f"even lattice, dimension {n} outside the odd >=5 range")
        if two_elementary(l):
            return QuotientGate(INCONCLUSIVE, "even lattice is two-elementary")
        key = tuple(sorted(l.inv_factors))
        if key in _EXCEPTIONAL_FACTORS.get(n, []):
            return QuotientGate(INCONCLUSIVE,
                                f"invariant factors {key} are on the exceptional list for dimension {n}")
        return QuotientGate(CERTIFIED,
                            f"even, dim {n}, not two-elementary, factors {key} not exceptional: "
                            "reflection subgroup R_2 has infinite index")
    if l.parity == ODD_TYPE:
        if n >= 30:
            return QuotientGate(CERTIFIED,
                                f"odd form in dimension {n} >= 30: reflective quotient is infinite")
        return QuotientGate(INCONCLUSIVE, f"odd form, dimension {n} < 30")
    return QuotientGate(INCONCLUSIVE, "parity undetermined")
