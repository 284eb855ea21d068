"""Exact rational/integer linear algebra, cyclotomic polynomials, Smith normal
form and short-vector enumeration.

Everything here is arbitrary precision: polynomials are lists of ints
(ascending degree), matrices are lists of rows over int or Fraction.
No floating point except for the search-interval guesses inside
enumerate_short_vectors, which are always re-checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
import math
from math import gcd, lcm


# ---------------------------------------------------------------------------
# polynomials (ascending coefficient lists over Z)
# ---------------------------------------------------------------------------

def poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_divmod_exact(p: list[int], q: list[int]) -> list[int] | None:
    """Quotient p/q over Z if the division is exact, else None.

    q must have leading coefficient +-1 (all our divisors are monic).
    """
    p = poly_trim(list(p))
    q = poly_trim(list(q))
    assert q, "division by zero polynomial"
    assert q[-1] in (1, -1)
    if not p:
        return []
    if len(p) < len(q):
        return None
    rem = list(p)
    quot = [0] * (len(p) - len(q) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(q) - 1] // q[-1]
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    if any(rem):
        return None
    return quot


@cache
def euler_phi(d: int) -> int:
    assert d >= 1
    out = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


@cache
def moebius(d: int) -> int:
    assert d >= 1
    out = 1
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


@cache
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Phi_d as an ascending coefficient tuple (monic, degree phi(d))."""
    assert d >= 1
    # z^d - 1 divided by Phi_e for all proper divisors e | d
    p = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            p = poly_divmod_exact(p, list(cyclotomic_poly(e)))
            assert p is not None
    assert len(p) - 1 == euler_phi(d)
    return tuple(p)


def divisors(d: int) -> list[int]:
    out = [e for e in range(1, d + 1) if d % e == 0]
    return out


def is_cyclotomic_product(p: list[int]) -> dict[int, int] | None:
    """If monic p = prod Phi_d^{m_d}, return {d: m_d}; else None.

    Trial division by every Phi_d with phi(d) <= deg p, repeated to
    exhaustion (phi(d) >= sqrt(d/2), so d <= 2*deg^2 suffices).
    """
    p = poly_trim(list(p))
    if not p or p[-1] != 1:
        raise ValueError("is_cyclotomic_product requires a monic polynomial")
    deg = len(p) - 1
    found: dict[int, int] = {}
    d = 1
    while d <= 2 * deg * deg + 2:
        if euler_phi(d) <= len(p) - 1:
            while len(p) > 1:
                q = poly_divmod_exact(p, list(cyclotomic_poly(d)))
                if q is None:
                    break
                found[d] = found.get(d, 0) + 1
                p = q
        d += 1
        if len(p) == 1:
            break
    if p == [1]:
        return found
    return None


# ---------------------------------------------------------------------------
# matrices / vectors
# ---------------------------------------------------------------------------

Vec = list  # list of int | Fraction
Mat = list  # list of rows


def identity(n: int) -> Mat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Mat:
    return [[0] * c for _ in range(r)]


def transpose(m: Mat) -> Mat:
    return [list(row) for row in zip(*m)]


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_add(u: Vec, v: Vec) -> Vec:
    return [x + y for x, y in zip(u, v)]


def vec_sub(u: Vec, v: Vec) -> Vec:
    return [x - y for x, y in zip(u, v)]


def vec_scal(c, v: Vec) -> Vec:
    return [c * x for x in v]


def dot(u: Vec, v: Vec):
    return sum(x * y for x, y in zip(u, v))


def bilinear(g: Mat, u: Vec, v: Vec):
    return dot(u, mat_vec(g, v))


def mat_eq(a: Mat, b: Mat) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def mat_neg(a: Mat) -> Mat:
    return [[-x for x in row] for row in a]


def mat_to_int(a: Mat) -> Mat:
    out = []
    for row in a:
        r = []
        for x in row:
            fx = Fraction(x)
            if fx.denominator != 1:
                raise ValueError("matrix entry %r is not an integer" % (x,))
            r.append(int(fx))
        out.append(r)
    return out


def mat_inv(m: Mat) -> Mat:
    """Exact inverse over Q (Gauss-Jordan). Raises ValueError if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_det(m: Mat) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def nullspace(m: Mat) -> list[Vec]:
    """Basis of the rational kernel of m (list of Fraction vectors)."""
    if not m:
        return []
    rows = [[Fraction(x) for x in row] for row in m]
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def primitive_integer_vector(v: Vec) -> list[int]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    fr = [Fraction(x) for x in v]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    assert g != 0, "zero vector has no primitive scaling"
    return [x // g for x in ints]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


def smith_normal_form(m: Mat) -> SNFResult:
    """left * m * right diagonal with d1 | d2 | ..., left/right unimodular.

    Works for any rectangular integer matrix; diagonal has min(rows, cols)
    entries, nonnegative.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left = identity(rows)
    right = identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            right[r][i] -= q * right[r][j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            right[r][i], right[r][j] = right[r][j], right[r][i]

    s = 0
    while s < min(rows, cols):
        if all(a[i][j] == 0 for i in range(s, rows) for j in range(s, cols)):
            break
        while True:
            # bring the minimal-absolute-value nonzero entry to the pivot
            # on every pass (reducing against a non-minimal pivot blows up)
            best = None
            for i in range(s, rows):
                for j in range(s, cols):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best[0]):
                        best = (abs(a[i][j]), i, j)
            _, bi, bj = best
            if bi != s:
                row_swap(s, bi)
            if bj != s:
                col_swap(s, bj)
            # clear the edging; restart if a remainder creates a smaller pivot
            dirty = False
            for i in range(s + 1, rows):
                if a[i][s] % a[s][s] != 0:
                    row_op(i, s, a[i][s] // a[s][s])
                    dirty = True
                elif a[i][s] != 0:
                    row_op(i, s, a[i][s] // a[s][s])
            for j in range(s + 1, cols):
                if a[s][j] % a[s][s] != 0:
                    col_op(j, s, a[s][j] // a[s][s])
                    dirty = True
                elif a[s][j] != 0:
                    col_op(j, s, a[s][j] // a[s][s])
            if dirty:
                continue
            # pivot must divide the remaining block
            witness = None
            for i in range(s + 1, rows):
                for j in range(s + 1, cols):
                    if a[i][j] % a[s][s] != 0:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            row_op(s, witness, -1)  # add the offending row, loop again
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            left[s] = [-x for x in left[s]]
        s += 1

    diag = [a[i][i] if i < cols else 0 for i in range(min(rows, cols))]
    return SNFResult(tuple(diag),
                     tuple(tuple(r) for r in left),
                     tuple(tuple(r) for r in right))


def integer_kernel_and_solution(row: list[int], target: int):
    """Solve row . x = target over Z.

    Returns (x0, kernel_basis) where kernel_basis is a list of integer
    vectors spanning {x : row . x = 0}; x0 is None when no solution exists.
    """
    n = len(row)
    if all(x == 0 for x in row):
        x0 = [0] * n if target == 0 else None
        return x0, [list(r) for r in identity(n)]
    snf = smith_normal_form([row])
    d = snf.diagonal[0]
    right = [list(r) for r in snf.right]  # columns of right: right[r][c]
    cols = [[right[r][c] for r in range(n)] for c in range(n)]
    sign = snf.left[0][0]  # +-1
    if target * sign % d != 0:
        x0 = None
    else:
        t = target * sign // d
        x0 = [t * x for x in cols[0]]
    return x0, cols[1:]


# ---------------------------------------------------------------------------
# signature (Sylvester inertia) of a symmetric rational matrix
# ---------------------------------------------------------------------------

def signature_of_symmetric(g: Mat) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia, exact congruence diagonalization."""
    n = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    for i in range(n):
        for j in range(n):
            assert a[i][j] == a[j][i], "matrix is not symmetric"
    pos = neg = zero = 0
    idx = list(range(n))

    def sym_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]

    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            # all diagonal zero; find an off-diagonal entry to fold in
            hit = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        hit = (i, j)
                        break
                if hit:
                    break
            if hit is None:
                zero += n - k
                break
            i, j = hit
            # row/col i += row/col j makes a[i][i] = 2*a[i][j] != 0
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            sym_swap(k, piv)
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        # Schur complement of the pivot (congruence update)
        for r in range(k + 1, n):
            if a[r][k] != 0:
                f = a[r][k] / p
                for c in range(k + 1, n):
                    a[r][c] -= f * a[k][c]
        for r in range(k + 1, n):
            for c in range(k + 1, r):
                a[r][c] = a[c][r] = (a[r][c] + a[c][r]) / 2
            a[r][k] = a[k][r] = Fraction(0)
        k += 1
    del idx
    return pos, neg, zero


# ---------------------------------------------------------------------------
# short vectors of a positive definite rational form, with coset offset
# ---------------------------------------------------------------------------

def _ldl(g: Mat):
    """g = U^t D U with U unit upper triangular, D diagonal; exact.

    Raises ValueError unless g is symmetric positive definite.
    """
    n = len(g)
    a = [[Fraction(g[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("form is not symmetric")
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("form is not positive definite")
        u[i][i] = Fraction(1)
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                a[r][c] -= d[i] * u[i][r] * u[i][c]
                a[c][r] = a[r][c]
    return d, u


def enumerate_short_vectors(g: Mat, bound, offset: Vec | None = None) -> list[tuple[int, ...]]:
    """All integer x with (x+offset)^t g (x+offset) <= bound, exactly.

    Fincke-Pohst on the exact U^t D U decomposition; float interval guesses
    are widened and every candidate is re-checked with Fractions, so the
    output is both sound and complete.
    """
    n = len(g)
    bound = Fraction(bound)
    if bound < 0:
        return []
    off = [Fraction(x) for x in (offset if offset is not None else [0] * n)]
    d, u = _ldl(g)
    # the tree walk runs in floats with a generous slack so no candidate is
    # ever pruned by rounding; each leaf is then re-checked exactly
    df = [float(v) for v in d]
    uf = [[float(v) for v in row] for row in u]
    offf = [float(v) for v in off]
    slack = 1e-6 * (1.0 + abs(float(bound)))
    out: list[tuple[int, ...]] = []
    x = [0] * n
    gq = [[Fraction(v) for v in row] for row in g]

    def exact_ok(vec) -> bool:
        y = [Fraction(vec[i]) + off[i] for i in range(n)]
        total = Fraction(0)
        for i in range(n):
            row = gq[i]
            total += y[i] * sum(row[j] * y[j] for j in range(n))
        return total <= bound

    def rec(i: int, rem: float):
        if i < 0:
            if exact_ok(x):
                out.append(tuple(x))
            return
        # center of the allowed interval for y_i = x_i + off_i
        w = offf[i] + sum(uf[i][j] * (x[j] + offf[j])
                          for j in range(i + 1, n))
        rad = math.sqrt(max(rem + slack, 0.0) / df[i])
        lo = math.floor(-w - rad) - 1
        hi = math.ceil(-w + rad) + 1
        for xi in range(lo, hi + 1):
            contrib = df[i] * (xi + w) ** 2
            if contrib <= rem + slack:
                x[i] = xi
                rec(i - 1, rem - contrib)
        x[i] = 0

    rec(n - 1, float(bound))
    out.sort()
    return out
