import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypermono.exact import (
    SNFResult,
    bilinear,
    cyclotomic_poly,
    enumerate_short_vectors,
    euler_phi,
    is_cyclotomic_product,
    mat_det,
    mat_inv,
    mat_mul,
    nullspace,
    poly_divmod_exact,
    poly_mul,
    signature_of_symmetric,
    smith_normal_form,
)


def test_cyclotomic_poly_small():
    assert list(cyclotomic_poly(1)) == [-1, 1]
    assert list(cyclotomic_poly(4)) == [1, 0, 1]
    assert list(cyclotomic_poly(6)) == [1, -1, 1]


def test_cyclotomic_poly_divides_zd_minus_1():
    for d in range(1, 201):
        p = list(cyclotomic_poly(d))
        assert len(p) - 1 == euler_phi(d)
        zd = [-1] + [0] * (d - 1) + [1]
        assert poly_divmod_exact(zd, p) is not None


def test_is_cyclotomic_product():
    assert is_cyclotomic_product([1, 1, 1]) == {3: 1}
    assert is_cyclotomic_product([-1, -1, 1]) is None
    # (z^5 - 1)/(z - 1) * (z + 1)
    p = poly_mul([1, 1, 1, 1, 1], [1, 1])
    assert is_cyclotomic_product(p) == {5: 1, 2: 1}


def test_is_cyclotomic_product_closed_under_multiplication():
    rng = random.Random(1)
    for _ in range(50):
        ds = [rng.randint(1, 12) for _ in range(3)]
        p = [1]
        for d in ds:
            p = poly_mul(p, list(cyclotomic_poly(d)))
        got = is_cyclotomic_product(p)
        assert got is not None
        assert sorted(sum(([d] * m for d, m in got.items()), [])) == sorted(ds)


def _check_snf(m):
    res = smith_normal_form(m)
    assert isinstance(res, SNFResult)
    n = len(m)
    prod = mat_mul(mat_mul(res.left, m), res.right)
    for i in range(n):
        for j in range(len(m[0])):
            expect = res.diagonal[i] if i == j and i < len(res.diagonal) else 0
            assert prod[i][j] == expect
    for a, b in zip(res.diagonal, res.diagonal[1:]):
        if b:
            assert a != 0 and b % a == 0
    assert abs(mat_det(res.left)) == 1
    assert abs(mat_det(res.right)) == 1
    return res


def test_snf_examples():
    assert _check_snf([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).diagonal == (1, 1, 1)
    assert _check_snf([[2, 1], [1, 2]]).diagonal == (1, 3)
    assert _check_snf([[2, 0], [0, 4]]).diagonal == (2, 4)


@settings(max_examples=120, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_snf_random(m):
    res = _check_snf(m)
    det = mat_det(m)
    prod = 1
    for d in res.diagonal:
        prod *= d
    assert prod == abs(det)


def test_signature_examples():
    assert signature_of_symmetric([[1, 0, 0], [0, 1, 0], [0, 0, -1]]) == (2, 1, 0)
    assert signature_of_symmetric([[0, 0], [0, 0]]) == (0, 0, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.sampled_from([[[1, 0, 0], [0, 1, -1], [0, 0, 1]],
                        [[1, 2, 0], [0, 1, 0], [1, 0, 1]],
                        [[0, 1, 0], [1, 0, 0], [0, 0, -1]]]))
def test_signature_congruence_invariant(m, g):
    sym = [[m[i][j] + m[j][i] for j in range(3)] for i in range(3)]
    gt = [[g[j][i] for j in range(3)] for i in range(3)]
    assert signature_of_symmetric(mat_mul(mat_mul(gt, sym), g)) == \
        signature_of_symmetric(sym)


def test_short_vectors_examples():
    got = set(enumerate_short_vectors([[2, 0], [0, 2]], 2))
    assert got == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(enumerate_short_vectors([[2, 0], [0, 2]], 1)) == {(0, 0)}
    assert len(enumerate_short_vectors([[2, 1], [1, 2]], 2)) == 7


def test_short_vectors_rejects_indefinite():
    with pytest.raises(ValueError):
        enumerate_short_vectors([[1, 0], [0, -1]], 4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_short_vectors_vs_brute_force(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3, 4])
    while True:
        b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        g = [[sum(b[k][i] * b[k][j] for k in range(n)) for j in range(n)]
             for i in range(n)]
        if mat_det(g) != 0 and all(abs(x) <= 10 for row in g for x in row):
            break
    off = [Fraction(rng.randint(-2, 2), rng.choice([1, 2])) for _ in range(n)]
    bound = Fraction(rng.randint(1, 20))
    got = set(enumerate_short_vectors(g, bound, off))

    def qval(x):
        y = [Fraction(x[i]) + off[i] for i in range(n)]
        return bilinear(g, y, y)

    for v in got:
        assert qval(v) <= bound
    box = 6
    for x in itertools.product(range(-box, box + 1), repeat=n):
        if qval(x) <= bound:
            assert x in got


def test_nullspace_and_inverse():
    assert nullspace([[1, 1, 0], [0, 0, 1]]) != []
    m = [[2, 1], [1, 1]]
    inv = mat_inv(m)
    assert mat_mul(m, inv) == [[1, 0], [0, 1]]
