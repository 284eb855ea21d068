import itertools

import pytest

from hypermono.exact import bilinear, identity, mat_eq, mat_inv, mat_mul, mat_to_int, mat_vec
from hypermono.exponents import FamilyId, make_family
from hypermono.distgraph import (
    NO_PATH_FOUND,
    PATH_FOUND_GATE_INCONCLUSIVE,
    THIN_CERTIFIED,
    certify,
    component_generators,
    config_for,
    explicit_path_N1_3,
    factorize_path,
    find_path,
    neighbors,
)
from hypermono.lattice import EVEN_TYPE, invariant_form, reflection, root_vector
from hypermono.levelt import build, lattice_basis


def family_lattice(fid):
    return invariant_form(build(make_family(fid)))


def test_neighbors_contains_adjacent_basis_vector():
    lat = family_lattice(FamilyId("N1", 1, 5, 5))
    cfg = config_for(lat)
    e1 = (1, 0, 0, 0, 0)
    e2 = (0, 1, 0, 0, 0)
    got = neighbors(cfg, e1)
    assert e2 in got
    g = [list(r) for r in lat.gram]
    for w in got:
        assert bilinear(g, list(w), list(w)) == -2
        assert bilinear(g, list(e1), list(w)) == cfg.edge_value


def test_neighbors_against_brute_force():
    for fid in [FamilyId("M1", 1, None, 5), FamilyId("N1", 1, 1, 5),
                FamilyId("N2", 4, 1, 5)]:
        lat = family_lattice(fid)
        cfg = config_for(lat)
        g = [list(r) for r in lat.gram]
        u = [1, 0, 0, 0, 0]
        got = set(neighbors(cfg, u))
        box = 8
        brute = set()
        for w in itertools.product(range(-box, box + 1), repeat=5):
            wl = list(w)
            if bilinear(g, wl, wl) == -2 and bilinear(g, u, wl) == cfg.edge_value:
                brute.add(w)
        # everything the brute force finds in its box must be reported
        assert brute <= got, fid
        for w in got:
            assert bilinear(g, list(w), list(w)) == -2


def test_neighbors_rejects_wrong_norm():
    lat = family_lattice(FamilyId("N1", 1, 5, 5))
    with pytest.raises(ValueError):
        neighbors(config_for(lat), (1, 1, 0, 0, 0))


def test_rotation_equivariance():
    m = build(make_family(FamilyId("N1", 1, 7, 7)))
    lat = invariant_form(m)
    cfg = config_for(lat)
    basis = lattice_basis(m)
    t = [list(col) for col in zip(*basis)]
    gl = mat_to_int(mat_mul(mat_mul(mat_inv(t), m.rotation_matrix()), t))
    u = (1, 0, 0, 0, 0, 0, 0)
    gu = tuple(mat_vec(gl, list(u)))
    lhs = {tuple(mat_vec(gl, list(w))) for w in neighbors(cfg, u)}
    assert lhs == set(neighbors(cfg, gu))


def test_find_path_trivial_and_short():
    lat = family_lattice(FamilyId("N1", 1, 5, 5))
    cfg = config_for(lat)
    e1 = (1, 0, 0, 0, 0)
    e2 = (0, 1, 0, 0, 0)
    res = find_path(cfg, e1, e1)
    assert res.path == (e1,)
    res = find_path(cfg, e1, e2)
    assert res.path == (e1, e2)


def test_lemma_basic_property_suite():
    # 1000 premise-satisfying pairs per Lemma: norm -2 vertices u, w with
    # (u, w) = -3 (even form) or -4 (odd form); all conclusions exact
    total = 0
    for fid, want_parity in [(FamilyId("N1", 1, 7, 7), "even"),
                             (FamilyId("N1", 1, 1, 7), "odd")]:
        lat = family_lattice(fid)
        cfg = config_for(lat)
        mult = 2 if lat.parity == EVEN_TYPE else 3
        root_norm = 2 if lat.parity == EVEN_TYPE else 4
        seen = set()
        frontier = [tuple(1 if i == 0 else 0 for i in range(lat.n))]
        count = 0
        while frontier and count < 500:
            nxt = []
            for u in frontier:
                for w in neighbors(cfg, u):
                    if count >= 500:
                        break
                    if (u, w) in seen:
                        continue
                    seen.add((u, w))
                    nxt.append(w)
                    a = [x - y for x, y in zip(u, w)]
                    b = [x - mult * y for x, y in zip(u, w)]
                    g = [list(r) for r in lat.gram]
                    assert bilinear(g, a, a) == root_norm
                    assert bilinear(g, b, b) == root_norm
                    ra = reflection(lat, root_vector(lat, a))
                    rb = reflection(lat, root_vector(lat, b))
                    ru = reflection(lat, root_vector(lat, list(u)))
                    rw = reflection(lat, root_vector(lat, list(w)))
                    assert mat_eq(mat_mul(ru, rw), mat_mul(ra, rb))
                    assert mat_vec(ra, list(u)) == list(w)
                    count += 1
            frontier = nxt
        assert count == 500, fid
        total += count
    assert total == 1000


# printed 2x2 models of the factorization lemma, on the basis (u, w)
def two_dim_reflections(gram, mult):
    lat_g = gram

    def refl(r):
        gr = mat_vec(lat_g, r)
        norm = bilinear(lat_g, r, r)
        return [[(1 if i == j else 0) - 2 * gr[j] * r[i] // norm
                 for j in range(2)] for i in range(2)]

    ru = refl([1, 0])
    rw = refl([0, 1])
    ruw = refl([1, -1])
    rub = refl([1, -mult])
    return ru, rw, ruw, rub


def test_lemma_basic_printed_matrices_even():
    ru, rw, ruw, ru2w = two_dim_reflections([[-2, -3], [-3, -2]], 2)
    assert ru == [[-1, -3], [0, 1]]
    assert rw == [[1, 0], [-3, -1]]
    assert ruw == [[0, 1], [1, 0]]
    assert ru2w == [[-3, -1], [8, 3]]
    assert mat_eq(mat_mul(ru, rw), mat_mul(ruw, ru2w))


def test_lemma_basic_printed_matrices_odd():
    ru, rw, ruw, ru3w = two_dim_reflections([[-2, -4], [-4, -2]], 3)
    assert ru == [[-1, -4], [0, 1]]
    assert rw == [[1, 0], [-4, -1]]
    assert ruw == [[0, 1], [1, 0]]
    assert ru3w == [[-4, -1], [15, 4]]
    assert mat_eq(mat_mul(ru, rw), mat_mul(ruw, ru3w))


def test_factorize_path_empty_and_full():
    lat = family_lattice(FamilyId("N1", 1, 5, 5))
    cfg = config_for(lat)
    assert factorize_path(cfg, []).pairs == ()
    e1 = (1, 0, 0, 0, 0)
    res = find_path(cfg, e1, (0, 0, 1, 0, 0), )
    assert res.path is not None
    witness = factorize_path(cfg, res.path)
    assert len(witness.pairs) == len(res.path) - 1
    for a, b in witness.pairs:
        assert a.norm == 2 and b.norm == 2 and a.is_root and b.is_root


def test_explicit_path_n1_3():
    for n in (7, 13):
        path = explicit_path_N1_3(n)
        lat = family_lattice(FamilyId("N1", 3, n, n))
        factorize_path(config_for(lat), path)  # raises if not a valid path
    with pytest.raises(ValueError):
        explicit_path_N1_3(11)  # gcd(12, 3) = 3: not in the family


def test_explicit_path_n9():
    # n = 9 is a valid member (gcd(10,3) = 1); residue 3 mod 6 construction
    path = explicit_path_N1_3(9)
    lat = family_lattice(FamilyId("N1", 3, 9, 9))
    factorize_path(config_for(lat), path)


def test_certify_statuses():
    rep = certify(build(make_family(FamilyId("N1", 1, 7, 7))))
    assert rep.status == THIN_CERTIFIED
    assert len(rep.path) == 2  # single edge v -> Av
    rep = certify(build(make_family(FamilyId("N1", 1, 1, 9))))
    assert rep.status == PATH_FOUND_GATE_INCONCLUSIVE  # odd gate needs n >= 30
    rep = certify(build(make_family(FamilyId("N4", 1, 1, 5))))
    # the +-sheet convention finds a one-edge path; the odd gate stays open
    assert rep.status == PATH_FOUND_GATE_INCONCLUSIVE


def test_certify_secondthin_instance():
    rep = certify(build(make_family(FamilyId("N1", 5, 15, 15))))
    assert rep.path and len(rep.path) - 1 <= 5


def test_component_generators():
    lat = family_lattice(FamilyId("N1", 1, 5, 5))
    cfg = config_for(lat)
    gens = component_generators(cfg, (1, 0, 0, 0, 0))
    assert len(gens) >= 2
    g = [list(r) for r in lat.gram]
    from hypermono.exact import transpose
    for r in gens:
        assert mat_eq(mat_mul(r, r), identity(5))
        assert mat_eq(mat_mul(mat_mul(transpose(r), g), r), g)
