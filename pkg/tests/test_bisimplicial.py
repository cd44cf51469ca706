import itertools

import pytest

from dblgpd import bisimplicial as B
from dblgpd import catalog as C
from dblgpd import categories as cat
from dblgpd import simplicial as S
from dblgpd.doublenerve import nn
from dblgpd.groups import cyclic


def _dec(n):
    return B.dec(S.nerve(cat.from_group(cyclic(n))))


def test_dec_sizes():
    K = _dec(2)
    for p, q in itertools.product(range(3), repeat=2):
        assert K.size(p, q) == 2 ** (p + 1 + q)


def test_identities():
    for K in (_dec(2), nn(C.build("Pair(0,1)")), B.tensor(S.standard_simplex(1), S.standard_simplex(1))):
        for p, q in itertools.product(range(3), repeat=2):
            assert B.identity_violations(K, p, q) == []


def _brute_wbar(K, n):
    # [DERIVED] staircases x_p in K_{p,n-p} with x_p d^0_v = x_{p+1} d^{p+1}_h
    levels = [K.cells(p, n - p) for p in range(n + 1)]
    return sum(1 for xs in itertools.product(*levels)
               if all(K.dv(p, n - p, 0, xs[p]) == K.dh(p + 1, n - p - 1, p + 1, xs[p + 1])
                      for p in range(n)))


@pytest.mark.parametrize("K", [_dec(2), nn(C.build("Ab(Z/2)")), nn(C.build("Pair(0,1)"))])
def test_wbar_against_staircase_enumeration(K):
    W = B.wbar(K)
    for n in range(4):
        assert W.size(n) == _brute_wbar(K, n)
    for n in range(3):
        assert S.identity_violations(W, n) == []


def test_wbar_of_ab_counts():
    # [DERIVED] a degree-n simplex of W-bar NN Ab(A) is one group element per pair i < j
    W = B.wbar(nn(C.build("Ab(Z/2)")))
    assert [W.size(n) for n in range(5)] == [1, 1, 2, 8, 64]


def test_diag_is_the_diagonal():
    K = nn(C.build("Tensor(Z/2,Z/3)"))
    D = B.diag(K)
    for n in range(3):
        assert D.size(n) == K.size(n, n)
    assert S.identity_violations(D, 2) == []


def test_point_and_tensor():
    P = B.point()
    assert all(P.size(p, q) == 1 for p in range(3) for q in range(3))
    T = B.tensor(S.standard_simplex(1), S.standard_simplex(2))
    assert T.size(1, 1) == 3 * 6


def test_extension_condition():
    assert B.extension_check(_dec(2), 2, 2).ok
    rep = B.extension_check(B.tensor(S.standard_simplex(1), S.standard_simplex(0)), 2, 2)
    assert not rep.ok and "row" in rep.failure["where"] or "column" in rep.failure["where"]


def test_bihomotopy_needs_extension():
    K = B.tensor(S.standard_simplex(1), S.standard_simplex(1))
    with pytest.raises(B.ExtensionRequired):
        B.bihomotopy(K, 1, 1)


def test_bihomotopy_lemma_brute_force():
    K = nn(C.build("Ab(Z/3)"))
    b = B.bihomotopy(K, 1, 1)
    cells = K.cells(1, 1)
    h, v = B.hclasses(K, 1, 1), B.vclasses(K, 1, 1)
    for x, y in itertools.product(cells, repeat=2):
        want = any(h.same(x, z) and v.same(z, y) for z in cells)
        assert B.bihomotopic(K, 1, 1, x, y) == want
        assert b.same(x, y) == want


def test_class_face_maps_are_well_defined():
    maps = B.class_face_maps(nn(C.build("Pair(0,1)")), 1, 1)
    assert set(maps) == {("dh", 0), ("dh", 1), ("dv", 0), ("dv", 1),
                         ("sv", 0), ("sv", 1), ("sh", 0), ("sh", 1)}


def test_phi_star_is_simplicial():
    for name in ("Ab(Z/2)", "Pair(0,1)"):
        assert B.check_phi_star(nn(C.build(name)), 2) == []


def test_unit_and_counit():
    L = S.nerve(cat.from_group(cyclic(2)))
    assert B.check_unit(L, 3) == []
    assert B.check_counit(_dec(2), 3) == []
    assert B.check_triangles(L, _dec(2), 3) == []


def test_literal_counit_breaks_the_triangles():
    L = S.nerve(cat.from_group(cyclic(2)))
    assert B.check_triangles(L, _dec(2), 3, fn=B.counit_literal)


def test_truncate_round_trip():
    T = B.truncate(_dec(2), 2, 2)
    U = B.tabulated_from_json(T.data)
    assert U.bounds == (2, 2)
    assert [U.size(p, 1) for p in range(3)] == [4, 8, 16]
    with pytest.raises(ValueError, match="malformed"):
        B.tabulated_from_json({"levels": {}})
