import itertools
import json
from math import comb

import pytest

from dblgpd import categories as cat
from dblgpd import simplicial as S
from dblgpd.groups import cyclic, find_isomorphism, symmetric3


@pytest.mark.parametrize("n", range(4))
def test_nerve_sizes(n):
    # [DERIVED] n composable arrows: |G|^n for a group, k^(n+1) for the pair groupoid
    assert S.nerve(cat.from_group(symmetric3())).size(n) == 6 ** n
    assert S.nerve(cat.pair_groupoid("abc")).size(n) == 3 ** (n + 1)
    assert S.standard_simplex(2).size(n) == comb(n + 3, n + 1)


def test_identities_exhaustive():
    for L in (S.nerve(cat.from_group(cyclic(3))), S.nerve(cat.ordinal(2)), S.standard_simplex(2)):
        for n in range(3):
            assert S.identity_violations(L, n) == []


def test_identity_checker_catches_a_bad_face():
    T = S.truncate(S.nerve(cat.from_group(cyclic(2))), 3)
    data = T.to_json()
    x = data["levels"][2][1]
    data["d"][2][0][x] = data["levels"][1][0] if data["d"][2][0][x] != data["levels"][1][0] \
        else data["levels"][1][1]
    bad = S.identity_violations(S.tabulated_from_json(data), 2)
    assert bad and all(b[0].startswith("d_") for b in bad)


def _brute_horns(L, n, k):
    cells = L.simplices(n - 1)
    idx = [i for i in range(n + 1) if i != k]
    out = 0
    for tup in itertools.product(cells, repeat=len(idx)):
        f = dict(zip(idx, tup))
        if all(L.face(n - 1, i, f[j]) == L.face(n - 1, j - 1, f[i])
               for i in idx for j in idx if i < j):
            out += 1
    return out


def test_horn_enumeration_matches_brute_force():
    for L in (S.nerve(cat.from_group(cyclic(2))), S.nerve(cat.ordinal(2)), S.standard_simplex(1)):
        for n in (1, 2, 3):
            for k in range(n + 1):
                assert len(S.horn_table(L, n, k)) == _brute_horns(L, n, k)


def test_kan():
    assert S.kan_check(S.nerve(cat.from_group(symmetric3())), 3).ok
    assert S.kan_check(S.nerve(cat.pair_groupoid("ab")), 3).unique_fillers(2)
    rep = S.kan_check(S.standard_simplex(1), 2)
    assert not rep.ok
    w = rep.failure
    assert (w["n"], w["k"]) == (2, 0)
    facets = {int(i): f for i, f in w["facets"].items()}
    assert S.fillers(S.standard_simplex(1), 2, facets) == []
    # a non-groupoid category has a nerve that is not Kan
    assert not S.kan_check(S.nerve(cat.ordinal(1)), 2).ok


def test_homotopy_groups_of_nerves():
    L = S.nerve(cat.from_group(symmetric3()))
    assert find_isomorphism(S.pi_n(L, "*", 1), symmetric3()) is not None
    assert S.pi_n(L, "*", 2).order == 1
    assert S.pi0(S.nerve(cat.discrete("xy"))) == [["x"], ["y"]]
    assert S.pi0(S.nerve(cat.pair_groupoid("xy"))) == [["x", "y"]]


def test_fundamental_groupoid_of_pair_groupoid():
    P = S.fundamental_groupoid(S.nerve(cat.pair_groupoid("ab")))
    assert P.is_groupoid() and len(P.mors) == 4


def test_homotopy_in_standard_simplex_is_equality():
    L = S.standard_simplex(2)
    for x in L.simplices(1):
        assert S.homotopic(L, x, x)


def test_truncation_round_trip(tmp_path):
    T = S.truncate(S.nerve(cat.from_group(cyclic(3))), 2)
    p = tmp_path / "t.json"
    p.write_text(json.dumps(T.to_json()))
    U = S.load_tabulated(str(p))
    assert [U.size(n) for n in range(3)] == [1, 3, 9]
    with pytest.raises(S.TruncationError):
        U.degeneracy(2, 0, U.simplices(2)[0])
    with pytest.raises(ValueError, match="malformed"):
        S.tabulated_from_json({"levels": [[]]})
