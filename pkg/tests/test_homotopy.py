import pytest

from dblgpd import catalog as C
from dblgpd import core
from dblgpd import homotopy as H
from dblgpd.groups import cyclic, find_isomorphism, parse_group, symmetric3


def _pi0_brute(g):
    # [DERIVED] components of the graph with an edge between opposite corners of each square
    comp = {o: {o} for o in g.objects}
    for a in g.squares:
        br, tr, bl, tl = g.corners(a)
        for x, y in ((br, tr), (br, bl), (bl, tl)):
            merged = comp[x] | comp[y]
            for o in merged:
                comp[o] = merged
    return sorted({tuple(sorted(c)) for c in comp.values()})


def test_pi0_matches_brute_force(catalog):
    for name, g in catalog.items():
        if g.validation.is_double_groupoid and core.check_filling(g).ok:
            assert [tuple(c) for c in H.pi0(g)] == _pi0_brute(g), name


@pytest.mark.parametrize("gname", ["Z2", "Z3", "S3", "Z2xZ2"])
def test_pi1_of_deloop_is_the_group(gname):
    G = parse_group(gname)
    g = C.deloop(G)
    assert find_isomorphism(H.pi1(g, "*").group, G) is not None
    assert H.pi2(g, "*").order == 1


@pytest.mark.parametrize("gname", ["Z2", "Z3", "Z2xZ2"])
def test_pi2_of_ab_is_the_group(gname):
    A = parse_group(gname)
    g = C.ab(A)
    assert find_isomorphism(H.pi2(g, "*"), A) is not None
    assert H.pi1(g, "*").group.order == 1


def test_pair_is_contractible():
    g = C.build("Pair(0,1,2)")
    assert len(H.pi0(g)) == 1
    for a in g.objects:
        assert H.pi1(g, a).group.order == 1 and H.pi2(g, a).order == 1


def test_pi1_classes_partition_the_corners():
    g = C.build("Tensor(Z/2,Z/3)")
    P = H.pi1(g, "*;*")
    members = sorted(m for ms in P.classes.values() for m in ms)
    assert members == H.G_of(g, "*;*")
    assert find_isomorphism(P.group, cyclic(6)) is not None


def test_filling_is_required(catalog):
    with pytest.raises(H.HomotopyError):
        H.pi1(catalog["NoFill"], "a")
    with pytest.raises(H.HomotopyError):
        H.pi0(catalog["UnitCell"])


def test_weak_equivalences():
    pair = C.build("Pair(0,1)")
    point = C.build("Disc(a)")
    assert H.weak_equivalence(core.terminal_functor(pair, point)).ok
    rep = H.weak_equivalence(core.terminal_functor(C.ab(cyclic(2)), point))
    assert not rep.ok and rep.reasons == ["pi2 at * not an isomorphism"]
    s3 = C.deloop(symmetric3())
    assert H.weak_equivalence(core.identity_functor(s3)).ok


def test_pi_report_shape(catalog):
    rep = H.pi_report(catalog["Deloop(Z/3)"])
    assert rep["pi0"] == [["*"]]
    assert set(rep["pi1"]) == {"*"}
