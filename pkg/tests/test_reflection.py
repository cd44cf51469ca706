import pytest

from dblgpd import bisimplicial as B
from dblgpd import catalog as C
from dblgpd import categories as cat
from dblgpd import core
from dblgpd import simplicial as S
from dblgpd.doublenerve import nn
from dblgpd.groups import cyclic
from dblgpd.reflection import (CertificationError, canonical_iso, certify, check_eps, pp, pp_map,
                               restrict, round_trip, verify_2type)


def test_pp_of_nn_has_the_same_counts(catalog):
    for name in ("Ab(Z/2)", "Deloop(Z/3)", "Pair(0,1)", "Tensor(Z/2,Z/2)"):
        g = catalog[name]
        P = pp(nn(g))
        assert (len(P.g.objects), len(P.g.hmors), len(P.g.vmors), len(P.g.squares)) == \
            (len(g.objects), len(g.hmors), len(g.vmors), len(g.squares))
        assert P.g.validation.is_double_groupoid and core.check_filling(P.g).ok


def test_canonical_iso(catalog):
    F = canonical_iso(catalog["Pair(0,1)"])
    assert F.is_isomorphism()


def test_certification_refuses(catalog):
    K = nn(catalog["NoFill"])
    cert = certify(K)
    assert not cert.ok and cert.reasons
    with pytest.raises(CertificationError):
        pp(K)


def test_eps_restricts_to_unit_grids(catalog):
    K = nn(catalog["Pair(0,1)"])
    P = pp(K)
    assert check_eps(P, 2) == []
    x = K.cells(2, 2)[7]
    y = restrict(K, 2, 2, x, (0, 1), (1, 2))
    assert y in K.level(1, 1).index


def test_pp_map_of_identity(catalog):
    P = pp(nn(catalog["Ab(Z/2)"]))
    F = pp_map(P, P, lambda p, q, x: x)
    assert not F.check() and F.is_isomorphism()


def test_round_trip_larger():
    rt = round_trip(C.build("Deloop(S3)"))
    assert rt.ok


def test_dec_of_nerve_gives_the_group():
    # [PAPER] Dec N(G) is certified and reflects to a 2-type with pi1 = G
    K = B.dec(S.nerve(cat.from_group(cyclic(2))))
    P = pp(K)
    assert (len(P.g.objects), len(P.g.hmors), len(P.g.vmors), len(P.g.squares)) == (2, 4, 4, 8)
    rep = verify_2type(K, "Z/2")
    assert rep["ok"] and rep["pi0"]["pp"] == [sorted(P.g.objects)]


def test_verify_2type_needs_levels():
    K = B.truncate(B.dec(S.nerve(cat.from_group(cyclic(2)))), 2, 2)
    with pytest.raises((S.TruncationError, CertificationError)):
        verify_2type(K)
