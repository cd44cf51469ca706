import itertools

import pytest

from dblgpd import categories as cat
from dblgpd.groups import (GroupError, GroupTable, cyclic, direct_product, find_isomorphism,
                           generators, is_homomorphism, parse_group, relabel, symmetric3)


def _order_profile(g):
    return sorted(g.element_order(a) for a in g.elements)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_cyclic_is_a_group(n):
    g = cyclic(n)
    g.check()
    assert g.order == n and g.is_abelian()
    assert max(_order_profile(g)) == n


def test_parse_forms_agree():
    for a, b in (("Z2", "Z/2"), ("C3", "Z3"), ("Z2xZ2", "Z/2×Z/2")):
        assert find_isomorphism(parse_group(a), parse_group(b)) is not None
    assert parse_group("1").order == 1
    with pytest.raises(GroupError):
        parse_group("")
    with pytest.raises(GroupError):
        parse_group("Q8")


def test_isomorphism_search_against_order_profiles():
    # [DERIVED] isomorphism classes of small abelian groups differ in their order profile
    pairs = [("Z2xZ3", "Z6", True), ("Z2xZ2", "Z4", False), ("S3", "Z6", False),
             ("Z3xZ2", "Z2xZ3", True)]
    for a, b, same in pairs:
        g, h = parse_group(a), parse_group(b)
        phi = find_isomorphism(g, h)
        assert (phi is not None) == same
        if phi:
            assert is_homomorphism(g, h, phi)
            assert sorted(phi.values()) == sorted(h.elements)
        else:
            assert _order_profile(g) != _order_profile(h) or g.is_abelian() != h.is_abelian()


def test_s3():
    g = symmetric3()
    g.check()
    assert g.order == 6 and not g.is_abelian()
    assert _order_profile(g) == [1, 2, 2, 2, 3, 3]
    gens = generators(g)
    assert 1 <= len(gens) <= 2


def test_direct_product_and_relabel():
    g = direct_product(cyclic(2), cyclic(3))
    assert g.order == 6 and g.is_abelian()
    h = relabel(cyclic(3), {"0": "a", "1": "b", "2": "c"})
    assert h.mul("b", "c") == "a"


def test_json_round_trip_and_bad_tables():
    g = symmetric3()
    h = GroupTable.from_json(g.to_json())
    assert all(g.mul(a, b) == h.mul(a, b) for a in g.elements for b in g.elements)
    with pytest.raises(GroupError):
        GroupTable.from_function(["a", "b"], lambda x, y: "a")


def test_categories_satisfy_laws():
    for C in (cat.from_group(symmetric3()), cat.pair_groupoid("abc"), cat.discrete("xy"),
              cat.ordinal(3)):
        assert C.check() == []
    assert cat.pair_groupoid("ab").is_groupoid()
    assert not cat.ordinal(1).is_groupoid()
    assert len(cat.ordinal(3).mors) == 10


def test_category_check_finds_broken_composite():
    C = cat.pair_groupoid("ab")
    comp = dict(C.comp)
    comp[("(a,b)", "(b,a)")] = "(b,b)"
    bad = cat.Category(C.objects, C.mors, comp, C.ident).check()
    assert bad and bad[0][0] == "composite has wrong boundary"


def test_associativity_brute_force_on_products():
    g = parse_group("Z2xZ2xZ2")
    for a, b, c in itertools.product(g.elements, repeat=3):
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
