import math

import pytest

from dblgpd import catalog as C


def test_standard_catalog_order(catalog):
    assert list(catalog) == ["Disc(a,b)", "Ab(Z/2)", "Deloop(Z/3)", "Pair(0,1)",
                             "Tensor(Z/2,Z/2)", "NoFill", "UnitCell"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pair_sizes(n):
    # [DERIVED] one morphism per ordered pair, one square per corner quadruple
    g = C.pair([str(i) for i in range(n)])
    assert (len(g.objects), len(g.hmors), len(g.vmors), len(g.squares)) == (n, n * n, n * n, n ** 4)
    assert g.validation.is_double_groupoid


@pytest.mark.parametrize("expr, sizes", [
    ("Deloop(S3)", (1, 6, 1, 6)), ("Ab(Z2xZ2)", (1, 1, 1, 4)), ("Disc(x,y,z)", (3, 3, 3, 3)),
    ("Tensor(Z/2,Z/3)", (1, 2, 3, 6)),
])
def test_builder_sizes(expr, sizes):
    g = C.build(expr)
    assert (len(g.objects), len(g.hmors), len(g.vmors), len(g.squares)) == sizes
    assert g.validation.ok


def test_expression_forms_agree():
    a = C.build("Pair(0,1)")
    for expr in ("pair{0,1}", "pair 0,1", "PAIR(0, 1)"):
        assert sorted(C.build(expr).squares) == sorted(a.squares)
    assert len(C.build("deloop Z3").hmors) == 3


@pytest.mark.parametrize("expr, err", [
    ("Frob(1)", C.CatalogError), ("Ab(S3)", C.CatalogError), ("Disc()", C.CatalogError),
    ("Pair(a,a)", C.CatalogError), ("Deloop(Q8)", C.CatalogError), ("Tensor(Z2)", C.CatalogError),
])
def test_bad_expressions(expr, err):
    with pytest.raises(err):
        C.build(expr)


def test_tensor_of_groups_squares_are_pairs():
    g = C.build("Tensor(Z/2,Z/2)")
    assert len(g.squares) == math.prod((2, 2))
    assert g.validation.is_double_groupoid


def test_restrict_squares_keeps_the_axioms_but_not_filling():
    from dblgpd.core import check_filling
    g = C.build("Pair(0,1)")
    keep = set(g.id_h_sq.values()) | set(g.id_v_sq.values())
    h = C.restrict_squares(g, keep, "thin")
    assert len(h.squares) == 6
    assert h.validation.ok and not check_filling(h).ok
    with pytest.raises(C.CatalogError, match="identity square"):
        C.restrict_squares(g, ["s(0,0,0,0)"], "bad")
