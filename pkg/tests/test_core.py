import json

import pytest

from dblgpd import catalog as C
from dblgpd import core


def test_json_round_trip(catalog):
    for name, g in catalog.items():
        h = core.loads(core.dumps(g), name=name)
        assert core.to_json(h) == core.to_json(g)
        assert h.validation.ok


def test_save_and_load(tmp_path, catalog):
    p = tmp_path / "g.json"
    core.save(catalog["Pair(0,1)"], str(p))
    assert core.to_json(core.load(str(p))) == core.to_json(catalog["Pair(0,1)"])


@pytest.mark.parametrize("edit, message", [
    (lambda d: d.pop("squares"), "missing field 'squares'"),
    (lambda d: d["hmors"].append(dict(d["hmors"][0])), "duplicate id"),
    (lambda d: d["squares"][0].update(sh="nope"), "unknown id 'nope'"),
    (lambda d: d["comp_h_mor"].pop(), "partial table incomplete"),
    (lambda d: d["comp_v_sq"].append(["x"]), "expected [left, right, result]"),
])
def test_structural_errors_name_the_problem(catalog, edit, message):
    d = core.to_json(catalog["Pair(0,1)"])
    edit(d)
    with pytest.raises(core.StructureError) as exc:
        core.from_json(d)
    assert message in str(exc.value)


def test_bad_json_text():
    with pytest.raises(core.StructureError, match="invalid JSON at line 1"):
        core.loads("{")
    with pytest.raises(core.StructureError, match="top level"):
        core.from_json([1, 2])


def test_unitcell_is_a_double_category_only(catalog):
    rep = catalog["UnitCell"].validation
    assert rep.is_double_category and not rep.is_groupoid
    kinds = {f["kind"] for f in rep.groupoid_failures}
    assert {"hmor", "vmor"} <= kinds
    # without the flag it is rejected
    d = core.to_json(catalog["UnitCell"])
    d["flags"]["double_category_ok"] = False
    assert not core.from_json(d).validation.ok


def test_inverses_are_unique(catalog):
    for name, g in catalog.items():
        if g.validation.is_double_groupoid:
            assert core.inverse_uniqueness(g), name


def test_filling_counterexamples(catalog):
    rep = core.check_filling(catalog["NoFill"])
    assert not rep.ok
    # [DERIVED] every reported corner really has no square
    g = catalog["NoFill"]
    for h, u in rep.counterexamples:
        assert not any(g.sh(a) == u and g.tv(a) == h for a in g.squares)
    assert rep.to_json()["counterexamples"]
    fails = core.filling_variant_failures(g)
    assert all(fails.values())


def test_filling_witnesses_are_squares(catalog):
    g = catalog["Pair(0,1)"]
    rep = core.check_filling(g)
    assert rep.ok
    for (h, u), a in rep.witnesses.items():
        assert (g.sh(a), g.tv(a)) == (u, h)


def test_functors(catalog):
    g = catalog["Pair(0,1)"]
    F = core.identity_functor(g)
    assert not F.check() and F.is_isomorphism()
    T = core.terminal_functor(g, C.build("Disc(a)"))
    assert not T.check() and not T.is_isomorphism()
    assert not F.then(T).check()
    broken = core.DoubleFunctor(g, g, F.obj, F.hmor, F.vmor, {**F.sq, g.sorted_squares[0]:
                                                               g.sorted_squares[-1]})
    assert broken.check()


def test_validation_report_json(catalog):
    text = json.dumps(catalog["Ab(Z/2)"].validation.to_json())
    assert '"ok": true' in text
