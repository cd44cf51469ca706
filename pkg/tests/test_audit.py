from dataclasses import replace
from fractions import Fraction

import pytest

from dblgpd import audit
from dblgpd.audit import catalog as AC
from dblgpd.audit import transcriptions as T
from dblgpd.audit.engine import World, audit as run_case, compile_expr, grid, normal_form
from dblgpd.audit.transcriptions import Region

PASSING = ["comp_h", "comp_v", "e_h", "e_v", "inv_h", "inv_v", "assoc", "h_inverse", "axiom1",
           "eta", "F1", "F2", "H1", "H2", "H3", "H4"]


def _with_regions(case, regions):
    return replace(case, pm=replace(case.pm, regions=tuple(regions)))


def _region(case, k, **kw):
    regions = list(case.pm.regions)
    regions[k] = replace(regions[k], **kw)
    return _with_regions(case, regions)


def test_exact_arithmetic():
    f = compile_expr("1/3 + x/2", ("x",))
    v = f(Fraction(1, 3))
    assert isinstance(v, Fraction) and v == Fraction(1, 2)
    assert compile_expr("2*x - 1", ("x",))(Fraction(1, 2)) == 0


def test_grid_points():
    assert len(list(grid(16, 3))) == 17 ** 3
    assert min(grid(4, 2)) == (0, 0) and max(grid(4, 2)) == (1, 1)


def test_catalog_is_complete():
    assert len(AC.CASES) == 19
    assert set(AC.CASES) == {m.name for m in vars(T).values() if isinstance(m, T.PiecewiseMap)}


@pytest.mark.parametrize("name", PASSING)
def test_map_passes(name):
    (rep,) = audit.run(only=[name], grids=(16, 17))
    assert rep.ok, rep.failures[:3]
    assert rep.points > 0


def test_square_maps_have_no_barycentric_check():
    (rep,) = audit.run(only=["comp_h"], grids=(4,))
    assert rep.barycentric == "n/a"
    (rep,) = audit.run(only=["H1"], grids=(4,))
    assert rep.barycentric is True and rep.symbolic_sums is True


def test_planted_coverage_gap_is_localized():
    case = AC.case_comp_h()
    rep = run_case(_with_regions(case, case.pm.regions[:3]), grids=(8,))
    assert not rep.coverage
    f = rep.failures[0]
    assert f["check"] == "coverage" and f["regions"] == []
    x, y = (Fraction(s) for s in f["point"])
    assert x >= y and x + y >= 1


def test_planted_wrong_branch_is_localized():
    case = AC.case_comp_h()
    rep = run_case(_region(case, 2, symbol="alpha"), grids=(8,))
    assert not rep.ok
    regions = {tuple(f["regions"]) for f in rep.failures if f["check"] == "consistency"}
    assert regions and all(3 in r for r in regions)


def test_planted_boundary_error():
    case = AC.case_e_h()
    rep = run_case(_region(case, 1, args=("1 - x + y",)), grids=(8,))
    assert not rep.boundary
    assert any(f["check"] == "boundary" and f["regions"] == [2] for f in rep.failures)


def test_planted_bad_barycentric_sum():
    case = AC.case_eta()
    args = ("x*y", "(1 - x)*(1 - y)", "(1 - x)*y", "x*(1 - x)")
    rep = run_case(_region(case, 0, args=args), grids=(4,))
    assert rep.symbolic_sums is False and rep.barycentric is False
    assert rep.failures[0]["check"] == "barycentric"


def test_report_json():
    (rep,) = audit.run(only=["e_v"], grids=(4,))
    js = rep.to_json()
    assert js["ok"] and js["transcription"] == T.SOURCE
    assert js["note"] == "verified at sampled points"


def test_world_rewriting():
    W = World().square("a", "u", "v", "u_p", "v_p")
    # bottom-left corner: u(0) and v(0) are the same point
    assert W.closure(("P", "u", Fraction(0))) & W.closure(("P", "v", Fraction(0)))
    assert not W.closure(("P", "u", Fraction(1, 2))) & W.closure(("P", "v", Fraction(1, 2)))
    assert normal_form(W.closure(("Q", "a", Fraction(1, 2), Fraction(0))))


# The three maps below fail as transcribed.  Each test pins the failing
# checks and shows which single edit would make the map pass.

def test_right_identity_as_printed_fails_and_symmetric_reading_passes():
    case = AC.case_right_identity()
    rep = run_case(case, grids=(16,))
    assert not rep.coverage and not rep.consistency
    fixed = _region(_region(case, 1, conditions=("x >= y", "y <= (1/2)*(1 - t)*(1 - x + y)")),
                    3, conditions=("(1/2)*(1 - t)*(1 - x + y) <= y", "y <= x"))
    assert run_case(fixed, grids=(16, 17)).ok


def test_axiom2_as_printed_fails_and_sign_fix_passes():
    case = AC.case_axiom2()
    rep = run_case(case, grids=(16,))
    assert not rep.ok
    assert any(6 in f["regions"] for f in rep.failures)
    fixed = _region(case, 5, args=("y - x + 4*(1 - y)/(1 + t)",))
    assert run_case(fixed, grids=(16, 17)).ok


def test_interchange_as_printed_fails():
    rep = run_case(AC.case_interchange(), grids=(16,))
    assert not rep.coverage and not rep.consistency
    domain = [f for f in rep.failures if f["check"] == "consistency" and len(f["regions"]) == 1]
    assert {5, 15} & {f["regions"][0] for f in domain}


def test_region_dataclass_is_frozen():
    r = Region(("x <= y",), "u", ("x",))
    with pytest.raises(Exception):
        r.symbol = "v"
