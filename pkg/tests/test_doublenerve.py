import itertools
import random

import pytest

from dblgpd import catalog as C
from dblgpd import core
from dblgpd.doublenerve import (NNError, check_nn_map, equivalence_suite, grid_dump,
                                homotopy_comparison, nn, unique_filler_check)


@pytest.mark.parametrize("expr, size", [
    ("Pair(0,1)", lambda p, q: 2 ** ((p + 1) * (q + 1))),
    ("Ab(Z/3)", lambda p, q: 3 ** (p * q)),
    ("Deloop(Z/3)", lambda p, q: 3 ** p),
    ("Tensor(Z/2,Z/3)", lambda p, q: 2 ** p * 3 ** q),
])
def test_grid_counts(expr, size):
    # [DERIVED] count of p x q grids of composable squares
    K = nn(C.build(expr))
    for p, q in itertools.product(range(3), repeat=2):
        assert K.size(p, q) == size(p, q)


def test_grid_dump_boundaries():
    g = C.build("Pair(0,1)")
    K = nn(g)
    for x in K.cells(2, 2):
        d = grid_dump(K, 2, 2, x)
        assert d["bidegree"] == [2, 2]
        assert len(d["top"]) == 2 and len(d["left"]) == 2
        # column 0 is the left square; neighbours share a vertical edge
        for row in d["squares"]:
            assert g.sh(row[0]) == g.th(row[1])


def test_functor_induces_bisimplicial_map():
    g = C.build("Pair(0,1)")
    assert check_nn_map(core.identity_functor(g), 2, 2) == []
    T = core.terminal_functor(g, C.build("Disc(a)"))
    assert check_nn_map(T, 2, 2) == []


def test_square_cap(monkeypatch):
    import dblgpd.doublenerve as D
    monkeypatch.setattr(D, "MAX_SQUARES", 10)
    with pytest.raises(NNError, match="exceed the cap"):
        D.DoubleNerve(C.build("Pair(0,1)"))


def test_equivalence_suite_on_larger_inputs():
    for expr in ("Pair(0,1,2)", "Deloop(S3)"):
        rep = equivalence_suite(C.build(expr), 2, 2, 2)
        assert rep.agree and rep.i


def test_unique_fillers_on_other_entries():
    assert unique_filler_check(C.build("Deloop(Z/3)"), 3)
    assert unique_filler_check(C.build("Tensor(Z/2,Z/2)"), 3)


def test_homotopy_comparison_s3():
    rep = homotopy_comparison(C.build("Deloop(S3)"))
    assert rep.ok
    assert rep.pi1["*"]["order"] == 6
    ph = rep.phi["*"]
    assert ph["well_defined"] and ph["homomorphism"] and ph["injective"] and ph["surjective"]


def test_unique_fillers_at_level_4():
    for expr in ("Ab(Z/2)", "Deloop(Z/2)"):
        assert unique_filler_check(C.build(expr), 4), expr


def _pair_cell(O):
    n = len(O) - 1
    return tuple(tuple(f"s({O[i + 1][j + 1]},{O[i][j + 1]},{O[i + 1][j]},{O[i][j]})"
                       for j in range(n)) for i in range(n))


def _corners_of(cell):
    n = len(cell)
    O = [[None] * (n + 1) for _ in range(n + 1)]
    for i, row in enumerate(cell):
        for j, a in enumerate(row):
            br, tr, bl, tl = C._corners(a)
            for (r, c), o in (((i + 1, j + 1), br), ((i, j + 1), tr), ((i + 1, j), bl), ((i, j), tl)):
                assert O[r][c] in (None, o)
                O[r][c] = o
    return O


def test_pair_horns_at_level_4_sampled():
    # a Pair cell is fixed by its corner objects, so a horn has at most one
    # filler exactly when the facets other than k still see every corner
    from dblgpd.bisimplicial import diag
    rng = random.Random(4)
    L = diag(nn(C.build("Pair(0,1)")))
    for _ in range(200):
        O = [[rng.choice("01") for _ in range(5)] for _ in range(5)]
        y = _pair_cell(O)
        for k in range(5):
            seen = {}
            for i in range(5):
                if i == k:
                    continue
                keep = [r for r in range(5) if r != i]
                F = _corners_of(L.face(4, i, y))
                for a, r in enumerate(keep):
                    for b, c in enumerate(keep):
                        assert seen.setdefault((r, c), F[a][b]) == F[a][b]
            assert len(seen) == 25
            assert all(seen[(r, c)] == O[r][c] for r in range(5) for c in range(5))
