import itertools
import random

import numpy as np

from dblgpd import search


def _random_problem(rng):
    m = rng.randint(1, 4)
    sizes = [rng.randint(1, 5) for _ in range(m)]
    eqs = []
    for _ in range(rng.randint(0, 4)):
        a, b = rng.randrange(m), rng.randrange(m)
        radix = rng.randint(1, 3)
        fa = np.array([rng.randrange(radix) for _ in range(sizes[a])])
        fb = np.array([rng.randrange(radix) for _ in range(sizes[b])])
        eqs.append(search.Eq(a, fa, b, fb, radix))
    return sizes, eqs


def test_solve_matches_brute_force():
    rng = random.Random(7)
    for _ in range(300):
        sizes, eqs = _random_problem(rng)
        got = search.solve([np.arange(s) for s in sizes], eqs)
        want = [row for row in itertools.product(*(range(s) for s in sizes))
                if all(e.fa[row[e.a]] == e.fb[row[e.b]] for e in eqs)]
        assert [tuple(r) for r in got.tolist()] == want


def test_encode_rows_is_injective():
    rng = np.random.default_rng(3)
    cols = [rng.integers(0, 7, 500) for _ in range(3)]
    code = search.encode_rows(cols, [7, 7, 7])
    rows = list(zip(*(c.tolist() for c in cols)))
    assert len(set(code.tolist())) == len(set(rows))
    # huge radices take the np.unique path
    code2 = search.encode_rows(cols, [10 ** 7] * 3)
    assert len(set(code2.tolist())) == len(set(rows))


def test_match_all_pairs():
    left = np.array([1, 2, 2, 5])
    right = np.array([2, 1, 2, 3])
    li, rj = search.match(left, right)
    want = [(i, j) for i in range(4) for j in range(4) if left[i] == right[j]]
    assert list(zip(li.tolist(), rj.tolist())) == want


def test_lookup_counts():
    top = [np.array([0, 1, 1, 2])]
    cnt, first = search.lookup_counts(top, [3], [np.array([1, 2, 0, 2])])
    assert cnt.tolist() == [2, 1, 1, 1]
    assert first.tolist() == [1, 3, 0, 3]


def test_union_find_least_roots():
    rng = random.Random(11)
    n = 40
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(25)]
    root = search.union_find(n, np.array([a for a, _ in pairs]), np.array([b for _, b in pairs]))
    comp = {i: {i} for i in range(n)}
    for a, b in pairs:
        merged = comp[a] | comp[b]
        for x in merged:
            comp[x] = merged
    assert root.tolist() == [min(comp[i]) for i in range(n)]
