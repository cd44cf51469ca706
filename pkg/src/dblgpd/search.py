"""Join-based constraint search over integer-coded cells.

Every search in the package (horns, bihorns, W-bar chains, grids) has
the same shape: a few variables, each ranging over the cells of some
level, and equations "face of one variable equals face of another".
Cells are integers, face maps are numpy arrays, and a partial solution
table is extended one variable at a time by a sort-merge join on the
shared face values.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_LIMIT = 1 << 62


@dataclass(frozen=True)
class Eq:
    """fa[x_a] == fb[x_b].  Both arrays map cell ids of the respective
    variable's level into a common target level of size `radix`."""
    a: int
    fa: np.ndarray
    b: int
    fb: np.ndarray
    radix: int


def encode_rows(cols: list, radices: list) -> np.ndarray:
    """Injective int64 code for rows of small non-negative ints; falls back
    to np.unique when the mixed radix would overflow."""
    n = len(cols[0]) if cols else 0
    if not cols:
        return np.zeros(n, dtype=np.int64)
    total = 1
    for r in radices:
        total *= max(int(r), 1)
    if total < _LIMIT:
        code = np.zeros(n, dtype=np.int64)
        for c, r in zip(cols, radices):
            code = code * max(int(r), 1) + c.astype(np.int64)
        return code
    _, inv = np.unique(np.stack(cols, axis=1), axis=0, return_inverse=True)
    return inv.reshape(-1).astype(np.int64)


def _joint_codes(left: list, right: list, radices: list):
    """Codes for two row sets that agree exactly when rows agree."""
    nl = len(left[0])
    cols = [np.concatenate([l, r]) for l, r in zip(left, right)]
    code = encode_rows(cols, radices)
    return code[:nl], code[nl:]


def match(left_code: np.ndarray, right_code: np.ndarray):
    """All pairs (i, j) with left_code[i] == right_code[j], ordered by i
    then by j."""
    order = np.argsort(right_code, kind="stable")
    srt = right_code[order]
    lo = np.searchsorted(srt, left_code, "left")
    hi = np.searchsorted(srt, left_code, "right")
    cnt = hi - lo
    li = np.repeat(np.arange(len(left_code)), cnt)
    if len(li) == 0:
        return li, li.copy()
    starts = np.repeat(lo - np.concatenate([[0], np.cumsum(cnt)[:-1]]), cnt)
    rj = order[starts + np.arange(len(li))]
    return li, rj


def solve(domains: list, eqs: list) -> np.ndarray:
    """Enumerate all assignments (rows of cell ids, one column per
    variable) satisfying every equation.  Variables are joined in order;
    rows come out in lexicographic order of their ids when each domain is
    sorted."""
    m = len(domains)
    doms = [np.asarray(d, dtype=np.int64) for d in domains]
    by_var: dict = {j: [] for j in range(m)}
    for e in eqs:
        if e.a == e.b:
            by_var[e.a].append(e)
        else:
            hi = max(e.a, e.b)
            by_var[hi].append(e)
    table = np.empty((1, 0), dtype=np.int64)
    for j in range(m):
        cand = doms[j]
        for e in by_var[j]:           # equations internal to one variable
            if e.a == e.b == j:
                cand = cand[e.fa[cand] == e.fb[cand]]
        cons = [e for e in by_var[j] if e.a != e.b]
        if not cons:
            li = np.repeat(np.arange(len(table)), len(cand))
            rj = np.tile(np.arange(len(cand)), len(table))
        else:
            left, right, rad = [], [], []
            for e in cons:
                if e.b == j:
                    left.append(e.fa[table[:, e.a]])
                    right.append(e.fb[cand])
                else:
                    left.append(e.fb[table[:, e.b]])
                    right.append(e.fa[cand])
                rad.append(e.radix)
            lc, rc = _joint_codes(left, right, rad)
            li, rj = match(lc, rc)
        table = np.concatenate([table[li], cand[rj][:, None]], axis=1)
        if len(table) == 0:
            return np.empty((0, m), dtype=np.int64)
    return table


def lookup_counts(keys_top: list, radices: list, keys_query: list):
    """For each query row, how many top rows carry the same key, and the
    least such top index (-1 if none)."""
    qc, tc = _joint_codes(keys_query, keys_top, radices)
    order = np.argsort(tc, kind="stable")
    srt = tc[order]
    lo = np.searchsorted(srt, qc, "left")
    hi = np.searchsorted(srt, qc, "right")
    cnt = hi - lo
    first = np.where(cnt > 0, order[np.minimum(lo, len(order) - 1)] if len(order) else -1, -1)
    return cnt, first


def union_find(n: int, pairs_a: np.ndarray, pairs_b: np.ndarray) -> np.ndarray:
    """Root (least member) of each element's class."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in zip(pairs_a.tolist(), pairs_b.tolist()):
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    return np.array([find(x) for x in range(n)], dtype=np.int64)
