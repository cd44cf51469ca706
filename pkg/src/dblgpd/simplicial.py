"""Simplicial sets (tabulated or generated), horns, Kan checks and the
combinatorial homotopy groups of a Kan complex.

Faces and degeneracies use the usual lower-index convention:
face(n, i, x) = x d^i and degeneracy(n, i, x) = x s^i for x in L_n.
"""
from __future__ import annotations

import json
import random
import threading
from dataclasses import dataclass, field

import numpy as np

from . import search
from .categories import Category
from .groups import GroupTable


class TruncationError(ValueError):
    """A level beyond the available truncation was requested."""


class InvariantFailure(AssertionError):
    pass


def enc(cell) -> str:
    """Canonical string for a cell (nested tuples of strings)."""
    if isinstance(cell, tuple):
        return "(" + ",".join(enc(c) for c in cell) + ")"
    return str(cell)


class Level:
    __slots__ = ("cells", "index")

    def __init__(self, cells):
        self.cells = cells
        self.index = {c: i for i, c in enumerate(cells)}

    def __len__(self):
        return len(self.cells)


class SimplicialView:
    """Base class.  Subclasses supply _cells(n), _face(n, i, x) and
    _degen(n, i, x); levels and operator arrays are memoized."""

    max_level = None  # None: unbounded

    def __init__(self):
        self._levels: dict = {}
        self._farr: dict = {}
        self._sarr: dict = {}
        self._lock = threading.Lock()

    # -- subclass interface -------------------------------------------
    def _cells(self, n):
        raise NotImplementedError

    def _face(self, n, i, x):
        raise NotImplementedError

    def _degen(self, n, i, x):
        raise NotImplementedError

    def _face_array(self, n, i):
        lower = self.level(n - 1).index
        return np.fromiter((lower[self._face(n, i, x)] for x in self.level(n).cells),
                           dtype=np.int64, count=len(self.level(n)))

    def _degen_array(self, n, i):
        upper = self.level(n + 1).index
        return np.fromiter((upper[self._degen(n, i, x)] for x in self.level(n).cells),
                           dtype=np.int64, count=len(self.level(n)))

    # -- public ---------------------------------------------------------
    def _check_level(self, n):
        if n < 0 or (self.max_level is not None and n > self.max_level):
            raise TruncationError(f"level {n} not available (truncated at {self.max_level})")

    def level(self, n) -> Level:
        lv = self._levels.get(n)
        if lv is None:
            self._check_level(n)
            lv = Level(sorted(self._cells(n)))
            with self._lock:
                lv = self._levels.setdefault(n, lv)
        return lv

    def simplices(self, n) -> list:
        return self.level(n).cells

    def size(self, n) -> int:
        return len(self.level(n))

    def index(self, n, x) -> int:
        return self.level(n).index[x]

    def face(self, n, i, x):
        if not 0 <= i <= n or n < 1:
            raise ValueError(f"no face d_{i} on level {n}")
        return self._face(n, i, x)

    def degeneracy(self, n, i, x):
        if not 0 <= i <= n:
            raise ValueError(f"no degeneracy s_{i} on level {n}")
        self._check_level(n + 1)
        return self._degen(n, i, x)

    def face_array(self, n, i) -> np.ndarray:
        key = (n, i)
        arr = self._farr.get(key)
        if arr is None:
            if not 0 <= i <= n or n < 1:
                raise ValueError(f"no face d_{i} on level {n}")
            arr = self._face_array(n, i)
            with self._lock:
                arr = self._farr.setdefault(key, arr)
        return arr

    def degen_array(self, n, i) -> np.ndarray:
        key = (n, i)
        arr = self._sarr.get(key)
        if arr is None:
            if not 0 <= i <= n:
                raise ValueError(f"no degeneracy s_{i} on level {n}")
            arr = self._degen_array(n, i)
            with self._lock:
                arr = self._sarr.setdefault(key, arr)
        return arr

    def constant(self, a, n):
        """The totally degenerate n-simplex a s_0 ... s_0 on a vertex."""
        x = a
        for m in range(n):
            x = self._degen(m, 0, x)
        return x


# ---------------------------------------------------------------------------
# backends
# ---------------------------------------------------------------------------

class Nerve(SimplicialView):
    """Nerve of a finite category: n-simplices are strings (f_1, ..., f_n)
    with src f_j = tgt f_{j+1}; vertex 0 is tgt f_1 and vertex j is src f_j.
    A 0-simplex is an object."""

    def __init__(self, C: Category):
        super().__init__()
        self.C = C
        self._by_tgt: dict = {}
        for f in C.sorted_mors():
            self._by_tgt.setdefault(C.tgt(f), []).append(f)

    def _cells(self, n):
        C = self.C
        if n == 0:
            return list(C.objects)
        out = [(f,) for f in C.sorted_mors()]
        for _ in range(n - 1):
            out = [s + (g,) for s in out for g in self._by_tgt.get(C.src(s[-1]), ())]
        return out

    def vertex(self, x, j):
        if isinstance(x, str):
            return x
        return self.C.tgt(x[0]) if j == 0 else self.C.src(x[j - 1])

    def _face(self, n, i, x):
        C = self.C
        if n == 1:
            return C.src(x[0]) if i == 0 else C.tgt(x[0])
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[:i - 1] + (C.compose(x[i - 1], x[i]),) + x[i + 1:]

    def _degen(self, n, i, x):
        if n == 0:
            return (self.C.ident[x],)
        v = self.vertex(x, i)
        return x[:i] + (self.C.ident[v],) + x[i:]


def nerve(C: Category) -> Nerve:
    return Nerve(C)


class StandardSimplex(SimplicialView):
    """Delta[N]: m-simplices are non-decreasing tuples in {0..N}, written
    as strings of digits when N < 10."""

    def __init__(self, N: int):
        super().__init__()
        self.N = N

    def _cells(self, m):
        out = [()]
        for _ in range(m + 1):
            out = [t + (v,) for t in out for v in range(t[-1] if t else 0, self.N + 1)]
        return [self._name(t) for t in out]

    @staticmethod
    def _name(t):
        return "<" + ",".join(map(str, t)) + ">"

    @staticmethod
    def _parse(x):
        return tuple(int(v) for v in x[1:-1].split(","))

    def _face(self, n, i, x):
        t = self._parse(x)
        return self._name(t[:i] + t[i + 1:])

    def _degen(self, n, i, x):
        t = self._parse(x)
        return self._name(t[:i + 1] + t[i:])


def standard_simplex(N: int) -> StandardSimplex:
    return StandardSimplex(N)


class Tabulated(SimplicialView):
    """Finite levels 0..N with explicit face and degeneracy tables."""

    def __init__(self, levels, d, s):
        super().__init__()
        self._tab_levels = [list(lv) for lv in levels]
        self.max_level = len(levels) - 1
        self._d = d   # d[n][i]: {id: id} for n >= 1
        self._s = s   # s[n][i]: {id: id} for n < N

    def _cells(self, n):
        return self._tab_levels[n]

    def _face(self, n, i, x):
        return self._d[n][i][x]

    def _degen(self, n, i, x):
        if n >= self.max_level:
            raise TruncationError(f"s_{i} on level {n} leaves the truncation")
        return self._s[n][i][x]

    def degeneracy(self, n, i, x):
        return self._degen(n, i, x)

    def to_json(self) -> dict:
        N = self.max_level
        return {"levels": [self.simplices(n) for n in range(N + 1)],
                "d": [[]] + [[{x: self._d[n][i][x] for x in self.simplices(n)}
                              for i in range(n + 1)] for n in range(1, N + 1)],
                "s": [[{x: self._s[n][i][x] for x in self.simplices(n)} for i in range(n + 1)]
                      for n in range(N)]}


def truncate(L: SimplicialView, N: int) -> Tabulated:
    """Tabulate levels 0..N of any view, relabelling cells by enc()."""
    levels = [[enc(x) for x in L.simplices(n)] for n in range(N + 1)]
    d = [[]] + [[{enc(x): enc(L.face(n, i, x)) for x in L.simplices(n)} for i in range(n + 1)]
                for n in range(1, N + 1)]
    s = [[{enc(x): enc(L.degeneracy(n, i, x)) for x in L.simplices(n)} for i in range(n + 1)]
         for n in range(N)]
    return Tabulated(levels, d, s)


def tabulated_from_json(data: dict) -> Tabulated:
    try:
        levels = data["levels"]
        d = data["d"]
        s = data["s"]
        t = Tabulated(levels, d, s)
        for n in range(1, len(levels)):
            for i in range(n + 1):
                for x in levels[n]:
                    if d[n][i][x] not in levels[n - 1]:
                        raise KeyError(f"d[{n}][{i}][{x}]")
    except (KeyError, IndexError, TypeError) as exc:
        raise ValueError(f"malformed simplicial set: {exc}") from exc
    return t


def load_tabulated(path: str) -> Tabulated:
    with open(path, encoding="utf-8") as fh:
        return tabulated_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# simplicial identities
# ---------------------------------------------------------------------------

def identity_violations(L: SimplicialView, n: int, samples: int | None = None,
                        rng: random.Random | None = None) -> list:
    """Check the simplicial identities on cells of level n (all of them, or
    a random sample).  Returns a list of violations."""
    cells = L.simplices(n)
    if samples is not None and samples < len(cells):
        rng = rng or random.Random(0)
        cells = rng.sample(cells, samples)
    top = L.max_level
    bad = []
    for x in cells:
        if n >= 2:
            for j in range(n + 1):
                for i in range(j):
                    if L.face(n - 1, i, L.face(n, j, x)) != L.face(n - 1, j - 1, L.face(n, i, x)):
                        bad.append(("d_i d_j = d_{j-1} d_i", n, i, j, x))
        if top is not None and n + 1 > top:
            continue
        for j in range(n + 1):
            y = L.degeneracy(n, j, x)
            if L.face(n + 1, j, y) != x or L.face(n + 1, j + 1, y) != x:
                bad.append(("d_j s_j = d_{j+1} s_j = id", n, j, x))
            for i in range(n + 2):
                if i < j:
                    if L.face(n + 1, i, y) != L.degeneracy(n - 1, j - 1, L.face(n, i, x)):
                        bad.append(("d_i s_j = s_{j-1} d_i", n, i, j, x))
                elif i > j + 1:
                    if L.face(n + 1, i, y) != L.degeneracy(n - 1, j, L.face(n, i - 1, x)):
                        bad.append(("d_i s_j = s_j d_{i-1}", n, i, j, x))
            if top is None or n + 2 <= top:
                for i in range(j + 1):
                    if L.degeneracy(n + 1, i, y) != L.degeneracy(n + 1, j + 1, L.degeneracy(n, i, x)):
                        bad.append(("s_i s_j = s_{j+1} s_i", n, i, j, x))
    return bad


# ---------------------------------------------------------------------------
# horns and the Kan condition
# ---------------------------------------------------------------------------

@dataclass
class Horn:
    n: int
    k: int
    facets: dict  # i -> (n-1)-simplex, i != k


def horn_equations(L: SimplicialView, n: int, k: int, missing=()) -> tuple:
    """Variables are the facet indices i != k (and not in `missing`), in
    increasing order; equations d_i x_j = d_{j-1} x_i for i < j."""
    idx = [i for i in range(n + 1) if i != k and i not in missing]
    pos = {i: p for p, i in enumerate(idx)}
    eqs = []
    if n >= 2:
        rad = L.size(n - 2)
        for j in idx:
            for i in idx:
                if i < j:
                    eqs.append(search.Eq(pos[j], L.face_array(n - 1, i), pos[i],
                                         L.face_array(n - 1, j - 1), rad))
    return idx, eqs


def horn_table(L: SimplicialView, n: int, k: int) -> np.ndarray:
    """All compatible facet tuples of Lambda^k[n], as rows of level n-1 ids
    ordered by facet index."""
    idx, eqs = horn_equations(L, n, k)
    m = L.size(n - 1)
    return search.solve([np.arange(m)] * len(idx), eqs)


def enumerate_horns(L: SimplicialView, n: int, k: int):
    cells = L.simplices(n - 1)
    idx = [i for i in range(n + 1) if i != k]
    for row in horn_table(L, n, k):
        yield Horn(n, k, {i: cells[r] for i, r in zip(idx, row)})


def filler_counts(L: SimplicialView, n: int, k: int, horns: np.ndarray):
    """Number of fillers and least filler id for each horn row."""
    idx = [i for i in range(n + 1) if i != k]
    top = [L.face_array(n, i) for i in idx]
    rad = [L.size(n - 1)] * len(idx)
    return search.lookup_counts(top, rad, [horns[:, p] for p in range(len(idx))])


def fillers(L: SimplicialView, n: int, facets: dict) -> list:
    """All n-simplices y with d_i y = facets[i]."""
    mask = np.ones(L.size(n), dtype=bool)
    for i, x in facets.items():
        mask &= L.face_array(n, i) == L.index(n - 1, x)
    return [L.simplices(n)[j] for j in np.nonzero(mask)[0]]


@dataclass
class KanReport:
    ok: bool
    n_max: int
    failure: dict | None = None
    multiplicities: dict = field(default_factory=dict)   # "n,k" -> [min, max, horns]

    def to_json(self) -> dict:
        return {"ok": self.ok, "n_max": self.n_max, "failure": self.failure,
                "multiplicities": self.multiplicities}

    def unique_fillers(self, n: int) -> bool:
        return all(v[0] == v[1] == 1 for key, v in self.multiplicities.items()
                   if int(key.split(",")[0]) == n and v[2] > 0)


def kan_check(L: SimplicialView, n_max: int, stop_at_first: bool = True) -> KanReport:
    rep = KanReport(True, n_max)
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            horns = horn_table(L, n, k)
            if len(horns) == 0:
                rep.multiplicities[f"{n},{k}"] = [0, 0, 0]
                continue
            cnt, _ = filler_counts(L, n, k, horns)
            rep.multiplicities[f"{n},{k}"] = [int(cnt.min()), int(cnt.max()), int(len(horns))]
            if rep.ok and cnt.min() == 0:
                rep.ok = False
                r = int(np.nonzero(cnt == 0)[0][0])
                cells = L.simplices(n - 1)
                idx = [i for i in range(n + 1) if i != k]
                rep.failure = {"n": n, "k": k,
                               "facets": {str(i): enc(cells[c]) for i, c in zip(idx, horns[r])}}
                if stop_at_first:
                    return rep
    return rep


def boundary_fill_failures(L: SimplicialView, n: int) -> int:
    """Number of compatible boundaries of Delta[n+1] with no filler."""
    idx, eqs = horn_equations(L, n + 1, -1)
    rows = search.solve([np.arange(L.size(n))] * len(idx), eqs)
    top = [L.face_array(n + 1, i) for i in idx]
    cnt, _ = search.lookup_counts(top, [L.size(n)] * len(idx),
                                  [rows[:, p] for p in range(len(idx))])
    return int((cnt == 0).sum())


# ---------------------------------------------------------------------------
# homotopy
# ---------------------------------------------------------------------------

class HomotopyClasses:
    """The homotopy relation on level n, read off from all (n+1)-simplices
    y with d_i y = s_{n-1} d_i (d_n y) for i < n.  Verifies that the raw
    relation is already an equivalence."""

    def __init__(self, L: SimplicialView, n: int, check: bool = True):
        self.L, self.n = L, n
        m = L.size(n)
        mask = np.ones(L.size(n + 1), dtype=bool)
        dn = L.face_array(n + 1, n)
        for i in range(n):
            # s_{n-1} d_i x, x = d_n y
            target = L.degen_array(n - 1, n - 1)[L.face_array(n, i)[dn]]
            mask &= L.face_array(n + 1, i) == target
        a = dn[mask]
        b = L.face_array(n + 1, n + 1)[mask]
        self.root = search.union_find(m, a, b)
        if check:
            self._check(a, b, m)

    def _check(self, a, b, m):
        pairs = set(zip(a.tolist(), b.tolist()))
        if any((x, x) not in pairs for x in range(m)):
            raise InvariantFailure("homotopy relation not reflexive")
        sizes = np.bincount(self.root, minlength=m)
        if len(pairs) != int((sizes.astype(np.int64) ** 2).sum()):
            raise InvariantFailure("homotopy relation not symmetric/transitive")

    def same(self, x, y) -> bool:
        L = self.L
        return self.root[L.index(self.n, x)] == self.root[L.index(self.n, y)]

    def rep(self, x):
        return self.L.simplices(self.n)[self.root[self.L.index(self.n, x)]]

    def rep_id(self, i: int) -> int:
        return int(self.root[i])


def _classes(L, n) -> HomotopyClasses:
    cache = L.__dict__.setdefault("_hclasses", {})
    hc = cache.get(n)
    if hc is None:
        hc = cache.setdefault(n, HomotopyClasses(L, n))
    return hc


def homotopic(L: SimplicialView, x, x2) -> bool:
    n = 0 if not isinstance(x, tuple) and x in L.level(0).index else None
    if n is None:
        n = _level_of(L, x)
    if n > 0 and any(L.face(n, i, x) != L.face(n, i, x2) for i in range(n + 1)):
        raise ValueError("homotopic: simplices have different faces")
    return _classes(L, n).same(x, x2)


def _level_of(L, x) -> int:
    for n in range(0, 8):
        if x in L.level(n).index:
            return n
    raise ValueError(f"cell {x!r} not found in levels 0..7")


def homotopic_at(L: SimplicialView, n: int, x, x2) -> bool:
    if n > 0 and any(L.face(n, i, x) != L.face(n, i, x2) for i in range(n + 1)):
        raise ValueError("homotopic: simplices have different faces")
    return _classes(L, n).same(x, x2)


def fundamental_groupoid(L: SimplicialView) -> Category:
    """Objects: vertices.  Morphisms: homotopy classes of 1-simplices,
    labelled by their least representative.  Composition reads d_1 of every
    2-simplex and checks that the answer never depends on the choice."""
    hc = _classes(L, 1)
    V = L.simplices(0)
    E = L.simplices(1)
    d0, d1 = L.face_array(1, 0), L.face_array(1, 1)
    reps = sorted(set(hc.root.tolist()))
    mors = {enc(E[r]): (V[d0[r]], V[d1[r]]) for r in reps}
    comp: dict = {}
    f0, f1, f2 = (L.face_array(2, i) for i in range(3))
    for y in range(L.size(2)):
        key = (enc(E[hc.root[f2[y]]]), enc(E[hc.root[f0[y]]]))
        val = enc(E[hc.root[f1[y]]])
        if comp.setdefault(key, val) != val:
            raise InvariantFailure(f"composition in the fundamental groupoid depends on the filler at {key}")
    ident = {v: enc(E[hc.root[L.degen_array(0, 0)[i]]]) for i, v in enumerate(V)}
    C = Category(tuple(V), mors, comp, ident, name="P")
    bad = C.check()
    if bad:
        raise InvariantFailure(f"fundamental groupoid: {bad[0]}")
    return C


def pi0(L: SimplicialView) -> list:
    hc = _classes(L, 0)
    V = L.simplices(0)
    out: dict = {}
    for i, v in enumerate(V):
        out.setdefault(int(hc.root[i]), []).append(v)
    return sorted(out.values())


def pi_n(L: SimplicialView, a, n: int) -> GroupTable:
    """pi_n(L, a) for n = 1, 2 as a GroupTable labelled by least
    representatives.  The product fills Lambda^n[n+1] with
    (a, ..., a, x', -, x) and reads d_n; independence of the filler and of
    the representatives is checked."""
    if n < 1:
        raise ValueError("use pi0 for n = 0")
    hc = _classes(L, n)
    const_lo = L.index(n - 1, L.constant(a, n - 1))
    mask = np.ones(L.size(n), dtype=bool)
    for i in range(n + 1):
        mask &= L.face_array(n, i) == const_lo
    elems = np.nonzero(mask)[0]
    reps = sorted(set(hc.root[elems].tolist()))
    cells = L.simplices(n)
    label = {r: enc(cells[r]) for r in reps}
    # all y at level n+1 whose faces other than d_{n-1}, d_n, d_{n+1} are constant
    const_n = L.index(n, L.constant(a, n))
    ymask = np.ones(L.size(n + 1), dtype=bool)
    for i in range(n - 1):
        ymask &= L.face_array(n + 1, i) == const_n
    ys = np.nonzero(ymask)[0]
    xprime = hc.root[L.face_array(n + 1, n - 1)[ys]]
    x = hc.root[L.face_array(n + 1, n + 1)[ys]]
    prod = hc.root[L.face_array(n + 1, n)[ys]]
    eset = set(reps)
    table: dict = {}
    for xi, xpi, pi in zip(x.tolist(), xprime.tolist(), prod.tolist()):
        if xi in eset and xpi in eset:
            if table.setdefault((xi, xpi), pi) != pi:
                raise InvariantFailure(f"pi_{n} product depends on the filler")
    for r in reps:
        for s in reps:
            if (r, s) not in table:
                raise InvariantFailure(f"pi_{n}: no filler for ({label[r]}, {label[s]}); not Kan")
    back = {label[r]: r for r in reps}
    return GroupTable.from_function([label[r] for r in reps],
                                    lambda u, v: label[table[(back[u], back[v])]])


def fact_p1_check(L: SimplicialView, y, y2, k: int, n: int) -> bool | None:
    """Given (n+1)-simplices y, y2 with [y d^i] = [y2 d^i] for i != k,
    check [y d^k] = [y2 d^k].  Returns None when the hypothesis fails."""
    hc = _classes(L, n)
    for i in range(n + 2):
        if i == k:
            continue
        a, b = L.face(n + 1, i, y), L.face(n + 1, i, y2)
        if any(L.face(n, j, a) != L.face(n, j, b) for j in range(n + 1)) or not hc.same(a, b):
            return None
    a, b = L.face(n + 1, k, y), L.face(n + 1, k, y2)
    if n > 0 and any(L.face(n, j, a) != L.face(n, j, b) for j in range(n + 1)):
        return False
    return bool(hc.same(a, b))
