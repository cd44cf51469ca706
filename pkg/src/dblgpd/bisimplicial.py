"""Bisimplicial sets: views, rows and columns, bihorns and the extension
condition, bihomotopy, diag, Dec, W-bar, the Alexander-Whitney map and the
Dec / W-bar unit and counit.

Operators on a (p, q)-bisimplex x:
    dh(p, q, i, x) = x d^i_h in K_{p-1,q}     sh(p, q, i, x) = x s^i_h
    dv(p, q, j, x) = x d^j_v in K_{p,q-1}     sv(p, q, j, x) = x s^j_v
"""
from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field

import numpy as np

from . import search
from .simplicial import (HomotopyClasses, InvariantFailure, Level, SimplicialView,
                         TruncationError, enc, fundamental_groupoid, kan_check)


class ExtensionRequired(ValueError):
    """An operation needing the extension condition was called without it."""


class BisimplicialView:
    bounds = None  # (P, Q) for tabulated inputs, None when generated

    def __init__(self):
        self._levels: dict = {}
        self._arr: dict = {}
        self._lock = threading.Lock()
        self._rows: dict = {}
        self._cols: dict = {}

    # -- subclass interface ---------------------------------------------
    def _cells(self, p, q):
        raise NotImplementedError

    def _dh(self, p, q, i, x):
        raise NotImplementedError

    def _dv(self, p, q, j, x):
        raise NotImplementedError

    def _sh(self, p, q, i, x):
        raise NotImplementedError

    def _sv(self, p, q, j, x):
        raise NotImplementedError

    def _make_array(self, kind, p, q, i):
        cells = self.level(p, q).cells
        if kind == "dh":
            tgt, fn = self.level(p - 1, q).index, self._dh
        elif kind == "dv":
            tgt, fn = self.level(p, q - 1).index, self._dv
        elif kind == "sh":
            tgt, fn = self.level(p + 1, q).index, self._sh
        else:
            tgt, fn = self.level(p, q + 1).index, self._sv
        return np.fromiter((tgt[fn(p, q, i, x)] for x in cells), dtype=np.int64,
                           count=len(cells))

    # -- public -----------------------------------------------------------
    def _check(self, p, q):
        if p < 0 or q < 0 or (self.bounds is not None and (p > self.bounds[0] or q > self.bounds[1])):
            raise TruncationError(f"bidegree ({p},{q}) not available")

    def level(self, p, q) -> Level:
        lv = self._levels.get((p, q))
        if lv is None:
            self._check(p, q)
            lv = Level(sorted(self._cells(p, q)))
            with self._lock:
                lv = self._levels.setdefault((p, q), lv)
        return lv

    def cells(self, p, q) -> list:
        return self.level(p, q).cells

    def size(self, p, q) -> int:
        return len(self.level(p, q))

    def index(self, p, q, x) -> int:
        return self.level(p, q).index[x]

    def dh(self, p, q, i, x):
        if not (p >= 1 and 0 <= i <= p):
            raise ValueError(f"no d^{i}_h at ({p},{q})")
        return self._dh(p, q, i, x)

    def dv(self, p, q, j, x):
        if not (q >= 1 and 0 <= j <= q):
            raise ValueError(f"no d^{j}_v at ({p},{q})")
        return self._dv(p, q, j, x)

    def sh(self, p, q, i, x):
        if not 0 <= i <= p:
            raise ValueError(f"no s^{i}_h at ({p},{q})")
        self._check(p + 1, q)
        return self._sh(p, q, i, x)

    def sv(self, p, q, j, x):
        if not 0 <= j <= q:
            raise ValueError(f"no s^{j}_v at ({p},{q})")
        self._check(p, q + 1)
        return self._sv(p, q, j, x)

    def array(self, kind, p, q, i) -> np.ndarray:
        key = (kind, p, q, i)
        arr = self._arr.get(key)
        if arr is None:
            arr = self._make_array(kind, p, q, i)
            with self._lock:
                arr = self._arr.setdefault(key, arr)
        return arr

    def dh_array(self, p, q, i):
        return self.array("dh", p, q, i)

    def dv_array(self, p, q, j):
        return self.array("dv", p, q, j)

    def sh_array(self, p, q, i):
        return self.array("sh", p, q, i)

    def sv_array(self, p, q, j):
        return self.array("sv", p, q, j)

    def row(self, p) -> "RowView":
        """The vertical simplicial set K_{p,*}."""
        r = self._rows.get(p)
        if r is None:
            r = self._rows.setdefault(p, RowView(self, p))
        return r

    def col(self, q) -> "ColView":
        """The horizontal simplicial set K_{*,q}."""
        c = self._cols.get(q)
        if c is None:
            c = self._cols.setdefault(q, ColView(self, q))
        return c


class RowView(SimplicialView):
    """K_{p,*}: level n is K_{p,n} with the vertical operators."""

    def __init__(self, K, p):
        super().__init__()
        self.K, self.p = K, p
        if K.bounds is not None:
            self.max_level = K.bounds[1]

    def level(self, n):
        self._check_level(n)
        return self.K.level(self.p, n)

    def _face(self, n, i, x):
        return self.K._dv(self.p, n, i, x)

    def _degen(self, n, i, x):
        return self.K._sv(self.p, n, i, x)

    def _face_array(self, n, i):
        return self.K.dv_array(self.p, n, i)

    def _degen_array(self, n, i):
        return self.K.sv_array(self.p, n, i)


class ColView(SimplicialView):
    """K_{*,q}: level n is K_{n,q} with the horizontal operators."""

    def __init__(self, K, q):
        super().__init__()
        self.K, self.q = K, q
        if K.bounds is not None:
            self.max_level = K.bounds[0]

    def level(self, n):
        self._check_level(n)
        return self.K.level(n, self.q)

    def _face(self, n, i, x):
        return self.K._dh(n, self.q, i, x)

    def _degen(self, n, i, x):
        return self.K._sh(n, self.q, i, x)

    def _face_array(self, n, i):
        return self.K.dh_array(n, self.q, i)

    def _degen_array(self, n, i):
        return self.K.sh_array(n, self.q, i)


# ---------------------------------------------------------------------------
# backends
# ---------------------------------------------------------------------------

class TensorView(BisimplicialView):
    """X (x) Y: (p, q)-cells are pairs (x, y) with x in X_p, y in Y_q."""

    def __init__(self, X: SimplicialView, Y: SimplicialView):
        super().__init__()
        self.X, self.Y = X, Y

    def _cells(self, p, q):
        return [(x, y) for x in self.X.simplices(p) for y in self.Y.simplices(q)]

    def _dh(self, p, q, i, c):
        return (self.X.face(p, i, c[0]), c[1])

    def _dv(self, p, q, j, c):
        return (c[0], self.Y.face(q, j, c[1]))

    def _sh(self, p, q, i, c):
        return (self.X.degeneracy(p, i, c[0]), c[1])

    def _sv(self, p, q, j, c):
        return (c[0], self.Y.degeneracy(q, j, c[1]))


def tensor(X: SimplicialView, Y: SimplicialView) -> TensorView:
    return TensorView(X, Y)


def point():
    """The one-point bisimplicial set."""
    from .simplicial import standard_simplex
    return TensorView(standard_simplex(0), standard_simplex(0))


class Tabulated(BisimplicialView):
    """Finite bidegrees (p, q) <= (P, Q) with explicit operator tables.
    JSON: {"levels": {"p,q": [ids]}, "dh": {"p,q": [{id: id}, ...]},
    "dv": ..., "sh": ..., "sv": ...}."""

    def __init__(self, data: dict):
        super().__init__()
        self.data = data
        keys = [tuple(map(int, k.split(","))) for k in data["levels"]]
        self.bounds = (max(k[0] for k in keys), max(k[1] for k in keys))

    def _cells(self, p, q):
        return list(self.data["levels"][f"{p},{q}"])

    def _get(self, kind, p, q, i, x):
        try:
            return self.data[kind][f"{p},{q}"][i][x]
        except (KeyError, IndexError) as exc:
            raise TruncationError(f"{kind} at ({p},{q}) index {i} not tabulated") from exc

    def _dh(self, p, q, i, x):
        return self._get("dh", p, q, i, x)

    def _dv(self, p, q, j, x):
        return self._get("dv", p, q, j, x)

    def _sh(self, p, q, i, x):
        return self._get("sh", p, q, i, x)

    def _sv(self, p, q, j, x):
        return self._get("sv", p, q, j, x)


def truncate(K: BisimplicialView, P: int, Q: int) -> Tabulated:
    data = {"levels": {}, "dh": {}, "dv": {}, "sh": {}, "sv": {}}
    for p in range(P + 1):
        for q in range(Q + 1):
            cells = K.cells(p, q)
            key = f"{p},{q}"
            data["levels"][key] = [enc(x) for x in cells]
            if p >= 1:
                data["dh"][key] = [{enc(x): enc(K.dh(p, q, i, x)) for x in cells} for i in range(p + 1)]
            if q >= 1:
                data["dv"][key] = [{enc(x): enc(K.dv(p, q, j, x)) for x in cells} for j in range(q + 1)]
            if p < P:
                data["sh"][key] = [{enc(x): enc(K.sh(p, q, i, x)) for x in cells} for i in range(p + 1)]
            if q < Q:
                data["sv"][key] = [{enc(x): enc(K.sv(p, q, j, x)) for x in cells} for j in range(q + 1)]
    return Tabulated(data)


def tabulated_from_json(data: dict) -> Tabulated:
    try:
        for k in ("levels", "dh", "dv", "sh", "sv"):
            if k not in data:
                raise KeyError(k)
        return Tabulated(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise ValueError(f"malformed bisimplicial set: missing or bad field {exc}") from exc


class Dec(BisimplicialView):
    """Total decalage: K_{p,q} = L_{p+1+q}, d^i_h = d_i, d^j_v = d_{p+1+j}."""

    def __init__(self, L: SimplicialView):
        super().__init__()
        self.L = L

    def level(self, p, q):
        self._check(p, q)
        return self.L.level(p + 1 + q)

    def _cells(self, p, q):
        return self.L.simplices(p + 1 + q)

    def _dh(self, p, q, i, x):
        return self.L.face(p + 1 + q, i, x)

    def _dv(self, p, q, j, x):
        return self.L.face(p + 1 + q, p + 1 + j, x)

    def _sh(self, p, q, i, x):
        return self.L.degeneracy(p + 1 + q, i, x)

    def _sv(self, p, q, j, x):
        return self.L.degeneracy(p + 1 + q, p + 1 + j, x)

    def _make_array(self, kind, p, q, i):
        n = p + 1 + q
        if kind == "dh":
            return self.L.face_array(n, i)
        if kind == "dv":
            return self.L.face_array(n, p + 1 + i)
        if kind == "sh":
            return self.L.degen_array(n, i)
        return self.L.degen_array(n, p + 1 + i)


def dec(L: SimplicialView) -> Dec:
    return Dec(L)


class Diag(SimplicialView):
    """diag K: level n is K_{n,n}, d_i = d^i_h d^i_v, s_i = s^i_h s^i_v."""

    def __init__(self, K: BisimplicialView):
        super().__init__()
        self.K = K
        if K.bounds is not None:
            self.max_level = min(K.bounds)

    def level(self, n):
        self._check_level(n)
        return self.K.level(n, n)

    def _face(self, n, i, x):
        return self.K._dh(n, n - 1, i, self.K._dv(n, n, i, x))

    def _degen(self, n, i, x):
        return self.K._sh(n, n + 1, i, self.K._sv(n, n, i, x))

    def _face_array(self, n, i):
        return self.K.dh_array(n, n - 1, i)[self.K.dv_array(n, n, i)]

    def _degen_array(self, n, i):
        return self.K.sh_array(n, n + 1, i)[self.K.sv_array(n, n, i)]


def diag(K: BisimplicialView) -> Diag:
    return Diag(K)


class WBar(SimplicialView):
    """The codiagonal: n-simplices (x_0, ..., x_n) with x_p in K_{p,n-p}
    and x_p d^0_v = x_{p+1} d^{p+1}_h."""

    def __init__(self, K: BisimplicialView):
        super().__init__()
        self.K = K

    def _cells(self, n):
        K = self.K
        if n == 0:
            return [(x,) for x in K.cells(0, 0)]
        doms = [np.arange(K.size(p, n - p)) for p in range(n + 1)]
        eqs = [search.Eq(p, K.dv_array(p, n - p, 0), p + 1, K.dh_array(p + 1, n - p - 1, p + 1),
                         K.size(p, n - p - 1)) for p in range(n)]
        rows = search.solve(doms, eqs)
        cells = [K.cells(p, n - p) for p in range(n + 1)]
        return [tuple(cells[p][r[p]] for p in range(n + 1)) for r in rows.tolist()]

    def _face(self, n, i, x):
        K = self.K
        out = []
        for j in range(n + 1):
            if j < i:
                out.append(K._dv(j, n - j, i - j, x[j]))
            elif j > i:
                out.append(K._dh(j, n - j, i, x[j]))
        return tuple(out)

    def _degen(self, n, i, x):
        K = self.K
        out = [K._sv(j, n - j, i - j, x[j]) for j in range(i + 1)]
        out += [K._sh(j - 1, n - j + 1, i, x[j - 1]) for j in range(i + 1, n + 2)]
        return tuple(out)


def wbar(K: BisimplicialView) -> WBar:
    return WBar(K)


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def identity_violations(K: BisimplicialView, p: int, q: int, samples: int | None = None,
                        rng: random.Random | None = None) -> list:
    """Horizontal and vertical simplicial identities plus commutation of
    horizontal with vertical operators on cells of bidegree (p, q)."""
    from .simplicial import identity_violations as simp
    cells = K.cells(p, q)
    if samples is not None and samples < len(cells):
        rng = rng or random.Random(0)
        cells = rng.sample(cells, samples)
    bad = []
    # the row / column identities on exactly these cells
    bad += _restricted(simp, K.col(q), p, cells)
    bad += _restricted(simp, K.row(p), q, cells)
    for x in cells:
        for i in range(p + 1):
            for j in range(q + 1):
                if p >= 1 and q >= 1 and K.dv(p - 1, q, j, K.dh(p, q, i, x)) != K.dh(p, q - 1, i, K.dv(p, q, j, x)):
                    bad.append(("d_h d_v commute", p, q, i, j, x))
                if not _bounded(K, p + 1, q + 1):
                    continue
                if K.sv(p + 1, q, j, K.sh(p, q, i, x)) != K.sh(p, q + 1, i, K.sv(p, q, j, x)):
                    bad.append(("s_h s_v commute", p, q, i, j, x))
                if p >= 1 and K.sv(p - 1, q, j, K.dh(p, q, i, x)) != K.dh(p, q + 1, i, K.sv(p, q, j, x)):
                    bad.append(("d_h s_v commute", p, q, i, j, x))
                if q >= 1 and K.sh(p, q - 1, i, K.dv(p, q, j, x)) != K.dv(p + 1, q, j, K.sh(p, q, i, x)):
                    bad.append(("s_h d_v commute", p, q, i, j, x))
    return bad


def _bounded(K, p, q) -> bool:
    return K.bounds is None or (p <= K.bounds[0] and q <= K.bounds[1])


class _Sample(SimplicialView):
    """Wrap a view so that level n lists only the given cells."""

    def __init__(self, L, n, cells):
        super().__init__()
        self.L, self.n, self.cells_ = L, n, cells
        self.max_level = L.max_level

    def simplices(self, m):
        return self.cells_ if m == self.n else self.L.simplices(m)

    def face(self, n, i, x):
        return self.L.face(n, i, x)

    def degeneracy(self, n, i, x):
        return self.L.degeneracy(n, i, x)


def _restricted(fn, L, n, cells):
    return fn(_Sample(L, n, cells), n)


# ---------------------------------------------------------------------------
# bihorns and the extension condition
# ---------------------------------------------------------------------------

def bihorn_equations(K: BisimplicialView, p: int, q: int, k: int, l: int):
    """Variables: horizontal facets x_i (i != k) of bidegree (p-1, q), then
    vertical facets x'_j (j != l) of bidegree (p, q-1)."""
    hs = [i for i in range(p + 1) if i != k]
    vs = [j for j in range(q + 1) if j != l]
    hv = {i: n for n, i in enumerate(hs)}
    vv = {j: len(hs) + n for n, j in enumerate(vs)}
    eqs = []
    if p >= 2:
        for j in hs:
            for i in hs:
                if i < j:
                    eqs.append(search.Eq(hv[j], K.dh_array(p - 1, q, i), hv[i],
                                         K.dh_array(p - 1, q, j - 1), K.size(p - 2, q)))
    if q >= 2:
        for j in vs:
            for i in vs:
                if i < j:
                    eqs.append(search.Eq(vv[j], K.dv_array(p, q - 1, i), vv[i],
                                         K.dv_array(p, q - 1, j - 1), K.size(p, q - 2)))
    for i in hs:
        for j in vs:
            eqs.append(search.Eq(vv[j], K.dh_array(p, q - 1, i), hv[i],
                                 K.dv_array(p - 1, q, j), K.size(p - 1, q - 1)))
    doms = [np.arange(K.size(p - 1, q))] * len(hs) + [np.arange(K.size(p, q - 1))] * len(vs)
    return hs, vs, doms, eqs


def bihorn_table(K, p, q, k, l) -> np.ndarray:
    hs, vs, doms, eqs = bihorn_equations(K, p, q, k, l)
    return search.solve(doms, eqs)


def bihorn_filler_counts(K, p, q, k, l, rows):
    hs = [i for i in range(p + 1) if i != k]
    vs = [j for j in range(q + 1) if j != l]
    top = [K.dh_array(p, q, i) for i in hs] + [K.dv_array(p, q, j) for j in vs]
    rad = [K.size(p - 1, q)] * len(hs) + [K.size(p, q - 1)] * len(vs)
    return search.lookup_counts(top, rad, [rows[:, c] for c in range(rows.shape[1])])


@dataclass
class ExtensionReport:
    ok: bool
    P: int
    Q: int
    rows: dict = field(default_factory=dict)      # p -> Kan report json
    cols: dict = field(default_factory=dict)      # q -> Kan report json
    bihorns: dict = field(default_factory=dict)   # "p,q,k,l" -> [min, max, count]
    failure: dict | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "P": self.P, "Q": self.Q, "rows": self.rows, "cols": self.cols,
                "bihorns": self.bihorns, "failure": self.failure}


def extension_check(K: BisimplicialView, P: int, Q: int, stop_at_first: bool = False) -> ExtensionReport:
    rep = ExtensionReport(True, P, Q)
    for p in range(P + 1):
        r = kan_check(K.row(p), Q)
        rep.rows[str(p)] = r.to_json()
        if not r.ok and rep.ok:
            rep.ok = False
            rep.failure = {"where": f"row K_{{{p},*}}", **r.failure}
            if stop_at_first:
                return rep
    for q in range(Q + 1):
        c = kan_check(K.col(q), P)
        rep.cols[str(q)] = c.to_json()
        if not c.ok and rep.ok:
            rep.ok = False
            rep.failure = {"where": f"column K_{{*,{q}}}", **c.failure}
            if stop_at_first:
                return rep
    for p in range(1, P + 1):
        for q in range(1, Q + 1):
            for k in range(p + 1):
                for l in range(q + 1):
                    rows = bihorn_table(K, p, q, k, l)
                    key = f"{p},{q},{k},{l}"
                    if len(rows) == 0:
                        rep.bihorns[key] = [0, 0, 0]
                        continue
                    cnt, _ = bihorn_filler_counts(K, p, q, k, l, rows)
                    rep.bihorns[key] = [int(cnt.min()), int(cnt.max()), int(len(rows))]
                    if cnt.min() == 0 and rep.ok:
                        rep.ok = False
                        rep.failure = {"where": "bihorn", "p": p, "q": q, "k": k, "l": l,
                                       "facets": _bihorn_witness(K, p, q, k, l,
                                                                 rows[int(np.nonzero(cnt == 0)[0][0])])}
                        if stop_at_first:
                            return rep
    return rep


def _bihorn_witness(K, p, q, k, l, row) -> dict:
    hs = [i for i in range(p + 1) if i != k]
    vs = [j for j in range(q + 1) if j != l]
    out = {}
    for n, i in enumerate(hs):
        out[f"h{i}"] = enc(K.cells(p - 1, q)[row[n]])
    for n, j in enumerate(vs):
        out[f"v{j}"] = enc(K.cells(p, q - 1)[row[len(hs) + n]])
    return out


# ---------------------------------------------------------------------------
# horizontal, vertical and bihomotopy classes
# ---------------------------------------------------------------------------

def certify(K: BisimplicialView, P: int, Q: int) -> ExtensionReport:
    """Memoized extension check."""
    memo = K.__dict__.setdefault("_ext", {})
    for (p0, q0), rep in memo.items():
        if p0 >= P and q0 >= Q:
            return rep
    rep = extension_check(K, P, Q)
    memo[(P, Q)] = rep
    return rep


def hclasses(K, p, q) -> HomotopyClasses:
    """Horizontal homotopy classes: homotopy in K_{*,q} at level p."""
    memo = K.__dict__.setdefault("_hcls", {})
    if (p, q) not in memo:
        memo[(p, q)] = HomotopyClasses(K.col(q), p)
    return memo[(p, q)]


def vclasses(K, p, q) -> HomotopyClasses:
    """Vertical homotopy classes: homotopy in K_{p,*} at level q."""
    memo = K.__dict__.setdefault("_vcls", {})
    if (p, q) not in memo:
        memo[(p, q)] = HomotopyClasses(K.row(p), q)
    return memo[(p, q)]


class BiHomotopy:
    """Bihomotopy on K_{p,q}.  x ~ x' when some y has [x]_h = [y]_h and
    [y]_v = [x']_v.  The constructor refuses unless the extension condition
    holds up to (p+1, q+1)."""

    def __init__(self, K: BisimplicialView, p: int, q: int, certificate: ExtensionReport | None = None,
                 check: bool = True):
        cert = certificate or certify(K, p + 1, q + 1)
        if not cert.ok or cert.P < p + 1 or cert.Q < q + 1:
            raise ExtensionRequired(f"extension condition not verified up to ({p + 1},{q + 1})")
        self.K, self.p, self.q = K, p, q
        self.h = hclasses(K, p, q).root
        self.v = vclasses(K, p, q).root
        n = K.size(p, q)
        # bipartite graph h-class -- v-class; classes are its components
        hv = set(zip(self.h.tolist(), self.v.tolist()))
        self.hv = hv
        a = np.array([h for h, _ in sorted(hv)], dtype=np.int64)
        b = np.array([v for _, v in sorted(hv)], dtype=np.int64)
        comp = search.union_find(2 * n, a, b + n)
        roots = comp[self.h]
        # least member of each class
        least = {}
        for x in range(n):
            least.setdefault(int(roots[x]), x)
        self.root = np.array([least[int(roots[x])] for x in range(n)], dtype=np.int64)
        if check:
            self._check()

    def relation_i(self, x: int, x2: int) -> bool:
        return (int(self.h[x]), int(self.v[x2])) in self.hv

    def relation_ii(self, x: int, x2: int) -> bool:
        return (int(self.h[x2]), int(self.v[x])) in self.hv

    def _check(self):
        """(i) <=> (ii) on all pairs, and (i) is an equivalence relation."""
        hs = sorted(set(self.h.tolist()))
        vs = sorted(set(self.v.tolist()))
        hi = {h: i for i, h in enumerate(hs)}
        vi = {v: i for i, v in enumerate(vs)}
        M = np.zeros((len(hs), len(vs)), dtype=bool)
        for h, v in self.hv:
            M[hi[h], vi[v]] = True
        H = np.array([hi[h] for h in self.h.tolist()])
        V = np.array([vi[v] for v in self.v.tolist()])
        R1 = M[H][:, V]
        R2 = M[H][:, V].T
        if not np.array_equal(R1, R2):
            raise InvariantFailure("bihomotopy: conditions (i) and (ii) disagree")
        if not R1.diagonal().all():
            raise InvariantFailure("bihomotopy not reflexive")
        comp = (R1.astype(np.int64) @ R1.astype(np.int64)) > 0
        if (comp & ~R1).any():
            raise InvariantFailure("bihomotopy not transitive")
        same_root = self.root[:, None] == self.root[None, :]
        if not np.array_equal(same_root, R1):
            raise InvariantFailure("bihomotopy classes disagree with the relation")

    def same(self, x, x2) -> bool:
        K = self.K
        return self.root[K.index(self.p, self.q, x)] == self.root[K.index(self.p, self.q, x2)]

    def rep(self, x):
        K = self.K
        return K.cells(self.p, self.q)[self.root[K.index(self.p, self.q, x)]]

    def classes(self) -> list:
        cells = self.K.cells(self.p, self.q)
        return [cells[r] for r in sorted(set(self.root.tolist()))]


def bihomotopy(K, p, q) -> BiHomotopy:
    memo = K.__dict__.setdefault("_bih", {})
    if (p, q) not in memo:
        memo[(p, q)] = BiHomotopy(K, p, q)
    return memo[(p, q)]


def dir_homotopic(K, p, q, x, x2, direction: str) -> bool:
    certify_or_refuse(K, p + 1, q + 1)
    hc = hclasses(K, p, q) if direction == "horizontal" else vclasses(K, p, q)
    i, j = K.index(p, q, x), K.index(p, q, x2)
    return bool(hc.root[i] == hc.root[j])


def certify_or_refuse(K, P, Q):
    if not certify(K, P, Q).ok:
        raise ExtensionRequired(f"extension condition fails up to ({P},{Q})")


def bihomotopic(K, p, q, x, x2) -> bool:
    b = bihomotopy(K, p, q)
    i, j = K.index(p, q, x), K.index(p, q, x2)
    r1, r2 = b.relation_i(i, j), b.relation_ii(i, j)
    if r1 != r2:
        raise InvariantFailure("bihomotopy: the two orders of composition disagree")
    return r1


def class_face_maps(K, p, q) -> dict:
    """The four induced maps on classes, each checked for independence of
    the representative.  Keys: ("dh", i), ("dv", j) from bihomotopy classes
    at (p, q); ("sv", j) from horizontal classes, ("sh", i) from vertical
    classes.  Values map representative ids to representative ids."""
    b = bihomotopy(K, p, q)
    n = K.size(p, q)
    out = {}
    if p >= 1:
        for i in range(p + 1):
            tgt = vclasses(K, p - 1, q).root[K.dh_array(p, q, i)]
            out[("dh", i)] = _induced(b.root, tgt, n, f"[[x]] -> [x d^{i}_h]_v")
    if q >= 1:
        for j in range(q + 1):
            tgt = hclasses(K, p, q - 1).root[K.dv_array(p, q, j)]
            out[("dv", j)] = _induced(b.root, tgt, n, f"[[x]] -> [x d^{j}_v]_h")
    bq = bihomotopy(K, p, q + 1)
    for j in range(q + 1):
        tgt = bq.root[K.sv_array(p, q, j)]
        out[("sv", j)] = _induced(hclasses(K, p, q).root, tgt, n, f"[x]_h -> [[x s^{j}_v]]")
    bp = bihomotopy(K, p + 1, q)
    for i in range(p + 1):
        tgt = bp.root[K.sh_array(p, q, i)]
        out[("sh", i)] = _induced(vclasses(K, p, q).root, tgt, n, f"[x]_v -> [[x s^{i}_h]]")
    return out


def _induced(src_root, tgt, n, what) -> dict:
    m: dict = {}
    for x in range(n):
        s, t = int(src_root[x]), int(tgt[x])
        if m.setdefault(s, t) != t:
            raise InvariantFailure(f"{what} is not well defined")
    return m


def horizontal_groupoid(K, q):
    """P K_{*,q}."""
    return fundamental_groupoid(K.col(q))


def vertical_groupoid(K, p):
    """P K_{p,*}."""
    return fundamental_groupoid(K.row(p))


# ---------------------------------------------------------------------------
# the Alexander-Whitney map and the Dec / W-bar adjunction
# ---------------------------------------------------------------------------

def phi_star(K: BisimplicialView, n: int, z):
    """diag K -> W-bar K.  Component p keeps horizontal vertices 0..p and
    vertical vertices p..n of z in K_{n,n}."""
    out = []
    for p in range(n + 1):
        x = z
        for m in range(n, p, -1):           # drop horizontal vertices n, ..., p+1
            x = K.dh(m, n, m, x)
        for m in range(n, n - p, -1):       # drop vertical vertices 0, ..., p-1
            x = K.dv(p, m, 0, x)
        out.append(x)
    return tuple(out)


def check_phi_star(K: BisimplicialView, n_max: int) -> list:
    """phi* lands in W-bar K and commutes with faces and degeneracies."""
    D, W = diag(K), wbar(K)
    bad = []
    for n in range(n_max + 1):
        wset = W.level(n).index
        for z in D.simplices(n):
            w = phi_star(K, n, z)
            if w not in wset:
                bad.append(("not a W-bar simplex", n, z))
                continue
            if n >= 1:
                for i in range(n + 1):
                    if phi_star(K, n - 1, D.face(n, i, z)) != W.face(n, i, w):
                        bad.append(("face", n, i, z))
            if n < n_max:
                for i in range(n + 1):
                    if phi_star(K, n + 1, D.degeneracy(n, i, z)) != W.degeneracy(n, i, w):
                        bad.append(("degeneracy", n, i, z))
    return bad


def unit(L: SimplicialView, n: int, y):
    """L -> W-bar Dec L: y |-> (y s_0, ..., y s_n)."""
    return tuple(L.degeneracy(n, p, y) for p in range(n + 1))


def counit(K: BisimplicialView, p: int, q: int, x):
    """Dec W-bar K -> K on a (p, q)-cell x = (x_0, ..., x_{p+1+q}):
    x_{p+1} d^{p+1}_h, which equals x_p d^0_v."""
    return K.dh(p + 1, q, p + 1, x[p + 1])


def counit_literal(K: BisimplicialView, p: int, q: int, x):
    """x_{p+1} d^0_h: the other reading, which breaks the triangle identities."""
    return K.dh(p + 1, q, 0, x[p + 1])


def check_unit(L: SimplicialView, n_max: int) -> list:
    """The unit is a simplicial map into W-bar Dec L."""
    W = wbar(dec(L))
    bad = []
    for n in range(n_max + 1):
        wset = W.level(n).index
        for y in L.simplices(n):
            u = unit(L, n, y)
            if u not in wset:
                bad.append(("not a W-bar simplex", n, y))
                continue
            if n >= 1:
                for i in range(n + 1):
                    if unit(L, n - 1, L.face(n, i, y)) != W.face(n, i, u):
                        bad.append(("face", n, i, y))
            if n < n_max:
                for i in range(n + 1):
                    if unit(L, n + 1, L.degeneracy(n, i, y)) != W.degeneracy(n, i, u):
                        bad.append(("degeneracy", n, i, y))
    return bad


def check_counit(K: BisimplicialView, N: int, fn=counit) -> list:
    """The counit is a bisimplicial map Dec W-bar K -> K on p + q < N."""
    DW = dec(wbar(K))
    bad = []
    for p in range(N):
        for q in range(N - p):
            kset = K.level(p, q).index
            for x in DW.cells(p, q):
                v = fn(K, p, q, x)
                if v not in kset:
                    bad.append(("wrong bidegree", p, q, x))
                    continue
                if p >= 1:
                    for i in range(p + 1):
                        if fn(K, p - 1, q, DW.dh(p, q, i, x)) != K.dh(p, q, i, v):
                            bad.append(("dh", p, q, i, x))
                if q >= 1:
                    for j in range(q + 1):
                        if fn(K, p, q - 1, DW.dv(p, q, j, x)) != K.dv(p, q, j, v):
                            bad.append(("dv", p, q, j, x))
    return bad


def check_triangles(L: SimplicialView, K: BisimplicialView, N: int, fn=counit) -> list:
    """counit_{Dec L} . Dec(unit_L) = id on Dec L, and
    W-bar(counit_K) . unit_{W-bar K} = id on W-bar K."""
    bad = []
    D = dec(L)
    for p in range(N):
        for q in range(N - p):
            for z in D.cells(p, q):
                if fn(D, p, q, unit(L, p + 1 + q, z)) != z:
                    bad.append(("Dec triangle", p, q, z))
    W = wbar(K)
    for n in range(N):
        for x in W.simplices(n):
            u = unit(W, n, x)
            back = tuple(fn(K, p, n - p, u[p]) for p in range(n + 1))
            if back != x:
                bad.append(("W-bar triangle", n, x))
    return bad
