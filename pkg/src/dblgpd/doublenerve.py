"""The double nerve NN g of a double groupoid (or double category) as a
generated bisimplicial set, and the checks relating g to its nerve.

Cells of bidegree (p, q):
    (0, 0)  an object
    (p, 0)  a horizontal string (f_1, ..., f_p), f_1 leftmost
    (0, q)  a vertical string (u_1, ..., u_q), u_1 on top
    (p, q)  a tuple of q rows of p square ids; row 1 is the top row and
            column 1 the leftmost column.

Horizontal vertex 0 is on the left, vertical vertex 0 on top, so that
d^0_h of a single square is its right edge and d^0_v its bottom edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import search
from . import simplicial as S
from .bisimplicial import BisimplicialView, diag, extension_check
from .core import DoubleFunctor, DoubleGroupoid, check_filling
from .groups import find_isomorphism
from . import homotopy as H

MAX_SQUARES = 128


class NNError(ValueError):
    pass


class DoubleNerve(BisimplicialView):
    def __init__(self, g: DoubleGroupoid):
        if len(g.squares) > MAX_SQUARES:
            raise NNError(f"{len(g.squares)} squares exceed the cap of {MAX_SQUARES}")
        super().__init__()
        self.g = g
        self._sq_by_tv: dict = {}
        for a in g.sorted_squares:
            self._sq_by_tv.setdefault(g.tv(a), []).append(a)
        self._h_by_tgt: dict = {}
        for f in g.sorted_hmors:
            self._h_by_tgt.setdefault(g.hmors[f][1], []).append(f)
        self._v_by_tgt: dict = {}
        for u in g.sorted_vmors:
            self._v_by_tgt.setdefault(g.vmors[u][1], []).append(u)

    # -- enumeration ----------------------------------------------------
    def _cells(self, p, q):
        g = self.g
        if p == 0 and q == 0:
            return list(g.sorted_objects)
        if q == 0:
            return self._strings(p, g.sorted_hmors, g.hmors, self._h_by_tgt)
        if p == 0:
            return self._strings(q, g.sorted_vmors, g.vmors, self._v_by_tgt)
        if p == 1:
            cols = [(a,) for a in g.sorted_squares]
            for _ in range(q - 1):
                cols = [c + (b,) for c in cols for b in self._sq_by_tv.get(g.sv(c[-1]), ())]
            return [tuple((a,) for a in c) for c in cols]
        # p >= 2: glue columns along shared vertical strings
        cols = self.cells(1, q)
        eqs = [search.Eq(j, self.dh_array(1, q, 0), j + 1, self.dh_array(1, q, 1), self.size(0, q))
               for j in range(p - 1)]
        rows = search.solve([np.arange(len(cols))] * p, eqs)
        return [tuple(tuple(cols[c][r][0] for c in row) for r in range(q)) for row in rows.tolist()]

    @staticmethod
    def _strings(n, ids, table, by_tgt):
        out = [(f,) for f in ids]
        for _ in range(n - 1):
            out = [s + (f,) for s in out for f in by_tgt.get(table[s[-1]][0], ())]
        return out

    # -- faces ----------------------------------------------------------
    def _dh(self, p, q, i, x):
        g = self.g
        if q == 0:
            if p == 1:
                return g.hmors[x[0]][0] if i == 0 else g.hmors[x[0]][1]
            if i == 0:
                return x[1:]
            if i == p:
                return x[:-1]
            return x[:i - 1] + (g.comp_h_mor[(x[i - 1], x[i])],) + x[i + 1:]
        if p == 1:
            k = 0 if i == 0 else 1          # right edge sh, left edge th
            return tuple(g.squares[row[0]][k] for row in x)
        if i == 0:
            return tuple(row[1:] for row in x)
        if i == p:
            return tuple(row[:-1] for row in x)
        ch = g.comp_h_sq
        return tuple(row[:i - 1] + (ch[(row[i - 1], row[i])],) + row[i + 1:] for row in x)

    def _dv(self, p, q, j, x):
        g = self.g
        if p == 0:
            if q == 1:
                return g.vmors[x[0]][0] if j == 0 else g.vmors[x[0]][1]
            if j == 0:
                return x[1:]
            if j == q:
                return x[:-1]
            return x[:j - 1] + (g.comp_v_mor[(x[j - 1], x[j])],) + x[j + 1:]
        if q == 1:
            k = 2 if j == 0 else 3          # bottom edge sv, top edge tv
            return tuple(g.squares[a][k] for a in x[0])
        if j == 0:
            return x[1:]
        if j == q:
            return x[:-1]
        cv = g.comp_v_sq
        merged = tuple(cv[(a, b)] for a, b in zip(x[j - 1], x[j]))
        return x[:j - 1] + (merged,) + x[j + 1:]

    # -- degeneracies ---------------------------------------------------
    def _sh(self, p, q, i, x):
        g = self.g
        if q == 0:
            if p == 0:
                return (g.id_h_obj[x],)
            v = g.hmors[x[0]][1] if i == 0 else g.hmors[x[i - 1]][0]
            return x[:i] + (g.id_h_obj[v],) + x[i:]
        if p == 0:
            return tuple((g.id_h_sq[u],) for u in x)
        out = []
        for row in x:
            edge = g.th(row[i]) if i < p else g.sh(row[p - 1])
            out.append(row[:i] + (g.id_h_sq[edge],) + row[i:])
        return tuple(out)

    def _sv(self, p, q, j, x):
        g = self.g
        if p == 0:
            if q == 0:
                return (g.id_v_obj[x],)
            v = g.vmors[x[0]][1] if j == 0 else g.vmors[x[j - 1]][0]
            return x[:j] + (g.id_v_obj[v],) + x[j:]
        if q == 0:
            return (tuple(g.id_v_sq[f] for f in x),)
        edges = [g.tv(a) for a in x[j]] if j < q else [g.sv(a) for a in x[q - 1]]
        return x[:j] + (tuple(g.id_v_sq[e] for e in edges),) + x[j:]


def nn(g: DoubleGroupoid) -> DoubleNerve:
    memo = g.__dict__.setdefault("_nn", [])
    if not memo:
        memo.append(DoubleNerve(g))
    return memo[0]


def nn_map(F: DoubleFunctor, p: int, q: int, x):
    """NN F on a (p, q)-cell."""
    if p == 0 and q == 0:
        return F.obj[x]
    if q == 0:
        return tuple(F.hmor[f] for f in x)
    if p == 0:
        return tuple(F.vmor[u] for u in x)
    return tuple(tuple(F.sq[a] for a in row) for row in x)


def check_nn_map(F: DoubleFunctor, P: int, Q: int) -> list:
    """NN F is a bisimplicial map on bidegrees up to (P, Q)."""
    A, B = nn(F.source), nn(F.target)
    bad = []
    for p in range(P + 1):
        for q in range(Q + 1):
            bset = B.level(p, q).index
            for x in A.cells(p, q):
                y = nn_map(F, p, q, x)
                if y not in bset:
                    bad.append(("not a cell", p, q, x))
                    continue
                for i in range(p + 1 if p else 0):
                    if nn_map(F, p - 1, q, A.dh(p, q, i, x)) != B.dh(p, q, i, y):
                        bad.append(("dh", p, q, i, x))
                for j in range(q + 1 if q else 0):
                    if nn_map(F, p, q - 1, A.dv(p, q, j, x)) != B.dv(p, q, j, y):
                        bad.append(("dv", p, q, j, x))
                for i in range(p + 1):
                    if nn_map(F, p + 1, q, A.sh(p, q, i, x)) != B.sh(p, q, i, y):
                        bad.append(("sh", p, q, i, x))
                for j in range(q + 1):
                    if nn_map(F, p, q + 1, A.sv(p, q, j, x)) != B.sv(p, q, j, y):
                        bad.append(("sv", p, q, j, x))
    return bad


def grid_dump(K: DoubleNerve, p: int, q: int, x) -> dict:
    """A cell with its boundary annotations, for the CLI."""
    g = K.g
    if p == 0 or q == 0:
        return {"bidegree": [p, q], "cell": x if isinstance(x, str) else list(x)}
    return {"bidegree": [p, q], "squares": [list(r) for r in x],
            "top": [g.tv(a) for a in x[0]], "bottom": [g.sv(a) for a in x[-1]],
            "left": [g.th(r[0]) for r in x], "right": [g.sh(r[-1]) for r in x]}


# ---------------------------------------------------------------------------
# the equivalence of (i) groupoid + filling, (ii) extension, (iii) Kan diagonal
# ---------------------------------------------------------------------------

@dataclass
class TriReport:
    name: str
    i: bool
    ii: bool
    iii: bool
    witnesses: dict = field(default_factory=dict)
    subcase_11: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.i == self.ii == self.iii

    def to_json(self) -> dict:
        return {"name": self.name, "i": self.i, "ii": self.ii, "iii": self.iii,
                "agree": self.agree, "subcase_11": self.subcase_11, "witnesses": self.witnesses}


def equivalence_suite(g: DoubleGroupoid, P: int = 3, Q: int = 3, n: int = 3) -> TriReport:
    val = g.validation
    fill = check_filling(g) if val.is_double_category else None
    i = bool(val.is_double_groupoid and fill is not None and fill.ok)
    K = nn(g)
    ext = extension_check(K, P, Q)
    kan = S.kan_check(diag(K), n)
    rep = TriReport(g.name, i, ext.ok, kan.ok)
    rep.subcase_11 = {k: v for k, v in ext.bihorns.items() if k.startswith("1,1,")}
    if not i:
        rep.witnesses["i"] = {"groupoid_failures": val.groupoid_failures[:3],
                              "filling_counterexamples": [list(c) for c in fill.counterexamples[:3]]
                              if fill else None}
    if not ext.ok:
        rep.witnesses["ii"] = ext.failure
    if not kan.ok:
        rep.witnesses["iii"] = kan.failure
    return rep


def unique_filler_check(g: DoubleGroupoid, n: int = 3) -> bool:
    """Every horn Lambda^k[n] of diag NN g has exactly one filler."""
    L = diag(nn(g))
    for k in range(n + 1):
        horns = S.horn_table(L, n, k)
        cnt, _ = S.filler_counts(L, n, k, horns)
        if len(cnt) and (cnt.min() != 1 or cnt.max() != 1):
            return False
    return True


# ---------------------------------------------------------------------------
# homotopy groups of g versus those of diag NN g
# ---------------------------------------------------------------------------

@dataclass
class IsoReport:
    name: str
    ok: bool
    pi0: dict = field(default_factory=dict)
    pi1: dict = field(default_factory=dict)
    pi2: dict = field(default_factory=dict)
    phi: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "pi0": self.pi0, "pi1": self.pi1,
                "pi2": self.pi2, "phi": self.phi}


def phi_check(g: DoubleGroupoid, a) -> dict:
    """Phi[alpha] = [t^v alpha, s^h alpha] from pi_1(diag NN g, a) to
    pi_1(g, a): well defined, a homomorphism and bijective."""
    L = diag(nn(g))
    G1 = S.pi_n(L, a, 1)
    P = H.pi1(g, a)
    hc = S._classes(L, 1)
    cells = L.simplices(1)
    phi: dict = {}
    const = L.index(0, a)
    for idx, x in enumerate(cells):
        if L.face_array(1, 0)[idx] != const or L.face_array(1, 1)[idx] != const:
            continue
        al = x[0][0]
        src = S.enc(cells[hc.rep_id(idx)])
        tgt = P.class_label((g.tv(al), g.sh(al)))
        if phi.setdefault(src, tgt) != tgt:
            return {"well_defined": False}
    hom = all(phi[G1.mul(u, v)] == P.group.mul(phi[u], phi[v])
              for u in G1.elements for v in G1.elements)
    surj = set(phi.values()) == set(P.group.elements)
    inj = len(set(phi.values())) == len(phi)
    return {"well_defined": True, "homomorphism": hom, "surjective": surj, "injective": inj,
            "map": {k: phi[k] for k in sorted(phi)}}


def homotopy_comparison(g: DoubleGroupoid) -> IsoReport:
    """pi_i(g, a) against pi_i(diag NN g, a) for i = 0, 1, 2 and every a."""
    L = diag(nn(g))
    rep = IsoReport(g.name, True)
    p0g, p0L = H.pi0(g), S.pi0(L)
    rep.pi0 = {"double_groupoid": p0g, "diagonal": p0L, "equal": p0g == p0L}
    rep.ok &= p0g == p0L
    for a in g.sorted_objects:
        A1, B1 = H.pi1(g, a).group, S.pi_n(L, a, 1)
        iso1 = find_isomorphism(A1, B1)
        A2, B2 = H.pi2(g, a), S.pi_n(L, a, 2)
        iso2 = find_isomorphism(A2, B2)
        rep.pi1[a] = {"order": A1.order, "iso": iso1}
        rep.pi2[a] = {"order": A2.order, "iso": iso2}
        ph = phi_check(g, a)
        rep.phi[a] = ph
        rep.ok &= iso1 is not None and iso2 is not None and ph.get("well_defined", False) \
            and ph["homomorphism"] and ph["surjective"] and ph["injective"]
    return rep
