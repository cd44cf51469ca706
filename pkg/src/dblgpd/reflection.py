"""The homotopy double groupoid PP K of a certified bisimplicial set, the
unit eps: K -> NN PP K, and the comparison of PP K with W-bar K.

Objects of PP K are vertices, horizontal morphisms are classes in
P K_{*,0}, vertical ones classes in P K_{0,*}, squares are bihomotopy
classes of (1,1)-bisimplices x with right edge [x d^0_h]_v, left edge
[x d^1_h]_v, bottom [x d^0_v]_h and top [x d^1_v]_h.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import homotopy as H
from . import simplicial as S
from .bisimplicial import (BisimplicialView, bihomotopy, extension_check, hclasses, vclasses,
                           wbar)
from .core import DoubleFunctor, DoubleGroupoid, check_filling
from .doublenerve import nn, nn_map
from .groups import find_isomorphism


class CertificationError(ValueError):
    pass


class InvariantFailure(AssertionError):
    pass


@dataclass
class Certificate:
    ok: bool
    extension: dict
    pi2_rows: dict = field(default_factory=dict)   # vertex -> order of pi_2(K_{0,*}, a)
    pi2_cols: dict = field(default_factory=dict)   # vertex -> order of pi_2(K_{*,0}, a)
    reasons: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok, "extension_ok": self.extension["ok"],
                "pi2_row": self.pi2_rows, "pi2_col": self.pi2_cols, "reasons": self.reasons}


def certify(K: BisimplicialView, P: int = 2, Q: int = 2, kan_level: int = 3) -> Certificate:
    """Extension condition up to (P, Q), Kan conditions of K_{*,0} and
    K_{0,*} up to kan_level, and pi_2 = 0 for both at every vertex."""
    memo = K.__dict__.setdefault("_pp_cert", {})
    key = (P, Q, kan_level)
    if key in memo:
        return memo[key]
    ext = extension_check(K, P, Q)
    cert = Certificate(ext.ok, ext.to_json())
    if not ext.ok:
        cert.reasons.append(f"extension condition fails: {ext.failure}")
    for name, L in (("K_{*,0}", K.col(0)), ("K_{0,*}", K.row(0))):
        kr = S.kan_check(L, kan_level)
        if not kr.ok:
            cert.ok = False
            cert.reasons.append(f"{name} not Kan: {kr.failure}")
    if cert.ok:
        for a in K.cells(0, 0):
            r = S.pi_n(K.row(0), a, 2).order
            c = S.pi_n(K.col(0), a, 2).order
            cert.pi2_rows[S.enc(a)] = r
            cert.pi2_cols[S.enc(a)] = c
            if r != 1 or c != 1:
                cert.ok = False
                cert.reasons.append(f"pi_2 does not vanish at {S.enc(a)}")
    memo[key] = cert
    return cert


def _index_by(cols: list) -> dict:
    """Map tuples of column values to sorted lists of row indices."""
    d: dict = {}
    for i, key in enumerate(zip(*[c.tolist() for c in cols])):
        d.setdefault(key, []).append(i)
    return d


class PP:
    """PP K together with the bookkeeping needed for eps and functoriality."""

    def __init__(self, K: BisimplicialView, certificate: Certificate | None = None):
        cert = certificate or certify(K)
        if not cert.ok:
            raise CertificationError("; ".join(cert.reasons) or "certification failed")
        self.K, self.cert = K, cert
        self.bh = bihomotopy(K, 1, 1)
        self.hc10 = hclasses(K, 1, 0)   # horizontal classes of K_{1,0}
        self.vc01 = vclasses(K, 0, 1)   # vertical classes of K_{0,1}
        self.hc11 = hclasses(K, 1, 1)
        self.vc11 = vclasses(K, 1, 1)
        self._build()

    # labels ------------------------------------------------------------
    def obj_label(self, a) -> str:
        return "o:" + S.enc(a)

    def h_label(self, i: int) -> str:
        return "h:" + S.enc(self.K.cells(1, 0)[self.hc10.root[i]])

    def v_label(self, i: int) -> str:
        return "v:" + S.enc(self.K.cells(0, 1)[self.vc01.root[i]])

    def sq_label(self, i: int) -> str:
        return "sq:" + S.enc(self.K.cells(1, 1)[self.bh.root[i]])

    def hmor_of(self, f) -> str:
        return self.h_label(self.K.index(1, 0, f))

    def vmor_of(self, u) -> str:
        return self.v_label(self.K.index(0, 1, u))

    def square_of(self, x) -> str:
        return self.sq_label(self.K.index(1, 1, x))

    # construction ---------------------------------------------------------
    def _build(self):
        K = self.K
        V0 = K.cells(0, 0)
        objects = tuple(self.obj_label(a) for a in V0)
        hroots = sorted(set(self.hc10.root.tolist()))
        vroots = sorted(set(self.vc01.root.tolist()))
        hmors = {self.h_label(r): (self.obj_label(V0[K.dh_array(1, 0, 0)[r]]),
                                   self.obj_label(V0[K.dh_array(1, 0, 1)[r]])) for r in hroots}
        vmors = {self.v_label(r): (self.obj_label(V0[K.dv_array(0, 1, 0)[r]]),
                                   self.obj_label(V0[K.dv_array(0, 1, 1)[r]])) for r in vroots}
        comp_h_mor = self._groupoid_comp(K.col(0), self.h_label)
        comp_v_mor = self._groupoid_comp(K.row(0), self.v_label)
        sroots = sorted(set(self.bh.root.tolist()))
        squares = {}
        for r in sroots:
            squares[self.sq_label(r)] = (self.v_label(K.dh_array(1, 1, 0)[r]),
                                         self.v_label(K.dh_array(1, 1, 1)[r]),
                                         self.h_label(K.dv_array(1, 1, 0)[r]),
                                         self.h_label(K.dv_array(1, 1, 1)[r]))
        # boundaries must not depend on the representative
        for x in range(K.size(1, 1)):
            lab = self.sq_label(x)
            bd = (self.v_label(K.dh_array(1, 1, 0)[x]), self.v_label(K.dh_array(1, 1, 1)[x]),
                  self.h_label(K.dv_array(1, 1, 0)[x]), self.h_label(K.dv_array(1, 1, 1)[x]))
            if squares[lab] != bd:
                raise InvariantFailure(f"square boundary depends on the representative at {lab}")
        id_h_obj = {self.obj_label(a): self.h_label(K.sh_array(0, 0, 0)[i]) for i, a in enumerate(V0)}
        id_v_obj = {self.obj_label(a): self.v_label(K.sv_array(0, 0, 0)[i]) for i, a in enumerate(V0)}
        id_h_sq, id_v_sq = {}, {}
        for u in range(K.size(0, 1)):
            lab = self.sq_label(K.sh_array(0, 1, 0)[u])
            if id_h_sq.setdefault(self.v_label(u), lab) != lab:
                raise InvariantFailure("I^h depends on the representative")
        for f in range(K.size(1, 0)):
            lab = self.sq_label(K.sv_array(1, 0, 0)[f])
            if id_v_sq.setdefault(self.h_label(f), lab) != lab:
                raise InvariantFailure("I^v depends on the representative")
        self.objects, self.hmors, self.vmors, self.squares = objects, hmors, vmors, squares
        comp_h_sq = self._comp_h_squares(squares)
        comp_v_sq = self._comp_v_squares(squares)
        self.g = DoubleGroupoid(objects, hmors, vmors, squares, comp_h_mor, comp_v_mor,
                                comp_h_sq, comp_v_sq, id_h_obj, id_v_obj, id_h_sq, id_v_sq,
                                False, "PP")

    def _groupoid_comp(self, L, label) -> dict:
        """Composition in P L, as a table on labels: [x] o [x'] = [d_1 y]
        for d_2 y = x, d_0 y = x'."""
        comp: dict = {}
        f0, f1, f2 = (L.face_array(2, i) for i in range(3))
        for y in range(L.size(2)):
            key = (label(f2[y]), label(f0[y]))
            val = label(f1[y])
            if comp.setdefault(key, val) != val:
                raise InvariantFailure("fundamental groupoid composite depends on the filler")
        return comp

    def _members(self) -> dict:
        out: dict = {}
        for x, r in enumerate(self.bh.root.tolist()):
            out.setdefault(self.sq_label(x), []).append(x)
        return out

    def _comp_h_squares(self, squares) -> dict:
        """[[x]] o_h [[y]] = [[gamma d^1_h]] with x' = beta d^2_v adjusted
        through a vertical homotopy alpha from x d^0_h to y d^1_h.  Every
        representative and every choice of alpha, beta, gamma is tried and
        must give the same class."""
        K = self.K
        dh11 = [K.dh_array(1, 1, i) for i in range(2)]
        dv11 = [K.dv_array(1, 1, i) for i in range(2)]
        alpha_idx = _index_by([K.dv_array(0, 2, j) for j in range(3)])
        beta_idx = _index_by([K.dh_array(1, 2, 0), K.dv_array(1, 2, 0), K.dv_array(1, 2, 1)])
        gamma_idx = _index_by([K.dh_array(2, 1, 2), K.dh_array(2, 1, 0)])
        sv00 = K.sv_array(0, 0, 0)
        sv10 = K.sv_array(1, 0, 0)
        dv01_0 = K.dv_array(0, 1, 0)
        beta_d2 = K.dv_array(1, 2, 2)
        gamma_d1 = K.dh_array(2, 1, 1)
        members = self._members()
        by_th: dict = {}
        for s, bd in squares.items():
            by_th.setdefault(bd[1], []).append(s)
        table = {}
        for X in sorted(squares):
            for Y in by_th.get(squares[X][0], ()):
                results = set()
                for x in members[X]:
                    a0 = int(dh11[0][x])
                    for y in members[Y]:
                        b = int(dh11[1][y])
                        for al in alpha_idx.get((int(sv00[dv01_0[a0]]), a0, b), ()):
                            for be in beta_idx.get((al, int(sv10[dv11[0][x]]), x), ()):
                                xp = int(beta_d2[be])
                                for ga in gamma_idx.get((xp, y), ()):
                                    results.add(self.sq_label(gamma_d1[ga]))
                if len(results) != 1:
                    raise InvariantFailure(f"horizontal composite of {X}, {Y}: {sorted(results)}")
                table[(X, Y)] = results.pop()
        return table

    def _comp_v_squares(self, squares) -> dict:
        """The same with the directions exchanged."""
        K = self.K
        dh11 = [K.dh_array(1, 1, i) for i in range(2)]
        dv11 = [K.dv_array(1, 1, i) for i in range(2)]
        alpha_idx = _index_by([K.dh_array(2, 0, i) for i in range(3)])
        beta_idx = _index_by([K.dv_array(2, 1, 0), K.dh_array(2, 1, 0), K.dh_array(2, 1, 1)])
        gamma_idx = _index_by([K.dv_array(1, 2, 2), K.dv_array(1, 2, 0)])
        sh00 = K.sh_array(0, 0, 0)
        sh01 = K.sh_array(0, 1, 0)
        dh10_0 = K.dh_array(1, 0, 0)
        beta_d2 = K.dh_array(2, 1, 2)
        gamma_d1 = K.dv_array(1, 2, 1)
        members = self._members()
        by_tv: dict = {}
        for s, bd in squares.items():
            by_tv.setdefault(bd[3], []).append(s)
        table = {}
        for X in sorted(squares):
            for Y in by_tv.get(squares[X][2], ()):
                results = set()
                for x in members[X]:
                    a0 = int(dv11[0][x])
                    for y in members[Y]:
                        b = int(dv11[1][y])
                        for al in alpha_idx.get((int(sh00[dh10_0[a0]]), a0, b), ()):
                            for be in beta_idx.get((al, int(sh01[dh11[0][x]]), x), ()):
                                xp = int(beta_d2[be])
                                for ga in gamma_idx.get((xp, y), ()):
                                    results.add(self.sq_label(gamma_d1[ga]))
                if len(results) != 1:
                    raise InvariantFailure(f"vertical composite of {X}, {Y}: {sorted(results)}")
                table[(X, Y)] = results.pop()
        return table

    # the unit ---------------------------------------------------------------
    def eps(self, p: int, q: int, x):
        """eps: K -> NN PP K.  The (r, j) square of eps(x) is the class of x
        restricted to horizontal vertices {j-1, j} and vertical vertices
        {r-1, r}."""
        K = self.K
        if p == 0 and q == 0:
            return self.obj_label(x)
        if q == 0:
            return tuple(self.hmor_of(restrict(K, p, 0, x, (j - 1, j), (0,))) for j in range(1, p + 1))
        if p == 0:
            return tuple(self.vmor_of(restrict(K, 0, q, x, (0,), (r - 1, r))) for r in range(1, q + 1))
        return tuple(tuple(self.square_of(restrict(K, p, q, x, (j - 1, j), (r - 1, r)))
                           for j in range(1, p + 1)) for r in range(1, q + 1))


def restrict(K: BisimplicialView, p: int, q: int, x, hverts, vverts):
    """Restrict a (p, q)-cell to the given horizontal and vertical vertices."""
    for m in range(p, -1, -1):
        if m not in hverts:
            x = K.dh(p, q, m, x)
            p -= 1
    for m in range(q, -1, -1):
        if m not in vverts:
            x = K.dv(p, q, m, x)
            q -= 1
    return x


def pp(K: BisimplicialView, certificate: Certificate | None = None) -> PP:
    memo = K.__dict__.setdefault("_pp", [])
    if not memo:
        memo.append(PP(K, certificate))
    return memo[0]


def check_eps(P: PP, N: int = 2) -> list:
    """eps is a bisimplicial map on bidegrees up to (N, N)."""
    K, T = P.K, nn(P.g)
    bad = []
    for p in range(N + 1):
        for q in range(N + 1):
            tset = T.level(p, q).index
            for x in K.cells(p, q):
                e = P.eps(p, q, x)
                if e not in tset:
                    bad.append(("not a cell of NN PP K", p, q, S.enc(x)))
                    continue
                if p >= 1:
                    for i in range(p + 1):
                        if P.eps(p - 1, q, K.dh(p, q, i, x)) != T.dh(p, q, i, e):
                            bad.append(("dh", p, q, i, S.enc(x)))
                if q >= 1:
                    for j in range(q + 1):
                        if P.eps(p, q - 1, K.dv(p, q, j, x)) != T.dv(p, q, j, e):
                            bad.append(("dv", p, q, j, S.enc(x)))
                if p < N:
                    for i in range(p + 1):
                        if P.eps(p + 1, q, K.sh(p, q, i, x)) != T.sh(p, q, i, e):
                            bad.append(("sh", p, q, i, S.enc(x)))
                if q < N:
                    for j in range(q + 1):
                        if P.eps(p, q + 1, K.sv(p, q, j, x)) != T.sv(p, q, j, e):
                            bad.append(("sv", p, q, j, S.enc(x)))
    return bad


def canonical_iso(g: DoubleGroupoid) -> DoubleFunctor:
    """g -> PP NN g: a |-> a, f |-> [f], u |-> [u], alpha |-> [[alpha]]."""
    P = pp(nn(g))
    return DoubleFunctor(g, P.g,
                         {a: P.obj_label(a) for a in g.objects},
                         {f: P.hmor_of((f,)) for f in g.hmors},
                         {u: P.vmor_of((u,)) for u in g.vmors},
                         {a: P.square_of(((a,),)) for a in g.squares})


def pp_map(P1: PP, P2: PP, f) -> DoubleFunctor:
    """PP of a bisimplicial map f(p, q, x); checks it is well defined on
    classes."""
    K1 = P1.K
    maps = ({}, {}, {}, {})

    def put(m, k, v):
        if m.setdefault(k, v) != v:
            raise InvariantFailure(f"PP of the map is not well defined at {k}")

    for a in K1.cells(0, 0):
        put(maps[0], P1.obj_label(a), P2.obj_label(f(0, 0, a)))
    for x in K1.cells(1, 0):
        put(maps[1], P1.hmor_of(x), P2.hmor_of(f(1, 0, x)))
    for x in K1.cells(0, 1):
        put(maps[2], P1.vmor_of(x), P2.vmor_of(f(0, 1, x)))
    for x in K1.cells(1, 1):
        put(maps[3], P1.square_of(x), P2.square_of(f(1, 1, x)))
    return DoubleFunctor(P1.g, P2.g, *maps)


@dataclass
class RoundTrip:
    name: str
    iso: bool
    eps_identity: bool
    eps_map_violations: int
    triangle_pp: bool

    @property
    def ok(self) -> bool:
        return self.iso and self.eps_identity and self.eps_map_violations == 0 and self.triangle_pp

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "iso": self.iso,
                "eps_identity": self.eps_identity,
                "eps_map_violations": self.eps_map_violations, "triangle_pp": self.triangle_pp}


def round_trip(g: DoubleGroupoid, N: int = 2) -> RoundTrip:
    """PP NN g = g up to the canonical isomorphism psi; eps on NN g equals
    NN psi cellwise up to (N, N); PP(eps_K) followed by psi^{-1} is the
    identity of PP K for K = NN g."""
    K = nn(g)
    P = pp(K)
    if P.g.validation.violations or not P.g.validation.is_double_groupoid:
        raise InvariantFailure("PP NN g fails the axioms")
    psi = canonical_iso(g)
    iso = psi.is_isomorphism()
    eps_id = all(P.eps(p, q, x) == nn_map(psi, p, q, x)
                 for p in range(N + 1) for q in range(N + 1) for x in K.cells(p, q))
    viol = len(check_eps(P, N))
    # PP(eps): PP K -> PP NN PP K, then the inverse of psi for PP K
    Q = pp(nn(P.g))
    F = pp_map(P, Q, P.eps)
    psi2 = canonical_iso(P.g)
    inv_sq = {v: k for k, v in psi2.sq.items()}
    inv_h = {v: k for k, v in psi2.hmor.items()}
    tri = all(inv_sq[F.sq[s]] == s for s in P.g.squares) and \
        all(inv_h[F.hmor[h]] == h for h in P.g.hmors) and not F.check()
    return RoundTrip(g.name, iso, eps_id, viol, tri)


# ---------------------------------------------------------------------------
# 2-types: PP K against W-bar K
# ---------------------------------------------------------------------------

def verify_2type(K: BisimplicialView, name: str = "K") -> dict:
    P = pp(K)
    G = P.g
    if G.validation.violations or not G.validation.is_double_groupoid:
        raise InvariantFailure(f"PP K fails the axioms: {G.validation.violations[:1]}")
    if not check_filling(G).ok:
        raise InvariantFailure("PP K fails the filling condition")
    W = wbar(K)
    for n in range(4):
        try:
            W.level(n)
        except S.TruncationError as exc:
            raise S.TruncationError(f"insufficient levels: W-bar needs level {n}") from exc
    out = {"name": name, "objects": len(G.objects), "certificate": P.cert.to_json(), "bases": {}}
    p0 = H.pi0(G)
    w0 = S.pi0(W)
    as_w = sorted(sorted(P.obj_label(v[0]) for v in c) for c in w0)
    out["pi0"] = {"pp": p0, "wbar": as_w, "equal": p0 == as_w}
    ok = p0 == as_w
    for a in K.cells(0, 0):
        lab = P.obj_label(a)
        A1, B1 = H.pi1(G, lab).group, S.pi_n(W, (a,), 1)
        A2, B2 = H.pi2(G, lab), S.pi_n(W, (a,), 2)
        i1, i2 = find_isomorphism(A1, B1), find_isomorphism(A2, B2)
        out["bases"][lab] = {"pi1_order": A1.order, "pi2_order": A2.order,
                             "pi1_iso": i1, "pi2_iso": i2}
        ok &= i1 is not None and i2 is not None
    out["ok"] = ok
    return out
