"""pi_0, pi_1, pi_2 of a double groupoid with filling, and weak equivalences."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import DoubleFunctor, DoubleGroupoid, check_filling
from .groups import GroupTable, find_isomorphism


class HomotopyError(ValueError):
    """Precondition failure (not a double groupoid, or filling fails)."""


class InvariantFailure(AssertionError):
    """A property the theory guarantees did not hold."""


def require_filling(g: DoubleGroupoid) -> None:
    rep = g.validation
    if not rep.is_double_groupoid:
        raise HomotopyError(f"{g.name}: not a double groupoid")
    if not check_filling(g).ok:
        raise HomotopyError(f"{g.name}: filling condition fails")


# ---------------------------------------------------------------------------
# pi_0
# ---------------------------------------------------------------------------

def _closure(objects, pairs) -> list:
    parent = {o: o for o in objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    classes: dict = {}
    for o in sorted(objects):
        classes.setdefault(find(o), []).append(o)
    return sorted(classes.values())


def connected_pairs(g: DoubleGroupoid) -> dict:
    """The relation 'a connected to b' through each of its three
    descriptions: corner (g,u), square, and corner (w,f)."""
    gu = {(g.vmors[u][0], g.hmors[h][1]) for h in g.hmors for u in g.vmors
          if g.hmors[h][0] == g.vmors[u][1]}
    sq = set()
    for a in g.squares:
        br, _, _, tl = g.corners(a)
        sq.add((br, tl))
    wf = {(g.hmors[f][0], g.vmors[w][1]) for w in g.vmors for f in g.hmors
          if g.vmors[w][0] == g.hmors[f][1]}
    return {"corner_gu": gu, "square": sq, "corner_wf": wf}


@lru_cache(maxsize=None)
def pi0(g: DoubleGroupoid) -> list:
    """Partition of the objects into connected classes (sorted lists)."""
    require_filling(g)
    rels = connected_pairs(g)
    if not (rels["corner_gu"] == rels["square"] == rels["corner_wf"]):
        raise InvariantFailure("the three descriptions of connectedness differ")
    r = rels["corner_gu"]
    objs = g.sorted_objects
    # the relation itself is already an equivalence
    if any((a, a) not in r for a in objs) or any((b, a) not in r for a, b in r) or \
            any((a, c) not in r for a, b in r for b2, c in r if b == b2):
        raise InvariantFailure("connectedness is not an equivalence relation")
    return _closure(objs, r)


# ---------------------------------------------------------------------------
# pi_1
# ---------------------------------------------------------------------------

@dataclass
class Pi1:
    base: str
    group: GroupTable
    classes: dict          # canonical (g, u) -> sorted list of members
    rep_of: dict           # member (g, u) -> canonical (g, u)
    label: dict            # canonical (g, u) -> element label

    def class_label(self, gu) -> str:
        return self.label[self.rep_of[tuple(gu)]]


def G_of(g: DoubleGroupoid, a) -> list:
    """The set G(a) of corners (g, u) with t^h g = a = s^v u, s^h g = t^v u."""
    return sorted((h, u) for h in g.hmors if g.hmors[h][1] == a
                  for u in g.vmors if g.vmors[u][0] == a and g.hmors[h][0] == g.vmors[u][1])


def _pi1_label(gu) -> str:
    return f"[{gu[0]},{gu[1]}]"


@lru_cache(maxsize=None)
def pi1(g: DoubleGroupoid, a) -> Pi1:
    require_filling(g)
    if a not in g.objects:
        raise HomotopyError(f"unknown object {a!r}")
    elems = G_of(g, a)
    eset = set(elems)
    groups: dict = {}
    for al in g.sorted_squares:
        sh, th, sv, tv = g.squares[al]
        if (tv, sh) in eset:
            groups.setdefault((th, sv), set()).add((tv, sh))
    rel = set()
    for grp in groups.values():
        rel.update((x, y) for x in grp for y in grp)
    for x in elems:
        if (x, x) not in rel:
            raise InvariantFailure(f"~ not reflexive at {x}")
    by_left: dict = {}
    for x, y in rel:
        by_left.setdefault(x, set()).add(y)
    for x, y in rel:
        if (y, x) not in rel or not by_left[y] <= by_left[x]:
            raise InvariantFailure(f"~ not symmetric/transitive at {x}, {y}")
    classes = {}
    rep_of = {}
    for x in elems:
        if x in rep_of:
            continue
        members = sorted(by_left[x])
        classes[members[0]] = members
        for m in members:
            rep_of[m] = members[0]

    def product(c1, c2):
        # every choice of representatives and of the square gamma
        results = set()
        for g1, u1 in classes[c1]:
            for g2, u2 in classes[c2]:
                for gam in g.squares_by_th_sv.get((u1, g2), ()):
                    results.add(rep_of[(g.hcomp(g1, g.tv(gam)), g.vcomp(g.sh(gam), u2))])
        if len(results) != 1:
            raise InvariantFailure(f"pi1 product not well defined on {c1}, {c2}: {results}")
        return results.pop()

    reps = sorted(classes)
    label = {c: _pi1_label(c) for c in reps}
    table = {(c1, c2): product(c1, c2) for c1 in reps for c2 in reps}
    ident = rep_of[(g.id_h_obj[a], g.id_v_obj[a])]
    back = {label[c]: c for c in reps}
    grp = GroupTable.from_function([label[c] for c in reps],
                                   lambda x, y: label[table[(back[x], back[y])]])
    if grp.identity != label[ident]:
        raise InvariantFailure("pi1 identity is not [I^h a, I^v a]")
    # the explicit inverse recipe: any alpha with t^h = u^-1, s^v = g^-1 gives [t^v alpha, s^h alpha]
    for c in reps:
        h, u = c
        for al in g.squares_by_th_sv.get((g.vinv(u), g.hinv(h)), ()):
            if rep_of[(g.tv(al), g.sh(al))] != back[grp.inverse(label[c])]:
                raise InvariantFailure(f"inverse recipe fails at {c}")
    return Pi1(a, grp, classes, rep_of, label)


# ---------------------------------------------------------------------------
# pi_2
# ---------------------------------------------------------------------------

def pi2_elements(g: DoubleGroupoid, a) -> list:
    iv, ih = g.id_v_obj[a], g.id_h_obj[a]
    return [al for al in g.sorted_squares if g.squares[al] == (iv, iv, ih, ih)]


@lru_cache(maxsize=None)
def pi2(g: DoubleGroupoid, a) -> GroupTable:
    require_filling(g)
    els = pi2_elements(g, a)
    for x in els:
        for y in els:
            if g.hcomp_sq(x, y) != g.vcomp_sq(x, y):
                raise InvariantFailure(f"o_h and o_v differ on {x}, {y}")
    grp = GroupTable.from_function(els, g.hcomp_sq)
    if not grp.is_abelian():
        raise InvariantFailure("pi2 is not abelian")
    return grp


def trivial_group() -> GroupTable:
    return GroupTable.trivial("0")


def pi_report(g: DoubleGroupoid) -> dict:
    out = {"pi0": pi0(g), "pi1": {}, "pi2": {}}
    for a in g.sorted_objects:
        out["pi1"][a] = pi1(g, a).group.to_json()
        out["pi2"][a] = pi2(g, a).to_json()
    return out


# ---------------------------------------------------------------------------
# weak equivalences
# ---------------------------------------------------------------------------

@dataclass
class WeakEquivalenceReport:
    ok: bool
    pi0_bijective: bool
    pi1_iso: dict = field(default_factory=dict)
    pi2_iso: dict = field(default_factory=dict)
    reasons: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok, "pi0_bijective": self.pi0_bijective,
                "pi1_iso": self.pi1_iso, "pi2_iso": self.pi2_iso, "reasons": self.reasons}


def _induced_iso(src: GroupTable, tgt: GroupTable, phi: dict) -> bool:
    return (len(set(phi.values())) == tgt.order == src.order
            and all(phi[src.mul(x, y)] == tgt.mul(phi[x], phi[y])
                    for x in src.elements for y in src.elements))


def weak_equivalence(F: DoubleFunctor) -> WeakEquivalenceReport:
    bad = F.check()
    if bad:
        raise HomotopyError(f"not a double functor: {bad[0]}")
    S, T = F.source, F.target
    p0s, p0t = pi0(S), pi0(T)
    cls_t = {o: i for i, c in enumerate(p0t) for o in c}
    image = [{cls_t[F.obj[o]] for o in c} for c in p0s]
    pi0_ok = all(len(i) == 1 for i in image) and \
        sorted(next(iter(i)) for i in image) == list(range(len(p0t)))
    rep = WeakEquivalenceReport(False, pi0_ok)
    if not pi0_ok:
        rep.reasons.append("pi0 not bijective")
    for a in S.sorted_objects:
        P, Q = pi1(S, a), pi1(T, F.obj[a])
        phi = {}
        for m, c in P.rep_of.items():
            lab = Q.class_label((F.hmor[m[0]], F.vmor[m[1]]))
            if phi.setdefault(P.label[c], lab) != lab:
                raise InvariantFailure("induced pi1 map not well defined")
        rep.pi1_iso[a] = _induced_iso(P.group, Q.group, phi)
        if not rep.pi1_iso[a]:
            rep.reasons.append(f"pi1 at {a} not an isomorphism")
        A2, B2 = pi2(S, a), pi2(T, F.obj[a])
        rep.pi2_iso[a] = _induced_iso(A2, B2, {x: F.sq[x] for x in A2.elements})
        if not rep.pi2_iso[a]:
            rep.reasons.append(f"pi2 at {a} not an isomorphism")
    rep.ok = pi0_ok and all(rep.pi1_iso.values()) and all(rep.pi2_iso.values())
    return rep


def isomorphic(g: GroupTable, h: GroupTable):
    return find_isomorphism(g, h)
