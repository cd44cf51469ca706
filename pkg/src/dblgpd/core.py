"""Finite double groupoids: tables, axiom validation, filling, JSON io.

Square conventions.  A square alpha has four edges

        d <--g-- b             sh = u (right edge),  th = w (left edge)
        ^        ^             sv = f (bottom edge), tv = g (top edge)
        w  alpha u
        |        |             horizontal arrows point right to left,
        c <--f-- a             vertical arrows point bottom to top.

alpha o_h beta needs sh(alpha) == th(beta) (beta sits to the right);
alpha o_v beta needs sv(alpha) == tv(beta) (beta sits below).  Every
composition table stores [left, right, result] with result = left o right.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class StructureError(ValueError):
    """Malformed input: dangling ids, duplicate ids, bad JSON shape."""


# ---------------------------------------------------------------------------
# the structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DoubleGroupoid:
    objects: tuple
    hmors: dict                 # id -> (src, tgt)
    vmors: dict                 # id -> (src, tgt)
    squares: dict               # id -> (sh, th, sv, tv)
    comp_h_mor: dict            # (left, right) -> result
    comp_v_mor: dict
    comp_h_sq: dict
    comp_v_sq: dict
    id_h_obj: dict              # object -> hmor
    id_v_obj: dict              # object -> vmor
    id_h_sq: dict               # vmor -> square
    id_v_sq: dict               # hmor -> square
    double_category_ok: bool = False
    name: str = field(default="G", compare=False)

    # edges -------------------------------------------------------------
    def sh(self, a):
        return self.squares[a][0]

    def th(self, a):
        return self.squares[a][1]

    def sv(self, a):
        return self.squares[a][2]

    def tv(self, a):
        return self.squares[a][3]

    def corners(self, a):
        """(bottom-right, top-right, bottom-left, top-left) objects."""
        sh, th, sv, tv = self.squares[a]
        return (self.vmors[sh][0], self.vmors[sh][1], self.vmors[th][0], self.vmors[th][1])

    def hcomp(self, f, g):
        return self.comp_h_mor[(f, g)]

    def vcomp(self, u, w):
        return self.comp_v_mor[(u, w)]

    def hcomp_sq(self, a, b):
        return self.comp_h_sq[(a, b)]

    def vcomp_sq(self, a, b):
        return self.comp_v_sq[(a, b)]

    @cached_property
    def sorted_objects(self):
        return tuple(sorted(self.objects))

    @cached_property
    def sorted_hmors(self):
        return tuple(sorted(self.hmors))

    @cached_property
    def sorted_vmors(self):
        return tuple(sorted(self.vmors))

    @cached_property
    def sorted_squares(self):
        return tuple(sorted(self.squares))

    @cached_property
    def squares_by_sh_tv(self) -> dict:
        d: dict = {}
        for a in self.sorted_squares:
            d.setdefault((self.sh(a), self.tv(a)), []).append(a)
        return d

    @cached_property
    def squares_by_th_sv(self) -> dict:
        d: dict = {}
        for a in self.sorted_squares:
            d.setdefault((self.th(a), self.sv(a)), []).append(a)
        return d

    def hinv(self, f):
        """Inverse of a horizontal morphism (None if it has none)."""
        return self._inverses["h"].get(f)

    def vinv(self, u):
        return self._inverses["v"].get(u)

    def sq_hinv(self, a):
        return self._inverses["sh"].get(a)

    def sq_vinv(self, a):
        return self._inverses["sv"].get(a)

    @cached_property
    def _inverses(self) -> dict:
        return _all_inverses(self)

    @cached_property
    def validation(self) -> "ValidationReport":
        return validate_axioms(self)

    @property
    def is_double_groupoid(self) -> bool:
        return self.validation.is_double_groupoid

    def summary(self) -> dict:
        return {"objects": len(self.objects), "hmors": len(self.hmors),
                "vmors": len(self.vmors), "squares": len(self.squares)}

    # structural equality: ids and tables identical
    def same_as(self, other: "DoubleGroupoid") -> bool:
        return to_json(self) == to_json(other)


def _all_inverses(g: DoubleGroupoid) -> dict:
    out = {"h": {}, "v": {}, "sh": {}, "sv": {}}
    for f, (s, t) in g.hmors.items():
        for f2, (s2, t2) in g.hmors.items():
            if (s2, t2) == (t, s) and g.comp_h_mor.get((f2, f)) == g.id_h_obj.get(s) and \
                    g.comp_h_mor.get((f, f2)) == g.id_h_obj.get(t):
                out["h"][f] = f2
                break
    for u, (s, t) in g.vmors.items():
        for u2, (s2, t2) in g.vmors.items():
            if (s2, t2) == (t, s) and g.comp_v_mor.get((u2, u)) == g.id_v_obj.get(s) and \
                    g.comp_v_mor.get((u, u2)) == g.id_v_obj.get(t):
                out["v"][u] = u2
                break
    by_th: dict = {}
    by_tv: dict = {}
    for b in g.squares:
        by_th.setdefault(g.th(b), []).append(b)
        by_tv.setdefault(g.tv(b), []).append(b)
    for a in g.squares:
        sh, th, sv, tv = g.squares[a]
        for b in sorted(by_th.get(sh, ())):
            if g.sh(b) == th and g.comp_h_sq.get((b, a)) == g.id_h_sq.get(sh) and \
                    g.comp_h_sq.get((a, b)) == g.id_h_sq.get(th):
                out["sh"][a] = b
                break
        for b in sorted(by_tv.get(sv, ())):
            if g.sv(b) == tv and g.comp_v_sq.get((b, a)) == g.id_v_sq.get(sv) and \
                    g.comp_v_sq.get((a, b)) == g.id_v_sq.get(tv):
                out["sv"][a] = b
                break
    return out


# ---------------------------------------------------------------------------
# tabulation helper used by the builders
# ---------------------------------------------------------------------------

def tabulate(objects: Iterable, hmors: dict, vmors: dict, squares: dict,
             hcomp, vcomp, hcomp_sq, vcomp_sq,
             id_h_obj: dict, id_v_obj: dict, id_h_sq: dict, id_v_sq: dict,
             double_category_ok: bool = False, name: str = "G") -> DoubleGroupoid:
    """Fill all four composition tables by calling the given functions on
    every matching pair."""
    objects = tuple(objects)
    chm = {}
    for f, (s, _) in hmors.items():
        for f2, (_, t2) in hmors.items():
            if s == t2:
                chm[(f, f2)] = hcomp(f, f2)
    cvm = {}
    for u, (s, _) in vmors.items():
        for u2, (_, t2) in vmors.items():
            if s == t2:
                cvm[(u, u2)] = vcomp(u, u2)
    by_th: dict = {}
    by_tv: dict = {}
    for b, (sh, th, sv, tv) in squares.items():
        by_th.setdefault(th, []).append(b)
        by_tv.setdefault(tv, []).append(b)
    chs = {}
    cvs = {}
    for a, (sh, th, sv, tv) in squares.items():
        for b in by_th.get(sh, ()):
            chs[(a, b)] = hcomp_sq(a, b)
        for b in by_tv.get(sv, ()):
            cvs[(a, b)] = vcomp_sq(a, b)
    return DoubleGroupoid(objects, dict(hmors), dict(vmors), dict(squares), chm, cvm,
                          chs, cvs, dict(id_h_obj), dict(id_v_obj), dict(id_h_sq),
                          dict(id_v_sq), double_category_ok, name)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class ValidationReport:
    structural_errors: list = field(default_factory=list)
    violations: list = field(default_factory=list)      # [{"law", "witness"}]
    groupoid_failures: list = field(default_factory=list)
    double_category_ok: bool = False

    @property
    def is_double_category(self) -> bool:
        return not self.structural_errors and not self.violations

    @property
    def is_groupoid(self) -> bool:
        return self.is_double_category and not self.groupoid_failures

    @property
    def is_double_groupoid(self) -> bool:
        return self.is_groupoid

    @property
    def ok(self) -> bool:
        """Valid as loaded: a double groupoid, or a double category when the
        structure was explicitly flagged as one."""
        return self.is_double_category and (self.is_groupoid or self.double_category_ok)

    def to_json(self) -> dict:
        return {"ok": self.ok, "is_double_category": self.is_double_category,
                "is_double_groupoid": self.is_double_groupoid,
                "structural_errors": self.structural_errors,
                "violations": self.violations,
                "groupoid_failures": self.groupoid_failures}


def _structural(g: DoubleGroupoid) -> list:
    errs = []
    obj = set(g.objects)
    if len(obj) != len(g.objects):
        errs.append("duplicate object id")
    for kind, table in (("hmor", g.hmors), ("vmor", g.vmors)):
        for m, (s, t) in table.items():
            for end in (s, t):
                if end not in obj:
                    errs.append(f"{kind} {m!r} refers to unknown object {end!r}")
    for a, (sh, th, sv, tv) in g.squares.items():
        for e, tab, kind in ((sh, g.vmors, "sh"), (th, g.vmors, "th"),
                             (sv, g.hmors, "sv"), (tv, g.hmors, "tv")):
            if e not in tab:
                errs.append(f"square {a!r} {kind} refers to unknown id {e!r}")
    for tname, table, dom in (("comp_h_mor", g.comp_h_mor, g.hmors),
                              ("comp_v_mor", g.comp_v_mor, g.vmors),
                              ("comp_h_sq", g.comp_h_sq, g.squares),
                              ("comp_v_sq", g.comp_v_sq, g.squares)):
        for (l, r), res in table.items():
            for x in (l, r, res):
                if x not in dom:
                    errs.append(f"{tname} entry {[l, r, res]!r} refers to unknown id {x!r}")
    for tname, table, dom, cod in (("id_h_obj", g.id_h_obj, obj, g.hmors),
                                   ("id_v_obj", g.id_v_obj, obj, g.vmors),
                                   ("id_h_sq", g.id_h_sq, g.vmors, g.squares),
                                   ("id_v_sq", g.id_v_sq, g.hmors, g.squares)):
        for k in dom:
            if k not in table:
                errs.append(f"{tname} missing entry for {k!r}")
        for k, v in table.items():
            if k not in dom:
                errs.append(f"{tname} has unknown key {k!r}")
            if v not in cod:
                errs.append(f"{tname} refers to unknown id {v!r}")
    return errs


def validate_axioms(g: DoubleGroupoid) -> ValidationReport:
    """Check the four category structures, Axioms 1-3 and the groupoid
    property.  Every violation carries the tuple that witnesses it."""
    rep = ValidationReport(double_category_ok=g.double_category_ok)
    rep.structural_errors = _structural(g)
    if rep.structural_errors:
        return rep
    V = rep.violations

    def bad(law, *witness):
        V.append({"law": law, "witness": list(witness)})

    H, Vm, C = g.hmors, g.vmors, g.squares
    sq = g.squares

    # Axiom 1 (i): the four corners of every square agree
    for a in g.sorted_squares:
        sh, th, sv, tv = sq[a]
        if H[sv][0] != Vm[sh][0] or Vm[sh][1] != H[tv][0] or \
                H[sv][1] != Vm[th][0] or Vm[th][1] != H[tv][1]:
            bad("axiom1(i) corners", a)

    # the four tables are defined exactly on matching pairs
    def domain_check(tname, table, elems, match):
        for (l, r) in sorted(table):
            if not match(l, r):
                bad(f"{tname} defined on non-matching pair", l, r)
        for l in elems:
            for r in elems:
                if match(l, r) and (l, r) not in table:
                    bad(f"{tname} partial table incomplete", l, r)

    domain_check("comp_h_mor", g.comp_h_mor, g.sorted_hmors, lambda l, r: H[l][0] == H[r][1])
    domain_check("comp_v_mor", g.comp_v_mor, g.sorted_vmors, lambda l, r: Vm[l][0] == Vm[r][1])
    domain_check("comp_h_sq", g.comp_h_sq, g.sorted_squares, lambda l, r: sq[l][0] == sq[r][1])
    domain_check("comp_v_sq", g.comp_v_sq, g.sorted_squares, lambda l, r: sq[l][2] == sq[r][3])
    if V:
        return rep

    # boundaries of composites (Axiom 2 (i)-(ii))
    for (f, f2) in sorted(g.comp_h_mor):
        r = g.comp_h_mor[(f, f2)]
        if H[r] != (H[f2][0], H[f][1]):
            bad("comp_h_mor boundary", f, f2, r)
    for (u, u2) in sorted(g.comp_v_mor):
        r = g.comp_v_mor[(u, u2)]
        if Vm[r] != (Vm[u2][0], Vm[u][1]):
            bad("comp_v_mor boundary", u, u2, r)
    for (a, b) in sorted(g.comp_h_sq):
        r = g.comp_h_sq[(a, b)]
        want = (sq[b][0], sq[a][1], g.comp_h_mor[(sq[a][2], sq[b][2])],
                g.comp_h_mor[(sq[a][3], sq[b][3])])
        if sq[r] != want:
            bad("axiom2 boundary of o_h", a, b, r)
    for (a, b) in sorted(g.comp_v_sq):
        r = g.comp_v_sq[(a, b)]
        want = (g.comp_v_mor[(sq[a][0], sq[b][0])], g.comp_v_mor[(sq[a][1], sq[b][1])],
                sq[b][2], sq[a][3])
        if sq[r] != want:
            bad("axiom2 boundary of o_v", a, b, r)

    # identities: boundaries (Axiom 1 (ii)) and neutrality
    for a in g.sorted_objects:
        if H[g.id_h_obj[a]] != (a, a):
            bad("id_h_obj boundary", a)
        if Vm[g.id_v_obj[a]] != (a, a):
            bad("id_v_obj boundary", a)
    for u in g.sorted_vmors:
        i = g.id_h_sq[u]
        s, t = Vm[u]
        if sq[i] != (u, u, g.id_h_obj[s], g.id_h_obj[t]):
            bad("axiom1(ii) id_h_sq boundary", u, i)
    for f in g.sorted_hmors:
        i = g.id_v_sq[f]
        s, t = H[f]
        if sq[i] != (g.id_v_obj[s], g.id_v_obj[t], f, f):
            bad("axiom1(ii) id_v_sq boundary", f, i)
    if V:
        return rep
    for f in g.sorted_hmors:
        s, t = H[f]
        if g.comp_h_mor[(f, g.id_h_obj[s])] != f or g.comp_h_mor[(g.id_h_obj[t], f)] != f:
            bad("comp_h_mor identity", f)
    for u in g.sorted_vmors:
        s, t = Vm[u]
        if g.comp_v_mor[(u, g.id_v_obj[s])] != u or g.comp_v_mor[(g.id_v_obj[t], u)] != u:
            bad("comp_v_mor identity", u)
    for a in g.sorted_squares:
        sh, th, sv, tv = sq[a]
        if g.comp_h_sq[(a, g.id_h_sq[sh])] != a or g.comp_h_sq[(g.id_h_sq[th], a)] != a:
            bad("comp_h_sq identity", a)
        if g.comp_v_sq[(a, g.id_v_sq[sv])] != a or g.comp_v_sq[(g.id_v_sq[tv], a)] != a:
            bad("comp_v_sq identity", a)

    # Axiom 1 (iii)
    for a in g.sorted_objects:
        if g.id_h_sq[g.id_v_obj[a]] != g.id_v_sq[g.id_h_obj[a]]:
            bad("axiom1(iii) I^h I^v = I^v I^h", a)
    # Axiom 2 (iii)
    for (f, f2) in sorted(g.comp_h_mor):
        if g.id_v_sq[g.comp_h_mor[(f, f2)]] != g.comp_h_sq[(g.id_v_sq[f], g.id_v_sq[f2])]:
            bad("axiom2(iii) I^v(f o f')", f, f2)
    for (u, u2) in sorted(g.comp_v_mor):
        if g.id_h_sq[g.comp_v_mor[(u, u2)]] != g.comp_v_sq[(g.id_h_sq[u], g.id_h_sq[u2])]:
            bad("axiom2(iii) I^h(u o u')", u, u2)

    # associativity of the four compositions
    _assoc(g.comp_h_mor, g.sorted_hmors, lambda f: H[f][0], lambda f: H[f][1],
           "comp_h_mor associativity", bad)
    _assoc(g.comp_v_mor, g.sorted_vmors, lambda f: Vm[f][0], lambda f: Vm[f][1],
           "comp_v_mor associativity", bad)
    _assoc(g.comp_h_sq, g.sorted_squares, lambda a: sq[a][0], lambda a: sq[a][1],
           "comp_h_sq associativity", bad)
    _assoc(g.comp_v_sq, g.sorted_squares, lambda a: sq[a][2], lambda a: sq[a][3],
           "comp_v_sq associativity", bad)

    # Axiom 3: interchange.  alpha beta on top, gamma delta below.
    by_th: dict = {}
    by_tv: dict = {}
    by_th_tv: dict = {}
    for b in g.sorted_squares:
        by_th.setdefault(sq[b][1], []).append(b)
        by_tv.setdefault(sq[b][3], []).append(b)
        by_th_tv.setdefault((sq[b][1], sq[b][3]), []).append(b)
    for al in g.sorted_squares:
        for be in by_th.get(sq[al][0], ()):
            top = g.comp_h_sq[(al, be)]
            for ga in by_tv.get(sq[al][2], ()):
                left = g.comp_v_sq[(al, ga)]
                for de in by_th_tv.get((sq[ga][0], sq[be][2]), ()):
                    lhs = g.comp_v_sq[(top, g.comp_h_sq[(ga, de)])]
                    rhs = g.comp_h_sq[(left, g.comp_v_sq[(be, de)])]
                    if lhs != rhs:
                        bad("axiom3 interchange", al, be, ga, de)

    # groupoid property
    inv = g._inverses
    for kind, elems, label in (("h", g.sorted_hmors, "hmor"), ("v", g.sorted_vmors, "vmor"),
                               ("sh", g.sorted_squares, "square o_h"),
                               ("sv", g.sorted_squares, "square o_v")):
        for x in elems:
            if x not in inv[kind]:
                rep.groupoid_failures.append({"kind": label, "element": x})
    return rep


def _assoc(table, elems, src, tgt, law, bad):
    by_tgt: dict = {}
    for x in elems:
        by_tgt.setdefault(tgt(x), []).append(x)
    for a in elems:
        for b in by_tgt.get(src(a), ()):
            ab = table[(a, b)]
            for c in by_tgt.get(src(b), ()):
                if table[(ab, c)] != table[(a, table[(b, c)])]:
                    bad(law, a, b, c)


def inverse_uniqueness(g: DoubleGroupoid) -> bool:
    """Scan all four structures: every element has exactly one inverse."""
    sq = g.squares
    for f, (s, t) in g.hmors.items():
        n = sum(1 for f2 in g.hmors if g.hmors[f2] == (t, s)
                and g.comp_h_mor[(f2, f)] == g.id_h_obj[s]
                and g.comp_h_mor[(f, f2)] == g.id_h_obj[t])
        if n != 1:
            return False
    for u, (s, t) in g.vmors.items():
        n = sum(1 for u2 in g.vmors if g.vmors[u2] == (t, s)
                and g.comp_v_mor[(u2, u)] == g.id_v_obj[s]
                and g.comp_v_mor[(u, u2)] == g.id_v_obj[t])
        if n != 1:
            return False
    for a in g.squares:
        sh, th, sv, tv = sq[a]
        nh = sum(1 for b in g.squares if sq[b][1] == sh and sq[b][0] == th
                 and g.comp_h_sq[(b, a)] == g.id_h_sq[sh]
                 and g.comp_h_sq[(a, b)] == g.id_h_sq[th])
        nv = sum(1 for b in g.squares if sq[b][3] == sv and sq[b][2] == tv
                 and g.comp_v_sq[(b, a)] == g.id_v_sq[sv]
                 and g.comp_v_sq[(a, b)] == g.id_v_sq[tv])
        if nh != 1 or nv != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# filling condition
# ---------------------------------------------------------------------------

@dataclass
class FillingReport:
    ok: bool
    witnesses: dict           # (g, u) -> least square
    counterexamples: list     # [(g, u)]

    def to_json(self) -> dict:
        return {"ok": self.ok, "pairs": len(self.witnesses) + len(self.counterexamples),
                "counterexamples": [list(p) for p in self.counterexamples]}


def check_filling(g: DoubleGroupoid) -> FillingReport:
    """For every corner (g, u) with s^h g = t^v u find a square with
    sh = u and tv = g."""
    wit, bad = {}, []
    idx = g.squares_by_sh_tv
    for h in g.sorted_hmors:
        for u in g.sorted_vmors:
            if g.hmors[h][0] != g.vmors[u][1]:
                continue
            c = idx.get((u, h))
            if c:
                wit[(h, u)] = c[0]
            else:
                bad.append((h, u))
    return FillingReport(not bad, wit, bad)


def filling_variant_failures(g: DoubleGroupoid) -> dict:
    """The three other corner problems: (w, f) bottom-left, (f, u)
    bottom-right and (g, w) top-left.  Returns the failures of each."""
    sq = g.squares
    have = {"left-bottom": set(), "bottom-right": set(), "top-left": set()}
    for a in sq:
        sh, th, sv, tv = sq[a]
        have["left-bottom"].add((th, sv))
        have["bottom-right"].add((sv, sh))
        have["top-left"].add((tv, th))
    out = {k: [] for k in have}
    for w in g.sorted_vmors:
        for f in g.sorted_hmors:
            if g.vmors[w][0] == g.hmors[f][1] and (w, f) not in have["left-bottom"]:
                out["left-bottom"].append((w, f))
    for f in g.sorted_hmors:
        for u in g.sorted_vmors:
            if g.hmors[f][0] == g.vmors[u][0] and (f, u) not in have["bottom-right"]:
                out["bottom-right"].append((f, u))
    for h in g.sorted_hmors:
        for w in g.sorted_vmors:
            if g.hmors[h][1] == g.vmors[w][1] and (h, w) not in have["top-left"]:
                out["top-left"].append((h, w))
    return out


def check_filling_variants(g: DoubleGroupoid) -> bool:
    return not any(filling_variant_failures(g).values())


# ---------------------------------------------------------------------------
# double functors
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DoubleFunctor:
    source: DoubleGroupoid
    target: DoubleGroupoid
    obj: dict
    hmor: dict
    vmor: dict
    sq: dict

    def check(self) -> list:
        """List of violated preservation laws (empty for a double functor)."""
        s, t = self.source, self.target
        bad = []
        for m, tab, key in ((self.obj, s.objects, "objects"), (self.hmor, s.hmors, "hmors"),
                            (self.vmor, s.vmors, "vmors"), (self.sq, s.squares, "squares")):
            for x in tab:
                if x not in m:
                    bad.append(("undefined on", key, x))
        if bad:
            return bad
        for f, (a, b) in s.hmors.items():
            if t.hmors[self.hmor[f]] != (self.obj[a], self.obj[b]):
                bad.append(("hmor boundary", f))
        for u, (a, b) in s.vmors.items():
            if t.vmors[self.vmor[u]] != (self.obj[a], self.obj[b]):
                bad.append(("vmor boundary", u))
        for a, (sh, th, sv, tv) in s.squares.items():
            if t.squares[self.sq[a]] != (self.vmor[sh], self.vmor[th], self.hmor[sv], self.hmor[tv]):
                bad.append(("square boundary", a))
        for x in s.objects:
            if self.hmor[s.id_h_obj[x]] != t.id_h_obj[self.obj[x]] or \
                    self.vmor[s.id_v_obj[x]] != t.id_v_obj[self.obj[x]]:
                bad.append(("object identity", x))
        for u in s.vmors:
            if self.sq[s.id_h_sq[u]] != t.id_h_sq[self.vmor[u]]:
                bad.append(("id_h_sq", u))
        for f in s.hmors:
            if self.sq[s.id_v_sq[f]] != t.id_v_sq[self.hmor[f]]:
                bad.append(("id_v_sq", f))
        for (l, r), res in s.comp_h_mor.items():
            if t.comp_h_mor.get((self.hmor[l], self.hmor[r])) != self.hmor[res]:
                bad.append(("comp_h_mor", l, r))
        for (l, r), res in s.comp_v_mor.items():
            if t.comp_v_mor.get((self.vmor[l], self.vmor[r])) != self.vmor[res]:
                bad.append(("comp_v_mor", l, r))
        for (l, r), res in s.comp_h_sq.items():
            if t.comp_h_sq.get((self.sq[l], self.sq[r])) != self.sq[res]:
                bad.append(("comp_h_sq", l, r))
        for (l, r), res in s.comp_v_sq.items():
            if t.comp_v_sq.get((self.sq[l], self.sq[r])) != self.sq[res]:
                bad.append(("comp_v_sq", l, r))
        return bad

    def then(self, other: "DoubleFunctor") -> "DoubleFunctor":
        """other o self."""
        return DoubleFunctor(self.source, other.target,
                             {k: other.obj[v] for k, v in self.obj.items()},
                             {k: other.hmor[v] for k, v in self.hmor.items()},
                             {k: other.vmor[v] for k, v in self.vmor.items()},
                             {k: other.sq[v] for k, v in self.sq.items()})

    def is_isomorphism(self) -> bool:
        t = self.target
        return (not self.check()
                and sorted(self.obj.values()) == sorted(t.objects)
                and sorted(self.hmor.values()) == sorted(t.hmors)
                and sorted(self.vmor.values()) == sorted(t.vmors)
                and sorted(self.sq.values()) == sorted(t.squares))


def identity_functor(g: DoubleGroupoid) -> DoubleFunctor:
    return DoubleFunctor(g, g, {x: x for x in g.objects}, {x: x for x in g.hmors},
                         {x: x for x in g.vmors}, {x: x for x in g.squares})


def terminal_functor(g: DoubleGroupoid, t: DoubleGroupoid) -> DoubleFunctor:
    """The unique double functor to a one-cell structure t."""
    (o,) = t.objects
    return DoubleFunctor(g, t, {x: o for x in g.objects},
                         {x: t.id_h_obj[o] for x in g.hmors},
                         {x: t.id_v_obj[o] for x in g.vmors},
                         {x: t.id_h_sq[t.id_v_obj[o]] for x in g.squares})


# ---------------------------------------------------------------------------
# json io
# ---------------------------------------------------------------------------

def to_json(g: DoubleGroupoid) -> dict:
    return {
        "objects": list(g.sorted_objects),
        "hmors": [{"id": f, "src": g.hmors[f][0], "tgt": g.hmors[f][1]} for f in g.sorted_hmors],
        "vmors": [{"id": u, "src": g.vmors[u][0], "tgt": g.vmors[u][1]} for u in g.sorted_vmors],
        "squares": [{"id": a, "sh": g.sh(a), "th": g.th(a), "sv": g.sv(a), "tv": g.tv(a)}
                    for a in g.sorted_squares],
        "comp_h_mor": [[l, r, g.comp_h_mor[(l, r)]] for (l, r) in sorted(g.comp_h_mor)],
        "comp_v_mor": [[l, r, g.comp_v_mor[(l, r)]] for (l, r) in sorted(g.comp_v_mor)],
        "comp_h_sq": [[l, r, g.comp_h_sq[(l, r)]] for (l, r) in sorted(g.comp_h_sq)],
        "comp_v_sq": [[l, r, g.comp_v_sq[(l, r)]] for (l, r) in sorted(g.comp_v_sq)],
        "id_h_obj": {k: g.id_h_obj[k] for k in sorted(g.id_h_obj)},
        "id_v_obj": {k: g.id_v_obj[k] for k in sorted(g.id_v_obj)},
        "id_h_sq": {k: g.id_h_sq[k] for k in sorted(g.id_h_sq)},
        "id_v_sq": {k: g.id_v_sq[k] for k in sorted(g.id_v_sq)},
        "flags": {"double_category_ok": bool(g.double_category_ok)},
    }


def dumps(g: DoubleGroupoid) -> str:
    return json.dumps(to_json(g), indent=1, sort_keys=False)


_TOP_KEYS = ("objects", "hmors", "vmors", "squares", "comp_h_mor", "comp_v_mor",
             "comp_h_sq", "comp_v_sq", "id_h_obj", "id_v_obj", "id_h_sq", "id_v_sq")


def from_json(data: dict, name: str = "G", check: bool = True) -> DoubleGroupoid:
    """Build a DoubleGroupoid from the JSON form.  Structural problems
    (missing fields, dangling ids, missing table entries) raise
    StructureError naming the offending field or id."""
    if not isinstance(data, dict):
        raise StructureError("top level must be an object")
    for k in _TOP_KEYS:
        if k not in data:
            raise StructureError(f"missing field {k!r}")

    def recs(field_name, keys):
        out = {}
        for i, r in enumerate(data[field_name]):
            if not isinstance(r, dict) or any(k not in r for k in keys):
                raise StructureError(f"{field_name}[{i}]: expected fields {list(keys)}")
            if r["id"] in out:
                raise StructureError(f"{field_name}[{i}]: duplicate id {r['id']!r}")
            out[str(r["id"])] = tuple(str(r[k]) for k in keys[1:])
        return out

    def table(field_name):
        out = {}
        for i, e in enumerate(data[field_name]):
            if not isinstance(e, (list, tuple)) or len(e) != 3:
                raise StructureError(f"{field_name}[{i}]: expected [left, right, result]")
            out[(str(e[0]), str(e[1]))] = str(e[2])
        return out

    flags = data.get("flags", {}) or {}
    g = DoubleGroupoid(
        tuple(str(o) for o in data["objects"]),
        recs("hmors", ("id", "src", "tgt")), recs("vmors", ("id", "src", "tgt")),
        recs("squares", ("id", "sh", "th", "sv", "tv")),
        table("comp_h_mor"), table("comp_v_mor"), table("comp_h_sq"), table("comp_v_sq"),
        {str(k): str(v) for k, v in data["id_h_obj"].items()},
        {str(k): str(v) for k, v in data["id_v_obj"].items()},
        {str(k): str(v) for k, v in data["id_h_sq"].items()},
        {str(k): str(v) for k, v in data["id_v_sq"].items()},
        bool(flags.get("double_category_ok", False)), name)
    if check:
        errs = _structural(g)
        if errs:
            raise StructureError("; ".join(errs))
        missing = [v for v in validate_axioms(g).violations
                   if "partial table incomplete" in v["law"]]
        if missing:
            w = missing[0]
            raise StructureError(f"partial table incomplete: {w['law'].split()[0]} has no entry "
                                 f"for {w['witness']!r}")
    return g


def loads(text: str, name: str = "G") -> DoubleGroupoid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                             f"{exc.msg}") from exc
    return from_json(data, name)


def load(path: str) -> DoubleGroupoid:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), name=path)


def save(g: DoubleGroupoid, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))
        fh.write("\n")
