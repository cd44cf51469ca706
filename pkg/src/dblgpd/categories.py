"""Finite categories and groupoids given by tables.

Composition is written left-after-right: comp[(f, g)] = f o g is defined
when src(f) == tgt(g).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .groups import GroupTable


class CategoryError(ValueError):
    pass


@dataclass(frozen=True)
class Category:
    objects: tuple
    mors: dict = field(hash=False)    # id -> (src, tgt)
    comp: dict = field(hash=False)    # (left, right) -> composite
    ident: dict = field(hash=False)   # object -> identity id
    name: str = "C"

    def src(self, f):
        return self.mors[f][0]

    def tgt(self, f):
        return self.mors[f][1]

    def compose(self, f, g):
        return self.comp[(f, g)]

    def sorted_mors(self):
        return sorted(self.mors)

    def inverse(self, f):
        for g in self.sorted_mors():
            if self.mors[g] == (self.tgt(f), self.src(f)) and \
                    self.comp[(g, f)] == self.ident[self.src(f)] and \
                    self.comp[(f, g)] == self.ident[self.tgt(f)]:
                return g
        return None

    def is_groupoid(self) -> bool:
        return all(self.inverse(f) is not None for f in self.mors)

    def check(self) -> list:
        """Return a list of law violations (empty when this is a category)."""
        bad = []
        for (f, g), h in self.comp.items():
            if self.src(f) != self.tgt(g):
                bad.append(("defined on non-matching pair", f, g))
            elif self.mors[h] != (self.src(g), self.tgt(f)):
                bad.append(("composite has wrong boundary", f, g, h))
        for f in self.mors:
            for g in self.mors:
                if self.src(f) == self.tgt(g) and (f, g) not in self.comp:
                    bad.append(("partial table incomplete", f, g))
        if bad:
            return bad
        for a, i in self.ident.items():
            if self.mors[i] != (a, a):
                bad.append(("identity has wrong boundary", a, i))
        for f in self.mors:
            if self.comp[(f, self.ident[self.src(f)])] != f or \
                    self.comp[(self.ident[self.tgt(f)], f)] != f:
                bad.append(("identity not neutral", f))
        by_tgt = {}
        for g in self.mors:
            by_tgt.setdefault(self.tgt(g), []).append(g)
        for f in self.mors:
            for g in by_tgt.get(self.src(f), ()):
                fg = self.comp[(f, g)]
                for h in by_tgt.get(self.src(g), ()):
                    if self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                        bad.append(("associativity", f, g, h))
        return bad


def from_group(g: GroupTable, obj: str = "*") -> Category:
    mors = {a: (obj, obj) for a in g.elements}
    comp = {(a, b): g.mul(a, b) for a in g.elements for b in g.elements}
    return Category((obj,), mors, comp, {obj: g.identity}, name="B")


def discrete(objs) -> Category:
    objs = tuple(objs)
    mors = {f"1({a})": (a, a) for a in objs}
    comp = {(f"1({a})", f"1({a})"): f"1({a})" for a in objs}
    return Category(objs, mors, comp, {a: f"1({a})" for a in objs}, name="Disc")


def pair_groupoid(objs) -> Category:
    objs = tuple(objs)
    mors = {f"({t},{s})": (s, t) for t in objs for s in objs}
    comp = {(f"({t},{m})", f"({m},{s})"): f"({t},{s})"
            for t in objs for m in objs for s in objs}
    return Category(objs, mors, comp, {a: f"({a},{a})" for a in objs}, name="Pair")


def ordinal(n: int) -> Category:
    """The poset [n] = {0 < 1 < ... < n}; morphism 'i->j' for i <= j."""
    objs = tuple(str(i) for i in range(n + 1))
    mors = {f"{i}->{j}": (str(i), str(j)) for i in range(n + 1) for j in range(i, n + 1)}
    comp = {(f"{j}->{k}", f"{i}->{j}"): f"{i}->{k}"
            for i in range(n + 1) for j in range(i, n + 1) for k in range(j, n + 1)}
    return Category(objs, mors, comp, {str(i): f"{i}->{i}" for i in range(n + 1)},
                    name=f"[{n}]")
