"""Finite groups as multiplication tables, plus isomorphism search.

A GroupTable is the output format of every homotopy-group computation in
the package, so it stays deliberately plain: a list of labels, a square
table of labels, the identity label and an inverse map.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    elements: tuple
    op: tuple  # op[i][j] = label of elements[i] * elements[j]
    identity: str
    inv: tuple  # pairs (label, inverse label), in element order

    # -- construction -------------------------------------------------
    @classmethod
    def from_function(cls, elements: Sequence[str], mult) -> "GroupTable":
        elements = tuple(elements)
        op = tuple(tuple(mult(a, b) for b in elements) for a in elements)
        ident = None
        for e in elements:
            if all(mult(e, a) == a == mult(a, e) for a in elements):
                ident = e
                break
        if ident is None:
            raise GroupError("no identity element")
        inv = []
        for a in elements:
            cands = [b for b in elements if mult(a, b) == ident]
            if len(cands) != 1:
                raise GroupError(f"element {a!r} has {len(cands)} right inverses")
            inv.append((a, cands[0]))
        g = cls(elements, op, ident, tuple(inv))
        g.check()
        return g

    @classmethod
    def trivial(cls, label: str = "e") -> "GroupTable":
        return cls((label,), ((label,),), label, ((label, label),))

    # -- access -------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def _pos(self) -> dict:
        d = self.__dict__.get("_pos_cache")
        if d is None:
            d = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_pos_cache", d)
        return d

    def mul(self, a: str, b: str) -> str:
        p = self._pos
        return self.op[p[a]][p[b]]

    def inverse(self, a: str) -> str:
        return dict(self.inv)[a]

    def power(self, a: str, n: int) -> str:
        r = self.identity
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def element_order(self, a: str) -> int:
        n, r = 1, a
        while r != self.identity:
            r = self.mul(r, a)
            n += 1
        return n

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a)
                   for a, b in itertools.combinations(self.elements, 2))

    def check(self) -> None:
        """Raise GroupError unless the table is a group."""
        els = self.elements
        if len(set(els)) != len(els):
            raise GroupError("duplicate labels")
        p = self._pos
        if len(self.op) != len(els) or any(len(r) != len(els) for r in self.op):
            raise GroupError("table is not square")
        for row in self.op:
            for c in row:
                if c not in p:
                    raise GroupError(f"table entry {c!r} is not an element")
        for a in els:
            if self.mul(self.identity, a) != a or self.mul(a, self.identity) != a:
                raise GroupError("identity is not neutral")
        for a, b in self.inv:
            if self.mul(a, b) != self.identity or self.mul(b, a) != self.identity:
                raise GroupError(f"bad inverse for {a!r}")
        for a, b, c in itertools.product(els, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise GroupError(f"associativity fails at {(a, b, c)!r}")

    # -- io -------------------------------------------------------------
    def to_json(self) -> dict:
        return {"elements": list(self.elements),
                "op": [list(r) for r in self.op],
                "identity": self.identity,
                "inv": {a: b for a, b in self.inv}}

    @classmethod
    def from_json(cls, data: dict) -> "GroupTable":
        try:
            els = tuple(str(e) for e in data["elements"])
            op = tuple(tuple(str(c) for c in row) for row in data["op"])
            inv = tuple((e, str(data["inv"][e])) for e in els)
            g = cls(els, op, str(data["identity"]), inv)
        except (KeyError, TypeError) as exc:
            raise GroupError(f"malformed group table: {exc}") from exc
        g.check()
        return g


# -- standard groups ----------------------------------------------------

def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    els = [str(i) for i in range(n)]
    return GroupTable.from_function(els, lambda a, b: str((int(a) + int(b)) % n))


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    els = [f"{a},{b}" for a in g.elements for b in h.elements]

    def mult(x, y):
        a1, b1 = _split_pair(x, g)
        a2, b2 = _split_pair(y, g)
        return f"{g.mul(a1, a2)},{h.mul(b1, b2)}"

    return GroupTable.from_function(els, mult)


def _split_pair(x: str, g: GroupTable):
    # labels of g never contain the separator for the groups built here
    for a in g.elements:
        if x.startswith(a + ","):
            return a, x[len(a) + 1:]
    raise GroupError(f"cannot split {x!r}")


def symmetric3() -> GroupTable:
    perms = sorted(itertools.permutations(range(3)))
    label = {p: "".join(map(str, p)) for p in perms}
    back = {v: k for k, v in label.items()}

    def mult(a, b):  # (a*b)(i) = a(b(i))
        pa, pb = back[a], back[b]
        return label[tuple(pa[pb[i]] for i in range(3))]

    return GroupTable.from_function([label[p] for p in perms], mult)


_GROUP_RE = re.compile(r"^(?:Z/?|C)(\d+)$")


def parse_group(expr: str) -> GroupTable:
    """Parse 'Z2', 'Z/3', 'C4', 'S3', '1' or products like 'Z2xZ2'."""
    expr = expr.strip()
    if not expr:
        raise GroupError("empty group expression")
    parts = [p for p in re.split(r"[x×]", expr) if p]
    groups = [_parse_factor(p) for p in parts]
    g = groups[0]
    for h in groups[1:]:
        g = direct_product(g, h)
    return g


def _parse_factor(tok: str) -> GroupTable:
    tok = tok.strip()
    if tok in ("1", "e", "trivial"):
        return cyclic(1)
    if tok.upper() == "S3":
        return symmetric3()
    m = _GROUP_RE.match(tok)
    if not m:
        raise GroupError(f"unknown group {tok!r}")
    return cyclic(int(m.group(1)))


# -- isomorphism ----------------------------------------------------------

def generators(g: GroupTable) -> list:
    """Greedy generating set, largest element orders first, deterministic."""
    gens: list = []
    span = {g.identity}
    order = sorted(g.elements, key=lambda a: (-g.element_order(a), g._pos[a]))
    for a in order:
        if a in span:
            continue
        gens.append(a)
        span = _closure(g, gens)
        if len(span) == g.order:
            break
    return gens


def _closure(g: GroupTable, gens: Iterable[str]) -> set:
    gens = list(gens)
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _extend(g: GroupTable, h: GroupTable, gens, images):
    """Extend generator images to a map on all of g, or None if inconsistent."""
    phi = {g.identity: h.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = g.mul(x, s)
                z = h.mul(phi[x], t)
                if y in phi:
                    if phi[y] != z:
                        return None
                else:
                    phi[y] = z
                    nxt.append(y)
        frontier = nxt
    return phi


def is_homomorphism(g: GroupTable, h: GroupTable, phi: dict) -> bool:
    return all(phi[g.mul(a, b)] == h.mul(phi[a], phi[b])
               for a in g.elements for b in g.elements)


def find_isomorphism(g: GroupTable, h: GroupTable) -> dict | None:
    """Backtracking search over generator images; exact for small groups."""
    if g.order != h.order:
        return None
    if sorted(g.element_order(a) for a in g.elements) != \
            sorted(h.element_order(b) for b in h.elements):
        return None
    gens = generators(g)
    cands = [[b for b in h.elements if h.element_order(b) == g.element_order(a)]
             for a in gens]

    def rec(i, imgs):
        if i == len(gens):
            phi = _extend(g, h, gens, imgs)
            if phi is None or len(set(phi.values())) != g.order:
                return None
            return phi if is_homomorphism(g, h, phi) else None
        for b in cands[i]:
            if b in imgs:
                continue
            # prune early: partial generator images must already be consistent
            part = _extend(g, h, gens[:i + 1], imgs + [b])
            if part is None or len(set(part.values())) != len(part):
                continue
            r = rec(i + 1, imgs + [b])
            if r is not None:
                return r
        return None

    return rec(0, [])


def relabel(g: GroupTable, names: dict) -> GroupTable:
    els = tuple(names[a] for a in g.elements)
    op = tuple(tuple(names[c] for c in row) for row in g.op)
    return GroupTable(els, op, names[g.identity],
                      tuple((names[a], names[b]) for a, b in g.inv))


def dumps(g: GroupTable) -> str:
    return json.dumps(g.to_json(), sort_keys=True)
