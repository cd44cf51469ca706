"""Exact checks of piecewise maps on rational grids.

Values are formal terms in a space X:

    ("V", label)            a point (a class of path endpoints)
    ("P", path, s)          a point on a named path
    ("Q", square, x, y)     a point on a named square
    ("S", simplex, coords)  a point of a named singular simplex

A World holds the rewrite rules that send a term to other names for the
same point: square sides to paths, path ends to points, simplex faces
(in both directions) and degeneracies to other simplices.  Two terms are
equal when their sets of reachable terms meet.
"""
from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from .transcriptions import SOURCE, PiecewiseMap

ZERO = Fraction(0)
MAX_REPORTED = 20


class DomainError(Exception):
    pass


# ---------------------------------------------------------------------------
# expressions
# ---------------------------------------------------------------------------

class _Exact(ast.NodeTransformer):
    def visit_Constant(self, node):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return ast.copy_location(
                ast.Call(ast.Name("Fraction", ast.Load()), [node], []), node)
        return node


@lru_cache(maxsize=None)
def compile_expr(src: str, variables: tuple):
    """Compile an arithmetic expression or comparison to a function of
    Fractions; integer literals become Fractions so 1/2 is exact."""
    tree = _Exact().visit(ast.parse(src, mode="eval"))
    ast.fix_missing_locations(tree)
    for node in ast.walk(tree):
        if isinstance(node, ast.Name) and node.id not in variables and node.id != "Fraction":
            raise ValueError(f"unknown name {node.id!r} in {src!r}")
    lam = ast.Expression(ast.Lambda(
        ast.arguments(posonlyargs=[], args=[ast.arg(v) for v in variables], kwonlyargs=[],
                      kw_defaults=[], defaults=[]), tree.body))
    ast.fix_missing_locations(lam)
    return eval(compile(lam, f"<{src}>", "eval"), {"Fraction": Fraction})


def fmt(q: Fraction) -> str:
    return str(q)


# ---------------------------------------------------------------------------
# the space X
# ---------------------------------------------------------------------------

@dataclass
class World:
    squares: dict = field(default_factory=dict)     # name -> (bottom, left, right, top)
    paths: set = field(default_factory=set)
    path_defs: dict = field(default_factory=dict)   # name -> (simplex, i0, i1)
    simplices: dict = field(default_factory=dict)   # name -> dimension
    relations: list = field(default_factory=list)   # (sigma, F, tau, f)
    joins: list = field(default_factory=list)       # ((path, end), (path, end))

    def square(self, name, bottom, left, right, top):
        self.squares[name] = (bottom, left, right, top)
        self.paths |= {bottom, left, right, top}
        self.joins += [((bottom, 0), (left, 0)), ((bottom, 1), (right, 1)),
                       ((left, 1), (top, 1)), ((right, 0), (top, 0))]
        return self

    def path(self, *names):
        self.paths |= set(names)
        return self

    def join(self, a, ea, b, eb):
        self.joins.append(((a, ea), (b, eb)))
        return self

    def simplex(self, name, dim):
        self.simplices[name] = dim
        return self

    def relate(self, sigma, F, tau, f):
        """sigma restricted to the vertices F equals tau composed with the
        monotone vertex map f."""
        self.relations.append((sigma, tuple(F), tau, tuple(f)))
        return self

    def path_of(self, name, sigma, i0, i1):
        """name(s) = sigma at (1-s) e_i0 + s e_i1."""
        self.path_defs[name] = (sigma, i0, i1)
        self.paths.add(name)
        return self

    # -- rewriting ---------------------------------------------------------
    def _roots(self):
        if getattr(self, "_root_cache", None) is None:
            parent: dict = {}

            def find(a):
                parent.setdefault(a, a)
                while parent[a] != a:
                    a = parent[a]
                return a
            for a, b in self.joins:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            self._root_cache = find
        return self._root_cache

    def reduce(self, term) -> list:
        kind = term[0]
        out = []
        if kind == "Q":
            _, name, x, y = term
            b, l, r, tp = self.squares[name]
            if y == 0:
                out.append(("P", b, x))
            if x == 0:
                out.append(("P", l, y))
            if x == 1:
                out.append(("P", r, 1 - y))
            if y == 1:
                out.append(("P", tp, 1 - x))
        elif kind == "P":
            _, name, s = term
            if name in self.path_defs:
                sigma, i0, i1 = self.path_defs[name]
                c = [ZERO] * (self.simplices[sigma] + 1)
                c[i0] += 1 - s
                c[i1] += s
                out.append(("S", sigma, tuple(c)))
            elif s in (0, 1):
                a = self._roots()((name, int(s)))
                out.append(("V", f"{a[0]}({a[1]})"))
        elif kind == "S":
            _, sigma, c = term
            support = {i for i, v in enumerate(c) if v != 0}
            for s2, F, tau, f in self.relations:
                if s2 == sigma and support <= set(F):
                    d = [ZERO] * (self.simplices[tau] + 1)
                    for k, i in enumerate(F):
                        d[f[k]] += c[i]
                    out.append(("S", tau, tuple(d)))
            for s2, F, tau, f in self.relations:
                # a face inclusion can be read backwards
                if tau == sigma and len(set(f)) == len(f) and support <= set(f):
                    d = [ZERO] * (self.simplices[s2] + 1)
                    for k, i in enumerate(F):
                        d[i] = c[f[k]]
                    out.append(("S", s2, tuple(d)))
        return out

    def closure(self, term) -> frozenset:
        memo = self.__dict__.setdefault("_closure", {})
        if term in memo:
            return memo[term]
        seen = {term}
        todo = [term]
        while todo:
            for r in self.reduce(todo.pop()):
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        memo[term] = res = frozenset(seen)
        return res


_ORDER = {"V": 0, "S": 1, "P": 2, "Q": 3}


def show(term) -> str:
    kind = term[0]
    if kind == "V":
        return term[1]
    if kind == "S":
        return f"{term[1]}({', '.join(fmt(c) for c in term[2])})"
    return f"{term[1]}({', '.join(fmt(c) for c in term[2:])})"


def normal_form(closure) -> str:
    return show(min(closure, key=lambda t: (_ORDER[t[0]], show(t))))


# ---------------------------------------------------------------------------
# functions into X
# ---------------------------------------------------------------------------

class SquareSym:
    def __init__(self, name):
        self.name = name

    def __call__(self, x, y):
        if not (0 <= x <= 1 and 0 <= y <= 1):
            raise DomainError(f"{self.name}({fmt(x)}, {fmt(y)}) outside the unit square")
        return [("Q", self.name, x, y)]


class PathSym:
    def __init__(self, name):
        self.name = name

    def __call__(self, s):
        if not 0 <= s <= 1:
            raise DomainError(f"{self.name}({fmt(s)}) outside the unit interval")
        return [("P", self.name, s)]


class SimplexSym:
    """Barycentric arguments are passed through unchecked; the barycentric
    audit reports them."""

    def __init__(self, name, dim):
        self.name, self.dim = name, dim

    def __call__(self, *c):
        if len(c) != self.dim + 1:
            raise DomainError(f"{self.name} takes {self.dim + 1} coordinates, got {len(c)}")
        return [("S", self.name, tuple(c))]


class Bound:
    """A transcribed map with its symbols bound to functions into X."""

    def __init__(self, pm: PiecewiseMap, bindings: dict):
        self.pm, self.bindings = pm, bindings

    def active(self, point) -> list:
        return [k for k, r in enumerate(self.pm.regions)
                if all(compile_expr(c, self.pm.variables)(*point) for c in r.conditions)]

    def branch(self, k, point):
        r = self.pm.regions[k]
        args = tuple(compile_expr(a, self.pm.variables)(*point) for a in r.args)
        return self.bindings[r.symbol](*args)

    def __call__(self, *point):
        ks = self.active(point)
        if not ks:
            raise DomainError(f"{self.pm.name} has no region at ({', '.join(map(fmt, point))})")
        out = []
        for k in ks:
            out += self.branch(k, point)
        return out


@dataclass
class Square:
    """A function I^2 -> X with its four edge paths."""
    fn: object
    bottom: object
    left: object
    right: object
    top: object


# ---------------------------------------------------------------------------
# audit cases and checks
# ---------------------------------------------------------------------------

@dataclass
class Case:
    name: str
    pm: PiecewiseMap
    world: World
    bindings: dict
    edges: tuple                 # (bottom, left, right, top) path functions
    source: object = None        # t = 0 slice, a function of (x, y)
    target: object = None        # t = 1 slice


def grid(n: int, dim: int):
    pts = [Fraction(k, n) for k in range(n + 1)]
    return itertools.product(pts, repeat=dim)


def _pt(p) -> list:
    return [fmt(q) for q in p]


def _closure_of(world, terms):
    out = set()
    for t in terms:
        out |= world.closure(t)
    return out


def _safe(fn, *args):
    try:
        return fn(*args), None
    except DomainError as exc:
        return None, str(exc)


@dataclass
class Report:
    name: str
    grids: list
    points: int = 0
    coverage: bool = True
    consistency: bool = True
    boundary: bool = True
    barycentric: object = "n/a"
    symbolic_sums: object = "n/a"
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.coverage and self.consistency and self.boundary and self.barycentric is not False

    def fail(self, check, point, regions, details):
        setattr(self, check, False)
        self.counts[check] = self.counts.get(check, 0) + 1
        if self.counts[check] <= MAX_REPORTED:
            self.failures.append({"check": check, "point": _pt(point),
                                  "regions": [k + 1 for k in regions], "details": details})

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "grids": self.grids, "points": self.points,
                "coverage": self.coverage, "consistency": self.consistency,
                "boundary": self.boundary, "barycentric": self.barycentric,
                "symbolic_sums": self.symbolic_sums, "failure_counts": dict(sorted(self.counts.items())),
                "failures": self.failures, "transcription": SOURCE,
                "note": "verified at sampled points"}


def symbolic_sums(case: Case) -> dict:
    """For each region with a simplex symbol: does the sum of the arguments
    expand to 1 as a rational function?"""
    syms = {v: sympy.Symbol(v) for v in case.pm.variables}
    out = {}
    for k, r in enumerate(case.pm.regions):
        b = case.bindings[r.symbol]
        if isinstance(b, SimplexSym):
            total = sum(sympy.sympify(a, locals=syms) for a in r.args)
            out[k] = sympy.cancel(total - 1) == 0
    return out


def audit(case: Case, grids=(16, 17)) -> Report:
    pm, W = case.pm, case.world
    f = Bound(pm, case.bindings)
    rep = Report(case.name, list(grids))
    dim = len(pm.variables)
    homotopy = dim == 3
    has_simplex = any(isinstance(case.bindings[r.symbol], SimplexSym) for r in pm.regions)
    if has_simplex:
        rep.barycentric = True
        sums = symbolic_sums(case)
        rep.symbolic_sums = all(sums.values())
        for k, ok in sorted(sums.items()):
            if not ok:
                rep.fail("barycentric", (), [k], "argument sum is not identically 1")
    for n in grids:
        for p in grid(n, dim):
            rep.points += 1
            ks = f.active(p)
            if not ks:
                rep.fail("coverage", p, [], "no region contains the point")
                continue
            vals = {}
            for k in ks:
                r = pm.regions[k]
                b = case.bindings[r.symbol]
                if isinstance(b, SimplexSym):
                    args = [compile_expr(a, pm.variables)(*p) for a in r.args]
                    if any(a < 0 for a in args) or sum(args) != 1:
                        rep.fail("barycentric", p, [k],
                                 f"{r.symbol} arguments ({', '.join(map(fmt, args))}) are not barycentric")
                v, err = _safe(f.branch, k, p)
                if err:
                    rep.fail("consistency", p, [k], err)
                else:
                    vals[k] = _closure_of(W, v)
            items = sorted(vals.items())
            for (k1, c1), (k2, c2) in itertools.combinations(items, 2):
                if not c1 & c2:
                    rep.fail("consistency", p, [k1, k2],
                             f"{normal_form(c1)} != {normal_form(c2)}")
            x, y = p[0], p[1]
            sides = []
            if y == 0:
                sides.append(("bottom", case.edges[0], x))
            if x == 0:
                sides.append(("left", case.edges[1], y))
            if x == 1:
                sides.append(("right", case.edges[2], 1 - y))
            if y == 1:
                sides.append(("top", case.edges[3], 1 - x))
            for side, edge, s in sides:
                want = _closure_of(W, edge(s))
                for k, c in items:
                    if not c & want:
                        rep.fail("boundary", p, [k],
                                 f"{side} side: {normal_form(c)} != {normal_form(want)}")
            if homotopy and p[2] in (0, 1):
                which = case.source if p[2] == 0 else case.target
                label = "t=0 slice" if p[2] == 0 else "t=1 slice"
                w, err = _safe(which, x, y)
                if err:
                    rep.fail("boundary", p, [], f"{label}: {err}")
                    continue
                want = _closure_of(W, w)
                for k, c in items:
                    if not c & want:
                        rep.fail("boundary", p, [k],
                                 f"{label}: {normal_form(c)} != {normal_form(want)}")
    return rep
