"""Example double groupoids and the builder-expression parser.

Expressions accepted by ``build`` (case-insensitive, both spellings work):

    Disc(a,b)      disc a,b
    Ab(Z/2)        ab Z2
    Deloop(Z/3)    deloop Z3
    Pair(0,1)      pair 0,1
    Tensor(Z2,[1]) tensor Z2 [1]
    NoFill         nofill
    UnitCell       unitcell
"""
from __future__ import annotations

import re

from . import categories as cat
from .core import DoubleGroupoid, tabulate
from .groups import GroupError, GroupTable, parse_group


class CatalogError(ValueError):
    pass


def disc(objs) -> DoubleGroupoid:
    objs = tuple(str(a) for a in objs)
    if not objs:
        raise CatalogError("Disc needs at least one object")
    if len(set(objs)) != len(objs):
        raise CatalogError("Disc: repeated object")
    H = {f"1h({a})": (a, a) for a in objs}
    V = {f"1v({a})": (a, a) for a in objs}
    C = {f"1({a})": (f"1v({a})", f"1v({a})", f"1h({a})", f"1h({a})") for a in objs}

    def first(x, _):
        return x

    return tabulate(objs, H, V, C, first, first, first, first,
                    {a: f"1h({a})" for a in objs}, {a: f"1v({a})" for a in objs},
                    {f"1v({a})": f"1({a})" for a in objs},
                    {f"1h({a})": f"1({a})" for a in objs},
                    name=f"Disc({','.join(objs)})")


def ab(A: GroupTable) -> DoubleGroupoid:
    if not A.is_abelian():
        raise CatalogError("Ab needs an abelian group")
    C = {x: ("1v", "1v", "1h", "1h") for x in A.elements}
    return tabulate(("*",), {"1h": ("*", "*")}, {"1v": ("*", "*")}, C,
                    lambda f, g: "1h", lambda u, w: "1v", A.mul, A.mul,
                    {"*": "1h"}, {"*": "1v"}, {"1v": A.identity}, {"1h": A.identity},
                    name="Ab")


def deloop(G: GroupTable) -> DoubleGroupoid:
    H = {g: ("*", "*") for g in G.elements}
    C = {f"I({g})": ("1v", "1v", g, g) for g in G.elements}
    return tabulate(("*",), H, {"1v": ("*", "*")}, C,
                    G.mul, lambda u, w: "1v",
                    lambda a, b: f"I({G.mul(a[2:-1], b[2:-1])})",
                    lambda a, b: a,
                    {"*": G.identity}, {"*": "1v"}, {"1v": f"I({G.identity})"},
                    {g: f"I({g})" for g in G.elements}, name="Deloop")


def _corners(sq_id: str):
    return tuple(sq_id[2:-1].split(","))


def pair(objs) -> DoubleGroupoid:
    """Codiscrete double groupoid: one square per compatible boundary.  The
    square s(a,b,c,d) has corners bottom-right a, top-right b, bottom-left c,
    top-left d."""
    objs = tuple(str(a) for a in objs)
    if not objs or len(set(objs)) != len(objs):
        raise CatalogError("Pair needs distinct objects")
    if any("," in a or "(" in a or ")" in a for a in objs):
        raise CatalogError("Pair object names may not contain ',', '(' or ')'")
    H = {f"h({t},{s})": (s, t) for t in objs for s in objs}
    V = {f"v({t},{s})": (s, t) for t in objs for s in objs}
    C = {}
    for a in objs:
        for b in objs:
            for c in objs:
                for d in objs:
                    C[f"s({a},{b},{c},{d})"] = (f"v({b},{a})", f"v({d},{c})",
                                                f"h({c},{a})", f"h({d},{b})")

    def hm(f, g):
        return f"h({f[2:-1].split(',')[0]},{g[2:-1].split(',')[1]})"

    def vm(u, w):
        return f"v({u[2:-1].split(',')[0]},{w[2:-1].split(',')[1]})"

    def hs(x, y):
        a1, b1, c1, d1 = _corners(x)
        a2, b2, c2, d2 = _corners(y)
        return f"s({a2},{b2},{c1},{d1})"

    def vs(x, y):
        a1, b1, c1, d1 = _corners(x)
        a2, b2, c2, d2 = _corners(y)
        return f"s({a2},{b1},{c2},{d1})"

    return tabulate(objs, H, V, C, hm, vm, hs, vs,
                    {a: f"h({a},{a})" for a in objs}, {a: f"v({a},{a})" for a in objs},
                    {f"v({t},{s})": f"s({s},{t},{s},{t})" for t in objs for s in objs},
                    {f"h({t},{s})": f"s({s},{s},{t},{t})" for t in objs for s in objs},
                    name=f"Pair({','.join(objs)})")


def restrict_squares(g: DoubleGroupoid, keep, name: str, double_category_ok=False) -> DoubleGroupoid:
    """Sub-structure on the same objects and edges with squares `keep`.
    Raises CatalogError if `keep` is not closed under the structure."""
    keep = set(keep)
    for i in list(g.id_h_sq.values()) + list(g.id_v_sq.values()):
        if i not in keep:
            raise CatalogError(f"identity square {i!r} not kept")
    chs = {k: v for k, v in g.comp_h_sq.items() if k[0] in keep and k[1] in keep}
    cvs = {k: v for k, v in g.comp_v_sq.items() if k[0] in keep and k[1] in keep}
    for v in list(chs.values()) + list(cvs.values()):
        if v not in keep:
            raise CatalogError(f"square set not closed: {v!r}")
    return DoubleGroupoid(g.objects, dict(g.hmors), dict(g.vmors),
                          {a: g.squares[a] for a in keep}, dict(g.comp_h_mor),
                          dict(g.comp_v_mor), chs, cvs, dict(g.id_h_obj), dict(g.id_v_obj),
                          dict(g.id_h_sq), dict(g.id_v_sq), double_category_ok, name)


def nofill() -> DoubleGroupoid:
    """Pair(a,b) cut down to its thin squares I^h u and I^v f.  Closed and a
    groupoid, but the corner (h(b,a), v(a,b)) has no filler."""
    p = pair(("a", "b"))
    keep = set(p.id_h_sq.values()) | set(p.id_v_sq.values())
    return restrict_squares(p, keep, "NoFill")


def tensor(A: cat.Category, B: cat.Category, double_category_ok: bool = False,
           name: str = "Tensor") -> DoubleGroupoid:
    """A (x) B: objects (a;b), horizontal (f;b), vertical (a;u), squares
    (f;u) with f from A and u from B."""
    objs = tuple(f"{a};{b}" for a in A.objects for b in B.objects)
    H = {f"h({f};{b})": (f"{A.src(f)};{b}", f"{A.tgt(f)};{b}")
         for f in A.mors for b in B.objects}
    V = {f"v({a};{u})": (f"{a};{B.src(u)}", f"{a};{B.tgt(u)}")
         for a in A.objects for u in B.mors}
    C = {f"sq({f};{u})": (f"v({A.src(f)};{u})", f"v({A.tgt(f)};{u})",
                          f"h({f};{B.src(u)})", f"h({f};{B.tgt(u)})")
         for f in A.mors for u in B.mors}

    def split(x):
        body = x[x.index("(") + 1:-1]
        i = body.index(";")
        return body[:i], body[i + 1:]

    def hm(x, y):
        (f, b), (f2, _) = split(x), split(y)
        return f"h({A.compose(f, f2)};{b})"

    def vm(x, y):
        (a, u), (_, u2) = split(x), split(y)
        return f"v({a};{B.compose(u, u2)})"

    def hs(x, y):
        (f, u), (f2, _) = split(x), split(y)
        return f"sq({A.compose(f, f2)};{u})"

    def vs(x, y):
        (f, u), (_, u2) = split(x), split(y)
        return f"sq({f};{B.compose(u, u2)})"

    return tabulate(objs, H, V, C, hm, vm, hs, vs,
                    {f"{a};{b}": f"h({A.ident[a]};{b})" for a in A.objects for b in B.objects},
                    {f"{a};{b}": f"v({a};{B.ident[b]})" for a in A.objects for b in B.objects},
                    {f"v({a};{u})": f"sq({A.ident[a]};{u})" for a in A.objects for u in B.mors},
                    {f"h({f};{b})": f"sq({f};{B.ident[b]})" for f in A.mors for b in B.objects},
                    double_category_ok, name)


def unitcell() -> DoubleGroupoid:
    """[1] (x) [1]: the free double category on one square."""
    return tensor(cat.ordinal(1), cat.ordinal(1), double_category_ok=True, name="UnitCell")


# ---------------------------------------------------------------------------
# expressions
# ---------------------------------------------------------------------------

def _category(tok: str) -> cat.Category:
    tok = tok.strip()
    m = re.fullmatch(r"\[(\d+)\]", tok)
    if m:
        return cat.ordinal(int(m.group(1)))
    m = re.fullmatch(r"(?i)pair\{(.*)\}", tok)
    if m:
        return cat.pair_groupoid(_objects(m.group(1)))
    try:
        return cat.from_group(parse_group(tok))
    except GroupError as exc:
        raise CatalogError(str(exc)) from exc


def _objects(text: str) -> list:
    text = text.strip().strip("{}")
    objs = [t.strip() for t in text.split(",") if t.strip()]
    if not objs:
        raise CatalogError("empty object list")
    return objs


def _group(text: str) -> GroupTable:
    try:
        return parse_group(text.replace(" ", ""))
    except GroupError as exc:
        raise CatalogError(str(exc)) from exc


def _split_args(text: str) -> list:
    """Split on commas/whitespace at bracket depth zero."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if depth == 0 and (ch == "," or ch.isspace()):
            if cur:
                out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur:
        out.append(cur)
    return out


def parse_expr(expr: str):
    """Return (kind, argument string) for a builder expression."""
    expr = expr.strip()
    m = re.fullmatch(r"(\w+)\s*\((.*)\)", expr, re.S) or re.fullmatch(r"(\w+)\s*(\{.*\})", expr, re.S)
    if m:
        return m.group(1).lower(), m.group(2)
    head, _, rest = expr.partition(" ")
    return head.lower(), rest


def build(expr: str) -> DoubleGroupoid:
    kind, args = parse_expr(expr)
    if kind == "disc":
        return disc(_objects(args))
    if kind == "ab":
        return ab(_group(args))
    if kind == "deloop":
        return deloop(_group(args))
    if kind == "pair":
        return pair(_objects(args))
    if kind == "tensor":
        parts = _split_args(args)
        if len(parts) != 2:
            raise CatalogError("Tensor takes two arguments")
        return tensor(_category(parts[0]), _category(parts[1]))
    if kind == "nofill" and not args.strip():
        return nofill()
    if kind == "unitcell" and not args.strip():
        return unitcell()
    raise CatalogError(f"unknown builder expression {expr!r}")


def standard_catalog() -> dict:
    """One instance of each builder, in a fixed order."""
    return {
        "Disc(a,b)": disc(("a", "b")),
        "Ab(Z/2)": ab(parse_group("Z2")),
        "Deloop(Z/3)": deloop(parse_group("Z3")),
        "Pair(0,1)": pair(("0", "1")),
        "Tensor(Z/2,Z/2)": tensor(cat.from_group(parse_group("Z2")),
                                  cat.from_group(parse_group("Z2"))),
        "NoFill": nofill(),
        "UnitCell": unitcell(),
    }
