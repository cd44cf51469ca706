"""dblgpd command line.

Inputs are a JSON file, `-` for stdin, or `gen:<expression>`.  Exit code 0
means every check passed, 1 that a mathematical check failed, 2 a usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import audit
from . import catalog as C
from . import core
from . import homotopy as H
from . import simplicial as S
from . import theorems
from .bisimplicial import BisimplicialView, dec, diag, extension_check, point, tabulated_from_json
from .bisimplicial import truncate as btruncate
from .bisimplicial import wbar
from .doublenerve import NNError, grid_dump, nn
from .reflection import CertificationError, check_eps, pp


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# inputs
# ---------------------------------------------------------------------------

_WRAP = re.compile(r"(?is)(nerve|delta|dec|nn|diag|wbar)\s*(?:\((.*)\)|\s+(.+))")


def build_any(expr: str):
    """A double groupoid, simplicial set or bisimplicial set from an
    expression such as "deloop Z3", "nerve Z/2", "dec nerve Z/2",
    "nn Ab(Z/2)" or "point"."""
    expr = expr.strip()
    if expr.lower() == "point":
        return point()
    m = _WRAP.fullmatch(expr)
    if not m:
        return C.build(expr)
    head, arg = m.group(1).lower(), (m.group(2) or m.group(3)).strip()
    if head == "nerve":
        return S.nerve(C._category(arg))
    if head == "delta":
        if not arg.isdigit():
            raise UsageError(f"delta takes a dimension, got {arg!r}")
        return S.standard_simplex(int(arg))
    if head == "nn":
        return nn(C.build(arg))
    inner = build_any(arg)
    if head == "dec":
        if not isinstance(inner, S.SimplicialView):
            raise UsageError("dec takes a simplicial set")
        return dec(inner)
    if isinstance(inner, core.DoubleGroupoid):
        inner = nn(inner)
    if not isinstance(inner, BisimplicialView):
        raise UsageError(f"{head} takes a bisimplicial set")
    return diag(inner) if head == "diag" else wbar(inner)


def from_data(data):
    if isinstance(data, dict) and ("squares" in data or "objects" in data):
        return core.from_json(data)
    if isinstance(data, dict) and isinstance(data.get("levels"), list):
        return S.tabulated_from_json(data)
    if isinstance(data, dict) and isinstance(data.get("levels"), dict):
        return tabulated_from_json(data)
    raise UsageError("unrecognised JSON input: expected a double groupoid, "
                     "a simplicial set or a bisimplicial set")


def load_input(src: str):
    if src.startswith("gen:"):
        return build_any(src[4:])
    try:
        text = sys.stdin.read() if src == "-" else open(src, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from exc
    return from_data(data)


def as_groupoid(obj) -> core.DoubleGroupoid:
    if not isinstance(obj, core.DoubleGroupoid):
        raise UsageError("this command takes a double groupoid")
    return obj


def as_bisimplicial(obj) -> BisimplicialView:
    if isinstance(obj, core.DoubleGroupoid):
        return nn(obj)
    if not isinstance(obj, BisimplicialView):
        raise UsageError("this command takes a double groupoid or a bisimplicial set")
    return obj


def as_simplicial(obj) -> S.SimplicialView:
    if not isinstance(obj, S.SimplicialView):
        raise UsageError("this command takes a simplicial set")
    return obj


# ---------------------------------------------------------------------------
# commands: each returns (ok, report, text lines)
# ---------------------------------------------------------------------------

def cmd_validate(a):
    g = as_groupoid(load_input(a.input))
    v = g.validation
    ok = v.is_double_category if a.allow_category else v.is_double_groupoid
    rep = {"summary": g.summary(), "validation": v.to_json(), "ok": ok}
    lines = [f"{g.name}: {g.summary()}",
             f"double category: {v.is_double_category}; groupoid: {v.is_groupoid}"]
    lines += [f"violation: {x['law']} at {x['witness']}" for x in v.violations[:5]]
    lines += [f"structural: {x}" for x in v.structural_errors[:5]]
    return ok, rep, lines


def cmd_filling(a):
    g = as_groupoid(load_input(a.input))
    f = core.check_filling(g)
    variants = core.check_filling_variants(g)
    rep = {"filling": f.to_json(), "variants": variants, "agree": variants == f.ok}
    lines = [f"filling condition: {f.ok}", f"variants agree: {variants == f.ok}"]
    lines += [f"no filler for corner {list(c)}" for c in f.counterexamples[:5]]
    return f.ok and variants == f.ok, rep, lines


def cmd_pi(a):
    g = as_groupoid(load_input(a.input))
    try:
        rep = H.pi_report(g)
    except H.HomotopyError as exc:
        return False, {"error": str(exc)}, [f"error: {exc}"]
    lines = [f"pi0: {rep['pi0']}"]
    for o in g.sorted_objects:
        lines.append(f"{o}: |pi1| = {len(rep['pi1'][o]['elements'])}, "
                     f"|pi2| = {len(rep['pi2'][o]['elements'])}")
    return True, rep, lines


def _pq(text):
    try:
        p, q = (int(s) for s in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected p,q but got {text!r}") from exc
    return p, q


def cmd_nerve(a):
    g = as_groupoid(load_input(a.input))
    K = nn(g)
    P, Q = _pq(a.levels)
    if a.tabulate:
        return True, btruncate(K, P, Q).data, None
    sizes = {f"{p},{q}": K.size(p, q) for p in range(P + 1) for q in range(Q + 1)}
    rep = {"sizes": sizes}
    if a.dump:
        p, q = _pq(a.dump)
        rep["grids"] = [grid_dump(K, p, q, x) for x in K.cells(p, q)]
    return True, rep, [f"NN_{k}: {v} cells" for k, v in sizes.items()]


def cmd_diag_kan(a):
    K = as_bisimplicial(load_input(a.input))
    rep = S.kan_check(diag(K), a.dim)
    lines = [f"diag Kan up to dimension {a.dim}: {rep.ok}"]
    if not rep.ok:
        lines.append(f"horn without filler: {rep.failure}")
    return rep.ok, rep.to_json(), lines


def cmd_extension(a):
    K = as_bisimplicial(load_input(a.input))
    P, Q = _pq(a.levels)
    rep = extension_check(K, P, Q)
    lines = [f"extension condition up to ({P},{Q}): {rep.ok}"]
    if not rep.ok:
        lines.append(f"witness: {rep.failure}")
    return rep.ok, rep.to_json(), lines


def cmd_dec(a):
    L = as_simplicial(load_input(a.input))
    P, Q = _pq(a.levels)
    return True, btruncate(dec(L), P, Q).data, None


def _simplicial_out(a, L):
    rep = S.truncate(L, a.levels).to_json()
    if a.kan is not None:
        k = S.kan_check(L, a.kan)
        if not k.ok:
            return False, {"kan": k.to_json()}, [f"not Kan: {k.failure}"]
    return True, rep, None


def cmd_wbar(a):
    return _simplicial_out(a, wbar(as_bisimplicial(load_input(a.input))))


def cmd_diag(a):
    return _simplicial_out(a, diag(as_bisimplicial(load_input(a.input))))


def cmd_reflect(a):
    K = as_bisimplicial(load_input(a.input))
    try:
        P = pp(K)
    except CertificationError as exc:
        return False, {"certified": False, "reasons": str(exc)}, [f"not certified: {exc}"]
    v = P.g.validation
    fill = core.check_filling(P.g)
    eps = check_eps(P, 2)
    ok = v.is_double_groupoid and fill.ok and not eps
    rep = {"double_groupoid": core.to_json(P.g), "certificate": P.cert.to_json(),
           "axioms_ok": v.is_double_groupoid, "filling": fill.ok,
           "eps_violations": len(eps), "ok": ok}
    lines = [f"PP K: {P.g.summary()}", f"double groupoid: {v.is_double_groupoid}; "
             f"filling: {fill.ok}; eps violations up to (2,2): {len(eps)}"]
    return ok, rep, lines


def cmd_gen(a):
    obj = build_any(" ".join(a.expr))
    if isinstance(obj, core.DoubleGroupoid):
        return True, core.to_json(obj), None
    if isinstance(obj, S.SimplicialView):
        return True, S.truncate(obj, a.levels).to_json(), None
    return True, btruncate(obj, a.levels, a.levels).data, None


def cmd_verify(a):
    if a.what == "theorems":
        rep = theorems.run()
        lines = [f"{k}: {'PASS' if v else 'FAIL'}" for k, v in rep["ok"].items()]
        return rep["all_ok"], rep, lines
    try:
        grids = tuple(int(g) for g in a.grid.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --grid {a.grid!r}") from exc
    only = a.only.split(",") if a.only else None
    if only:
        unknown = [n for n in only if n not in audit.CASES]
        if unknown:
            raise UsageError(f"unknown map(s) {unknown}; known: {', '.join(audit.CASES)}")
    reports = [r.to_json() for r in audit.run(only, grids)]
    ok = all(r["ok"] for r in reports)
    lines = []
    for r in reports:
        lines.append(f"{r['name']}: {'PASS' if r['ok'] else 'FAIL'} "
                     f"(coverage {r['coverage']}, consistency {r['consistency']}, "
                     f"boundary {r['boundary']}, barycentric {r['barycentric']})")
        for f in r["failures"][:3]:
            lines.append(f"  {f['check']} at ({', '.join(f['point'])}) regions {f['regions']}: "
                         f"{f['details']}")
    return ok, {"maps": reports, "ok": ok}, lines


# ---------------------------------------------------------------------------

def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dblgpd", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help, inp=True):
        p = sub.add_parser(name, help=help)
        if inp:
            p.add_argument("input", help="JSON file, - for stdin, or gen:<expression>")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "check the double groupoid axioms").add_argument(
        "--allow-category", action="store_true", help="accept double categories")
    add("filling", cmd_filling, "check the filling condition")
    add("pi", cmd_pi, "homotopy groups pi_0, pi_1, pi_2")
    p = add("nerve", cmd_nerve, "double nerve level sizes")
    p.add_argument("--levels", default="2,2", help="p,q bound (default 2,2)")
    p.add_argument("--tabulate", action="store_true", help="emit the tabulated bisimplicial set")
    p.add_argument("--dump", metavar="P,Q", help="dump all grids of bidegree P,Q")
    add("diag-kan", cmd_diag_kan, "Kan condition on the diagonal of the double nerve").add_argument(
        "--dim", type=int, default=3, help="highest horn dimension (default 3)")
    add("extension", cmd_extension, "bisimplicial extension condition").add_argument(
        "--levels", default="2,2", help="p,q bound (default 2,2)")
    add("dec", cmd_dec, "total decalage of a simplicial set").add_argument(
        "--levels", default="2,2", help="p,q bound (default 2,2)")
    for name, fn, h in (("wbar", cmd_wbar, "codiagonal of a bisimplicial set"),
                        ("diag", cmd_diag, "diagonal of a bisimplicial set")):
        p = add(name, fn, h)
        p.add_argument("--levels", type=int, default=2, help="top level (default 2)")
        p.add_argument("--kan", type=int, metavar="N", help="also check the Kan condition up to N")
    add("reflect", cmd_reflect, "the homotopy double groupoid of a bisimplicial set")
    p = add("gen", cmd_gen, "print a builder expression as JSON", inp=False)
    p.add_argument("expr", nargs="+", help="e.g. deloop Z3, Pair(0,1), dec nerve Z/2")
    p.add_argument("--levels", type=int, default=2, help="truncation for (bi)simplicial output")
    p = add("verify", cmd_verify, "run the theorem suites or the formula audit", inp=False)
    p.add_argument("what", choices=["theorems", "formulas"])
    p.add_argument("--grid", default="16,17", help="grid denominators (default 16,17)")
    p.add_argument("--only", help="comma-separated map names")
    return ap


def main(argv=None) -> int:
    a = parser().parse_args(argv)
    try:
        ok, rep, lines = a.fn(a)
    except (UsageError, C.CatalogError, core.StructureError, NNError, S.TruncationError,
            ValueError) as exc:
        print(f"dblgpd {a.command}: {exc}", file=sys.stderr)
        return 2
    if a.json or lines is None:
        sys.stdout.write(json.dumps(rep, sort_keys=True, indent=2, default=str) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
