"""The audit catalog: each transcribed map with the configuration it lives
in (which squares share which edges, which simplices are faces of which)
and what its sides and end slices must be."""
from __future__ import annotations

from fractions import Fraction

from . import transcriptions as T
from .engine import Bound, Case, PathSym, SimplexSym, Square, SquareSym, World

ZERO = Fraction(0)


# -- building blocks --------------------------------------------------------

def base_square(W: World, name: str) -> Square:
    b, l, r, tp = W.squares[name]
    return Square(SquareSym(name), PathSym(b), PathSym(l), PathSym(r), PathSym(tp))


def comp_h(left: Square, right: Square) -> Square:
    return Square(Bound(T.comp_h, {"alpha": right.fn, "alpha_p": left.fn}),
                  right.bottom, right.left, left.right, left.top)


def comp_v(top: Square, bottom: Square) -> Square:
    return Square(Bound(T.comp_v, {"alpha": bottom.fn, "beta": top.fn}),
                  bottom.bottom, top.left, bottom.right, top.top)


def e_h(v, u) -> Square:
    return Square(Bound(T.e_h, {"v": v, "u": u}), u, v, u, v)


def e_v(u_p, u) -> Square:
    return Square(Bound(T.e_v, {"u": u, "u_p": u_p}), u, u, u_p, u_p)


def inv_h(a: Square) -> Square:
    return Square(Bound(T.inv_h, {"alpha": a.fn}), a.right, a.top, a.bottom, a.left)


def inv_v(a: Square) -> Square:
    return Square(Bound(T.inv_v, {"alpha": a.fn}), a.left, a.bottom, a.top, a.right)


def simplex_path(sigma: str, dim: int, i0: int, i1: int):
    def fn(s):
        c = [ZERO] * (dim + 1)
        c[i0] += 1 - s
        c[i1] += s
        return [("S", sigma, tuple(c))]
    return fn


def eta(sigma: str) -> Square:
    """eta of a 3-simplex, with edges the paths through vertices {1,3},
    {1,2}, {0,3}, {0,2}."""
    return Square(Bound(T.eta, {"alpha": SimplexSym(sigma, 3)}),
                  simplex_path(sigma, 3, 1, 3), simplex_path(sigma, 3, 1, 2),
                  simplex_path(sigma, 3, 0, 3), simplex_path(sigma, 3, 0, 2))


def _edges(s: Square) -> tuple:
    return (s.bottom, s.left, s.right, s.top)


def _identity(n):
    return list(range(n))


# -- cases ------------------------------------------------------------------

def _square_world(*specs) -> World:
    W = World()
    for s in specs:
        W.square(*s)
    return W


def case_comp_h() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"), ("alpha_p", "u_p", "v_p", "u_pp", "v_pp"))
    a, ap = base_square(W, "alpha"), base_square(W, "alpha_p")
    s = comp_h(ap, a)
    return Case("comp_h", T.comp_h, W, s.fn.bindings, _edges(s))


def case_comp_v() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"), ("beta", "v", "w", "v_p", "w_p"))
    s = comp_v(base_square(W, "beta"), base_square(W, "alpha"))
    return Case("comp_v", T.comp_v, W, s.fn.bindings, _edges(s))


def case_e_h() -> Case:
    W = World().path("u", "v").join("u", 0, "v", 0)
    s = e_h(PathSym("v"), PathSym("u"))
    return Case("e_h", T.e_h, W, s.fn.bindings, _edges(s))


def case_e_v() -> Case:
    W = World().path("u", "u_p").join("u", 1, "u_p", 1)
    s = e_v(PathSym("u_p"), PathSym("u"))
    return Case("e_v", T.e_v, W, s.fn.bindings, _edges(s))


def case_inv_h() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"))
    s = inv_h(base_square(W, "alpha"))
    return Case("inv_h", T.inv_h, W, s.fn.bindings, _edges(s))


def case_inv_v() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"))
    s = inv_v(base_square(W, "alpha"))
    return Case("inv_v", T.inv_v, W, s.fn.bindings, _edges(s))


def case_assoc() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"), ("alpha_p", "u_p", "v_p", "u_pp", "v_pp"),
                      ("alpha_pp", "u_pp", "v_pp", "u_ppp", "v_ppp"))
    a, ap, app = (base_square(W, n) for n in ("alpha", "alpha_p", "alpha_pp"))
    src = comp_h(comp_h(app, ap), a)
    tgt = comp_h(app, comp_h(ap, a))
    b = {"alpha": a.fn, "alpha_p": ap.fn, "alpha_pp": app.fn}
    return Case("assoc", T.assoc, W, b, _edges(src), src.fn, tgt.fn)


def case_right_identity() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"))
    a = base_square(W, "alpha")
    src = comp_h(a, e_h(a.left, a.bottom))
    b = {"alpha": a.fn, "u": a.bottom, "v": a.left}
    return Case("right_identity", T.right_identity, W, b, _edges(a), src.fn, a.fn)


def case_h_inverse() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"))
    a = base_square(W, "alpha")
    src = comp_h(inv_h(a), a)
    tgt = e_h(a.left, a.bottom)
    return Case("h_inverse", T.h_inverse, W, {"alpha": a.fn}, _edges(tgt), src.fn, tgt.fn)


def case_axiom1() -> Case:
    W = World().path("u")
    u = PathSym("u")
    src, tgt = e_h(u, u), e_v(u, u)
    return Case("axiom1", T.axiom1, W, {"u": u}, _edges(src), src.fn, tgt.fn)


def case_axiom2() -> Case:
    W = World().path("u", "v", "w").join("u", 1, "v", 1).join("v", 1, "w", 1)
    u, v, w = PathSym("u"), PathSym("v"), PathSym("w")
    src = comp_h(e_v(w, v), e_v(v, u))
    tgt = e_v(w, u)
    return Case("axiom2", T.axiom2, W, {"u": u, "v": v, "w": w}, _edges(tgt), src.fn, tgt.fn)


def case_interchange() -> Case:
    W = _square_world(("alpha", "u", "v", "u_p", "v_p"), ("beta", "v", "w", "v_p", "w_p"),
                      ("gamma", "u_p", "v_p", "u_pp", "v_pp"), ("delta", "v_p", "w_p", "v_pp", "w_pp"))
    a, b, g, d = (base_square(W, n) for n in ("alpha", "beta", "gamma", "delta"))
    src = comp_v(comp_h(d, b), comp_h(g, a))
    tgt = comp_h(comp_v(d, g), comp_v(b, a))
    bind = {"alpha": a.fn, "beta": b.fn, "gamma": g.fn, "delta": d.fn, "v_p": PathSym("v_p")}
    return Case("interchange", T.interchange, W, bind, _edges(src), src.fn, tgt.fn)


def case_eta() -> Case:
    W = World().simplex("alpha", 3)
    s = eta("alpha")
    return Case("eta", T.eta, W, s.fn.bindings, _edges(s))


def case_F1() -> Case:
    # beta d^0 = alpha_1 d^0 s^0, beta d^1 = alpha_1, beta d^2 = alpha
    W = (World().simplex("beta", 4).simplex("alpha", 3).simplex("alpha_1", 3)
         .relate("beta", (1, 2, 3, 4), "alpha_1", (1, 1, 2, 3))
         .relate("beta", (0, 2, 3, 4), "alpha_1", _identity(4))
         .relate("beta", (0, 1, 3, 4), "alpha", _identity(4)))
    src, tgt = eta("alpha_1"), eta("alpha")
    return Case("F1", T.F1, W, {"beta": SimplexSym("beta", 4)}, _edges(src), src.fn, tgt.fn)


def case_F2() -> Case:
    # gamma d^3 = alpha, gamma d^4 = alpha_2, gamma d^2 = alpha_2 d^2 s^2
    W = (World().simplex("gamma", 4).simplex("alpha", 3).simplex("alpha_2", 3)
         .relate("gamma", (0, 1, 2, 4), "alpha", _identity(4))
         .relate("gamma", (0, 1, 2, 3), "alpha_2", _identity(4))
         .relate("gamma", (0, 1, 3, 4), "alpha_2", (0, 1, 3, 3)))
    src, tgt = eta("alpha"), eta("alpha_2")
    return Case("F2", T.F2, W, {"gamma": SimplexSym("gamma", 4)}, _edges(src), src.fn, tgt.fn)


def _omega_world() -> World:
    W = World().simplex("omega", 4)
    for i in range(5):
        W.simplex(f"omega_d{i}", 3).relate(f"omega_d{i}", _identity(4), "omega",
                                           [j for j in range(5) if j != i])
    return W


def case_H1() -> Case:
    W = _omega_world()
    src = eta("omega_d1")
    tgt = comp_h(eta("omega_d2"), eta("omega_d0"))
    return Case("H1", T.H1, W, {"omega": SimplexSym("omega", 4)}, _edges(src), src.fn, tgt.fn)


def case_H2() -> Case:
    W = _omega_world()
    src = eta("omega_d3")
    tgt = comp_v(eta("omega_d4"), eta("omega_d2"))
    return Case("H2", T.H2, W, {"omega": SimplexSym("omega", 4)}, _edges(src), src.fn, tgt.fn)


def case_H3() -> Case:
    W = (World().simplex("g", 2).simplex("g_s2", 3).relate("g_s2", _identity(4), "g", (0, 1, 2, 2)))
    src = eta("g_s2")
    tgt = e_v(simplex_path("g", 2, 0, 2), simplex_path("g", 2, 1, 2))
    return Case("H3", T.H3, W, {"g": SimplexSym("g", 2)}, _edges(src), src.fn, tgt.fn)


def case_H4() -> Case:
    W = (World().simplex("g", 2).simplex("g_s0", 3).relate("g_s0", _identity(4), "g", (0, 0, 1, 2)))
    src = eta("g_s0")
    tgt = e_h(simplex_path("g", 2, 0, 1), simplex_path("g", 2, 0, 2))
    return Case("H4", T.H4, W, {"g": SimplexSym("g", 2)}, _edges(src), src.fn, tgt.fn)


CASES = {
    "comp_h": case_comp_h, "comp_v": case_comp_v, "e_h": case_e_h, "e_v": case_e_v,
    "inv_h": case_inv_h, "inv_v": case_inv_v, "assoc": case_assoc,
    "right_identity": case_right_identity, "h_inverse": case_h_inverse,
    "axiom1": case_axiom1, "axiom2": case_axiom2, "interchange": case_interchange,
    "eta": case_eta, "F1": case_F1, "F2": case_F2,
    "H1": case_H1, "H2": case_H2, "H3": case_H3, "H4": case_H4,
}


def cases(only=None) -> list:
    names = list(CASES) if not only else [n for n in CASES if n in only]
    return [CASES[n]() for n in names]
