"""Piecewise formulas, transcribed as data.

Each region is (conditions, symbol, arguments).  Conditions are a
conjunction of inequalities; chained inequalities are split into two.
Expressions use explicit * and **, otherwise they are copied as printed,
unsimplified.  Nothing here is ever edited to make an audit pass.

Symbol names: alpha_p and alpha_pp stand for alpha' and alpha'', v_p for
v', u_p for u'.
"""
from __future__ import annotations

from dataclasses import dataclass

SOURCE = "dblgpd/audit/transcriptions.py"


@dataclass(frozen=True)
class Region:
    conditions: tuple
    symbol: str
    args: tuple


@dataclass(frozen=True)
class PiecewiseMap:
    name: str
    variables: tuple
    regions: tuple


def _pm(name, variables, rows):
    return PiecewiseMap(name, tuple(variables),
                        tuple(Region(tuple(c), s, tuple(a)) for c, s, a in rows))


XY, XYT = ("x", "y"), ("x", "y", "t")

comp_h = _pm("comp_h", XY, [
    (["x <= y", "x + y <= 1"], "alpha", ["2*x", "x + y"]),
    (["x >= y", "x + y <= 1"], "alpha", ["x + y", "2*y"]),
    (["x <= y", "x + y >= 1"], "alpha_p", ["x + y - 1", "2*y - 1"]),
    (["x >= y", "x + y >= 1"], "alpha_p", ["2*x - 1", "x + y - 1"]),
])

comp_v = _pm("comp_v", XY, [
    (["x >= y", "x + y >= 1"], "alpha", ["2*x - 1", "1 - x + y"]),
    (["x >= y", "x + y <= 1"], "alpha", ["x - y", "2*y"]),
    (["x <= y", "x + y >= 1"], "beta", ["1 + x - y", "2*y - 1"]),
    (["x <= y", "x + y <= 1"], "beta", ["2*x", "y - x"]),
])

e_h = _pm("e_h", XY, [
    (["x <= y"], "v", ["y - x"]),
    (["x >= y"], "u", ["x - y"]),
])

e_v = _pm("e_v", XY, [
    (["x + y <= 1"], "u", ["x + y"]),
    (["x + y >= 1"], "u_p", ["2 - x - y"]),
])

inv_h = _pm("inv_h", XY, [
    ([], "alpha", ["1 - y", "1 - x"]),
])

inv_v = _pm("inv_v", XY, [
    ([], "alpha", ["y", "x"]),
])

assoc = _pm("assoc", XYT, [
    (["x <= y", "(2 - t)*(1 - y) >= (2 + t)*x"],
     "alpha", ["4*x/(2 - t)", "((2 + t)*x + (2 - t)*y)/(2 - t)"]),
    (["x >= y", "(2 - t)*(1 - x) >= (2 + t)*y"],
     "alpha", ["((2 - t)*x + (2 + t)*y)/(2 - t)", "4*y/(2 - t)"]),
    (["x <= y", "(2 - t)*(1 - y) <= (2 + t)*x", "(1 + t)*x <= (3 - t)*(1 - y)"],
     "alpha_p", ["t*(1 + x - y) + 2*(x + y - 1)", "x + 3*y - 2 + t*(1 + x - y)"]),
    (["x >= y", "(2 - t)*(1 - x) <= (2 + t)*y", "(1 + t)*y <= (3 - t)*(1 - x)"],
     "alpha_p", ["3*x + y - 2 + t*(1 - x + y)", "t*(1 - x + y) + 2*(x + y - 1)"]),
    (["x <= y", "(1 + t)*x >= (1 - y)*(3 - t)"],
     "alpha_pp", ["(x + 3*y - 3 + t*(1 + x - y))/(1 + t)", "(t - 3 + 4*y)/(1 + t)"]),
    (["x >= y", "(1 + t)*y >= (3 - t)*(1 - x)"],
     "alpha_pp", ["(t - 3 + 4*x)/(1 + t)", "(3*x + y - 3 + t*(1 - x + y))/(1 + t)"]),
])

right_identity = _pm("right_identity", XYT, [
    (["x <= y", "x <= (1/2)*(1 - t)*(1 + x - y)"], "v", ["y - x"]),
    (["x >= y", "x <= (1/2)*(1 - t)*(1 + x - y)"], "u", ["x - y"]),
    (["(1/2)*(1 - t)*(1 + x - y) <= x", "x <= y"],
     "alpha", ["(x + y - 1 + t*(1 + x - y))/(1 + t)", "(2*y + t - 1)/(1 + t)"]),
    (["(1/2)*(1 - t)*(1 - x - y) <= y", "y <= x"],
     "alpha", ["(2*x + t - 1)/(1 + t)", "(x + y - 1 + t*(1 - x + y))/(1 + t)"]),
])

h_inverse = _pm("h_inverse", XYT, [
    (["x <= y", "x + y <= 1"], "alpha", ["2*x*(1 - t)", "(1 - 2*t)*x + y"]),
    (["x >= y", "x + y <= 1"], "alpha", ["x + (1 - 2*t)*y", "2*y*(1 - t)"]),
    (["x <= y", "x + y >= 1"], "alpha", ["2*(t*y - t - y + 1)", "2*(t*y - t + 1) - x - y"]),
    (["x >= y", "x + y >= 1"], "alpha", ["(2*x - 2)*t + 2 - x - y", "(2*x - 2)*t + 2 - 2*x"]),
])

axiom1 = _pm("axiom1", XYT, [
    (["x <= y", "(1 - t)*(1 - y) >= (1 + t)*x"], "u", ["y - x"]),
    (["x <= y", "x + y <= 1", "(1 - t)*(1 - y) <= (1 + t)*x"], "u", ["2*y - 1 + t*(1 + x - y)"]),
    (["x >= y", "(1 - t)*(1 - x) >= (1 + t)*y"], "u", ["x - y"]),
    (["x >= y", "x + y <= 1", "(1 - t)*(1 - x) <= (1 + t)*y"], "u", ["2*x - 1 + t*(1 - x + y)"]),
    (["x <= y", "x + y >= 1", "(1 + t)*(1 - y) >= (1 - t)*x"], "u", ["1 - 2*x + t*(1 + x - y)"]),
    (["x <= y", "x + y >= 1", "(1 + t)*(1 - y) <= (1 - t)*x"], "u", ["y - x"]),
    (["x >= y", "x + y >= 1", "(1 + t)*(1 - x) >= (1 - t)*y"], "u", ["1 - 2*y + t*(1 - x + y)"]),
    (["x >= y", "(1 + t)*(1 - x) <= (1 - t)*y"], "u", ["x - y"]),
])

axiom2 = _pm("axiom2", XYT, [
    (["x <= y", "(1 + t)*(1 - y) >= (3 - t)*x"], "u", ["y - x + 4*x/(1 + t)"]),
    (["x <= y", "x + y <= 1", "(1 + t)*(1 - y) <= (3 - t)*x"], "v", ["2 - 3*x - y + t*(1 + x - y)"]),
    (["x >= y", "(1 + t)*(1 - x) >= (3 - t)*y"], "u", ["x - y + 4*y/(1 + t)"]),
    (["x >= y", "x + y <= 1", "(1 + t)*(1 - x) <= (3 - t)*y"], "v", ["2 - x - 3*y + t*(1 - x + y)"]),
    (["x <= y", "x + y >= 1", "(3 - t)*(1 - y) >= (1 + t)*x"], "v", ["x + 3*y - 2 + t*(1 + x - y)"]),
    (["x <= y", "(3 - t)*(1 - y) <= (1 + t)*x"], "w", ["y - x + 4*(y - 1)/(1 + t)"]),
    (["x >= y", "x + y >= 1", "(3 - t)*(1 - x) >= (1 + t)*y"], "v", ["3*x + y - 2 + t*(1 - x + y)"]),
    (["x >= y", "(3 - t)*(1 - x) <= (1 + t)*y"], "w", ["x - y + 4*(1 - x)/(1 + t)"]),
])

interchange = _pm("interchange", XYT, [
    # 1
    (["1 - x + 2*t*y >= 5*y", "x - 3*y >= 2*t*y"],
     "alpha", ["x + y - 2*t*y", "4*y"]),
    # 2
    (["2 + t - t**2 - 6*x + 4*t*x + 2*y >= 8*t*y", "(3 + 2*t)*y >= x", "x >= y"],
     "alpha", ["2*(x - y)/(1 + t)", "2*(x - t*x + y + 3*t*y)/(2 + t - t**2)"]),
    # 3
    (["t**2 + t*(4*x - 3) >= 2*(x + y - 1)", "t**2 - 2*x + 6*y >= t*(4*x + 8*y - 3)",
      "t**2 + 6*x + t*(8*y - 4*x - 1) >= 2*(1 + y)"],
     "alpha", ["(t**2 - 2*t + 2*x - 2*y + 4*t*y)/(1 - 2*t + 2*t**2)",
               "(3*t**2 - t*(1 + 4*x) + 2*(x + y))/(2 - 4*t + 4*t**2)"]),
    # 4
    (["1 >= x + y", "x - 1 >= (2*t - 5)*y", "2*x - t**2 - 6*y >= t*(3 - 4*x - 8*y)"],
     "alpha", ["(t - 2*(x + y))/(t - 2)", "(2*t*(x + 3*y - 1) - 8*y)/(t**2 - t - 2)"]),
    # 5
    (["x >= y", "1 >= x + y", "2*(x + y - 1) >= t**2 + t*(4*x - 3)"],
     "v_p", ["3 - t - 4*x"]),
    # 6
    (["5*x + y - 5 >= 2*t*(x - 1)", "2*t*(x - 1) + 3*x >= y + 2"],
     "gamma", ["4*x - 3", "x + y - 1 - 2*t*(x - 1)"]),
    # 7
    (["x + y >= 1", "5 + 2*t*(x - 1) >= 5*x + y", "9*t + 6*x >= 4 + t**2 + 8*t*x + 2*y + 4*t*y"],
     "gamma", ["(6 + t**2 - 8*x + t*(6*x + 2*y - 7))/(t**2 - t - 2)", "2*(x + y - 1)/(2 - t)"]),
    # 8
    (["t + t**2 + 2*(x + y - 1) >= 4*t*y", "t**2 + 2*(1 + x - 3*y) >= t*(8*x - y - 3)",
      "4 + t**2 - 6*x + 2*y >= t*(9 - 8*x - 4*y)"],
     "gamma", ["(t + t**2 - 4*t*y + 2*(x + y - 1))/(2 - 4*t + 4*t**2)",
               "(1 + t**2 + 4*t*(x - 1) - 2*x + 2*y)/(1 - 2*t + 2*t**2)"]),
    # 9
    (["8*t*x + 6*y - 4*t*y >= 2 + 3*t + t**2 + 2*x", "x >= y", "2 + y >= 2*t*(x - 1) + 3*x"],
     "gamma", ["(t**2 - 2*(x + y - 1) + t*(3 - 6*x + 2*y))/(t**2 - t - 2)",
               "(1 + t - 2*x + 2*y)/(1 + t)"]),
    # 10
    (["x >= y", "x + y >= 1", "2 + 4*t*y >= t + t**2 + 2*x + 2*y"],
     "v_p", ["4*y - 1 - t"]),
    # 11
    (["1 + 2*t*x >= y + 5*x", "y >= 3*x + 2*t*x"],
     "beta", ["4*x", "x + y - 2*t*x"]),
    # 12
    (["1 >= x + y", "y + (5 - 2*t)*x >= 1", "2*y + t*(3 - 4*y - 8*x) - 6*x >= t**2"],
     "beta", ["(2*t*(y + 3*x - 1) - 8*x)/(t**2 - t - 2)", "(t - 2*(x + y))/(t - 2)"]),
    # 13
    (["t**2 + t*(4*y - 3) >= 2*(x + y - 1)", "t**2 + t*(3 - 4*y - 8*x) + 6*x >= 2*y",
      "t**2 + 6*y - 2*(1 + x) >= t*(1 + 4*y - 8*x)"],
     "beta", ["(3*t**2 - t*(1 + 4*y) + 2*(x + y))/(2 - 4*t + 4*t**2)",
              "(t**2 - 2*t + 2*y - 2*x + 4*t*x)/(1 - 2*t + 2*t**2)"]),
    # 14
    (["2 + t + 4*t*y + 2*x >= t**2 + 6*y + 8*t*x", "(3 + 2*t)*x >= y", "y >= x"],
     "beta", ["2*(y - t*y + x + 3*t*x)/(2 + t - t**2)", "2*(y - x)/(1 + t)"]),
    # 15
    (["y >= x", "1 >= x + y", "2*(x + y - 1) >= t**2 + t*(3 - 4*y)"],
     "v_p", ["3 - t - 4*y"]),
    # 16
    (["5*y + x >= 5 + 2*t*(y - 1)", "2*t*(y - 1) + 3*y >= x + 2"],
     "delta", ["2*t*(1 - y) + x + y - 1", "4*y - 3"]),
    # 17
    (["x + y >= 1", "9*t + 6*y - 8*t*y - 2*x - 4*t*x >= 4 + t**2", "5 + 2*t*(y - 1) >= 5*y + x"],
     "delta", ["2*(x + y - 1)/(2 - t)", "(6 + t**2 - 8*y + t*(6*y + 2*x - 7))/(t**2 - t - 2)"]),
    # 18
    (["t + t**2 - 4*t*x >= 2*(1 - x - y)", "t**2 + 2*(1 + y - 3*x) >= t*(8*y - 4*x - 3)",
      "4 + t**2 - 6*y + 2*x >= t*(9 - 8*y - 4*x)"],
     "delta", ["(1 + t**2 + 4*t*(y - 1) - 2*y + 2*x)/(1 - 2*t + 2*t**2)",
               "(t + t**2 - 4*t*x + 2*(x + y - 1))/(2 - 4*t + 4*t**2)"]),
    # 19
    (["8*t*y + 6*x - 4*t*x >= 2 + 3*t + t**2 + 2*y", "y >= x", "2 - 3*y + x >= 2*t*(y - 1)"],
     "delta", ["(1 + t - 2*y + 2*x)/(1 + t)",
               "(t**2 - 2*(x + y - 1) + t*(3 - 6*y + 2*x))/(t**2 - 2 - t)"]),
    # 20
    (["y >= x", "x + y >= 1", "2 + 4*t*x >= t + t**2 + 2*y + 2*x"],
     "v_p", ["4*y - 1 - t"]),
])

eta = _pm("eta", XY, [
    ([], "alpha", ["x*y", "(1 - x)*(1 - y)", "(1 - x)*y", "x*(1 - y)"]),
])

F1 = _pm("F1", XYT, [
    ([], "beta", ["x*y", "t*(1 - x)*(1 - y)", "(1 - t)*(1 - x)*(1 - y)", "(1 - x)*y", "x*(1 - y)"]),
])

F2 = _pm("F2", XYT, [
    ([], "gamma", ["x*y", "(1 - x)*(1 - y)", "(1 - x)*y", "t*x*(1 - y)", "(1 - t)*x*(1 - y)"]),
])

H1 = _pm("H1", XYT, [
    (["x + y <= 1", "x <= y"], "omega",
     ["(1 - t)*x*y", "2*t*x*(x + y)", "(1 - x)*(1 - y) + t*x*(2*x - 2 + y)",
      "y*(1 - x) + t*x*(1 - 2*x - y)", "x*(1 - y) + t*x*(1 - 2*x - y)"]),
    (["x + y <= 1", "x >= y"], "omega",
     ["(1 - t)*x*y", "2*t*y*(x + y)", "(1 - x)*(1 - y) + t*y*(2*y - 2 + x)",
      "y*(1 - x) + t*y*(1 - x - 2*y)", "x*(1 - y) + t*y*(1 - x - 2*y)"]),
    (["x + y >= 1", "x <= y"], "omega",
     ["x*y + t*(1 - y)*(1 - x - 2*y)", "2*t*(1 - y)*(2 - x - y)", "(1 - t)*(1 - x)*(1 - y)",
      "y*(1 - x) - t*(1 - y)*(2 - x - 2*y)", "(1 - y)*(x - t*(2 - x - 2*y))"]),
    (["x + y >= 1", "x >= y"], "omega",
     ["x*y + t*(1 - x)*(1 - 2*x - y)", "2*t*(1 - x)*(2 - x - y)", "(1 - t)*(1 - x)*(1 - y)",
      "(1 - x)*(y - t*(2 - 2*x - y))", "x*(1 - y) - t*(1 - x)*(2 - 2*x - y)"]),
])

H2 = _pm("H2", XYT, [
    (["x + y >= 1", "x >= y"], "omega",
     ["t*(1 - x)*(2*x - 1 - y) + x*y", "(1 - x)*(1 - y) + t*(1 - x)*(2*x - 1 - y)",
      "(1 - t)*(1 - x)*y", "2*t*(1 - x)*(1 - x + y)", "x*(1 - y) + t*(1 - x)*(y - 2*x)"]),
    (["x + y <= 1", "x >= y"], "omega",
     ["x*y + t*y*(x - 2*y)", "(1 - x)*(1 - y) + t*y*(x - 2*y)", "(1 - t)*(1 - x)*y",
      "2*t*y*(1 - x + y)", "x*(1 - y) + t*y*(2*y - 1 - x)"]),
    (["x + y >= 1", "x <= y"], "omega",
     ["x*y + t*(1 - y)*(2*y - x - 1)", "(1 - x)*(1 - y) + t*(1 - y)*(2*y - 1 - x)",
      "(1 - x)*y + t*(1 - y)*(x - 2*y)", "2*t*(1 - y)*(1 + x - y)", "(1 - t)*x*(1 - y)"]),
    (["x + y <= 1", "x <= y"], "omega",
     ["x*y + t*x*(y - 2*x)", "(1 - x)*(1 - y) + t*x*(y - 2*x)", "y*(1 - x) + t*x*(2*x - 1 - y)",
      "2*t*x*(1 + x - y)", "(1 - t)*x*(1 - y)"]),
])

H3 = _pm("H3", XYT, [
    (["x + y <= 1"], "g", ["(1 - t)*x*y", "(1 - x)*(1 - y) - t*x*y", "x + y + 2*x*y*(t - 1)"]),
    (["x + y >= 1"], "g", ["x*y + t*(x + y - 1 - x*y)", "(1 - t)*(1 - x)*(1 - y)",
                           "x + y - 2*x*y + 2*t*(1 - x)*(1 - y)"]),
])

H4 = _pm("H4", XYT, [
    (["x <= y"], "g", ["1 - x - y + 2*x*y + 2*t*x*(1 - y)", "(1 - x)*y + t*x*(y - 1)",
                       "(1 - t)*x*(1 - y)"]),
    (["x >= y"], "g", ["1 - x - y + 2*x*y + 2*t*y*(1 - x)", "(1 - t)*(1 - x)*y",
                       "x*(1 - y) + t*y*(x - 1)"]),
])

MAPS = {m.name: m for m in (comp_h, comp_v, e_h, e_v, inv_h, inv_v, assoc, right_identity,
                            h_inverse, axiom1, axiom2, interchange, eta, F1, F2, H1, H2, H3, H4)}
