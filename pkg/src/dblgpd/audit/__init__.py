"""Exact audit of the piecewise formulas for squares and homotopies."""
from .catalog import CASES, cases
from .engine import Report, audit


def run(only=None, grids=(16, 17)) -> list:
    return [audit(c, grids) for c in cases(only)]
