"""Finite double groupoids, bisimplicial sets and their homotopy invariants."""

__version__ = "0.1.0"
