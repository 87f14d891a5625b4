"""Algorithms on matroids and necklaces, checked against brute-force oracles."""
from .core import ElementSet, Matroid, check_axioms, construct

__version__ = "0.1.0"
