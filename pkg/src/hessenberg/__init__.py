"""Hessenberg varieties, Schubert decompositions and their brute-force oracles."""

__version__ = "0.1.0"
