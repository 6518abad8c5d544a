"""Combinatorial workbench: tournament paths, Ramsey bounds and
searches, extremal clique-free graphs, De Bruijn cycle machinery."""

__version__ = "0.1.0"

__all__ = [
    "graphs",
    "graphio",
    "redei",
    "ramsey",
    "turan",
    "debruijn",
    "seedsearch",
    "report",
    "cli",
]
