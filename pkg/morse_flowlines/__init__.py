"""
Morse Flowlines - Discrete Morse theory engine for simplicial complexes

Builds signed modified Hasse diagrams, evolves index 2 flowlines with the
Flop/Insert/Cancel algorithm, assembles their moduli spaces and computes
integer homology from the resulting Morse differential.
"""

__version__ = "0.1.0"
__author__ = "Morse Flowlines Team"

__all__ = ["__version__", "__author__"]
