"""xorsat-duality - GF(2) duality and exact annealing gaps of 3-XORSAT Hamiltonians."""

__version__ = "0.1.0"
