"""Seidel spectra and energies of graphs with self-loops."""
__version__ = "0.1.0"
