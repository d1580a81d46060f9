"""Metric operators and Hermitian images for i g x^eps p Hamiltonians."""

__version__ = "0.1.0"
