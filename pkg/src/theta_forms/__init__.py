"""Exact-arithmetic toolkit for theta modular forms and finite-field sweeps."""

__version__ = "0.1.0"
