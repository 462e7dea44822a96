"""Normalisation by evaluation for a minimal dependent type theory."""

__version__ = "0.1.0"
