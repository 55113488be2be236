"""Buckling spectra of arbitrary order and checks of their universal bounds."""

__version__ = "0.1.0"
