"""Diminished Sombor matrix spectra, energies, bound audits and integer-energy search."""

from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
