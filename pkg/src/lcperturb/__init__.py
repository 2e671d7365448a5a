"""Local cohomology under small perturbations, computed over localized polynomial rings."""

__version__ = "0.1.0"
