"""prodint: product integrals and logarithmic derivatives on finite-dimensional Lie groups."""
__version__ = "1.0.0"
