"""Exact computation and identity audit of degenerate poly-Frobenius-Genocchi
polynomials and their complex-argument (cosine/sine) variants."""

__version__ = "0.1.0"
