"""Exact (alpha,beta,gamma)-derivation spaces of finite-dimensional anti-commutative algebras."""

__version__ = "0.1.0"
