"""Homological computations over Nakayama algebras given by Kupisch series."""

__version__ = "0.1.0"
