"""Hurwitz moduli data and explicit universal family for covers of type
((n-2), 3, 2^((n-2)/2), 2^(n/2)) of the projective line."""

__version__ = "0.1.0"
