"""Milnor fiber cohomology of plane curves via Jacobian syzygies."""

__version__ = "0.1.0"
