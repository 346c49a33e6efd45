"""Rational G1 polygonal surfaces: gluing data, syzygies and spline spaces."""

__version__ = "0.1.0"
