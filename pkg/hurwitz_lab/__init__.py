"""Exact double Hurwitz numbers and G-bundle counts via the class algebra."""

__version__ = "1.0.0"
