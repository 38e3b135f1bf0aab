"""Exact exterior-algebra toolkit for SU(3)-structures and their exterior differential systems."""

__version__ = "0.1.0"
