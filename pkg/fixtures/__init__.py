"""
Symmetric Orbit Polynomials Fixtures Package

Golden tables and displays used by the verification suites and tests.
"""

__version__ = "1.0.0"
__author__ = "Symmetric Orbit Polynomials Team"
