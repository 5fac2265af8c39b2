"""
Symmetric Orbit Polynomials Tests Package

This package contains pytest suites including:
- Unit tests for the algebra in core/
- Orbit table and weak-order tests
- Localization and verification suite tests
- Command line tests
"""

__version__ = "1.0.0"
__author__ = "Symmetric Orbit Polynomials Team"
