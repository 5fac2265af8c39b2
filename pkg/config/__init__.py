"""
Symmetric Orbit Polynomials Configuration Package

This package contains configuration and settings including:
- Application settings
- Computation bounds for desk-scale verification
- Environment variables management
"""

__version__ = "1.0.0"
__author__ = "Symmetric Orbit Polynomials Team"
