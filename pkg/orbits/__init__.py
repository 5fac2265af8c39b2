"""
Symmetric Orbit Polynomials Orbits Package

This package contains the orbit-closure side of the project:
- Symmetric pair descriptors
- Weak-order graphs and Hasse diagram export
- Upsilon and Upsilon^K representatives
- Equivariant localization checks
- Verification suites
"""

__version__ = "1.0.0"
__author__ = "Symmetric Orbit Polynomials Team"
