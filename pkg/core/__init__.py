"""
Symmetric Orbit Polynomials Core Package

This package contains the algebra the orbit computations run on:
- Permutations, reduced words and weak actions
- Exact sparse polynomials and operators
- Schubert, Grothendieck and double Schubert bases
- Borel quotient ring normal forms
- Error handling, report models and output formatting
"""

__version__ = "1.0.0"
__author__ = "Symmetric Orbit Polynomials Team"
