"""
Divided Difference and Demazure Operators

Operators on the x-block of a Polynomial:

- divided_difference:       d_i(f) = (f - s_i f) / (x_i - x_{i+1})
- half_divided_difference:  (1/2) d_i(f)
- demazure:                 D_i(f) = -d_i(x_{i+1} f)

Division is exact and done monomial by monomial: x_i^p x_{i+1}^q maps to
(x_i x_{i+1})^min(p,q) times a complete homogeneous sum of degree |p-q|-1,
with sign +1 if p > q and -1 if p < q. No polynomial long division is needed.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Sequence

from config.settings import AppConfig
from core.error_handler import create_input_error
from core.polynomial import Coefficient, Monomial, Polynomial, _normalize, _trim

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)

Operator = Callable[[int, Polynomial], Polynomial]


def _check_index(i: int):
    if not isinstance(i, int) or i < 1:
        raise create_input_error(f"operator index must be a positive integer, got {i!r}")


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """d_i(f) = (f - s_i f)/(x_i - x_{i+1}), exact"""
    _check_index(i)
    terms: Dict[Monomial, Coefficient] = {}
    for monomial, c in f.items():
        xs = list(monomial.x) + [0] * max(0, i + 1 - len(monomial.x))
        p, q = xs[i - 1], xs[i]
        if p == q:
            continue
        low, gap = min(p, q), abs(p - q)
        sign = 1 if p > q else -1
        for k in range(gap):
            xs[i - 1] = low + gap - 1 - k
            xs[i] = low + k
            key = Monomial(_trim(xs), monomial.y)
            terms[key] = terms.get(key, 0) + sign * c
    return Polynomial._raw({m: _normalize(c) for m, c in terms.items() if c})


def half_divided_difference(i: int, f: Polynomial) -> Polynomial:
    """(1/2) d_i(f), used along dashed edges"""
    return divided_difference(i, f).scale(Fraction(1, 2))


def demazure(i: int, f: Polynomial) -> Polynomial:
    """D_i(f) = (x_{i+1} f - x_i s_i f)/(x_{i+1} - x_i) = -d_i(x_{i+1} f)"""
    _check_index(i)
    return -divided_difference(i, Polynomial.x(i + 1) * f)


def apply_sequence(operator: Operator, word: Sequence[int], f: Polynomial) -> Polynomial:
    """
    Apply op_{i1} op_{i2} ... op_{il} to f

    The rightmost index is applied first.

    Args:
        operator: One of the operator functions of this module
        word: Indices [i1, ..., il]
        f: Input polynomial

    Returns:
        The composed image of f
    """
    result = f
    for i in reversed(list(word)):
        result = operator(i, result)
        if result.is_zero():
            break
    return result


def is_symmetric_in(i: int, f: Polynomial) -> bool:
    """True iff s_i f = f"""
    return f.swap_x(i) == f
