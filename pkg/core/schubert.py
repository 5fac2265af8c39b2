"""
Schubert, Grothendieck and Double Schubert Polynomials

This module generates the three polynomial families by operator recursion
from the longest element and expands polynomials of L_n in these bases:

- expand_schubert:        c_w = constant term of d_w f
- expand_grothendieck:    triangular elimination in x -> 1-x, led by Lehmer codes
- kirillov_double_expand: single expansion composed with
                          S_w(x) = sum over length-additive u.v = w of S_u(y) S_v(x;y)

Basis polynomials are memoized per permutation; the caches are guarded by
locks so concurrent readers are safe and repeated writes are idempotent.
"""

import logging
import threading
from enum import Enum
from typing import Dict, List, Mapping, Optional

from cachetools import LRUCache, cached

from config.settings import AppConfig
from core.error_handler import create_input_error, create_membership_error, create_verification_error
from core.operators import demazure, divided_difference
from core.permutations import Permutation, all_permutations, compose, lehmer_code, length, reduced_word
from core.polynomial import Polynomial

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class BasisKind(Enum):
    """Polynomial bases an expansion can be taken in"""
    SCHUBERT = "schubert"
    GROTHENDIECK = "grothendieck"
    DOUBLE_SCHUBERT = "double-schubert"


_BASIS_SYMBOL = {
    BasisKind.SCHUBERT: "S[{}]",
    BasisKind.GROTHENDIECK: "G[{}]",
    BasisKind.DOUBLE_SCHUBERT: "S[{}](x;y)",
}


def _first_ascent(w: Permutation) -> Optional[int]:
    return next((i for i in range(1, w.size) if w(i) < w(i + 1)), None)


def _staircase(n: int) -> Polynomial:
    return Polynomial.monomial([n - i for i in range(1, n)])


@cached(cache=LRUCache(maxsize=AppConfig.BASIS_CACHE_SIZE), lock=threading.RLock())
def schubert(w: Permutation) -> Polynomial:
    """
    Schubert polynomial of w in S_n

    S_{w0} = x1^{n-1} x2^{n-2} ... x_{n-1}; S_w = d_i S_{w s_i} for an ascent i of w.
    """
    ascent = _first_ascent(w)
    if ascent is None:
        return _staircase(w.size)
    return divided_difference(ascent, schubert(w.right_multiply(ascent)))


@cached(cache=LRUCache(maxsize=AppConfig.BASIS_CACHE_SIZE), lock=threading.RLock())
def grothendieck(w: Permutation) -> Polynomial:
    """
    Grothendieck polynomial of w in S_n

    G_{w0} = prod_i (1 - x_i)^{n-i}; G_w = D_i G_{w s_i} for an ascent i of w.
    """
    ascent = _first_ascent(w)
    if ascent is None:
        n = w.size
        return Polynomial.product((1 - Polynomial.x(i)) ** (n - i) for i in range(1, n))
    return demazure(ascent, grothendieck(w.right_multiply(ascent)))


@cached(cache=LRUCache(maxsize=AppConfig.BASIS_CACHE_SIZE), lock=threading.RLock())
def double_schubert(w: Permutation) -> Polynomial:
    """
    Double Schubert polynomial S_w(x;y)

    S_{w0}(x;y) = prod_{i+j<=n} (x_i - y_j); recursion by d_i acting on x.
    """
    ascent = _first_ascent(w)
    if ascent is None:
        n = w.size
        return Polynomial.product(Polynomial.x(i) - Polynomial.y(j)
                                  for i in range(1, n) for j in range(1, n + 1 - i))
    return divided_difference(ascent, double_schubert(w.right_multiply(ascent)))


def generate_along_word(w: Permutation, kind: BasisKind, word: List[int]) -> Polynomial:
    """
    Recompute a basis polynomial from the top along a chosen reduced word of w^{-1} w0

    Used to confirm independence of the descent choices.
    """
    n = w.size
    top = {
        BasisKind.SCHUBERT: schubert,
        BasisKind.GROTHENDIECK: grothendieck,
        BasisKind.DOUBLE_SCHUBERT: double_schubert,
    }[kind](Permutation.longest(n))
    operator = demazure if kind == BasisKind.GROTHENDIECK else divided_difference
    current = Permutation.longest(n)
    value = top
    for i in word:
        if current(i) < current(i + 1):
            raise create_input_error(f"{i} is not a descent of {current.one_line()}")
        current = current.right_multiply(i)
        value = operator(i, value)
    if current != w:
        raise create_input_error(f"word {word} does not lead from w0 to {w.one_line()}")
    return value


class BasisExpansion:
    """Coefficients c_w of a polynomial in a permutation-indexed basis"""

    def __init__(self, kind: BasisKind, n: int, entries: Optional[Mapping[Permutation, Polynomial]] = None):
        self.kind = kind
        self.n = n
        self.entries: Dict[Permutation, Polynomial] = {
            w: c for w, c in (entries or {}).items() if not c.is_zero()
        }

    def add(self, w: Permutation, c: Polynomial):
        total = self.entries.get(w, Polynomial.zero()) + c
        if total.is_zero():
            self.entries.pop(w, None)
        else:
            self.entries[w] = total

    def coefficient(self, w: Permutation) -> Polynomial:
        return self.entries.get(w, Polynomial.zero())

    def ordered(self) -> List[Permutation]:
        """Permutations in graded order: by length, then one-line notation"""
        return sorted(self.entries, key=lambda w: (length(w), w.images))

    def basis_polynomial(self, w: Permutation) -> Polynomial:
        if self.kind == BasisKind.SCHUBERT:
            return schubert(w)
        if self.kind == BasisKind.GROTHENDIECK:
            return grothendieck(w)
        return double_schubert(w)

    def reconstruct(self) -> Polynomial:
        """sum_w c_w * basis_w"""
        total = Polynomial.zero()
        for w in self.ordered():
            total = total + self.entries[w] * self.basis_polynomial(w)
        return total

    def is_nonnegative_integral(self) -> bool:
        return all(c.is_nonnegative_integral() for c in self.entries.values())

    def specialize_y(self, assignments) -> "BasisExpansion":
        return BasisExpansion(self.kind, self.n,
                              {w: c.specialize_y(assignments) for w, c in self.entries.items()})

    def as_dict(self) -> Dict[str, str]:
        return {w.one_line(): str(self.entries[w]) for w in self.ordered()}

    def format_lines(self) -> List[str]:
        """'c_w * S[w]' lines in graded order of w"""
        lines = []
        symbol = _BASIS_SYMBOL[self.kind]
        for w in self.ordered():
            c = self.entries[w]
            text = str(c)
            if len(c) > 1:
                text = f"({text})"
            lines.append(f"{text} * {symbol.format(w.one_line())}")
        return lines or ["0"]

    def __eq__(self, other) -> bool:
        return (isinstance(other, BasisExpansion) and self.kind == other.kind
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"BasisExpansion({self.kind.value}, n={self.n}, {self.as_dict()})"


def _check_membership(f: Polynomial, n: int):
    if f.has_y():
        raise create_membership_error("expansion input must be free of y-variables", n)
    if not f.in_schubert_span(n):
        raise create_membership_error(f"{f} does not lie in L_{n}", n)


def expand_schubert(f: Polynomial, n: int, verify: Optional[bool] = None) -> BasisExpansion:
    """
    Expand f in the Schubert basis of L_n

    For every w in S_n, c_w is the constant term of d_w f where d_w applies a reduced
    word of w with its last letter innermost. Values d_u f are shared across words by
    building u = s_k u' one left factor at a time.

    Args:
        f: Polynomial in L_n
        n: Size of the symmetric group
        verify: Assert exact reconstruction (defaults to AppConfig.VERIFY_EXPANSIONS)

    Returns:
        The Schubert expansion of f
    """
    _check_membership(f, n)
    expansion = BasisExpansion(BasisKind.SCHUBERT, n)
    level: Dict[Permutation, Polynomial] = {Permutation.identity(n): f} if not f.is_zero() else {}
    while level:
        next_level: Dict[Permutation, Polynomial] = {}
        for u, value in level.items():
            constant = value.constant_term()
            if constant:
                expansion.add(u, Polynomial.constant(constant))
            if value.is_constant():
                continue
            for k in range(1, n):
                if not u.is_left_ascent(k):
                    continue
                longer = u.left_multiply(k)
                if longer in next_level:
                    continue
                image = divided_difference(k, value)
                if not image.is_zero():
                    next_level[longer] = image
        level = next_level
    if AppConfig.VERIFY_EXPANSIONS if verify is None else verify:
        _assert_reconstruction(expansion, f)
    logger.debug(f"Schubert expansion of degree-{f.degree()} polynomial: {len(expansion.entries)} terms")
    return expansion


def _revlex_key(exponents, n: int):
    padded = tuple(exponents) + (0,) * (n - len(exponents))
    return tuple(reversed(padded))


def expand_grothendieck(f: Polynomial, n: int, verify: Optional[bool] = None) -> BasisExpansion:
    """
    Expand f in the Grothendieck basis G_w, w in S_n

    Works with g = f(1-x). G_w(1-x) has lowest degree part S_w, whose leading
    monomial in reverse lexicographic order is x^code(w). Each step reads w off
    the leading monomial of the lowest degree part of g by its Lehmer code and
    subtracts the matching multiple of G_w(1-x); every w is visited at most once.
    """
    _check_membership(f, n)
    expansion = BasisExpansion(BasisKind.GROTHENDIECK, n)
    by_code = {lehmer_code(w): w for w in all_permutations(n)}
    g = f.substitute_one_minus_x()
    for _ in range(len(by_code) + 1):
        if g.is_zero():
            break
        monomial, c = max(g.lowest_degree_part().items(), key=lambda item: _revlex_key(item[0].x, n))
        w = by_code.get(tuple(monomial.x) + (0,) * (n - len(monomial.x)))
        if w is None:
            raise create_membership_error(f"leading monomial {monomial.render()} is not a Lehmer code of S_{n}", n)
        coefficient = Polynomial.constant(c)
        if not coefficient.is_integral():
            raise create_verification_error(
                f"non-integral Grothendieck coefficient {c} at {w.one_line()}",
                {"polynomial": str(f), "permutation": w.one_line(), "coefficient": str(c)},
            )
        expansion.add(w, coefficient)
        g = g - grothendieck(w).substitute_one_minus_x().scale(c)
    else:
        if not g.is_zero():
            raise create_verification_error(
                f"Grothendieck elimination did not terminate for {f}", {"remainder": str(g)}
            )
    if AppConfig.VERIFY_EXPANSIONS if verify is None else verify:
        _assert_reconstruction(expansion, f)
    return expansion


def kirillov_double_expand(f: Polynomial, n: int, verify: Optional[bool] = None) -> BasisExpansion:
    """
    Expand f in double Schubert polynomials with coefficients in y

    Each c_w S_w(x) contributes c_w S_u(y) to the coefficient of S_v(x;y)
    for every factorization w = u.v with l(u) + l(v) = l(w).
    """
    single = expand_schubert(f, n, verify=verify)
    expansion = BasisExpansion(BasisKind.DOUBLE_SCHUBERT, n)
    group = all_permutations(n)
    for w, c in single.entries.items():
        for v, u in length_additive_factorizations(w, group):
            expansion.add(v, c * schubert(u).x_to_y())
    if AppConfig.VERIFY_EXPANSIONS if verify is None else verify:
        _assert_reconstruction(expansion, f)
    return expansion


def length_additive_factorizations(w: Permutation, group: Optional[List[Permutation]] = None):
    """
    Pairs (v, u) with u o v = w and l(u) + l(v) = l(w)

    Args:
        w: Permutation to factor
        group: Elements of S_n to search (all of S_n by default)

    Returns:
        List of (v, u) pairs
    """
    group = group if group is not None else all_permutations(w.size)
    target = length(w)
    pairs = []
    for v in group:
        lv = length(v)
        if lv > target:
            continue
        u = compose(w, v.inverse())
        if length(u) + lv == target:
            pairs.append((v, u))
    return pairs


def _assert_reconstruction(expansion: BasisExpansion, f: Polynomial):
    rebuilt = expansion.reconstruct()
    if rebuilt != f:
        raise create_verification_error(
            f"{expansion.kind.value} expansion does not reconstruct its input",
            {"input": str(f), "reconstruction": str(rebuilt)},
        )


def descent_independence_words(w: Permutation) -> List[List[int]]:
    """Two reduced words of w0 w, each leading from w0 down to w under right multiplication"""
    n = w.size
    gap = compose(Permutation.longest(n), w)
    canonical = reduced_word(gap)
    alternative = list(reversed(reduced_word(gap.inverse())))
    return [canonical, alternative]
