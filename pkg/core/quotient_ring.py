"""
Borel Presentation Quotient Rings

Normal forms in Z[x1..xm]/I for two ideals:

- cohomology: I generated by e_d(x), d = 1..m
- K-theory:   I generated by e_d(x) - C(m, d), d = 1..m

Both ideals satisfy prod_j (1 + x_j t) = P(t) modulo I, with P(t) = 1 or
(1 + t)^m. Comparing coefficients of t^{m-i+1} in
prod_{j>i}(1 + x_j t) = P(t) / prod_{j<=i}(1 + x_j t) gives the relations

    r_i = sum_{k=0}^{D} p_k (-1)^{D-k} h_{D-k}(x1..xi),   D = m-i+1,

whose lex leading monomial (x_m > ... > x_1) is x_i^D. The leading monomials
are pairwise coprime, so rewriting x_i^D with r_i yields unique normal forms
supported on the standard monomials x^a, a_i <= m-i.
"""

import logging
from enum import Enum
from itertools import combinations, combinations_with_replacement, product
from math import comb, factorial
from typing import Dict, List, Tuple

from config.settings import AppConfig
from core.error_handler import create_input_error, create_verification_error
from core.polynomial import Coefficient, Monomial, Polynomial, _normalize, _trim

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class RingFlavor(Enum):
    """Which Borel ideal to quotient by"""
    COHOMOLOGY = "cohomology"
    KTHEORY = "ktheory"


def elementary_symmetric(d: int, variables: int) -> Polynomial:
    """e_d(x1..x_variables)"""
    return Polynomial({
        Monomial.of([1 if k in chosen else 0 for k in range(variables)]): 1
        for chosen in combinations(range(variables), d)
    })


def complete_homogeneous(d: int, variables: int) -> Polynomial:
    """h_d(x1..x_variables)"""
    terms: Dict[Monomial, Coefficient] = {}
    for chosen in combinations_with_replacement(range(variables), d):
        exponents = [0] * variables
        for k in chosen:
            exponents[k] += 1
        terms[Monomial.of(exponents)] = 1
    return Polynomial(terms)


class QuotientRing:
    """
    Normal-form engine for Z[x1..xm]/I
    """

    def __init__(self, m: int, flavor: RingFlavor = RingFlavor.COHOMOLOGY):
        """
        Build the reducer family and sanity check it

        Args:
            m: Number of variables
            flavor: Cohomology or K-theory ideal
        """
        if m < 1:
            raise create_input_error(f"quotient ring needs at least one variable, got m={m}")
        self.m = m
        self.flavor = flavor
        if flavor == RingFlavor.COHOMOLOGY:
            self.target_series: List[int] = [1] + [0] * m
        else:
            self.target_series = [comb(m, k) for k in range(m + 1)]
        self.reducers: List[Polynomial] = [self._reducer(i) for i in range(1, m + 1)]
        # x_i^D -> tail_i, with tail_i = x_i^D - r_i
        self._tails: List[List[Tuple[Tuple[int, ...], Coefficient]]] = []
        for i, reducer in enumerate(self.reducers, start=1):
            lead = Monomial.of([0] * (i - 1) + [m - i + 1])
            if reducer.coefficient(lead) != 1:
                raise create_verification_error(f"reducer r_{i} is not monic in x_{i}^{m - i + 1}")
            tail = Polynomial.monomial(lead.x) - reducer
            self._tails.append([(mono.x, c) for mono, c in tail.items()])
        self.verify_generators()
        logger.info(f"QuotientRing m={m} ({flavor.value}) ready")

    def _reducer(self, i: int) -> Polynomial:
        degree = self.m - i + 1
        relation = Polynomial.zero()
        for k in range(degree + 1):
            p_k = self.target_series[k]
            if p_k:
                sign = -1 if (degree - k) % 2 else 1
                relation = relation + complete_homogeneous(degree - k, i).scale(sign * p_k)
        # leading coefficient is (-1)^D; normalize to 1
        return relation.scale(-1 if degree % 2 else 1)

    def generators(self) -> List[Polynomial]:
        """e_d(x) - p_d, d = 1..m"""
        return [elementary_symmetric(d, self.m) - self.target_series[d] for d in range(1, self.m + 1)]

    def verify_generators(self):
        """Every ideal generator must reduce to 0"""
        for d, generator in enumerate(self.generators(), start=1):
            if not self.normal_form(generator).is_zero():
                raise create_verification_error(
                    f"generator e_{d} - {self.target_series[d]} does not reduce to 0 "
                    f"(m={self.m}, {self.flavor.value})",
                    {"generator": str(generator)},
                )

    def is_standard(self, exponents: Tuple[int, ...]) -> bool:
        return all(e <= self.m - i for i, e in enumerate(exponents, start=1))

    def standard_monomials(self) -> List[Monomial]:
        """{x^a : a_i <= m-i}; there are m! of them"""
        ranges = [range(self.m - i + 1) for i in range(1, self.m + 1)]
        monomials = [Monomial.of(a) for a in product(*ranges)]
        if len(monomials) != factorial(self.m):
            raise create_verification_error(
                f"expected {factorial(self.m)} standard monomials for m={self.m}, found {len(monomials)}"
            )
        return monomials

    def normal_form(self, f: Polynomial) -> Polynomial:
        """
        Unique representative of f supported on standard monomials

        Args:
            f: Polynomial in x1..xm (no y-variables)

        Returns:
            Reduced polynomial
        """
        if f.has_y():
            raise create_input_error("normal_form works on x-variables only")
        if f.num_x_variables() > self.m:
            raise create_input_error(f"{f} uses variables beyond x{self.m}")
        pending: Dict[Tuple[int, ...], Coefficient] = {m.x: c for m, c in f.items()}
        reduced: Dict[Tuple[int, ...], Coefficient] = {}
        while pending:
            exponents, c = pending.popitem()
            if not c:
                continue
            index = next((i for i, e in enumerate(exponents, start=1) if e > self.m - i), None)
            if index is None:
                reduced[exponents] = reduced.get(exponents, 0) + c
                continue
            padded = list(exponents) + [0] * (self.m - len(exponents))
            padded[index - 1] -= self.m - index + 1
            for tail_exponents, tail_c in self._tails[index - 1]:
                new = list(padded)
                for k, e in enumerate(tail_exponents):
                    new[k] += e
                key = _trim(new)
                pending[key] = pending.get(key, 0) + c * tail_c
        return Polynomial({Monomial(x, ()): _normalize(c) for x, c in reduced.items() if c})

    def equal_mod(self, f: Polynomial, g: Polynomial) -> bool:
        """normal_form(f) == normal_form(g)"""
        return self.normal_form(f - g).is_zero()

    def __repr__(self) -> str:
        return f"QuotientRing(m={self.m}, flavor={self.flavor.value})"
