"""
Equivariant Localization Checks

Restricts polynomial classes to the torus fixed points w in S_m and compares
the closed-orbit representative with the self-intersection product at each
point:

- w mirrored:     restriction = prod_{chi in S(w)} (1 - e^{-chi})
- w not mirrored: restriction = 0

Characters of the torus S of K are stored additively: a weight is an integer
vector over Y_1..Y_r and e^lambda * e^mu = e^(lambda + mu).
"""

import logging
from collections import Counter
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from config.settings import AppConfig
from core.error_handler import create_input_error, create_verification_error
from core.permutations import Permutation, all_permutations, format_permutation, mirrored, to_signed
from core.polynomial import Coefficient, Polynomial, _normalize
from core.reports import LocalizationReport
from orbits.pairs import PairKind, SymmetricPair, Theory
from orbits.upsilon import closed_orbit_upsilon_k, orbit_values

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(p + q for p, q in zip(a, b))


def _negate(a: Weight) -> Weight:
    return tuple(-p for p in a)


def _unit(rank: int, index: int, sign: int = 1) -> Weight:
    return tuple(sign if k == index else 0 for k in range(1, rank + 1))


def format_weight(weight: Weight) -> str:
    """'Y1-Y2', '-2*Y1', '0'"""
    pieces = []
    for index, c in enumerate(weight, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        body = f"Y{index}" if abs(c) == 1 else f"{abs(c)}*Y{index}"
        pieces.append(f"{sign}{body}")
    if not pieces:
        return "0"
    text = "".join(pieces)
    return text[1:] if text.startswith("+") else text


class LaurentCharacter:
    """
    Element of the character ring R(S): a finite sum of c * e^weight
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Optional[Mapping[Weight, Coefficient]] = None):
        self.rank = rank
        self.terms: Dict[Weight, Coefficient] = {}
        for weight, c in (terms or {}).items():
            if len(weight) != rank:
                raise create_input_error(f"weight {weight} does not have rank {rank}")
            if c:
                self.terms[weight] = _normalize(c)

    @classmethod
    def one(cls, rank: int) -> "LaurentCharacter":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def exponential(cls, weight: Weight) -> "LaurentCharacter":
        return cls(len(weight), {tuple(weight): 1})

    @classmethod
    def one_minus(cls, weight: Weight) -> "LaurentCharacter":
        """1 - e^weight"""
        return cls.one(len(weight)) - cls.exponential(weight)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        terms = dict(self.terms)
        for weight, c in other.terms.items():
            terms[weight] = terms.get(weight, 0) + c
        return LaurentCharacter(self.rank, terms)

    def __neg__(self) -> "LaurentCharacter":
        return LaurentCharacter(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        return self + (-other)

    def __mul__(self, other: "LaurentCharacter") -> "LaurentCharacter":
        terms: Dict[Weight, Coefficient] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                key = _add(wa, wb)
                terms[key] = terms.get(key, 0) + ca * cb
        return LaurentCharacter(self.rank, terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentCharacter) and self.rank == other.rank and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for weight in sorted(self.terms, reverse=True):
            c = self.terms[weight]
            body = "1" if not any(weight) else f"e^({format_weight(weight)})"
            magnitude = abs(c)
            text = body if magnitude == 1 else (f"{magnitude}" if body == "1" else f"{magnitude}*{body}")
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(f" {'+' if c > 0 else '-'} {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentCharacter({str(self)!r})"


class WeightMultiset:
    """Multiset of weights, e.g. S(w)"""

    def __init__(self, weights: Iterable[Weight] = ()):
        self.weights: Counter = Counter(tuple(w) for w in weights)

    def remove_once(self, weight: Weight):
        if self.weights[weight] < 1:
            raise create_verification_error(f"weight {format_weight(weight)} is missing from the multiset",
                                            {"weight": format_weight(weight)})
        self.weights[weight] -= 1
        if not self.weights[weight]:
            del self.weights[weight]

    def __len__(self) -> int:
        return sum(self.weights.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightMultiset) and self.weights == other.weights

    def elements(self) -> List[Weight]:
        return sorted(self.weights.elements())

    def self_intersection(self, rank: int) -> LaurentCharacter:
        """prod_{chi} (1 - e^{-chi})"""
        result = LaurentCharacter.one(rank)
        for weight in self.elements():
            result = result * LaurentCharacter.one_minus(_negate(weight))
        return result

    def __repr__(self) -> str:
        return f"WeightMultiset({[format_weight(w) for w in self.elements()]})"


def rho(pair: SymmetricPair, i: int) -> Weight:
    """
    Weight of rho(e^{X_i}) in R(S)

    Y_i for i <= r, trivial for the middle index of an odd ambient size,
    -Y_{m+1-i} otherwise; r = floor(m/2).
    """
    m = pair.size
    r = pair.rank
    if not 1 <= i <= m:
        raise create_input_error(f"index {i} out of range for ambient size {m}")
    if i <= r:
        return _unit(r, i)
    if m % 2 and i == r + 1:
        return (0,) * r
    return _unit(r, m + 1 - i, -1)


def restrict_class(pair: SymmetricPair, f: Polynomial, w: Permutation) -> LaurentCharacter:
    """
    Restriction of the class of f to the fixed point w

    x^a maps to e^{sum_i a_i rho(X_{w(i)})}; y_j maps to e^{Y_j}.

    Args:
        pair: Symmetric pair fixing the ambient size and torus rank
        f: Polynomial in x1..xm (and y1..yr)
        w: Fixed point in S_m

    Returns:
        The restricted character
    """
    if w.size != pair.size:
        raise create_input_error(f"fixed point {w.one_line()} is not in S_{pair.size}")
    if f.num_x_variables() > pair.size or f.num_y_variables() > pair.rank:
        raise create_input_error(f"{f} uses variables beyond the ambient size {pair.size}")
    r = pair.rank
    images = [rho(pair, w(i)) for i in range(1, pair.size + 1)]
    terms: Dict[Weight, Coefficient] = {}
    for monomial, c in f.items():
        weight = (0,) * r
        for index, e in enumerate(monomial.x):
            if e:
                weight = _add(weight, tuple(e * v for v in images[index]))
        for index, e in enumerate(monomial.y, start=1):
            if e:
                weight = _add(weight, _unit(r, index, e))
        terms[weight] = terms.get(weight, 0) + c
    return LaurentCharacter(r, terms)


def k_roots(pair: SymmetricPair) -> List[Weight]:
    """
    Weights of the closed orbit's own tangent directions at the identity

    -Y_i +- Y_j (i < j) always; -2Y_i for the symplectic pair; -Y_i for an
    odd orthogonal ambient size.
    """
    r = pair.rank
    roots = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            roots.append(_add(_unit(r, i, -1), _unit(r, j)))
            roots.append(_add(_unit(r, i, -1), _unit(r, j, -1)))
    for i in range(1, r + 1):
        if pair.is_symplectic:
            roots.append(_unit(r, i, -2))
        elif pair.size % 2:
            roots.append(_unit(r, i, -1))
    return roots


def closed_orbit_weights(pair: SymmetricPair, w: Permutation) -> WeightMultiset:
    """
    S(w): the weights rho(w Phi+) with the closed orbit's tangent weights removed once

    Args:
        pair: Symmetric pair
        w: Mirrored permutation of S_m

    Returns:
        WeightMultiset
    """
    if not mirrored(w, pair.size):
        raise create_input_error(f"{w.one_line()} is not mirrored")
    sigma = to_signed(w)
    weights = WeightMultiset(
        _add(_negate(rho(pair, w(i))), rho(pair, w(j)))
        for i in range(1, pair.size + 1) for j in range(i + 1, pair.size + 1)
    )
    for root in k_roots(pair):
        weights.remove_once(sigma.act_on_weight(root))
    return weights


def expected_weight_count(pair: SymmetricPair) -> int:
    """|S(w)|, the same for every mirrored w"""
    r = pair.rank
    pairs = r * (r - 1)
    if pair.is_symplectic:
        return pairs
    return pairs + (2 * r if pair.size % 2 else r)


def check_equivariance(pair: SymmetricPair) -> int:
    """
    rho(w(e^{X_i})) = sigma_w(rho(e^{X_i})) for every mirrored w and every i

    Returns:
        Number of (w, i) checks
    """
    checks = 0
    for w in all_permutations(pair.size):
        if not mirrored(w):
            continue
        sigma = to_signed(w)
        for i in range(1, pair.size + 1):
            if rho(pair, w(i)) != sigma.act_on_weight(rho(pair, i)):
                raise create_verification_error(
                    f"rho does not intertwine {w.one_line()} at X_{i}",
                    {"permutation": w.one_line(), "index": i},
                )
            checks += 1
    return checks


def verify_closed_orbit(pair: SymmetricPair) -> LocalizationReport:
    """
    Check the closed-orbit K-representative at every torus fixed point

    Mirrored points must restrict to the self-intersection product of S(w);
    every other point must restrict to 0. Failures are collected, not raised.
    """
    upsilon_k = closed_orbit_upsilon_k(pair)
    report = LocalizationReport(pair=pair.kind.value, size=pair.size)
    expected_count = expected_weight_count(pair)
    for w in all_permutations(pair.size):
        report.checked += 1
        restriction = restrict_class(pair, upsilon_k, w)
        if mirrored(w):
            try:
                weights = closed_orbit_weights(pair, w)
            except Exception as e:
                report.failures.append({"point": w.one_line(), "reason": str(e)})
                continue
            if len(weights) != expected_count:
                report.failures.append({"point": w.one_line(),
                                        "reason": f"|S(w)| = {len(weights)}, expected {expected_count}"})
                continue
            expected = weights.self_intersection(pair.rank)
            if restriction == expected and not restriction.is_zero():
                report.mirrored_pass += 1
            else:
                report.failures.append({"point": w.one_line(), "restriction": str(restriction),
                                        "expected": str(expected)})
        elif restriction.is_zero():
            report.vanishing_pass += 1
        else:
            report.failures.append({"point": w.one_line(), "restriction": str(restriction),
                                    "expected": "0"})
    level = logging.INFO if report.passed else logging.WARNING
    logger.log(level, f"Localization {pair.label}: {report.checked} points, {len(report.failures)} failures")
    return report


def restriction_vector(pair: SymmetricPair, f: Polynomial) -> Tuple[LaurentCharacter, ...]:
    return tuple(restrict_class(pair, f, w) for w in all_permutations(pair.size))


def check_separation(pair: SymmetricPair) -> int:
    """
    Distinct symplectic orbits have distinct restriction vectors of Upsilon^K

    Returns:
        Number of orbits compared
    """
    if pair.kind != PairKind.SYMPLECTIC:
        raise create_input_error("separation is checked for the symplectic pair only")
    seen: Dict[Tuple[LaurentCharacter, ...], Permutation] = {}
    values = orbit_values(pair, Theory.KTHEORY)
    for pi, value in values.items():
        vector = restriction_vector(pair, value)
        if vector in seen:
            raise create_verification_error(
                f"{format_permutation(pi)} and {format_permutation(seen[vector])} restrict identically",
                {"first": format_permutation(seen[vector]), "second": format_permutation(pi)},
            )
        seen[vector] = pi
    return len(seen)
