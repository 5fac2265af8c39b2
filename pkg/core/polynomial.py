"""
Exact Sparse Multivariate Polynomials

This module provides exact polynomial arithmetic in an x-block x1, x2, ...
and an optional y-block y1, y2, ... over the rationals. Coefficients are
kept as Python ints whenever they are integral and as Fractions otherwise,
so half divided differences never lose precision.

Terms print in graded lexicographic order (x1 > x2 > ..., x-block before
y-block), e.g. "4*x1^3*x2 + 4*x1^2*x2^2 + 4*x1^2*x2*x3 + 4*x1*x2^2*x3".
"""

import logging
import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from config.settings import AppConfig
from core.error_handler import create_input_error, create_parse_error

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]

_VARIABLE_PATTERN = re.compile(r"^([xy])([1-9]\d*)$")


def _trim(exponents: Iterable[int]) -> Tuple[int, ...]:
    exponents = list(exponents)
    while exponents and exponents[-1] == 0:
        exponents.pop()
    return tuple(exponents)


def _normalize(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Monomial(NamedTuple):
    """x^a y^b with trailing zero exponents removed from both blocks"""
    x: Tuple[int, ...] = ()
    y: Tuple[int, ...] = ()

    @classmethod
    def of(cls, x: Iterable[int] = (), y: Iterable[int] = ()) -> "Monomial":
        x, y = _trim(x), _trim(y)
        if any(e < 0 for e in x + y):
            raise create_input_error("monomial exponents must be nonnegative")
        return cls(x, y)

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(_add_exponents(self.x, other.x), _add_exponents(self.y, other.y))

    def render(self) -> str:
        factors = []
        for block, exponents in (("x", self.x), ("y", self.y)):
            for index, e in enumerate(exponents, start=1):
                if e == 1:
                    factors.append(f"{block}{index}")
                elif e > 1:
                    factors.append(f"{block}{index}^{e}")
        return "*".join(factors)


def _add_exponents(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple(e + (b[k] if k < len(b) else 0) for k, e in enumerate(a))


ONE = Monomial((), ())


class Polynomial:
    """
    Immutable polynomial: a finite map Monomial -> nonzero rational coefficient
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None):
        cleaned: Dict[Monomial, Coefficient] = {}
        for monomial, c in (terms or {}).items():
            if not isinstance(monomial, Monomial):
                monomial = Monomial.of(*monomial)
            c = _normalize(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
            if c:
                cleaned[monomial] = _normalize(cleaned.get(monomial, 0) + c)
                if not cleaned[monomial]:
                    del cleaned[monomial]
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coefficient]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, c: Coefficient) -> "Polynomial":
        c = _normalize(c)
        return cls._raw({ONE: c} if c else {})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def x(cls, i: int) -> "Polynomial":
        if i < 1:
            raise create_input_error(f"x{i} is not a variable")
        return cls._raw({Monomial.of([0] * (i - 1) + [1]): 1})

    @classmethod
    def y(cls, j: int) -> "Polynomial":
        if j < 1:
            raise create_input_error(f"y{j} is not a variable")
        return cls._raw({Monomial.of((), [0] * (j - 1) + [1]): 1})

    @classmethod
    def monomial(cls, x: Iterable[int] = (), y: Iterable[int] = (), coefficient: Coefficient = 1) -> "Polynomial":
        return cls({Monomial.of(x, y): coefficient})

    @classmethod
    def product(cls, factors: Iterable["Polynomial"]) -> "Polynomial":
        result = cls.one()
        for factor in factors:
            result = result * factor
        return result

    # Accessors

    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        return self._terms.get(monomial, 0)

    def constant_term(self) -> Coefficient:
        return self._terms.get(ONE, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial"""
        return max((m.degree for m in self._terms), default=-1)

    def num_x_variables(self) -> int:
        return max((len(m.x) for m in self._terms), default=0)

    def num_y_variables(self) -> int:
        return max((len(m.y) for m in self._terms), default=0)

    def has_y(self) -> bool:
        return any(m.y for m in self._terms)

    def is_constant(self) -> bool:
        return all(m == ONE for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self._terms}) <= 1

    # Arithmetic

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, c in other._terms.items():
            value = _normalize(terms.get(monomial, 0) + c)
            if value:
                terms[monomial] = value
            else:
                terms.pop(monomial, None)
        return Polynomial._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms: Dict[Monomial, Coefficient] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = m1.times(m2)
                terms[monomial] = terms.get(monomial, 0) + c1 * c2
        return Polynomial._raw({m: _normalize(c) for m, c in terms.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Coefficient) -> "Polynomial":
        c = _normalize(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({m: _normalize(v * c) for m, v in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Structural operations

    def sorted_terms(self) -> List[Tuple[Monomial, Coefficient]]:
        """Terms in graded lexicographic order, x1 > x2 > ..., x-block before y-block"""
        width_x = self.num_x_variables()
        width_y = self.num_y_variables()

        def key(item):
            m = item[0]
            xs = m.x + (0,) * (width_x - len(m.x))
            ys = m.y + (0,) * (width_y - len(m.y))
            return (-m.degree, tuple(-e for e in xs), tuple(-e for e in ys))

        return sorted(self._terms.items(), key=key)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self._terms.items() if m.degree == d})

    def lowest_degree_part(self) -> "Polynomial":
        """Homogeneous component of minimal total degree"""
        if self.is_zero():
            raise create_input_error("the zero polynomial has no lowest degree part")
        low = min(m.degree for m in self._terms)
        return self.homogeneous_component(low)

    def swap_x(self, i: int) -> "Polynomial":
        """s_i(f): exchange x_i and x_{i+1}"""
        terms: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            xs = list(m.x) + [0] * max(0, i + 1 - len(m.x))
            xs[i - 1], xs[i] = xs[i], xs[i - 1]
            terms[Monomial(_trim(xs), m.y)] = c
        return Polynomial._raw(terms)

    def x_to_y(self) -> "Polynomial":
        """Rename x_i to y_i (the polynomial must be y-free)"""
        if self.has_y():
            raise create_input_error("x_to_y expects a y-free polynomial")
        return Polynomial._raw({Monomial((), m.x): c for m, c in self._terms.items()})

    def substitute(self, x_values: Mapping[int, "Polynomial"] = None,
                   y_values: Mapping[int, "Polynomial"] = None) -> "Polynomial":
        """Replace selected variables by polynomials; unspecified variables stay"""
        x_values = x_values or {}
        y_values = y_values or {}
        power_cache: Dict[Tuple[str, int, int], Polynomial] = {}

        def power(block: str, index: int, e: int) -> Polynomial:
            key = (block, index, e)
            if key not in power_cache:
                base = (x_values if block == "x" else y_values)[index]
                power_cache[key] = base ** e
            return power_cache[key]

        result: Dict[Monomial, Coefficient] = {}
        for m, c in self._terms.items():
            kept_x = [e if (k + 1) not in x_values else 0 for k, e in enumerate(m.x)]
            kept_y = [e if (k + 1) not in y_values else 0 for k, e in enumerate(m.y)]
            term = Polynomial._raw({Monomial(_trim(kept_x), _trim(kept_y)): c})
            for k, e in enumerate(m.x):
                if e and (k + 1) in x_values:
                    term = term * power("x", k + 1, e)
            for k, e in enumerate(m.y):
                if e and (k + 1) in y_values:
                    term = term * power("y", k + 1, e)
            for monomial, value in term._terms.items():
                result[monomial] = result.get(monomial, 0) + value
        return Polynomial._raw({m: _normalize(c) for m, c in result.items() if c})

    def substitute_one_minus_x(self) -> "Polynomial":
        """x_i -> 1 - x_i and y_j -> 1 - y_j for every variable present"""
        x_values = {i: 1 - Polynomial.x(i) for i in range(1, self.num_x_variables() + 1)}
        y_values = {j: 1 - Polynomial.y(j) for j in range(1, self.num_y_variables() + 1)}
        return self.substitute(x_values, y_values)

    def specialize_y(self, assignments: Mapping[int, Union["Polynomial", Coefficient]]) -> "Polynomial":
        """
        Substitute y-variables

        Args:
            assignments: y-index -> polynomial (typically a linear form in y) or constant

        Returns:
            Expanded result
        """
        values = {j: v if isinstance(v, Polynomial) else Polynomial.constant(v)
                  for j, v in assignments.items()}
        return self.substitute(y_values=values)

    def drop_y(self) -> "Polynomial":
        """Set every y-variable to 0"""
        return Polynomial._raw({m: c for m, c in self._terms.items() if not m.y})

    # Predicates

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_nonnegative_integral(self) -> bool:
        """True iff every coefficient is a nonnegative integer"""
        return all(isinstance(c, int) and c >= 0 for c in self._terms.values())

    def in_schubert_span(self, n: int) -> bool:
        """Membership in L_n: y-free with every x_i exponent at most n-i"""
        for m in self._terms:
            if m.y or len(m.x) > n:
                return False
            if any(e > n - i for i, e in enumerate(m.x, start=1)):
                return False
        return True

    # Rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for monomial, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            body = monomial.render()
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if not pieces:
                pieces.append(text if sign == "+" else f"-{text}")
            else:
                pieces.append(f" {sign} {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_sympy(self) -> sympy.Expr:
        expr = sympy.Integer(0)
        for m, c in self._terms.items():
            term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
            for index, e in enumerate(m.x, start=1):
                if e:
                    term *= sympy.Symbol(f"x{index}") ** e
            for index, e in enumerate(m.y, start=1):
                if e:
                    term *= sympy.Symbol(f"y{index}") ** e
            expr += term
        return expr


def from_sympy(expr: sympy.Expr, text: str = "") -> Polynomial:
    """Convert a sympy expression in x*/y* symbols with rational coefficients"""
    symbols = sorted(expr.free_symbols, key=lambda s: s.name)
    blocks = []
    for symbol in symbols:
        match = _VARIABLE_PATTERN.match(symbol.name)
        if not match:
            raise create_parse_error(f"unknown variable {symbol.name!r}", text)
        blocks.append((match.group(1), int(match.group(2))))
    expanded = sympy.expand(expr)
    if not symbols:
        if not expanded.is_Rational:
            raise create_parse_error(f"{text!r} is not a rational constant", text)
        return Polynomial.constant(Fraction(int(expanded.p), int(expanded.q)))
    try:
        poly = sympy.Poly(expanded, *symbols)
    except sympy.PolynomialError as e:
        raise create_parse_error(f"{text!r} is not a polynomial: {e}", text)
    terms: Dict[Monomial, Coefficient] = {}
    for exponents, c in poly.terms():
        if not c.is_Rational:
            raise create_parse_error(f"coefficient {c} is not rational", text)
        xs: Dict[int, int] = {}
        ys: Dict[int, int] = {}
        for (block, index), e in zip(blocks, exponents):
            (xs if block == "x" else ys)[index] = int(e)
        x_vec = [xs.get(k, 0) for k in range(1, max(xs, default=0) + 1)]
        y_vec = [ys.get(k, 0) for k in range(1, max(ys, default=0) + 1)]
        terms[Monomial.of(x_vec, y_vec)] = Fraction(int(c.p), int(c.q))
    return Polynomial(terms)


def parse_polynomial(text: str) -> Polynomial:
    """
    Parse polynomial text such as "2*x1*(x1+x2)" or "1 - x1^2"

    Args:
        text: Expression in x1, x2, ... and y1, y2, ...; ^ and ** both mean power

    Returns:
        Expanded polynomial
    """
    if not text or not text.strip():
        raise create_parse_error("empty polynomial text", text)
    names = set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text))
    local_dict = {}
    for name in names:
        if not _VARIABLE_PATTERN.match(name):
            raise create_parse_error(f"unknown name {name!r}", text)
        local_dict[name] = sympy.Symbol(name)
    try:
        expr = parse_expr(text, local_dict=local_dict,
                          transformations=standard_transformations + (convert_xor,),
                          evaluate=True)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise create_parse_error(f"cannot parse {text!r}: {e}", text)
    except Exception as e:  # tokenizer errors surface under several types
        raise create_parse_error(f"cannot parse {text!r}: {e}", text)
    if not isinstance(expr, sympy.Expr):
        raise create_parse_error(f"{text!r} is not an expression", text)
    return from_sympy(expr, text)


def linear_product(pairs: Iterable[Tuple[int, int]]) -> Polynomial:
    """prod (x_i + x_j) over the given index pairs"""
    return Polynomial.product(Polynomial.x(i) + Polynomial.x(j) for i, j in pairs)


def k_product(pairs: Iterable[Tuple[int, int]]) -> Polynomial:
    """prod (1 - x_i x_j) over the given index pairs"""
    return Polynomial.product(1 - Polynomial.x(i) * Polynomial.x(j) for i, j in pairs)
