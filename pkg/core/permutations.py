"""
Permutations, Involutions and Signed Permutations

This module provides the Weyl group machinery for type A: permutations in
one-line notation, lengths, reduced words, Bruhat comparison, the two weak
actions on (fixed-point-free) involutions, mirrored permutations and their
signed-permutation encoding.

All values are immutable; every function here is pure.
"""

import logging
import re
from enum import Enum
from itertools import permutations as _all_images
from typing import List, Optional, Sequence, Tuple

from config.settings import AppConfig
from core.error_handler import create_input_error, create_parse_error

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)


class EdgeStyle(Enum):
    """Outcome of a weak action step"""
    NONE = "none"      # s_i fixes the orbit
    SOLID = "solid"    # conjugation s_i pi s_i
    DASHED = "dashed"  # one-sided product s_i pi


class Permutation:
    """A permutation of {1..n} in one-line notation (1-based)"""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise create_input_error(f"{list(images)} is not a permutation of 1..{len(images)}")
        self.images: Tuple[int, ...] = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The longest element w0(i) = n+1-i"""
        return cls(range(n, 0, -1))

    @classmethod
    def simple_reflection(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise create_input_error(f"s_{i} is not a simple reflection of S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        """Product s_{i1} s_{i2} ... s_{il} (composition, leftmost applied last)"""
        result = cls.identity(n)
        for i in word:
            result = result.right_multiply(i)
        return result

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()!r})"

    def __str__(self) -> str:
        return format_permutation(self)

    def one_line(self) -> str:
        if self.size < 10:
            return "".join(str(v) for v in self.images)
        return " ".join(str(v) for v in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for position, value in enumerate(self.images, start=1):
            inv[value - 1] = position
        return Permutation(inv)

    def left_multiply(self, i: int) -> "Permutation":
        """s_i o w: swaps the values i and i+1"""
        images = [i + 1 if v == i else i if v == i + 1 else v for v in self.images]
        return Permutation(images)

    def right_multiply(self, i: int) -> "Permutation":
        """w o s_i: swaps the entries in positions i and i+1"""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(images)

    def conjugate(self, i: int) -> "Permutation":
        """s_i w s_i"""
        return self.right_multiply(i).left_multiply(i)

    def is_left_ascent(self, i: int) -> bool:
        """True iff l(s_i w) > l(w)"""
        inv = self.inverse()
        return inv(i) < inv(i + 1)

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.size + 1))

    def is_fixed_point_free_involution(self) -> bool:
        return self.is_involution() and all(self(i) != i for i in range(1, self.size + 1))

    def embed(self, size: int) -> "Permutation":
        """Extend by fixed points to S_size"""
        if size < self.size:
            raise create_input_error(f"cannot embed S_{self.size} into S_{size}")
        return Permutation(self.images + tuple(range(self.size + 1, size + 1)))

    def two_cycles(self) -> List[Tuple[int, int]]:
        return [(i, self(i)) for i in range(1, self.size + 1) if self(i) > i]


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u o v)(i) = u(v(i))"""
    if u.size != v.size:
        raise create_input_error(f"size mismatch: S_{u.size} vs S_{v.size}")
    return Permutation(u(v(i)) for i in range(1, u.size + 1))


def length(w: Permutation) -> int:
    """Coxeter length: the number of inversions"""
    images = w.images
    return sum(1 for a in range(len(images)) for b in range(a + 1, len(images)) if images[a] > images[b])


def reduced_word(w: Permutation) -> List[int]:
    """
    Canonical reduced word of w

    The selection rule (smallest descent, multiply by s_i on the right) is
    applied to w^{-1}; the recorded indices then multiply, left to right, to w.

    Args:
        w: Permutation

    Returns:
        Indices [i1, ..., il] with s_{i1} ... s_{il} = w and l = length(w)
    """
    word: List[int] = []
    current = list(w.inverse().images)
    while True:
        descent = next((i for i in range(1, len(current)) if current[i - 1] > current[i]), None)
        if descent is None:
            return word
        word.append(descent)
        current[descent - 1], current[descent] = current[descent], current[descent - 1]


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via the tableau criterion on dot counts"""
    if u.size != v.size:
        raise create_input_error(f"size mismatch: S_{u.size} vs S_{v.size}")
    n = u.size
    for i in range(1, n + 1):
        prefix_u = u.images[:i]
        prefix_v = v.images[:i]
        for k in range(1, n + 1):
            if sum(1 for a in prefix_u if a >= k) > sum(1 for b in prefix_v if b >= k):
                return False
    return True


def lehmer_code(w: Permutation) -> Tuple[int, ...]:
    """code_i = #{j > i : w(j) < w(i)}; x^code(w) is the reverse-lex leading monomial of S_w"""
    images = w.images
    return tuple(sum(1 for b in images[a + 1:] if b < images[a]) for a in range(len(images)))


def all_permutations(n: int) -> List[Permutation]:
    return [Permutation(images) for images in _all_images(range(1, n + 1))]


def involutions(n: int) -> List[Permutation]:
    """The orbit-indexing set for (GL_n, O_n)"""
    return [w for w in all_permutations(n) if w.is_involution()]


def fixed_point_free_involutions(n: int) -> List[Permutation]:
    """The orbit-indexing set for (GL_n, Sp_n), n even"""
    if n % 2:
        return []
    return [w for w in all_permutations(n) if w.is_fixed_point_free_involution()]


def weak_action_orthogonal(i: int, pi: Permutation) -> Tuple[Permutation, EdgeStyle]:
    """
    Weak action of s_i on an involution indexing an O_n-orbit

    (a) fixed when l(s_i pi) > l(pi); (b) s_i pi s_i, solid, when that moves pi;
    (c) otherwise s_i pi, dashed.
    """
    if not 1 <= i < pi.size:
        raise create_input_error(f"index {i} out of range for S_{pi.size}")
    if pi(i) < pi(i + 1):
        return pi, EdgeStyle.NONE
    conjugated = pi.conjugate(i)
    if conjugated != pi:
        return conjugated, EdgeStyle.SOLID
    return pi.left_multiply(i), EdgeStyle.DASHED


def weak_action_symplectic(i: int, pi: Permutation) -> Tuple[Permutation, EdgeStyle]:
    """
    Weak action of s_i on a fixed-point-free involution indexing an Sp_2n-orbit

    (a') fixed when l(s_i pi) > l(pi) or s_i pi s_i = pi; (b') conjugation, solid.
    """
    if not 1 <= i < pi.size:
        raise create_input_error(f"index {i} out of range for S_{pi.size}")
    if pi(i) < pi(i + 1):
        return pi, EdgeStyle.NONE
    conjugated = pi.conjugate(i)
    if conjugated == pi:
        return pi, EdgeStyle.NONE
    return conjugated, EdgeStyle.SOLID


def mirrored(w: Permutation, size: Optional[int] = None) -> bool:
    """True iff w(m+1-i) = m+1-w(i) for all i, m the ambient size (odd sizes fix the middle)"""
    m = size or w.size
    if w.size != m:
        return False
    return all(w(m + 1 - i) == m + 1 - w(i) for i in range(1, m + 1))


class SignedPermutation:
    """A signed permutation of {1..r}: sigma(-i) = -sigma(i)"""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(v) for v in images)
        if sorted(abs(v) for v in images) != list(range(1, len(images) + 1)):
            raise create_input_error(f"{list(images)} is not a signed permutation")
        self.images: Tuple[int, ...] = images

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        value = self.images[abs(i) - 1]
        return value if i > 0 else -value

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(("signed", self.images))

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.images)})"

    def act_on_weight(self, weight: Sequence[int]) -> Tuple[int, ...]:
        """sigma(sum c_i Y_i) = sum c_i sign(sigma(i)) Y_|sigma(i)|"""
        result = [0] * self.rank
        for index, coefficient in enumerate(weight, start=1):
            if coefficient:
                target = self(index)
                result[abs(target) - 1] += coefficient if target > 0 else -coefficient
        return tuple(result)


def to_signed(w: Permutation) -> SignedPermutation:
    """sigma_w(i) = w(i) if w(i) <= r else -(m+1-w(i)), r = floor(m/2)"""
    if not mirrored(w):
        raise create_input_error(f"{w.one_line()} is not mirrored")
    m = w.size
    r = m // 2
    return SignedPermutation(w(i) if w(i) <= r else -(m + 1 - w(i)) for i in range(1, r + 1))


def from_signed(sigma: SignedPermutation, size: int) -> Permutation:
    """Inverse of to_signed for the given ambient size (2r or 2r+1)"""
    r = sigma.rank
    if size not in (2 * r, 2 * r + 1):
        raise create_input_error(f"signed permutation of rank {r} does not fit S_{size}")
    images = [0] * size
    for i in range(1, r + 1):
        value = sigma(i)
        images[i - 1] = value if value > 0 else size + 1 + value
        images[size - i] = size + 1 - images[i - 1]
    if size % 2:
        images[r] = r + 1
    return Permutation(images)


def all_mirrored(size: int) -> List[Permutation]:
    return [w for w in all_permutations(size) if mirrored(w)]


_CYCLE_PATTERN = re.compile(r"\(\s*\d+(?:\s*,\s*\d+)+\s*\)")


def parse_permutation(text: str, size: Optional[int] = None) -> Permutation:
    """
    Parse one-line ("4321", "1 2 3") or cycle ("(1,4)(2,3)") notation

    Args:
        text: Permutation text; "id" means the identity
        size: Ambient size, required for cycle notation and "id"

    Returns:
        Parsed permutation
    """
    stripped = text.strip()
    if not stripped:
        raise create_parse_error("empty permutation text")
    if stripped.lower() in ("id", "e", "()"):
        if size is None:
            raise create_parse_error("the identity needs an explicit size", text)
        return Permutation.identity(size)
    if stripped.startswith("("):
        if size is None:
            raise create_parse_error("cycle notation needs an explicit size", text)
        if _CYCLE_PATTERN.sub("", stripped).strip():
            raise create_parse_error(f"malformed cycle notation {text!r}", text)
        images = list(range(1, size + 1))
        seen = set()
        for match in _CYCLE_PATTERN.finditer(stripped):
            cycle = [int(v) for v in re.findall(r"\d+", match.group(0))]
            if any(v < 1 or v > size or v in seen for v in cycle):
                raise create_parse_error(f"cycle {match.group(0)} is invalid in S_{size}", text)
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return Permutation(images)
    if re.fullmatch(r"\d+", stripped):
        values = [int(ch) for ch in stripped]
    else:
        try:
            values = [int(part) for part in re.split(r"[\s,]+", stripped) if part]
        except ValueError:
            raise create_parse_error(f"cannot read permutation {text!r}", text)
    if size is not None and len(values) != size:
        raise create_parse_error(f"{text!r} has {len(values)} entries, expected {size}", text)
    try:
        return Permutation(values)
    except Exception as e:
        raise create_parse_error(str(e), text)


def format_permutation(w: Permutation) -> str:
    """Cycle notation for involutions ("id" for the identity), one-line otherwise"""
    if not w.is_involution():
        return w.one_line()
    cycles = w.two_cycles()
    if not cycles:
        return "id"
    return "".join(f"({a},{b})" for a, b in cycles)
