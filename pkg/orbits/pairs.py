"""
Symmetric Pair Descriptors

(GL_n, O_n) and (GL_2n, Sp_2n), identified by their kind and ambient size.
The ambient size is always the size of the general linear group, so the
symplectic pair (GL_6, Sp_6) has size 6.
"""

from enum import Enum
from typing import Callable, List, Tuple

from core.error_handler import create_input_error, create_unsupported_error
from core.permutations import (
    EdgeStyle,
    Permutation,
    fixed_point_free_involutions,
    involutions,
    weak_action_orthogonal,
    weak_action_symplectic,
)


class PairKind(Enum):
    ORTHOGONAL = "o"
    SYMPLECTIC = "sp"


class Theory(Enum):
    COHOMOLOGY = "coh"
    KTHEORY = "k"


class SymmetricPair:
    """A symmetric pair (GL_m, K) with K = O_m or Sp_m"""

    __slots__ = ("kind", "size")

    def __init__(self, kind: PairKind, size: int):
        if not isinstance(size, int) or size < 1:
            raise create_input_error(f"ambient size must be a positive integer, got {size!r}")
        if kind == PairKind.SYMPLECTIC and size % 2:
            raise create_input_error(f"(GL_{size}, Sp_{size}) needs an even size")
        self.kind = kind
        self.size = size

    @classmethod
    def orthogonal(cls, n: int) -> "SymmetricPair":
        return cls(PairKind.ORTHOGONAL, n)

    @classmethod
    def symplectic(cls, size: int) -> "SymmetricPair":
        return cls(PairKind.SYMPLECTIC, size)

    @classmethod
    def parse(cls, code: str, size: int) -> "SymmetricPair":
        try:
            kind = PairKind(code)
        except ValueError:
            raise create_input_error(f"unknown pair {code!r}; use 'o' or 'sp'")
        return cls(kind, size)

    @property
    def is_symplectic(self) -> bool:
        return self.kind == PairKind.SYMPLECTIC

    @property
    def rank(self) -> int:
        """Rank of the torus S of K"""
        return self.size // 2

    @property
    def label(self) -> str:
        group = "Sp" if self.is_symplectic else "O"
        return f"(GL_{self.size},{group}_{self.size})"

    def orbits(self) -> List[Permutation]:
        if self.is_symplectic:
            return fixed_point_free_involutions(self.size)
        return involutions(self.size)

    def weak_action(self) -> Callable[[int, Permutation], Tuple[Permutation, EdgeStyle]]:
        return weak_action_symplectic if self.is_symplectic else weak_action_orthogonal

    def closed_orbit(self) -> Permutation:
        return Permutation.longest(self.size)

    def dense_orbit(self) -> Permutation:
        if self.is_symplectic:
            images = []
            for a in range(1, self.size, 2):
                images += [a + 1, a]
            return Permutation(images)
        return Permutation.identity(self.size)

    def embed(self, pi: Permutation, size: int) -> Permutation:
        """iota (fixed points) or iota_fpf (adjacent transpositions) into a larger ambient size"""
        from orbits.upsilon import embed_fpf, embed_orthogonal
        if self.is_symplectic:
            return embed_fpf(pi, size)
        return embed_orthogonal(pi, size)

    def require_theory(self, theory: Theory):
        if theory == Theory.KTHEORY and not self.is_symplectic:
            raise create_unsupported_error(
                "K-theory representatives are not produced for (GL_n, O_n): the Demazure "
                "operator recursion fails for this pair (D_1(1-x1^2) = 1+x1x2, not 1 modulo I)",
                suggestions=["Use --theory coh for --pair o",
                             "Run 'verify demazure-failure' to see the failing edges"],
            )

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricPair) and (self.kind, self.size) == (other.kind, other.size)

    def __hash__(self) -> int:
        return hash((self.kind, self.size))

    def __repr__(self) -> str:
        return f"SymmetricPair({self.kind.value}, {self.size})"
