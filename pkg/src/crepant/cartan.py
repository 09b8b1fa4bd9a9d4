"""The A_n Cartan-type intersection matrix and curve classes.

Exceptional divisors E_1..E_n of the resolved transversal A_n singularity
intersect fiberwise in the pattern of the negated A_n Cartan matrix:
diagonal -2, off-diagonal 1 for adjacent indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def cartan_matrix(n: int):
    """The n x n matrix c_n: -2 on the diagonal, 1 next to it."""
    if n < 1:
        raise ValueError("need n >= 1")
    return tuple(
        tuple(-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def cartan_inverse(n: int):
    """Closed-form inverse: (c_n^-1)_{ij} = -min(i,j)(n+1-max(i,j))/(n+1),
    indices 1-based."""
    return tuple(
        tuple(
            Fraction(-min(i, j) * (n + 1 - max(i, j)), n + 1)
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )


def cartan_inverse_entry(n: int, i: int, j: int) -> Fraction:
    """(c_n^-1)_{ij} with the boundary convention that index 0 or n+1 gives 0."""
    if i in (0, n + 1) or j in (0, n + 1):
        return Fraction(0)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"index out of range for n={n}: ({i},{j})")
    return cartan_inverse(n)[i - 1][j - 1]


def cartan_inverse_by_elimination(n: int):
    """Independent computation of c_n^-1 by exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in cartan_matrix(n)]
    aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class CurveClass:
    """An effective fiber curve class: nonnegative multiplicities of the
    exceptional fiber components beta_1..beta_n."""

    n: int
    mult: tuple

    def __post_init__(self):
        if len(self.mult) != self.n:
            raise ValueError("multiplicity vector has the wrong length")
        if any(m < 0 for m in self.mult):
            raise ValueError("curve classes here are effective")

    def is_span(self):
        """(i, j) if the class is beta_{ij} = beta_i + ... + beta_j, else None."""
        support = [t for t, m in enumerate(self.mult) if m != 0]
        if not support:
            return None
        i, j = support[0], support[-1]
        if support == list(range(i, j + 1)) and all(self.mult[t] == 1 for t in support):
            return (i + 1, j + 1)
        return None

    def as_multiple_of_span(self):
        """(a, (i, j)) if the class is a * beta_{ij} with a >= 1, else None."""
        support = [t for t, m in enumerate(self.mult) if m != 0]
        if not support:
            return None
        a = self.mult[support[0]]
        i, j = support[0], support[-1]
        if support == list(range(i, j + 1)) and all(self.mult[t] == a for t in support):
            return (a, (i + 1, j + 1))
        return None


def curve_class(n: int, i: int, j: int) -> CurveClass:
    """beta_{ij} = beta_i + beta_{i+1} + ... + beta_j, 1 <= i <= j <= n."""
    if not (1 <= i <= j <= n):
        raise ValueError(f"need 1 <= i <= j <= n, got ({i},{j})")
    return CurveClass(n, tuple(1 if i <= t + 1 <= j else 0 for t in range(n)))


def intersection(n: int, l: int, beta: CurveClass) -> int:
    """E_l . beta, extended linearly from E_l . beta_m = (c_n)_{lm}."""
    c = cartan_matrix(n)
    return sum(c[l - 1][m] * beta.mult[m] for m in range(n))
