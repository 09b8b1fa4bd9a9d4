"""Base surfaces and the square-zero total-space model.

The base S is a point or a projective space P^k, with cohomology basis
1, h, ..., h^k.  The total space Y of the fibration carries the model
H*(Y) = H*(S) + H*(S)*sigma with sigma = i_*(1) of degree 4 and sigma^2 = 0.
This model is exact for dim_C S <= 1; higher-dimensional bases work formally
but results are flagged model-dependent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import CycNum, format_rational, parse_rational, scalar_is_zero, scalar_to_json

POINT = "point"
PROJECTIVE = "projective_space"


@dataclass(frozen=True)
class BaseRing:
    """H*(S) for S a point or P^dim, basis h^0..h^dim.

    top_scale rescales the integration functional; 0 gives a degenerate
    pairing (used to exercise nondegeneracy checks).
    """

    model: str = POINT
    dim: int = 0
    top_scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.model == POINT:
            if self.dim != 0:
                raise ValueError("a point has dimension 0")
        elif self.model == PROJECTIVE:
            if self.dim < 0:
                raise ValueError("projective space needs dim >= 0")
        else:
            raise ValueError(f"unknown base model {self.model!r}")

    @property
    def rank(self) -> int:
        return self.dim + 1

    def zero(self) -> "GradedClass":
        return GradedClass(self, (Fraction(0),) * self.rank)

    def one(self) -> "GradedClass":
        return GradedClass(self, (Fraction(1),) + (Fraction(0),) * self.dim)

    def h_power(self, j: int, coeff=Fraction(1)) -> "GradedClass":
        """coeff * h^j, the zero class when h^j is above the top degree."""
        if j > self.dim:
            return self.zero()
        coeffs = [Fraction(0)] * self.rank
        coeffs[j] = coeffs[j] + coeff
        return GradedClass(self, tuple(coeffs))

    def to_json(self):
        return {"model": self.model, "dim": self.dim}

    @classmethod
    def from_json(cls, data) -> "BaseRing":
        return cls(model=data["model"], dim=int(data.get("dim", 0)))


@dataclass(frozen=True)
class GradedClass:
    """An element of H*(S): coefficients of h^0..h^dim, rationals or
    cyclotomic numbers."""

    ring: BaseRing
    coeffs: tuple

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("classes live over different bases")

    def __add__(self, other):
        self._check(other)
        return GradedClass(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return GradedClass(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GradedClass(self.ring, tuple(-a for a in self.coeffs))

    def scale(self, scalar) -> "GradedClass":
        return GradedClass(self.ring, tuple(scalar * a for a in self.coeffs))

    def __mul__(self, other):
        """Cup product; scalars also accepted."""
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        self._check(other)
        out = [Fraction(0)] * self.ring.rank
        for i, a in enumerate(self.coeffs):
            if scalar_is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j <= self.ring.dim and not scalar_is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return GradedClass(self.ring, tuple(out))

    __rmul__ = __mul__

    def integrate(self):
        """Integral over S: the h^top coefficient (times top_scale)."""
        return self.coeffs[self.ring.dim] * self.ring.top_scale

    def is_zero(self) -> bool:
        return all(scalar_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check(other)
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def degrees(self):
        """Real cohomological degrees present, {2j : coeff of h^j nonzero}."""
        return {2 * j for j, c in enumerate(self.coeffs) if not scalar_is_zero(c)}

    def to_json(self):
        return [scalar_to_json(c) for c in self.coeffs]


@dataclass(frozen=True)
class TotalClass:
    """H*(Y) in the square-zero model: pure + pure * sigma.

    sigma = i_*(1) has degree 4, sigma^2 = 0, and i^*(sigma) = 0.
    """

    pure: GradedClass
    sigma: GradedClass

    @classmethod
    def zero(cls, ring: BaseRing) -> "TotalClass":
        return cls(ring.zero(), ring.zero())

    @classmethod
    def one(cls, ring: BaseRing) -> "TotalClass":
        return cls(ring.one(), ring.zero())

    def __add__(self, other):
        return TotalClass(self.pure + other.pure, self.sigma + other.sigma)

    def __sub__(self, other):
        return TotalClass(self.pure - other.pure, self.sigma - other.sigma)

    def __neg__(self):
        return TotalClass(-self.pure, -self.sigma)

    def scale(self, scalar) -> "TotalClass":
        return TotalClass(self.pure.scale(scalar), self.sigma.scale(scalar))

    def __mul__(self, other):
        """(a + b sigma)(a' + b' sigma) = aa' + (ab' + a'b) sigma."""
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        return TotalClass(self.pure * other.pure,
                          self.pure * other.sigma + other.pure * self.sigma)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.pure.is_zero() and self.sigma.is_zero()

    def __eq__(self, other):
        if not isinstance(other, TotalClass):
            return NotImplemented
        return self.pure == other.pure and self.sigma == other.sigma

    __hash__ = None

    def degrees(self):
        return self.pure.degrees() | {d + 4 for d in self.sigma.degrees()}

    def to_json(self):
        return {"pure": self.pure.to_json(), "sigma": self.sigma.to_json()}


def i_push(alpha: GradedClass) -> TotalClass:
    """Pushforward along the zero section: alpha -> alpha * sigma."""
    return TotalClass(alpha.ring.zero(), alpha)

def i_pull(x: TotalClass) -> GradedClass:
    """Restriction to the zero section kills the sigma part."""
    return x.pure

def integrate_total(x: TotalClass):
    """Integral over Y; only the compactly supported sigma part contributes."""
    return x.sigma.integrate()


@dataclass(frozen=True)
class TautClasses:
    """Degree-2 tautological classes on S, as rational multiples of h.

    For n >= 2 the classes l, m, k satisfy l + m = (n+1) k; for n = 1 only
    k is defined (l and m are not separately visible).
    """

    n: int
    l: Fraction | None
    m: Fraction | None
    k: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")
        if self.n == 1:
            if self.l is not None or self.m is not None:
                raise ValueError("for n = 1 only k is defined")
        else:
            if self.l is None or self.m is None:
                raise ValueError("for n >= 2 both l and m are required")
            if self.l + self.m != (self.n + 1) * self.k:
                raise ValueError("need l + m = (n+1) k")

    def ell(self, ring: BaseRing) -> GradedClass:
        if self.l is None:
            raise ValueError("l is undefined for n = 1")
        return ring.h_power(1, self.l)

    def em(self, ring: BaseRing) -> GradedClass:
        if self.m is None:
            raise ValueError("m is undefined for n = 1")
        return ring.h_power(1, self.m)

    def kap(self, ring: BaseRing) -> GradedClass:
        return ring.h_power(1, self.k)

    def to_json(self):
        if self.n == 1:
            return {"k": format_rational(self.k)}
        return {"l": format_rational(self.l), "m": format_rational(self.m),
                "k": format_rational(self.k)}


@dataclass(frozen=True)
class Geometry:
    """A transversal A_n fibration datum: singularity type n, base S, and
    the tautological degree-2 classes."""

    n: int
    base: BaseRing
    taut: TautClasses

    def __post_init__(self):
        if self.taut.n != self.n:
            raise ValueError("tautological classes built for a different n")

    @property
    def model_dependent(self) -> bool:
        """True when dim_C S >= 2, where the square-zero model is only formal."""
        return self.base.dim >= 2

    def ell(self) -> GradedClass:
        return self.taut.ell(self.base)

    def em(self) -> GradedClass:
        return self.taut.em(self.base)

    def kap(self) -> GradedClass:
        return self.taut.kap(self.base)

    def symplectic(self) -> bool:
        """True when the class k vanishes on S (so all quantum corrections do)."""
        return self.kap().is_zero()

    def to_json(self):
        return {"n": self.n, "base": self.base.to_json(),
                "classes": self.taut.to_json()}

    @classmethod
    def from_json(cls, data) -> "Geometry":
        n = int(data["n"])
        base = BaseRing.from_json(data["base"])
        raw = data.get("classes", {})
        k = parse_rational(raw.get("k", "0"))
        if n == 1:
            taut = TautClasses(n, None, None, k)
        else:
            taut = TautClasses(n, parse_rational(raw["l"]), parse_rational(raw["m"]), k)
        return cls(n=n, base=base, taut=taut)


def default_geometry(n: int, base: BaseRing | None = None) -> Geometry:
    """P^1 base with l = 1, m = n, k = 1 (the relation then holds on the nose);
    for n = 1 just k = 1."""
    if base is None:
        base = BaseRing(PROJECTIVE, 1)
    if n == 1:
        taut = TautClasses(1, None, None, Fraction(1))
    else:
        taut = TautClasses(n, Fraction(1), Fraction(n), Fraction(1))
    return Geometry(n=n, base=base, taut=taut)
