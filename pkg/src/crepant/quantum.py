"""Quantum-corrected cohomology of the resolution.

Corrections to products of exceptional divisors are organized through the
geometric series atoms delta_{rs} = Q/(1-Q) with Q = q_r ... q_s, one per
connected span of exceptional fiber components.  The correction to E_i E_j
is expressed by the cubic intersection polynomials R_{ijm} contracted with
the inverse intersection matrix, multiplied by the class k.  Products
involving pullback classes receive no correction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cartan import cartan_inverse_entry, curve_class, intersection
from .geometry import Geometry, GradedClass, TotalClass
from .resolution import ResClass, ResolutionRing
from .scalars import CycNum, format_rational, scalar_is_zero


class PoleError(ArithmeticError):
    """Raised when a quantum parameter point hits a pole q_r ... q_s = 1."""

    def __init__(self, span):
        self.span = span
        super().__init__(f"pole of delta at span {span}: q_{span[0]}...q_{span[1]} = 1")


@dataclass(frozen=True)
class QSeries:
    """A rational constant plus a rational combination of atoms delta_{rs}."""

    const: Fraction = Fraction(0)
    atoms: tuple = ()  # sorted ((r, s), Fraction) pairs

    @classmethod
    def from_dict(cls, const=Fraction(0), atoms=None) -> "QSeries":
        items = tuple(sorted((span, c) for span, c in (atoms or {}).items() if c != 0))
        return cls(Fraction(const), items)

    def atom_dict(self):
        return dict(self.atoms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries.from_dict(self.const + other, self.atom_dict())
        d = self.atom_dict()
        for span, c in other.atoms:
            d[span] = d.get(span, Fraction(0)) + c
        return QSeries.from_dict(self.const + other.const, d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return QSeries.from_dict(self.const * scalar,
                                 {span: c * scalar for span, c in self.atoms})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.const == 0 and not self.atoms

    def merge_spans(self, relabel) -> "QSeries":
        """Apply a span relabelling (e.g. identify delta_{22} with delta_{11})."""
        d = {}
        for span, c in self.atoms:
            new = relabel(span)
            d[new] = d.get(new, Fraction(0)) + c
        return QSeries.from_dict(self.const, d)

    def to_json(self):
        return {"const": format_rational(self.const),
                "atoms": [{"span": list(span), "coeff": format_rational(c)}
                          for span, c in self.atoms]}


class QPoint:
    """An n-tuple of exact quantum parameters (rationals or cyclotomic)."""

    def __init__(self, values):
        self.values = tuple(values)
        self._atoms = {}

    @property
    def n(self) -> int:
        return len(self.values)

    def key(self) -> str:
        parts = []
        for v in self.values:
            parts.append(v.key() if isinstance(v, CycNum) else f"q:{v}")
        return ";".join(parts)

    def span_product(self, r: int, s: int):
        prod = Fraction(1)
        for t in range(r, s + 1):
            prod = prod * self.values[t - 1]
        return prod

    def atom(self, r: int, s: int):
        """delta_{rs} = Q/(1-Q) evaluated exactly; PoleError when Q = 1."""
        spankey = (r, s)
        if spankey not in self._atoms:
            prod = self.span_product(r, s)
            denom = 1 - prod
            if scalar_is_zero(denom):
                self._atoms[spankey] = PoleError(spankey)
            elif isinstance(denom, CycNum):
                self._atoms[spankey] = prod * denom.inv()
            else:
                self._atoms[spankey] = prod / denom
        val = self._atoms[spankey]
        if isinstance(val, PoleError):
            raise val
        return val

    def poles(self):
        """All spans (r, s) at which this point is singular."""
        out = []
        for r in range(1, self.n + 1):
            for s in range(r, self.n + 1):
                if scalar_is_zero(1 - self.span_product(r, s)):
                    out.append((r, s))
        return out

    def to_json(self):
        from .scalars import scalar_to_json
        return [scalar_to_json(v) for v in self.values]


def zero_point(n: int) -> QPoint:
    return QPoint([Fraction(0)] * n)


@lru_cache(maxsize=None)
def r_poly(n: int, i: int, j: int, m: int) -> QSeries:
    """R_{ijm} = sum over spans of (E_i.beta)(E_j.beta)(E_m.beta) delta."""
    atoms = {}
    for r in range(1, n + 1):
        for s in range(r, n + 1):
            beta = curve_class(n, r, s)
            c = (intersection(n, i, beta) * intersection(n, j, beta)
                 * intersection(n, m, beta))
            if c:
                atoms[(r, s)] = Fraction(c)
    return QSeries.from_dict(Fraction(0), atoms)


def evaluate(series: QSeries, q: QPoint):
    """Exact evaluation of a QSeries at a parameter point."""
    total = series.const
    for span, c in series.atoms:
        total = total + c * q.atom(*span)
    return total


@lru_cache(maxsize=None)
def alpha_vector_coefficients(n: int, i: int, j: int):
    """The contracted-form coefficients alpha_{ijm}: per m a pair
    (m_coef, k_coef) such that alpha_{ijm} = m_coef * m + k_coef * k.

    E_i E_j (twisted part) = sum_{l,m} (c_n^-1)_{lm} alpha_{ijm} E_l; zero
    for |i - j| > 1."""
    if i > j:
        i, j = j, i
    out = [(Fraction(0), Fraction(0)) for _ in range(n)]
    if j - i > 1:
        return tuple(out)
    if i == j:
        # boundary terms at m = 0 or m = n+1 are dropped
        if i - 2 >= 0:
            out[i - 2] = (Fraction(1), Fraction(-(i - 1)))
        out[i - 1] = (Fraction(0), Fraction(-4))
        if i < n:
            out[i] = (Fraction(-1), Fraction(i + 1))
    else:  # j = i + 1
        out[i - 1] = (Fraction(-1), Fraction(i + 1))
        out[j - 1] = (Fraction(1), Fraction(-i))
    return tuple(out)


def contracted_alpha(n: int, i: int, j: int):
    """sum_m (c_n^-1)_{lm} alpha_{ijm} as (m_coef, k_coef) pairs per l.

    Cross-check target for the direct product formula."""
    alphas = alpha_vector_coefficients(n, i, j)
    out = []
    for l in range(1, n + 1):
        cm = Fraction(0)
        ck = Fraction(0)
        for m in range(1, n + 1):
            c = cartan_inverse_entry(n, l, m)
            cm += c * alphas[m - 1][0]
            ck += c * alphas[m - 1][1]
        out.append((cm, ck))
    return out


class QuantumRing:
    """The quantum-corrected ring at a fixed exact parameter point."""

    def __init__(self, geom: Geometry, q: QPoint):
        if q.n != geom.n:
            raise ValueError("parameter point has the wrong length")
        self.geom = geom
        self.q = q
        self.classical = ResolutionRing(geom)
        self._ee = {}

    def one(self) -> ResClass:
        return self.classical.one()

    def ee_product(self, i: int, j: int) -> ResClass:
        """E_i * E_j including the quantum correction; cached."""
        key = (min(i, j), max(i, j))
        if key not in self._ee:
            self._ee[key] = self._compute_ee(*key)
        return self._ee[key]

    def _compute_ee(self, i: int, j: int) -> ResClass:
        geom = self.geom
        n = geom.n
        base = self.classical.ee_product(i, j)
        kap = geom.kap()
        if kap.is_zero():
            return base
        exc = list(base.exc)
        for l in range(1, n + 1):
            series = QSeries()
            for m in range(1, n + 1):
                c = cartan_inverse_entry(n, l, m)
                if c:
                    series = series + c * r_poly(n, i, j, m)
            if series.is_zero():
                continue
            value = evaluate(series, self.q)
            exc[l - 1] = exc[l - 1] + kap.scale(value)
        return ResClass(geom, base.pullback, tuple(exc))

    def mul(self, x: ResClass, y: ResClass) -> ResClass:
        geom = self.geom
        n = geom.n
        out = ResClass.from_pullback(geom, x.pullback * y.pullback)
        exc = list(out.exc)
        rx, ry = x.pullback.pure, y.pullback.pure
        for l in range(n):
            exc[l] = exc[l] + rx * y.exc[l] + ry * x.exc[l]
        out = ResClass(geom, out.pullback, tuple(exc))
        for i in range(1, n + 1):
            a = x.exc[i - 1]
            if a.is_zero():
                continue
            for j in range(1, n + 1):
                b = y.exc[j - 1]
                if b.is_zero():
                    continue
                coeff = a * b
                ee = self.ee_product(i, j)
                out = out + ResClass(
                    geom,
                    ee.pullback * TotalClass(coeff, geom.base.zero()),
                    tuple(e * coeff for e in ee.exc),
                )
        return out

    def pairing(self, x: ResClass, y: ResClass):
        from .geometry import integrate_total
        return integrate_total(self.mul(x, y).pullback)

    def basis(self):
        return self.classical.basis()


def quantum_mul(x: ResClass, y: ResClass, q: QPoint) -> ResClass:
    return QuantumRing(x.geom, q).mul(x, y)
