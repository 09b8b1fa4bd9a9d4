from fractions import Fraction

import pytest

from crepant.geometry import (
    BaseRing,
    Geometry,
    TautClasses,
    TotalClass,
    default_geometry,
    i_push,
)
from crepant.orbifold import (
    ConventionFlags,
    OrbClass,
    OrbifoldRing,
    age,
    obstruction_class,
    surface_table,
)


def test_age():
    assert age(2, [1, 1]) == 1
    assert age(3, [1, 2]) == 1
    assert age(5, [2, 3]) == 1
    assert age(4, [1, 1]) == Fraction(1, 2)
    assert age(3, [0, 0]) == 0


def test_obstruction_class():
    assert obstruction_class(3, 1, 3) is None
    assert obstruction_class(3, 1, 1) == "ell"
    assert obstruction_class(3, 3, 3) == "em"
    with pytest.raises(ValueError):
        obstruction_class(3, 0, 1)


def test_flags():
    assert ConventionFlags().twist_self_value(2) == Fraction(-1, 3)
    assert ConventionFlags("1/(n+1)").twist_self_value(3) == Fraction(1, 4)
    with pytest.raises(ValueError):
        ConventionFlags("2")


def test_surface_table():
    table = surface_table(2)
    assert table[(1, 2)] == Fraction(1, 3)
    assert table[(2, 1)] == Fraction(1, 3)
    assert table[(1, 1)] == 0
    table5 = surface_table(5)
    assert table5[(2, 4)] == Fraction(1, 6)
    assert table5[(2, 3)] == 0


def test_surface_table_matches_ring_over_point():
    n = 3
    geom = Geometry(n, BaseRing("point"),
                    TautClasses(n, Fraction(0), Fraction(0), Fraction(0)))
    ring = OrbifoldRing(geom)
    table = surface_table(n)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            prod = ring.mul(OrbClass.sector(geom, a), OrbClass.sector(geom, b))
            assert prod.untwisted.sigma.coeffs[0] == table[(a, b)]
            if (a + b) % (n + 1) == 0:
                assert all(t.is_zero() for t in prod.twisted)


def test_product_cases_a2():
    geom = default_geometry(2)  # ell = h, em = 2h, kap = h
    ring = OrbifoldRing(geom)
    e1 = OrbClass.sector(geom, 1)
    e2 = OrbClass.sector(geom, 2)

    # inverse twists: (1/3) * pushforward
    p = ring.mul(e1, e2)
    assert p.untwisted.sigma.coeffs == (Fraction(1, 3), Fraction(0))
    assert all(t.is_zero() for t in p.twisted)

    # wrap-below: obstruction class ell, default coefficient -1/3
    p = ring.mul(e1, e1)
    assert p.untwisted.is_zero()
    assert p.twisted[1].coeffs == (Fraction(0), Fraction(-1, 3))

    # wrap-above: obstruction class em = 2h
    p = ring.mul(e2, e2)
    assert p.twisted[0].coeffs == (Fraction(0), Fraction(-2, 3))


def test_untwisted_action():
    geom = default_geometry(2)
    ring = OrbifoldRing(geom)
    sigma = OrbClass.from_untwisted(geom, i_push(geom.base.one()))
    e1 = OrbClass.sector(geom, 1)
    # sigma restricts to zero on the singular locus, so it kills sectors
    assert ring.mul(sigma, e1).is_zero()
    h = OrbClass.from_untwisted(
        geom, TotalClass(geom.base.h_power(1), geom.base.zero()))
    p = ring.mul(h, e1)
    assert p.twisted[0].coeffs == (Fraction(0), Fraction(1))


def test_degrees_shift():
    geom = default_geometry(2)
    e1 = OrbClass.sector(geom, 1)
    assert e1.degrees() == {2}
    e1h = OrbClass.sector(geom, 1, geom.base.h_power(1))
    assert e1h.degrees() == {4}


def test_pairing_and_integral_compatible():
    geom = default_geometry(2)
    ring = OrbifoldRing(geom)
    basis = ring.basis()
    for _, x in basis:
        for _, y in basis:
            assert ring.pairing(x, y) == ring.integrate(ring.mul(x, y))


def test_flag_variants_change_product():
    geom = default_geometry(2)
    e1 = OrbClass.sector(geom, 1)
    default = OrbifoldRing(geom).mul(e1, e1)
    flipped = OrbifoldRing(geom, ConventionFlags("1")).mul(e1, e1)
    assert flipped.twisted[1].coeffs == (Fraction(0), Fraction(1))
    assert default.twisted[1].coeffs == (Fraction(0), Fraction(-1, 3))
