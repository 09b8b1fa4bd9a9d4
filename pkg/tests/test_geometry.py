from fractions import Fraction

import pytest

from crepant.geometry import (
    BaseRing,
    Geometry,
    TautClasses,
    TotalClass,
    default_geometry,
    i_pull,
    i_push,
    integrate_total,
)


def p1():
    return BaseRing("projective_space", 1)


def test_base_ring_product_and_integral():
    ring = BaseRing("projective_space", 2)
    h = ring.h_power(1)
    assert (h * h).integrate() == 1
    assert (h * h * h).is_zero()  # truncated above the top degree
    assert ring.one().integrate() == 0
    pt = BaseRing("point")
    assert pt.one().integrate() == 1


def test_degenerate_top_scale():
    ring = BaseRing("point", top_scale=Fraction(0))
    assert ring.one().integrate() == 0


def test_square_zero_model():
    ring = p1()
    sigma = i_push(ring.one())
    assert (sigma * sigma).is_zero()
    assert i_pull(sigma).is_zero()
    h = TotalClass(ring.h_power(1), ring.zero())
    prod = h * sigma
    assert prod.sigma == ring.h_power(1)
    assert integrate_total(prod) == 1
    assert sigma.degrees() == {4}


def test_taut_relation_validated():
    with pytest.raises(ValueError):
        TautClasses(2, Fraction(1), Fraction(1), Fraction(1))
    TautClasses(2, Fraction(1), Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        TautClasses(1, Fraction(1), Fraction(1), Fraction(1))


def test_geometry_json_round_trip():
    geom = default_geometry(2)
    again = Geometry.from_json(geom.to_json())
    assert again == geom
    g1 = default_geometry(1)
    assert Geometry.from_json(g1.to_json()) == g1


def test_point_base_classes_vanish():
    geom = Geometry(2, BaseRing("point"),
                    TautClasses(2, Fraction(1), Fraction(2), Fraction(1)))
    assert geom.ell().is_zero()
    assert geom.symplectic()


def test_model_dependent_flag():
    geom = Geometry(2, BaseRing("projective_space", 2),
                    TautClasses(2, Fraction(1), Fraction(2), Fraction(1)))
    assert geom.model_dependent
    assert not default_geometry(2).model_dependent
