import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurpick.exceptions import OutsideDisk, PoleHit, UnboundedImage
from schurpick.geometry import (
    ClosedDisk,
    MobiusMap,
    bracket,
    check_point,
    disk_image,
    hyperbolic_distance,
    mobius_apply,
    mobius_compose,
    mobius_inverse,
)


@st.composite
def disk_points(draw, cap=0.95):
    r = draw(st.floats(0, cap))
    t = draw(st.floats(0, 2 * math.pi))
    return complex(r * math.cos(t), r * math.sin(t))


def test_bracket_examples():
    assert bracket(0.5, 0) == 0.5
    assert bracket(0.5, 0.5) == 0
    assert bracket(0.5, -0.5) == pytest.approx(0.8, abs=1e-15)


def test_bracket_boundary_diagonal_is_zero():
    z = cmath.exp(0.7j)
    assert bracket(z, z) == 0


def test_bracket_of_distinct_boundary_points_is_unimodular():
    assert abs(bracket(1j, 1)) == pytest.approx(1, abs=1e-15)


def test_bracket_outside_closed_disk_rejected():
    with pytest.raises(OutsideDisk):
        bracket(1.2, 0)


def test_check_point_open_and_closed():
    assert check_point(1, closed=True) == 1
    with pytest.raises(OutsideDisk):
        check_point(1)
    with pytest.raises(OutsideDisk):
        check_point(float("nan"), closed=True)


def test_hyperbolic_distance_examples():
    assert hyperbolic_distance(0, 0) == 0
    assert hyperbolic_distance(0, 0.5) == pytest.approx(math.log(3), rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(disk_points(), disk_points(), disk_points())
def test_triangle_inequality(x, y, z):
    d = hyperbolic_distance
    assert d(x, z) <= d(x, y) + d(y, z) + 1e-12


@settings(max_examples=100, deadline=None)
@given(disk_points(), disk_points(), st.floats(0, 2 * math.pi), disk_points(0.9))
def test_pseudo_distance_is_automorphism_invariant(z, w, theta, a):
    T = MobiusMap.automorphism(theta, a)
    assert abs(bracket(T(z), T(w))) == pytest.approx(abs(bracket(z, w)), abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(disk_points(), disk_points())
def test_bracket_round_trip(z, z0):
    w = bracket(z, z0)
    assert abs(bracket(w, -z0) - z) <= 1e-12


def test_mobius_examples():
    assert MobiusMap.identity()(0.3 + 0.1j) == 0.3 + 0.1j
    M = MobiusMap(1, 0.5, 0.5, 1)
    assert M(1) == pytest.approx(1)
    assert mobius_apply(M, 0) == 0.5


def test_mobius_compose_and_inverse():
    M = MobiusMap(1, 0.5, 0.5, 1)
    N = MobiusMap(2, 0.1j, 0.3, 1)
    for x in (0.1, -0.4j, 0.3 + 0.2j):
        assert mobius_compose(M, N)(x) == pytest.approx(M(N(x)), abs=1e-14)
        assert mobius_inverse(M)(M(x)) == pytest.approx(x, abs=1e-14)


def test_mobius_pole():
    with pytest.raises(PoleHit):
        MobiusMap(1, 0, 1, -0.5)(0.5)


def test_disk_image_examples():
    for M in (MobiusMap.identity(), MobiusMap(1, 0.5, 0.5, 1)):
        d = disk_image(M)
        assert d.center == pytest.approx(0, abs=1e-15)
        assert d.radius == pytest.approx(1, abs=1e-15)
    d = disk_image(MobiusMap(0.5, 0.5, 0.25, 1))
    assert d.center == pytest.approx(0.4, abs=1e-15)
    assert d.radius == pytest.approx(0.4, abs=1e-15)


def test_disk_image_against_sampled_boundary():
    M = MobiusMap(0.5, 0.5, 0.25, 1)
    d = disk_image(M)
    pts = np.exp(2j * np.pi * np.arange(10_000) / 10_000)
    img = np.array([M(complex(p)) for p in pts])
    assert np.max(np.abs(np.abs(img - d.center) - d.radius)) < 1e-12


def test_disk_image_degenerate_map_is_a_point():
    d = disk_image(MobiusMap(0, 0.3, 0, 1))
    assert d.radius == 0 and d.center == 0.3


def test_disk_image_unbounded():
    with pytest.raises(UnboundedImage):
        disk_image(MobiusMap(1, 0, 1, 0.5))


def test_closed_disk_membership():
    d = ClosedDisk(0.4, 0.4)
    assert d.contains(0.8 + 1e-10)
    assert not d.contains(0.8 + 1e-8)
    assert d.sup_modulus == pytest.approx(0.8)
    with pytest.raises(ValueError):
        ClosedDisk(0, -1)


def test_automorphism_predicate():
    assert MobiusMap.automorphism(0.3, 0.5).is_automorphism()
    assert not MobiusMap(0.5, 0, 0, 1).is_automorphism()
