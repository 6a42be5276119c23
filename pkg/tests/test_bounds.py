import numpy as np
import pytest

from schurpick.bounds import (
    dieudonne_classical_sides,
    dieudonne_fprime0_residual,
    dieudonne_fprime0_sides,
    dieudonne_fprime0_special_sides,
    dieudonne_region,
    dieudonne_second_order_gform_residual,
    dieudonne_second_order_residual,
    dieudonne_second_order_sides,
    distance_bound_chain,
    modulus_bound_chain,
    two_sided_modulus_bounds,
    value_region,
)
from schurpick.hdq import delta
from schurpick.exceptions import GammaOutOfRange, HypothesisViolated, InconsistentData
from schurpick.functions import (
    blaschke,
    identity,
    polynomial,
    product,
    random_schur_fn,
    schur_chain,
    validate_bounded,
)

z2 = blaschke(0, [0, 0])
z3 = blaschke(0, [0, 0, 0])


def test_value_region_examples():
    d = value_region([0], [0], 0.5)
    assert d.center == 0 and d.radius == pytest.approx(0.5)
    d = value_region([0], [0.5], 0.5)
    assert abs(d.center - 0.4) < 1e-12 and abs(d.radius - 0.4) < 1e-12
    d = value_region([0, 0.5], [0, 0.5], 0.5)
    assert d.center == pytest.approx(0.25) and d.radius == 0


def test_value_region_unimodular_last_parameter():
    d = value_region([0, 0.2], [0.3, 1], 0.5)
    assert d.radius == 0 and not d.interior_refinement


def test_value_region_gamma_checks():
    with pytest.raises(GammaOutOfRange):
        value_region([0, 0.1], [1, 0.2], 0.3)
    with pytest.raises(GammaOutOfRange):
        modulus_bound_chain([0], [1], 0.3)


def test_modulus_chain_examples():
    assert modulus_bound_chain([0, 0], [0.5, 0.5], 0.5).values == pytest.approx((0.8, 0.75), abs=1e-15)
    t = 0.6
    assert modulus_bound_chain([0] * 4, [0] * 4, t).values == pytest.approx((t, t**2, t**3, t**4))


def test_modulus_chain_matches_rational_forms():
    rng = np.random.default_rng(1)
    for _ in range(100):
        c0, c1, c2, t = rng.random(4) * 0.99
        v = modulus_bound_chain([0] * 3, [c0, c1, c2], t).values
        b = c1 + c0 * c2 + c0 * c1 * c2
        c = c0 * c1 + c2 + c1 * c2
        three = (c0 + b * t + c * t**2 + t**3) / (c0 * t**3 + b * t**2 + c * t + 1)
        two = (c0 + (c1 + c0 * c1) * t + t**2) / (c0 * t**2 + (c1 + c0 * c1) * t + 1)
        one = (c0 + t) / (1 + c0 * t)
        assert v == pytest.approx((one, two, three), abs=1e-12)


def test_distance_chain_examples():
    assert distance_bound_chain([0], [0.2], 0.5, 0).values[0] == pytest.approx(3)
    v = distance_bound_chain([0, 0], [0.2, 0.5], 0.5, 0).values
    assert abs(v[1] - 7 / 3) < 1e-12
    with pytest.raises(ValueError):
        distance_bound_chain([0.1, 0], [0.2, 0.5], 0.5, 0)


def test_distance_chain_second_entry_closed_form():
    rng = np.random.default_rng(3)
    for _ in range(100):
        t, c1, c2 = rng.random(3) * 0.99
        v = distance_bound_chain([0.0] * 3, [0.3, c1, c2], t, 0).values
        s = c1 + c2 + c1 * c2
        r2 = (1 + t * s + t**2 * s + t**3) / (
            1 + t * (c2 - c1 + c1 * c2) + t**2 * (c1 - c2 - c1 * c2) - t**3
        )
        assert abs(v[2] - r2) <= 1e-12 * r2


def test_two_sided_bounds_examples():
    assert two_sided_modulus_bounds(0.5, 0.5) == pytest.approx((0, 0.8))
    assert two_sided_modulus_bounds(0, 0.3j) == pytest.approx((0, 0.3))
    lo, hi = two_sided_modulus_bounds(0.5, 0.5, 0.5)
    assert lo == pytest.approx(2 / 7) and hi == pytest.approx(2 / 3)


def test_two_sided_bounds_contain_actual_modulus():
    rng = np.random.default_rng(6)
    for _ in range(50):
        f = random_schur_fn(rng, 2, 0.9)
        z0, z = (complex(*(rng.random(2) - 0.5)) for _ in range(2))
        lo, hi = two_sided_modulus_bounds(f(z0), (z - z0) / (1 - z0.conjugate() * z), delta(f, z0)(z))
        assert lo - 1e-12 <= abs(f(z)) <= hi + 1e-12


def test_dieudonne_region_examples():
    d = dieudonne_region(0, 0, 0.5, 0.25)
    assert d.center == pytest.approx(0.5) and d.radius == pytest.approx(0.5)
    assert abs(d.excess(1.0)) < 1e-12
    d = dieudonne_region(0, 0, 0.3, 0.3)
    assert d.radius == pytest.approx(0, abs=1e-12) and d.contains(1)
    d = dieudonne_region(0.1, 0.2, -0.3, 0.2)
    assert d.center == 0


def test_dieudonne_region_inconsistent():
    with pytest.raises(InconsistentData):
        dieudonne_region(0, 0, 0.5, 0.8)


def test_classical_dieudonne_equality():
    lhs, rhs = dieudonne_classical_sides(z2, 0.5)
    assert lhs == pytest.approx(0.25, abs=1e-12) and rhs == pytest.approx(0.25, abs=1e-12)


def test_second_order_examples():
    lhs, rhs = dieudonne_second_order_sides(z2, 0.5)
    assert lhs == pytest.approx(1 / 6, abs=1e-10) and rhs == pytest.approx(1 / 6, abs=1e-10)
    quarter = validate_bounded(polynomial([0, 0, 0.25])).function
    assert dieudonne_second_order_residual(quarter, 0.5) > 0
    f = product(identity(), blaschke(0, [-0.5]))
    assert abs(dieudonne_second_order_residual(f, 0.4)) < 1e-8


def test_second_order_forms_agree_in_sign():
    rng = np.random.default_rng(8)
    for _ in range(40):
        g = random_schur_fn(rng, 2, 0.8)
        f = product(identity(), g)
        z = complex(*(rng.random(2) - 0.5))
        assert dieudonne_second_order_residual(f, z) >= -1e-12
        assert dieudonne_second_order_gform_residual(f, z) >= -1e-12


def test_second_order_hypotheses():
    with pytest.raises(HypothesisViolated):
        dieudonne_second_order_sides(identity(), 0.5)
    with pytest.raises(HypothesisViolated):
        dieudonne_second_order_sides(blaschke(0, [0.5]), 0.5)


def test_fprime0_examples():
    half = validate_bounded(polynomial([0, 0.5])).function
    lhs, rhs = dieudonne_fprime0_sides(half, 0.5)
    assert lhs == pytest.approx(0, abs=1e-15) and rhs >= 0
    assert dieudonne_fprime0_residual(half, 0.5) >= 0
    lhs, rhs = dieudonne_fprime0_special_sides(z3, 0.5)
    assert lhs == pytest.approx(0.25, abs=1e-12) and rhs == pytest.approx(0.25, abs=1e-12)
    lhs, rhs = dieudonne_fprime0_special_sides(z2, 0.5)
    assert lhs == pytest.approx(0, abs=1e-15) and rhs == pytest.approx(0, abs=1e-15)


def test_fprime0_special_requires_flat_origin():
    with pytest.raises(HypothesisViolated):
        dieudonne_fprime0_special_sides(schur_chain([0], [0], 0.5), 0.3)
