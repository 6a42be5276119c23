import cmath

import numpy as np
import pytest

from schurpick.exceptions import OutsideDisk, UnvalidatedFunction, ZeroOutsideDisk
from schurpick.functions import (
    Constant,
    DeltaNode,
    EPS_COINCIDE,
    MobiusMap,
    Polynomial,
    SchurSynth,
    automorphism_fn,
    blaschke,
    eval_jet,
    identity,
    polynomial,
    post_mobius,
    pre_automorphism,
    product,
    random_blaschke,
    random_disk_point,
    random_schur_fn,
    require_bounded,
    schur_chain,
    validate_bounded,
)

z_squared = blaschke(0, [0, 0])


def test_eval_jet_examples():
    f = validate_bounded(polynomial([0, 1])).function
    assert np.allclose(eval_jet(f, 0.3, 2).coeffs, [0.3, 1, 0])
    assert np.allclose(eval_jet(z_squared, 0.5, 1).coeffs, [0.25, 1])
    assert np.allclose(eval_jet(DeltaNode(z_squared, 0, 0), 0.5, 0).coeffs, [0.5])


def test_blaschke_examples():
    assert blaschke(0, [])(0.3) == 1
    assert blaschke(0, [0])(0.7) == pytest.approx(0.7)
    assert blaschke(0, [0.5])(0) == pytest.approx(-0.5)
    assert blaschke(0, [0.1, 0.2j]).degree == 2
    with pytest.raises(ZeroOutsideDisk):
        blaschke(0, [1.0])


def test_blaschke_unimodular_on_circle():
    f = random_blaschke(3, 4)
    for t in np.linspace(0, 2 * np.pi, 50):
        assert abs(abs(f._jet(cmath.exp(1j * t), 0).value) - 1) < 1e-12


def test_validate_bounded_examples():
    r = validate_bounded(polynomial([0, 0.5]))
    assert r.validated and r.max_modulus_estimate == pytest.approx(0.4995, abs=1e-4)
    r = validate_bounded(polynomial([0, 2]))
    assert not r.validated and r.max_modulus_estimate == pytest.approx(1.998, abs=1e-3)
    r = validate_bounded(polynomial([0, 0.5, 0.5]))
    assert r.validated and r.max_modulus_estimate == pytest.approx(0.998, abs=1e-3)
    assert r.grid_points == 1024 and r.radius_used == 0.999


def test_validation_marks_nested_polynomials():
    f = product(polynomial([0, 0.5]), identity())
    with pytest.raises(UnvalidatedFunction):
        require_bounded(f)
    g = validate_bounded(f).function
    assert require_bounded(g) is g


def test_random_schur_fn_examples():
    assert schur_chain([0], [0], 0)(0.4) == 0
    c = 0.3 - 0.4j
    f = schur_chain([0], [0], c)
    for z in (0.1, 0.5j, -0.3 + 0.2j):
        assert f(z) == pytest.approx(c * z, abs=1e-15)
    a, b = random_schur_fn(11, 3, 0.9), random_schur_fn(11, 3, 0.9)
    assert a == b


def test_random_schur_fn_rejects_bad_cap():
    with pytest.raises(ValueError):
        random_schur_fn(0, 1, 1.0)


def test_structural_bound_inside_disk():
    rng = np.random.default_rng(5)
    for _ in range(50):
        f = random_schur_fn(rng, int(rng.integers(0, 4)), 0.9)
        z = random_disk_point(rng, 0.99)
        assert abs(f(z)) < 1


def test_constant_outside_disk_rejected():
    with pytest.raises(OutsideDisk):
        Constant(1.5)


def test_post_mobius_requires_self_map():
    with pytest.raises(OutsideDisk):
        post_mobius(MobiusMap(2, 0, 0, 1), identity())
    f = post_mobius(MobiusMap(0.5, 0.25, 0, 1), identity())
    assert f(0.2) == pytest.approx(0.35)


def test_pre_automorphism_requires_automorphism():
    with pytest.raises(ValueError):
        pre_automorphism(MobiusMap(0.5, 0, 0, 1), identity())
    T = MobiusMap.automorphism(0.4, 0.3)
    assert automorphism_fn(T)(0.2) == pytest.approx(T(0.2))


def test_schur_synth_value_at_node():
    f = SchurSynth(0.3, 0.4j, Constant(0.7))
    assert f(0.3) == pytest.approx(0.4j)


def test_delta_near_node_paths_agree():
    f = random_schur_fn(2, 2, 0.8)
    g = f(0.2)
    d = DeltaNode(f, 0.2, g)
    direct = d(0.2 + 1e-6)
    near = d(0.2 + 0.5 * EPS_COINCIDE)
    at = d(0.2)
    assert near == pytest.approx(at, abs=1e-7)
    assert direct == pytest.approx(at, abs=1e-5)


def test_jets_match_finite_differences():
    f = random_schur_fn(4, 3, 0.9)
    z, h = 0.25 - 0.1j, 1e-4
    J = eval_jet(f, z, 3)
    d1 = (f(z + h) - f(z - h)) / (2 * h)
    d2 = (f(z + h) - 2 * f(z) + f(z - h)) / h**2
    assert J.derivative(1) == pytest.approx(d1, rel=1e-6)
    assert J.derivative(2) == pytest.approx(d2, rel=1e-5)


def test_polynomial_jet_beyond_degree_is_zero():
    p = Polynomial((0, 0.5), validated=True)
    assert np.allclose(eval_jet(p, 0.1, 4).coeffs, [0.05, 0.5, 0, 0, 0])
