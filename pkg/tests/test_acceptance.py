"""Acceptance suite, one test per criterion.

Each test asserts what it checks and records a one-line verdict that is
printed in the terminal summary.
"""

import io

import numpy as np
import pytest

from schurpick.bounds import (
    dieudonne_classical_sides,
    dieudonne_fprime0_special_sides,
    dieudonne_second_order_sides,
    distance_bound_chain,
    modulus_bound_chain,
)
from schurpick.cli import main
from schurpick.functions import blaschke
from schurpick.peschl import gamma_from_taylor, third_order_residual, yamashita_residual
from schurpick.pick import FeasibilityStatus, InterpolationData, feasibility, variability_region
from schurpick.verify import run_property

z2 = blaschke(0, [0, 0])
z3 = blaschke(0, [0, 0, 0])


def props(*specs):
    """Run ``(name, samples)`` pairs; return ``{name: PropertyResult}``."""
    return {name: run_property(name, 0, n) for name, n in specs}


def summary(results):
    return ", ".join(f"{r.name} {r.max_violation:.1e}<={r.tolerance:g}" for r in results.values())


def test_criterion_1_multipoint_schwarz_pick(criterion):
    r = props(("multipoint_schwarz_pick", 1000), ("blaschke_equality", 200))
    ok = all(p.passed for p in r.values())
    criterion(1, ok, summary(r))
    assert ok


def test_criterion_2_invariance(criterion):
    r = props(("automorphism_invariance", 500))
    ok = all(p.passed for p in r.values())
    criterion(2, ok, summary(r))
    assert ok


def test_criterion_3_schur_closed_forms(criterion):
    r = props(("gamma_closed_forms", 500))
    g2 = gamma_from_taylor([0.5, 0.5, 0, 0])[1]
    exact = abs(g2 - 2 / 3) <= 1e-12
    ok = exact and all(p.passed for p in r.values())
    criterion(3, ok, f"{summary(r)}, gamma_2={g2.real!r}")
    assert ok


def test_criterion_4_peschl(criterion):
    r = props(("peschl_dual_path", 500), ("peschl_inequalities", 500))
    yz2 = yamashita_residual(z2, 0)
    tz3 = third_order_residual(z3, 0)
    ok = abs(yz2) <= 1e-8 and abs(tz3) <= 1e-8 and all(p.passed for p in r.values())
    criterion(4, ok, f"{summary(r)}, yamashita(z^2,0)={yz2:.1e}, third(z^3,0)={tz3:.1e}")
    assert ok


def test_criterion_5_value_regions(criterion):
    r = props(("region_soundness", 1000), ("region_sharpness", 200))
    d = variability_region(InterpolationData((0,), (0.5,)), 0.5)
    worked = abs(d.center - 0.4) <= 1e-12 and abs(d.radius - 0.4) <= 1e-12
    ok = worked and all(p.passed for p in r.values())
    criterion(5, ok, f"{summary(r)}, worked disk ({d.center.real!r}, {d.radius!r})")
    assert ok


def displayed_t_chain(c0, c1, c2, t):
    one = (c0 + t) / (1 + c0 * t)
    two = (c0 + (c1 + c0 * c1) * t + t**2) / (c0 * t**2 + (c1 + c0 * c1) * t + 1)
    b = c1 + c0 * c2 + c0 * c1 * c2
    c = c0 * c1 + c2 + c1 * c2
    three = (c0 + b * t + c * t**2 + t**3) / (c0 * t**3 + b * t**2 + c * t + 1)
    return one, two, three


def r1_closed(t, c1):
    return (1 + 2 * t * c1 + t**2) / (1 - t**2)


def r2_displayed(t, c1, c2):
    """The reference closed form as printed."""
    num = 1 + t * (c1 + c2 + c1 * c2) + t**2 * (c1 + c2) + t**3
    den = 1 + t * (c2 - c1 + c1 * c2) + t**2 * (c1 - c2) - t**3
    return num / den


def r2_composed(t, c1, c2):
    """R_0 o T_1 o T_2 evaluated at 1 and simplified by hand."""
    s = c1 + c2 + c1 * c2
    num = 1 + t * s + t**2 * s + t**3
    den = 1 + t * (c2 - c1 + c1 * c2) + t**2 * (c1 - c2 - c1 * c2) - t**3
    return num / den


def chain_samples(n=100, seed=6):
    rng = np.random.default_rng(seed)
    return [tuple(rng.random(4) * 0.95) for _ in range(n)]


def test_criterion_6_bound_chains(criterion):
    r = props(("modulus_chain", 500), ("distance_chain", 500))
    t_err = r1_err = r2_err = r2_disp_err = 0.0
    for c0, c1, c2, t in chain_samples():
        got = modulus_bound_chain([0] * 3, [c0, c1, c2], t).values
        want = displayed_t_chain(c0, c1, c2, t)
        t_err = max(t_err, max(abs(g - w) for g, w in zip(got, want)))
        R = distance_bound_chain([0] * 3, [c0, c1, c2], t, 0).values
        r1_err = max(r1_err, abs(R[1] - r1_closed(t, c1)) / R[1])
        r2_err = max(r2_err, abs(R[2] - r2_composed(t, c1, c2)) / R[2])
        r2_disp_err = max(r2_disp_err, abs(R[2] - r2_displayed(t, c1, c2)) / R[2])
    holding = all(p.passed for p in r.values()) and max(t_err, r1_err, r2_err) <= 1e-12
    displayed = r2_disp_err <= 1e-12
    criterion(
        6,
        holding and displayed,
        f"{summary(r)}, T-chain {t_err:.1e}, R_1 {r1_err:.1e}, R_2 corrected {r2_err:.1e}, "
        f"R_2 reference closed form off by {r2_disp_err:.2f} relative: it drops the c1*c2*t^2 "
        "terms that the composition R_0 o T_1 o T_2 produces",
    )
    assert holding


@pytest.mark.xfail(strict=True, reason="reference R_2 closed form omits the c1*c2*t^2 terms")
def test_criterion_6_reference_r2_closed_form():
    for c0, c1, c2, t in chain_samples():
        R = distance_bound_chain([0] * 3, [c0, c1, c2], t, 0).values
        assert abs(R[2] - r2_displayed(t, c1, c2)) <= 1e-12 * R[2]


def test_criterion_6_reference_r2_is_not_an_upper_bound():
    # an extremal three-parameter chain realizes the composed value, which
    # exceeds the reference closed form
    t, c1, c2 = 0.5, 0.6, 0.7
    R = distance_bound_chain([0] * 3, [0.0, c1, c2], t, 0).values[2]
    assert R == pytest.approx(r2_composed(t, c1, c2), rel=1e-12)
    assert R > r2_displayed(t, c1, c2) + 0.3


def test_criterion_7_dieudonne(criterion):
    r = props(("dieudonne_soundness", 1000), ("dieudonne_equality", 200))
    cl = dieudonne_classical_sides(z2, 0.5)
    so = dieudonne_second_order_sides(z2, 0.5)
    fp = dieudonne_fprime0_special_sides(z3, 0.5)
    ok = (
        all(abs(s - 0.25) <= 1e-12 for s in cl)
        and all(abs(s - 1 / 6) <= 1e-10 for s in so)
        and all(abs(s - 0.25) <= 1e-12 for s in fp)
        and all(p.passed for p in r.values())
    )
    criterion(7, ok, f"{summary(r)}, classical {cl}, second order {so}, f'(0) form {fp}")
    assert ok


def test_criterion_8_nevanlinna_pick(criterion):
    r = props(
        ("verdict_agreement", 1000),
        ("interpolant_roundtrip", 500),
        ("permutation_invariance", 500),
    )
    worked = {
        (0.8,): FeasibilityStatus.INFEASIBLE,
        (0.25,): FeasibilityStatus.STRICT,
        (0.5,): FeasibilityStatus.BOUNDARY,
    }
    got = {w: feasibility(InterpolationData((0, 0.5), (0,) + w)).status for w in worked}
    ok = got == worked and all(p.passed for p in r.values())
    criterion(8, ok, f"{summary(r)}, worked datasets {[s.value for s in got.values()]}")
    assert ok


def test_criterion_9_determinism(criterion):
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        code = main(["verify", "--seed", "12345", "--samples", "100"], stdout=buf)
        outs.append((code, buf.getvalue().encode()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    criterion(9, ok, f"{len(outs[0][1])} bytes, identical={outs[0] == outs[1]}")
    assert ok
