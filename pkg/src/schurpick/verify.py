"""Seeded property suite.

Each property draws from its own generator ``default_rng([seed, index])`` so
results do not depend on which properties run or in what order. A property
returns the largest violation it saw; it passes when that is at most its
tolerance. Tolerances can be overridden by property name, or all at once via
the name ``all``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

import numpy as np

from .bounds import (
    dieudonne_region,
    distance_bound_chain,
    modulus_bound_chain,
    value_region,
)
from .exceptions import VerdictDisagreement
from .functions import (
    Jet,
    automorphism_fn,
    eval_jet,
    post_mobius,
    pre_automorphism,
    random_automorphism,
    random_blaschke,
    random_disk_point,
    random_schur_fn,
    schur_chain,
)
from .geometry import MobiusMap, bracket, disk_image, hyperbolic_distance
from .hdq import UnimodularInnerWarning, delta, gamma_sequence, iterated, schur_classic
from .jets import jet_div
from .peschl import (
    gamma_from_taylor,
    peschl,
    peschl_recentered,
    third_order_residual,
    yamashita_residual,
)
from .pick import (
    FeasibilityStatus,
    InterpolationData,
    construct_interpolant,
    feasibility,
    variability_region,
)

__all__ = ["PROPERTIES", "Property", "PropertyResult", "VerifyReport", "run_property", "run_suite"]

# node and query points stay inside this radius
CAP = 0.9
GAMMA_CAP = 0.9
# zeros and points for equality cases, where conditioning is worst
BLASCHKE_CAP = 0.8


@dataclass(frozen=True)
class Property:
    name: str
    tolerance: float
    check: Callable
    description: str


@dataclass(frozen=True)
class PropertyResult:
    name: str
    tolerance: float
    max_violation: float
    samples: int

    @property
    def passed(self):
        return self.max_violation <= self.tolerance

    def as_dict(self):
        return {
            "name": self.name,
            "tolerance": self.tolerance,
            "max_violation": self.max_violation,
            "samples": self.samples,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class VerifyReport:
    seed: int
    samples: int
    jet_order: int
    results: Tuple[PropertyResult, ...] = field(default_factory=tuple)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def as_dict(self):
        return {
            "seed": self.seed,
            "samples": self.samples,
            "jet_order": self.jet_order,
            "passed": self.passed,
            "properties": [r.as_dict() for r in self.results],
        }


# -- sampling helpers ----------------------------------------------------------


def _pt(rng, cap=CAP):
    return random_disk_point(rng, cap)


def _schur_fn(rng, depth=None):
    """Random non-Blaschke function synthesized at random nodes."""
    if depth is None:
        depth = int(rng.integers(0, 4))
    nodes = [_pt(rng, 0.8) for _ in range(depth + 1)]
    return random_schur_fn(rng, depth, GAMMA_CAP, nodes=nodes)


def _nodes_with_repeats(rng, j):
    pool = [_pt(rng) for _ in range(2)]
    return [pool[int(i)] for i in rng.integers(0, 2, size=j)]


def _distinct_nodes(rng, n):
    return [_pt(rng) for _ in range(n)]


def _rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


def _quiet(fn):
    def wrapped(rng, n, order):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UnimodularInnerWarning)
            return fn(rng, n, order)

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


# -- geometry --------------------------------------------------------------------


def _bracket_invariance(rng, n, order):
    worst = 0.0
    for _ in range(n):
        T = random_automorphism(rng)
        z, w = _pt(rng), _pt(rng)
        worst = max(worst, abs(abs(bracket(T(z), T(w))) - abs(bracket(z, w))))
    return worst


def _bracket_roundtrip(rng, n, order):
    worst = 0.0
    for _ in range(n):
        z, z0 = _pt(rng), _pt(rng)
        w = bracket(z, z0)
        worst = max(worst, abs(bracket(w, -z0) - z))
    return worst


def _disk_image(rng, n, order):
    worst = 0.0
    for _ in range(n):
        while True:
            a, b, c, d = (complex(*rng.normal(size=2)) for _ in range(4))
            if abs(c) < 0.9 * abs(d) and abs(a * d - b * c) > 1e-3:
                break
        M = MobiusMap(a, b, c, d)
        img = disk_image(M)
        pts = random_disk_point(rng, 1.0, 1000)
        edge = np.exp(2j * np.pi * rng.random(1000))
        out = max(abs(M(complex(p)) - img.center) - img.radius for p in pts)
        near = min(abs(abs(M(complex(p)) - img.center) - img.radius) for p in edge)
        # at least one boundary sample must land within 1e-6 of the circle
        worst = max(worst, out, near - 1e-6 + 1e-10)
    return max(worst, 0.0)


def _triangle(rng, n, order):
    worst = 0.0
    for _ in range(n):
        x, y, z = _pt(rng), _pt(rng), _pt(rng)
        d = hyperbolic_distance
        worst = max(worst, d(x, z) - d(x, y) - d(y, z))
    return max(worst, 0.0)


# -- jets and functions -------------------------------------------------------------


def _random_jet(rng, order, base=0j):
    return Jet(base, rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1))


def _jet_ring(rng, n, order):
    worst = 0.0
    for _ in range(n):
        k = int(rng.integers(0, order + 1))
        x, y, z = (_random_jet(rng, k) for _ in range(3))
        e1 = ((x * y) * z - x * (y * z)).coeffs
        e2 = (x * (y + z) - (x * y + x * z)).coeffs
        scale = max(1.0, float(np.max(np.abs((x * y * z).coeffs))))
        worst = max(worst, float(np.max(np.abs(e1))) / scale, float(np.max(np.abs(e2))) / scale)
    return worst


def _jet_div(rng, n, order):
    worst = 0.0
    for _ in range(n):
        k = int(rng.integers(0, order + 1))
        x = _random_jet(rng, k)
        y = _random_jet(rng, k)
        y.c[0] = complex(2.0 + rng.random(), 0.0)
        back = jet_div(x * y, y)
        worst = max(worst, float(np.max(np.abs(back.coeffs - x.coeffs))))
    return worst


def _finite_difference(rng, n, order):
    """Jet coefficients m <= 3 against Richardson-extrapolated central differences.

    The third difference uses a wider step; at 1e-4 its rounding error alone
    is about 1e-4.
    """
    h = 1e-4
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        z = _pt(rng, 0.7)
        J = eval_jet(f, z, max(order, 3))

        def d_est(m, step):
            # central differences of order m along the real axis
            if m == 1:
                return (f(z + step) - f(z - step)) / (2 * step)
            if m == 2:
                return (f(z + step) - 2 * f(z) + f(z - step)) / step**2
            return (f(z + 2 * step) - 2 * f(z + step) + 2 * f(z - step) - f(z - 2 * step)) / (
                2 * step**3
            )

        for m in (1, 2, 3):
            step = h if m < 3 else 2e-3
            est = (4 * d_est(m, step / 2) - d_est(m, step)) / 3
            worst = max(worst, _rel(est, J.derivative(m)))
    return worst


def _max_principle(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng) if rng.random() < 0.5 else random_blaschke(rng, int(rng.integers(1, 4)))
        worst = max(worst, abs(f(_pt(rng, 0.99))) - 1)
    return max(worst, 0.0)


def _blaschke_boundary(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = random_blaschke(rng, int(rng.integers(0, 5)))
        # evaluate on the circle through the jet substrate, bypassing check_point
        z = cmath.exp(2j * math.pi * rng.random())
        worst = max(worst, abs(abs(f._jet(z, 0).value) - 1))
    return worst


# -- difference quotients ----------------------------------------------------------


@_quiet
def _multipoint_sp(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        j = int(rng.integers(1, 5))
        nodes = _nodes_with_repeats(rng, j)
        z = nodes[0] if rng.random() < 0.1 else _pt(rng)
        worst = max(worst, abs(iterated(f, nodes)(z)) - 1)
    return max(worst, 0.0)


@_quiet
def _blaschke_equality(rng, n, order):
    """Zeros and points within radius 0.8.

    Each quotient amplifies rounding by about ``1 / (1 - |gamma|^2)``; with
    radius 0.9 a few samples per thousand chain parameters above 0.999 and
    lose enough digits to exceed 1e-8.
    """
    worst = 0.0
    for _ in range(n):
        j = int(rng.integers(1, 5))
        f = random_blaschke(rng, j, zero_cap=BLASCHKE_CAP)
        pool = [_pt(rng, BLASCHKE_CAP) for _ in range(2)]
        nodes = [pool[int(i)] for i in rng.integers(0, 2, size=j)]
        worst = max(worst, abs(abs(iterated(f, nodes)(_pt(rng, BLASCHKE_CAP))) - 1))
    return worst


@_quiet
def _invariance(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        S, T = random_automorphism(rng), random_automorphism(rng)
        g = post_mobius(S, pre_automorphism(T, f))
        j = int(rng.integers(1, 4))
        nodes = _nodes_with_repeats(rng, j)
        z = _pt(rng)
        lhs = abs(iterated(g, nodes)(z))
        rhs = abs(iterated(f, [T(x) for x in nodes])(T(z)))
        worst = max(worst, abs(lhs - rhs))
    return worst


@_quiet
def _chain_rule(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        T = random_automorphism(rng)
        z0, z = _pt(rng), _pt(rng)
        lhs = delta(pre_automorphism(T, f), z0)(z)
        rhs = delta(f, T(z0))(T(z)) * delta(automorphism_fn(T), z0)(z)
        worst = max(worst, abs(lhs - rhs))
    return worst


@_quiet
def _distance_contraction(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        j = int(rng.integers(0, 4))
        nodes = _nodes_with_repeats(rng, j + 1)
        fj = iterated(f, nodes[:j])
        z, zj = _pt(rng), nodes[j]
        gap = hyperbolic_distance(fj(z), fj(zj)) - hyperbolic_distance(z, zj)
        worst = max(worst, gap)
    return max(worst, 0.0)


@_quiet
def _node_coincidence(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        z0, z = _pt(rng, 0.8), _pt(rng)
        near = abs(iterated(f, [z0, z0 + 1e-6])(z))
        same = abs(iterated(f, [z0, z0])(z))
        worst = max(worst, abs(near - same))
    return worst


# -- Peschl derivatives and Schur closed forms ------------------------------------------


def _peschl_dual(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        z = _pt(rng)
        p = peschl(f, z)
        for k, d in enumerate((p.d1, p.d2, p.d3), start=1):
            worst = max(worst, _rel(d, peschl_recentered(f, z, k)))
    return worst


def _yamashita(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        z = _pt(rng)
        worst = max(worst, -yamashita_residual(f, z), -third_order_residual(f, z))
    return max(worst, 0.0)


def _gamma_closed_forms(rng, n, order):
    worst = 0.0
    for _ in range(n):
        depth = int(rng.integers(1, 5))
        gammas = [0j] + [_pt(rng, GAMMA_CAP) for _ in range(depth)]
        g = schur_chain([0j] * (depth + 1), gammas, _pt(rng, GAMMA_CAP))
        a = eval_jet(g, 0j, 4).c[1:5]
        closed = gamma_from_taylor(a)
        iterative = schur_classic(g, 4).gammas[1:5]
        worst = max(worst, max(_rel(x, y) for x, y in zip(closed, iterative)))
    return worst


# -- bounds ------------------------------------------------------------------------


def _region_soundness(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        nodes = _distinct_nodes(rng, int(rng.integers(1, 5)))
        a = _pt(rng)
        s = gamma_sequence(f, nodes)
        worst = max(worst, value_region(nodes, s.gammas, a).excess(f(a)))
    return max(worst, 0.0)


def _region_sharpness(rng, n, order):
    worst = 0.0
    for _ in range(n):
        k = int(rng.integers(1, 5))
        nodes = _distinct_nodes(rng, k)
        gammas = [_pt(rng, GAMMA_CAP) for _ in range(k)]
        f = schur_chain(nodes, gammas, cmath.exp(2j * math.pi * rng.random()))
        a = _pt(rng)
        worst = max(worst, abs(value_region(nodes, gammas, a).excess(f(a))))
    return worst


def _modulus_chain(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        nodes = _nodes_with_repeats(rng, int(rng.integers(1, 5)))
        a = _pt(rng)
        s = gamma_sequence(f, nodes)
        v = modulus_bound_chain(nodes, s.gammas, a).values
        region = value_region(nodes, s.gammas, a)
        worst = max(
            worst,
            max((v[i + 1] - v[i] for i in range(len(v) - 1)), default=0.0),
            abs(f(a)) - v[-1],
            region.sup_modulus - v[-1],
        )
    return max(worst, 0.0)


def _distance_chain(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        nodes = _nodes_with_repeats(rng, int(rng.integers(1, 5)))
        z0, z = nodes[0], _pt(rng)
        s = gamma_sequence(f, nodes)
        v = distance_bound_chain(nodes, s.gammas, z, z0).values
        actual = math.exp(hyperbolic_distance(f(z), f(z0)))
        worst = max(
            worst,
            max(((v[i + 1] - v[i]) / v[i] for i in range(len(v) - 1)), default=0.0),
            (actual - v[-1]) / v[-1],
        )
    return max(worst, 0.0)


def _dieudonne_soundness(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = _schur_fn(rng)
        z0, z = _pt(rng), _pt(rng)
        J = eval_jet(f, z, 1)
        region = dieudonne_region(z0, f(z0), z, J.value)
        worst = max(worst, region.excess(J.derivative(1)))
    return max(worst, 0.0)


def _dieudonne_equality(rng, n, order):
    worst = 0.0
    for _ in range(n):
        f = random_blaschke(rng, int(rng.integers(1, 3)))
        z0, z = _pt(rng), _pt(rng)
        J = eval_jet(f, z, 1)
        region = dieudonne_region(z0, f(z0), z, J.value)
        worst = max(worst, abs(region.excess(J.derivative(1))))
    return worst


def _raw_bracket(z, w):
    return (z - w) / (1 - w.conjugate() * z)


def _two_point_second_quotients(z0, w0, z, w, d):
    """``|f_2(z; z0, z)|`` and ``|f_2(z0; z, z)|`` from ``f(z0), f(z), f'(z)``.

    ``d`` is a candidate for ``f'(z)`` and may be inadmissible, so brackets
    are taken without the disk checks.
    """
    hd = d * (1 - abs(z) ** 2) / (1 - abs(w) ** 2)
    u = bracket(w, w0)
    v = bracket(z, z0)
    du = d * (1 - abs(w0) ** 2) / (1 - w0.conjugate() * w) ** 2
    dv = (1 - abs(z0) ** 2) / (1 - z0.conjugate() * z) ** 2
    f1 = u / v
    df1 = (du * v - u * dv) / v**2
    first = abs(df1 * (1 - abs(z) ** 2) / (1 - abs(f1) ** 2))
    g1_z0 = bracket(w0, w) / bracket(z0, z)
    second = abs(_raw_bracket(g1_z0, hd) / bracket(z0, z))
    return first, second


def _dieudonne_three_way(rng, n, order):
    """Count of samples where the three equivalent tests disagree away from the boundary."""
    bad = 0
    for _ in range(n):
        f = _schur_fn(rng)
        z0, z = _pt(rng, 0.8), _pt(rng, 0.8)
        w0, w = f(z0), f(z)
        region = dieudonne_region(z0, w0, z, w)
        d = region.center + region.radius * 1.5 * _pt(rng, 1.0)
        m = region.excess(d) / max(region.radius, 1e-300)
        if abs(m) < 1e-6:
            continue
        a, b = _two_point_second_quotients(z0, w0, z, w, d)
        if abs(a - 1) < 1e-6 or abs(b - 1) < 1e-6:
            continue
        inside = m <= 0
        if (a <= 1) != inside or (b <= 1) != inside:
            bad += 1
    return float(bad)


# -- interpolation ---------------------------------------------------------------------


def _sampled_data(rng, n_max=5):
    n = int(rng.integers(1, n_max + 1))
    f = _schur_fn(rng)
    z = _distinct_nodes(rng, n)
    return InterpolationData(tuple(z), tuple(f(x) for x in z))


def _interpolant_roundtrip(rng, n, order):
    worst = 0.0
    for _ in range(n):
        data = _sampled_data(rng)
        g = construct_interpolant(data, _pt(rng, 1.0))
        a = _pt(rng)
        worst = max(
            worst,
            max(abs(g(x) - y) for x, y in zip(data.z, data.w)),
            variability_region(data, a).excess(g(a)),
        )
    return max(worst, 0.0)


def _permutation_invariance(rng, n, order):
    worst = 0.0
    for _ in range(n):
        data = _sampled_data(rng)
        a = _pt(rng)
        r1 = variability_region(data, a)
        r2 = variability_region(data.permuted(rng.permutation(len(data))), a)
        worst = max(worst, abs(r1.center - r2.center), abs(r1.radius - r2.radius))
    return worst


def _verdict_dataset(rng, i):
    n = int(rng.integers(1, 6))
    z = _distinct_nodes(rng, n)
    kind = i % 3
    if kind == 0:
        f = _schur_fn(rng)
    else:
        f = random_blaschke(rng, int(rng.integers(0, n)))
    w = [f(x) for x in z]
    if kind == 2:
        w = [x + 0.2 * complex(*(rng.random(2) - 0.5)) for x in w]
        w = [x if abs(x) <= 1 else x / abs(x) for x in w]
    return InterpolationData(tuple(z), tuple(w))


def _verdict_agreement(rng, n, order):
    """Count of datasets on which the two feasibility tests disagree."""
    bad = 0
    for i in range(n):
        try:
            feasibility(_verdict_dataset(rng, i))
        except VerdictDisagreement:
            bad += 1
    return float(bad)


def _region_exhaustive(rng, n, order):
    """Count of region-boundary extensions not classified as boundary feasible."""
    bad = 0
    for _ in range(n):
        data = _sampled_data(rng, 4)
        a = _pt(rng)
        region = variability_region(data, a)
        b = region.center + region.radius * cmath.exp(2j * math.pi * rng.random())
        if abs(b) > 1:
            b /= abs(b)
        try:
            v = feasibility(data.extended(a, b))
        except VerdictDisagreement:
            bad += 1
            continue
        bad += v.status is not FeasibilityStatus.BOUNDARY
    return float(bad)


PROPERTIES = (
    Property("bracket_invariance", 1e-12, _bracket_invariance, "|[Tz, Tw]| = |[z, w]| for automorphisms T"),
    Property("bracket_roundtrip", 1e-12, _bracket_roundtrip, "w = [z, z0] inverts to z = [w, -z0]"),
    Property("disk_image", 1e-10, _disk_image, "disk_image against sampled images"),
    Property("triangle_inequality", 1e-12, _triangle, "hyperbolic distance is a metric"),
    Property("jet_ring_axioms", 1e-12, _jet_ring, "associativity and distributivity of jets"),
    Property("jet_division", 1e-11, _jet_div, "(x y) / y = x"),
    Property("jet_finite_difference", 1e-5, _finite_difference, "jets against finite differences"),
    Property("maximum_principle", 1e-12, _max_principle, "|f| <= 1 inside the disk"),
    Property("blaschke_boundary", 1e-9, _blaschke_boundary, "|B| = 1 on the circle"),
    Property("multipoint_schwarz_pick", 1e-9, _multipoint_sp, "|f_j(z)| <= 1 with repeated nodes"),
    Property("blaschke_equality", 1e-8, _blaschke_equality, "f_j unimodular for degree-j Blaschke f"),
    Property("automorphism_invariance", 1e-8, _invariance, "|(S f T)_j| = |f_j| at T-images"),
    Property("chain_rule", 1e-9, _chain_rule, "difference quotient of a composition"),
    Property("distance_contraction", 1e-9, _distance_contraction, "f_j decreases hyperbolic distance"),
    Property("node_coincidence", 1e-4, _node_coincidence, "nearly equal nodes against equal nodes"),
    Property("peschl_dual_path", 1e-8, _peschl_dual, "closed-form D_n against recentering"),
    Property("peschl_inequalities", 1e-9, _yamashita, "second and third order residuals >= 0"),
    Property("gamma_closed_forms", 1e-8, _gamma_closed_forms, "gamma_from_taylor against the iteration"),
    Property("region_soundness", 1e-9, _region_soundness, "f(a) lies in its value region"),
    Property("region_sharpness", 1e-8, _region_sharpness, "unimodular terminals reach the boundary"),
    Property("modulus_chain", 1e-9, _modulus_chain, "T-chain monotone and above |f(a)|"),
    Property("distance_chain", 1e-9, _distance_chain, "R-chain monotone and above exp d"),
    Property("dieudonne_soundness", 1e-9, _dieudonne_soundness, "f'(z) lies in the derivative disk"),
    Property("dieudonne_equality", 1e-8, _dieudonne_equality, "degree <= 2 Blaschke on the boundary"),
    Property("dieudonne_three_way", 0.0, _dieudonne_three_way, "three equivalent derivative tests"),
    Property("interpolant_roundtrip", 1e-10, _interpolant_roundtrip, "interpolants hit data, stay in regions"),
    Property("permutation_invariance", 1e-8, _permutation_invariance, "regions ignore data order"),
    Property("verdict_agreement", 0.0, _verdict_agreement, "Pick matrix and Schur recursion agree"),
    Property("region_exhaustive", 0.0, _region_exhaustive, "boundary values give boundary-feasible data"),
)

_BY_NAME: Dict[str, int] = {p.name: i for i, p in enumerate(PROPERTIES)}


def resolve_tolerances(overrides):
    """Effective tolerance per property after applying ``overrides``."""
    overrides = dict(overrides or {})
    unknown = set(overrides) - set(_BY_NAME) - {"all"}
    if unknown:
        raise KeyError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
    base = overrides.get("all")
    out = {}
    for p in PROPERTIES:
        tol = p.tolerance if base is None else float(base)
        out[p.name] = float(overrides.get(p.name, tol))
    return out


def run_property(name, seed, samples, jet_order=8, tolerance=None):
    i = _BY_NAME[name]
    p = PROPERTIES[i]
    rng = np.random.default_rng([int(seed), i])
    v = float(p.check(rng, int(samples), int(jet_order)))
    tol = p.tolerance if tolerance is None else float(tolerance)
    return PropertyResult(p.name, tol, v, int(samples))


def run_suite(seed=0, samples=200, jet_order=8, tolerances=None, only=None):
    """Run every property (or those named in ``only``) and collect the results."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    tols = resolve_tolerances(tolerances)
    names = [p.name for p in PROPERTIES] if only is None else list(only)
    results = tuple(
        run_property(name, seed, samples, jet_order, tols[name]) for name in names
    )
    return VerifyReport(int(seed), int(samples), int(jet_order), results)
