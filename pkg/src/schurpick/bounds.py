"""Sharpened bounds for bounded analytic functions.

Value regions from the Moebius maps ``A_j``, the monotone chains of modulus
and distance bounds built from ``T_j``, and the Dieudonne-type inequalities.
Residual functions return signed slack (right-hand side minus left-hand
side) so callers can test margins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .exceptions import GammaOutOfRange, HypothesisViolated, InconsistentData
from .functions import eval_jet, require_bounded
from .geometry import ClosedDisk, MobiusMap, bracket, check_point, disk_image
from .hdq import EPS_UNI
from .jets import Jet
from .peschl import peschl_from_jet

__all__ = [
    "BoundChain",
    "DistanceChain",
    "dieudonne_classical_sides",
    "dieudonne_fprime0_residual",
    "dieudonne_fprime0_sides",
    "dieudonne_fprime0_special_sides",
    "dieudonne_region",
    "dieudonne_second_order_gform_residual",
    "dieudonne_second_order_residual",
    "dieudonne_second_order_sides",
    "distance_bound_chain",
    "modulus_bound_chain",
    "region_maps",
    "two_sided_modulus_bounds",
    "value_region",
]

# radii below this are reported as exactly 0
RADIUS_FLOOR = 1e-12
_EPS_ZERO = 1e-12


@dataclass(frozen=True)
class BoundChain:
    """``T_0(1) >= (T_0 o T_1)(1) >= ...``, each an upper bound for ``|f(a)|``."""

    values: Tuple[float, ...]
    nodes_used: Tuple[complex, ...]
    gammas_used: Tuple[complex, ...]


@dataclass(frozen=True)
class DistanceChain:
    """``R_0(1) >= R_1(1) >= ...``, upper bounds for ``exp d(f(z), f(z0))``."""

    values: Tuple[float, ...]


def _prepare(nodes, gammas, last_may_touch):
    nodes = tuple(check_point(z, name="node") for z in nodes)
    gammas = tuple(complex(g) for g in gammas)
    if not nodes or len(nodes) != len(gammas):
        raise ValueError("need equally many (>= 1) nodes and gammas")
    for j, g in enumerate(gammas):
        r = abs(g)
        last = j == len(gammas) - 1
        if last and last_may_touch:
            if r > 1 + EPS_UNI:
                raise GammaOutOfRange(f"|gamma_{j}| = {r!r} > 1")
        elif r >= 1:
            raise GammaOutOfRange(f"|gamma_{j}| = {r!r} must be < 1")
    return nodes, gammas


def _t_map(tau, gamma):
    t, c = abs(tau), abs(gamma)
    return lambda x: (t * x + c) / (1 + t * c * x)


def region_maps(nodes, gammas, a):
    """The maps ``A_j(x) = (tau_j x + gamma_j) / (1 + conj(gamma_j) tau_j x)``."""
    a = check_point(a, name="a")
    out = []
    for z, g in zip(nodes, gammas):
        tau = bracket(a, z)
        out.append(MobiusMap(tau, g, g.conjugate() * tau, 1))
    return out


def value_region(nodes, gammas, a):
    """Closed disk ``(A_0 o ... o A_n)(closed disk)`` containing ``f(a)``.

    If ``a`` coincides with a node the region collapses to the forced value.
    A unimodular last parameter gives a point region with
    ``interior_refinement=False``.
    """
    nodes, gammas = _prepare(nodes, gammas, last_may_touch=True)
    a = check_point(a, name="a")
    touch = abs(gammas[-1]) >= 1 - EPS_UNI
    M = MobiusMap.identity()
    for z, A, g in zip(nodes, region_maps(nodes, gammas, a), gammas):
        if A.a == 0:
            return ClosedDisk(M(g), 0.0, interior_refinement=not touch)
        M = M @ A
    img = disk_image(M)
    radius = img.radius if img.radius >= RADIUS_FLOOR else 0.0
    return ClosedDisk(img.center, radius, interior_refinement=not touch)


def modulus_bound_chain(nodes, gammas, a):
    """``[T_0(1), (T_0 o T_1)(1), ..., (T_0 o ... o T_n)(1)]``."""
    nodes, gammas = _prepare(nodes, gammas, last_may_touch=False)
    a = check_point(a, name="a")
    maps = [_t_map(bracket(a, z), g) for z, g in zip(nodes, gammas)]
    values = []
    for k in range(len(maps)):
        x = 1.0
        for T in reversed(maps[: k + 1]):
            x = T(x)
        values.append(x)
    return BoundChain(tuple(values), nodes, gammas)


def distance_bound_chain(nodes, gammas, z, z0):
    """``[R_0(1), ..., R_n(1)]`` with ``R_k = R_0 o T_1 o ... o T_k``.

    ``nodes[0]`` must be ``z0``.
    """
    nodes, gammas = _prepare(nodes, gammas, last_may_touch=False)
    z = check_point(z, name="z")
    z0 = check_point(z0, name="z0")
    if nodes[0] != z0:
        raise ValueError("the first node must be z0")
    t0 = abs(bracket(z, z0))
    maps = [_t_map(bracket(z, zj), g) for zj, g in zip(nodes, gammas)]
    values = []
    for k in range(len(maps)):
        x = 1.0
        for T in reversed(maps[1 : k + 1]):
            x = T(x)
        values.append((1 + t0 * x) / (1 - t0 * x))
    return DistanceChain(tuple(values))


def two_sided_modulus_bounds(gamma0, tau0, f1_at_z=None):
    """Lower and upper bounds for ``|f(z)|`` given ``f(z0)`` and ``[z, z0]``.

    With ``f1_at_z`` (the difference quotient of ``f`` about ``z0`` evaluated
    at ``z``) the bounds are sharp; without it the worst case ``|f1| = 1`` is
    used and the lower bound is clipped at 0.
    """
    g = abs(check_point(gamma0, name="gamma0"))
    t = abs(check_point(tau0, name="tau0"))
    if f1_at_z is None:
        lower = max((g - t) / (1 - t * g), 0.0)
        upper = (g + t) / (1 + t * g)
        return lower, upper
    u = t * abs(check_point(f1_at_z, closed=True, name="f1_at_z"))
    lower = abs(g - u) / (1 - u * g)
    upper = (g + u) / (1 + u * g)
    return lower, upper


def dieudonne_region(z0, w0, z, w):
    """Disk of admissible ``f'(z)`` given ``f(z0) = w0`` and ``f(z) = w``."""
    z0 = check_point(z0, name="z0")
    w0 = check_point(w0, name="w0")
    z = check_point(z, name="z")
    w = check_point(w, name="w")
    if z == z0:
        raise ValueError("z must differ from z0")
    rho_z = abs(bracket(z, z0))
    rho_w = abs(bracket(w, w0))
    if rho_w > rho_z + 1e-9:
        raise InconsistentData(
            f"|[w, w0]| = {rho_w!r} exceeds |[z, z0]| = {rho_z!r}"
        )
    q0 = 1 - abs(w0) ** 2
    center = (
        (w - w0) / (z - z0)
        * (1 - w0.conjugate() * w) / q0
        * (1 - abs(z0) ** 2) / (1 - z0.conjugate() * z)
    )
    radius = (
        abs(1 - w0.conjugate() * w) ** 2 / q0 * rho_z
        - abs(w - w0) ** 2 / q0 / rho_z
    ) / (1 - abs(z) ** 2)
    return ClosedDisk(center, max(radius, 0.0))


def _origin_jets(f, z, order):
    require_bounded(f)
    z = check_point(z, name="z")
    if z == 0:
        raise HypothesisViolated("z must be non-zero")
    J0 = eval_jet(f, 0j, 1)
    if abs(J0.value) > _EPS_ZERO:
        raise HypothesisViolated(f"f(0) = {J0.value!r} is not 0")
    return z, J0, eval_jet(f, z, order)


def dieudonne_classical_sides(f, z):
    """``(|z f'(z) - f(z)|, (|z|^2 - |f(z)|^2) / (1 - |z|^2))`` for ``f(0) = 0``."""
    z, _, J = _origin_jets(f, z, 1)
    w, d = J.value, J.derivative(1)
    return abs(z * d - w), (abs(z) ** 2 - abs(w) ** 2) / (1 - abs(z) ** 2)


def _second_order_check(J0, J, z):
    if abs(J0.derivative(1)) >= 1 - EPS_UNI:
        raise HypothesisViolated("f is a disk automorphism")
    if abs(J.value) >= abs(z):
        raise HypothesisViolated("|f(z)| must be smaller than |z|")


def dieudonne_second_order_sides(f, z):
    """Both sides of the second-order Dieudonne inequality (``f(0) = 0``)."""
    z, J0, J = _origin_jets(f, z, 2)
    _second_order_check(J0, J, z)
    w, d1, d2 = J.value, J.derivative(1), J.derivative(2)
    r2 = abs(z) ** 2
    e = z * d1 - w
    gap = r2 - abs(w) ** 2
    lhs = abs(z**2 * d2 / 2 - e / (1 - r2) + w.conjugate() * e**2 / gap)
    lhs += abs(z) * abs(e) ** 2 / gap
    rhs = abs(z) * gap / (1 - r2) ** 2
    return lhs, rhs


def dieudonne_second_order_residual(f, z):
    lhs, rhs = dieudonne_second_order_sides(f, z)
    return rhs - lhs


def dieudonne_second_order_gform_residual(f, z):
    """``1 - |D_2 g(z)| / 2 - |D_1 g(z)|^2`` for ``g = f / z``.

    Vanishes exactly when the second-order Dieudonne inequality is an equality.
    """
    z, J0, J = _origin_jets(f, z, 3)
    _second_order_check(J0, J, z)
    G = J / Jet.var(z, 3)
    p = peschl_from_jet(z, G)
    return 1 - abs(p.d2) / 2 - abs(p.d1) ** 2


def dieudonne_fprime0_sides(f, z):
    """Both sides of the refinement of Dieudonne's lemma involving ``f'(0)``."""
    z, J0, J = _origin_jets(f, z, 1)
    b = J0.derivative(1)
    w, d = J.value, J.derivative(1)
    u = w / z
    lhs = abs(d * (1 - abs(b) ** 2) - 2 * u + b.conjugate() * u**2 + b)
    rhs = (abs(z - b.conjugate() * w) ** 2 - abs(u - b) ** 2) / (1 - abs(z) ** 2)
    return lhs, rhs


def dieudonne_fprime0_residual(f, z):
    lhs, rhs = dieudonne_fprime0_sides(f, z)
    return rhs - lhs


def dieudonne_fprime0_special_sides(f, z):
    """The ``f'(0) = 0`` form: ``|f' - 2f/z|`` against its bound."""
    z, J0, J = _origin_jets(f, z, 1)
    if abs(J0.derivative(1)) > _EPS_ZERO:
        raise HypothesisViolated("f'(0) is not 0")
    w, d = J.value, J.derivative(1)
    r2 = abs(z) ** 2
    return abs(d - 2 * w / z), (r2**2 - abs(w) ** 2) / (r2 * (1 - r2))
