"""Peschl invariant derivatives and the sharp inequalities built on them."""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DegenerateDenominator, UnimodularValue
from .functions import PostMobius, PreAutomorphism, eval_jet, require_bounded
from .geometry import MobiusMap, check_point

__all__ = [
    "PeschlValues",
    "gamma_from_taylor",
    "peschl",
    "peschl_from_jet",
    "peschl_recentered",
    "recentered",
    "third_order_residual",
    "yamashita_residual",
]

_EPS_UNIMODULAR = 1e-12
_EPS_DEN = 1e-12


@dataclass(frozen=True)
class PeschlValues:
    d1: complex
    d2: complex
    d3: complex


def _value_jet(f, z, order):
    require_bounded(f)
    z = check_point(z)
    J = eval_jet(f, z, order)
    if abs(J.value) >= 1 - _EPS_UNIMODULAR:
        raise UnimodularValue(f"|f(z)| = {abs(J.value)!r} at z={z!r}")
    return z, J


def peschl(f, z):
    """``D_1 f(z)``, ``D_2 f(z)``, ``D_3 f(z)`` from the closed-form expressions."""
    z, J = _value_jet(f, z, 3)
    return peschl_from_jet(z, J)


def peschl_from_jet(z, J):
    """Invariant derivatives from a jet of order >= 1 about ``z``.

    Entries beyond the jet's order come back as NaN.
    """
    nan = complex("nan")
    w = J.value
    f1 = J.derivative(1)
    f2 = J.derivative(2) if J.order >= 2 else nan
    f3 = J.derivative(3) if J.order >= 3 else nan
    zc = z.conjugate()
    wc = w.conjugate()
    s = 1 - abs(z) ** 2
    q = 1 - abs(w) ** 2
    d1 = s * f1 / q
    d2 = s**2 / q * (f2 - 2 * zc * f1 / s + 2 * wc * f1**2 / q)
    d3 = s**3 / q * (
        f3
        - 6 * zc * f2 / s
        + 6 * wc * f1 * f2 / q
        + 6 * zc**2 * f1 / s**2
        - 12 * zc * wc * f1**2 / (s * q)
        + 6 * wc**2 * f1**3 / q**2
    )
    return PeschlValues(d1, d2, d3)


def recentered(f, z0):
    """The tree of ``g(t) = [f([t, -z0]), f(z0)]``, which has ``g(0) = 0``."""
    z0 = check_point(z0, name="z0")
    w0 = f(z0)
    T = MobiusMap(1, z0, z0.conjugate(), 1)
    S = MobiusMap(1, -w0, -w0.conjugate(), 1)
    return PostMobius(S, PreAutomorphism(T, f))


def peschl_recentered(f, z0, n):
    """``D_n f(z0)`` read off the Taylor series of the recentered function."""
    if not 1 <= n <= 3:
        raise ValueError("n must be 1, 2 or 3")
    z0, _ = _value_jet(f, z0, 0)
    J = eval_jet(recentered(f, z0), 0, n)
    return J.derivative(n)


def gamma_from_taylor(a):
    """Schur parameters ``gamma_1 .. gamma_4`` of ``g = a_1 z + a_2 z^2 + ...``."""
    a1, a2, a3, a4 = (complex(x) for x in a)
    s = 1 - abs(a1) ** 2
    den3 = s**2 - abs(a2) ** 2
    den4 = (
        s**3
        - s * (abs(a3) ** 2 + 2 * abs(a2) ** 2)
        + abs(a2) ** 4
        - a1 * a2.conjugate() ** 2 * a3
        - a1.conjugate() * a2**2 * a3.conjugate()
    )
    for name, d in (("1 - |a1|^2", s), ("gamma_3", den3), ("gamma_4", den4)):
        if abs(d) <= _EPS_DEN:
            raise DegenerateDenominator(f"denominator of {name} vanishes")
    g3 = (a3 * s + a1.conjugate() * a2**2) / den3
    g4 = (
        a4 * den3
        + 2 * a1.conjugate() * a2 * a3 * s
        + a1.conjugate() ** 2 * a2**3
        + a2.conjugate() * a3**2
    ) / den4
    return [a1, a2 / s, g3, g4]


def yamashita_residual(f, z):
    """``2 (1 - |D_1 f|^2) - |D_2 f|``; non-negative, zero for Blaschke degree <= 2."""
    p = peschl(f, z)
    return 2 * (1 - abs(p.d1) ** 2) - abs(p.d2)


def third_order_residual(f, z):
    """Slack in the third-order invariant-derivative inequality."""
    p = peschl(f, z)
    s = 1 - abs(p.d1) ** 2
    h = p.d2 / 2
    return s**2 - abs(p.d3 / 6 * s + p.d1.conjugate() * h**2) - abs(h) ** 2

