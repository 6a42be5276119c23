"""Unit-disk geometry: the bracket ``[z, w]``, hyperbolic distance, Moebius maps.

Points of the disk are plain Python ``complex`` values; :func:`check_point`
validates them where a contract requires it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DegenerateBracket,
    DegenerateMap,
    OutsideDisk,
    PoleHit,
    UnboundedImage,
)

__all__ = [
    "EPS_MEM",
    "ClosedDisk",
    "MobiusMap",
    "bracket",
    "check_point",
    "disk_image",
    "hyperbolic_distance",
    "mobius_apply",
    "mobius_compose",
    "mobius_inverse",
]

# absolute slack for closed-disk membership
EPS_MEM = 1e-9
# |z| <= 1 + _CLOSED_SLACK counts as a point of the closed disk
_CLOSED_SLACK = 1e-12


def check_point(z, closed=False, name="z"):
    """Return ``z`` as a complex number after checking it lies in the disk.

    Parameters
    ----------
    z : complex-like
    closed : bool
        Admit ``|z| <= 1`` instead of ``|z| < 1``.
    name : str
        Used in the error message.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise OutsideDisk(f"{name} is not finite: {z!r}")
    r = abs(z)
    if closed:
        if r > 1.0 + _CLOSED_SLACK:
            raise OutsideDisk(f"{name}={z!r} lies outside the closed unit disk")
    elif r >= 1.0:
        raise OutsideDisk(f"{name}={z!r} lies outside the open unit disk")
    return z


def bracket(z, w):
    """The disk bracket ``(z - w) / (1 - conj(w) z)``.

    Both arguments may lie on the closed disk. For ``z == w`` (bitwise) the
    result is 0 even on the unit circle.
    """
    z = check_point(z, closed=True, name="z")
    w = check_point(w, closed=True, name="w")
    if z == w:
        return 0j
    den = 1.0 - w.conjugate() * z
    if den == 0:
        raise DegenerateBracket(f"[{z!r}, {w!r}] is undefined on the unit circle")
    return (z - w) / den


def hyperbolic_distance(z, w):
    """Hyperbolic distance ``log((1 + |[z,w]|) / (1 - |[z,w]|))``."""
    z = check_point(z, name="z")
    w = check_point(w, name="w")
    return 2.0 * math.atanh(abs(bracket(z, w)))


@dataclass(frozen=True)
class ClosedDisk:
    """Closed disk ``{w : |w - center| <= radius}``; radius 0 is a point.

    ``interior_refinement`` is False when a region was built from a unimodular
    last parameter, so only closed-disk membership is meaningful.
    """

    center: complex
    radius: float
    interior_refinement: bool = True

    def __post_init__(self):
        if not self.radius >= 0:
            raise ValueError(f"radius must be >= 0, got {self.radius!r}")
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))

    def excess(self, w):
        """Signed distance of ``w`` beyond the boundary circle."""
        return abs(complex(w) - self.center) - self.radius

    def contains(self, w, tol=EPS_MEM):
        return self.excess(w) <= tol

    def boundary_points(self, n):
        theta = 2.0 * np.pi * np.arange(n) / n
        return self.center + self.radius * np.exp(1j * theta)

    @property
    def sup_modulus(self):
        return abs(self.center) + self.radius


@dataclass(frozen=True)
class MobiusMap:
    """The map ``x -> (a x + b) / (c x + d)``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for k in "abcd":
            v = complex(getattr(self, k))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"coefficient {k} is not finite")
            object.__setattr__(self, k, v)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def automorphism(cls, theta, a):
        """``x -> exp(i theta) [x, a]``."""
        a = check_point(a, name="a")
        u = cmath.exp(1j * theta)
        return cls(u, -u * a, -a.conjugate(), 1)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def nondegenerate(self):
        return abs(self.det) > 0

    def matrix(self):
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def __call__(self, x):
        x = complex(x)
        den = self.c * x + self.d
        if den == 0:
            raise PoleHit(f"pole of {self!r} hit at {x!r}")
        return (self.a * x + self.b) / den

    def __matmul__(self, other):
        return mobius_compose(self, other)

    def inverse(self):
        return mobius_inverse(self)

    def is_automorphism(self, tol=1e-10):
        """True if the map sends the closed disk onto itself."""
        if not self.nondegenerate or abs(self.c) >= abs(self.d):
            return False
        img = disk_image(self)
        return abs(img.center) <= tol and abs(img.radius - 1.0) <= tol


def mobius_apply(m, z):
    return m(z)


def mobius_compose(m, n):
    """The map ``x -> m(n(x))``."""
    return MobiusMap(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def mobius_inverse(m):
    if not m.nondegenerate:
        raise DegenerateMap(f"{m!r} is constant and has no inverse")
    return MobiusMap(m.d, -m.b, -m.c, m.a)


def disk_image(m):
    """Image of the closed unit disk under ``m`` as a :class:`ClosedDisk`.

    Requires ``|c| < |d|``. A degenerate map yields a radius-0 disk.
    """
    cc = abs(m.c) ** 2
    dd = abs(m.d) ** 2
    if cc >= dd:
        raise UnboundedImage(f"|c| >= |d| for {m!r}")
    center = (m.a * m.c.conjugate() - m.b * m.d.conjugate()) / (cc - dd)
    radius = abs(m.det) / (dd - cc)
    return ClosedDisk(center, radius)
