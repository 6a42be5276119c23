"""Bounded analytic functions on the unit disk as immutable expression trees.

Every node evaluates to a :class:`~schurpick.jets.Jet` at an interior point,
so values and derivatives of arbitrarily nested compositions come out of the
same code path.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .exceptions import OutsideDisk, UnvalidatedFunction, ZeroOutsideDisk
from .geometry import EPS_MEM, MobiusMap, check_point, disk_image
from .jets import Jet, jet_compose, jet_div, jet_recenter

__all__ = [
    "AnalyticFn",
    "BlaschkeProduct",
    "BoundednessReport",
    "Constant",
    "DeltaNode",
    "EPS_COINCIDE",
    "Polynomial",
    "PostMobius",
    "PreAutomorphism",
    "Product",
    "SchurSynth",
    "automorphism_fn",
    "blaschke",
    "constant",
    "eval_jet",
    "identity",
    "polynomial",
    "post_mobius",
    "pre_automorphism",
    "product",
    "random_automorphism",
    "random_blaschke",
    "random_disk_point",
    "random_schur_fn",
    "require_bounded",
    "schur_chain",
    "validate_bounded",
]

# below this distance from a node, a difference quotient is evaluated by
# series division at the node instead of the direct quotient
EPS_COINCIDE = 1e-8
# headroom orders spent when a near-node jet is recentered
_RECENTER_HEADROOM = 2


class AnalyticFn:
    """Base class of the expression tree."""

    def _jet(self, z, order):
        raise NotImplementedError

    def children(self):
        return ()

    def eval_jet(self, z, order=0):
        return eval_jet(self, z, order)

    def __call__(self, z):
        return self._jet(complex(z), 0).value

    def values(self, zs):
        return np.array([self(z) for z in np.ravel(zs)]).reshape(np.shape(zs))

    def walk(self):
        yield self
        for c in self.children():
            yield from c.walk()


@dataclass(frozen=True)
class Constant(AnalyticFn):
    c: complex

    def __post_init__(self):
        object.__setattr__(self, "c", check_point(self.c, closed=True, name="c"))

    def _jet(self, z, order):
        return Jet.const(self.c, z, order)


@dataclass(frozen=True)
class Polynomial(AnalyticFn):
    """``sum coeffs[k] z**k``; only usable once ``validated`` is set."""

    coeffs: Tuple[complex, ...]
    validated: bool = False

    def __post_init__(self):
        c = tuple(complex(x) for x in self.coeffs)
        if not c:
            c = (0j,)
        object.__setattr__(self, "coeffs", c)

    def _jet(self, z, order):
        shifted = jet_recenter(Jet(0, self.coeffs), z).coeffs
        out = np.zeros(order + 1, dtype=complex)
        n = min(order + 1, shifted.size)
        out[:n] = shifted[:n]
        return Jet(z, out)


@dataclass(frozen=True)
class BlaschkeProduct(AnalyticFn):
    """``exp(i theta) * prod [z, a_k]``."""

    theta: float
    zeros: Tuple[complex, ...]

    def __post_init__(self):
        zs = []
        for a in self.zeros:
            try:
                zs.append(check_point(a, name="zero"))
            except OutsideDisk as e:
                raise ZeroOutsideDisk(str(e)) from None
        object.__setattr__(self, "zeros", tuple(zs))
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def degree(self):
        return len(self.zeros)

    def _jet(self, z, order):
        zeta = Jet.var(z, order)
        res = Jet.const(cmath.exp(1j * self.theta), z, order)
        for a in self.zeros:
            res = res * ((zeta - a) / (1.0 - a.conjugate() * zeta))
        return res


@dataclass(frozen=True)
class PostMobius(AnalyticFn):
    """``M(inner(z))`` with ``M`` mapping the closed disk into itself."""

    M: MobiusMap
    inner: AnalyticFn

    def children(self):
        return (self.inner,)

    def _jet(self, z, order):
        F = self.inner._jet(z, order)
        m = self.M
        return (m.a * F + m.b) / (m.c * F + m.d)


@dataclass(frozen=True)
class PreAutomorphism(AnalyticFn):
    """``inner(T(z))`` for a disk automorphism ``T``."""

    T: MobiusMap
    inner: AnalyticFn

    def children(self):
        return (self.inner,)

    def _jet(self, z, order):
        t = self.T
        zeta = Jet.var(z, order)
        tz = (t.a * zeta + t.b) / (t.c * zeta + t.d)
        return jet_compose(self.inner._jet(tz.value, order), tz)


@dataclass(frozen=True)
class Product(AnalyticFn):
    left: AnalyticFn
    right: AnalyticFn

    def children(self):
        return (self.left, self.right)

    def _jet(self, z, order):
        return self.left._jet(z, order) * self.right._jet(z, order)


@dataclass(frozen=True)
class DeltaNode(AnalyticFn):
    """Hyperbolic difference quotient of ``inner`` about ``node``.

    ``gamma`` caches ``inner(node)``. When it is unimodular the inner function
    is a unimodular constant and the quotient is the zero function.
    """

    inner: AnalyticFn
    node: complex
    gamma: complex
    unimodular: bool = False

    def __post_init__(self):
        object.__setattr__(self, "node", check_point(self.node, name="node"))
        object.__setattr__(self, "gamma", complex(self.gamma))

    def children(self):
        return (self.inner,)

    def _jet(self, z, order):
        if self.unimodular:
            return Jet.const(0, z, order)
        g = self.gamma
        gc = g.conjugate()
        z0 = self.node
        dz = z - z0
        if abs(dz) >= EPS_COINCIDE:
            F = self.inner._jet(z, order)
            zeta = Jet.var(z, order)
            num = (F - g) / (1.0 - gc * F)
            return num * (1.0 - z0.conjugate() * zeta) / (zeta - z0)
        # removable singularity: divide out (zeta - z0) at the node itself
        head = 0 if dz == 0 else _RECENTER_HEADROOM
        k = order + head
        F = self.inner._jet(z0, k + 1)
        zeta = Jet.var(z0, k + 1)
        num = (F - g) / (1.0 - gc * F)
        q = jet_div(num, zeta - z0)
        q = q * (1.0 - z0.conjugate() * Jet.var(z0, k))
        if dz != 0:
            q = jet_recenter(q, z)
        return q.truncate(order)


@dataclass(frozen=True)
class SchurSynth(AnalyticFn):
    """``([z, node] inner(z) + gamma) / (1 + conj(gamma) [z, node] inner(z))``.

    Its value at ``node`` is ``gamma`` and its difference quotient about
    ``node`` is ``inner``.
    """

    node: complex
    gamma: complex
    inner: AnalyticFn

    def __post_init__(self):
        object.__setattr__(self, "node", check_point(self.node, name="node"))
        object.__setattr__(self, "gamma", check_point(self.gamma, closed=True, name="gamma"))

    def children(self):
        return (self.inner,)

    def _jet(self, z, order):
        zeta = Jet.var(z, order)
        a = self.node
        b = (zeta - a) / (1.0 - a.conjugate() * zeta) * self.inner._jet(z, order)
        return (b + self.gamma) / (1.0 + self.gamma.conjugate() * b)


def eval_jet(f, z, order=0):
    """Jet of ``f`` of the given order about the interior point ``z``."""
    z = check_point(z)
    if order < 0:
        raise ValueError("order must be >= 0")
    return f._jet(z, int(order))


# -- constructors ------------------------------------------------------------


def constant(c):
    return Constant(c)


def polynomial(coeffs):
    """An unvalidated polynomial; pass it through :func:`validate_bounded`."""
    return Polynomial(tuple(coeffs))


def identity():
    return BlaschkeProduct(0.0, (0j,))


def blaschke(theta, zeros):
    return BlaschkeProduct(theta, tuple(zeros))


def post_mobius(M, inner):
    """Compose ``M`` after ``inner``; ``M`` must map the closed disk into itself."""
    if not M.nondegenerate:
        if M.d == 0 or abs(M.b / M.d) > 1 + EPS_MEM:
            raise OutsideDisk(f"constant map {M!r} does not land in the closed disk")
    else:
        img = disk_image(M)
        if img.sup_modulus > 1 + EPS_MEM:
            raise OutsideDisk(f"{M!r} does not map the closed disk into itself")
    return PostMobius(M, inner)


def pre_automorphism(T, inner):
    if not T.is_automorphism(EPS_MEM):
        raise ValueError(f"{T!r} is not a disk automorphism")
    return PreAutomorphism(T, inner)


def automorphism_fn(T):
    """A disk automorphism as an :class:`AnalyticFn`."""
    return pre_automorphism(T, identity())


def product(left, right):
    return Product(left, right)


def schur_chain(nodes, gammas, terminal=0j):
    """Back-substitute ``gammas`` at ``nodes`` onto a constant ``terminal``."""
    nodes = list(nodes)
    gammas = list(gammas)
    if len(nodes) != len(gammas):
        raise ValueError("nodes and gammas must have equal length")
    f = Constant(terminal)
    for z, g in zip(reversed(nodes), reversed(gammas)):
        f = SchurSynth(z, g, f)
    return f


# -- boundedness ---------------------------------------------------------------


def _unvalidated(f):
    return [n for n in f.walk() if isinstance(n, Polynomial) and not n.validated]


def require_bounded(f):
    """Raise :class:`UnvalidatedFunction` if ``f`` contains unchecked polynomials."""
    if _unvalidated(f):
        raise UnvalidatedFunction(
            "function tree contains polynomials not passed through validate_bounded"
        )
    return f


def _mark_validated(f):
    if isinstance(f, Polynomial):
        return dataclasses.replace(f, validated=True)
    changes = {}
    for fld in dataclasses.fields(f):
        v = getattr(f, fld.name)
        if isinstance(v, AnalyticFn):
            changes[fld.name] = _mark_validated(v)
    return dataclasses.replace(f, **changes) if changes else f


@dataclass(frozen=True)
class BoundednessReport:
    max_modulus_estimate: float
    grid_points: int
    radius_used: float
    validated: bool = False
    function: AnalyticFn = field(default=None, repr=False, compare=False)


def validate_bounded(f, n_samples=1024, radius=0.999):
    """Sample ``|f|`` on the circle ``|z| = radius`` and report the maximum.

    This is a maximum-principle heuristic, not a proof. When the maximum is at
    most ``1 + 1e-9`` the returned report carries ``f`` with every polynomial
    leaf marked as validated.
    """
    if not 0 < radius < 1:
        raise ValueError("radius must lie in (0, 1)")
    theta = 2 * np.pi * np.arange(n_samples) / n_samples
    zs = radius * np.exp(1j * theta)
    m = max(abs(f._jet(complex(z), 0).value) for z in zs)
    ok = m <= 1 + 1e-9
    return BoundednessReport(
        max_modulus_estimate=float(m),
        grid_points=int(n_samples),
        radius_used=float(radius),
        validated=bool(ok),
        function=_mark_validated(f) if ok else f,
    )


# -- random generators -----------------------------------------------------------


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_disk_point(rng, cap=1.0, size=None):
    """Uniform sample(s) from the disk ``|z| <= cap``."""
    rng = _rng(rng)
    r = cap * np.sqrt(rng.random(size))
    t = 2 * np.pi * rng.random(size)
    z = r * np.exp(1j * t)
    return complex(z) if size is None else z


def random_schur_fn(seed, depth, gamma_cap, nodes=None, terminal=None):
    """Schur chain with ``depth + 1`` parameters drawn uniformly in ``|g| <= gamma_cap``.

    ``nodes`` defaults to all zeros; ``terminal`` is drawn from the same disk
    when omitted.
    """
    if not 0 < gamma_cap < 1:
        raise ValueError("gamma_cap must lie in (0, 1)")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    rng = _rng(seed)
    gammas = [random_disk_point(rng, gamma_cap) for _ in range(depth + 1)]
    if terminal is None:
        terminal = random_disk_point(rng, gamma_cap)
    if nodes is None:
        nodes = [0j] * (depth + 1)
    return schur_chain(nodes, gammas, terminal)


def random_blaschke(seed, degree, zero_cap=0.9):
    rng = _rng(seed)
    theta = 2 * math.pi * rng.random()
    return blaschke(theta, [random_disk_point(rng, zero_cap) for _ in range(degree)])


def random_automorphism(seed, cap=0.9):
    rng = _rng(seed)
    return MobiusMap.automorphism(2 * math.pi * rng.random(), random_disk_point(rng, cap))
