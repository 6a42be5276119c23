"""Nevanlinna-Pick interpolation: feasibility, interpolants, variability regions.

Feasibility is decided twice, by a pivoted factorization of the Pick matrix
and by the Schur recursion on the data values; the two must agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .bounds import RADIUS_FLOOR, region_maps, value_region
from .exceptions import InfeasibleData, VerdictDisagreement
from .functions import schur_chain
from .geometry import EPS_MEM, MobiusMap, check_point
from .hdq import EPS_UNI, SchurSequence, SchurStatus

__all__ = [
    "EPS_PSD",
    "FeasibilityStatus",
    "FeasibilityVerdict",
    "InterpolationData",
    "construct_interpolant",
    "feasibility",
    "interpolant_through",
    "pick_matrix",
    "pick_verdict",
    "pivoted_cholesky",
    "schur_verdict",
    "variability_region",
]

# relative tolerance on Pick-matrix pivots
EPS_PSD = 1e-10
# two data values count as equal below this distance once a unimodular
# parameter has pinned the remaining function to a constant
EPS_TAIL = 1e-8


class FeasibilityStatus(str, enum.Enum):
    STRICT = "strictly_feasible"
    BOUNDARY = "boundary_feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class InterpolationData:
    """Interpolation conditions ``f(z[j]) = w[j]`` at distinct interior nodes."""

    z: Tuple[complex, ...]
    w: Tuple[complex, ...]

    def __post_init__(self):
        z = tuple(check_point(x, name="z_j") for x in self.z)
        w = tuple(check_point(x, closed=True, name="w_j") for x in self.w)
        if not z or len(z) != len(w):
            raise ValueError("need equally many (>= 1) nodes and values")
        if len(set(z)) != len(z):
            raise ValueError("interpolation nodes must be distinct")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def __len__(self):
        return len(self.z)

    def permuted(self, order):
        return InterpolationData(
            tuple(self.z[i] for i in order), tuple(self.w[i] for i in order)
        )

    def extended(self, z, w):
        return InterpolationData(self.z + (complex(z),), self.w + (complex(w),))


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: FeasibilityStatus
    min_pivot: float
    gammas: Optional[SchurSequence]
    pivots: Tuple[float, ...] = ()

    @property
    def feasible(self):
        return self.status is not FeasibilityStatus.INFEASIBLE


def pick_matrix(data):
    """Hermitian matrix ``(1 - w_h conj(w_k)) / (1 - z_h conj(z_k))``."""
    z = np.asarray(data.z, dtype=complex)
    w = np.asarray(data.w, dtype=complex)
    P = (1 - np.outer(w, w.conj())) / (1 - np.outer(z, z.conj()))
    # exact Hermitian symmetry and a real diagonal
    P = (P + P.conj().T) / 2
    return P


def pivoted_cholesky(P, rel_tol=EPS_PSD, scale=None):
    """Diagonally pivoted Cholesky elimination of a Hermitian matrix.

    Returns ``(status, pivots)``. Elimination stops when the largest remaining
    diagonal entry is at most ``rel_tol * scale`` (``scale`` defaults to
    ``max|P|``); the remaining block then decides between a singular positive
    semidefinite matrix and an indefinite one. The final entry of ``pivots``
    is the smallest remaining diagonal entry when elimination stopped early.
    """
    A = np.array(P, dtype=complex)
    n = A.shape[0]
    if scale is None:
        scale = float(np.max(np.abs(A))) if n else 0.0
    tol = rel_tol * max(scale, np.finfo(float).tiny)
    pivots = []
    for i in range(n):
        d = A.diagonal().real[i:]
        j = i + int(np.argmax(d))
        p = float(d[j - i])
        if p <= tol:
            rest = A[i:, i:]
            dmin = float(d.min())
            pivots.append(dmin)
            if dmin < -tol or np.max(np.abs(rest)) > tol:
                return FeasibilityStatus.INFEASIBLE, tuple(pivots)
            return FeasibilityStatus.BOUNDARY, tuple(pivots)
        if j != i:
            A[[i, j], :] = A[[j, i], :]
            A[:, [i, j]] = A[:, [j, i]]
        pivots.append(p)
        col = A[i + 1 :, i] / p
        A[i + 1 :, i + 1 :] -= np.outer(col, A[i, i + 1 :])
    return FeasibilityStatus.STRICT, tuple(pivots)


def pick_verdict(data, rel_tol=EPS_PSD):
    """Feasibility from positive semidefiniteness of the Pick matrix.

    The pivot tolerance is relative to ``max 1 / (1 - |z_h|^2)``, the size
    Pick entries can reach for values in the closed disk. Relative to the
    matrix itself it would collapse for data with all ``|w_h|`` near 1.
    """
    z = np.asarray(data.z, dtype=complex)
    scale = float(np.max(1 / (1 - np.abs(z) ** 2)))
    return pivoted_cholesky(pick_matrix(data), rel_tol, scale)


def schur_verdict(data, eps=EPS_UNI):
    """Feasibility from the Schur recursion on the data, in the given order.

    ``v_k`` starts as ``w_k``; stage ``j`` reads ``gamma_j = v_j`` and replaces
    ``v_k`` for ``k > j`` by ``[v_k, gamma_j] / [z_k, z_j]``.
    """
    z = list(data.z)
    v = list(data.w)
    n = len(z)
    gammas = []
    for j in range(n):
        g = v[j]
        r = abs(g)
        gammas.append(g)
        if r > 1 + eps:
            return FeasibilityStatus.INFEASIBLE, SchurSequence(
                tuple(gammas), SchurStatus.TRUNCATED, j, r
            )
        if r >= 1 - eps:
            tail = max((abs(v[k] - g) for k in range(j + 1, n)), default=0.0)
            gammas.extend([0j] * (n - j - 1))
            seq = SchurSequence(tuple(gammas), SchurStatus.UNIMODULAR, j, r)
            if tail <= EPS_TAIL:
                return FeasibilityStatus.BOUNDARY, seq
            return FeasibilityStatus.INFEASIBLE, seq
        gc = g.conjugate()
        zj = z[j]
        for k in range(j + 1, n):
            tau = (z[k] - zj) / (1 - zj.conjugate() * z[k])
            v[k] = (v[k] - g) / (1 - gc * v[k]) / tau
        over = max((abs(v[k]) for k in range(j + 1, n)), default=0.0)
        if over > 1 + eps:
            gammas.append(v[j + 1])
            return FeasibilityStatus.INFEASIBLE, SchurSequence(
                tuple(gammas), SchurStatus.TRUNCATED, j + 1, over
            )
    peak = max(abs(g) for g in gammas)
    return FeasibilityStatus.STRICT, SchurSequence(
        tuple(gammas), SchurStatus.ALL_INTERIOR, None, peak
    )


def feasibility(data):
    """Classify ``data`` as strictly feasible, boundary feasible or infeasible.

    Raises :class:`VerdictDisagreement` if the Pick-matrix test and the Schur
    recursion disagree.
    """
    psd_status, pivots = pick_verdict(data)
    rec_status, seq = schur_verdict(data)
    if psd_status is not rec_status:
        raise VerdictDisagreement(
            f"Pick matrix says {psd_status.value}, Schur recursion says "
            f"{rec_status.value} (pivots {pivots}, gammas {seq.gammas})"
        )
    return FeasibilityVerdict(psd_status, min(pivots), seq, pivots)


def _chain_inputs(nodes, seq):
    """Nodes and parameters actually carrying information, plus terminal override."""
    gammas = list(seq.gammas) if isinstance(seq, SchurSequence) else [complex(g) for g in seq]
    nodes = [complex(z) for z in nodes]
    for j, g in enumerate(gammas):
        r = abs(g)
        if r > 1 + EPS_UNI:
            raise InfeasibleData(f"|gamma_{j}| = {r!r} > 1")
        if r >= 1 - EPS_UNI:
            return nodes[: j + 1], gammas[: j + 1], g / r
    return nodes, gammas, None


def construct_interpolant(data=None, terminal=0j, *, nodes=None, gammas=None):
    """Bounded analytic interpolant obtained by Schur back-substitution.

    Pass either ``data`` or ``nodes`` with ``gammas``. A unimodular parameter
    ends the chain and the unique (Blaschke) solution is returned regardless
    of ``terminal``.
    """
    terminal = check_point(terminal, closed=True, name="terminal")
    if data is not None:
        v = feasibility(data)
        if not v.feasible:
            raise InfeasibleData("interpolation data are infeasible")
        nodes, gammas = data.z, v.gammas
    elif nodes is None or gammas is None:
        raise TypeError("pass data or both nodes and gammas")
    nodes, gs, uni = _chain_inputs(nodes, gammas)
    if uni is not None:
        return schur_chain(nodes[:-1], gs[:-1], uni)
    return schur_chain(nodes, gs, terminal)


def _region_inputs(data):
    v = feasibility(data)
    if not v.feasible:
        raise InfeasibleData("interpolation data are infeasible")
    nodes, gs, uni = _chain_inputs(data.z, v.gammas)
    if uni is not None:
        gs[-1] = uni
    return nodes, gs


def variability_region(data, z):
    """Closed disk of all values ``f(z)`` over interpolants of ``data``."""
    nodes, gs = _region_inputs(data)
    region = value_region(nodes, gs, z)
    if region.radius < RADIUS_FLOOR:
        return type(region)(region.center, 0.0, region.interior_refinement)
    return region


def interpolant_through(data, a, b):
    """An interpolant of ``data`` that also takes the value ``b`` at ``a``."""
    a = check_point(a, name="a")
    nodes, gs = _region_inputs(data)
    region = value_region(nodes, gs, a)
    if not region.contains(b):
        raise InfeasibleData(f"{b!r} lies outside the variability region at {a!r}")
    if region.radius == 0:
        return construct_interpolant(nodes=nodes, gammas=gs)
    M = MobiusMap.identity()
    for A in region_maps(nodes, gs, a):
        M = M @ A
    c = M.inverse()(complex(b))
    if abs(c) > 1:
        if abs(c) > 1 + EPS_MEM:
            raise InfeasibleData(f"{b!r} lies outside the variability region")
        c /= abs(c)
    return schur_chain(nodes, gs, c)
