"""Hyperbolic difference quotients, their iterates and Schur parameters."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

from .functions import DeltaNode, eval_jet, require_bounded
from .geometry import check_point

__all__ = [
    "EPS_UNI",
    "SchurSequence",
    "SchurStatus",
    "UnimodularInnerWarning",
    "blaschke_degree_detect",
    "delta",
    "gamma_sequence",
    "iterated",
    "schur_classic",
]

# |gamma| >= 1 - EPS_UNI is read as unimodular
EPS_UNI = 1e-10


class UnimodularInnerWarning(UserWarning):
    """Difference quotient of a unimodular constant, taken to be zero."""


class SchurStatus(str, enum.Enum):
    ALL_INTERIOR = "all_interior"
    UNIMODULAR = "unimodular"
    # a parameter of modulus > 1 was met; the sequence stops there
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class SchurSequence:
    """Parameters ``gamma_0, gamma_1, ...`` with their termination status.

    For ``UNIMODULAR`` status ``index`` is the position of the unimodular
    parameter and later entries are 0; for ``TRUNCATED`` it is the position of
    the out-of-range entry, which is the last one kept. ``raw_modulus`` is the
    computed ``|gamma_index|`` (or the largest modulus seen when all interior).
    """

    gammas: Tuple[complex, ...]
    status: SchurStatus
    index: Optional[int] = None
    raw_modulus: float = 0.0

    def __len__(self):
        return len(self.gammas)

    def __getitem__(self, i):
        return self.gammas[i]


def delta(f, z0):
    """The difference quotient of ``f`` about ``z0`` as a new tree node."""
    require_bounded(f)
    z0 = check_point(z0, name="z0")
    g = f(z0)
    if abs(g) >= 1 - EPS_UNI:
        warnings.warn(
            f"|f(z0)| = {abs(g)!r}: quotient of a unimodular constant is zero",
            UnimodularInnerWarning,
            stacklevel=2,
        )
        return DeltaNode(f, z0, g, unimodular=True)
    return DeltaNode(f, z0, g)


def iterated(f, nodes):
    """``Delta_{z_{j-1}} ... Delta_{z_0} f`` for ``nodes = [z_0, ..., z_{j-1}]``."""
    for z in nodes:
        f = delta(f, z)
    return f


def gamma_sequence(f, nodes):
    """``gamma_j = f_j(z_j)`` along ``nodes``, stopping at a unimodular value."""
    require_bounded(f)
    nodes = [check_point(z, name="node") for z in nodes]
    if not nodes:
        raise ValueError("nodes must be non-empty")
    gammas = []
    fj = f
    peak = 0.0
    for j, z in enumerate(nodes):
        g = eval_jet(fj, z, 0).value
        r = abs(g)
        gammas.append(g)
        if r > 1 + EPS_UNI:
            return SchurSequence(tuple(gammas), SchurStatus.TRUNCATED, j, r)
        if r >= 1 - EPS_UNI:
            gammas.extend([0j] * (len(nodes) - j - 1))
            return SchurSequence(tuple(gammas), SchurStatus.UNIMODULAR, j, r)
        peak = max(peak, r)
        if j + 1 < len(nodes):
            fj = DeltaNode(fj, z, g)
    return SchurSequence(tuple(gammas), SchurStatus.ALL_INTERIOR, None, peak)


def schur_classic(f, n):
    """Classical Schur parameters ``gamma_0 .. gamma_n`` (all nodes at 0)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return gamma_sequence(f, [0j] * (n + 1))


def blaschke_degree_detect(s):
    """Degree of the Blaschke product signalled by ``s``, else None."""
    if s.status is SchurStatus.UNIMODULAR:
        return s.index
    return None
