"""scikit-learn style wrappers.

``NevanlinnaPickInterpolator`` treats interpolation nodes as ``X`` and target
values as ``y``; ``SchurTransformer`` maps rows of Taylor coefficients to
Schur parameters. Inputs are complex, which sklearn's own array validation
rejects, hence the small local checks.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .exceptions import InfeasibleData
from .peschl import gamma_from_taylor
from .pick import InterpolationData, construct_interpolant, feasibility, variability_region

__all__ = ["NevanlinnaPickInterpolator", "SchurTransformer"]


def _complex_1d(X, name="X"):
    a = np.asarray(X, dtype=complex)
    if a.ndim == 2 and a.shape[1] == 1:
        a = a[:, 0]
    if a.ndim != 1:
        raise ValueError(f"{name} must be 1-d or a single column, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


class NevanlinnaPickInterpolator(BaseEstimator):
    """Bounded analytic interpolant of ``(X[j], y[j])`` on the unit disk.

    ``terminal`` selects a member of the one-parameter solution family; it is
    ignored when the data admit a single (Blaschke) solution.
    """

    def __init__(self, terminal=0j):
        self.terminal = terminal

    def fit(self, X, y):
        z = _complex_1d(X)
        w = _complex_1d(y, "y")
        if z.shape != w.shape:
            raise ValueError("X and y must have the same length")
        data = InterpolationData(tuple(z), tuple(w))
        verdict = feasibility(data)
        if not verdict.feasible:
            raise InfeasibleData("interpolation data are infeasible")
        self.data_ = data
        self.verdict_ = verdict
        self.gammas_ = np.array(verdict.gammas.gammas, dtype=complex)
        self.interpolant_ = construct_interpolant(
            nodes=data.z, gammas=verdict.gammas, terminal=self.terminal
        )
        return self

    def _check_fitted(self):
        if not hasattr(self, "interpolant_"):
            raise NotFittedError("call fit before predict")

    def predict(self, X):
        self._check_fitted()
        z = _complex_1d(X)
        return np.array([self.interpolant_(x) for x in z], dtype=complex)

    def predict_region(self, X):
        """Variability disks of ``f(x)`` over all interpolants, one per point."""
        self._check_fitted()
        return [variability_region(self.data_, x) for x in _complex_1d(X)]


class SchurTransformer(TransformerMixin, BaseEstimator):
    """Rows ``(a_1, .., a_4)`` of ``g = a_1 z + a_2 z^2 + ..`` to ``gamma_1 .. gamma_4``."""

    def fit(self, X, y=None):
        self._width(X)
        return self

    @staticmethod
    def _width(X):
        a = np.asarray(X, dtype=complex)
        if a.ndim != 2 or a.shape[1] != 4:
            raise ValueError(f"expected shape (n, 4), got {a.shape}")
        return a

    def transform(self, X):
        a = self._width(X)
        return np.array([gamma_from_taylor(row) for row in a], dtype=complex)
