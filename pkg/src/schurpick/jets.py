"""Truncated complex Taylor series ("jets") about a base point.

A :class:`Jet` of order ``K`` about ``base`` holds ``c_0 .. c_K`` with
``f(z) ~ sum c_m (z - base)**m``. Arithmetic is closed on jets sharing the
same base and order; scalars broadcast as constant jets.

Orders in this package stay small (at most 16), so coefficients live in plain
lists of Python complex numbers; that is several times faster than numpy for
these sizes.
"""

from __future__ import annotations

import cmath
import math
import numbers

import numpy as np

from .exceptions import (
    BaseMismatch,
    DivisionByZeroSeries,
    NonRemovableSingularity,
    OrderMismatch,
)

__all__ = [
    "DEFAULT_ORDER",
    "Jet",
    "jet_add",
    "jet_compose",
    "jet_div",
    "jet_mul",
    "jet_recenter",
    "jet_sub",
]

DEFAULT_ORDER = 8
# relative threshold for treating a leading coefficient as a structural zero
ZERO_REL = 1e-12


def _new(base, c):
    j = Jet.__new__(Jet)
    j.base = base
    j.c = c
    return j


class Jet:
    __slots__ = ("base", "c")

    def __init__(self, base, coeffs):
        c = [complex(x) for x in np.ravel(coeffs)]
        if not c:
            raise ValueError("coeffs must be non-empty")
        if not all(cmath.isfinite(x) for x in c):
            raise ValueError("jet coefficients must be finite")
        self.base = complex(base)
        self.c = c

    @classmethod
    def const(cls, value, base, order):
        return _new(base, [complex(value)] + [0j] * order)

    @classmethod
    def var(cls, base, order):
        """The jet of the identity map ``z -> z``."""
        c = [base] + [0j] * order
        if order >= 1:
            c[1] = 1 + 0j
        return _new(base, c)

    @property
    def coeffs(self):
        return np.array(self.c, dtype=complex)

    @property
    def order(self):
        return len(self.c) - 1

    @property
    def value(self):
        return self.c[0]

    def derivative(self, m):
        """``f^{(m)}(base)`` recovered from the ``m``-th coefficient."""
        return self.c[m] * math.factorial(m)

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatch(f"cannot raise order {self.order} to {order}")
        return _new(self.base, self.c[: order + 1])

    def __repr__(self):
        return f"Jet(base={self.base!r}, coeffs={self.c!r})"

    def __len__(self):
        return len(self.c)

    def _other(self, other):
        if other.base != self.base:
            raise BaseMismatch(f"bases differ: {self.base!r} vs {other.base!r}")
        if len(other.c) != len(self.c):
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")
        return other.c

    def __add__(self, other):
        if isinstance(other, Jet):
            o = self._other(other)
            return _new(self.base, [x + y for x, y in zip(self.c, o)])
        if isinstance(other, numbers.Number):
            c = list(self.c)
            c[0] += other
            return _new(self.base, c)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            o = self._other(other)
            return _new(self.base, [x - y for x, y in zip(self.c, o)])
        if isinstance(other, numbers.Number):
            c = list(self.c)
            c[0] -= other
            return _new(self.base, c)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Number):
            c = [-x for x in self.c]
            c[0] += other
            return _new(self.base, c)
        return NotImplemented

    def __neg__(self):
        return _new(self.base, [-x for x in self.c])

    def __mul__(self, other):
        if isinstance(other, Jet):
            b = self._other(other)
            a = self.c
            return _new(
                self.base,
                [sum(a[i] * b[m - i] for i in range(m + 1)) for m in range(len(a))],
            )
        if isinstance(other, numbers.Number):
            return _new(self.base, [x * other for x in self.c])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return jet_div(self, other)
        if isinstance(other, numbers.Number):
            return _new(self.base, [x / other for x in self.c])
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Number):
            return jet_div(Jet.const(other, self.base, self.order), self)
        return NotImplemented


def _check_pair(x, y):
    if x.base != y.base:
        raise BaseMismatch(f"bases differ: {x.base!r} vs {y.base!r}")
    if x.order != y.order:
        raise OrderMismatch(f"orders differ: {x.order} vs {y.order}")


def jet_add(x, y):
    _check_pair(x, y)
    return x + y


def jet_sub(x, y):
    _check_pair(x, y)
    return x - y


def jet_mul(x, y):
    _check_pair(x, y)
    return x * y


def _leading_zeros(c):
    tol = ZERO_REL * (1.0 + max(abs(x) for x in c))
    for i, x in enumerate(c):
        if abs(x) > tol:
            return i
    return len(c)


def _series_quotient(a, b):
    q = []
    b0 = b[0]
    for m in range(len(a)):
        s = a[m]
        for i in range(m):
            s -= q[i] * b[m - i]
        q.append(s / b0)
    return q


def jet_div(num, den):
    """Formal quotient ``num / den``.

    If ``den`` starts with ``v`` (numerically) zero coefficients, ``num`` must
    too; the common factor ``(z - base)**v`` is cancelled and the result has
    order ``K - v``.
    """
    _check_pair(num, den)
    d = den.c
    v = _leading_zeros(d)
    if v == len(d):
        raise DivisionByZeroSeries("denominator vanishes to the truncation order")
    if v and _leading_zeros(num.c) < v:
        raise NonRemovableSingularity(
            f"denominator has a zero of order {v} the numerator does not cancel"
        )
    return _new(num.base, _series_quotient(num.c[v:], d[v:]))


def jet_recenter(x, new_base):
    """Re-expand the truncated polynomial of ``x`` about ``new_base``.

    Exact for the polynomial content; for a truncated analytic function the
    error in ``c_m`` is of order ``|new_base - base|**(K + 1 - m)``.
    """
    new_base = complex(new_base)
    delta = new_base - x.base
    c = list(x.c)
    if delta != 0:
        n = len(c)
        # repeated synthetic division (Taylor shift)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                c[k] += delta * c[k + 1]
    return _new(new_base, c)


def jet_compose(outer, inner):
    """Jet of ``outer(inner(z))`` about ``inner.base``.

    ``outer`` must be expanded about (numerically) ``inner.value`` and have
    order at least ``inner.order``.
    """
    if outer.order < inner.order:
        raise OrderMismatch(
            f"outer order {outer.order} below inner order {inner.order}"
        )
    u = inner - outer.base
    k = inner.order
    oc = outer.c
    res = Jet.const(oc[k], inner.base, k)
    for m in range(k - 1, -1, -1):
        res = res * u + oc[m]
    return res
