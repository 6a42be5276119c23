"""JSON encodings for complex numbers, function trees, datasets and verdicts.

Complex numbers are always written as ``{"re": x, "im": y}``. On input a bare
number is accepted as well. Function trees are objects tagged by ``kind``::

    {"kind": "const", "c": C}
    {"kind": "poly", "coeffs": [C, ...]}                 # coefficient of z**k at k
    {"kind": "blaschke", "theta": t, "zeros": [C, ...]}
    {"kind": "post_mobius", "M": MAP, "inner": TREE}
    {"kind": "pre_auto", "T": MAP, "inner": TREE}
    {"kind": "product", "left": TREE, "right": TREE}
    {"kind": "delta", "node": C, "inner": TREE}
    {"kind": "schur", "node": C, "gamma": C, "inner": TREE}

with ``MAP = {"a": C, "b": C, "c": C, "d": C}`` for ``(a x + b) / (c x + d)``.
Polynomials load unvalidated; run them through ``validate_bounded``.
"""

from __future__ import annotations

import json
import math
import numbers

from .functions import (
    BlaschkeProduct,
    Constant,
    DeltaNode,
    Polynomial,
    PostMobius,
    PreAutomorphism,
    Product,
    SchurSynth,
    eval_jet,
    post_mobius,
    pre_automorphism,
)
from .geometry import MobiusMap
from .hdq import EPS_UNI
from .pick import InterpolationData

__all__ = [
    "SchemaError",
    "complex_from_json",
    "complex_to_json",
    "dataset_from_json",
    "dataset_to_json",
    "dumps",
    "function_from_json",
    "function_to_json",
    "load_json_file",
    "real_to_json",
    "sequence_to_json",
    "verdict_to_json",
]


class SchemaError(ValueError):
    """Input JSON does not match the expected layout."""


def real_to_json(x):
    x = float(x) + 0.0  # drops the sign of -0.0
    return x if math.isfinite(x) else None


def complex_to_json(z):
    z = complex(z)
    return {"re": real_to_json(z.real), "im": real_to_json(z.imag)}


def complex_from_json(obj):
    if isinstance(obj, dict):
        try:
            return complex(float(obj["re"]), float(obj.get("im", 0.0)))
        except (KeyError, TypeError, ValueError):
            raise SchemaError(f"bad complex number {obj!r}") from None
    if isinstance(obj, numbers.Number) and not isinstance(obj, bool):
        return complex(obj)
    raise SchemaError(f"bad complex number {obj!r}")


def _map_to_json(M):
    return {k: complex_to_json(getattr(M, k)) for k in "abcd"}


def _map_from_json(obj):
    try:
        return MobiusMap(*(complex_from_json(obj[k]) for k in "abcd"))
    except (KeyError, TypeError):
        raise SchemaError(f"bad Moebius map {obj!r}") from None


def function_to_json(f):
    if isinstance(f, Constant):
        return {"kind": "const", "c": complex_to_json(f.c)}
    if isinstance(f, Polynomial):
        return {"kind": "poly", "coeffs": [complex_to_json(c) for c in f.coeffs]}
    if isinstance(f, BlaschkeProduct):
        return {
            "kind": "blaschke",
            "theta": f.theta,
            "zeros": [complex_to_json(a) for a in f.zeros],
        }
    if isinstance(f, PostMobius):
        return {"kind": "post_mobius", "M": _map_to_json(f.M), "inner": function_to_json(f.inner)}
    if isinstance(f, PreAutomorphism):
        return {"kind": "pre_auto", "T": _map_to_json(f.T), "inner": function_to_json(f.inner)}
    if isinstance(f, Product):
        return {
            "kind": "product",
            "left": function_to_json(f.left),
            "right": function_to_json(f.right),
        }
    if isinstance(f, DeltaNode):
        return {"kind": "delta", "node": complex_to_json(f.node), "inner": function_to_json(f.inner)}
    if isinstance(f, SchurSynth):
        return {
            "kind": "schur",
            "node": complex_to_json(f.node),
            "gamma": complex_to_json(f.gamma),
            "inner": function_to_json(f.inner),
        }
    raise TypeError(f"cannot serialize {type(f).__name__}")


def _field(obj, name):
    try:
        return obj[name]
    except (KeyError, TypeError):
        raise SchemaError(f"missing field {name!r} in {obj!r}") from None


def function_from_json(obj):
    kind = _field(obj, "kind")
    if kind == "const":
        return Constant(complex_from_json(_field(obj, "c")))
    if kind == "poly":
        return Polynomial(tuple(complex_from_json(c) for c in _field(obj, "coeffs")))
    if kind == "blaschke":
        return BlaschkeProduct(
            float(obj.get("theta", 0.0)),
            tuple(complex_from_json(a) for a in _field(obj, "zeros")),
        )
    if kind == "post_mobius":
        return post_mobius(_map_from_json(_field(obj, "M")), function_from_json(_field(obj, "inner")))
    if kind == "pre_auto":
        return pre_automorphism(_map_from_json(_field(obj, "T")), function_from_json(_field(obj, "inner")))
    if kind == "product":
        return Product(function_from_json(_field(obj, "left")), function_from_json(_field(obj, "right")))
    if kind == "delta":
        inner = function_from_json(_field(obj, "inner"))
        node = complex_from_json(_field(obj, "node"))
        g = eval_jet(inner, node, 0).value
        return DeltaNode(inner, node, g, unimodular=abs(g) >= 1 - EPS_UNI)
    if kind == "schur":
        return SchurSynth(
            complex_from_json(_field(obj, "node")),
            complex_from_json(_field(obj, "gamma")),
            function_from_json(_field(obj, "inner")),
        )
    raise SchemaError(f"unknown function kind {kind!r}")


def dataset_to_json(data):
    return {
        "points": [
            {"z": complex_to_json(z), "w": complex_to_json(w)} for z, w in zip(data.z, data.w)
        ]
    }


def dataset_from_json(obj):
    pts = _field(obj, "points")
    if not isinstance(pts, list):
        raise SchemaError("'points' must be a list")
    return InterpolationData.from_pairs(
        (complex_from_json(_field(p, "z")), complex_from_json(_field(p, "w"))) for p in pts
    )


def sequence_to_json(seq):
    return {
        "gammas": [complex_to_json(g) for g in seq.gammas],
        "status": seq.status.value,
        "index": seq.index,
        "raw_modulus": real_to_json(seq.raw_modulus),
    }


def verdict_to_json(v):
    return {
        "status": v.status.value,
        "min_pivot": real_to_json(v.min_pivot),
        "pivots": [real_to_json(p) for p in v.pivots],
        "gammas": [complex_to_json(g) for g in v.gammas.gammas] if v.gammas else [],
        "gamma_status": v.gammas.status.value if v.gammas else None,
    }


def dumps(obj):
    """Deterministic JSON text (sorted keys, no NaN)."""
    return json.dumps(obj, sort_keys=True, allow_nan=False, indent=2)


def load_json_file(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
