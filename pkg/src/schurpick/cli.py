"""Command-line interface.

Exit codes: 0 ok, 1 input error, 2 infeasible data, 3 Schur chain truncated
by a Blaschke (unimodular) parameter, 4 property failure in ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass, field
from typing import Dict

from . import serialization as ser
from .bounds import distance_bound_chain, modulus_bound_chain
from .exceptions import DegenerateDenominator, InfeasibleData, SchurPickError
from .functions import eval_jet, require_bounded, validate_bounded, _unvalidated
from .geometry import bracket, check_point, hyperbolic_distance
from .hdq import SchurStatus, UnimodularInnerWarning, blaschke_degree_detect, gamma_sequence
from .peschl import gamma_from_taylor
from .pick import FeasibilityStatus, feasibility, pick_matrix, schur_verdict, variability_region
from .verify import PROPERTIES, run_suite

__all__ = ["EXIT_INFEASIBLE", "EXIT_INPUT", "EXIT_OK", "EXIT_PROPERTY", "EXIT_TRUNCATED", "RunConfig", "main"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_TRUNCATED = 3
EXIT_PROPERTY = 4

OUTPUTS = ("json", "csv", "plain")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 200
    tolerances: Dict[str, float] = field(default_factory=dict)
    jet_order: int = 8
    output: str = "json"

    def __post_init__(self):
        if not -(2**63) <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not 3 <= self.jet_order <= 16:
            raise ValueError("jet order must lie in [3, 16]")
        if self.output not in OUTPUTS:
            raise ValueError(f"output must be one of {', '.join(OUTPUTS)}")


class InputError(Exception):
    pass


# -- parsing helpers -------------------------------------------------------------


def parse_complex(text):
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"cannot parse complex number {text!r}") from None


def parse_complex_list(text):
    return [parse_complex(t) for t in text.split(",") if t.strip()]


def parse_tol(text):
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance value in {text!r}") from None


def _read_json(source):
    """``source`` is a path, ``-`` for stdin, or inline JSON text."""
    try:
        if source == "-":
            return json.load(sys.stdin)
        if source.lstrip().startswith(("{", "[")):
            return json.loads(source)
        return ser.load_json_file(source)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {source!r}: {e}") from None


def _load_function(source):
    f = ser.function_from_json(_read_json(source))
    if _unvalidated(f):
        report = validate_bounded(f)
        if not report.validated:
            raise InputError(
                f"polynomial tree not bounded by 1: max |f| ~ {report.max_modulus_estimate:.6g}"
            )
        f = report.function
    return require_bounded(f)


def _load_dataset(source):
    return ser.dataset_from_json(_read_json(source))


# -- output -------------------------------------------------------------------


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows([x + 0.0 if isinstance(x, float) else x for x in row] for row in rows)
    return buf.getvalue().rstrip("\n")


def _fmt(x):
    if isinstance(x, complex):
        return f"{x.real!r}{x.imag:+}j"
    return repr(x)


class _Out:
    def __init__(self, cfg, stream):
        self.cfg = cfg
        self.stream = stream

    def emit(self, payload, header=None, rows=None, lines=None):
        if self.cfg.output == "json":
            text = ser.dumps(payload)
        elif self.cfg.output == "csv":
            text = _csv_text(header, rows)
        else:
            text = "\n".join(lines)
        print(text, file=self.stream)

    def error(self, code, message, extra=None):
        if self.cfg.output == "json":
            payload = {"error": message, "exit_code": code}
            payload.update(extra or {})
            print(ser.dumps(payload), file=self.stream)
        print(f"error: {message}", file=sys.stderr)
        return code


# -- commands ------------------------------------------------------------------------


def _pick_diagnostics(data, verdict=None):
    if verdict is None:
        status, seq = schur_verdict(data)
        gammas = seq.gammas
    else:
        gammas = verdict.gammas.gammas
    P = pick_matrix(data)
    return {
        "pick_matrix": [[ser.complex_to_json(x) for x in row] for row in P],
        "gammas": [ser.complex_to_json(g) for g in gammas],
        "verdict": ser.verdict_to_json(verdict) if verdict else None,
    }


def cmd_region(args, cfg, out):
    """Variability region of ``f(z)`` over all interpolants of a dataset."""
    data = _load_dataset(args.dataset)
    z = check_point(parse_complex(args.z), name="z")
    verdict = feasibility(data)
    if not verdict.feasible:
        return out.error(
            EXIT_INFEASIBLE, "interpolation data are infeasible", _pick_diagnostics(data, verdict)
        )
    region = variability_region(data, z)
    pts = [complex(p) for p in region.boundary_points(args.emit_boundary)] if args.emit_boundary else []
    payload = {
        "center": ser.complex_to_json(region.center),
        "radius": region.radius,
        "status": verdict.status.value,
        "interior_refinement": region.interior_refinement,
    }
    if args.emit_boundary:
        payload["boundary"] = [ser.complex_to_json(p) for p in pts]
    if args.emit_boundary:
        header = ["index", "re", "im"]
        rows = [[i, float(p.real), float(p.imag)] for i, p in enumerate(pts)]
    else:
        header = ["center_re", "center_im", "radius", "status"]
        rows = [[region.center.real, region.center.imag, float(region.radius), verdict.status.value]]
    lines = [
        f"status  {verdict.status.value}",
        f"center  {_fmt(region.center)}",
        f"radius  {region.radius!r}",
    ] + [f"{_fmt(p)}" for p in pts]
    out.emit(payload, header, rows, lines)
    return EXIT_OK


def _closed_form_check(f, gammas, order):
    """Closed-form parameters from the Taylor series of ``[f, f(0)]`` at 0.

    That function has parameters ``0, gamma_1, gamma_2, ...``, so its closed
    forms line up with the iterated ones from index 1. Only the first
    ``min(order, 4)`` are reported.
    """
    w0 = gammas[0]
    if abs(w0) >= 1:
        return None
    J = eval_jet(f, 0j, 4)
    a = ((J - w0) / (1 - w0.conjugate() * J)).c[1:5]
    k = min(order, 4)
    a = list(a[:k]) + [0j] * (4 - k)
    try:
        closed = gamma_from_taylor(a)[:k]
    except DegenerateDenominator:
        closed = [None] * k
    return [
        (j, gammas[j] if j < len(gammas) else None, c) for j, c in enumerate(closed, start=1)
    ]


def cmd_schur(args, cfg, out):
    """Schur parameters of a function along nodes, with Blaschke detection."""
    f = _load_function(args.function)
    if args.nodes:
        nodes = parse_complex_list(args.nodes)
        if args.length is not None and args.length != len(nodes):
            raise InputError("--length disagrees with the number of --nodes")
    else:
        nodes = [0j] * (args.length if args.length is not None else 4)
    if not nodes:
        raise InputError("need at least one node")
    seq = gamma_sequence(f, nodes)
    degree = blaschke_degree_detect(seq)
    check = None
    if all(z == 0 for z in nodes) and seq.status is not SchurStatus.TRUNCATED:
        check = _closed_form_check(f, seq.gammas, cfg.jet_order)
    payload = ser.sequence_to_json(seq)
    payload["nodes"] = [ser.complex_to_json(z) for z in nodes]
    payload["moduli"] = [abs(g) for g in seq.gammas]
    payload["blaschke_degree"] = degree
    payload["closed_form_check"] = (
        None
        if check is None
        else [
            {
                "index": j,
                "iterated": None if it is None else ser.complex_to_json(it),
                "closed_form": None if c is None else ser.complex_to_json(c),
                "abs_diff": None if it is None or c is None else abs(it - c),
            }
            for j, it, c in check
        ]
    )
    closed = {j: c for j, _, c in (check or [])}
    header = ["index", "node_re", "node_im", "gamma_re", "gamma_im", "modulus", "closed_re", "closed_im"]
    rows = []
    lines = [f"status  {seq.status.value}", f"blaschke_degree  {degree}"]
    for j, (z, g) in enumerate(zip(nodes, seq.gammas)):
        c = closed.get(j)
        rows.append(
            [j, float(z.real), float(z.imag), float(g.real), float(g.imag), float(abs(g)),
             "" if c is None else float(c.real), "" if c is None else float(c.imag)]
        )
        lines.append(f"gamma_{j}  {_fmt(g)}" + ("" if c is None else f"  closed form {_fmt(c)}"))
    out.emit(payload, header, rows, lines)
    return EXIT_OK


def cmd_bounds(args, cfg, out):
    """Modulus (T) and distance (R) bound chains at ``z`` about ``z0``."""
    if (args.function is None) == (args.dataset is None):
        raise InputError("pass exactly one of --function and --dataset")
    z = check_point(parse_complex(args.z), name="z")
    f = None
    if args.function is not None:
        f = _load_function(args.function)
        z0 = check_point(parse_complex(args.z0 or "0"), name="z0")
        if args.nodes:
            nodes = parse_complex_list(args.nodes)
            if nodes[0] != z0:
                raise InputError("the first node must equal --z0")
        else:
            nodes = [z0] * (args.depth if args.depth is not None else 2)
        seq = gamma_sequence(f, nodes)
    else:
        data = _load_dataset(args.dataset)
        nodes = list(data.z)
        z0 = nodes[0]
        if args.z0 is not None and parse_complex(args.z0) != z0:
            raise InputError("--z0 must be the first data node")
        if args.depth is not None:
            if args.depth > len(nodes):
                raise InputError("depth exceeds the number of data points")
            nodes = nodes[: args.depth]
        status, seq = schur_verdict(type(data)(tuple(nodes), data.w[: len(nodes)]))
        if status is FeasibilityStatus.INFEASIBLE:
            return out.error(EXIT_INFEASIBLE, "interpolation data are infeasible", _pick_diagnostics(data))
    usable = len(nodes) if seq.status is SchurStatus.ALL_INTERIOR else seq.index
    truncated = usable < len(nodes)
    gs = seq.gammas[:usable]
    t_chain = modulus_bound_chain(nodes[:usable], gs, z).values if usable else ()
    r_chain = distance_bound_chain(nodes[:usable], gs, z, z0).values if usable else ()
    payload = {
        "z": ser.complex_to_json(z),
        "z0": ser.complex_to_json(z0),
        "nodes": [ser.complex_to_json(x) for x in nodes],
        "gammas": [ser.complex_to_json(g) for g in seq.gammas],
        "gamma_status": seq.status.value,
        "t_chain": list(t_chain),
        "r_chain": list(r_chain),
        "truncated": truncated,
        "pseudo_distance": abs(bracket(z, z0)),
    }
    lines = [f"t_chain  {list(t_chain)!r}", f"r_chain  {list(r_chain)!r}"]
    if f is not None:
        fz, fz0 = f(z), f(z0)
        payload["realized"] = {
            "modulus": abs(fz),
            "exp_distance": math.exp(hyperbolic_distance(fz, fz0)) if max(abs(fz), abs(fz0)) < 1 else None,
        }
        lines.append(f"realized |f(z)|  {abs(fz)!r}")
    if truncated:
        lines.append(f"truncated at index {usable}: unimodular parameter")
    rows = [
        [k, repr(t_chain[k]), repr(r_chain[k])] for k in range(len(t_chain))
    ]
    out.emit(payload, ["index", "t_chain", "r_chain"], rows, lines)
    return EXIT_TRUNCATED if truncated else EXIT_OK


def cmd_verify(args, cfg, out):
    """Run the seeded property suite."""
    only = args.only.split(",") if args.only else None
    known = {p.name for p in PROPERTIES}
    if only and set(only) - known:
        raise InputError(f"unknown property: {', '.join(sorted(set(only) - known))}")
    try:
        report = run_suite(cfg.seed, cfg.samples, cfg.jet_order, cfg.tolerances, only)
    except KeyError as e:
        raise InputError(str(e.args[0])) from None
    rows = [
        [r.name, repr(r.tolerance), repr(r.max_violation), r.samples, r.passed]
        for r in report.results
    ]
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}  max violation {r.max_violation!r} (tol {r.tolerance!r})"
        for r in report.results
    ]
    lines.append("all properties passed" if report.passed else "property failure")
    out.emit(report.as_dict(), ["name", "tolerance", "max_violation", "samples", "passed"], rows, lines)
    return EXIT_OK if report.passed else EXIT_PROPERTY


# -- argument parsing ---------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    common.add_argument("--samples", type=int, default=200, help="samples per property")
    common.add_argument("--jet-order", type=int, default=8, help="jet order in [3, 16]")
    common.add_argument(
        "--tol", type=parse_tol, action="append", default=[], metavar="NAME=VALUE",
        help="override a property tolerance ('all' sets every one)",
    )
    common.add_argument("--output", choices=OUTPUTS, default="json")

    p = argparse.ArgumentParser(
        prog="schurpick", description="Multi-point Schwarz-Pick tools for bounded analytic functions."
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("region", parents=[common], help="variability region of f(z) for a dataset")
    r.add_argument("dataset", help='dataset JSON (path, "-" or inline)')
    r.add_argument("--z", required=True, help="query point, e.g. 0.5 or 0.3+0.1j")
    r.add_argument("--emit-boundary", type=int, default=0, metavar="N", help="also print N boundary points")
    r.set_defaults(handler=cmd_region)

    s = sub.add_parser("schur", parents=[common], help="Schur parameters of a function tree")
    s.add_argument("function", help='function-tree JSON (path, "-" or inline)')
    s.add_argument("--nodes", help="comma-separated nodes (default: all 0)")
    s.add_argument("--length", type=int, help="number of parameters when nodes default to 0")
    s.set_defaults(handler=cmd_schur)

    b = sub.add_parser("bounds", parents=[common], help="T- and R-chains of bounds")
    b.add_argument("--function", help="function-tree JSON")
    b.add_argument("--dataset", help="dataset JSON; its nodes are used in order")
    b.add_argument("--z", required=True)
    b.add_argument("--z0", help="base point (default 0 for functions, first node for data)")
    b.add_argument("--depth", type=int, help="number of chain entries (default 2)")
    b.add_argument("--nodes", help="explicit comma-separated nodes; the first must be z0")
    b.set_defaults(handler=cmd_bounds)

    v = sub.add_parser("verify", parents=[common], help="run the seeded property suite")
    v.add_argument("--only", help="comma-separated property names")
    v.set_defaults(handler=cmd_verify)
    return p


def main(argv=None, stdout=None):
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and EXIT_INPUT
    try:
        cfg = RunConfig(args.seed, args.samples, dict(args.tol), args.jet_order, args.output)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    out = _Out(cfg, stdout)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UnimodularInnerWarning)
            return args.handler(args, cfg, out)
    except InfeasibleData as e:
        return out.error(EXIT_INFEASIBLE, str(e))
    except (InputError, SchurPickError, ValueError, TypeError) as e:
        return out.error(EXIT_INPUT, str(e))


if __name__ == "__main__":
    sys.exit(main())
