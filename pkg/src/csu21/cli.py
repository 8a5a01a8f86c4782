"""Command-line interface.

Subcommands::

    cs-seifert    exact invariants from presentation + representation data
    verify-table  recompute the Sigma(2, 3, 11) invariant table
    classify      isometry type of a U(2,1) matrix
    variation     CS change along a connection path, both routes
    find-reps     search for representations in prescribed classes
    mul           product of two universal-cover elements
    check-u21     membership / cover-element validation

All inputs are JSON read from a file argument or stdin ("-"); all
outputs go to stdout, human-readable by default, as a structured
envelope with --json.  Exit codes: 0 success, 1 malformed input,
2 validation failure, 3 search non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio
from .repfinder import extract_lift_data, find_representation, implied_angles
from .seifert import (
    burns_epstein,
    canonical_lift_data,
    cs_closed,
    cs_pipeline,
    presentation,
    sigma_2_3_11_fixture,
    validate_rep,
)
from .ug21 import TOL_ANGLE, TOL_GROUP, check_u21, classify, g_multiply, is_reducible
from .variation import cs_delta_closed, cs_delta_quadrature

_MALFORMED = (OSError, json.JSONDecodeError, ValueError, TypeError, KeyError)
_DOMAIN = (ValueError, TypeError, ArithmeticError, RuntimeError)


def _load_json(args):
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    return json.loads(text)


def _ok(payload, diagnostics=()):
    return 0, "ok", payload, list(diagnostics)


def _fail(code, payload, diagnostics):
    return code, "fail", payload, list(diagnostics)


def cmd_cs_seifert(args):
    try:
        doc = _load_json(args)
        pres = jsonio.decode_presentation(doc)
        if "data" in doc:
            source = ("data", jsonio.decode_rep_data(doc["data"]))
        elif "angles" in doc:
            source = ("angles", jsonio.decode_angles(doc["angles"]))
        else:
            raise ValueError("input needs either 'data' or 'angles'")
    except _MALFORMED as exc:
        return _fail(1, {}, [f"malformed input: {exc}"])
    try:
        if source[0] == "angles":
            gens, central = source[1]
            data = canonical_lift_data(pres, gens, central)
        else:
            data = source[1]
        report = validate_rep(pres, data)
        if not report.ok:
            diags = [f"constraint {c.name} failed: {c.detail}" for c in report.failures()]
            return _fail(2, {"data": jsonio.encode_rep_data(data)}, diags)
        cs = cs_closed(pres, data, validate=False)
        pipe = cs_pipeline(pres, data, validate=False)
        mu = burns_epstein(cs)
        payload = {
            "presentation": jsonio.encode_presentation(pres),
            "data": jsonio.encode_rep_data(data),
            "cs": jsonio.encode_fraction(cs),
            "cs_decimal": float(cs),
            "burns_epstein": jsonio.encode_fraction(mu),
            "burns_epstein_decimal": float(mu),
            "pipeline_cs": jsonio.encode_fraction(pipe),
            "pipeline_agrees": pipe == cs,
        }
        if pipe != cs:
            return _fail(2, payload, ["closed formula and pipeline disagree"])
        return _ok(payload)
    except _DOMAIN as exc:
        return _fail(2, {}, [str(exc)])


def cmd_verify_table(args):
    cases = sigma_2_3_11_fixture()
    if args.case is not None:
        cases = tuple(c for c in cases if c.label == str(args.case))
    pres = presentation((2, 3, 11))
    rows = []
    try:
        for case in cases:
            data = canonical_lift_data(pres, case.generators, case.central)
            pipe = cs_pipeline(pres, data)
            row = {
                "case": case.label,
                "expected": jsonio.encode_fraction(case.expected_cs),
                "pipeline": jsonio.encode_fraction(pipe),
            }
            match = pipe == case.expected_cs
            value = pipe
            if not args.pipeline_only:
                closed = cs_closed(pres, data)
                row["closed"] = jsonio.encode_fraction(closed)
                match = match and closed == case.expected_cs
                value = closed
            row["burns_epstein"] = jsonio.encode_fraction(burns_epstein(value))
            row["match"] = match
            rows.append(row)
    except _DOMAIN as exc:
        return _fail(2, {"cases": rows}, [str(exc)])
    all_match = all(r["match"] for r in rows) and len(rows) > 0
    payload = {"presentation": jsonio.encode_presentation(pres), "cases": rows, "all_match": all_match}
    if not all_match:
        bad = [r["case"] for r in rows if not r["match"]] or ["<none selected>"]
        return _fail(2, payload, [f"table mismatch in case(s): {', '.join(bad)}"])
    return _ok(payload)


def cmd_classify(args):
    try:
        doc = _load_json(args)
        m = jsonio.decode_matrix(doc["matrix"] if isinstance(doc, dict) else doc)
    except _MALFORMED as exc:
        return _fail(1, {}, [f"malformed input: {exc}"])
    try:
        residual = check_u21(m)
        if residual > args.tol_group:
            return _fail(2, {"residual": residual}, [
                f"matrix is not in U(2,1): residual {residual:.3e} > tol-group {args.tol_group:.3e}"
            ])
        kind = classify(m)
        return _ok({"type": kind.value, "residual": residual})
    except _DOMAIN as exc:
        return _fail(2, {}, [str(exc)])


def cmd_variation(args):
    try:
        doc = _load_json(args)
        path, n = jsonio.decode_path(doc)
    except _MALFORMED as exc:
        return _fail(1, {}, [f"malformed input: {exc}"])
    try:
        closed = cs_delta_closed(path)
        quad = cs_delta_quadrature(path, n)
        return _ok(
            {
                "family": path.family,
                "closed": closed,
                "quadrature": quad,
                "difference": abs(closed - quad),
                "n": n,
            }
        )
    except _DOMAIN as exc:
        return _fail(2, {}, [str(exc)])


def cmd_find_reps(args):
    try:
        doc = _load_json(args)
        pres = jsonio.decode_presentation(doc)
        target = jsonio.decode_class_target(doc["target"])
    except _MALFORMED as exc:
        return _fail(1, {}, [f"malformed input: {exc}"])
    try:
        # Pre-flight: the exact lift must exist before any search is worth it.
        gens, central = implied_angles(pres, target)
        data = canonical_lift_data(pres, gens, central)
    except _DOMAIN as exc:
        return _fail(2, {"target": jsonio.encode_class_target(target)}, [str(exc)])
    try:
        result = find_representation(pres, target, seed=args.seed, budget=args.budget)
        if not result.converged:
            return _fail(
                3,
                {"search": jsonio.encode_search_result(result)},
                [
                    f"search did not converge: best residual {result.residual:.3e} > 1e-06 "
                    f"after budget {args.budget}"
                ],
            )
        data = extract_lift_data(pres, result, target)
        cs = cs_closed(pres, data)
        payload = {
            "presentation": jsonio.encode_presentation(pres),
            "search": jsonio.encode_search_result(result),
            "data": jsonio.encode_rep_data(data),
            "cs": jsonio.encode_fraction(cs),
            "cs_decimal": float(cs),
            "burns_epstein": jsonio.encode_fraction(burns_epstein(cs)),
            "irreducible": not is_reducible(result.matrices),
        }
        return _ok(payload)
    except _DOMAIN as exc:
        return _fail(2, {}, [str(exc)])


def cmd_mul(args):
    try:
        doc = _load_json(args)
        g = jsonio.decode_g_element(doc["g"])
        h = jsonio.decode_g_element(doc["h"])
    except _MALFORMED as exc:
        return _fail(1, {}, [f"malformed input: {exc}"])
    try:
        g.validate(args.tol_group, args.tol_angle)
        h.validate(args.tol_group, args.tol_angle)
        prod = g_multiply(g, h)
        return _ok({"product": jsonio.encode_g_element(prod)})
    except _DOMAIN as exc:
        return _fail(2, {}, [str(exc)])


def cmd_check_u21(args):
    try:
        doc = _load_json(args)
        if isinstance(doc, dict) and "theta1" in doc:
            obj = ("g", jsonio.decode_g_element(doc))
        else:
            obj = ("matrix", jsonio.decode_matrix(doc["matrix"] if isinstance(doc, dict) else doc))
    except _MALFORMED as exc:
        return _fail(1, {}, [f"malformed input: {exc}"])
    try:
        if obj[0] == "g":
            g = obj[1]
            residual = check_u21(g.a)
            g.validate(args.tol_group, args.tol_angle)
            return _ok({"kind": "g_element", "residual": residual, "valid": True})
        residual = check_u21(obj[1])
        if residual > args.tol_group:
            return _fail(2, {"kind": "matrix", "residual": residual, "valid": False}, [
                f"membership residual {residual:.3e} > tol-group {args.tol_group:.3e}"
            ])
        return _ok({"kind": "matrix", "residual": residual, "valid": True})
    except _DOMAIN as exc:
        return _fail(2, {}, [str(exc)])


def _render_table(payload) -> str:
    rows = payload["cases"]
    labels = [r["case"] for r in rows]
    width = 9
    lines = ["Sigma(2, 3, 11) invariant table"]
    lines.append("case".ljust(14) + "".join(lab.rjust(width) for lab in labels))
    lines.append("expected".ljust(14) + "".join(r["expected"].rjust(width) for r in rows))
    if "closed" in rows[0]:
        lines.append("closed".ljust(14) + "".join(r["closed"].rjust(width) for r in rows))
    lines.append("pipeline".ljust(14) + "".join(r["pipeline"].rjust(width) for r in rows))
    lines.append("burns-epstein".ljust(14) + "".join(r["burns_epstein"].rjust(width) for r in rows))
    good = sum(1 for r in rows if r["match"])
    lines.append(f"status: {good}/{len(rows)} match")
    return "\n".join(lines)


def _render_human(command, status, payload, diagnostics) -> str:
    lines = []
    if command == "verify-table" and payload.get("cases"):
        lines.append(_render_table(payload))
    else:
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value)
            lines.append(f"{key}: {value}")
    lines.append(f"status: {status}")
    for d in diagnostics:
        lines.append(f"! {d}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csu21",
        description="Chern-Simons and Burns-Epstein invariants of U(2,1)-cover representations",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a structured JSON envelope")
    common.add_argument("--tol-group", type=float, default=TOL_GROUP, help="membership residual tolerance")
    common.add_argument("--tol-angle", type=float, default=TOL_ANGLE, help="angle congruence tolerance")
    sub = parser.add_subparsers(dest="command")

    def add(name, func, help_, with_input=True):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="input JSON file, or - for stdin")
        return p

    add("cs-seifert", cmd_cs_seifert, "exact invariant of Seifert representation data")
    p = add("verify-table", cmd_verify_table, "recompute the Sigma(2,3,11) table", with_input=False)
    p.add_argument("--case", type=int, choices=range(1, 6), help="restrict to one table case")
    p.add_argument("--pipeline-only", action="store_true", help="skip the closed-formula route")
    add("classify", cmd_classify, "isometry type of a U(2,1) matrix")
    add("variation", cmd_variation, "CS change along a connection path")
    p = add("find-reps", cmd_find_reps, "search for representations in prescribed classes")
    p.add_argument("--seed", type=int, default=0, help="search RNG seed")
    p.add_argument("--budget", type=int, default=64, help="restart budget")
    add("mul", cmd_mul, "multiply two universal-cover elements")
    add("check-u21", cmd_check_u21, "validate a matrix or cover element")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help()
        return 0
    code, status, payload, diagnostics = args.func(args)
    if args.json:
        doc = {"command": args.command, "status": status, "payload": payload, "diagnostics": diagnostics}
        print(json.dumps(doc, indent=2))
    else:
        print(_render_human(args.command, status, payload, diagnostics))
    return code


if __name__ == "__main__":
    sys.exit(main())
