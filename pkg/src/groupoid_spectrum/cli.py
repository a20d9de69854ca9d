"""Command line frontend.

Reports are deterministic: fixed key order, sorted lists, no timestamps, and
exact values rendered as rational strings (SO(3) residuals use scientific
notation with three significant digits).  Exit codes describe tool health,
not verdicts: 0 for a completed analysis (whatever it concluded), 2 for
invalid input, 1 for an internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import traceback
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .convergence import (
    DEFAULT_TESTS,
    CharSeqSpec,
    DyadicArrowFamily,
    FamilyFormatError,
    PointSeqSpec,
    condition_c_check,
    parse_family,
    run_family_check,
    run_family_truncated,
)
from .digraph import (
    DiGraph,
    GraphParseError,
    InvalidGraphError,
    parse_graph,
    require_validated,
    validate_graph,
)
from .exact import AffineSeq, DyadicSeq, format_rational, parse_rational
from .models import (
    LINE_BRANCH,
    CharQ,
    CharSO3,
    PointY,
    dyadic_act_dual,
    dyadic_chart,
    random_rotation,
    so3_conj_residual,
    so3_spectrum_point,
    so3_transport,
)
from .spectrum import (
    ConditionARequired,
    EventualPath,
    check_condition_a,
    decide_hausdorff_spectrum,
    orbits,
    shift_equivalent,
    stabilizer_of_path,
)

SEED_ENV = "GROUPOID_SPECTRUM_SEED"


class InputError(Exception):
    """Invalid input; maps to exit code 2."""


def _emit(report: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str, transpose: bool) -> DiGraph:
    try:
        g = parse_graph(_read_text(path))
    except GraphParseError as exc:
        raise InputError(str(exc)) from None
    return g.transpose() if transpose else g


def _envelope(command: str, **fields) -> dict:
    return {"command": command, "version": __version__, **fields}


# ---------------------------------------------------------------------------
# graph commands


def cmd_graph_analyze(args) -> int:
    g = _load_graph(args.graph, args.transpose)
    violations = validate_graph(g)
    if violations:
        report = _envelope(
            "graph-analyze",
            input=args.graph,
            transpose=args.transpose,
            validated=False,
            violations=[v.to_json() for v in violations],
        )
        lines = ["validated: no"] + [f"  {v.detail}" for v in violations]
        _emit(report, lines, args.json)
        return 2
    verdict = decide_hausdorff_spectrum(g)
    report = _envelope(
        "graph-analyze",
        input=args.graph,
        transpose=args.transpose,
        **verdict.to_json(),
    )
    a, b = verdict.condition_a, verdict.condition_b
    lines = [
        "validated: yes",
        f"condition A: {'PASS' if a.passed else 'FAIL'} "
        f"({len(a.cycles)} cycles, {len(a.entries)} entries)",
    ]
    for c in a.cycles:
        lines.append(f"  cycle: {','.join(c.edge_ids())}")
    for c, e in a.entries:
        lines.append(f"  entry: {e.id} -> cycle {','.join(c.edge_ids())}")
    for cert in a.certificates:
        lines.append(
            f"  stabilizer discontinuity: approximating periods 0, "
            f"Fell limit {cert.approx_limit.label()} vs {cert.limit_period}Z at the cycle"
        )
    if b.status == "skipped":
        lines.append("condition B: SKIPPED (condition A failed)")
    else:
        lines.append(f"condition B: {b.status.upper()} ({len(b.certificates)} certificates)")
        for cert in b.certificates:
            pair = " | ".join(",".join(ids) for ids in (cert.pair[0].edge_ids(), cert.pair[1].edge_ids()))
            lines.append(f"  pair ({pair}): u={cert.u} v={cert.v}")
        if b.refutation is not None:
            lines.append("  refuted: every candidate pair has a common ancestor")
    lines.append(f"condition C: {report['condition_c']}")
    lines.append(f"hausdorff: {'YES' if verdict.hausdorff else 'NO'}")
    _emit(report, lines, args.json)
    return 0


def cmd_graph_orbits(args) -> int:
    g = _load_graph(args.graph, args.transpose)
    try:
        reps = orbits(g)
    except InvalidGraphError as exc:
        raise InputError(str(exc)) from None
    except ConditionARequired as exc:
        entries = [
            {"cycle": list(c.edge_ids()), "entry": e.id}
            for c, e in check_condition_a(g).entries
        ]
        report = _envelope(
            "graph-orbits",
            input=args.graph,
            transpose=args.transpose,
            validated=True,
            refused=True,
            reason=str(exc),
            entries=entries,
        )
        lines = [f"refused: {exc}"] + [
            f"  entry: {e['entry']} -> cycle {','.join(e['cycle'])}" for e in entries
        ]
        _emit(report, lines, args.json)
        return 0
    report = _envelope(
        "graph-orbits",
        input=args.graph,
        transpose=args.transpose,
        validated=True,
        refused=False,
        orbits=[list(c.edge_ids()) for c in reps],
        count=len(reps),
    )
    lines = [f"orbits: {len(reps)}"] + [f"  {','.join(c.edge_ids())}" for c in reps]
    _emit(report, lines, args.json)
    return 0


def _parse_path_literal(g: DiGraph, literal: str) -> EventualPath:
    """Path literal 'p1,p2:c1,c2' (prefix before the colon, may be empty)."""
    if ":" not in literal:
        raise InputError(f"path literal needs ':' separating prefix and cycle: {literal!r}")
    prefix_part, cycle_part = literal.split(":", 1)
    def lookup(ids_csv: str) -> tuple:
        out = []
        for eid in ids_csv.split(","):
            eid = eid.strip()
            if not eid:
                continue
            if eid not in g.edge_by_id:
                raise InputError(f"unknown edge id {eid!r}")
            out.append(g.edge_by_id[eid])
        return tuple(out)
    prefix, cycle = lookup(prefix_part), lookup(cycle_part)
    if not cycle:
        raise InputError(f"path literal has an empty cycle part: {literal!r}")
    try:
        return EventualPath(prefix, cycle)
    except ValueError as exc:
        raise InputError(f"bad path literal {literal!r}: {exc}") from None


def cmd_graph_equiv(args) -> int:
    g = _load_graph(args.graph, args.transpose)
    try:
        require_validated(g)
    except InvalidGraphError as exc:
        raise InputError(str(exc)) from None
    x = _parse_path_literal(g, args.x)
    y = _parse_path_literal(g, args.y)
    equivalent = shift_equivalent(x, y)
    report = _envelope(
        "graph-equiv",
        input=args.graph,
        transpose=args.transpose,
        x=x.to_json(),
        y=y.to_json(),
        minimized={"x": x.minimize().to_json(), "y": y.minimize().to_json()},
        shift_equivalent=equivalent,
        stabilizer_periods={"x": stabilizer_of_path(x), "y": stabilizer_of_path(y)},
    )
    lines = [
        f"shift equivalent: {'yes' if equivalent else 'no'}",
        f"stabilizer period of x: {stabilizer_of_path(x)}",
        f"stabilizer period of y: {stabilizer_of_path(y)}",
    ]
    _emit(report, lines, args.json)
    return 0


# ---------------------------------------------------------------------------
# model-green


def cmd_green_verify(args) -> int:
    rows = []
    all_equal = True
    for n in range(args.n_max + 1):
        start = dyadic_chart(n, 0)
        moved = dyadic_chart(n, 2 * n + 1)
        expected = (Fraction(1, 2 ** (2 * n + 1)), Fraction(0), Fraction(0))
        equal = moved == expected
        all_equal = all_equal and equal
        rows.append(
            {
                "n": n,
                "start": [format_rational(c) for c in start],
                "shift": 2 * n + 1,
                "end": [format_rational(c) for c in moved],
                "expected": [format_rational(c) for c in expected],
                "equal": equal,
            }
        )
    report = _envelope(
        "model-green verify-eq3",
        n_max=args.n_max,
        rows=rows,
        confirmations=sum(1 for r in rows if r["equal"]),
        all_equal=all_equal,
    )
    lines = []
    for r in rows:
        lines.append(
            f"n={r['n']}: ({','.join(r['start'])}) + {r['shift']} "
            f"-> ({','.join(r['end'])})  [{'ok' if r['equal'] else 'MISMATCH'}]"
        )
    lines.append(
        f"{report['confirmations']} exact confirmations"
        + ("" if all_equal else "; MISMATCH FOUND")
    )
    _emit(report, lines, args.json)
    return 0


# ---------------------------------------------------------------------------
# model-dyadic


def _parse_tests(csv: str | None) -> tuple[Fraction, ...]:
    if not csv:
        return DEFAULT_TESTS
    try:
        return tuple(parse_rational(part) for part in csv.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --tests value: {exc}") from None


def counterexample_setup() -> tuple[DyadicArrowFamily, CharSeqSpec, CharQ, CharQ]:
    """The exact family gamma_i = ((0, 2i+1), chart i at 2i+1), chi_i = 1-hat."""
    family = DyadicArrowFamily(
        DyadicSeq.constant(0), AffineSeq(2, 1), PointSeqSpec(None, AffineSeq(2, 1))
    )
    chi_spec = CharSeqSpec(family.source_spec(), DyadicSeq.constant(1))
    origin = PointY(LINE_BRANCH, 0)
    return family, chi_spec, CharQ(Fraction(1), origin), CharQ(Fraction(0), origin)


def cmd_dyadic_demo(args) -> int:
    tests = _parse_tests(args.tests)
    family, chi_spec, chi, omega = counterexample_setup()
    verdict = condition_c_check(family, chi_spec, chi, omega, tests)
    rows = []
    for n in range(args.n_max + 1):
        gamma = family.arrow_at(n)
        chi_n = CharQ(chi_spec.parameter(n), chi_spec.base.point_at(n))
        moved = dyadic_act_dual(gamma, chi_n)
        rows.append(
            {
                "n": n,
                "gamma": gamma.to_json(),
                "chi": chi_n.to_json(),
                "transported": moved.to_json(),
            }
        )
    report = _envelope(
        "model-dyadic demo-c-failure",
        n_max=args.n_max,
        tests=[format_rational(q) for q in tests],
        rows=rows,
        limits={"chi": chi.to_json(), "omega": omega.to_json()},
        **verdict.to_json(),
        verdict="condition (c) VIOLATED" if not verdict.holds else "condition (c) holds",
    )
    lines = []
    for r in rows:
        lines.append(
            f"n={r['n']}: gamma=(({r['gamma']['h']['q']},{r['gamma']['h']['n']}), "
            f"({','.join(r['gamma']['base']['embed'])}))  "
            f"chi={r['chi']['r']}-hat at ({','.join(r['chi']['base']['embed'])})  "
            f"gamma.chi={r['transported']['r']}-hat"
        )
    lines.append(
        f"limits: chi = {chi.to_json()['r']}-hat at "
        f"({','.join(chi.base.to_json()['embed'])}), omega = {omega.to_json()['r']}-hat "
        f"at ({','.join(omega.base.to_json()['embed'])})"
    )
    lines.append(report["verdict"])
    _emit(report, lines, args.json)
    return 0


def cmd_dyadic_check_s(args) -> int:
    try:
        obj = json.loads(_read_text(args.family))
        spec = parse_family(obj)
    except (json.JSONDecodeError, FamilyFormatError) as exc:
        raise InputError(f"bad family file: {exc}") from None
    if spec.space != "S":
        raise InputError("family file declares the dual space; use check-family for it")
    result = run_family_check(spec)
    report = _envelope("model-dyadic check-c-on-s", input=args.family, **result)
    lines = _family_lines(result)
    _emit(report, lines, args.json)
    return 0


def _family_lines(result: dict) -> list[str]:
    if result["outcome"] == "hypothesis-failure":
        return [f"hypothesis failure: {result['hypothesis_failure']}"]
    if result["outcome"] == "numeric-probe":
        return [
            f"numeric probe at index {result['row']['index']}: "
            f"{'within' if result['within_tolerance'] else 'outside'} tolerance {result['tolerance']}"
        ]
    verdict = result["verdict"]
    lines = [f"holds: {'yes' if verdict['holds'] else 'no'}"]
    if "branch" in verdict:
        lines.append(f"branch: {verdict['branch']}")
    if "note" in verdict:
        lines.append(f"note: {verdict['note']}")
    return lines


# ---------------------------------------------------------------------------
# model-so3


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return 0


def cmd_so3_conj(args) -> int:
    seed = _resolve_seed(args)
    rng = np.random.default_rng(seed)
    max_residual = 0.0
    max_invariant = 0.0
    index_preserved = True
    for _ in range(args.trials):
        v_mat = random_rotation(rng)
        axis = rng.normal(size=3)
        while float(np.linalg.norm(axis)) < 1e-8:
            axis = rng.normal(size=3)
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        max_residual = max(max_residual, so3_conj_residual(v_mat, axis, theta))
        k = int(rng.integers(-5, 6))
        chi = CharSO3.at(axis, k)
        moved = so3_transport(v_mat, chi)
        norm0, k0 = so3_spectrum_point(chi)
        norm1, k1 = so3_spectrum_point(moved)
        max_invariant = max(max_invariant, abs(norm1 - norm0))
        index_preserved = index_preserved and k0 == k1
    passed = max_residual <= args.tol and max_invariant <= args.tol and index_preserved
    report = _envelope(
        "model-so3 conj-test",
        trials=args.trials,
        seed=seed,
        tol=f"{args.tol:.3e}",
        max_residual=f"{max_residual:.3e}",
        max_invariant_residual=f"{max_invariant:.3e}",
        index_preserved=index_preserved,
        **{"pass": passed},
    )
    lines = [
        f"trials: {args.trials} (seed {seed})",
        f"max conjugation residual: {max_residual:.3e}",
        f"max orbit invariant residual: {max_invariant:.3e}",
        f"integer index preserved: {'yes' if index_preserved else 'no'}",
        f"{'PASS' if passed else 'FAIL'} (tolerance {args.tol:.3e})",
    ]
    _emit(report, lines, args.json)
    return 0


def cmd_so3_spectrum(args) -> int:
    try:
        coords = [float(part) for part in args.v.split(",")]
    except ValueError as exc:
        raise InputError(f"bad --v value: {exc}") from None
    if len(coords) != 3:
        raise InputError("--v needs exactly three comma-separated coordinates")
    chi = CharSO3.at(coords, args.k)
    norm, k = so3_spectrum_point(chi)
    report = _envelope(
        "model-so3 spectrum",
        v=list(chi.v),
        k=k,
        invariants={"norm": f"{norm:.12e}", "k": k},
    )
    lines = [f"orbit invariants: |v| = {norm:.12e}, k = {k}"]
    _emit(report, lines, args.json)
    return 0


# ---------------------------------------------------------------------------
# check-family


def cmd_check_family(args) -> int:
    try:
        obj = json.loads(_read_text(args.family))
        spec = parse_family(obj)
    except (json.JSONDecodeError, FamilyFormatError) as exc:
        raise InputError(f"bad family file: {exc}") from None
    if args.tests:
        if spec.space != "dual":
            raise InputError("--tests only applies to dual-space families")
        spec = type(spec)(
            spec.space, spec.family, spec.seq, spec.limit_chi, spec.limit_omega,
            _parse_tests(args.tests),
        )
    if args.truncate is not None:
        result = run_family_truncated(spec, args.truncate, args.tol)
    else:
        result = run_family_check(spec)
    report = _envelope("check-family", input=args.family, **result)
    _emit(report, _family_lines(result), args.json)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupoid-spectrum",
        description="Exact checks for Hausdorff spectra of groupoid algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="emit a JSON report")
        fmt.add_argument(
            "--text", action="store_false", dest="json", help="emit plain text (default)"
        )
        p.set_defaults(json=False)

    p = sub.add_parser("graph-analyze", help="decide the Hausdorff spectrum conditions")
    p.add_argument("graph", help="graph file (line format or JSON)")
    p.add_argument("--transpose", action="store_true", help="reverse every edge first")
    add_output_flags(p)
    p.set_defaults(func=cmd_graph_analyze)

    p = sub.add_parser("graph-orbits", help="orbit representatives of the path space")
    p.add_argument("graph")
    p.add_argument("--transpose", action="store_true")
    add_output_flags(p)
    p.set_defaults(func=cmd_graph_orbits)

    p = sub.add_parser("graph-equiv", help="shift equivalence of two eventually periodic paths")
    p.add_argument("graph")
    p.add_argument("--x", required=True, help="path literal 'p1,p2:c1,c2'")
    p.add_argument("--y", required=True)
    p.add_argument("--transpose", action="store_true")
    add_output_flags(p)
    p.set_defaults(func=cmd_graph_equiv)

    green = sub.add_parser("model-green", help="the flow model").add_subparsers(
        dest="verb", required=True
    )
    p = green.add_parser("verify-eq3", help="verify the chart translation identity")
    p.add_argument("--n-max", type=int, default=20)
    add_output_flags(p)
    p.set_defaults(func=cmd_green_verify)

    dyadic = sub.add_parser("model-dyadic", help="the dyadic model").add_subparsers(
        dest="verb", required=True
    )
    p = dyadic.add_parser("demo-c-failure", help="the dual-convergence counterexample")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--tests", help="comma separated rational test points")
    add_output_flags(p)
    p.set_defaults(func=cmd_dyadic_demo)
    p = dyadic.add_parser("check-c-on-s", help="run an S-space family file")
    p.add_argument("--family", required=True)
    add_output_flags(p)
    p.set_defaults(func=cmd_dyadic_check_s)

    so3 = sub.add_parser("model-so3", help="the rotation model").add_subparsers(
        dest="verb", required=True
    )
    p = so3.add_parser("conj-test", help="random conjugation residuals")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-10)
    add_output_flags(p)
    p.set_defaults(func=cmd_so3_conj)
    p = so3.add_parser("spectrum", help="orbit invariants of a character datum")
    p.add_argument("--v", required=True, help="base point 'x,y,z'")
    p.add_argument("--k", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(func=cmd_so3_spectrum)

    p = sub.add_parser("check-family", help="run a family file (dual or S space)")
    p.add_argument("family")
    p.add_argument("--tests", help="comma separated rational test points")
    p.add_argument("--truncate", type=int, default=None, help="non-certifying probe index")
    p.add_argument("--tol", type=float, default=1e-9, help="tolerance for --truncate")
    add_output_flags(p)
    p.set_defaults(func=cmd_check_family)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidGraphError as exc:
        print(f"error: invalid graph: {exc}", file=sys.stderr)
        return 2
    except Exception:  # pragma: no cover - internal errors
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
