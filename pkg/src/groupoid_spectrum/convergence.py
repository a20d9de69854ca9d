"""Exact convergence engine for character and fiber-element sequences.

Sequences live in the closed catalog of ``exact``: group exponents and chart
parameters are affine in the index, fiber coordinates are dyadic power
sequences.  Within the catalog every limit is decided exactly, so a "true"
verdict is a certificate, not a numerical observation.

Three checkers mirror the three ways a convergence hypothesis can resolve:

* ``char_seq_converges``: dual-side convergence.  Characters of the discrete
  dyadic rationals vary continuously in their rational parameter, so the
  sequence converges iff the parameter sequence has an exact limit, and the
  limit character is the candidate iff the parameters agree exactly (any
  nonzero rational phase difference is caught by some dyadic test point).

* ``condition_c_check``: the separation condition for a family of arrows
  whose sources carry a convergent character family.  Transport scales the
  parameter sequence by a power of two per step, which stays in the catalog.

* ``condition_c_on_S_check``: the same family read in the bundle of discrete
  fiber groups, where convergence demands eventually constant fiber
  coordinates; the verdict replays the zero-parameter / free-exponent
  dichotomy.

Hypothesis failures (the premises of a check cannot hold) raise
``HypothesisFailure`` rather than returning a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import (
    DIVERGENT,
    AffineSeq,
    CatalogError,
    DyadicSeq,
    format_rational,
    parse_rational,
    scale_pow2_affine,
)
from .models import (
    LINE_BRANCH,
    ArrowDyadic,
    CharQ,
    CharSO3,
    GroupH,
    PointY,
    SElem,
    so3_transport,
)

__all__ = [
    "DEFAULT_TESTS",
    "HypothesisFailure",
    "FamilyFormatError",
    "PointSeqSpec",
    "CharSeqSpec",
    "SElemSeqSpec",
    "DyadicArrowFamily",
    "CharConvergenceReport",
    "ConditionCVerdict",
    "SConditionVerdict",
    "SO3ConditionCReport",
    "PeriodFamily",
    "FellLimit",
    "FamilySpec",
    "point_seq_limit",
    "char_seq_converges",
    "condition_c_check",
    "condition_c_on_S_check",
    "condition_c_check_so3",
    "fell_subgroup_limit",
    "parse_family",
    "run_family_check",
    "run_family_truncated",
]

DEFAULT_TESTS: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2),
)


class HypothesisFailure(Exception):
    """The premises of a condition check fail along the given family."""

    def __init__(self, reason: str, details: dict | None = None):
        self.reason = reason
        self.details = details or {}
        super().__init__(reason)

    def to_json(self) -> dict:
        return {"hypothesis_failure": self.reason, "details": self.details}


class FamilyFormatError(ValueError):
    """Malformed family description (JSON schema violation)."""


# ---------------------------------------------------------------------------
# Point sequences


@dataclass(frozen=True)
class PointSeqSpec:
    """A sequence of points x_i in orbit coordinates.

    ``branch`` is a fixed chart index (or LINE_BRANCH), or None for the
    index-coupled mode branch_i = i; ``param`` is affine in i.
    """

    branch: int | None
    param: AffineSeq

    def point_at(self, i: int) -> PointY:
        return PointY(i if self.branch is None else self.branch, self.param(i))

    def limit(self) -> "PointY | object":
        """Exact limit point, or DIVERGENT.

        In index mode the chart heights 2**(-2i) collapse onto the limit
        line, so a limit exists iff the second embedding coordinate
        stabilizes: param constant (arm s <= k) or param growing at exactly
        twice the index (arm s >= k+1).
        """
        a, b = self.param.a, self.param.b
        if self.branch is not None:
            return PointY(self.branch, b) if a == 0 else DIVERGENT
        if a == 0:
            return PointY(LINE_BRANCH, b)
        if a == 2:
            return PointY(LINE_BRANCH, b - 1)
        return DIVERGENT

    def translate(self, n: AffineSeq) -> "PointSeqSpec":
        """Termwise parameter translation by another affine sequence."""
        return PointSeqSpec(self.branch, AffineSeq(self.param.a + n.a, self.param.b + n.b))

    def to_json(self) -> dict:
        return {
            "branch": "i" if self.branch is None else self.branch,
            "param": self.param.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "PointSeqSpec":
        if not isinstance(obj, dict) or "branch" not in obj or "param" not in obj:
            raise FamilyFormatError(f"point sequence needs 'branch' and 'param': {obj!r}")
        branch = obj["branch"]
        if branch == "i":
            branch = None
        elif not isinstance(branch, int):
            raise FamilyFormatError(f"branch must be an integer or 'i': {branch!r}")
        try:
            return cls(branch, AffineSeq.from_json(obj["param"]))
        except CatalogError as exc:
            raise FamilyFormatError(str(exc)) from None


def point_seq_limit(spec: PointSeqSpec):
    """Exact limit of the point sequence, or DIVERGENT."""
    return spec.limit()


# ---------------------------------------------------------------------------
# Character sequences on the dual side


@dataclass(frozen=True)
class CharSeqSpec:
    """Characters chi_i = (r_i)-hat based at x_i."""

    base: PointSeqSpec
    parameter: DyadicSeq

    def char_at(self, i: int) -> CharQ:
        return CharQ(self.parameter(i), self.base.point_at(i))

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "r": self.parameter.to_json()}


@dataclass(frozen=True)
class CharConvergenceReport:
    """Outcome of an exact dual-convergence check, with per-test phase rows."""

    converges: bool
    base_limit: PointY
    parameter_limit: "Fraction | object"
    candidate: CharQ
    rows: tuple[dict, ...]
    reason: str

    def to_json(self) -> dict:
        return {
            "converges": self.converges,
            "base_limit": self.base_limit.to_json(),
            "parameter_limit": (
                "divergent"
                if self.parameter_limit is DIVERGENT
                else format_rational(self.parameter_limit)
            ),
            "candidate": self.candidate.to_json(),
            "tests": list(self.rows),
            "reason": self.reason,
        }


def char_seq_converges(
    spec: CharSeqSpec, candidate: CharQ, tests: tuple[Fraction, ...] = DEFAULT_TESTS
) -> CharConvergenceReport:
    """Decide chi_i -> candidate exactly.

    The base sequence must converge to the candidate's base (anything else
    is a usage error, reported as ValueError).  Convergence of the characters
    then reduces to the parameter limit: the sequence converges to the
    candidate iff the exact limit r' equals the candidate parameter r.  The
    per-test rows record the phase difference (r' - r) * q mod 1 at each
    test point q of the fiber group; any nonzero rational difference is
    exposed by a dyadic test, so the rows refute as well as illustrate.
    """
    base_limit = spec.base.limit()
    if base_limit is DIVERGENT:
        raise ValueError("base point sequence diverges; no fiber to converge in")
    if base_limit != candidate.base:
        raise ValueError(
            f"base limit {base_limit} differs from candidate base {candidate.base}"
        )
    r_limit = spec.parameter.limit()
    if r_limit is DIVERGENT:
        return CharConvergenceReport(
            False, base_limit, DIVERGENT, candidate, (),
            "parameter sequence diverges",
        )
    rows = []
    for q in tests:
        phase = ((r_limit - candidate.r) * q) % 1
        rows.append(
            {
                "test": format_rational(q),
                "phase_difference": format_rational(phase),
                "agrees": phase == 0,
            }
        )
    converges = r_limit == candidate.r
    reason = (
        "parameter limit equals candidate parameter"
        if converges
        else f"parameter limit {format_rational(r_limit)} != candidate {format_rational(candidate.r)}"
    )
    return CharConvergenceReport(converges, base_limit, r_limit, candidate, tuple(rows), reason)


# ---------------------------------------------------------------------------
# Arrow families and the separation condition


@dataclass(frozen=True)
class DyadicArrowFamily:
    """Arrows gamma_i = ((q_i, n_i), base_i) with affine exponents."""

    q: DyadicSeq
    n: AffineSeq
    base: PointSeqSpec

    def arrow_at(self, i: int) -> ArrowDyadic:
        return ArrowDyadic(GroupH(self.q(i), self.n(i)), self.base.point_at(i))

    def source_spec(self) -> PointSeqSpec:
        return self.base.translate(self.n.negate())

    def to_json(self) -> dict:
        return {"q": self.q.to_json(), "n": self.n.to_json(), "base": self.base.to_json()}


@dataclass(frozen=True)
class ConditionCVerdict:
    """Verdict of the separation condition along one family."""

    holds: bool
    same_fiber: bool
    chi: CharQ
    omega: CharQ
    chi_report: CharConvergenceReport
    omega_report: CharConvergenceReport
    note: str

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "same_fiber": self.same_fiber,
            "chi": self.chi.to_json(),
            "omega": self.omega.to_json(),
            "convergence": {
                "chi": self.chi_report.to_json(),
                "omega": self.omega_report.to_json(),
            },
            "note": self.note,
        }


def condition_c_check(
    family: DyadicArrowFamily,
    chi_spec: CharSeqSpec,
    chi: CharQ,
    omega: CharQ,
    tests: tuple[Fraction, ...] = DEFAULT_TESTS,
) -> ConditionCVerdict:
    """Check: chi_i -> chi and gamma_i . chi_i -> omega in one fiber force chi == omega.

    The transported parameters are 2**(-n_i) r_i, still in the catalog.  If
    either claimed convergence fails (or the character family is not based
    at the arrow sources), the premises are unsatisfiable and a
    HypothesisFailure is raised instead of a verdict.
    """
    if chi_spec.base != family.source_spec():
        raise HypothesisFailure(
            "character family is not based at the arrow sources",
            {
                "arrow_sources": family.source_spec().to_json(),
                "character_bases": chi_spec.base.to_json(),
            },
        )
    transported = CharSeqSpec(
        family.base, scale_pow2_affine(chi_spec.parameter, -family.n.a, -family.n.b)
    )
    chi_report = _require_convergence(chi_spec, chi, tests, "chi_i -> chi")
    omega_report = _require_convergence(transported, omega, tests, "gamma_i . chi_i -> omega")
    same_fiber = chi.base == omega.base
    if not same_fiber:
        return ConditionCVerdict(
            True, False, chi, omega, chi_report, omega_report,
            "vacuous: limits lie in different fibers",
        )
    holds = chi.r == omega.r
    note = "limits agree" if holds else "limits differ within one fiber"
    return ConditionCVerdict(holds, True, chi, omega, chi_report, omega_report, note)


def _require_convergence(
    spec: CharSeqSpec, candidate: CharQ, tests: tuple[Fraction, ...], label: str
) -> CharConvergenceReport:
    try:
        report = char_seq_converges(spec, candidate, tests)
    except ValueError as exc:
        raise HypothesisFailure(f"{label} fails: {exc}") from None
    if not report.converges:
        raise HypothesisFailure(f"{label} fails: {report.reason}", report.to_json())
    return report


# ---------------------------------------------------------------------------
# The same family in the bundle of discrete fiber groups


@dataclass(frozen=True)
class SElemSeqSpec:
    """Fiber group elements s_i = (r_i, x_i)."""

    base: PointSeqSpec
    parameter: DyadicSeq

    def elem_at(self, i: int) -> SElem:
        return SElem(self.parameter(i), self.base.point_at(i))

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "r": self.parameter.to_json()}


@dataclass(frozen=True)
class SConditionVerdict:
    holds: bool
    branch: str  # "zero-parameter" | "free-exponent" | "vacuous-different-fibers"
    s: SElem
    t: SElem
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "branch": self.branch,
            "s": self.s.to_json(),
            "t": self.t.to_json(),
            "details": self.details,
        }


def _s_limit(spec: SElemSeqSpec, candidate: SElem, label: str) -> None:
    """Convergence in the bundle: eventually constant fiber coordinate."""
    if not spec.parameter.is_eventually_constant():
        raise HypothesisFailure(
            f"{label} has no limit: fiber coordinates {spec.parameter.to_json()} "
            "are never eventually constant in the discrete fiber group",
            {"parameter": spec.parameter.to_json()},
        )
    value = spec.parameter.limit()
    if value != candidate.r:
        raise HypothesisFailure(
            f"{label} fails: eventual fiber coordinate {format_rational(value)} "
            f"!= {format_rational(candidate.r)}"
        )
    base_limit = spec.base.limit()
    if base_limit is DIVERGENT or base_limit != candidate.base:
        raise HypothesisFailure(f"{label} fails: base points do not converge to the claimed base")


def condition_c_on_S_check(
    family: DyadicArrowFamily, s_spec: SElemSeqSpec, s: SElem, t: SElem
) -> SConditionVerdict:
    """The separation condition read in S, where fibers are discrete.

    s_i -> s demands an eventually constant fiber coordinate; so does
    gamma_i . s_i -> t, whose coordinates are 2**(n_i) r_i.  When both limits
    exist in one fiber the dichotomy resolves: either the coordinate is zero
    on both sides, or a nonzero coordinate forces the exponent sequence to
    stabilize at 0 (the integer translation action is free), so s == t either
    way.
    """
    if s_spec.base != family.source_spec():
        raise HypothesisFailure(
            "fiber element family is not based at the arrow sources",
            {
                "arrow_sources": family.source_spec().to_json(),
                "element_bases": s_spec.base.to_json(),
            },
        )
    _s_limit(s_spec, s, "s_i -> s")
    transported = SElemSeqSpec(
        family.base, scale_pow2_affine(s_spec.parameter, family.n.a, family.n.b)
    )
    _s_limit(transported, t, "gamma_i . s_i -> t")
    if s.base != t.base:
        return SConditionVerdict(
            True, "vacuous-different-fibers", s, t,
            {"note": "limits lie in different fibers"},
        )
    if s.r == 0 or t.r == 0:
        return SConditionVerdict(
            s == t, "zero-parameter", s, t,
            {"note": "a zero fiber coordinate propagates through every power of 2"},
        )
    exponent = family.n.limit()
    return SConditionVerdict(
        s == t, "free-exponent", s, t,
        {
            "note": "free translation action forces the exponent to stabilize at 0",
            "eventual_exponent": exponent if exponent is not DIVERGENT else "divergent",
        },
    )


# ---------------------------------------------------------------------------
# SO(3) family check (floating point, sampled tails)


@dataclass(frozen=True)
class SO3ConditionCReport:
    """Non-certifying SO(3) verdict from sampled tails of a finite family."""

    holds: bool
    same_fiber: bool
    chi: CharSO3
    omega: CharSO3
    max_base_residual: float
    note: str

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "same_fiber": self.same_fiber,
            "chi": self.chi.to_json(),
            "omega": self.omega.to_json(),
            "max_base_residual": f"{self.max_base_residual:.3e}",
            "note": self.note,
        }


def condition_c_check_so3(
    rotations: list[np.ndarray],
    chi_family: list[CharSO3],
    chi: CharSO3,
    omega: CharSO3,
    tol: float = 1e-10,
) -> SO3ConditionCReport:
    """Sampled check of the separation condition for conjugation families.

    The integer index is discrete, so it must sit at the claimed values
    exactly (a mismatch is a hypothesis failure); base points are compared
    within ``tol`` at the family tail.  Transport preserves the index, which
    is what makes the condition hold whenever the premises do.
    """
    if len(rotations) != len(chi_family) or not chi_family:
        raise HypothesisFailure("family of rotations and characters must align and be nonempty")
    if chi_family[-1].k != chi.k:
        raise HypothesisFailure(
            f"chi_i -> chi fails: tail index {chi_family[-1].k} != {chi.k} in the discrete index"
        )
    transported = [so3_transport(u, c) for u, c in zip(rotations, chi_family)]
    if transported[-1].k != omega.k:
        raise HypothesisFailure(
            f"gamma_i . chi_i -> omega fails: tail index {transported[-1].k} != {omega.k}"
        )
    res_chi = float(np.linalg.norm(np.asarray(chi_family[-1].v) - np.asarray(chi.v)))
    res_omega = float(np.linalg.norm(np.asarray(transported[-1].v) - np.asarray(omega.v)))
    max_res = max(res_chi, res_omega)
    if max_res > tol:
        raise HypothesisFailure(
            f"base points do not reach the claimed limits within {tol:g}",
            {"max_base_residual": f"{max_res:.3e}"},
        )
    same_fiber = float(np.linalg.norm(np.asarray(chi.v) - np.asarray(omega.v))) <= tol
    if not same_fiber:
        return SO3ConditionCReport(
            True, False, chi, omega, max_res, "vacuous: limits lie in different fibers"
        )
    holds = chi.k == omega.k
    note = (
        "transport preserves the integer index, so the limits agree"
        if holds
        else "limits differ within one fiber"
    )
    return SO3ConditionCReport(holds, True, chi, omega, max_res, note)


# ---------------------------------------------------------------------------
# Fell limits of period subgroups of Z


@dataclass(frozen=True)
class PeriodFamily:
    """A family of periods p_i >= 0 (p = 0 denotes the trivial subgroup).

    ``transient`` lists finitely many initial values; ``tail`` is either an
    affine sequence or a repeating pattern.
    """

    tail: AffineSeq | tuple[int, ...]
    transient: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = list(self.transient)
        if isinstance(self.tail, tuple):
            if not self.tail:
                raise ValueError("repeating tail pattern must be nonempty")
            values += list(self.tail)
            if any(p < 0 for p in values):
                raise ValueError("periods must be >= 0")
        else:
            if any(p < 0 for p in values):
                raise ValueError("periods must be >= 0")
            if self.tail.a < 0 or self.tail(len(self.transient)) < 0:
                raise ValueError("affine tail must stay >= 0")

    def period_at(self, i: int) -> int:
        if i < len(self.transient):
            return self.transient[i]
        j = i - len(self.transient)
        if isinstance(self.tail, tuple):
            return self.tail[j % len(self.tail)]
        return self.tail(i)


@dataclass(frozen=True)
class FellLimit:
    """Limit of the subgroups p_i Z in the Fell topology, when it exists."""

    convergent: bool
    period: int | None

    def label(self) -> str:
        if not self.convergent:
            return "not convergent"
        return "{0}" if self.period == 0 else f"{self.period}Z"

    def to_json(self) -> dict:
        return {"convergent": self.convergent, "limit": self.label()}


def fell_subgroup_limit(family: PeriodFamily) -> FellLimit:
    """Fell limit of p_i Z in the subgroup space of Z.

    Subgroup sequences of a discrete group converge iff membership of each
    element stabilizes: an eventually constant period p gives pZ, periods
    growing without bound give the trivial subgroup, and a non-constant
    repeating pattern oscillates (membership of the smallest nonzero period
    never stabilizes), so it does not converge.
    """
    tail = family.tail
    if isinstance(tail, AffineSeq):
        if tail.a > 0:
            return FellLimit(True, 0)
        return FellLimit(True, tail.b)
    if all(p == tail[0] for p in tail):
        return FellLimit(True, tail[0])
    return FellLimit(False, None)


# ---------------------------------------------------------------------------
# Family files


@dataclass(frozen=True)
class FamilySpec:
    """Parsed family description: arrows plus a fiber-data family and limits."""

    space: str  # "dual" | "S"
    family: DyadicArrowFamily
    seq: "CharSeqSpec | SElemSeqSpec"
    limit_chi: "CharQ | SElem"
    limit_omega: "CharQ | SElem"
    tests: tuple[Fraction, ...]

    def to_json(self) -> dict:
        out = {
            "model": "dyadic",
            "space": self.space,
            "gamma": self.family.to_json(),
        }
        if self.space == "dual":
            out["chi"] = self.seq.to_json()
            out["limits"] = {"chi": self.limit_chi.to_json(), "omega": self.limit_omega.to_json()}
            out["tests"] = [format_rational(q) for q in self.tests]
        else:
            out["s"] = self.seq.to_json()
            out["limits"] = {"s": self.limit_chi.to_json(), "t": self.limit_omega.to_json()}
        return out


def _parse_point(obj) -> PointY:
    if not isinstance(obj, dict) or "branch" not in obj or "param" not in obj:
        raise FamilyFormatError(f"point needs 'branch' and 'param': {obj!r}")
    if not isinstance(obj["branch"], int) or not isinstance(obj["param"], int):
        raise FamilyFormatError(f"point branch and param must be integers: {obj!r}")
    return PointY(obj["branch"], obj["param"])


def parse_family(obj: dict) -> FamilySpec:
    """Parse the family JSON schema; raises FamilyFormatError on any defect."""
    if not isinstance(obj, dict):
        raise FamilyFormatError("family description must be a JSON object")
    if obj.get("model") != "dyadic":
        raise FamilyFormatError(f"unsupported model: {obj.get('model')!r} (expected 'dyadic')")
    space = obj.get("space", "dual")
    if space not in ("dual", "S"):
        raise FamilyFormatError(f"space must be 'dual' or 'S', got {space!r}")
    gamma = obj.get("gamma")
    if not isinstance(gamma, dict) or not {"q", "n", "base"} <= set(gamma):
        raise FamilyFormatError("gamma needs 'q', 'n' and 'base'")
    try:
        family = DyadicArrowFamily(
            DyadicSeq.from_json(gamma["q"]),
            AffineSeq.from_json(gamma["n"]),
            PointSeqSpec.from_json(gamma["base"]),
        )
    except CatalogError as exc:
        raise FamilyFormatError(str(exc)) from None
    data_key = "chi" if space == "dual" else "s"
    data = obj.get(data_key)
    if not isinstance(data, dict) or "r" not in data:
        raise FamilyFormatError(f"{data_key!r} needs a parameter sequence 'r'")
    try:
        parameter = DyadicSeq.from_json(data["r"])
    except CatalogError as exc:
        raise FamilyFormatError(str(exc)) from None
    base = (
        PointSeqSpec.from_json(data["base"]) if "base" in data else family.source_spec()
    )
    limits = obj.get("limits")
    lim_keys = ("chi", "omega") if space == "dual" else ("s", "t")
    if not isinstance(limits, dict) or not set(lim_keys) <= set(limits):
        raise FamilyFormatError(f"limits needs {lim_keys[0]!r} and {lim_keys[1]!r}")

    def parse_limit(entry) -> tuple[Fraction, PointY]:
        if not isinstance(entry, dict) or "r" not in entry or "base" not in entry:
            raise FamilyFormatError(f"limit needs 'r' and 'base': {entry!r}")
        try:
            return parse_rational(entry["r"]), _parse_point(entry["base"])
        except (ValueError, ZeroDivisionError) as exc:
            raise FamilyFormatError(f"bad limit value: {exc}") from None

    r1, b1 = parse_limit(limits[lim_keys[0]])
    r2, b2 = parse_limit(limits[lim_keys[1]])
    tests = DEFAULT_TESTS
    if "tests" in obj:
        if not isinstance(obj["tests"], list) or not obj["tests"]:
            raise FamilyFormatError("tests must be a nonempty list of rationals")
        try:
            tests = tuple(parse_rational(t) for t in obj["tests"])
        except (ValueError, ZeroDivisionError) as exc:
            raise FamilyFormatError(f"bad test value: {exc}") from None
    if space == "dual":
        return FamilySpec(
            space, family, CharSeqSpec(base, parameter),
            CharQ(r1, b1), CharQ(r2, b2), tests,
        )
    try:
        lim_s, lim_t = SElem(r1, b1), SElem(r2, b2)
    except ValueError as exc:
        raise FamilyFormatError(str(exc)) from None
    return FamilySpec(space, family, SElemSeqSpec(base, parameter), lim_s, lim_t, tests)


def run_family_check(spec: FamilySpec) -> dict:
    """Run the exact checker for a parsed family; always returns a report.

    Hypothesis failures come back as a report, not an exception: deciding
    that the premises cannot hold is itself a completed analysis.
    """
    try:
        if spec.space == "dual":
            verdict = condition_c_check(
                spec.family, spec.seq, spec.limit_chi, spec.limit_omega, spec.tests
            )
        else:
            verdict = condition_c_on_S_check(
                spec.family, spec.seq, spec.limit_chi, spec.limit_omega
            )
    except HypothesisFailure as failure:
        return {"certifying": True, "outcome": "hypothesis-failure", **failure.to_json()}
    return {"certifying": True, "outcome": "verdict", "verdict": verdict.to_json()}


def run_family_truncated(spec: FamilySpec, truncate: int, tol: float) -> dict:
    """Non-certifying numeric probe: compare the family at one index to the limits.

    Useful as a sanity view only; the exact checker is authoritative.
    """
    if truncate < 0:
        raise FamilyFormatError("truncation index must be >= 0")
    i = truncate
    param = float(spec.seq.parameter(i))
    base = spec.seq.base.point_at(i)
    trans_param = float(spec.seq.parameter(i)) * 2.0 ** (
        (spec.family.n(i)) * (1 if spec.space == "S" else -1)
    )
    trans_base = spec.family.base.point_at(i)

    def embed_dist(p: PointY, q: PointY) -> float:
        pe, qe = p.embed(), q.embed()
        return max(abs(float(a) - float(b)) for a, b in zip(pe, qe))

    row = {
        "index": i,
        "parameter": param,
        "parameter_residual": abs(param - float(spec.limit_chi.r)),
        "base_residual": embed_dist(base, spec.limit_chi.base),
        "transported_parameter": trans_param,
        "transported_residual": abs(trans_param - float(spec.limit_omega.r)),
        "transported_base_residual": embed_dist(trans_base, spec.limit_omega.base),
    }
    within = all(
        row[k] <= tol
        for k in (
            "parameter_residual",
            "base_residual",
            "transported_residual",
            "transported_base_residual",
        )
    )
    return {
        "certifying": False,
        "outcome": "numeric-probe",
        "tolerance": tol,
        "row": row,
        "within_tolerance": within,
    }
