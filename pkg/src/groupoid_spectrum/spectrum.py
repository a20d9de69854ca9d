"""Hausdorff spectrum decision for finite graph groupoid algebras.

The decision runs two graph conditions:

* Condition A: no simple cycle has an entry (an edge off the cycle whose
  range lies on it).  Failure witnesses are (cycle, entry) pairs, each
  augmented with a stabilizer-discontinuity certificate: walking into the
  cycle through the entry approximates the cycle's periodic path by paths of
  head period 0, so the period subgroups converge to {0} instead of nZ.

* Condition B: for every pair of distinct cycles, some vertex u reachable
  from the first and v reachable from the second have no common ancestor
  (no w reaching both).  Certificates are the (u, v) pairs; a failure is
  refuted exhaustively.  Skipped when condition A fails.

When both pass, the remaining separation condition for convergent character
sequences holds automatically: an arrow between two characters in the same
fiber conjugates one stabilizer character onto the other, and the limit
fiber's stabilizer is a single group, so the two limits agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .convergence import FellLimit, PeriodFamily, fell_subgroup_limit
from .digraph import (
    CycleRep,
    DiGraph,
    Edge,
    _check_composable,
    entry_free_cycles,
    reach_closure,
    require_validated,
)
from .exact import AffineSeq, format_rational

__all__ = [
    "ConditionAReport",
    "ConditionBReport",
    "SeparationCertificate",
    "Refutation",
    "StabilizerCertificate",
    "SpectrumVerdict",
    "EventualPath",
    "PathChar",
    "ConditionARequired",
    "FiberMismatchError",
    "check_condition_a",
    "check_condition_b",
    "decide_hausdorff_spectrum",
    "orbits",
    "shift_equivalent",
    "stabilizer_of_path",
    "transport_char",
    "CONDITION_C_NOTE",
]

CONDITION_C_NOTE = "automatic (stabilizer conjugation argument)"


class ConditionARequired(RuntimeError):
    """Raised by operations that only make sense on entry-free graphs."""


class FiberMismatchError(ValueError):
    """An arrow was applied to a character based at a different path."""


# ---------------------------------------------------------------------------
# Condition A


@dataclass(frozen=True)
class StabilizerCertificate:
    """Why an entry breaks continuity of the period subgroups.

    The paths x_i that follow the cycle i times before leaving through the
    entry converge to the cycle's periodic path, but each has head period 0
    while the limit has period len(cycle).
    """

    cycle: CycleRep
    entry: Edge
    approx_limit: FellLimit
    limit_period: int

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle.edge_ids()),
            "entry": self.entry.id,
            "approx_periods": "constant 0",
            "approx_fell_limit": self.approx_limit.label(),
            "period_at_limit": _subgroup_label(self.limit_period),
            "continuous": self.approx_limit.period == self.limit_period,
        }


def _subgroup_label(period: int) -> str:
    return "{0}" if period == 0 else f"{period}Z"


@dataclass(frozen=True)
class ConditionAReport:
    passed: bool
    cycles: tuple[CycleRep, ...]
    entries: tuple[tuple[CycleRep, Edge], ...]
    certificates: tuple[StabilizerCertificate, ...]

    def to_json(self) -> dict:
        out = {
            "pass": self.passed,
            "cycles": [list(c.edge_ids()) for c in self.cycles],
            "entries": [{"cycle": list(c.edge_ids()), "entry": e.id} for c, e in self.entries],
        }
        if not self.passed:
            out["stabilizer_discontinuity"] = [cert.to_json() for cert in self.certificates]
        return out


def check_condition_a(g: DiGraph) -> ConditionAReport:
    """Enumerate cycles and entries; build discontinuity certificates per entry."""
    analysis = entry_free_cycles(g)
    certificates = []
    for cycle, entry in analysis.entries:
        approx = fell_subgroup_limit(PeriodFamily(tail=AffineSeq.constant(0)))
        certificates.append(StabilizerCertificate(cycle, entry, approx, len(cycle)))
    return ConditionAReport(
        analysis.entry_free, analysis.cycles, analysis.entries, tuple(certificates)
    )


# ---------------------------------------------------------------------------
# Condition B


@dataclass(frozen=True)
class SeparationCertificate:
    pair: tuple[CycleRep, CycleRep]
    u: str
    v: str

    def to_json(self) -> dict:
        return {
            "pair": [list(self.pair[0].edge_ids()), list(self.pair[1].edge_ids())],
            "u": self.u,
            "v": self.v,
        }


@dataclass(frozen=True)
class Refutation:
    """Exhaustive failure record: a common ancestor for every candidate pair."""

    pair: tuple[CycleRep, CycleRep]
    common_ancestors: tuple[tuple[str, str, str], ...]  # (u, v, w)

    def to_json(self) -> dict:
        return {
            "pair": [list(self.pair[0].edge_ids()), list(self.pair[1].edge_ids())],
            "common_ancestors": [
                {"u": u, "v": v, "w": w} for u, v, w in self.common_ancestors
            ],
        }


@dataclass(frozen=True)
class ConditionBReport:
    status: str  # "pass" | "fail" | "skipped"
    certificates: tuple[SeparationCertificate, ...]
    refutation: Refutation | None = None

    def to_json(self) -> dict:
        out: dict = {
            "pass": {"pass": True, "fail": False}.get(self.status, "skipped"),
            "certificates": [c.to_json() for c in self.certificates],
        }
        if self.refutation is not None:
            out["refutation"] = self.refutation.to_json()
        return out


def check_condition_b(g: DiGraph, cycles: tuple[CycleRep, ...]) -> ConditionBReport:
    """Search a separating vertex pair for every pair of distinct cycles.

    Candidates are scanned in sorted order, so the reported certificate per
    pair is the lexicographically least one.  Pair checks are independent
    pure lookups; results aggregate in sorted pair order.
    """
    closure = reach_closure(g)
    index = {v: i for i, v in enumerate(g.vertices)}
    # ancestor mask per vertex u: all w with a walk w -> u
    ancestors = {v: 0 for v in g.vertices}
    for w in g.vertices:
        row = closure.masks[index[w]]
        for i, u in enumerate(closure.vertices):
            if (row >> i) & 1:
                ancestors[u] |= 1 << index[w]

    def reach_union(c: CycleRep) -> list[str]:
        out: set[str] = set()
        for v in sorted(c.vertices):
            out.update(closure.reach_set(v))
        return sorted(out)

    certificates = []
    ordered = sorted(cycles, key=CycleRep.sort_key)
    for a_pos in range(len(ordered)):
        for b_pos in range(a_pos + 1, len(ordered)):
            c, d = ordered[a_pos], ordered[b_pos]
            found = None
            for u in reach_union(c):
                for v in reach_union(d):
                    if ancestors[u] & ancestors[v] == 0:
                        found = (u, v)
                        break
                if found:
                    break
            if found is None:
                witnesses = []
                for u in reach_union(c):
                    for v in reach_union(d):
                        mask = ancestors[u] & ancestors[v]
                        w = g.vertices[(mask & -mask).bit_length() - 1]
                        witnesses.append((u, v, w))
                return ConditionBReport(
                    "fail", tuple(certificates), Refutation((c, d), tuple(witnesses))
                )
            certificates.append(SeparationCertificate((c, d), *found))
    return ConditionBReport("pass", tuple(certificates))


# ---------------------------------------------------------------------------
# Combined verdict


@dataclass(frozen=True)
class SpectrumVerdict:
    condition_a: ConditionAReport
    condition_b: ConditionBReport
    hausdorff: bool

    def to_json(self) -> dict:
        return {
            "validated": True,
            "condition_a": self.condition_a.to_json(),
            "condition_b": self.condition_b.to_json(),
            "condition_c": CONDITION_C_NOTE,
            "hausdorff": self.hausdorff,
        }


def decide_hausdorff_spectrum(g: DiGraph) -> SpectrumVerdict:
    """Full decision; raises InvalidGraphError when the graph fails validation."""
    require_validated(g)
    report_a = check_condition_a(g)
    if report_a.passed:
        report_b = check_condition_b(g, report_a.cycles)
    else:
        report_b = ConditionBReport("skipped", ())
    hausdorff = report_a.passed and report_b.status == "pass"
    return SpectrumVerdict(report_a, report_b, hausdorff)


def orbits(g: DiGraph) -> tuple[CycleRep, ...]:
    """Orbit representatives of the infinite-path space, one per cycle.

    Only meaningful on entry-free graphs, where every infinite path falls
    into a cycle and two paths are shift equivalent iff they share it.
    """
    require_validated(g)
    report = check_condition_a(g)
    if not report.passed:
        raise ConditionARequired(
            "orbit space is cycle-indexed only when no cycle has an entry"
        )
    return report.cycles


# ---------------------------------------------------------------------------
# Eventually periodic paths and their characters


@dataclass(frozen=True)
class EventualPath:
    """Infinite path prefix . cycle^inf, edges head-first.

    ``prefix`` may be empty; when nonempty its last edge must compose with
    the first cycle edge.  ``cycle`` is the rotation actually used, kept as
    typed (validated) but possibly non-canonical edge order.
    """

    prefix: tuple[Edge, ...]
    cycle: tuple[Edge, ...]

    def __post_init__(self) -> None:
        CycleRep(self.cycle)  # validates simplicity and cyclic composability
        if self.prefix:
            _check_composable(self.prefix)
            if self.prefix[-1].src != self.cycle[0].rng:
                raise ValueError(
                    f"prefix ending at {self.prefix[-1].src!r} does not meet "
                    f"cycle starting at {self.cycle[0].rng!r}"
                )

    def edge_at(self, i: int) -> Edge:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    @property
    def range_vertex(self) -> str:
        return self.prefix[0].rng if self.prefix else self.cycle[0].rng

    def cycle_rep(self) -> CycleRep:
        return CycleRep(self.cycle)

    def minimize(self) -> "EventualPath":
        """Unique shortest presentation of the same infinite path.

        A prefix edge equal to the closing cycle edge is absorbed by
        rotating the cycle one step back.
        """
        prefix = list(self.prefix)
        cycle = list(self.cycle)
        while prefix and prefix[-1].id == cycle[-1].id:
            prefix.pop()
            cycle = [cycle[-1]] + cycle[:-1]
        return EventualPath(tuple(prefix), tuple(cycle))

    def shift(self) -> "EventualPath":
        """Drop the first edge (the one-sided shift)."""
        if self.prefix:
            return EventualPath(self.prefix[1:], self.cycle)
        return EventualPath((), self.cycle[1:] + self.cycle[:1])

    def vertices_on(self) -> frozenset[str]:
        verts = set(CycleRep(self.cycle).vertices)
        for e in self.prefix:
            verts.add(e.src)
            verts.add(e.rng)
        return verts

    def denotes_same_path(self, other: "EventualPath") -> bool:
        """Edgewise equality of the denoted infinite paths."""
        window = max(len(self.prefix), len(other.prefix)) + lcm(
            len(self.cycle), len(other.cycle)
        )
        return all(self.edge_at(i) == other.edge_at(i) for i in range(window))

    def to_json(self) -> dict:
        return {
            "prefix": [e.id for e in self.prefix],
            "cycle": [e.id for e in self.cycle],
        }


def shift_equivalent(x: EventualPath, y: EventualPath) -> bool:
    """True iff some shifts of x and y denote the same path.

    Shifting far enough lands both on rotations of their cycles, so the
    paths are equivalent iff they run the same cycle.
    """
    return x.cycle_rep() == y.cycle_rep()


def stabilizer_of_path(x: EventualPath) -> int:
    """Period n of x under the shift: least n > 0 with shift^n(x) == x, else 0.

    Nonzero exactly when the minimal presentation has empty prefix; then the
    period is the cycle length.
    """
    minimal = x.minimize()
    return 0 if minimal.prefix else len(minimal.cycle)


@dataclass(frozen=True)
class PathChar:
    """A character of the period group of an eventually periodic path.

    The period group is nZ (n = head period of ``base``); ``angle`` is the
    rotation number of the generator n, a rational in [0, 1).  Paths with
    period 0 admit only the trivial character.
    """

    base: EventualPath
    angle: Fraction

    def __post_init__(self) -> None:
        angle = Fraction(self.angle) % 1
        object.__setattr__(self, "angle", angle)
        if stabilizer_of_path(self.base) == 0 and angle != 0:
            raise ValueError("path with trivial period group only carries angle 0")

    def evaluate(self, lag: int) -> Fraction:
        """Rotation number of the character at group element ``lag``."""
        period = stabilizer_of_path(self.base)
        if period == 0:
            if lag != 0:
                raise ValueError("lag outside the trivial period group")
            return Fraction(0)
        if lag % period != 0:
            raise ValueError(f"lag {lag} outside the period group {period}Z")
        return (self.angle * (lag // period)) % 1

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "angle": format_rational(self.angle),
            "period": stabilizer_of_path(self.base),
        }


def transport_char(y: EventualPath, lag: int, chi: PathChar) -> PathChar:
    """Move a character along an arrow (y, lag, x) to the fiber over y.

    Conjugation by the arrow identifies the period groups of x and y, and on
    those groups it is the identity, so the angle is unchanged.  The lag is
    arrow metadata; only shift equivalence of the endpoints matters.
    """
    if not shift_equivalent(chi.base, y):
        raise FiberMismatchError("arrow endpoints are not shift equivalent")
    del lag
    return PathChar(y, chi.angle)
