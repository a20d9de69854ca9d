"""Finite directed multigraphs, reachability, and cycle/entry analysis.

Conventions (fixed throughout the package):

* An edge e runs src(e) -> rng(e); walks and reachability follow that arrow.
* A finite path e1 e2 ... en composes head-first: src(e_i) == rng(e_{i+1}).
  The range of the path is rng(e1) and its source is src(en), so longer
  paths extend on the source side.
* A graph is *validated* when every endpoint names a declared vertex and
  every vertex v has at least one edge with rng == v (no sources), which is
  what infinite-path extension needs.
* An *entry* to a simple cycle c is an edge e not on c with rng(e) on c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from . import _kernels

__all__ = [
    "Edge",
    "DiGraph",
    "FinPath",
    "CycleRep",
    "ReachClosure",
    "CycleAnalysis",
    "Violation",
    "InvalidGraphError",
    "GraphParseError",
    "validate_graph",
    "require_validated",
    "reach_closure",
    "entry_free_cycles",
    "cycle_vertices",
    "in_range_degrees",
    "parse_graph_text",
    "parse_graph_json",
    "parse_graph",
    "graph_to_text",
    "graph_to_json",
]


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    rng: str


class GraphParseError(ValueError):
    """Malformed graph input; carries a line number for text input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Violation:
    """One reason a graph fails validation."""

    kind: str  # "duplicate-vertex" | "duplicate-edge" | "undeclared-endpoint" | "no-range-edge"
    subject: str
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "subject": self.subject, "detail": self.detail}


class InvalidGraphError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(v.detail for v in violations))


@dataclass(frozen=True)
class DiGraph:
    """Immutable finite directed multigraph with string ids."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def build(cls, vertices, edges) -> "DiGraph":
        """Construct from iterables; edges may be Edge or (id, src, rng)."""
        vs = tuple(vertices)
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        return cls(vs, es)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def arc_indices(self) -> list[tuple[int, int]]:
        """Edges as (src index, rng index) pairs, in edge order."""
        vi = self.vertex_index
        return [(vi[e.src], vi[e.rng]) for e in self.edges]

    def edges_into(self, v: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.rng == v)

    def edges_from(self, v: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.src == v)

    def transpose(self) -> "DiGraph":
        """Same graph with every edge reversed."""
        return DiGraph(self.vertices, tuple(Edge(e.id, e.rng, e.src) for e in self.edges))


def validate_graph(g: DiGraph) -> list[Violation]:
    """All validation violations, in a deterministic order; empty means valid."""
    violations: list[Violation] = []
    seen_v: set[str] = set()
    for v in g.vertices:
        if v in seen_v:
            violations.append(Violation("duplicate-vertex", v, f"vertex id {v!r} declared twice"))
        seen_v.add(v)
    seen_e: set[str] = set()
    for e in g.edges:
        if e.id in seen_e:
            violations.append(Violation("duplicate-edge", e.id, f"edge id {e.id!r} declared twice"))
        seen_e.add(e.id)
        for end, val in (("src", e.src), ("rng", e.rng)):
            if val not in seen_v:
                violations.append(
                    Violation(
                        "undeclared-endpoint",
                        e.id,
                        f"edge {e.id!r} has {end} {val!r} which is not a declared vertex",
                    )
                )
    covered = {e.rng for e in g.edges}
    for v in g.vertices:
        if v not in covered:
            violations.append(
                Violation("no-range-edge", v, f"vertex {v!r} has no edge with range {v!r}")
            )
    return violations


def require_validated(g: DiGraph) -> None:
    violations = validate_graph(g)
    if violations:
        raise InvalidGraphError(violations)


@dataclass(frozen=True)
class FinPath:
    """Nonempty finite path; edges listed head-first (see module docstring)."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not self.edges:
            raise ValueError("finite path must contain at least one edge")
        _check_composable(self.edges)

    @property
    def range_vertex(self) -> str:
        return self.edges[0].rng

    @property
    def source_vertex(self) -> str:
        return self.edges[-1].src

    def __len__(self) -> int:
        return len(self.edges)


def _check_composable(edges: tuple[Edge, ...]) -> None:
    for left, right in zip(edges, edges[1:]):
        if left.src != right.rng:
            raise ValueError(
                f"edges {left.id!r} and {right.id!r} do not compose: "
                f"src {left.src!r} != rng {right.rng!r}"
            )


@dataclass(frozen=True)
class CycleRep:
    """A simple cycle, stored in its canonical rotation.

    Edges are in path convention, cyclically composable, visiting each vertex
    once.  The canonical rotation starts at the lexicographically least edge
    id, so equality of CycleReps is equality of cycles.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        edges = tuple(self.edges)
        if not edges:
            raise ValueError("cycle must contain at least one edge")
        _check_composable(edges)
        if edges[-1].src != edges[0].rng:
            raise ValueError("cycle does not close up")
        verts = [e.rng for e in edges]
        if len(set(verts)) != len(verts):
            raise ValueError("cycle is not simple: repeated vertex")
        k = min(range(len(edges)), key=lambda i: edges[i].id)
        object.__setattr__(self, "edges", edges[k:] + edges[:k])

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(e.rng for e in self.edges)

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def sort_key(self) -> tuple:
        return (len(self.edges), self.edge_ids())


@dataclass(frozen=True)
class ReachClosure:
    """Reflexive-transitive reachability, one bitmask row per vertex."""

    vertices: tuple[str, ...]
    masks: tuple[int, ...]

    def reaches(self, v: str, u: str) -> bool:
        """True iff some walk (possibly empty) leads from v to u."""
        idx = self._index
        return bool((self.masks[idx[v]] >> idx[u]) & 1)

    def reach_set(self, v: str) -> tuple[str, ...]:
        mask = self.masks[self._index[v]]
        return tuple(u for i, u in enumerate(self.vertices) if (mask >> i) & 1)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def reach_closure(g: DiGraph) -> ReachClosure:
    masks = _kernels.reach_masks(len(g.vertices), g.arc_indices)
    return ReachClosure(g.vertices, tuple(masks))


@dataclass(frozen=True)
class CycleAnalysis:
    """Simple cycles of a graph together with their entries."""

    cycles: tuple[CycleRep, ...]
    entries: tuple[tuple[CycleRep, Edge], ...]

    @property
    def entry_free(self) -> bool:
        return not self.entries


def entry_free_cycles(g: DiGraph) -> CycleAnalysis:
    """Enumerate all simple cycles and every entry into each of them."""
    raw = _kernels.simple_cycles(len(g.vertices), g.arc_indices)
    cycles = []
    for arc_tuple in raw:
        # kernel output is in traversal order; path convention is its reverse
        cycles.append(CycleRep(tuple(g.edges[j] for j in reversed(arc_tuple))))
    cycles.sort(key=CycleRep.sort_key)
    entries = []
    for c in cycles:
        on_cycle = {e.id for e in c.edges}
        verts = c.vertices
        for e in g.edges:
            if e.id not in on_cycle and e.rng in verts:
                entries.append((c, e))
    entries.sort(key=lambda pair: (pair[0].sort_key(), pair[1].id))
    return CycleAnalysis(tuple(cycles), tuple(entries))


def cycle_vertices(g: DiGraph) -> frozenset[str]:
    """Vertices lying on at least one cycle (via closure, no enumeration)."""
    closure = reach_closure(g)
    out = set()
    for e in g.edges:
        if closure.reaches(e.rng, e.src):
            out.add(e.src)
            out.add(e.rng)
    return frozenset(out)


def in_range_degrees(g: DiGraph) -> dict[str, int]:
    """Number of edges with rng == v, per vertex."""
    deg = {v: 0 for v in g.vertices}
    for e in g.edges:
        deg[e.rng] += 1
    return deg


# ---------------------------------------------------------------------------
# Input/output formats


def parse_graph_text(text: str) -> DiGraph:
    """Line format: 'v <id>' and 'e <id> <src> <rng>'; '#' starts a comment."""
    vertices: list[str] = []
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise GraphParseError(f"expected 'v <id>', got {raw.strip()!r}", lineno)
            vertices.append(parts[1])
        elif parts[0] == "e":
            if len(parts) != 4:
                raise GraphParseError(f"expected 'e <id> <src> <rng>', got {raw.strip()!r}", lineno)
            edges.append(Edge(parts[1], parts[2], parts[3]))
        else:
            raise GraphParseError(f"unknown record {parts[0]!r}", lineno)
    return DiGraph(tuple(vertices), tuple(edges))


def parse_graph_json(obj) -> DiGraph:
    """JSON object form: {"vertices": [...], "edges": [{"id","src","rng"}, ...]}."""
    if not isinstance(obj, dict):
        raise GraphParseError("graph JSON must be an object")
    try:
        vertices = [str(v) for v in obj["vertices"]]
        edges = [Edge(str(e["id"]), str(e["src"]), str(e["rng"])) for e in obj["edges"]]
    except (KeyError, TypeError) as exc:
        raise GraphParseError(f"malformed graph JSON: {exc}") from None
    return DiGraph(tuple(vertices), tuple(edges))


def parse_graph(text: str) -> DiGraph:
    """Sniff JSON vs line format and parse accordingly."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"invalid JSON: {exc}") from None
        return parse_graph_json(obj)
    return parse_graph_text(text)


def graph_to_text(g: DiGraph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {e.id} {e.src} {e.rng}" for e in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: DiGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "rng": e.rng} for e in g.edges],
    }
