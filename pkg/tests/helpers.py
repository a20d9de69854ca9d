"""Shared fixtures and independent probe implementations for the tests."""

from __future__ import annotations

from groupoid_spectrum.convergence import PeriodFamily, fell_subgroup_limit
from groupoid_spectrum.digraph import DiGraph, Edge
from groupoid_spectrum.exact import AffineSeq


def graph_two_loops_funnel() -> DiGraph:
    """Loops at a and b, both feeding a common sink t (Hausdorff, certificate (a, b))."""
    return DiGraph.build(
        ["a", "b", "t"],
        [("La", "a", "a"), ("Lb", "b", "b"), ("f", "a", "t"), ("g", "b", "t")],
    )


def graph_single_loop() -> DiGraph:
    return DiGraph.build(["a"], [("La", "a", "a")])


def graph_loop_with_entry() -> DiGraph:
    """Loop La at a with an entry e from b (itself on a loop to stay validated)."""
    return DiGraph.build(
        ["a", "b"], [("La", "a", "a"), ("Lb", "b", "b"), ("e", "b", "a")]
    )


def graph_three_cycle() -> DiGraph:
    return DiGraph.build(
        ["v1", "v2", "v3"],
        [("c1", "v1", "v2"), ("c2", "v2", "v3"), ("c3", "v3", "v1")],
    )


def graph_common_ancestor() -> DiGraph:
    """Loops at a and b plus a vertex w feeding both (condition A fails here)."""
    return DiGraph.build(
        ["a", "b", "w"],
        [
            ("La", "a", "a"),
            ("Lb", "b", "b"),
            ("Lw", "w", "w"),
            ("h1", "w", "a"),
            ("h2", "w", "b"),
        ],
    )


def brute_reach(g: DiGraph) -> dict[str, frozenset[str]]:
    """Reachability by repeated relational composition (a third route)."""
    pairs = {(v, v) for v in g.vertices}
    pairs |= {(e.src, e.rng) for e in g.edges}
    while True:
        nxt = set(pairs)
        for (x, y) in pairs:
            for (u, w) in pairs:
                if y == u:
                    nxt.add((x, w))
        if nxt == pairs:
            break
        pairs = nxt
    return {
        v: frozenset(u for u in g.vertices if (v, u) in pairs) for v in g.vertices
    }


def window_fell_probe(family: PeriodFamily, window: int):
    """Direct Fell-limit probe on {-window..window}.

    For each x, membership in p_i Z must stabilize (eventually-in equals
    infinitely-often-in); returns the stable membership set, or None when
    some membership oscillates.
    """

    def member(p: int, x: int) -> bool:
        return x == 0 if p == 0 else x % p == 0

    tail = family.tail
    start = len(family.transient)
    stable: set[int] = set()
    for x in range(-window, window + 1):
        if isinstance(tail, AffineSeq):
            if tail.a == 0:
                values = {member(tail.b, x)}
            else:
                # growing periods: membership is stable past the last index
                # where p_i <= |x|, so sample a few points beyond it
                horizon = start + max(0, (abs(x) - tail.b) // tail.a + 2)
                values = {member(family.period_at(i), x) for i in range(horizon, horizon + 4)}
        else:
            values = {member(p, x) for p in tail}
        if len(values) != 1:
            return None
        if values.pop():
            stable.add(x)
    return frozenset(stable)


def fell_probe_agrees(family: PeriodFamily, window: int) -> bool:
    limit = fell_subgroup_limit(family)
    probe = window_fell_probe(family, window)
    if not limit.convergent:
        return probe is None
    if probe is None:
        return False
    p = limit.period
    expected = frozenset(
        x for x in range(-window, window + 1) if (x == 0 if p == 0 else x % p == 0)
    )
    return probe == expected
