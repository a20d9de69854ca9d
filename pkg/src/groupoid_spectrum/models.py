"""Model groupoids: a flow on a planar set, its dyadic discretization, and SO(3).

The planar set Y is a disjoint union of orbit charts.  Chart k >= 0 is the
image of the piecewise map

    s |-> (2**(-2k), s, 0)                       for s <= k
    s |-> (2**(-2k) - (s-k) * 2**(-2k-1),
           k*cos(pi*(s-k)), k*sin(pi*(s-k)))     for k < s < k+1
    s |-> (2**(-2k-1), s - 1 - 2k, 0)            for s >= k+1

and the limit line {(0, s, 0)} is its own orbit, tagged LINE_BRANCH.  At
integer parameters every chart value is exact; the open band (k, k+1) is the
only place floats appear and only the real-parameter flow ever lands there.

The dyadic group H = Q_D x| Z (dyadic rationals by integers, (q,n)(p,m) =
(q + 2**n p, n+m)) acts on Y through its Z quotient by parameter
translation.  Arrows based at a point act on fiber data by powers of 2:
on the discrete fiber copy of Q_D by r |-> 2**n r, and on the dual side by
r |-> 2**(-n) r, so the pairing <2**(-n) r, 2**n p> = <r, p> is preserved.

SO(3) is the one floating-point model: rotations, conjugation transport of
(axis point, integer index) characters, and the orbit invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact import format_rational, pow2_scale

__all__ = [
    "LINE_BRANCH",
    "PointY",
    "GroupH",
    "ArrowDyadic",
    "CharQ",
    "SElem",
    "CharSO3",
    "FiberMismatch",
    "dyadic_chart",
    "green_phi",
    "green_act",
    "h_mul",
    "h_inv",
    "H_IDENTITY",
    "dyadic_act",
    "dyadic_act_dual",
    "dyadic_act_S",
    "counterexample_family",
    "so3_rotation",
    "so3_conj_residual",
    "so3_transport",
    "so3_spectrum_point",
    "random_rotation",
]

LINE_BRANCH = -1


def dyadic_chart(k: int, s: Fraction | int) -> tuple[Fraction, Fraction, Fraction]:
    """Chart k >= 0 at an off-band parameter (s <= k or s >= k+1), exactly."""
    if k < 0:
        raise ValueError("chart index must be >= 0")
    s = Fraction(s)
    if s <= k:
        return (pow2_scale(Fraction(1), -2 * k), s, Fraction(0))
    if s >= k + 1:
        return (pow2_scale(Fraction(1), -2 * k - 1), s - 1 - 2 * k, Fraction(0))
    raise ValueError(f"parameter {s} lies in the non-exact band ({k}, {k + 1})")


def green_phi(n: int, s) -> tuple:
    """Orbit parametrization of the flow; branch 0 is the line (0, s, 0).

    Exact (Fraction) output wherever the formula is piecewise affine; the
    open band (n, n+1) of branch n >= 1 uses floats for the half-turn arc.
    """
    if n == 0:
        return (Fraction(0), Fraction(s), Fraction(0))
    if n < 0:
        raise ValueError("branch index must be >= 0")
    sf = Fraction(s)
    if sf <= n or sf >= n + 1:
        return dyadic_chart(n, sf)
    t = float(sf - n)
    x = math.ldexp(1.0, -2 * n) - t * math.ldexp(1.0, -2 * n - 1)
    return (x, n * math.cos(math.pi * t), n * math.sin(math.pi * t))


def green_act(t, point: tuple[int, "Fraction | float"]) -> tuple:
    """The flow in orbit coordinates: t . (n, s) = (n, s + t)."""
    n, s = point
    return (n, s + t)


@dataclass(frozen=True)
class PointY:
    """A point of Y in orbit coordinates: chart branch plus integer parameter.

    ``branch`` is a chart index >= 0, or LINE_BRANCH (-1) for the limit line.
    Integer parameters keep every embedding exact.
    """

    branch: int
    param: int

    def __post_init__(self) -> None:
        if self.branch < LINE_BRANCH:
            raise ValueError("branch must be a chart index >= 0 or LINE_BRANCH")

    def embed(self) -> tuple[Fraction, Fraction, Fraction]:
        if self.branch == LINE_BRANCH:
            return (Fraction(0), Fraction(self.param), Fraction(0))
        return dyadic_chart(self.branch, self.param)

    def translate(self, n: int) -> "PointY":
        return PointY(self.branch, self.param + n)

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "param": self.param,
            "embed": [format_rational(c) for c in self.embed()],
        }


@dataclass(frozen=True)
class GroupH:
    """Element (q, n) of the dyadic affine group, q a dyadic rational."""

    q: Fraction
    n: int

    def __post_init__(self) -> None:
        q = Fraction(self.q)
        d = q.denominator
        if d & (d - 1):
            raise ValueError(f"{q} is not a dyadic rational")
        object.__setattr__(self, "q", q)

    def to_json(self) -> dict:
        return {"q": format_rational(self.q), "n": self.n}


def h_mul(g: GroupH, h: GroupH) -> GroupH:
    """(q, n)(p, m) = (q + 2**n p, n + m)."""
    return GroupH(g.q + pow2_scale(h.q, g.n), g.n + h.n)


def h_inv(g: GroupH) -> GroupH:
    """(q, n)^-1 = (-2**(-n) q, -n)."""
    return GroupH(-pow2_scale(g.q, -g.n), -g.n)


H_IDENTITY = GroupH(Fraction(0), 0)


def dyadic_act(g: GroupH, y: PointY) -> PointY:
    """H acts on Y through its Z quotient, by parameter translation."""
    return y.translate(g.n)


@dataclass(frozen=True)
class ArrowDyadic:
    """A transformation-groupoid arrow (h, y): range y, source h^-1 . y."""

    h: GroupH
    base: PointY

    @property
    def range(self) -> PointY:
        return self.base

    @property
    def source(self) -> PointY:
        return self.base.translate(-self.h.n)

    def to_json(self) -> dict:
        return {"h": self.h.to_json(), "base": self.base.to_json()}


@dataclass(frozen=True)
class CharQ:
    """Fiberwise character of the dyadic rationals: r-hat based at a point.

    r is any rational; the character pairs p |-> exp(2 pi i r p) with the
    discrete fiber group.
    """

    r: Fraction
    base: PointY

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))

    def to_json(self) -> dict:
        return {"r": format_rational(self.r), "base": self.base.to_json()}


@dataclass(frozen=True)
class SElem:
    """Element (r, y) of the bundle of discrete fiber groups: r dyadic at y."""

    r: Fraction
    base: PointY

    def __post_init__(self) -> None:
        r = Fraction(self.r)
        d = r.denominator
        if d & (d - 1):
            raise ValueError(f"{r} is not a dyadic rational")
        object.__setattr__(self, "r", r)

    def to_json(self) -> dict:
        return {"r": format_rational(self.r), "base": self.base.to_json()}


class FiberMismatch(ValueError):
    """An arrow was applied to fiber data sitting over a different point."""


def dyadic_act_dual(arrow: ArrowDyadic, chi: CharQ) -> CharQ:
    """Arrow at y moves a character at its source to (2**(-n) r)-hat at y."""
    if chi.base != arrow.source:
        raise FiberMismatch(
            f"character based at {chi.base} but arrow source is {arrow.source}"
        )
    return CharQ(pow2_scale(chi.r, -arrow.h.n), arrow.base)


def dyadic_act_S(arrow: ArrowDyadic, s: SElem) -> SElem:
    """Arrow at y moves a fiber group element at its source to (2**n r, y)."""
    if s.base != arrow.source:
        raise FiberMismatch(
            f"fiber element based at {s.base} but arrow source is {arrow.source}"
        )
    return SElem(pow2_scale(s.r, arrow.h.n), arrow.base)


def counterexample_family(i: int) -> tuple[ArrowDyadic, CharQ]:
    """The arrow/character pair (gamma_i, chi_i) breaking dual convergence.

    gamma_i = ((0, 2i+1), (2**(-2i-1), 0, 0)) and chi_i = 1-hat at
    (2**(-2i), 0, 0); the source of gamma_i is the base of chi_i, and
    gamma_i . chi_i = (2**(-2i-1))-hat.
    """
    if i < 0:
        raise ValueError("family index must be >= 0")
    gamma = ArrowDyadic(GroupH(Fraction(0), 2 * i + 1), PointY(i, 2 * i + 1))
    chi = CharQ(Fraction(1), PointY(i, 0))
    return gamma, chi


# ---------------------------------------------------------------------------
# SO(3): the floating-point model


def so3_rotation(axis, theta: float) -> np.ndarray:
    """Rotation matrix about ``axis`` (any nonzero vector) by angle theta."""
    w = np.asarray(axis, dtype=float)
    norm = float(np.linalg.norm(w))
    if norm == 0.0:
        raise ValueError("rotation axis must be nonzero")
    x, y, z = w / norm
    k = np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    return np.eye(3) * math.cos(theta) + math.sin(theta) * k + (1 - math.cos(theta)) * np.outer(
        w / norm, w / norm
    )


def so3_conj_residual(v_mat: np.ndarray, axis, theta: float, orth_tol: float = 1e-9) -> float:
    """Max-entry residual of V R_w(theta) V^T against R_{Vw}(theta).

    V must be orthogonal within ``orth_tol`` (its transpose is used as the
    inverse).
    """
    v_mat = np.asarray(v_mat, dtype=float)
    if np.abs(v_mat @ v_mat.T - np.eye(3)).max() > orth_tol:
        raise ValueError("matrix is not orthogonal within tolerance")
    lhs = v_mat @ so3_rotation(axis, theta) @ v_mat.T
    rhs = so3_rotation(v_mat @ np.asarray(axis, dtype=float), theta)
    return float(np.abs(lhs - rhs).max())


@dataclass(frozen=True)
class CharSO3:
    """Character datum (base point v in R^3, integer index k)."""

    v: tuple[float, float, float]
    k: int

    @classmethod
    def at(cls, v, k: int) -> "CharSO3":
        arr = np.asarray(v, dtype=float)
        return cls((float(arr[0]), float(arr[1]), float(arr[2])), int(k))

    def to_json(self) -> dict:
        return {"v": list(self.v), "k": self.k}


def so3_transport(u_mat: np.ndarray, chi: CharSO3) -> CharSO3:
    """Conjugation moves the base point and keeps the integer index."""
    return CharSO3.at(np.asarray(u_mat, dtype=float) @ np.asarray(chi.v), chi.k)


def so3_spectrum_point(chi: CharSO3) -> tuple[float, int]:
    """Orbit invariants (|v|, k); both are conjugation invariant."""
    return (float(np.linalg.norm(np.asarray(chi.v))), chi.k)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Uniform random rotation via a normalized Gaussian quaternion."""
    q = rng.normal(size=4)
    q = q / np.linalg.norm(q)
    a, b, c, d = q
    return np.array(
        [
            [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
            [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
            [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d],
        ]
    )
