"""Discrete conics: polygons with equal vertex angles at a pencil focus.

Three construction routes are provided:

* synthesize      -- sample the focal polar form at equally spaced angles;
* closed_form     -- evaluate the rational closed-form vertex expression,
                     which lands on the t = 1 member;
* negative_pedal  -- intersect consecutive perpendiculars erected on a unit
                     circle, which lands on the t = sec^2(theta/2) member.

The three agree through the tangent-intersection group action: the pedal
polygon is the G_theta image of a closed-form polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import AngleOutOfRange, DegenerateP, FormulaPole, NotClosed, AllOppositeSidesParallel, ParallelLines, GeometryError
from .kernel import (
    TWO_PI,
    Line,
    Point,
    intersect_lines,
    line_through,
    normalize_angle,
)
from .pencil import FocalConic, parameter_of, pencil_member, point_at

import numpy as np

_CLOSURE_EPS = 1e-9


@dataclass(frozen=True)
class DiscreteConic:
    """Polygon V_1..V_n on the (p, t) pencil member with vertex j at focal
    angle phi + (j-1)*theta measured from the focus (-p, 0)."""

    p: float
    t: float
    theta: float
    phi: float
    n: int
    closed: bool
    vertices: tuple[Point, ...]
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def carrier(self) -> FocalConic:
        return pencil_member(self.p, self.t)

    @property
    def focus(self) -> Point:
        return Point(-self.p, 0.0)

    @property
    def winding(self) -> int:
        return round(self.n * self.theta / TWO_PI)

    def vertex(self, j: int) -> Point:
        """1-based, wrapping for closed polygons."""
        if self.closed:
            return self.vertices[(j - 1) % self.n]
        if not 1 <= j <= self.n:
            raise IndexError(f"vertex index {j} out of range for an open chain")
        return self.vertices[j - 1]

    def side(self, i: int) -> Line:
        """Side line S_i through V_i and V_{i+1} (1-based, wrapping)."""
        return line_through(self.vertex(i), self.vertex(i + 1))

    @property
    def num_sides(self) -> int:
        return self.n if self.closed else self.n - 1


def _is_closed(n: int, theta: float) -> bool:
    return abs(normalize_angle(n * theta + math.pi) - math.pi) < _CLOSURE_EPS


def synthesize(p: float, t: float, theta: float, phi: float, n: int) -> DiscreteConic:
    """Vertices at focal angles phi + (j-1)*theta on the (p, t) member."""
    if not 0.0 < theta < math.pi:
        raise AngleOutOfRange(f"theta must lie in (0, pi), got {theta}")
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    c = pencil_member(p, t)
    verts = tuple(point_at(c, phi + j * theta) for j in range(n))
    return DiscreteConic(c.p, c.t, theta, phi, n, _is_closed(n, theta), verts)


def closed_form_vertices(p: float, theta: float, phi: float, n: int) -> DiscreteConic:
    """Rational closed form for a discrete conic on the t = 1 member.

    V_j = ((p - cos psi) / (p cos psi - 1), (p^2 - 1) sin psi / (p cos psi - 1))
    with psi = (j-1)*theta + phi.  The focal direction of V_j from (-p, 0) is
    exactly (cos psi, sin psi), so the equal-angle property holds by algebra.
    """
    if abs(abs(p) - 1.0) < 1e-9:
        raise DegenerateP("p = +-1 is degenerate for the closed form")
    if not 0.0 < theta < math.pi:
        raise AngleOutOfRange(f"theta must lie in (0, pi), got {theta}")
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    verts = []
    for j in range(n):
        psi = j * theta + phi
        denom = p * math.cos(psi) - 1.0
        if abs(denom) < 1e-12:
            raise FormulaPole(f"denominator vanishes at vertex {j + 1}")
        verts.append(
            Point(
                (p - math.cos(psi)) / denom,
                (p * p - 1.0) * math.sin(psi) / denom,
            )
        )
    return DiscreteConic(float(p), 1.0, theta, phi, n, _is_closed(n, theta), tuple(verts))


@dataclass(frozen=True)
class PedalScaffold:
    """Unit-circle samples and the perpendiculars erected on them.

    samples[j] sits at angle (j+1)*theta + phi; lines[j] passes through
    samples[j] perpendicular to the segment from the pedal point.
    """

    pedal_point: Point
    samples: tuple[Point, ...]
    lines: tuple[Line, ...]


def negative_pedal(p: float, theta: float, phi: float, n: int) -> tuple[PedalScaffold, DiscreteConic]:
    """Discrete negative-pedal construction about the pedal point (p, 0).

    Vertices are intersections of consecutive scaffold lines.  They land on
    the t = sec^2(theta/2) member with first vertex at focal angle
    phi + 3*theta/2, and the equal-angle property holds at (-p, 0) even
    though that point plays no role in the construction.
    """
    if abs(abs(p) - 1.0) < 1e-9:
        raise DegenerateP("p = +-1 is degenerate for the pedal construction")
    if not 0.0 < theta < math.pi:
        raise AngleOutOfRange(f"theta must lie in (0, pi), got {theta}")
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    pedal = Point(float(p), 0.0)
    samples = []
    lines = []
    for j in range(1, n + 2):  # one extra sample so V_n exists for open chains
        beta = j * theta + phi
        x = Point(math.cos(beta), math.sin(beta))
        nx, ny = x.x - pedal.x, x.y - pedal.y
        samples.append(x)
        lines.append(Line.from_coefficients(nx, ny, -(nx * x.x + ny * x.y)))
    verts = tuple(intersect_lines(lines[j], lines[j + 1]) for j in range(n))
    sec = 1.0 / math.cos(theta / 2.0)
    poly = DiscreteConic(
        float(p),
        sec * sec,
        theta,
        phi + 1.5 * theta,
        n,
        _is_closed(n, theta),
        verts,
    )
    return PedalScaffold(pedal, tuple(samples), tuple(lines)), poly


def tangency_points(d: DiscreteConic) -> DiscreteConic:
    """Contact points of the side lines with the inscribed member.

    M_j sits on the t*cos^2(theta/2) member at focal angle
    phi + (j-1)*theta + theta/2, midway between the incident vertices.
    """
    if d.n < 2:
        raise ValueError("need at least two vertices")
    cos = math.cos(d.theta / 2.0)
    t_inner = d.t * cos * cos
    inner = pencil_member(d.p, t_inner)
    count = d.num_sides
    verts = tuple(
        point_at(inner, d.phi + j * d.theta + d.theta / 2.0) for j in range(count)
    )
    return DiscreteConic(
        d.p, t_inner, d.theta, d.phi + d.theta / 2.0, count, _is_closed(count, d.theta), verts
    )


def grid_layer(d: DiscreteConic, k: int) -> DiscreteConic:
    """Polygon of intersections of side lines k apart: Z_i = S_i n S_{i+k}.

    Lands on the t*cos^2(theta/2)*sec^2(k*theta/2) member; equals the
    G_{k*theta} image of the tangency-point polygon as a vertex set.
    """
    if not d.closed:
        raise NotClosed("grid layers are defined for closed polygons")
    if not 1 <= k <= d.n - 2:
        raise ValueError(f"k must lie in [1, n-2], got {k}")
    try:
        verts = tuple(intersect_lines(d.side(i), d.side(i + k)) for i in range(1, d.n + 1))
    except ParallelLines:
        raise ParallelLines(
            f"side lines {k} apart are parallel; for opposite sides use "
            "opposite_side_intersections"
        )
    cos = math.cos(d.theta / 2.0)
    sec_k = 1.0 / math.cos(k * d.theta / 2.0)
    t_layer = d.t * cos * cos * sec_k * sec_k
    f = d.focus
    phi_layer = math.atan2(verts[0].y - f.y, verts[0].x - f.x)
    return DiscreteConic(d.p, t_layer, d.theta, phi_layer, d.n, True, verts)


def opposite_side_intersections(d: DiscreteConic) -> tuple[list[Point], Line]:
    """Intersections K_i = S_i n S_{i+n/2} of a closed even-sided polygon,
    with the total-least-squares line through them.

    The fitted line is perpendicular to the axis through the two foci; on the
    circle member every opposite pair is parallel and there is nothing to
    intersect.
    """
    if not d.closed:
        raise NotClosed("opposite sides require a closed polygon")
    if d.n % 2 != 0:
        raise GeometryError("opposite sides require an even-sided polygon")
    m = d.n // 2
    points = []
    for i in range(1, m + 1):  # one point per distinct opposite pair
        try:
            points.append(intersect_lines(d.side(i), d.side(i + m)))
        except ParallelLines:
            continue
    if len(points) < 2:
        raise AllOppositeSidesParallel("all opposite side pairs are parallel")
    xy = np.array([[pt.x, pt.y] for pt in points])
    centroid = xy.mean(axis=0)
    _, _, vt = np.linalg.svd(xy - centroid)
    dx, dy = vt[0]  # dominant direction
    line = Line.from_coefficients(-dy, dx, dy * centroid[0] - dx * centroid[1])
    return points, line
