"""The focus-sharing pencil of conics (p + x)^2 + y^2 = (1 + p*x)^2 * t.

Every member shares the focus F = (-p, 0).  The family foliates the plane
minus the line x = -1/p: each point off that line lies on exactly one member.
The canonical parametrization is the focal polar form

    r(alpha) = sqrt(t) * (1 - p^2) / (1 - sqrt(t) * p * cos(alpha)),

measured from F; r may be negative on the far branch of a hyperbola member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymptoticDirection,
    DegenerateP,
    NonpositiveT,
    OnExcludedLine,
    ParabolaMember,
)
from .kernel import DEGENERACY_EPS, Line, Point, foot_perpendicular

# Half-width of the |eccentricity| = 1 band treated as a parabola.
_CLASSIFY_EPS = 1e-12


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float


@dataclass(frozen=True)
class QuadraticForm:
    """Implicit conic A x^2 + B xy + C y^2 + D x + E y + G = 0."""

    A: float
    B: float
    C: float
    D: float
    E: float
    G: float

    def value_at(self, p: Point) -> float:
        x, y = p.x, p.y
        return (
            self.A * x * x
            + self.B * x * y
            + self.C * y * y
            + self.D * x
            + self.E * y
            + self.G
        )

    def residual_at(self, p: Point) -> float:
        """|value| normalized by the size of the evaluated terms."""
        x, y = p.x, p.y
        scale = (
            abs(self.A * x * x)
            + abs(self.B * x * y)
            + abs(self.C * y * y)
            + abs(self.D * x)
            + abs(self.E * y)
            + abs(self.G)
        )
        return abs(self.value_at(p)) / max(scale, 1.0)

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.A, self.B / 2.0, self.D / 2.0],
                [self.B / 2.0, self.C, self.E / 2.0],
                [self.D / 2.0, self.E / 2.0, self.G],
            ]
        )


@dataclass(frozen=True)
class FocalConic:
    """Pencil member with shape parameter p and pencil parameter t."""

    p: float
    t: float

    @property
    def focus(self) -> Point:
        return Point(-self.p, 0.0)

    @property
    def center(self) -> Point:
        # From the expanded implicit form; the major axis is the x-axis.
        return Point(-self.p * (1.0 - self.t) / (1.0 - self.t * self.p * self.p), 0.0)

    @property
    def second_focus(self) -> Point:
        return Point(2.0 * self.center.x + self.p, 0.0)

    @property
    def eccentricity(self) -> float:
        """Derived, not authoritative: e = p * sqrt(t) (sign follows p)."""
        return self.p * math.sqrt(self.t)

    @property
    def excluded_x(self) -> float:
        if self.p == 0.0:
            return math.inf
        return -1.0 / self.p


def pencil_member(p: float, t: float) -> FocalConic:
    if abs(abs(p) - 1.0) < 1e-9:
        raise DegenerateP("p = +-1 gives a degenerate pencil")
    if t <= 0.0:
        raise NonpositiveT(f"pencil parameter t must be positive, got {t}")
    return FocalConic(float(p), float(t))


def limiting_conic(p: float) -> FocalConic:
    """The t = 1 member, x^2 + y^2/(1 - p^2) = 1 with foci (+-p, 0)."""
    return pencil_member(p, 1.0)


def classify(c: FocalConic) -> str:
    e2 = c.p * c.p * c.t
    if abs(e2 - 1.0) <= _CLASSIFY_EPS:
        return "parabola"
    return "ellipse" if e2 < 1.0 else "hyperbola"


def focal_radius(c: FocalConic, alpha: float) -> float:
    """Signed distance from the focus along direction alpha."""
    rt = math.sqrt(c.t)
    denom = 1.0 - rt * c.p * math.cos(alpha)
    if abs(denom) < DEGENERACY_EPS:
        raise AsymptoticDirection(f"alpha = {alpha} is an asymptotic direction")
    return rt * (1.0 - c.p * c.p) / denom

def point_at(c: FocalConic, alpha: float) -> Point:
    r = focal_radius(c, alpha)
    return Point(-c.p + r * math.cos(alpha), r * math.sin(alpha))


def parameter_of(p: float, x: Point) -> float:
    """The unique t whose member passes through x (foliation property)."""
    if abs(abs(p) - 1.0) < 1e-9:
        raise DegenerateP("p = +-1 gives a degenerate pencil")
    denom = 1.0 + p * x.x
    if abs(denom) < DEGENERACY_EPS:
        raise OnExcludedLine(f"{x} lies on the excluded line x = {-1.0 / p}")
    return ((p + x.x) ** 2 + x.y**2) / denom**2


def quadratic_form(c: FocalConic) -> QuadraticForm:
    p, t = c.p, c.t
    return QuadraticForm(
        A=1.0 - t * p * p,
        B=0.0,
        C=1.0,
        D=2.0 * p * (1.0 - t),
        E=0.0,
        G=p * p - t,
    )


def tangent_at(c: FocalConic, alpha: float) -> Line:
    """Tangent line at point_at(c, alpha), from the implicit gradient."""
    pt = point_at(c, alpha)
    p, t = c.p, c.t
    gx = (p + pt.x) - t * p * (1.0 + p * pt.x)
    gy = pt.y
    return Line.from_coefficients(gx, gy, -(gx * pt.x + gy * pt.y))


def tangency_residual(c: FocalConic, line: Line) -> float:
    """0 iff the line is tangent to c; the line-conic discriminant, scale-free.

    A line l is tangent to the conic with matrix M iff l^T adj(M) l = 0, which
    is the discriminant of substituting the line into the implicit equation.
    """
    m = quadratic_form(c).matrix()
    adj = np.linalg.det(m) * np.linalg.inv(m)
    adj = adj / np.max(np.abs(adj))
    l = np.array([line.a, line.b, line.c])
    return abs(l @ adj @ l) / (1.0 + line.c * line.c)


def fit_circle(points: list[Point]) -> Circle:
    """Algebraic least-squares circle through the given points."""
    if len(points) < 3:
        raise ValueError("need at least three points to fit a circle")
    xy = np.array([[p.x, p.y] for p in points])
    a = np.column_stack([xy[:, 0], xy[:, 1], np.ones(len(points))])
    b = -(xy[:, 0] ** 2 + xy[:, 1] ** 2)
    (d, e, g), *_ = np.linalg.lstsq(a, b, rcond=None)
    cx, cy = -d / 2.0, -e / 2.0
    r2 = cx * cx + cy * cy - g
    if r2 <= 0.0:
        raise ValueError("degenerate circle fit")
    return Circle(Point(cx, cy), math.sqrt(r2))


def _sampled_tangents(c: FocalConic, count: int) -> list[tuple[float, Line]]:
    """Tangents at evenly spread angles, nudging off asymptotic directions."""
    out = []
    for j in range(count):
        alpha = 2.0 * math.pi * j / count
        for _ in range(4):
            try:
                out.append((alpha, tangent_at(c, alpha)))
                break
            except AsymptoticDirection:
                alpha += 1e-6
    return out


def pedal_circle(c: FocalConic, samples: int = 32, tol: float = 1e-9) -> Circle:
    """Locus of feet of perpendiculars from the focus to tangent lines.

    Computed by sampling and a least-squares fit rather than in closed form,
    so the fit residual doubles as a self-test of tangent_at.
    """
    if classify(c) == "parabola":
        raise ParabolaMember("pedal of a parabola about its focus is a line")
    f = c.focus
    feet = [foot_perpendicular(f, line) for _, line in _sampled_tangents(c, samples)]
    circ = fit_circle(feet)
    dev = max(abs(math.hypot(p.x - circ.center.x, p.y - circ.center.y) - circ.radius) for p in feet)
    if dev > tol * max(1.0, circ.radius):
        raise ValueError(f"pedal locus deviates from a circle by {dev}")
    return circ
