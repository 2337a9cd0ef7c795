"""Reciprocation (polar duality) about a circle centered at the pencil focus.

The transform exchanges points and lines: the polar of P is the line
perpendicular to the radius through the inverse of P, and the pole of a line
is the inverse of the foot of the perpendicular from the center.  A pencil
member reciprocated about its focus becomes a circle, namely the inverse
image of its pedal circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CenterHasNoPolar,
    CenterNotFocus,
    FocusOutsideDual,
    LineThroughCenter,
)
from .kernel import DEGENERACY_EPS, Line, Point, distance, foot_perpendicular
from .pencil import Circle, FocalConic, fit_circle, pedal_circle


@dataclass(frozen=True)
class Reciprocator:
    center: Point
    k: float = 1.0

    def __post_init__(self):
        if self.k <= 0.0:
            raise ValueError("inversion radius must be positive")


def invert_point(r: Reciprocator, p: Point) -> Point:
    d2 = (p.x - r.center.x) ** 2 + (p.y - r.center.y) ** 2
    if d2 < DEGENERACY_EPS**2:
        raise CenterHasNoPolar("the center has no inverse")
    s = r.k * r.k / d2
    return Point(r.center.x + s * (p.x - r.center.x), r.center.y + s * (p.y - r.center.y))


def polar_of(r: Reciprocator, p: Point) -> Line:
    if distance(p, r.center) < DEGENERACY_EPS:
        raise CenterHasNoPolar("the center has no polar line")
    inv = invert_point(r, p)
    nx, ny = p.x - r.center.x, p.y - r.center.y
    return Line.from_coefficients(nx, ny, -(nx * inv.x + ny * inv.y))


def pole_of(r: Reciprocator, line: Line) -> Point:
    if line.distance_to(r.center) < DEGENERACY_EPS:
        raise LineThroughCenter("a line through the center has no pole")
    return invert_point(r, foot_perpendicular(r.center, line))


def invert_circle(r: Reciprocator, c: Circle) -> Circle:
    """Image of a circle not through the center under inversion."""
    d2 = (c.center.x - r.center.x) ** 2 + (c.center.y - r.center.y) ** 2
    denom = d2 - c.radius * c.radius
    if abs(denom) < DEGENERACY_EPS:
        raise LineThroughCenter("circle through the center inverts to a line")
    s = r.k * r.k / denom
    center = Point(
        r.center.x + s * (c.center.x - r.center.x),
        r.center.y + s * (c.center.y - r.center.y),
    )
    return Circle(center, abs(s) * c.radius)


def dual_conic(
    r: Reciprocator,
    c: FocalConic,
    samples: int = 32,
    tol: float = 1e-9,
    require_focus_inside: bool = True,
) -> Circle:
    """Reciprocal of a pencil member about its own focus: a fitted circle.

    The poles of sampled tangent lines are fitted to a circle; the fit
    residual is itself a correctness check.  Tangents through the center
    (measure zero) are skipped and replaced by a nearby sample.  When
    require_focus_inside is set and the focus lands outside the fitted
    circle, the inversion radius is halved up to 8 times before giving up;
    with a hyperbola member the focus stays outside for every radius, so
    pass require_focus_inside=False to accept that configuration.
    """
    if distance(r.center, c.focus) > 1e-9:
        raise CenterNotFocus(f"reciprocation center {r.center} is not the focus {c.focus}")
    from .pencil import _sampled_tangents  # tangent sampling shared with pedal_circle

    recip = r
    for _ in range(9):
        poles = []
        for alpha, line in _sampled_tangents(c, samples):
            for _ in range(4):
                try:
                    poles.append(pole_of(recip, line))
                    break
                except LineThroughCenter:
                    from .pencil import tangent_at

                    alpha += 1e-6
                    line = tangent_at(c, alpha)
        circ = fit_circle(poles)
        dev = max(
            abs(math.hypot(p.x - circ.center.x, p.y - circ.center.y) - circ.radius)
            for p in poles
        )
        if dev > tol * max(1.0, circ.radius):
            raise ValueError(f"tangent poles deviate from a circle by {dev}")
        if not require_focus_inside or distance(r.center, circ.center) < circ.radius:
            return circ
        recip = Reciprocator(r.center, recip.k / 2.0)
    raise FocusOutsideDual("focus outside the dual circle for every tried radius")
