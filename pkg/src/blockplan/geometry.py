"""Planar geometry: block poses, halfspace decomposition, reach regions.

The complement of a square block's footprint is expressed as the union of
four halfspaces written in the block's own frame.  Placement solvers pick
one of the four per obstacle; everything here stays linear in the query
point, which keeps the downstream optimization mixed-integer convex.
"""

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def _normalize_angle(theta: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    t = math.remainder(theta, TWO_PI)
    if t <= -math.pi:
        t += TWO_PI
    return t


def rotation_matrix(theta: float) -> np.ndarray:
    """2x2 rotation of the block frame w.r.t. the global frame."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


@dataclass(frozen=True)
class BlockPose:
    """SE(2) pose of a square block plus its physical extent."""

    x: float
    y: float
    theta: float = 0.0
    height: float = 0.05
    size_l: float = 0.05

    def __post_init__(self):
        if self.size_l <= 0.0:
            raise ValueError(f"size_l must be positive, got {self.size_l}")
        if self.height <= 0.0:
            raise ValueError(f"height must be positive, got {self.height}")
        object.__setattr__(self, "theta", _normalize_angle(self.theta))

    @property
    def xy(self) -> np.ndarray:
        return np.array([self.x, self.y])

    def moved_to(self, x: float, y: float, theta: float = 0.0) -> "BlockPose":
        return BlockPose(x, y, theta, self.height, self.size_l)


@dataclass(frozen=True)
class Halfspace:
    """Linear constraint  [a b] R(frame_theta)^T p >= c  on a planar point p.

    (a, b) is one of the four axis directions in the rotated frame; c is in
    meters.  For block complements the four halfspaces are a disjunction;
    for reach polygons a list of these is a conjunction.
    """

    a: float
    b: float
    c: float
    frame_theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "frame_theta", _normalize_angle(self.frame_theta))

    def normal_row(self) -> np.ndarray:
        """Row vector w with the constraint in global coordinates: w @ p >= c."""
        ct, st = math.cos(self.frame_theta), math.sin(self.frame_theta)
        return np.array([self.a * ct - self.b * st, self.a * st + self.b * ct])

    def value(self, point) -> float:
        """Signed slack; >= 0 means the constraint is satisfied."""
        w = self.normal_row()
        return float(w[0] * point[0] + w[1] * point[1] - self.c)

    def satisfied(self, point, tol: float = 0.0) -> bool:
        return self.value(point) >= -tol


def halfspaces_of_block(pose: BlockPose, margin: float = 0.0) -> list:
    """Four halfspaces whose union is the complement of the inflated footprint.

    Offsets are half the block size plus ``margin``; the block center is
    first rotated into the block frame.
    """
    if margin < 0.0:
        raise ValueError("margin must be nonnegative")
    h = pose.size_l / 2.0 + margin
    ct, st = math.cos(pose.theta), math.sin(pose.theta)
    xb = pose.x * ct + pose.y * st
    yb = -pose.x * st + pose.y * ct
    t = pose.theta
    return [
        Halfspace(1.0, 0.0, h + xb, t),
        Halfspace(-1.0, 0.0, h - xb, t),
        Halfspace(0.0, 1.0, h + yb, t),
        Halfspace(0.0, -1.0, h - yb, t),
    ]


def point_in_footprint(pose: BlockPose, point, margin: float = 0.0) -> bool:
    """True iff the point violates all four complement halfspaces.

    Points exactly on the inflated boundary satisfy a closed halfspace and
    therefore count as outside.
    """
    return all(hs.value(point) < 0.0 for hs in halfspaces_of_block(pose, margin))


@dataclass(frozen=True)
class ReachRegion:
    """Reachable disk of the arm, linearized as an inscribed regular polygon."""

    center: tuple = (0.0, 0.0)
    radius: float = 0.8
    polygon_sides: int = 8

    def __post_init__(self):
        if self.polygon_sides < 4:
            raise ValueError("polygon_sides must be at least 4")
        if self.radius <= 0.0:
            raise ValueError("radius must be positive")

    @property
    def apothem(self) -> float:
        return self.radius * math.cos(math.pi / self.polygon_sides)

    def contains(self, point, tol: float = 0.0) -> bool:
        """Membership in the inscribed polygon (conservative w.r.t. the disk)."""
        return all(hs.satisfied(point, tol) for hs in reach_halfspaces(self))


def reach_halfspaces(region: ReachRegion) -> list:
    """Conjunction of halfspaces equal to the inscribed polygon of the disk.

    Every point satisfying all of them lies within ``radius`` of the center.
    """
    n = region.polygon_sides
    cx, cy = region.center
    apothem = region.apothem
    out = []
    for k in range(n):
        phi = TWO_PI * k / n
        d = (math.cos(phi), math.sin(phi))
        # d . p <= d . center + apothem, written as -d . p >= -(...)
        out.append(Halfspace(-1.0, 0.0, -(d[0] * cx + d[1] * cy) - apothem, phi))
    return out


def footprints_overlap(p1: BlockPose, p2: BlockPose, tol: float = 1e-9) -> bool:
    """Exact separating-axis test between two (possibly rotated) squares."""
    corners = []
    for pose in (p1, p2):
        r = rotation_matrix(pose.theta)
        h = pose.size_l / 2.0
        local = np.array([[h, h], [h, -h], [-h, -h], [-h, h]])
        corners.append(local @ r.T + pose.xy)
    for pose in (p1, p2):
        r = rotation_matrix(pose.theta)
        for axis in (r[:, 0], r[:, 1]):
            lo1, hi1 = _project(corners[0], axis)
            lo2, hi2 = _project(corners[1], axis)
            if hi1 < lo2 + tol or hi2 < lo1 + tol:
                return False
    return True


def _project(points: np.ndarray, axis: np.ndarray):
    vals = points @ axis
    return float(vals.min()), float(vals.max())
