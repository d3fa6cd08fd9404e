"""Compute-saving metric over training curves.

A curve is a sequence of (cumulative FLOPs, metric) samples.  The saving
ratio r = (x_scratch - x_method) / x_scratch compares the FLOPs each curve
needs to first reach a target metric value, with linear interpolation
between samples.  r > 0 means the method reached the target cheaper.
"""

import csv
from dataclasses import dataclass

from .errors import IoFailure, TargetNotReached

DIRECTIONS = ("lower_is_better", "higher_is_better")


@dataclass(frozen=True)
class TrainingCurve:
    points: tuple
    direction: str = "lower_is_better"

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ValueError(
                f"direction must be one of {DIRECTIONS}, got {self.direction!r}"
            )
        pts = tuple((float(f), float(m)) for f, m in self.points)
        if len(pts) < 2:
            raise ValueError(f"curve needs at least 2 points, got {len(pts)}")
        for (f0, _), (f1, _) in zip(pts, pts[1:]):
            if not f1 > f0:
                raise ValueError(
                    f"flops must be strictly increasing, got {f0} then {f1}"
                )
        object.__setattr__(self, "points", pts)

    def _meets(self, metric, target):
        if self.direction == "lower_is_better":
            return metric <= target
        return metric >= target


def first_crossing(curve, target):
    """Smallest FLOPs at which the curve first meets-or-beats the target.

    A sample sitting exactly on the target resolves to that sample's
    FLOPs; between samples the crossing is linearly interpolated.
    """
    target = float(target)
    pts = curve.points
    f0, m0 = pts[0]
    if curve._meets(m0, target):
        return f0
    for (f0, m0), (f1, m1) in zip(pts, pts[1:]):
        if curve._meets(m1, target):
            if m1 == target:
                return f1  # tie at a sample: that sample's flops, exactly
            t = (target - m0) / (m1 - m0)
            return f0 + t * (f1 - f0)
    raise TargetNotReached(
        f"curve never reaches {target} ({curve.direction})"
    )


def flops_saving_ratio(scratch, method, target):
    """Fraction of scratch-training FLOPs the method saves reaching target."""
    x_scratch = first_crossing(scratch, target)
    x_method = first_crossing(method, target)
    if x_scratch == 0.0:
        raise ValueError("scratch curve meets the target at zero flops")
    return (x_scratch - x_method) / x_scratch


def load_curve_csv(path, direction="lower_is_better"):
    """Read a two-column flops,metric CSV; the header row is optional."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            rows = [row for row in csv.reader(f) if row]
    except (OSError, UnicodeDecodeError) as e:
        raise IoFailure(f"cannot read curve {path!r}: {e}") from e
    points = []
    for i, row in enumerate(rows):
        if len(row) != 2:
            raise IoFailure(
                f"{path}: row {i + 1} has {len(row)} columns, expected 2"
            )
        try:
            points.append((float(row[0]), float(row[1])))
        except ValueError:
            if i == 0:
                continue  # header
            raise IoFailure(f"{path}: row {i + 1} is not numeric: {row}") from None
    if len(points) < 2:
        raise IoFailure(f"{path}: need at least 2 data rows")
    try:
        return TrainingCurve(tuple(points), direction)
    except ValueError as e:
        raise IoFailure(f"{path}: {e}") from None
