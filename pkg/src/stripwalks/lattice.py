"""Core geometric types: strips, lattice walks, and count tables.

A walk is stored as its explicit point sequence (not as step letters) because
every classification predicate in the package -- bridge-ness, half-space-ness,
span, decomposition cuts -- reads coordinates directly.  All types here are
immutable value types and safe to share between threads.

Conventions used throughout the package:

* every walk starts at the origin ``(0, 0)``;
* the *length* of a walk is its number of steps (points minus one);
* the single-point walk of length 0 counts as a self-avoiding walk, a bridge
  and a half-space walk (this makes the constant term of every counting
  series equal to 1);
* coordinates are machine integers, counts are exact unbounded integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

Point = tuple[int, int]

# Step alphabet for the canonical text encoding of walks, e.g. "RRU".
STEP_DELTAS: dict[str, Point] = {
    "R": (1, 0),
    "L": (-1, 0),
    "U": (0, 1),
    "D": (0, -1),
}
_DELTA_STEPS = {v: k for k, v in STEP_DELTAS.items()}

# Irreducible-bridge type labels: first letter = start line, second = end
# line, with O for an outer line of the strip and I for an inner one.
BRIDGE_TYPES = ("OO", "OI", "IO", "II")

WALK_KINDS = ("SAW", "HalfSpace", "Bridge", "IrreducibleBridge")


@dataclass(frozen=True)
class StripGeometry:
    """The lattice strip Z x {y_min .. y_max}.

    The origin row 0 must belong to the strip because all walks start there.
    """

    y_min: int
    y_max: int

    def __post_init__(self) -> None:
        if not (self.y_min <= 0 <= self.y_max):
            raise ValueError(
                f"strip [{self.y_min}, {self.y_max}] must contain the origin row 0"
            )

    @property
    def width(self) -> int:
        return self.y_max - self.y_min + 1

    def contains(self, point: Point) -> bool:
        return self.y_min <= point[1] <= self.y_max

    @property
    def outer_lines(self) -> tuple[int, int]:
        """The two boundary rows of the strip."""
        return (self.y_min, self.y_max)

    @property
    def inner_lines(self) -> tuple[int, ...]:
        """The non-boundary rows of the strip."""
        return tuple(range(self.y_min + 1, self.y_max))

    def shift_origin(self, line: int) -> "StripGeometry":
        """The same strip in coordinates where row ``line`` becomes row 0.

        Used to enumerate walks that conceptually start on ``line`` while
        keeping the walk convention of starting at the origin.
        """
        if not (self.y_min <= line <= self.y_max):
            raise ValueError(f"line {line} is not a row of the strip")
        return StripGeometry(self.y_min - line, self.y_max - line)

    def mirror_line(self, y: int) -> int:
        """The image of row ``y`` under the strip's vertical mirror symmetry."""
        return self.y_min + self.y_max - y


@dataclass(frozen=True)
class Walk:
    """A self-avoiding walk on the square lattice, starting at the origin."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = self.points
        if not pts:
            raise ValueError("a walk has at least one point")
        if pts[0] != (0, 0):
            raise ValueError(f"walks start at (0, 0), got {pts[0]}")
        for i in range(1, len(pts)):
            dx = pts[i][0] - pts[i - 1][0]
            dy = pts[i][1] - pts[i - 1][1]
            if abs(dx) + abs(dy) != 1:
                raise ValueError(f"step {i} from {pts[i-1]} to {pts[i]} is not a unit step")
        if len(set(pts)) != len(pts):
            raise ValueError("walk visits a point twice")

    @classmethod
    def from_steps(cls, steps: str) -> "Walk":
        """Build a walk from its step string over the alphabet R/L/U/D."""
        x, y = 0, 0
        pts = [(0, 0)]
        for i, s in enumerate(steps):
            try:
                dx, dy = STEP_DELTAS[s]
            except KeyError:
                raise ValueError(f"unknown step letter {s!r} at position {i}") from None
            x, y = x + dx, y + dy
            pts.append((x, y))
        return cls(tuple(pts))

    def steps(self) -> str:
        """The canonical step-string encoding of the walk."""
        out = []
        for i in range(1, len(self.points)):
            dx = self.points[i][0] - self.points[i - 1][0]
            dy = self.points[i][1] - self.points[i - 1][1]
            out.append(_DELTA_STEPS[(dx, dy)])
        return "".join(out)

    @property
    def length(self) -> int:
        """Number of steps."""
        return len(self.points) - 1

    @property
    def end(self) -> Point:
        return self.points[-1]

    def span(self) -> int:
        xs = [p[0] for p in self.points]
        return max(xs) - min(xs)

    def in_strip(self, strip: StripGeometry) -> bool:
        return all(strip.contains(p) for p in self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)


def is_bridge(walk: Walk) -> bool:
    """True iff every point after the first satisfies x_0 < x_j <= x_n."""
    xs = [p[0] for p in walk.points]
    xn = xs[-1]
    return all(0 < x <= xn for x in xs[1:])


def is_half_space(walk: Walk) -> bool:
    """True iff every point after the first lies strictly right of column 0.

    The length-0 walk is a half-space walk by convention.
    """
    return all(p[0] > 0 for p in walk.points[1:])


def span(walk: Walk) -> int:
    """Difference between the largest and smallest x-coordinate of the walk."""
    return walk.span()


@dataclass(frozen=True)
class WalkClass:
    """Classification of a walk; bridge_type only applies to irreducible bridges."""

    kind: str
    bridge_type: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in WALK_KINDS:
            raise ValueError(f"unknown walk kind {self.kind!r}")
        if self.bridge_type is not None:
            if self.kind != "IrreducibleBridge":
                raise ValueError("bridge_type only applies to irreducible bridges")
            if self.bridge_type not in BRIDGE_TYPES:
                raise ValueError(f"unknown bridge type {self.bridge_type!r}")


@dataclass(frozen=True)
class CountTable:
    """Exact counts indexed by walk length, for 0 <= n <= n_max."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts:
            raise ValueError("a count table covers at least length 0")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts are non-negative")

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        if not (0 <= n <= self.n_max):
            raise KeyError(f"length {n} outside table range 0..{self.n_max}")
        return self.counts[n]

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(enumerate(self.counts))

    def to_csv(self) -> str:
        lines = ["n,count"]
        lines += [f"{n},{c}" for n, c in self.items()]
        return "\n".join(lines) + "\n"

    def to_json_list(self) -> list[str]:
        # Ascending lengths; counts exceed the 53-bit float mantissa at
        # large n, so they are emitted as strings.
        return [str(c) for c in self.counts]
