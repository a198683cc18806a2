"""Exhaustive enumeration of strip walks: the package's ground-truth oracle.

A deterministic depth-first search (step order R, U, D, L) visits every
self-avoiding walk on a strip up to a length ceiling.  On top of the raw
counts this module implements the structural operations on bridges:

* decomposition of a bridge into irreducible factors (with the convention
  that a run of leading unit right-steps is absorbed into the following
  factor as its *tail*, and a maximal trailing run of right steps is kept
  aside as an ``r*`` suffix);
* classification of irreducible factors by start/end line (OO, OI, IO, II);
* the span decomposition and the reflection map of half-space walks used by
  the Hammersley-Welsh argument;
* the injective transformation of width-4 irreducible factors into
  left-step-free walks on a two-row strip.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .lattice import (
    BRIDGE_TYPES,
    CountTable,
    StripGeometry,
    Walk,
    is_bridge,
    is_half_space,
)

# DFS step order; fixed so that golden tests are stable.
_DELTAS = ((1, 0), (0, 1), (0, -1), (-1, 0))


def _check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")


def _count_walks(
    strip: StripGeometry, n_max: int, half_space: bool, bridges_only: bool
) -> list[int]:
    counts = [0] * (n_max + 1)
    counts[0] = 1  # the single-point walk
    y_lo, y_hi = strip.y_min, strip.y_max
    visited = {(0, 0)}

    def rec(x: int, y: int, depth: int, max_x: int) -> None:
        if depth == n_max:
            return
        d = depth + 1
        for dx, dy in _DELTAS:
            nx = x + dx
            ny = y + dy
            if ny < y_lo or ny > y_hi:
                continue
            if half_space and nx <= 0:
                continue
            p = (nx, ny)
            if p in visited:
                continue
            m = nx if nx > max_x else max_x
            # A walk is a bridge iff its endpoint is a rightmost point.
            if not bridges_only or nx == m:
                counts[d] += 1
            visited.add(p)
            rec(nx, ny, d, m)
            visited.remove(p)

    rec(0, 0, 0, 0)
    return counts


def count_saws(strip: StripGeometry, n_max: int) -> CountTable:
    """Exact number of n-step self-avoiding walks on the strip, n = 0..n_max."""
    _check_n_max(n_max)
    return CountTable(tuple(_count_walks(strip, n_max, False, False)))


def count_half_space(strip: StripGeometry, n_max: int) -> CountTable:
    """Exact number of n-step half-space walks on the strip, n = 0..n_max."""
    _check_n_max(n_max)
    return CountTable(tuple(_count_walks(strip, n_max, True, False)))


def count_bridges(strip: StripGeometry, n_max: int) -> CountTable:
    """Exact number of n-step bridges on the strip, n = 0..n_max."""
    _check_n_max(n_max)
    return CountTable(tuple(_count_walks(strip, n_max, True, True)))


def bridge_span_table(strip: StripGeometry, n: int) -> dict[int, int]:
    """Counts of n-step bridges grouped by span.

    Bridges start in column 0 and never return to it, so the span of a
    bridge is simply its maximal x-coordinate.
    """
    _check_n_max(n)
    table: dict[int, int] = {}
    if n == 0:
        return {0: 1}
    y_lo, y_hi = strip.y_min, strip.y_max
    visited = {(0, 0)}

    def rec(x: int, y: int, depth: int, max_x: int) -> None:
        d = depth + 1
        for dx, dy in _DELTAS:
            nx = x + dx
            ny = y + dy
            if ny < y_lo or ny > y_hi or nx <= 0:
                continue
            p = (nx, ny)
            if p in visited:
                continue
            m = nx if nx > max_x else max_x
            if d == n:
                if nx == m:
                    table[m] = table.get(m, 0) + 1
            else:
                visited.add(p)
                rec(nx, ny, d, m)
                visited.remove(p)

    rec(0, 0, 0, 0)
    return table


def count_bridges_by_span(strip: StripGeometry, n: int, span: int) -> int:
    """Exact number of n-step bridges with the given span."""
    if span < 0:
        raise ValueError(f"span must be non-negative, got {span}")
    return bridge_span_table(strip, n).get(span, 0)


def iter_walks(strip: StripGeometry, n_max: int, kind: str = "saw") -> Iterator[Walk]:
    """Yield every walk of the given kind with length 0..n_max.

    ``kind`` is one of ``"saw"``, ``"half_space"``, ``"bridge"``.  Walks come
    out in depth-first order, prefixes before extensions.
    """
    _check_n_max(n_max)
    if kind not in ("saw", "half_space", "bridge"):
        raise ValueError(f"unknown walk kind {kind!r}")
    half_space = kind in ("half_space", "bridge")
    bridges_only = kind == "bridge"
    y_lo, y_hi = strip.y_min, strip.y_max
    path = [(0, 0)]
    visited = {(0, 0)}

    def rec(x: int, y: int, depth: int, max_x: int) -> Iterator[Walk]:
        if depth == n_max:
            return
        d = depth + 1
        for dx, dy in _DELTAS:
            nx = x + dx
            ny = y + dy
            if ny < y_lo or ny > y_hi:
                continue
            if half_space and nx <= 0:
                continue
            p = (nx, ny)
            if p in visited:
                continue
            visited.add(p)
            path.append(p)
            m = nx if nx > max_x else max_x
            if not bridges_only or nx == m:
                yield Walk(tuple(path))
            yield from rec(nx, ny, d, m)
            path.pop()
            visited.remove(p)

    yield Walk(((0, 0),))
    yield from rec(0, 0, 0, 0)


# ---------------------------------------------------------------------------
# Bridge decomposition into irreducible factors
# ---------------------------------------------------------------------------


def cut_points(walk: Walk) -> tuple[int, ...]:
    """Indices 0 < j < n where the bridge splits into two bridges.

    j is a cut iff the prefix ending at j and the suffix starting at j are
    both bridges after translation, i.e. x_j is a running maximum and the
    suffix never returns to column x_j or further left.
    """
    xs = [p[0] for p in walk.points]
    n = len(xs) - 1
    if n <= 1:
        return ()
    suffix_min = [0] * (n + 1)
    suffix_min[n] = xs[n]
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(xs[j], suffix_min[j + 1])
    cuts = []
    running_max = xs[0]
    for j in range(1, n):
        if xs[j] > running_max:
            running_max = xs[j]
        if xs[j] == running_max and suffix_min[j + 1] > xs[j]:
            cuts.append(j)
    return tuple(cuts)


@dataclass(frozen=True)
class IrreducibleFactor:
    """One irreducible factor of a bridge, translated to start at the origin.

    ``start_line`` is the row of the strip on which the factor started before
    translation; ``tail_length`` is the number of leading unit right-steps
    merged into the factor.
    """

    walk: Walk
    start_line: int
    tail_length: int
    bridge_type: str | None = None

    @property
    def length(self) -> int:
        return self.walk.length

    @property
    def end_line(self) -> int:
        return self.start_line + self.walk.end[1]


@dataclass(frozen=True)
class BridgeDecomposition:
    """Irreducible factors of a bridge plus the trailing run of right steps."""

    factors: tuple[IrreducibleFactor, ...]
    trailing_right_run: int

    def reassemble_steps(self) -> str:
        return "".join(f.walk.steps() for f in self.factors) + "R" * self.trailing_right_run


def _translate_to_origin(points: tuple[tuple[int, int], ...]) -> Walk:
    x0, y0 = points[0]
    return Walk(tuple((x - x0, y - y0) for x, y in points))


def decompose_bridge(walk: Walk, strip: StripGeometry | None = None) -> BridgeDecomposition:
    """Split a bridge into irreducible factors and a trailing right-step run.

    Runs of unit right-step factors are merged into the next non-trivial
    factor as its tail; a maximal trailing run of right steps is returned
    separately.  When ``strip`` is given (width 3 or 4), each factor is
    classified by its start and end lines.
    """
    if not is_bridge(walk):
        raise ValueError("decompose_bridge requires a bridge")
    n = walk.length
    if n == 0:
        return BridgeDecomposition((), 0)
    boundaries = (0,) + cut_points(walk) + (n,)
    segments = [
        (boundaries[i], boundaries[i + 1]) for i in range(len(boundaries) - 1)
    ]
    factors: list[IrreducibleFactor] = []
    pending_tail = 0
    for a, b in segments:
        if b - a == 1:
            pending_tail += 1
            continue
        seg_start = a - pending_tail
        sub = _translate_to_origin(walk.points[seg_start : b + 1])
        start_line = walk.points[seg_start][1]
        bridge_type = None
        if strip is not None and strip.width in (3, 4):
            end_line = start_line + sub.end[1]
            outer = set(strip.outer_lines)
            bridge_type = ("O" if start_line in outer else "I") + (
                "O" if end_line in outer else "I"
            )
        factors.append(IrreducibleFactor(sub, start_line, pending_tail, bridge_type))
        pending_tail = 0
    return BridgeDecomposition(tuple(factors), pending_tail)


def classify_irreducible(factor: IrreducibleFactor, strip: StripGeometry) -> str:
    """Label an irreducible factor OO/OI/IO/II by its start and end lines."""
    if strip.width not in (3, 4):
        raise ValueError(f"classification requires width 3 or 4, got {strip.width}")
    outer = set(strip.outer_lines)
    start, end = factor.start_line, factor.end_line
    for line in (start, end):
        if not (strip.y_min <= line <= strip.y_max):
            raise ValueError(f"line {line} is not a row of the strip")
    return ("O" if start in outer else "I") + ("O" if end in outer else "I")


def _is_irreducible_bridge(walk: Walk) -> int | None:
    """Tail length if the walk is a single merged irreducible factor, else None.

    A bridge is a merged irreducible factor iff its cut set is exactly
    {1..k} for some k >= 0 (the leading right-step tail) and the part after
    the tail has length at least 2.
    """
    n = walk.length
    cuts = cut_points(walk)
    k = len(cuts)
    if cuts != tuple(range(1, k + 1)):
        return None
    if n - k < 2:
        return None
    return k


@lru_cache(maxsize=None)
def _irreducible_tables(
    strip: StripGeometry, start_line: int, n_max: int, tailless: bool
) -> dict[str, tuple[int, ...]]:
    shifted = strip.shift_origin(start_line)
    outer = set(shifted.outer_lines)
    tables = {t: [0] * (n_max + 1) for t in BRIDGE_TYPES}
    for walk in iter_walks(shifted, n_max, kind="bridge"):
        if walk.length == 0:
            continue
        tail = _is_irreducible_bridge(walk)
        if tail is None or (tailless and tail != 0):
            continue
        label = ("O" if 0 in outer else "I") + ("O" if walk.end[1] in outer else "I")
        tables[label][walk.length] += 1
    return {t: tuple(v) for t, v in tables.items()}


def count_irreducible(
    strip: StripGeometry,
    bridge_type: str,
    n_max: int,
    start_line: int,
    tailless: bool = False,
) -> CountTable:
    """Exact counts of irreducible bridges of one type starting on a given line.

    Counts include the merged tail unless ``tailless`` is set, in which case
    only factors with no leading right-step run are counted.
    """
    _check_n_max(n_max)
    if bridge_type not in BRIDGE_TYPES:
        raise ValueError(f"unknown bridge type {bridge_type!r}")
    if strip.width not in (3, 4):
        raise ValueError(f"irreducible counting requires width 3 or 4, got {strip.width}")
    starts_outer = start_line in strip.outer_lines
    if bridge_type.startswith("O") != starts_outer:
        raise ValueError(
            f"start line {start_line} is {'outer' if starts_outer else 'inner'}, "
            f"inconsistent with type {bridge_type}"
        )
    return CountTable(_irreducible_tables(strip, start_line, n_max, tailless)[bridge_type])


# ---------------------------------------------------------------------------
# Hammersley-Welsh span decomposition and reflection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HWDecomposition:
    """Span decomposition (A_1..A_k, n_1..n_k) of a half-space walk.

    The spans decrease strictly, the cut indices increase, and n_k equals the
    walk length.  On a width-3 strip k never exceeds 3; on width 4 it never
    exceeds 4 (verified exhaustively by the test suite).
    """

    spans: tuple[int, ...]
    cut_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.spans) != len(self.cut_indices) or not self.spans:
            raise ValueError("spans and cut indices must be non-empty and aligned")
        if any(a <= b for a, b in zip(self.spans, self.spans[1:])) or self.spans[-1] <= 0:
            raise ValueError("spans must be strictly decreasing and positive")
        if any(a >= b for a, b in zip(self.cut_indices, self.cut_indices[1:])):
            raise ValueError("cut indices must be strictly increasing")

    @property
    def k(self) -> int:
        return len(self.spans)


def hw_decompose(walk: Walk) -> HWDecomposition:
    """Alternating span decomposition of a half-space walk.

    Starting from n_0 = 0, the i-th pass finds the largest alternating
    x-excursion A_i = max (-1)^i (x_{n_{i-1}} - x_j) over j in [n_{i-1}, n]
    and records the largest index attaining it; the recursion stops at the
    first index equal to the walk length.
    """
    if walk.length < 1:
        raise ValueError("span decomposition requires length >= 1")
    if not is_half_space(walk):
        raise ValueError("span decomposition requires a half-space walk")
    xs = [p[0] for p in walk.points]
    n = len(xs) - 1
    spans: list[int] = []
    cuts: list[int] = []
    prev = 0
    sign = 1  # +1 looks rightward, -1 leftward
    while True:
        best = None
        best_j = prev
        for j in range(prev, n + 1):
            v = sign * (xs[j] - xs[prev])
            if best is None or v >= best:
                best = v
                best_j = j
        spans.append(best)
        cuts.append(best_j)
        if best_j == n:
            break
        prev = best_j
        sign = -sign
    return HWDecomposition(tuple(spans), tuple(cuts))


def hw_reflect(walk: Walk, decomposition: HWDecomposition | None = None) -> Walk:
    """Reflect the part of a half-space walk beyond its first span maximum.

    Points up to n_1 are kept; points after n_1 are reflected across the
    column x = A_1.  The image is a half-space walk whose span decomposition
    is (A_1 + A_2, A_3, ..., A_k).  Requires k >= 2.
    """
    dec = decomposition if decomposition is not None else hw_decompose(walk)
    if dec.k < 2:
        raise ValueError("reflection requires a decomposition with k >= 2")
    a1 = dec.spans[0]
    n1 = dec.cut_indices[0]
    pts = list(walk.points[: n1 + 1])
    pts += [(2 * a1 - x, y) for x, y in walk.points[n1 + 1 :]]
    return Walk(tuple(pts))


# ---------------------------------------------------------------------------
# Width-4 irreducible-bridge transformation
# ---------------------------------------------------------------------------

# Right steps inserted by the transformation, per factor type.
TRANSFORM_ADDED_STEPS = {"OO": 2, "OI": 1, "IO": 1, "II": 0}


def _negate_steps(steps: str) -> str:
    table = str.maketrans("RLUD", "LRDU")
    return steps.translate(table)


def _split_complicated(
    walk: Walk, start_line: int, strip: StripGeometry
) -> tuple[str, str, str]:
    """Parse a tailless upper-start factor into its three two-row sub-walks.

    For a factor starting on one of the two upper lines the pattern is: a
    left-step-free walk A on the top two rows, a right-step-free walk B on
    the middle two rows, and a left-step-free walk C on the bottom two rows,
    with junction points on the shared rows.
    """
    a = strip.y_min
    rows_a = (a + 2, a + 3)
    rows_b = (a + 1, a + 2)
    rows_c = (a, a + 1)
    pts = [(x, y + start_line) for x, y in walk.points]
    steps = walk.steps()
    n = len(steps)

    # A: longest left-free prefix on the top two rows.
    i = 0
    while i < n:
        if steps[i] == "L" or pts[i + 1][1] not in rows_a:
            break
        i += 1
    if i == 0 or pts[i][1] != a + 2:
        raise ValueError("factor does not match the complicated pattern")

    # C: longest left-free suffix whose points stay on the bottom two rows.
    j = n
    if pts[n][1] in rows_c:
        while j > 0:
            if steps[j - 1] == "L" or pts[j - 1][1] not in rows_c:
                break
            j -= 1
    if j < i:
        raise ValueError("factor does not match the complicated pattern")

    walk_a, walk_b, walk_c = steps[:i], steps[i:j], steps[j:]
    if not walk_b:
        raise ValueError("factor does not match the complicated pattern")
    if any(s == "R" for s in walk_b):
        raise ValueError("factor does not match the complicated pattern")
    for k in range(i, j + 1):
        if pts[k][1] not in rows_b:
            raise ValueError("factor does not match the complicated pattern")
    if pts[j][1] != a + 1:
        raise ValueError("factor does not match the complicated pattern")
    return walk_a, walk_b, walk_c


def is_simple_factor(factor: IrreducibleFactor) -> bool:
    """True for factors that are a tail, one right step, then 1-3 verticals."""
    steps = factor.walk.steps()
    k = factor.tail_length
    body = steps[k:]
    if len(body) < 2 or body[0] != "R":
        return False
    rest = body[1:]
    return len(rest) <= 3 and (set(rest) == {"U"} or set(rest) == {"D"})


def transform_irreducible_w4(
    factor: IrreducibleFactor, strip: StripGeometry
) -> Walk:
    """Transform a tailless complicated width-4 factor into a two-row walk.

    The middle sub-walk is rotated half a turn about its start so that it
    runs rightward, and separating right steps are inserted after the top
    sub-walk and/or before the bottom one depending on the factor type (two
    for OO, one for OI or IO, none for II).  The image has no left steps,
    lives on two rows, and is longer by the number of inserted steps; the
    map is injective on each (type, start line) domain.

    Factors starting on one of the two lower lines are first mapped through
    the strip's mirror symmetry, which swaps neither type nor length.
    """
    if strip.width != 4:
        raise ValueError(f"transformation requires a width-4 strip, got width {strip.width}")
    if factor.tail_length != 0:
        raise ValueError("transformation applies to factors with the tail removed")
    if is_simple_factor(factor):
        raise ValueError("factor does not match the complicated pattern")

    walk, start_line = factor.walk, factor.start_line
    if start_line <= strip.y_min + 1:
        # Mirror lower-start factors onto the upper lines.
        start_line = strip.mirror_line(start_line)
        walk = Walk(tuple((x, -y) for x, y in walk.points))

    bridge_type = classify_irreducible(
        IrreducibleFactor(walk, start_line, 0), strip
    )
    part_a, part_b, part_c = _split_complicated(walk, start_line, strip)

    out = part_a
    if bridge_type in ("OO", "IO"):
        out += "R"
    out += _negate_steps(part_b)
    if bridge_type in ("OO", "OI"):
        out += "R"
    out += part_c
    return Walk.from_steps(out)
