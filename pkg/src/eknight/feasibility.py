"""Fast necessary-condition checks for tour existence.

Coloring a vertex by the parity of its coordinate sum makes the knight graph
bipartite: a squared length of 5 forces an odd taxicab length (3 or 5), so
every jump switches color.  The verdicts below are sound in one direction
only: "infeasible" proves no tour of the requested kind exists, "feasible"
merely passes the necessary conditions.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .board import Board, Vertex


class Color(Enum):
    DARK = "dark"
    LIGHT = "light"


def color(v: Vertex) -> Color:
    """Dark iff the coordinate sum is even."""
    return Color.DARK if sum(v) % 2 == 0 else Color.LIGHT


class ColorCounts(NamedTuple):
    dark: int
    light: int


def color_counts(board: Board) -> ColorCounts:
    """Dark/light counts over all non-hole vertices."""
    dark = sum(1 for v in board.vertices() if sum(v) % 2 == 0)
    return ColorCounts(dark, board.vertex_count - dark)


def move_decompositions(k: int) -> set[tuple[int, ...]]:
    """All multisets of absolute coordinate changes with squares summing to 5.

    Each multiset is returned as a descending tuple of its nonzero entries;
    at most k coordinates may change.
    """
    if k < 1:
        raise ValueError(f"dimension must be >= 1, got {k}")
    found: set[tuple[int, ...]] = set()

    def extend(remaining: int, max_part: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            if len(acc) <= k:
                found.add(acc)
            return
        part = min(max_part, int(remaining ** 0.5))
        while part >= 1:
            if part * part <= remaining and len(acc) < k:
                extend(remaining - part * part, part, acc + (part,))
            part -= 1

    extend(5, 2, ())
    return found


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of a necessary-condition scan.

    reasons lists the violated conditions (empty iff feasible); notes carry
    non-binding diagnostics.
    """

    feasible: bool
    reasons: tuple[str, ...]
    notes: tuple[str, ...] = ()


def _verdict(reasons: Iterable[str], notes: Iterable[str] = ()) -> FeasibilityVerdict:
    reasons = tuple(reasons)
    return FeasibilityVerdict(not reasons, reasons, tuple(notes))


def closed_tour_necessary(board: Board) -> FeasibilityVerdict:
    """Necessary conditions for a closed tour (Hamiltonian cycle)."""
    reasons = []
    n = board.vertex_count
    if n == 0:
        return _verdict(["no vertices"])
    if n % 2 == 1:
        reasons.append(f"odd vertex count ({n})")
    dark, light = color_counts(board)
    if dark != light:
        reasons.append(f"dark/light imbalance ({dark} dark, {light} light)")
    if n >= 1 and not board.is_connected():
        reasons.append("disconnected")
    hist = board.degree_histogram()
    if hist:
        min_degree = min(hist)
        if min_degree < 2:
            reasons.append(f"min degree {min_degree} < 2")
    if n < 3:
        reasons.append(f"fewer than 3 vertices ({n})")
    return _verdict(reasons)


def open_tour_necessary(board: Board) -> FeasibilityVerdict:
    """Necessary conditions for an open tour (Hamiltonian path)."""
    reasons = []
    notes = []
    n = board.vertex_count
    if n == 0:
        return _verdict(["no vertices"])
    dark, light = color_counts(board)
    if abs(dark - light) > 1:
        reasons.append(f"dark/light imbalance exceeds 1 ({dark} dark, {light} light)")
    elif dark != light and n > 1:
        majority = "dark" if dark > light else "light"
        notes.append(f"both endpoints must be {majority} (majority color)")
    if n >= 1 and not board.is_connected():
        reasons.append("disconnected")
    degree_one = board.degree_histogram().get(1, 0)
    if degree_one > 2:
        reasons.append(f"{degree_one} vertices of degree 1 (at most 2 allowed)")
    return _verdict(reasons, notes)


def classical_closed_tour_condition(sides: Iterable[int]) -> bool:
    """Closed-tour criterion for the classical knight on a box of dimension >= 3.

    True iff the cell count is even, the second-largest side is >= 3 and the
    largest side is >= 4.  Sides are sorted defensively; informational only,
    independent of the squared-length-5 move rule.
    """
    sides = sorted(int(s) for s in sides)
    if len(sides) < 3:
        raise ValueError(f"need at least 3 sides, got {len(sides)}")
    if sides[0] < 2:
        raise ValueError(f"all sides must be >= 2, got {tuple(sides)}")
    product = 1
    for s in sides:
        product *= s
    return product % 2 == 0 and sides[-2] >= 3 and sides[-1] >= 4
