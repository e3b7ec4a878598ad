"""Doubling construction for closed tours on 2 x 2 x ... x 2 boards.

A closed tour on the k-cube extends to the (k+1)-cube: lay the tour on the
0-face as is, lay a mirrored copy on the 1-face, reverse the copy, and join
the loose ends.  Mirroring flips exactly four coordinates, so the junction
link and the closing link each change five coordinates in total (four flips
plus the new axis) and land on squared length 5; flipping is an isometry of
the cube, so every interior link stays legal.  Any 4-element flip mask works;
the default flips the four lowest axes for reproducible output.

Iterating from the embedded 64-vertex base tour yields a closed tour on the
k-cube for every k >= 6.  No tour exists below that: 0/1 coordinates only
admit the five-axis unit move, which needs k >= 5, and on the 5-cube every
cell has exactly one target (its antipode minus nothing to spare), leaving a
perfect matching instead of a connected graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from . import corpus
from .board import Board, Vertex
from .tour import Tour, TourKind

DEFAULT_FLIP_MASK: tuple[int, ...] = (0, 1, 2, 3)

FLIP_MASK_SIZE = 4


def _validate_mask(mask: Iterable[int], dimension: int) -> tuple[int, ...]:
    axes = tuple(sorted(int(a) for a in mask))
    if len(axes) != FLIP_MASK_SIZE or len(set(axes)) != FLIP_MASK_SIZE:
        raise ValueError(f"flip mask needs exactly {FLIP_MASK_SIZE} distinct axes, got {axes}")
    if axes[0] < 0 or axes[-1] >= dimension:
        raise ValueError(f"flip mask {axes} out of range for dimension {dimension}")
    return axes


def _flip(v: Vertex, axes: tuple[int, ...]) -> Vertex:
    w = list(v)
    for a in axes:
        w[a] = 1 - w[a]
    return tuple(w)


def extend_closed_tour(base: Tour, mask: Iterable[int] | None = None) -> Tour:
    """Extend a closed tour on the k-cube to a closed tour on the (k+1)-cube.

    The base must verify as closed on a full 2 x 2 x ... x 2 board with
    k >= 6; the mask, when given, names the four coordinates to flip on the
    mirrored half.  The result is re-verified before being returned and the
    base is never mutated.
    """
    board = base.board
    if board.holes or any(s != 2 for s in board.sides):
        raise ValueError(f"base tour must live on a full 2 x 2 x ... x 2 board, not {board!r}")
    k = board.dimension
    if k < 6:
        raise ValueError(f"no closed tour exists on a {k}-cube; the base needs k >= 6")
    if base.kind is not TourKind.CLOSED:
        raise ValueError(f"base tour must be closed, not {base.kind.value}")
    report = base.report()
    if not report.valid:
        raise ValueError(
            f"base tour fails closed verification: {report.first_violation.description}"
        )
    axes = _validate_mask(DEFAULT_FLIP_MASK if mask is None else mask, k)

    first_half = [v + (0,) for v in base.vertices]
    mirrored = [_flip(v, axes) + (1,) for v in base.vertices]
    mirrored.reverse()
    result = Tour(Board([2] * (k + 1)), TourKind.CLOSED, tuple(first_half + mirrored))
    out = result.report()
    if not out.valid:
        raise RuntimeError(
            f"internal error: extension broke at {out.first_violation.description}"
        )
    return result


def closed_tour_on_hypercube(k: int, masks: Sequence[Iterable[int]] | None = None) -> Tour:
    """Closed tour on the k-cube for any k >= 6.

    k == 6 returns the embedded base tour; larger k iterates the doubling
    step, flipping the default axes (or masks[i] at step i when given,
    len(masks) == k - 6).
    """
    if k < 6:
        raise ValueError(
            f"no knight's tour exists on a 2 x 2 x ... x 2 board of dimension {k}; k must be >= 6"
        )
    if masks is not None and len(masks) != k - 6:
        raise ValueError(f"need {k - 6} masks to reach dimension {k}, got {len(masks)}")
    tour = corpus.get(corpus.PC_2_6).tour()
    for level in range(k - 6):
        tour = extend_closed_tour(tour, None if masks is None else masks[level])
    return tour
