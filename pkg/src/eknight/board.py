"""Boards for the squared-length-5 knight.

A board is a k-dimensional box {0..n1-1} x ... x {0..nk-1} minus an optional
set of removed cells (holes).  Two cells are knight-adjacent exactly when
their squared Euclidean distance is 5, so every predicate here works in plain
integer arithmetic; no floating point appears anywhere.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

Vertex = tuple[int, ...]

KNIGHT_SQUARED_LENGTH = 5


def squared_distance(a: Vertex, b: Vertex) -> int:
    """Squared Euclidean distance between two same-dimension vertices."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)}-tuple vs {len(b)}-tuple")
    return sum((x - y) ** 2 for x, y in zip(a, b))


def taxicab_distance(a: Vertex, b: Vertex) -> int:
    """Sum of absolute coordinate differences."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)}-tuple vs {len(b)}-tuple")
    return sum(abs(x - y) for x, y in zip(a, b))


def is_knight_move(a: Vertex, b: Vertex) -> bool:
    """True iff the squared distance between a and b is exactly 5."""
    return squared_distance(a, b) == KNIGHT_SQUARED_LENGTH


@dataclass(frozen=True)
class Move:
    """An ordered vertex pair with its derived lengths."""

    source: Vertex
    target: Vertex

    @property
    def squared_length(self) -> int:
        return squared_distance(self.source, self.target)

    @property
    def taxicab_length(self) -> int:
        return taxicab_distance(self.source, self.target)

    @property
    def is_knight_move(self) -> bool:
        return self.squared_length == KNIGHT_SQUARED_LENGTH


@lru_cache(maxsize=None)
def _move_offsets(k: int) -> tuple[Vertex, ...]:
    """All k-dimensional coordinate-change vectors whose squares sum to 5."""
    offsets: set[Vertex] = set()
    if k >= 2:
        for i, j in itertools.permutations(range(k), 2):
            for si in (2, -2):
                for sj in (1, -1):
                    d = [0] * k
                    d[i] = si
                    d[j] = sj
                    offsets.add(tuple(d))
    if k >= 5:
        for axes in itertools.combinations(range(k), 5):
            for signs in itertools.product((1, -1), repeat=5):
                d = [0] * k
                for a, s in zip(axes, signs):
                    d[a] = s
                offsets.add(tuple(d))
    return tuple(sorted(offsets))


def format_sides(sides: Iterable[int]) -> str:
    return " x ".join(str(s) for s in sides)


def format_vertex(v: Vertex) -> str:
    return ",".join(str(c) for c in v)


def parse_sides(text: str) -> tuple[int, ...]:
    """Parse a 'n1 x n2 x ... x nk' side list."""
    parts = [p.strip() for p in text.split("x")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed side list {text!r}")
    try:
        sides = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed side list {text!r}") from None
    if any(s < 1 for s in sides):
        raise ValueError(f"sides must be >= 1, got {sides}")
    return sides


def parse_vertex(text: str) -> Vertex:
    """Parse a 'c1,c2,...,ck' coordinate list."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed coordinate list {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed coordinate list {text!r}") from None


class Board:
    """Immutable board: all derived adjacency data is cached and shareable.

    Vertex enumeration and neighbor order are lexicographic on coordinates.
    Every vertex also has a mixed-radix index (first coordinate most
    significant), so lexicographic order and index order coincide; holes keep
    their index, they are just never enumerated or visited.
    """

    __slots__ = ("sides", "holes", "_weights", "_box_size", "_cache")

    def __init__(self, sides: Iterable[int], holes: Iterable[Iterable[int]] = ()) -> None:
        sides = tuple(int(s) for s in sides)
        if not sides:
            raise ValueError("a board needs at least one side")
        if min(sides) < 1:
            raise ValueError(f"sides must be >= 1, got {sides}")
        hole_set = frozenset(tuple(int(c) for c in h) for h in holes)
        for h in hole_set:
            if len(h) != len(sides):
                raise ValueError(
                    f"hole {h} has {len(h)} coordinates, board has {len(sides)}"
                )
            if not all(0 <= c < s for c, s in zip(h, sides)):
                raise ValueError(f"hole {h} lies outside the {format_sides(sides)} box")
        self.sides: tuple[int, ...] = sides
        self.holes: frozenset[Vertex] = hole_set
        weights = [1] * len(sides)
        for i in range(len(sides) - 2, -1, -1):
            weights[i] = weights[i + 1] * sides[i + 1]
        self._weights = tuple(weights)
        self._box_size = weights[0] * sides[0]
        self._cache: dict[str, object] = {}

    def __repr__(self) -> str:
        return f"Board({format_sides(self.sides)}, holes={len(self.holes)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Board):
            return NotImplemented
        return self.sides == other.sides and self.holes == other.holes

    def __hash__(self) -> int:
        return hash((self.sides, self.holes))

    def __getstate__(self):
        return (self.sides, self.holes)

    def __setstate__(self, state) -> None:
        self.__init__(state[0], state[1])

    @property
    def dimension(self) -> int:
        return len(self.sides)

    @property
    def box_size(self) -> int:
        return self._box_size

    @property
    def vertex_count(self) -> int:
        return self._box_size - len(self.holes)

    def in_box(self, v: Vertex) -> bool:
        if len(v) != len(self.sides):
            raise ValueError(
                f"vertex {v} has {len(v)} coordinates, board has {len(self.sides)}"
            )
        return all(0 <= c < s for c, s in zip(v, self.sides))

    def contains(self, v: Vertex) -> bool:
        """True iff v is a playable (non-hole) cell of this board."""
        return self.in_box(v) and v not in self.holes

    def index(self, v: Vertex) -> int:
        """Mixed-radix index of v; defined for every cell of the box."""
        return sum(c * w for c, w in zip(v, self._weights))

    def vertex_at(self, index: int) -> Vertex:
        if not 0 <= index < self._box_size:
            raise ValueError(f"index {index} out of range for {self!r}")
        coords = []
        for w in self._weights:
            c, index = divmod(index, w)
            coords.append(c)
        return tuple(coords)

    def vertices(self) -> Iterator[Vertex]:
        """All non-hole vertices in lexicographic order."""
        for v in itertools.product(*(range(s) for s in self.sides)):
            if v not in self.holes:
                yield v

    def _require_vertex(self, v: Vertex) -> Vertex:
        v = tuple(v)
        if not self.in_box(v):
            raise ValueError(f"vertex {v} lies outside the board")
        if v in self.holes:
            raise ValueError(f"vertex {v} is a removed cell")
        return v

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        """All non-hole knight targets of v, in lexicographic order."""
        v = self._require_vertex(v)
        k = self.dimension
        out = []
        if max(self.sides) <= 2:
            # 0/1 coordinates admit only the five-axis unit moves, and each
            # axis direction is forced, so flip 5-subsets directly.
            if k >= 5:
                for axes in itertools.combinations(range(k), 5):
                    w = list(v)
                    ok = True
                    for a in axes:
                        w[a] = 1 - w[a]
                        if w[a] >= self.sides[a]:
                            ok = False
                            break
                    if ok:
                        t = tuple(w)
                        if t not in self.holes:
                            out.append(t)
        else:
            for off in _move_offsets(k):
                w = tuple(c + d for c, d in zip(v, off))
                if all(0 <= c < s for c, s in zip(w, self.sides)) and w not in self.holes:
                    out.append(w)
        out.sort()
        return tuple(out)

    def adjacency(self) -> dict[Vertex, tuple[Vertex, ...]]:
        """Full adjacency map over non-hole vertices (cached)."""
        adj = self._cache.get("adjacency")
        if adj is None:
            adj = {v: self.neighbors(v) for v in self.vertices()}
            self._cache["adjacency"] = adj
        return adj

    def degree_histogram(self) -> dict[int, int]:
        """Map degree -> number of non-hole vertices with that degree."""
        return dict(sorted(Counter(len(ns) for ns in self.adjacency().values()).items()))

    def is_connected(self) -> bool:
        """True iff the knight graph on non-hole vertices is connected."""
        if self.vertex_count == 0:
            raise ValueError("board has no vertices")
        adj = self.adjacency()
        start = next(iter(self.vertices()))
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def knight_distance(self, a: Vertex, b: Vertex) -> int | None:
        """Minimum number of knight jumps from a to b; None if unreachable."""
        a = self._require_vertex(a)
        b = self._require_vertex(b)
        if a == b:
            return 0
        seen = {a}
        queue = deque([(a, 0)])
        while queue:
            v, d = queue.popleft()
            for w in self.neighbors(v):
                if w == b:
                    return d + 1
                if w not in seen:
                    seen.add(w)
                    queue.append((w, d + 1))
        return None

    def _index_graph(self) -> tuple[list[tuple[int, ...]], list[int], int]:
        """Index-based adjacency for the solver (cached).

        Returns (neighbor index tuples, neighbor bitmasks, bitmask of all
        non-hole indices); lists are indexed by mixed-radix vertex index.
        """
        graph = self._cache.get("index_graph")
        if graph is None:
            nbrs: list[tuple[int, ...]] = [() for _ in range(self._box_size)]
            masks = [0] * self._box_size
            full = 0
            for v, ns in self.adjacency().items():
                i = self.index(v)
                full |= 1 << i
                idx = tuple(self.index(w) for w in ns)
                nbrs[i] = idx
                m = 0
                for j in idx:
                    m |= 1 << j
                masks[i] = m
            graph = (nbrs, masks, full)
            self._cache["index_graph"] = graph
        return graph


def make_board(sides: Iterable[int], holes: Iterable[Iterable[int]] = ()) -> Board:
    """Construct a board; alias for the Board constructor."""
    return Board(sides, holes)


def parse_board_text(text: str) -> Board:
    """Parse a board description: a side header line plus 'hole:' lines.

    Comment lines (leading '#') and blank lines are ignored.
    """
    sides: tuple[int, ...] | None = None
    holes: list[Vertex] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if sides is None:
            try:
                sides = parse_sides(line)
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            continue
        if not line.startswith("hole:"):
            raise ValueError(f"line {lineno}: expected 'hole: c1,c2,...' lines, got {line!r}")
        try:
            hole = parse_vertex(line[len("hole:"):])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if len(hole) != len(sides):
            raise ValueError(
                f"line {lineno}: hole {hole} has {len(hole)} coordinates, board has {len(sides)}"
            )
        if not all(0 <= c < s for c, s in zip(hole, sides)):
            raise ValueError(f"line {lineno}: hole {hole} lies outside the board")
        holes.append(hole)
    if sides is None:
        raise ValueError("board description has no side header line")
    return Board(sides, holes)


def serialize_board_text(board: Board) -> str:
    """Canonical board description text; holes in lexicographic order."""
    lines = [format_sides(board.sides)]
    lines.extend(f"hole: {format_vertex(h)}" for h in sorted(board.holes))
    return "\n".join(lines) + "\n"
