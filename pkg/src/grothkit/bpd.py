"""
Bumpless pipe dreams.

A BPD is an n x n grid of six tiles.  Pipe ``i`` enters at the bottom of
column ``i`` and leaves through the east edge; pipes move only up or right.
When two pipes cross a second time the later crossing counts as a bump, so
every edge-consistent grid traces to a permutation.

Rows are numbered from the top, columns from the left, both 1-based.  Grids
render one character per tile::

    r  SE elbow      j  NW elbow     -  horizontal
    |  vertical      +  crossing     .  empty

>>> from grothkit.perm import Permutation
>>> P = rothe_bpd(Permutation.parse("1342"))
>>> print(P.render())
r---
|.r-
|.|r
|r++
>>> len(enumerate_bpds(Permutation.parse("1342")))
3
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from collections.abc import Iterable
from functools import cached_property

from .perm import Permutation
from .poly import Polynomial, VarSpace

__all__ = [
    "Tile",
    "InvalidGrid",
    "BumplessPipeDream",
    "rothe_bpd",
    "trace_permutation",
    "droops",
    "k_droops",
    "enumerate_bpds",
    "enumerate_bpds_bruteforce",
    "all_bpds",
    "weight_single",
    "weight_double",
    "BRUTEFORCE_MAX_N",
]

log = logging.getLogger(__name__)

BRUTEFORCE_MAX_N = 6


class InvalidGrid(ValueError):
    pass


class Tile(enum.Enum):
    SE = "r"
    NW = "j"
    H = "-"
    V = "|"
    X = "+"
    EMPTY = "."

    @property
    def edges(self) -> tuple[bool, bool, bool, bool]:
        """Pipe presence on the (N, S, E, W) edges."""
        return _EDGES[self]

    @property
    def is_elbow(self) -> bool:
        return self is Tile.SE or self is Tile.NW


_EDGES = {
    Tile.SE: (False, True, True, False),
    Tile.NW: (True, False, False, True),
    Tile.H: (False, False, True, True),
    Tile.V: (True, True, False, False),
    Tile.X: (True, True, True, True),
    Tile.EMPTY: (False, False, False, False),
}
_FROM_EDGES = {v: k for k, v in _EDGES.items()}
_CHARS = {t.value: t for t in Tile}


class BumplessPipeDream:
    """An immutable, edge-consistent tiling; identity is the row strings."""

    def __init__(self, rows: Iterable[str]):
        rows = tuple(rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InvalidGrid("grid must be n x n with n >= 1")
        for r in rows:
            for ch in r:
                if ch not in _CHARS:
                    raise InvalidGrid(f"unknown tile {ch!r}")
        self.n = n
        self.rows = rows
        self._check_edges()

    def _check_edges(self):
        n = self.n
        for r in range(1, n + 1):
            for c in range(1, n + 1):
                north, south, east, west = self.tile(r, c).edges
                if c == 1 and west:
                    raise InvalidGrid(f"pipe enters from the west at row {r}")
                if c == n and not east:
                    raise InvalidGrid(f"no pipe leaves the east edge at row {r}")
                if c < n and east != self.tile(r, c + 1).edges[3]:
                    raise InvalidGrid(f"horizontal edge mismatch at ({r},{c})")
                if r == 1 and north:
                    raise InvalidGrid(f"pipe leaves the north edge at column {c}")
                if r == n and not south:
                    raise InvalidGrid(f"no pipe enters the south edge at column {c}")
                if r < n and south != self.tile(r + 1, c).edges[0]:
                    raise InvalidGrid(f"vertical edge mismatch at ({r},{c})")

    def tile(self, r: int, c: int) -> Tile:
        return _CHARS[self.rows[r - 1][c - 1]]

    def cells(self, kind: Tile) -> list[tuple[int, int]]:
        ch = kind.value
        return [
            (r, c)
            for r, row in enumerate(self.rows, start=1)
            for c, t in enumerate(row, start=1)
            if t == ch
        ]

    def empty_cells(self) -> list[tuple[int, int]]:
        """B(P)."""
        return self.cells(Tile.EMPTY)

    def nw_elbows(self) -> list[tuple[int, int]]:
        """U(P)."""
        return self.cells(Tile.NW)

    @cached_property
    def _routing(self):
        return _route(self)

    @property
    def trace(self) -> Permutation:
        return self._routing[0]

    def crossing_pipes(self, r: int, c: int) -> tuple[int, int, bool] | None:
        """For a crossing tile: (vertical pipe, horizontal pipe, is_bump)."""
        return self._routing[1].get((r, c))

    def pipe_routes(self) -> dict[int, list[tuple[int, int]]]:
        """Cells visited by each pipe, from its south entry to its east exit."""
        return self._routing[2]

    def encoding(self) -> bytes:
        return "".join(self.rows).encode("ascii")

    def render(self) -> str:
        return "\n".join(self.rows)

    def to_json(self) -> dict:
        return {"n": self.n, "rows": list(self.rows)}

    @classmethod
    def from_json(cls, data) -> BumplessPipeDream:
        bpd = cls(data["rows"])
        if bpd.n != data["n"]:
            raise InvalidGrid("n does not match the rows")
        return bpd

    def __eq__(self, other):
        return isinstance(other, BumplessPipeDream) and self.rows == other.rows

    def __lt__(self, other):
        return self.encoding() < other.encoding()

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BumplessPipeDream({'/'.join(self.rows)})"


def _route(P: BumplessPipeDream):
    """Column sweep, bottom to top within a column.

    Tile (r, c) needs its south input from (r+1, c) and its west input from
    (r, c-1), so this order always has both ready.  A pair of pipes meets at
    most once per column, which makes "left to right" a total order on their
    crossings.
    """
    n = P.n
    crossed: set[frozenset[int]] = set()
    crossings: dict[tuple[int, int], tuple[int, int, bool]] = {}
    routes: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, n + 1)}
    west: list[int | None] = [None] * (n + 1)  # per row, pipe on the west edge
    for c in range(1, n + 1):
        east: list[int | None] = [None] * (n + 1)
        below: int | None = c  # pipe c enters from the south
        for r in range(n, 0, -1):
            t = P.tile(r, c)
            w_in = west[r]
            s_in = below
            north_out = east_out = None
            if t is Tile.EMPTY:
                pass
            elif t is Tile.SE:
                east_out = s_in
            elif t is Tile.NW:
                north_out = w_in
            elif t is Tile.H:
                east_out = w_in
            elif t is Tile.V:
                north_out = s_in
            else:
                pair = frozenset((s_in, w_in))
                bump = pair in crossed
                if bump:
                    east_out, north_out = s_in, w_in
                else:
                    crossed.add(pair)
                    north_out, east_out = s_in, w_in
                crossings[(r, c)] = (s_in, w_in, bump)
            for p in {s_in, w_in} - {None}:
                routes[p].append((r, c))
            east[r] = east_out
            below = north_out
        if below is not None:
            raise InvalidGrid(f"pipe {below} leaves through the north edge")
        west = east
    exits = west[1:]
    if None in exits or sorted(exits) != list(range(1, n + 1)):
        raise InvalidGrid(f"routing is not a bijection: {exits}")
    return Permutation(exits), crossings, routes


def trace_permutation(rows: Iterable[str]) -> Permutation:
    """The permutation w such that pipe i exits in row w^{-1}(i)."""
    return BumplessPipeDream(rows).trace


def rothe_bpd(w: Permutation) -> BumplessPipeDream:
    """Hook from each dot (i, w(i)): right along row i, down column w(i)."""
    n = w.n
    rows = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            horizontal = c > w(r)
            vertical = w.inv(c) < r
            if c == w(r):
                row.append(Tile.SE.value)
            elif horizontal and vertical:
                row.append(Tile.X.value)
            elif horizontal:
                row.append(Tile.H.value)
            elif vertical:
                row.append(Tile.V.value)
            else:
                row.append(Tile.EMPTY.value)
        rows.append("".join(row))
    return BumplessPipeDream(rows)


# -- moves ------------------------------------------------------------------


class _Edges:
    """Mutable edge occupancy used while applying a move."""

    def __init__(self, P: BumplessPipeDream):
        n = self.n = P.n
        # h[r][c]: edge between (r, c) and (r, c+1), c = 0..n
        # v[r][c]: edge between (r, c) and (r+1, c), r = 0..n
        self.h = [[False] * (n + 1) for _ in range(n + 1)]
        self.v = [[False] * (n + 1) for _ in range(n + 1)]
        for r in range(1, n + 1):
            for c in range(1, n + 1):
                north, south, east, _ = P.tile(r, c).edges
                self.h[r][c] = east
                self.v[r][c] = south
                if north:
                    self.v[r - 1][c] = True

    def toggle_h(self, r, c, value):
        if self.h[r][c] == value:
            raise InvalidGrid(f"horizontal edge ({r},{c}) already {value}")
        self.h[r][c] = value

    def toggle_v(self, r, c, value):
        if self.v[r][c] == value:
            raise InvalidGrid(f"vertical edge ({r},{c}) already {value}")
        self.v[r][c] = value

    def to_bpd(self) -> BumplessPipeDream:
        n = self.n
        rows = []
        for r in range(1, n + 1):
            row = []
            for c in range(1, n + 1):
                sig = (self.v[r - 1][c], self.v[r][c], self.h[r][c], self.h[r][c - 1])
                try:
                    row.append(_FROM_EDGES[sig].value)
                except KeyError:
                    raise InvalidGrid(f"no tile has edge signature {sig} at ({r},{c})") from None
            rows.append("".join(row))
        return BumplessPipeDream(rows)


def _drop_pipe(P: BumplessPipeDream, r1: int, c1: int, a: int, b: int) -> BumplessPipeDream:
    """Move the pipe bent at (r1, c1) onto the lower-right rim of [r1, a] x [c1, b]."""
    E = _Edges(P)
    for c in range(c1, b):
        E.toggle_h(r1, c, False)
        E.toggle_h(a, c, True)
    for r in range(r1, a):
        E.toggle_v(r, c1, False)
        E.toggle_v(r, b, True)
    return E.to_bpd()


class _ElbowCounts:
    """2D prefix sums of elbow tiles for O(1) rectangle queries."""

    def __init__(self, P: BumplessPipeDream):
        n = P.n
        s = [[0] * (n + 1) for _ in range(n + 1)]
        for r in range(1, n + 1):
            for c in range(1, n + 1):
                s[r][c] = s[r - 1][c] + s[r][c - 1] - s[r - 1][c - 1] + P.tile(r, c).is_elbow
        self.s = s

    def count(self, r1, c1, r2, c2) -> int:
        s = self.s
        return s[r2][c2] - s[r1 - 1][c2] - s[r2][c1 - 1] + s[r1 - 1][c1 - 1]


def _accept(P: BumplessPipeDream, Q: BumplessPipeDream, what: str) -> bool:
    if Q.trace != P.trace:
        # the rectangle moved a crossing past another crossing of the same pair
        log.debug("%s of %s changes the trace; skipped", what, P)
        return False
    return True


def droops(P: BumplessPipeDream) -> list[BumplessPipeDream]:
    """Every grid reachable from P by one permissible droop."""
    n = P.n
    counts = _ElbowCounts(P)
    out = []
    for r1, c1 in P.cells(Tile.SE):
        for a in range(r1 + 1, n + 1):
            for b in range(c1 + 1, n + 1):
                if P.tile(a, b) is not Tile.EMPTY:
                    continue
                if counts.count(r1, c1, a, b) != 1:
                    continue
                Q = _drop_pipe(P, r1, c1, a, b)
                if _accept(P, Q, "droop"):
                    out.append(Q)
    return sorted(out)


def _k_droop_target_ok(P: BumplessPipeDream, counts: _ElbowCounts, r1, c1, a, b) -> bool:
    """Check the two configurations of a K-theoretic droop into the SE elbow (a, b).

    The pipe j bent at (a, b) must close a rectangle with pipe i (bent at
    (r1, c1)) through an NW elbow, crossing i once at its NE or SW corner.
    """
    n = P.n
    i_pipe = None
    # pipe i runs right along row r1 and down column c1 in both shapes
    # NE-corner shape: j goes right from (a, b) to an NW elbow at (a, c2),
    # then up column c2 to cross i at (r1, c2).
    for c2 in range(b + 1, n + 1):
        t = P.tile(a, c2)
        if t is Tile.NW:
            if counts.count(r1, c1, a, c2) != 3:
                break
            info = P.crossing_pipes(r1, c2)
            if P.tile(r1, c2) is Tile.X and info and not info[2]:
                j_pipe, i_pipe = info[0], info[1]
                if _pipe_at(P, a, b) == j_pipe and _pipe_at(P, r1, c1) == i_pipe:
                    return True
            break
        if t not in (Tile.H, Tile.X):
            break
    # SW-corner shape: j comes up column b from an NW elbow at (r2, b),
    # having entered row r2 from the west across i at (r2, c1).
    for r2 in range(a + 1, n + 1):
        t = P.tile(r2, b)
        if t is Tile.NW:
            if counts.count(r1, c1, r2, b) != 3:
                break
            info = P.crossing_pipes(r2, c1)
            if P.tile(r2, c1) is Tile.X and info and not info[2]:
                i_pipe, j_pipe = info[0], info[1]
                if _pipe_at(P, a, b) == j_pipe and _pipe_at(P, r1, c1) == i_pipe:
                    return True
            break
        if t not in (Tile.V, Tile.X):
            break
    return False


def _pipe_at(P: BumplessPipeDream, r: int, c: int) -> int:
    """Label of the pipe occupying an elbow tile."""
    for pipe, cells in P.pipe_routes().items():
        if (r, c) in cells:
            return pipe
    raise InvalidGrid(f"no pipe through ({r},{c})")


def k_droops(P: BumplessPipeDream) -> list[BumplessPipeDream]:
    """Every grid reachable from P by one permissible K-theoretic droop."""
    n = P.n
    if not P.cells(Tile.NW):
        return []
    counts = _ElbowCounts(P)
    out = []
    for r1, c1 in P.cells(Tile.SE):
        for a in range(r1 + 1, n + 1):
            for b in range(c1 + 1, n + 1):
                if P.tile(a, b) is not Tile.SE:
                    continue
                # only the two corner elbows inside [r1, a] x [c1, b]
                if counts.count(r1, c1, a, b) != 2:
                    continue
                if not _k_droop_target_ok(P, counts, r1, c1, a, b):
                    continue
                Q = _drop_pipe(P, r1, c1, a, b)
                if _accept(P, Q, "K-droop"):
                    out.append(Q)
    return sorted(out)


def enumerate_bpds(w: Permutation) -> frozenset[BumplessPipeDream]:
    """Closure of the Rothe pipe dream under droops and K-theoretic droops."""
    start = rothe_bpd(w)
    seen = {start}
    queue = deque([start])
    while queue:
        P = queue.popleft()
        for Q in droops(P) + k_droops(P):
            if Q not in seen:
                seen.add(Q)
                queue.append(Q)
    return frozenset(seen)


def reduced_bpds(w: Permutation) -> frozenset[BumplessPipeDream]:
    """Closure under plain droops only: the pipe dreams with exactly l(w) empty tiles."""
    start = rothe_bpd(w)
    seen = {start}
    queue = deque([start])
    while queue:
        for Q in droops(queue.popleft()):
            if Q not in seen:
                seen.add(Q)
                queue.append(Q)
    return frozenset(seen)


# -- brute force oracle -------------------------------------------------------

_ALL_CACHE: dict[int, dict[Permutation, frozenset[BumplessPipeDream]]] = {}


def _all_grids(n: int) -> list[BumplessPipeDream]:
    """Every edge-consistent n x n grid, by column transfer over edge states."""
    grids = []
    columns: list[list[str]] = []  # column strings, top to bottom

    def fill_column(west: tuple[bool, ...]):
        # choose tiles bottom to top; yields (column string, east occupancy)
        result = []

        def rec(r: int, south: bool, acc: list[str], east: list[bool]):
            if r == 0:
                if not south:
                    result.append(("".join(reversed(acc)), tuple(reversed(east))))
                return
            w_in = west[r - 1]
            for t, (north, s, e, wst) in _EDGES.items():
                if s != south or wst != w_in:
                    continue
                acc.append(t.value)
                east.append(e)
                rec(r - 1, north, acc, east)
                acc.pop()
                east.pop()

        rec(n, True, [], [])
        return result

    def rec_col(c: int, west: tuple[bool, ...]):
        if c > n:
            if all(west):
                rows = ["".join(col[r] for col in columns) for r in range(n)]
                grids.append(BumplessPipeDream(rows))
            return
        # remaining columns can add at most one pipe each to the east flow
        if sum(west) + (n - c + 1) < n:
            return
        for col, east in fill_column(west):
            columns.append(col)
            rec_col(c + 1, east)
            columns.pop()

    rec_col(1, (False,) * n)
    return grids


def all_bpds(n: int) -> dict[Permutation, frozenset[BumplessPipeDream]]:
    """Every valid n x n grid, grouped by trace."""
    if n > BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force enumeration is capped at n = {BRUTEFORCE_MAX_N}")
    if n not in _ALL_CACHE:
        groups: dict[Permutation, set] = {}
        for P in _all_grids(n):
            groups.setdefault(P.trace, set()).add(P)
        _ALL_CACHE[n] = {w: frozenset(s) for w, s in groups.items()}
    return _ALL_CACHE[n]


def enumerate_bpds_bruteforce(w: Permutation) -> frozenset[BumplessPipeDream]:
    return all_bpds(w.n).get(w, frozenset())


# -- weights ------------------------------------------------------------------


def weight_single(P: BumplessPipeDream, space: VarSpace | None = None) -> Polynomial:
    """prod_{B(P)} x_i * prod_{U(P)} (1 - x_p)."""
    space = space or VarSpace(P.n)
    alpha = [0] * space.nvars
    for r, _ in P.empty_cells():
        alpha[space.x_index(r)] += 1
    f = Polynomial.monomial(space, alpha)
    for p, _ in P.nw_elbows():
        f = f - f * space.x(p)
    return f


def weight_double(P: BumplessPipeDream, space: VarSpace | None = None) -> Polynomial:
    """prod_{B(P)} (x_i + y_j - x_i y_j) * prod_{U(P)} (1 - x_p - y_q + x_p y_q)."""
    space = space or VarSpace(P.n, P.n)
    f = Polynomial.constant(space, 1)
    for i, j in P.empty_cells():
        x, y = space.x(i), space.y(j)
        f = f * (x + y - x * y)
    for p, q in P.nw_elbows():
        x, y = space.x(p), space.y(q)
        f = f * (1 - x - y + x * y)
    return f
