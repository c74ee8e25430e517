"""Square-tiled surfaces subdivided into grids, with curves drawn on the grid.

A square-tiled surface is given by two permutations of its squares: ``right``
(the square glued to the right side) and ``up`` (the square glued on top).
Subdividing each square into ``k x k`` cells gives another square-tiled
surface whose cell edges form a combinatorial map.  Curves are drawn as
closed lattice paths; a position on the grid is named by the cell whose
bottom-left corner it is.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import AUX, CombinatorialMap, Configuration, FIRST, SECOND


def _inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


@dataclass(frozen=True)
class Origami:
    right: tuple[int, ...]
    up: tuple[int, ...]

    def __post_init__(self):
        n = len(self.right)
        if sorted(self.right) != list(range(n)) or sorted(self.up) != list(range(n)):
            raise ValueError("right/up must be permutations of the squares")

    @property
    def size(self) -> int:
        return len(self.right)

    def rows(self) -> list[tuple[int, ...]]:
        """Cycles of ``right``, each a horizontal strip of squares."""
        return _cycles(self.right)

    def columns(self) -> list[tuple[int, ...]]:
        return _cycles(self.up)


def _cycles(perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for s in range(len(perm)):
        if s in seen:
            continue
        cyc = []
        x = s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


class Grid:
    """The ``k``-fold subdivision of an origami as a combinatorial map.

    Cell ``(square, i, j)`` has column ``i`` and row ``j`` inside its square.
    Edge ``2c`` is the bottom side of cell ``c`` and edge ``2c + 1`` its left
    side; dart ``2e`` points east/north along edge ``e`` and ``2e + 1`` back.
    """

    def __init__(self, origami: Origami, k: int):
        self.origami = origami
        self.k = k
        n = origami.size * k * k
        self.cell_count = n
        r = [0] * n
        u = [0] * n
        for c in range(n):
            sq, i, j = self.unpack(c)
            r[c] = self.cell(sq, i + 1, j) if i < k - 1 else self.cell(origami.right[sq], 0, j)
            u[c] = self.cell(sq, i, j + 1) if j < k - 1 else self.cell(origami.up[sq], i, 0)
        self.r, self.u = r, u
        self.r_inv, self.u_inv = _inverse(r), _inverse(u)

        nd = 4 * n
        twin = [d ^ 1 for d in range(nd)]
        nxt = [-1] * nd
        for c in range(n):
            nxt[self.h_dart(c, False)] = self.v_dart(r[c], True)
            nxt[self.v_dart(r[c], False)] = self.h_dart(u[c], False)
            nxt[self.h_dart(u[c], True)] = self.v_dart(c, False)
            nxt[self.v_dart(c, True)] = self.h_dart(c, True)
        self.map = CombinatorialMap(twin, nxt)

    def cell(self, square: int, i: int, j: int) -> int:
        return (square * self.k + j) * self.k + i

    def unpack(self, c: int) -> tuple[int, int, int]:
        square, rest = divmod(c, self.k * self.k)
        j, i = divmod(rest, self.k)
        return square, i, j

    @staticmethod
    def h_dart(c: int, east: bool) -> int:
        return 4 * c + (0 if east else 1)

    @staticmethod
    def v_dart(c: int, north: bool) -> int:
        return 4 * c + (2 if north else 3)

    def step(self, c: int, move: str) -> tuple[int, int]:
        """Dart traversed and new position for a move ``E``/``N``/``W``/``S``."""
        if move == "E":
            return self.h_dart(c, True), self.r[c]
        if move == "N":
            return self.v_dart(c, True), self.u[c]
        if move == "W":
            w = self.r_inv[c]
            return self.h_dart(w, False), w
        if move == "S":
            s = self.u_inv[c]
            return self.v_dart(s, False), s
        raise ValueError(move)

    def walk(self, start: int, moves: str) -> list[int]:
        """Darts of a closed lattice path; raises if it does not close up."""
        darts = []
        c = start
        for m in moves:
            d, c = self.step(c, m)
            darts.append(d)
        if c != start:
            raise ValueError("lattice path does not close up")
        if len({d // 2 for d in darts}) != len(darts):
            raise ValueError("lattice path reuses an edge")
        return darts

    def horizontal_line(self, square: int, j: int) -> list[int]:
        """East-pointing darts of the closed horizontal line at row ``j`` of a strip."""
        row = next(r for r in self.origami.rows() if square in r)
        return self.walk(self.cell(square, 0, j), "E" * (len(row) * self.k))

    def configuration(self, first, second, extra=()) -> Configuration:
        """Configuration on the full grid map; ``extra`` darts only fix orientations."""
        cmap = self.map
        owner = [AUX] * cmap.edge_count
        forward = [a for a, _ in cmap.edge_darts]
        for label, darts in ((FIRST, first), (SECOND, second), (AUX, extra)):
            for d in darts:
                e = cmap.edge_of[d]
                if owner[e] != AUX:
                    raise ValueError(f"edge {e} used by two curves")
                if label != AUX:
                    owner[e] = label
                forward[e] = d
        return Configuration(cmap, owner, forward)


def column_curve_moves(grid: Grid, column: tuple[int, ...], start: int,
                       spirals: dict[int, tuple[str, list[int]]],
                       base_row: int = 1) -> str:
    """Moves for a curve running up a column of squares, spiralling in some rows.

    The curve starts at fine column ``start`` of the first square and climbs.
    ``spirals`` maps a square of the column to ``(direction, stops)``: after
    ``base_row`` steps up, the curve runs ``E`` or ``W`` along the square's
    strip to each stop in turn, climbing one row at every stop.  Stops are
    columns measured eastwards from the left side of the square, modulo the
    strip's circumference; the last stop must lie inside the square.
    """
    k = grid.k
    rows = {sq: len(r) for r in grid.origami.rows() for sq in r}
    moves = []
    cur = start
    for sq in column:
        plan = spirals.get(sq)
        if plan is None:
            moves.append("N" * k)
            continue
        direction, stops = plan
        if base_row + len(stops) > k - 1:
            raise ValueError("grid too coarse for this spiral")
        circ = rows[sq] * k
        moves.append("N" * base_row)
        for stop in stops:
            dist = (stop - cur) % circ if direction == "E" else (cur - stop) % circ
            moves.append(direction * (dist or circ) + "N")
            cur = stop
        if not 0 <= cur < k:
            raise ValueError("spiral must end inside the column square")
        moves.append("N" * (k - base_row - len(stops)))
    if cur != start:
        raise ValueError("curve does not return to its starting column")
    return "".join(moves)
