"""
Half-aztec diamonds, their domino tilings and Schröder paths.

Square (X, Y) is the unit square [X-1, X] x [Y, Y+1]. Row Y of the order-n
half-aztec diamond holds squares Y+1 .. 2n-Y. Entry (i, j) of the symbolic
matrix (lower face convention) is the sum over domino tilings of the region
with bottom squares 2i-1 and 2j removed, where for i > j the outer layer of
squares is stripped first.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ..core.config import settings
from ..core.exceptions import BoundExceeded, CalibrationError, InvalidInput
from .laurent import LaurentPoly, face_name, symbolic_reconstruct, vertex_name
from .minors import FaceConvention
from .tilings import interval

logger = logging.getLogger(__name__)

Square = Tuple[int, int]
Point = Tuple[int, int]
Domino = Tuple[Square, Square]


@dataclass(frozen=True)
class HalfAztec:
    n: int
    squares: FrozenSet[Square]
    removed: Tuple[int, int]
    inner: bool = False

    def rows(self) -> Dict[int, List[int]]:
        by_row: Dict[int, List[int]] = {}
        for x, y in sorted(self.squares, key=lambda s: (s[1], s[0])):
            by_row.setdefault(y, []).append(x)
        return by_row


def half_aztec(n: int, i: int, j: int) -> HalfAztec:
    """Region for entry (i, j): squares 2i-1 and 2j removed from the bottom row"""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
    inner = i > j
    margin = 1 if inner else 0
    squares = {(x, y) for y in range(n) for x in range(y + 1 + margin, 2 * n - y - margin + 1)}
    squares -= {(2 * i - 1, 0), (2 * j, 0)}
    return HalfAztec(n, frozenset(squares), (2 * i - 1, 2 * j), inner)


@dataclass(frozen=True)
class DominoTiling:
    dominoes: Tuple[Domino, ...]

    def covered(self) -> FrozenSet[Square]:
        return frozenset(s for d in self.dominoes for s in d)

    def long_side_midpoints(self) -> Counter:
        """How many dominoes have each lattice point as the midpoint of a long side"""
        counts: Counter = Counter()
        for (x, y), (_, y2) in self.dominoes:
            if y == y2:
                counts[(x, y)] += 1
                counts[(x, y + 1)] += 1
            else:
                counts[(x - 1, y + 1)] += 1
                counts[(x, y + 1)] += 1
        return counts


def forced_horizontal(region: HalfAztec) -> Tuple[Domino, ...]:
    """Dominoes every tiling places beyond the diagonal through the right removed square.

    With r the larger removed index, each square (X, Y) with X + Y > r and
    X + Y - r odd pairs with its right neighbour.
    """
    r = max(region.removed)
    return tuple(
        ((x, y), (x + 1, y))
        for x, y in sorted(region.squares, key=lambda s: (s[1], s[0]))
        if x + y > r and (x + y - r) % 2 == 1
    )


def _cover_row(y: int, free: Tuple[int, ...], above: FrozenSet[int]) -> Iterator[Tuple[Tuple[Domino, ...], FrozenSet[int]]]:
    """Ways to cover the free squares of row y, with the columns raised into row y + 1"""
    if not free:
        yield (), frozenset()
        return
    x, rest = free[0], free[1:]
    if rest and rest[0] == x + 1:
        for dominoes, raised in _cover_row(y, rest[1:], above):
            yield (((x, y), (x + 1, y)),) + dominoes, raised
    if x in above:
        for dominoes, raised in _cover_row(y, rest, above):
            yield (((x, y), (x, y + 1)),) + dominoes, raised | {x}


def row_transfer(squares: FrozenSet[Square]) -> List[Tuple[Domino, ...]]:
    """Domino tilings of a set of squares, row by row from the bottom"""
    if not squares:
        return [()]
    by_row: Dict[int, FrozenSet[int]] = {}
    for x, y in squares:
        by_row[y] = by_row.get(y, frozenset()) | {x}
    top = max(by_row)

    @lru_cache(maxsize=None)
    def fill(y: int, pending: FrozenSet[int]) -> Tuple[Tuple[Domino, ...], ...]:
        if y > top:
            return ((),) if not pending else ()
        free = tuple(sorted(by_row.get(y, frozenset()) - pending))
        found = []
        for dominoes, raised in _cover_row(y, free, by_row.get(y + 1, frozenset())):
            found.extend(dominoes + rest for rest in fill(y + 1, raised))
        return tuple(found)

    return list(fill(min(by_row), frozenset()))


def enumerate_half_aztec(n: int, i: int, j: int, prune: bool = True) -> List[DominoTiling]:
    """Every domino tiling of the region by row transfer, with forced dominoes placed up front when pruning"""
    region = half_aztec(n, i, j)
    forced = forced_horizontal(region) if prune else ()
    remaining = region.squares - frozenset(s for d in forced for s in d)
    tilings = [DominoTiling(forced + rest) for rest in row_transfer(remaining)]
    logger.debug(f"Half-aztec n={n} entry ({i},{j}): {len(tilings)} tilings, {len(forced)} forced dominoes")
    return tilings


def placement(n: int, inner: bool = False) -> Dict[Point, str]:
    """Lattice point -> standard-network variable.

    Point (X, Y) sits at level k = Y, position u = X + 1 of the level-ordered
    variables: a vertex when X + Y is even, a face when odd.
    """
    points = {}
    margin = 1 if inner else 0
    for y in range(1, n + 1 - margin):
        for x in range(y + margin, 2 * n - y - margin + 1):
            u = x + 1
            if (u - y) % 2:
                r = (u - y + 1) // 2
                points[(x, y)] = vertex_name(interval(r, r + y - 1))
            else:
                c = (u - y) // 2
                points[(x, y)] = face_name(c, c + y)
    return points


def monomial_weight(t: DominoTiling, points: Dict[Point, str]) -> LaurentPoly:
    """Product of variable^(1 - m) over placed points, m = long-side midpoint count.

    A point outside the placement must carry exactly one long side.
    """
    counts = t.long_side_midpoints()
    for point, m in sorted(counts.items()):
        if point not in points and m != 1:
            raise InvalidInput(f"lattice point {point} has no variable but {m} long sides meet there")
    powers = {name: 1 - counts.get(point, 0) for point, name in points.items()}
    return LaurentPoly.monomial(powers)


def half_aztec_entry(n: int, i: int, j: int) -> LaurentPoly:
    points = placement(n, inner=i > j)
    total = LaurentPoly()
    for t in enumerate_half_aztec(n, i, j):
        total = total + monomial_weight(t, points)
    return total


def check_calibration(n: int = 4, entries: Optional[List[Tuple[int, int]]] = None) -> None:
    """Raise CalibrationError unless the tiling sums reproduce the symbolic matrix"""
    symbolic = symbolic_reconstruct(n, FaceConvention.LOWER)
    cells = entries or [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for i, j in cells:
        expected = symbolic.entry(i, j)
        found = half_aztec_entry(n, i, j)
        if found != expected:
            logger.error(f"Half-aztec placement disagrees at ({i},{j}): {found} vs {expected}")
            raise CalibrationError(f"half-aztec sum for entry ({i},{j}) is {found}, expected {expected}")
    logger.info(f"Half-aztec placement agrees with symbolic reconstruction on {len(cells)} entries (n={n})")


Step = Tuple[int, int]
EAST, NORTH, DIAGONAL = (1, 0), (0, 1), (1, 1)


def schroder_paths(n: int) -> Iterator[Tuple[Step, ...]]:
    """Lattice paths (0,0) -> (n,n) with steps E, NE, N that never rise above the diagonal, generated lazily"""
    if n > settings.SCHRODER_MAX_N:
        raise BoundExceeded(f"n={n} exceeds SCHRODER_MAX_N={settings.SCHRODER_MAX_N}")

    def walk(x: int, y: int, prefix: Tuple[Step, ...]) -> Iterator[Tuple[Step, ...]]:
        if (x, y) == (n, n):
            yield prefix
            return
        for step in (EAST, DIAGONAL, NORTH):
            x2, y2 = x + step[0], y + step[1]
            if x2 <= n and y2 <= x2:
                yield from walk(x2, y2, prefix + (step,))

    return walk(0, 0, ())


def schroder_number(n: int) -> int:
    """Large Schröder number by counting paths point by point"""
    counts = {(0, 0): 1}
    for x in range(n + 1):
        for y in range(x + 1):
            if (x, y) != (0, 0):
                counts[(x, y)] = counts.get((x - 1, y), 0) + counts.get((x - 1, y - 1), 0) + counts.get((x, y - 1), 0)
    return counts[(n, n)]
