"""
Rhombus tilings of the regular 2n-gon.

A tiling is stored combinatorially: one tile per pair {i, j}, anchored at a
base subset S, covering the vertices S, S+i, S+j, S+ij. Geometry is checked
with exact edge sides and vertex angles measured in units of pi/n.
"""
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ..core.config import settings
from ..core.exceptions import BoundExceeded, InvalidTiling, NotFlippable

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Pair = Tuple[int, int]


def subset(*elements: int) -> Subset:
    return frozenset(elements)


def bitmask(s: Iterable[int]) -> int:
    return sum(1 << (m - 1) for m in s)


def subset_key(s: Subset) -> Tuple[int, Tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


def format_subset(s: Iterable[int]) -> str:
    return "{" + ",".join(str(m) for m in sorted(s)) + "}"


def parse_subset(text: str) -> Subset:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"subset must be written as {{...}}: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(int(part) for part in body.split(","))


def interval(lo: int, hi: int) -> Subset:
    """{lo, ..., hi}; empty when hi < lo"""
    return frozenset(range(lo, hi + 1))


@dataclass(frozen=True)
class Tile:
    i: int
    j: int
    base: Subset

    @property
    def pair(self) -> Pair:
        return (self.i, self.j)

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.i, self.j, bitmask(self.base))

    def vertices(self) -> Tuple[Subset, Subset, Subset, Subset]:
        """Corners in cyclic order: base, base+i, base+ij, base+j"""
        s = self.base
        return (s, s | {self.i}, s | {self.i, self.j}, s | {self.j})

    def __str__(self) -> str:
        return f"R{self.i}{self.j}@{format_subset(self.base)}"


@dataclass(frozen=True)
class Tiling:
    n: int
    tiles: Tuple[Tile, ...]

    @classmethod
    def from_tiles(cls, n: int, tiles: Iterable[Tile]) -> "Tiling":
        return cls(n, tuple(sorted(tiles, key=lambda t: t.key)))

    @classmethod
    def from_bases(cls, n: int, bases: Dict[Pair, Subset]) -> "Tiling":
        return cls.from_tiles(n, (Tile(i, j, frozenset(b)) for (i, j), b in bases.items()))

    @property
    def key(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple(t.key for t in self.tiles)

    def bases(self) -> Dict[Pair, Subset]:
        return {t.pair: t.base for t in self.tiles}

    def tile(self, i: int, j: int) -> Tile:
        for t in self.tiles:
            if t.pair == (i, j):
                return t
        raise KeyError(f"no tile for pair {{{i},{j}}}")

    def vertices(self) -> List[Subset]:
        found = {v for t in self.tiles for v in t.vertices()}
        return sorted(found, key=subset_key)

    def edges(self) -> set:
        """Edges as (lower endpoint, direction)"""
        result = set()
        for t in self.tiles:
            s = t.base
            result.update({(s, t.i), (s | {t.j}, t.i), (s, t.j), (s | {t.i}, t.j)})
        return result


class ViolationKind(str, Enum):
    BAD_TILE = "bad_tile"
    DUPLICATE_PAIR = "duplicate_pair"
    MISSING_PAIR = "missing_pair"
    DANGLING_EDGE = "dangling_edge"
    OVERLAP = "overlap"
    GAP = "gap"
    ANGLE = "angle"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str


class Orientation(str, Enum):
    VALLEY = "valley"
    PEAK = "peak"


@dataclass(frozen=True)
class Hexagon:
    """Three tiles R_pq, R_pr, R_qr filling the projection of the cube S + {p,q,r}"""

    p: int
    q: int
    r: int
    base: Subset
    orientation: Orientation

    @property
    def key(self) -> Tuple[int, int, int, int, str]:
        return (self.p, self.q, self.r, bitmask(self.base), self.orientation.value)

    def bases(self, orientation: Optional[Orientation] = None) -> Dict[Pair, Subset]:
        o = orientation or self.orientation
        s, p, q, r = self.base, self.p, self.q, self.r
        if o == Orientation.VALLEY:
            return {(p, q): s, (q, r): s, (p, r): s | {q}}
        return {(p, q): s | {r}, (q, r): s | {p}, (p, r): s}

    def tiles(self) -> Tuple[Tile, ...]:
        return tuple(Tile(i, j, b) for (i, j), b in sorted(self.bases().items()))

    @property
    def center(self) -> Subset:
        if self.orientation == Orientation.VALLEY:
            return self.base | {self.q}
        return self.base | {self.p, self.r}

    def mirrored(self) -> "Hexagon":
        other = Orientation.PEAK if self.orientation == Orientation.VALLEY else Orientation.VALLEY
        return Hexagon(self.p, self.q, self.r, self.base, other)

    def __str__(self) -> str:
        return f"hex({self.p},{self.q},{self.r})@{format_subset(self.base)}:{self.orientation.value}"


def standard_tiling(n: int) -> Tiling:
    """T_0: tile R_ij anchored at {i+1, ..., j-1}; vertices are the consecutive subsets"""
    if n < 2:
        raise ValueError(f"standard tiling needs n >= 2, got {n}")
    return Tiling.from_tiles(n, (Tile(i, j, interval(i + 1, j - 1)) for i, j in combinations(range(1, n + 1), 2)))


def boundary_vertices(n: int) -> set:
    prefixes = {interval(1, m) for m in range(n + 1)}
    suffixes = {interval(m, n) for m in range(1, n + 2)}
    return prefixes | suffixes


def validate(t: Tiling) -> List[Violation]:
    """All violated tiling invariants; an empty list means the tiling is valid"""
    n = t.n
    violations: List[Violation] = []
    if n < 2:
        return [Violation(ViolationKind.BAD_TILE, f"rank {n} is below 2")]

    full = interval(1, n)
    seen: Dict[Pair, int] = defaultdict(int)
    for tile in t.tiles:
        if not (1 <= tile.i < tile.j <= n) or not tile.base <= full or tile.base & {tile.i, tile.j}:
            violations.append(Violation(ViolationKind.BAD_TILE, f"tile {tile} is malformed"))
            continue
        seen[tile.pair] += 1
    for pair, count in sorted(seen.items()):
        if count > 1:
            violations.append(Violation(ViolationKind.DUPLICATE_PAIR, f"duplicate pair {format_subset(pair)}"))
    for pair in combinations(range(1, n + 1), 2):
        if pair not in seen:
            violations.append(Violation(ViolationKind.MISSING_PAIR, f"pair {format_subset(pair)} missing"))
    if violations:
        return violations

    # The tile lies left of a directed edge e_m when its other direction is larger than m
    sides: Dict[Tuple[Subset, int], List[int]] = defaultdict(lambda: [0, 0])
    for tile in t.tiles:
        s, i, j = tile.base, tile.i, tile.j
        sides[(s, i)][0] += 1
        sides[(s | {j}, i)][1] += 1
        sides[(s, j)][1] += 1
        sides[(s | {i}, j)][0] += 1

    left_boundary = {(interval(1, m - 1), m) for m in range(1, n + 1)}
    right_boundary = {(interval(m + 1, n), m) for m in range(1, n + 1)}
    for edge in sorted(left_boundary | right_boundary, key=lambda e: (subset_key(e[0]), e[1])):
        if edge not in sides:
            violations.append(Violation(ViolationKind.GAP, f"boundary edge {format_subset(edge[0])}+e{edge[1]} uncovered"))
    for (s, m), (left, right) in sorted(sides.items(), key=lambda kv: (subset_key(kv[0][0]), kv[0][1])):
        label = f"{format_subset(s)}+e{m}"
        if (s, m) in left_boundary:
            expected = (1, 0)
        elif (s, m) in right_boundary:
            expected = (0, 1)
        else:
            expected = (1, 1)
        if (left, right) == expected:
            continue
        if left > expected[0] or right > expected[1]:
            violations.append(Violation(ViolationKind.OVERLAP, f"edge {label} covered {left}/{right} times"))
        else:
            violations.append(Violation(ViolationKind.DANGLING_EDGE, f"edge {label} has a free side"))

    angles: Dict[Subset, int] = defaultdict(int)
    for tile in t.tiles:
        acute = tile.j - tile.i
        base, with_i, top, with_j = tile.vertices()
        angles[base] += acute
        angles[top] += acute
        angles[with_i] += n - acute
        angles[with_j] += n - acute
    on_boundary = boundary_vertices(n)
    for v in sorted(angles, key=subset_key):
        expected = n - 1 if v in on_boundary else 2 * n
        if angles[v] != expected:
            violations.append(Violation(ViolationKind.ANGLE, f"vertex {format_subset(v)} has angle {angles[v]}pi/{n}"))
    return violations


def is_valid(t: Tiling) -> bool:
    return not validate(t)


def find_hexagons(t: Tiling) -> List[Hexagon]:
    """Flippable triples, sorted by (p, q, r)"""
    bases = t.bases()
    found = []
    for p, q, r in combinations(range(1, t.n + 1), 3):
        b_pq, b_qr, b_pr = bases.get((p, q)), bases.get((q, r)), bases.get((p, r))
        if b_pq is None or b_qr is None or b_pr is None:
            continue
        if b_pq == b_qr and b_pr == b_pq | {q}:
            found.append(Hexagon(p, q, r, b_pq, Orientation.VALLEY))
        elif b_pr | {r} == b_pq and b_pr | {p} == b_qr and not b_pr & {p, q, r}:
            found.append(Hexagon(p, q, r, b_pr, Orientation.PEAK))
    return found


def apply_flip(t: Tiling, h: Hexagon) -> Tiling:
    if h not in find_hexagons(t):
        raise NotFlippable(f"{h} is not flippable in this tiling")
    bases = t.bases()
    bases.update(h.mirrored().bases())
    return Tiling.from_bases(t.n, bases)


def _check_bound(n: int) -> None:
    if n > settings.HEXANET_MAX_N:
        raise BoundExceeded(f"n={n} exceeds HEXANET_MAX_N={settings.HEXANET_MAX_N}")


@lru_cache(maxsize=8)
def flip_graph(n: int) -> nx.Graph:
    """Tilings of the 2n-gon joined by single flips, built breadth-first from T_0"""
    _check_bound(n)
    start = standard_tiling(n)
    graph = nx.Graph()
    graph.add_node(start)
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for h in find_hexagons(current):
            nxt = apply_flip(current, h)
            if nxt not in graph:
                queue.append(nxt)
            graph.add_edge(current, nxt)
    logger.info(f"Flip graph for n={n}: {graph.number_of_nodes()} tilings, {graph.number_of_edges()} flips")
    return graph


def enumerate_tilings(n: int) -> List[Tiling]:
    """Every tiling of the 2n-gon in canonical order"""
    return sorted(flip_graph(n).nodes, key=lambda t: t.key)


def flip_path(t1: Tiling, t2: Tiling) -> List[Hexagon]:
    """A shortest flip sequence taking t1 to t2"""
    if t1.n != t2.n:
        raise ValueError(f"tilings of different rank: {t1.n} and {t2.n}")
    if t1 == t2:
        return []
    graph = flip_graph(t1.n)
    for t in (t1, t2):
        if t not in graph:
            raise InvalidTiling("tiling is not in the flip class of T_0", validate(t))
    nodes = nx.shortest_path(graph, t1, t2)
    path = []
    for current, nxt in zip(nodes, nodes[1:]):
        path.append(next(h for h in find_hexagons(current) if apply_flip(current, h) == nxt))
    return path


def random_flips(t: Tiling, count: int, rng) -> Tuple[Tiling, List[Hexagon]]:
    """Apply `count` flips drawn by a seeded numpy Generator from the sorted hexagon list"""
    applied = []
    for _ in range(count):
        hexagons = find_hexagons(t)
        if not hexagons:
            break
        h = hexagons[int(rng.integers(len(hexagons)))]
        t = apply_flip(t, h)
        applied.append(h)
    return t, applied


def has_monotone_path(t: Tiling, target: Subset) -> bool:
    """Whether target is reached from the empty set by adding one element per tiling edge"""
    edges = t.edges()
    frontier = {frozenset()}
    for _ in range(len(target)):
        frontier = {s | {m} for s in frontier for m in target - s if (s, m) in edges}
    return target in frontier
