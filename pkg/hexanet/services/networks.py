"""
Labeled tilings (T, F), the matrix-to-network map and cube moves.

Vertex S carries sigma(|S|) times the principal minor on S. The face R_ij
anchored at S carries sigma(|S| + 1) times the almost-principal minor picked
by the face convention. Cube moves act on networks through the hexahedron
relation, with slots assigned by CORRESPONDENCE.
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx

from ..core.config import settings
from ..core.exceptions import NonGeneric, NotFlippable, RingMismatch
from .generator import MatrixGenerator
from .minors import ExactMatrix, FaceConvention, MinorSpec, face_sign, face_spec, minor, sign_for_size
from .quaternionic import q_minor
from .scalars import Ring, Scalar
from .tilings import (
    Hexagon,
    Orientation,
    Pair,
    Subset,
    Tiling,
    apply_flip,
    flip_path,
    format_subset,
    standard_tiling,
    subset_key,
)

logger = logging.getLogger(__name__)


def sigma(s: Iterable[int]) -> int:
    """(-1)^floor(|S|/2)"""
    return sign_for_size(len(frozenset(s)))


@dataclass(frozen=True)
class Network:
    tiling: Tiling
    vertices: Dict[Subset, Scalar]
    faces: Dict[Pair, Scalar]
    convention: FaceConvention = FaceConvention.ODD

    @property
    def n(self) -> int:
        return self.tiling.n

    @property
    def ring(self) -> Ring:
        return self.vertices[frozenset()].ring

    def vertex(self, s: Iterable[int]) -> Scalar:
        return self.vertices[frozenset(s)]

    def face(self, i: int, j: int) -> Scalar:
        return self.faces[(i, j)]

    def values(self) -> List[Tuple[Union[Subset, Pair], Scalar]]:
        ordered = [(v, self.vertices[v]) for v in sorted(self.vertices, key=subset_key)]
        return ordered + [(p, self.faces[p]) for p in sorted(self.faces)]

    def first_zero(self) -> Optional[Union[Subset, Pair]]:
        for position, value in self.values():
            if value.is_zero():
                return position
        return None

    def is_generic(self) -> bool:
        return self.first_zero() is None

    def scaled(self, factor: Scalar) -> "Network":
        return replace(
            self,
            vertices={v: x * factor for v, x in self.vertices.items()},
            faces={p: x * factor for p, x in self.faces.items()},
        )

    def __str__(self) -> str:
        parts = [f"{format_subset(v)}={x}" for v, x in self.values() if isinstance(v, frozenset)]
        parts += [f"f{p[0]}{p[1]}={self.faces[p]}" for p in sorted(self.faces)]
        return " ".join(parts)


def _minor_value(m: ExactMatrix, spec: MinorSpec) -> Scalar:
    if m.ring == Ring.QUAT:
        return q_minor(m, spec)
    return minor(m, spec)


def vertex_value(m: ExactMatrix, s: Iterable[int]) -> Scalar:
    s = frozenset(s)
    return _minor_value(m, MinorSpec.principal(s)) * sigma(s)


def face_value(
    m: ExactMatrix, base: Iterable[int], i: int, j: int, convention: FaceConvention = FaceConvention.ODD
) -> Scalar:
    base = frozenset(base)
    return _minor_value(m, face_spec(base, i, j, convention)) * face_sign(base)


def matrix_to_network(
    m: ExactMatrix, t: Optional[Tiling] = None, convention: FaceConvention = FaceConvention.ODD
) -> Network:
    """Phi(A, T); raises NonGeneric naming the first vanishing value"""
    t = t or standard_tiling(m.n)
    if t.n != m.n:
        raise ValueError(f"tiling of rank {t.n} for a {m.n}x{m.n} matrix")
    vertices = {}
    for v in t.vertices():
        value = vertex_value(m, v)
        if value.is_zero():
            logger.error(f"Principal minor on {format_subset(v)} vanishes")
            raise NonGeneric(f"principal minor on {format_subset(v)} vanishes", v)
        vertices[v] = value
    faces = {}
    for tile in t.tiles:
        value = face_value(m, tile.base, tile.i, tile.j, convention)
        if value.is_zero():
            spec = face_spec(tile.base, tile.i, tile.j, convention)
            logger.error(f"Face minor {spec} of {tile} vanishes")
            raise NonGeneric(f"face minor {spec} of {tile} vanishes", tile.pair)
        faces[tile.pair] = value
    return Network(t, vertices, faces, convention)


# Hexahedron relation


class Starred(NamedTuple):
    a0: Scalar
    a1: Scalar
    a2: Scalar
    a3: Scalar


@dataclass(frozen=True)
class HexahedronInput:
    """Center a0, faces a1-a3 around it and the six remaining cube vertices a4-a9"""

    a0: Scalar
    a1: Scalar
    a2: Scalar
    a3: Scalar
    a4: Scalar
    a5: Scalar
    a6: Scalar
    a7: Scalar
    a8: Scalar
    a9: Scalar

    @classmethod
    def of(cls, *values) -> "HexahedronInput":
        lifted = [x if isinstance(x, Scalar) else Scalar.rat(x) for x in values]
        return cls(*lifted)

    def reversed(self) -> "HexahedronInput":
        """Top-down reversal: a4 <-> a7, a5 <-> a8, a6 <-> a9"""
        return HexahedronInput(
            self.a0, self.a1, self.a2, self.a3, self.a7, self.a8, self.a9, self.a4, self.a5, self.a6
        )

    def with_center(self, values: Starred) -> "HexahedronInput":
        return replace(self, a0=values.a0, a1=values.a1, a2=values.a2, a3=values.a3)


def hexahedron_up(h: HexahedronInput) -> Starred:
    for name in ("a0", "a1", "a2", "a3"):
        if getattr(h, name).is_zero():
            raise NonGeneric(f"hexahedron input {name} is zero", name)
    a0, a1, a2, a3 = h.a0, h.a1, h.a2, h.a3
    a4, a5, a6, a7, a8, a9 = h.a4, h.a5, h.a6, h.a7, h.a8, h.a9
    t = a1 * a2 * a3
    u = a7 * a8 * a9
    s1 = t + u + a0 * a4 * a7
    s2 = t + u + a0 * a5 * a8
    s3 = t + u + a0 * a6 * a9
    top = (
        t * t
        + t * (u * 2 + a0 * a4 * a7 + a0 * a5 * a8 + a0 * a6 * a9)
        + (a8 * a9 + a0 * a4) * (a9 * a7 + a0 * a5) * (a7 * a8 + a0 * a6)
    )
    return Starred(top / (a0 * a0 * t), s1 / (a1 * a0), s2 / (a2 * a0), s3 / (a3 * a0))


def hexahedron_down(h: HexahedronInput) -> Starred:
    """Inverse step: h carries a0*-a3* in its center slots and the unchanged a4-a9"""
    return hexahedron_up(h.reversed())


def hexahedron_residuals(values: Mapping[str, Scalar]) -> List[Scalar]:
    """Left minus right side of the four hexahedron identities on a slot assignment"""
    a = values
    t = a["a1"] * a["a2"] * a["a3"]
    u = a["a7"] * a["a8"] * a["a9"]
    p4 = a["a0"] * a["a4"] * a["a7"]
    p5 = a["a0"] * a["a5"] * a["a8"]
    p6 = a["a0"] * a["a6"] * a["a9"]
    return [
        a["a1*"] * a["a1"] * a["a0"] - (t + u + p4),
        a["a2*"] * a["a2"] * a["a0"] - (t + u + p5),
        a["a3*"] * a["a3"] * a["a0"] - (t + u + p6),
        a["a0*"] * a["a0"] * a["a0"] * t
        - (
            t * t
            + t * (u * 2 + p4 + p5 + p6)
            + (a["a8"] * a["a9"] + a["a0"] * a["a4"])
            * (a["a9"] * a["a7"] + a["a0"] * a["a5"])
            * (a["a7"] * a["a8"] + a["a0"] * a["a6"])
        ),
    ]


# Cube slots on a rank-3 interval. Roles 1, 2, 3 stand for p < q < r.


@dataclass(frozen=True)
class FaceSlot:
    x: int
    y: int
    base: Subset

    def __str__(self) -> str:
        return f"R{self.x}{self.y}@{format_subset(self.base)}"


Position = Union[Subset, FaceSlot]

VERTEX_SLOTS = ("a0", "a4", "a5", "a6", "a7", "a8", "a9", "a0*")
FACE_SLOTS = ("a1", "a2", "a3", "a1*", "a2*", "a3*")
SLOT_EDGES = [
    ("a0", "a7"), ("a0", "a8"), ("a0", "a9"),
    ("a4", "a8"), ("a4", "a9"), ("a5", "a7"), ("a5", "a9"), ("a6", "a7"), ("a6", "a8"),
    ("a0*", "a4"), ("a0*", "a5"), ("a0*", "a6"),
]
FACE_CORNERS = {
    "a1": ("a0", "a4", "a8", "a9"),
    "a2": ("a0", "a5", "a7", "a9"),
    "a3": ("a0", "a6", "a7", "a8"),
    "a1*": ("a0*", "a5", "a6", "a7"),
    "a2*": ("a0*", "a4", "a6", "a8"),
    "a3*": ("a0*", "a4", "a5", "a9"),
}


@dataclass(frozen=True)
class Labeling:
    """Slot name -> cube position, plus the face sign shift: faces at base B get sigma(|B| + shift)"""

    positions: Tuple[Tuple[str, Position], ...]
    face_shift: int = 1

    @classmethod
    def of(cls, positions: Mapping[str, Position], face_shift: int = 1) -> "Labeling":
        return cls(tuple(sorted(positions.items())), face_shift)

    def __getitem__(self, slot: str) -> Position:
        return dict(self.positions)[slot]


CORRESPONDENCE = Labeling.of(
    {
        "a8": frozenset(),
        "a4": frozenset({1}),
        "a0": frozenset({2}),
        "a6": frozenset({3}),
        "a9": frozenset({1, 2}),
        "a7": frozenset({2, 3}),
        "a5": frozenset({1, 2, 3}),
        "a0*": frozenset({1, 3}),
        "a1": FaceSlot(1, 2, frozenset()),
        "a2": FaceSlot(1, 3, frozenset({2})),
        "a3": FaceSlot(2, 3, frozenset()),
        "a1*": FaceSlot(1, 2, frozenset({3})),
        "a2*": FaceSlot(1, 3, frozenset()),
        "a3*": FaceSlot(2, 3, frozenset({1})),
    }
)


def correspondence_table() -> Labeling:
    return CORRESPONDENCE


def _place(position: Position, base: Subset, triple: Sequence[int]) -> Union[Subset, Tuple[Subset, int, int]]:
    roles = dict(zip((1, 2, 3), triple))
    if isinstance(position, FaceSlot):
        return (base | {roles[x] for x in position.base}, roles[position.x], roles[position.y])
    return base | {roles[x] for x in position}


def labeled_values(
    m: ExactMatrix,
    labeling: Labeling = CORRESPONDENCE,
    base: Iterable[int] = (),
    triple: Sequence[int] = (1, 2, 3),
) -> Dict[str, Scalar]:
    """Values of Phi(m) on the fourteen positions of the interval [base, base + triple]"""
    base = frozenset(base)
    values = {}
    for slot, position in labeling.positions:
        placed = _place(position, base, triple)
        if isinstance(placed, tuple):
            s, i, j = placed
            values[slot] = _minor_value(m, face_spec(s, i, j)) * sign_for_size(len(s) + labeling.face_shift)
        else:
            values[slot] = vertex_value(m, placed)
    return values


def labeling_holds(m: ExactMatrix, labeling: Labeling, base: Iterable[int] = (), triple=(1, 2, 3)) -> bool:
    values = labeled_values(m, labeling, base, triple)
    if any(values[s].is_zero() for s in ("a0", "a1", "a2", "a3")):
        raise NonGeneric("hexahedron center values vanish")
    return all(r.is_zero() for r in hexahedron_residuals(values))


def _slot_graph() -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(VERTEX_SLOTS)
    graph.add_edges_from(SLOT_EDGES)
    return graph


def _boolean_cube() -> nx.Graph:
    graph = nx.Graph()
    corners = [frozenset(c for c in (1, 2, 3) if mask >> (c - 1) & 1) for mask in range(8)]
    graph.add_nodes_from(corners)
    for a in corners:
        for b in corners:
            if len(a ^ b) == 1:
                graph.add_edge(a, b)
    return graph


def candidate_labelings() -> List[Labeling]:
    """Every cube isomorphism from the slot cube onto the Boolean cube, under both face sign shifts"""
    matcher = nx.isomorphism.GraphMatcher(_slot_graph(), _boolean_cube())
    candidates = []
    for mapping in matcher.isomorphisms_iter():
        table: Dict[str, Position] = dict(mapping)
        for slot, corners in FACE_CORNERS.items():
            placed = [mapping[c] for c in corners]
            low = frozenset.intersection(*placed)
            x, y = sorted(frozenset.union(*placed) - low)
            table[slot] = FaceSlot(x, y, low)
        for shift in (0, 1):
            candidates.append(Labeling.of(table, shift))
    return candidates


def correspondence_search(seed: int = 1, samples: Optional[int] = None) -> List[Labeling]:
    """Labelings under which the hexahedron identities hold on random generic 3x3 matrices"""
    samples = samples or settings.CORRESPONDENCE_SAMPLES
    generator = MatrixGenerator(seed)
    matrices = [generator.generic_matrix(3) for _ in range(samples)]
    candidates = candidate_labelings()
    found = []
    for labeling in candidates:
        try:
            if all(labeling_holds(m, labeling) for m in matrices):
                found.append(labeling)
        except NonGeneric:
            continue
    logger.info(f"Correspondence search: {len(found)} of {len(candidates)} labelings satisfy the identities")
    return found


# Cube moves


def _slot_positions(h: Hexagon) -> Dict[str, Union[Subset, Pair]]:
    triple = (h.p, h.q, h.r)
    placed = {}
    for slot, position in CORRESPONDENCE.positions:
        spot = _place(position, h.base, triple)
        placed[slot] = (spot[1], spot[2]) if isinstance(spot, tuple) else spot
    return placed


def cube_move(net: Network, h: Hexagon) -> Network:
    """Flip h and push the labels through the hexahedron relation"""
    if net.convention != FaceConvention.ODD:
        raise NotFlippable(f"cube moves need the odd face convention, network uses {net.convention.value}")
    if net.ring == Ring.QUAT:
        raise RingMismatch("cube moves are defined over commutative rings only")
    flipped = apply_flip(net.tiling, h)
    slots = _slot_positions(h)

    def read(slot: str) -> Scalar:
        where = slots[slot]
        return net.faces[where] if isinstance(where, tuple) else net.vertices[where]

    mid = [read(s) for s in ("a4", "a5", "a6", "a7", "a8", "a9")]
    if h.orientation == Orientation.VALLEY:
        new = hexahedron_up(HexahedronInput(read("a0"), read("a1"), read("a2"), read("a3"), *mid))
        old_center, new_center = slots["a0"], slots["a0*"]
        new_faces = dict(zip((slots["a1*"], slots["a2*"], slots["a3*"]), new[1:]))
    else:
        new = hexahedron_down(HexahedronInput(read("a0*"), read("a1*"), read("a2*"), read("a3*"), *mid))
        old_center, new_center = slots["a0*"], slots["a0"]
        new_faces = dict(zip((slots["a1"], slots["a2"], slots["a3"]), new[1:]))

    vertices = {v: x for v, x in net.vertices.items() if v != old_center}
    vertices[new_center] = new[0]
    faces = dict(net.faces)
    faces.update(new_faces)
    logger.debug(f"Cube move {h}: center {format_subset(old_center)} -> {format_subset(new_center)}")
    return Network(flipped, vertices, faces, net.convention)


def apply_moves(net: Network, hexagons: Sequence[Hexagon]) -> Network:
    for h in hexagons:
        net = cube_move(net, h)
    return net


def transport(net: Network, target: Tiling) -> Network:
    """Move net onto target along a shortest flip path"""
    return apply_moves(net, flip_path(net.tiling, target))


def normalize(net: Network) -> Network:
    """Scale every value by F(v0)^-1"""
    v0 = net.vertex(())
    if v0.is_zero():
        raise NonGeneric("F(v0) is zero", frozenset())
    return net.scaled(v0.inverse())


def equivalent(net1: Network, net2: Network) -> bool:
    if net1.n != net2.n:
        raise ValueError(f"networks of different rank: {net1.n} and {net2.n}")
    moved = transport(normalize(net1), net2.tiling)
    other = normalize(net2)
    return moved.vertices == other.vertices and moved.faces == other.faces
