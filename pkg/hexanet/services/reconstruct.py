"""
Inverse of the matrix-to-network map on the standard tiling.

Entries are filled path by path: path p first fixes the size-p consecutive
principal minors (one new entry each, on span p - 1), then the faces
R_{i,i+p} (one new entry each, on span p). Every solve has exactly one
unassigned cell and its cofactor is itself a network value.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Generic, List, Optional, Sequence, Tuple, TypeVar, Union

from ..core.exceptions import InvalidTiling, NotNormalized, ZeroCofactor
from .minors import ExactMatrix, FaceConvention, MinorSpec, bareiss_det, face_sign, face_spec, laplace_det, sign_for_size
from .networks import Network, cube_move, matrix_to_network, transport
from .quaternionic import q_reconstruct
from .scalars import Ring, Scalar
from .tilings import Hexagon, Subset, format_subset, interval, standard_tiling

logger = logging.getLogger(__name__)

T = TypeVar("T")
Cell = Tuple[int, int]


class PartialMatrix(Generic[T]):
    """An n x n matrix whose cells are assigned one solve at a time (1-based)"""

    def __init__(self, n: int, one: T, zero: T):
        self.n = n
        self.one = one
        self.zero = zero
        self.cells: Dict[Cell, T] = {}

    def __getitem__(self, cell: Cell) -> T:
        if cell not in self.cells:
            raise KeyError(f"cell {cell} read before assignment")
        return self.cells[cell]

    def __setitem__(self, cell: Cell, value: T) -> None:
        if cell in self.cells:
            raise KeyError(f"cell {cell} assigned twice")
        self.cells[cell] = value

    def is_assigned(self, cell: Cell) -> bool:
        return cell in self.cells

    def det(self, rows: Sequence[Sequence[T]]) -> T:
        return laplace_det(rows, self.one, self.zero)

    def divide(self, numerator: T, denominator: T) -> T:
        return numerator / denominator

    def is_zero(self, value: T) -> bool:
        return value == self.zero

    def rows(self) -> List[List[T]]:
        return [[self[r, c] for c in range(1, self.n + 1)] for r in range(1, self.n + 1)]


class ScalarPartial(PartialMatrix[Scalar]):
    def __init__(self, n: int, ring: Ring):
        super().__init__(n, Scalar.one(ring), Scalar.zero(ring))
        self.ring = ring

    def det(self, rows: Sequence[Sequence[Scalar]]) -> Scalar:
        return bareiss_det([list(r) for r in rows], self.ring)

    def is_zero(self, value: Scalar) -> bool:
        return value.is_zero()

    def to_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.rows(), self.ring)


def solve_entry(m: PartialMatrix[T], spec: MinorSpec, target: T, unknown: Cell, position=None) -> T:
    """Value for the unknown cell that makes minor(spec) equal target; the cell is assigned"""
    rows, cols = sorted(spec.rows), sorted(spec.cols)
    ur, uc = unknown
    if ur not in rows or uc not in cols:
        raise ValueError(f"unknown {unknown} lies outside {spec}")
    for r in rows:
        for c in cols:
            if (r, c) != unknown and not m.is_assigned((r, c)):
                raise KeyError(f"solving {spec} needs unassigned cell {(r, c)}")
    ri = rows.index(ur)
    other_rows = [r for r in rows if r != ur]

    def cofactor(c: int) -> T:
        sub = [[m[r, x] for x in cols if x != c] for r in other_rows]
        value = m.det(sub)
        return -value if (ri + cols.index(c)) % 2 else value

    coefficient = cofactor(uc)
    if m.is_zero(coefficient):
        logger.error(f"Cofactor of {unknown} in {spec} vanishes")
        raise ZeroCofactor(f"cofactor of {unknown} in {spec} vanishes", position if position is not None else spec)
    rest = m.zero
    for c in cols:
        if c != uc:
            entry = m[ur, c]
            if not m.is_zero(entry):
                rest = rest + entry * cofactor(c)
    value = m.divide(target - rest, coefficient)
    m[unknown] = value
    return value


@dataclass(frozen=True)
class FillStep:
    """Assign `unknown` so that minor(spec) = sign * F(position)"""

    position: Union[Subset, Tuple[int, int]]
    spec: MinorSpec
    unknown: Cell
    sign: int

    @property
    def is_face(self) -> bool:
        return isinstance(self.position, tuple)

    def __str__(self) -> str:
        label = f"f{self.position[0]}{self.position[1]}" if self.is_face else format_subset(self.position)
        return f"{label}: {self.spec} -> {self.unknown}"


def _extra_cell(spec: MinorSpec) -> Cell:
    (row,) = spec.rows - spec.cols
    (col,) = spec.cols - spec.rows
    return (row, col)


@lru_cache(maxsize=32)
def fill_schedule(n: int, convention: FaceConvention = FaceConvention.ODD) -> Tuple[FillStep, ...]:
    steps: List[FillStep] = []
    for p in range(1, n + 1):
        for i in range(n - p + 1, 0, -1):
            v = interval(i, i + p - 1)
            if p == 1:
                unknown = (i, i)
            else:
                r, c = _extra_cell(face_spec(interval(i + 1, i + p - 2), i, i + p - 1, convention))
                unknown = (c, r)
            steps.append(FillStep(v, MinorSpec.principal(v), unknown, sign_for_size(p)))
        if p == n:
            break
        for i in range(n - p, 0, -1):
            base = interval(i + 1, i + p - 1)
            spec = face_spec(base, i, i + p, convention)
            steps.append(FillStep((i, i + p), spec, _extra_cell(spec), face_sign(base)))
    _check_schedule(n, steps)
    return tuple(steps)


def _check_schedule(n: int, steps: Sequence[FillStep]) -> None:
    assigned = set()
    for step in steps:
        for r in step.spec.rows:
            for c in step.spec.cols:
                cell = (r, c)
                if cell != step.unknown and cell not in assigned:
                    raise AssertionError(f"step {step} reads unassigned cell {cell}")
        if step.unknown in assigned:
            raise AssertionError(f"step {step} reassigns {step.unknown}")
        lo, hi = min(step.spec.rows | step.spec.cols), max(step.spec.rows | step.spec.cols)
        if step.spec.rows | step.spec.cols != interval(lo, hi):
            raise AssertionError(f"step {step} solves a non-contiguous minor")
        assigned.add(step.unknown)
    if len(assigned) != n * n:
        raise AssertionError(f"schedule assigns {len(assigned)} of {n * n} cells")


def run_schedule(
    m: PartialMatrix[T],
    convention: FaceConvention,
    value_of: Callable[[FillStep], T],
    on_step: Optional[Callable[[FillStep, T], None]] = None,
) -> PartialMatrix[T]:
    for step in fill_schedule(m.n, convention):
        target = value_of(step)
        if step.sign < 0:
            target = -target
        value = solve_entry(m, step.spec, target, step.unknown, step.position)
        if on_step is not None:
            on_step(step, value)
    return m


def reconstruct(net: Network) -> ExactMatrix:
    """The unique matrix A with matrix_to_network(A, T_0) == net"""
    n = net.n
    if net.tiling != standard_tiling(n):
        raise InvalidTiling("reconstruction needs the standard tiling; transport the network first")
    if net.vertex(()) != Scalar.one(net.ring):
        raise NotNormalized(f"F(v0) = {net.vertex(())}, expected 1")
    if net.ring == Ring.QUAT:
        return q_reconstruct(net)

    def value_of(step: FillStep) -> Scalar:
        return net.faces[step.position] if step.is_face else net.vertices[step.position]

    partial = run_schedule(ScalarPartial(n, net.ring), net.convention, value_of)
    logger.debug(f"Reconstructed {n}x{n} matrix over {net.ring.value}")
    return partial.to_matrix()


def reconstruct_any_tiling(net: Network) -> ExactMatrix:
    return reconstruct(transport(net, standard_tiling(net.n)))


def round_trip_check(a: ExactMatrix, flips: Sequence[Hexagon]) -> bool:
    """Phi(A, T_0) moved along flips, moved back, reconstructed: equals A"""
    net = matrix_to_network(a)
    for h in flips:
        net = cube_move(net, h)
    for h in reversed(flips):
        net = cube_move(net, h.mirrored())
    return reconstruct(net) == a
