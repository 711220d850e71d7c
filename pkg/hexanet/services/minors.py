"""
Exact matrices, principal and almost-principal minors, Dodgson condensation.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

from ..core.exceptions import NonGeneric, RingMismatch
from .scalars import Ring, Scalar
from .tilings import Subset, format_subset, interval

logger = logging.getLogger(__name__)

T = TypeVar("T")
Entry = Union[int, Fraction, Scalar]


def sign_for_size(k: int) -> int:
    """(-1)^floor(k/2)"""
    return -1 if (k // 2) % 2 else 1


@dataclass(frozen=True)
class MinorSpec:
    rows: Subset
    cols: Subset

    def __post_init__(self):
        object.__setattr__(self, "rows", frozenset(self.rows))
        object.__setattr__(self, "cols", frozenset(self.cols))
        if len(self.rows) != len(self.cols):
            raise ValueError(f"minor with {len(self.rows)} rows and {len(self.cols)} columns")

    @classmethod
    def principal(cls, s: Iterable[int]) -> "MinorSpec":
        s = frozenset(s)
        return cls(s, s)

    def __str__(self) -> str:
        return f"M{format_subset(self.rows)}^{format_subset(self.cols)}"


class FaceConvention(str, Enum):
    """Which almost-principal minor labels the face R_ij at base S"""

    ODD = "odd"
    LOWER = "lower"


@dataclass(frozen=True)
class ExactMatrix:
    n: int
    ring: Ring
    entries: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"matrix is not {self.n}x{self.n}")
        for row in self.entries:
            for x in row:
                if x.ring != self.ring:
                    raise RingMismatch(f"entry {x} is not in ring {self.ring.value}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]], ring: Ring = Ring.RAT) -> "ExactMatrix":
        def lift(x: Entry) -> Scalar:
            return x.embed(ring) if isinstance(x, Scalar) else Scalar.of(ring, x)

        return cls(len(rows), ring, tuple(tuple(lift(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int, ring: Ring = Ring.RAT) -> "ExactMatrix":
        return cls.from_rows([[1 if r == c else 0 for c in range(n)] for r in range(n)], ring)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        """1-based (row, column) access"""
        r, c = index
        return self.entries[r - 1][c - 1]

    def rows(self) -> List[List[Scalar]]:
        return [list(row) for row in self.entries]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> List[List[Scalar]]:
        return [[self[r, c] for c in sorted(cols)] for r in sorted(rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.n, self.ring, tuple(zip(*self.entries)))

    def conjugate_transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.n, self.ring, tuple(tuple(x.conjugate() for x in col) for col in zip(*self.entries)))

    def is_hermitian(self) -> bool:
        return self == self.conjugate_transpose()

    def embed(self, ring: Ring) -> "ExactMatrix":
        return ExactMatrix(self.n, ring, tuple(tuple(x.embed(ring) for x in row) for row in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        rows = []
        for r in range(self.n):
            row = []
            for c in range(self.n):
                total = Scalar.zero(self.ring)
                for m in range(self.n):
                    total = total + self.entries[r][m] * other.entries[m][c]
                row.append(total)
            rows.append(tuple(row))
        return ExactMatrix(self.n, self.ring, tuple(rows))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries) + "]"


def _require_commutative(ring: Ring) -> None:
    if ring == Ring.QUAT:
        raise RingMismatch("determinants over H are not defined; use qdet")


def bareiss_det(rows: List[List[Scalar]], ring: Ring) -> Scalar:
    """Fraction-free elimination with row pivoting"""
    n = len(rows)
    if n == 0:
        return Scalar.one(ring)
    a = [list(row) for row in rows]
    sign = 1
    prev = Scalar.one(ring)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return Scalar.zero(ring)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def laplace_det(rows: Sequence[Sequence[T]], one: T, zero: T) -> T:
    """Cofactor expansion along rows, memoized on the set of unused columns.

    Works over any commutative ring whose elements support +, - and *.
    """
    k = len(rows)
    memo = {}

    def expand(row: int, mask: int):
        if row == k:
            return one
        if mask in memo:
            return memo[mask]
        total = zero
        position = 0
        for c in range(k):
            if not mask & (1 << c):
                continue
            entry = rows[row][c]
            if not _is_zero(entry):
                term = entry * expand(row + 1, mask & ~(1 << c))
                total = total - term if position % 2 else total + term
            position += 1
        memo[mask] = total
        return total

    return expand(0, (1 << k) - 1)


def _is_zero(x) -> bool:
    check = getattr(x, "is_zero", None)
    return check() if check is not None else x == 0


def det(m: ExactMatrix) -> Scalar:
    _require_commutative(m.ring)
    return bareiss_det(m.rows(), m.ring)


def cofactor_det(m: ExactMatrix) -> Scalar:
    """Plain expansion, used to cross-check det for n <= 4"""
    _require_commutative(m.ring)
    return laplace_det(m.rows(), Scalar.one(m.ring), Scalar.zero(m.ring))


def minor(m: ExactMatrix, spec: MinorSpec) -> Scalar:
    _require_commutative(m.ring)
    if not spec.rows:
        return Scalar.one(m.ring)
    return bareiss_det(m.submatrix(spec.rows, spec.cols), m.ring)


def _check_indices(s: Subset, i: int, j: int) -> None:
    if i == j or i in s or j in s:
        raise ValueError(f"indices {i}, {j} collide with each other or with {format_subset(s)}")


def is_odd(s: Subset, i: int, j: int) -> bool:
    """Rows S+i, columns S+j form the odd minor iff (i - j)(-1)^|S| > 0"""
    _check_indices(s, i, j)
    return (i - j) * (-1) ** len(s) > 0


def odd_spec(s: Subset, i: int, j: int) -> MinorSpec:
    s = frozenset(s)
    if is_odd(s, i, j):
        return MinorSpec(s | {i}, s | {j})
    return MinorSpec(s | {j}, s | {i})


def face_spec(s: Subset, i: int, j: int, convention: FaceConvention = FaceConvention.ODD) -> MinorSpec:
    """Minor labelling the face R_ij (i < j) anchored at S"""
    s = frozenset(s)
    _check_indices(s, i, j)
    if convention == FaceConvention.LOWER:
        lo, hi = min(i, j), max(i, j)
        return MinorSpec(s | {hi}, s | {lo})
    return odd_spec(s, i, j)


def face_sign(s: Subset) -> int:
    """Sign of the face anchored at S: that of its two side vertices, sigma(|S| + 1)"""
    return sign_for_size(len(s) + 1)


def odd_almost_principal(m: ExactMatrix, s: Subset, i: int, j: int) -> Scalar:
    return minor(m, odd_spec(s, i, j))


def dodgson_identity_check(m: ExactMatrix, s: Subset, i: int, j: int) -> bool:
    """det M_{S+ij} det M_S = det M_{S+i} det M_{S+j} - det M_{S+i}^{S+j} det M_{S+j}^{S+i}"""
    s = frozenset(s)
    _check_indices(s, i, j)
    lhs = minor(m, MinorSpec.principal(s | {i, j})) * minor(m, MinorSpec.principal(s))
    rhs = minor(m, MinorSpec.principal(s | {i})) * minor(m, MinorSpec.principal(s | {j})) - minor(
        m, MinorSpec(s | {i}, s | {j})
    ) * minor(m, MinorSpec(s | {j}, s | {i}))
    return lhs == rhs


@dataclass(frozen=True)
class DodgsonPyramid:
    """levels[k][r][c] is the contiguous k x k minor with top-left entry (r+1, c+1)"""

    n: int
    levels: Tuple[Tuple[Tuple[Scalar, ...], ...], ...]

    def value(self, k: int, row: int, col: int) -> Scalar:
        return self.levels[k][row - 1][col - 1]

    @property
    def apex(self) -> Scalar:
        return self.levels[self.n][0][0]

    def principal_slice(self, k: int) -> List[Scalar]:
        """Consecutive principal minors of size k (the x = y plane)"""
        return [self.levels[k][r][r] for r in range(self.n - k + 1)]

    def almost_principal_slice(self, k: int) -> List[Scalar]:
        """Minors with rows shifted one below the columns (the x = y + 1 plane)"""
        return [self.levels[k][r + 1][r] for r in range(self.n - k)]


def dodgson_pyramid(m: ExactMatrix) -> DodgsonPyramid:
    _require_commutative(m.ring)
    n = m.n
    one = Scalar.one(m.ring)
    levels = [tuple(tuple(one for _ in range(n + 1)) for _ in range(n + 1)), m.entries]
    for k in range(1, n):
        current, below = levels[k], levels[k - 1]
        size = n - k
        nxt = []
        for r in range(size):
            row = []
            for c in range(size):
                divisor = below[r + 1][c + 1]
                if divisor.is_zero():
                    spec = MinorSpec(interval(r + 2, r + k), interval(c + 2, c + k))
                    logger.error(f"Dodgson condensation divides by vanishing minor {spec}")
                    raise NonGeneric(f"contiguous minor {spec} vanishes", spec)
                row.append((current[r][c] * current[r + 1][c + 1] - current[r][c + 1] * current[r + 1][c]) / divisor)
            nxt.append(tuple(row))
        levels.append(tuple(nxt))
    return DodgsonPyramid(n, tuple(levels))


def unsigned_octahedron_check(p: DodgsonPyramid) -> bool:
    """With g = sigma(k) D the pyramid obeys the +/+ octahedron recurrence across the diagonal:
    g(r, c+1, k) g(r+1, c, k) = g(r, c, k) g(r+1, c+1, k) + g(r, c, k+1) g(r+1, c+1, k-1)
    """

    def g(k: int, r: int, c: int) -> Scalar:
        return p.levels[k][r][c] * sign_for_size(k)

    for k in range(1, p.n):
        for r in range(p.n - k):
            for c in range(p.n - k):
                lhs = g(k, r, c + 1) * g(k, r + 1, c)
                rhs = g(k, r, c) * g(k, r + 1, c + 1) + g(k + 1, r, c) * g(k - 1, r + 1, c + 1)
                if lhs != rhs:
                    return False
    return True


def generic_minor_specs(n: int) -> List[MinorSpec]:
    """Every principal and odd almost-principal minor of an n x n matrix"""
    specs = []
    for size in range(1, n + 1):
        for s in combinations(range(1, n + 1), size):
            specs.append(MinorSpec.principal(s))
    for size in range(0, n - 1):
        for s in combinations(range(1, n + 1), size):
            rest = [x for x in range(1, n + 1) if x not in s]
            for i, j in combinations(rest, 2):
                specs.append(odd_spec(frozenset(s), i, j))
    return specs


def first_vanishing_minor(m: ExactMatrix, specs: Optional[Sequence[MinorSpec]] = None) -> Optional[MinorSpec]:
    for spec in specs if specs is not None else generic_minor_specs(m.n):
        if minor(m, spec).is_zero():
            return spec
    return None


def is_generic(m: ExactMatrix) -> bool:
    """All principal and odd almost-principal minors nonzero"""
    return first_vanishing_minor(m) is None

