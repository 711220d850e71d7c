"""
Quaternionic determinants of q-Hermitian matrices.

qdet sums, over all permutations, the sign times the product of the real
parts of the cycle products. Grouping the two orientations of each long
cycle gives the cycle-decomposition form with full traces on cycles of
length >= 3 and half traces on cycles of length 1 and 2.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..core.exceptions import NotHermitian, ZeroCofactor
from .generator import MatrixGenerator
from .minors import ExactMatrix, FaceConvention, MinorSpec, face_sign, face_spec, generic_minor_specs
from .scalars import Ring, Scalar

logger = logging.getLogger(__name__)

Getter = Callable[[int, int], Scalar]


def is_q_hermitian(m: ExactMatrix) -> bool:
    return all(m[r, c] == m[c, r].conjugate() for r in range(1, m.n + 1) for c in range(r, m.n + 1))


def _require_q_hermitian(m: ExactMatrix) -> None:
    if not is_q_hermitian(m):
        raise NotHermitian("matrix is not q-Hermitian")


def _parity(order: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _expand(get: Getter, ring: Ring, rows: Sequence[int], cols: Sequence[int]) -> Scalar:
    """Sum over bijections rows -> cols of sign * (path product) * (real parts of cycle products).

    With rows == cols there is no path and the result is qdet. Otherwise the
    single extra row starts a path that ends at the single extra column.
    """
    rows, cols = sorted(rows), sorted(cols)
    extra_rows = set(rows) - set(cols)
    extra_cols = set(cols) - set(rows)
    start = next(iter(extra_rows)) if extra_rows else None
    end = next(iter(extra_cols)) if extra_cols else None
    position = {c: k for k, c in enumerate(cols)}
    total = Scalar.zero(ring)
    for image in permutations(cols):
        pi = dict(zip(rows, image))
        sign = _parity([position[c] for c in image])
        term = Scalar.of(ring, sign)
        visited = set()
        if start is not None:
            x = start
            while x != end:
                y = pi[x]
                term = term * get(x, y)
                visited.add(x)
                x = y
        for s in rows:
            if s in visited:
                continue
            product = Scalar.one(ring)
            x = s
            while x not in visited:
                visited.add(x)
                product = product * get(x, pi[x])
                x = pi[x]
            term = term * product.real
            if term.is_zero():
                break
        total = total + term
    return total


def qdet(m: ExactMatrix, indices: Optional[Iterable[int]] = None) -> Fraction:
    """q-determinant of the principal submatrix on indices (default: all)"""
    _require_q_hermitian(m)
    chosen = sorted(indices) if indices is not None else list(range(1, m.n + 1))
    if not chosen:
        return Fraction(1)
    value = _expand(lambda r, c: m[r, c], m.ring, chosen, chosen)
    if not value.is_real():
        raise NotHermitian(f"qdet came out non-real: {value}")
    return value.real


def q_almost_principal(m: ExactMatrix, s: Iterable[int], i: int, j: int) -> Scalar:
    """Rows S + i, columns S + j: paths from i to j with the rest of S in cycles"""
    _require_q_hermitian(m)
    s = frozenset(s)
    if i == j or i in s or j in s:
        raise ValueError(f"indices {i}, {j} collide with each other or with the base")
    return _expand(lambda r, c: m[r, c], m.ring, sorted(s | {i}), sorted(s | {j}))


def q_minor(m: ExactMatrix, spec: MinorSpec) -> Scalar:
    if not spec.rows:
        return Scalar.one(m.ring)
    return _expand(lambda r, c: m[r, c], m.ring, sorted(spec.rows), sorted(spec.cols))


def is_q_generic(m: ExactMatrix) -> bool:
    return all(not q_minor(m, spec).is_zero() for spec in generic_minor_specs(m.n))


def random_q_hermitian(generator: MatrixGenerator, n: int) -> ExactMatrix:
    return generator.resample(lambda: generator.q_hermitian(n), is_q_generic)


# Dyson's Pfaffian form


def quaternion_block(x: Scalar) -> Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]:
    """a + bi + cj + dk -> [[a+ib, c+id], [-c+id, a-ib]]"""
    a, b, c, d = x.components
    return (
        (Scalar.gauss(a, b), Scalar.gauss(c, d)),
        (Scalar.gauss(-c, d), Scalar.gauss(a, -b)),
    )


def complex_form(m: ExactMatrix) -> List[List[Scalar]]:
    size = 2 * m.n
    out = [[Scalar.zero(Ring.GAUSS)] * size for _ in range(size)]
    for r in range(m.n):
        for c in range(m.n):
            block = quaternion_block(m.entries[r][c].embed(Ring.QUAT))
            for dr in range(2):
                for dc in range(2):
                    out[2 * r + dr][2 * c + dc] = block[dr][dc]
    return out


def pfaffian(a: Sequence[Sequence[Scalar]]) -> Scalar:
    """Expansion along the first remaining row, memoized on the remaining index set"""
    size = len(a)
    ring = a[0][0].ring if size else Ring.GAUSS
    if size % 2:
        return Scalar.zero(ring)

    @lru_cache(maxsize=None)
    def pf(remaining: FrozenSet[int]) -> Scalar:
        if not remaining:
            return Scalar.one(ring)
        order = sorted(remaining)
        first, rest = order[0], order[1:]
        total = Scalar.zero(ring)
        for k, other in enumerate(rest):
            entry = a[first][other]
            if entry.is_zero():
                continue
            term = entry * pf(remaining - {first, other})
            total = total - term if k % 2 else total + term
        return total

    return pf(frozenset(range(size)))


def qdet_pfaffian(m: ExactMatrix) -> Fraction:
    """Pf(Z M~) with Z block-diagonal in [[0, 1], [-1, 0]]"""
    _require_q_hermitian(m)
    tilde = complex_form(m)
    size = len(tilde)
    zm = [[Scalar.zero(Ring.GAUSS)] * size for _ in range(size)]
    for r in range(0, size, 2):
        # Z acts on row pairs: (r, r+1) -> (row r+1, -row r)
        for c in range(size):
            zm[r][c] = tilde[r + 1][c]
            zm[r + 1][c] = -tilde[r][c]
    for r in range(size):
        for c in range(size):
            if zm[r][c] != -zm[c][r]:
                logger.error(f"Z*M~ is not antisymmetric at ({r}, {c})")
                raise NotHermitian(f"Z*M~ is not antisymmetric at ({r}, {c})")
    value = pfaffian(zm)
    if not value.is_real():
        raise NotHermitian(f"Pfaffian came out non-real: {value}")
    return value.real


# Quaternionic networks on the standard tiling


def q_reconstruct(net) -> ExactMatrix:
    """Inverse of the q-Hermitian network map on the standard tiling.

    The diagonal is read off the singleton vertices. Each face then fixes one
    off-diagonal entry, which enters its minor linearly with a real
    coefficient; the mirrored entry is its conjugate.
    """
    n = net.n
    if net.convention != FaceConvention.ODD:
        raise ValueError("q-Hermitian networks use the odd face convention")
    for v, x in net.vertices.items():
        if not x.is_real():
            raise NotHermitian(f"vertex value at {sorted(v)} is not real")
    cells: Dict[Tuple[int, int], Scalar] = {}
    for i in range(1, n + 1):
        cells[(i, i)] = net.vertices[frozenset({i})]

    def get(r: int, c: int) -> Scalar:
        return cells[(r, c)]

    zero, one = Scalar.zero(Ring.QUAT), Scalar.one(Ring.QUAT)
    for k in range(1, n):
        for i in range(n - k, 0, -1):
            j = i + k
            base = frozenset(range(i + 1, j))
            spec = face_spec(base, i, j, FaceConvention.ODD)
            (row,) = spec.rows - spec.cols
            (col,) = spec.cols - spec.rows
            target = net.faces[(i, j)] * face_sign(base)
            cells[(row, col)] = zero
            rest = _expand(get, Ring.QUAT, sorted(spec.rows), sorted(spec.cols))
            cells[(row, col)] = one
            coefficient = _expand(get, Ring.QUAT, sorted(spec.rows), sorted(spec.cols)) - rest
            if coefficient.is_zero():
                raise ZeroCofactor(f"face ({i},{j}) has a vanishing cofactor", (i, j))
            value = (target - rest) / coefficient
            cells[(row, col)] = value
            cells[(col, row)] = value.conjugate()
    rows = [[cells[(r, c)] for c in range(1, n + 1)] for r in range(1, n + 1)]
    return ExactMatrix.from_rows(rows, Ring.QUAT)
