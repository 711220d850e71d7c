"""
Hermitian and positive networks.

A network is Hermitian when its vertex values are real and every face f
with corners a, b, c, d (in cyclic order from the base) satisfies
|F(f)|^2 = F(a)F(c) + F(b)F(d).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Union

from ..core.config import settings
from ..core.exceptions import BoundExceeded, NonGeneric, NotHermitian, PrerequisiteMissing
from .generator import MatrixGenerator
from .minors import ExactMatrix, MinorSpec, minor
from .networks import HexahedronInput, Network, Starred, matrix_to_network, sigma
from .quaternionic import is_q_hermitian, qdet
from .scalars import Ring, Scalar
from .tilings import Pair, Subset, Tiling, format_subset, interval, standard_tiling

logger = logging.getLogger(__name__)


def face_identity_holds(net: Network, i: int, j: int) -> bool:
    tile = net.tiling.tile(i, j)
    a, b, c, d = (net.vertices[v] for v in tile.vertices())
    return Scalar.of(a.ring, net.faces[(i, j)].norm_sq()) == a * c + b * d


def is_hermitian_network(net: Network) -> bool:
    if not all(x.is_real() for x in net.vertices.values()):
        return False
    return all(face_identity_holds(net, *pair) for pair in sorted(net.faces))


def first_non_hermitian_face(net: Network) -> Optional[Pair]:
    for pair in sorted(net.faces):
        if not face_identity_holds(net, *pair):
            return pair
    return None


def _require_hermitian_faces(h: HexahedronInput) -> None:
    for name in ("a0", "a4", "a5", "a6", "a7", "a8", "a9"):
        if not getattr(h, name).is_real():
            raise NotHermitian(f"vertex value {name} = {getattr(h, name)} is not real")
    conditions = (
        ("a1", h.a1, h.a0 * h.a4 + h.a8 * h.a9),
        ("a2", h.a2, h.a0 * h.a5 + h.a7 * h.a9),
        ("a3", h.a3, h.a0 * h.a6 + h.a7 * h.a8),
    )
    for name, face, expected in conditions:
        if Scalar.of(face.ring, face.norm_sq()) != expected:
            raise NotHermitian(f"|{name}|^2 = {face.norm_sq()} but the corner products give {expected}")


def kashaev_up(h: HexahedronInput) -> Starred:
    """Hermitian Kashaev step; products are taken in the written order so quaternion faces work too"""
    if h.a0.is_zero():
        raise NonGeneric("a0 is zero", "a0")
    _require_hermitian_faces(h)
    a0, a1, a2, a3 = h.a0, h.a1, h.a2, h.a3
    t = a1 * a2 * a3
    top = a0 * h.a4 * h.a7 + a0 * h.a5 * h.a8 + a0 * h.a6 * h.a9 + h.a7 * h.a8 * h.a9 * 2 + t + t.conjugate()
    return Starred(
        top / (a0 * a0),
        (a2 * a3 + a1.conjugate() * h.a7) / a0,
        (a3 * a1 + a2.conjugate() * h.a8) / a0,
        (a1 * a2 + a3.conjugate() * h.a9) / a0,
    )


def kashaev_residuals(values: Mapping[str, Scalar]) -> Dict[str, Scalar]:
    """Differences between the starred values and the Kashaev right-hand sides"""
    h = HexahedronInput(*(values[f"a{k}"] for k in range(10)))
    expected = kashaev_up(h)
    return {f"a{k}*": values[f"a{k}*"] - expected[k] for k in range(4)}


def quaternionic_kashaev_check(values: Mapping[str, Scalar]) -> bool:
    """True when the fourteen cube values satisfy the Kashaev relations in the written order"""
    try:
        return all(r.is_zero() for r in kashaev_residuals(values).values())
    except (NotHermitian, NonGeneric) as e:
        logger.debug(f"Kashaev check rejected its input: {e}")
        return False


def hermitian_params_to_network(
    diag: Sequence[Union[int, Fraction, Scalar]], faces: Mapping[Pair, Scalar], ring: Optional[Ring] = None
) -> Network:
    """The standard Hermitian network with the given diagonal and face values.

    Each face R_{i,j} of the standard tiling has one corner, {i..j}, not yet
    valued when faces are visited by increasing span.
    """
    n = len(diag)
    ring = ring or next(iter(faces.values())).ring
    vertices: Dict[Subset, Scalar] = {frozenset(): Scalar.one(ring)}
    for i, value in enumerate(diag, start=1):
        scalar = value.embed(ring) if isinstance(value, Scalar) else Scalar.of(ring, value)
        if scalar.is_zero() or not scalar.is_real():
            raise NonGeneric(f"diagonal value {i} must be a nonzero real, got {scalar}", frozenset({i}))
        vertices[frozenset({i})] = scalar
    face_values = {pair: f.embed(ring) for pair, f in faces.items()}
    for k in range(1, n):
        for i in range(1, n - k + 1):
            j = i + k
            base = interval(i + 1, j - 1)
            if (i, j) not in face_values:
                raise PrerequisiteMissing(f"face ({i},{j}) missing")
            below = vertices[base]
            if below.is_zero():
                raise NonGeneric(f"vertex {format_subset(base)} is zero", base)
            norm = Scalar.of(ring, face_values[(i, j)].norm_sq())
            top = (norm - vertices[base | {i}] * vertices[base | {j}]) / below
            if top.is_zero():
                raise NonGeneric(f"vertex {format_subset(base | {i, j})} comes out zero", base | {i, j})
            vertices[base | {i, j}] = top
    tiling = standard_tiling(n) if n >= 2 else Tiling(n, ())
    return Network(tiling, vertices, face_values)


@dataclass(frozen=True)
class Interval:
    """Open interval; None marks an infinite end"""

    lo: Optional[Fraction]
    hi: Optional[Fraction]

    def contains(self, x: Fraction) -> bool:
        return (self.lo is None or x > self.lo) and (self.hi is None or x < self.hi)

    def is_empty(self) -> bool:
        return self.lo is not None and self.hi is not None and self.lo >= self.hi

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"({lo}, {hi})"


def admissible_interval(values: Mapping[Subset, Union[Fraction, int]], target: Subset) -> Interval:
    """Values F(target) keeping the sign sigma(target) and the face norm F(v)F(top) + F(s1)F(s2) positive.

    target is a consecutive set {i..i+k}; v, s1, s2 are {i+1..i+k-1}, {i..i+k-1} and {i+1..i+k}.
    """
    target = frozenset(target)
    lo_i, hi_i = min(target), max(target)
    if target != interval(lo_i, hi_i):
        raise ValueError(f"{format_subset(target)} is not a consecutive set")
    sign = sigma(target)
    lo, hi = (Fraction(0), None) if sign > 0 else (None, Fraction(0))
    if len(target) == 1:
        return Interval(lo, hi)

    def value(s: Subset) -> Fraction:
        if not s:
            return Fraction(1)
        if s not in values:
            raise PrerequisiteMissing(f"F({format_subset(s)}) must be assigned first")
        return Fraction(values[s])

    inner_set = interval(lo_i + 1, hi_i - 1)
    inner = value(inner_set)
    if inner == 0:
        raise NonGeneric(f"F({format_subset(inner_set)}) is zero", inner_set)
    bound = -value(interval(lo_i, hi_i - 1)) * value(interval(lo_i + 1, hi_i)) / inner
    if inner > 0:
        lo = bound if lo is None else max(lo, bound)
    else:
        hi = bound if hi is None else min(hi, bound)
    return Interval(lo, hi)


def sylvester_posdef(m: ExactMatrix) -> bool:
    """All leading principal minors are positive rationals"""
    if m.ring == Ring.QUAT:
        if not is_q_hermitian(m):
            raise NotHermitian("matrix is not q-Hermitian")
        return all(qdet(m, range(1, k + 1)) > 0 for k in range(1, m.n + 1))
    if not m.is_hermitian():
        raise NotHermitian("matrix is not Hermitian")
    return all(minor(m, MinorSpec.principal(range(1, k + 1))).is_positive() for k in range(1, m.n + 1))


def has_positive_signs(net: Network) -> bool:
    """sign F(v) = sigma(v) at every vertex"""
    return all(x.is_real() and x.real * sigma(v) > 0 for v, x in net.vertices.items())


def is_positive_network(net: Network) -> bool:
    return is_hermitian_network(net) and has_positive_signs(net)


def sample_positive_network(n: int, seed: int = 42, ring: Ring = Ring.GAUSS) -> Network:
    """Phi(B B*) for a random B with generic Gram matrix"""
    if n > settings.HEXANET_MAX_N:
        raise BoundExceeded(f"n={n} exceeds HEXANET_MAX_N={settings.HEXANET_MAX_N}")
    generator = MatrixGenerator(seed)
    if n == 1:
        entry = Scalar.of(ring, generator.nonzero_rational() ** 2)
        return Network(Tiling(1, ()), {frozenset(): Scalar.one(ring), frozenset({1}): entry}, {})
    gram = generator.generic_gram(n, ring)
    net = matrix_to_network(gram)
    logger.info(f"Sampled positive network n={n} over {ring.value} (seed={seed})")
    return net
