"""
Exact scalars over Q, Q(i) and the rational quaternions.

Every value carries its ring tag. Arithmetic between different rings is
rejected; use embed() to move a value into a larger ring explicitly.
"""
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from ..core.exceptions import RingMismatch


class Ring(str, Enum):
    RAT = "Q"
    GAUSS = "C"
    QUAT = "H"


RING_RANK = {Ring.RAT: 0, Ring.GAUSS: 1, Ring.QUAT: 2}
UNITS = ("i", "j", "k")

Number = Union[int, Fraction]

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)")
_SPLIT_NUMBER = re.compile(r"\d\s+[\d/]|/\s+\d")


@dataclass(frozen=True)
class Scalar:
    """a + bi + cj + dk with rational components, tagged by ring"""

    ring: Ring
    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.ring == Ring.RAT and (self.b or self.c or self.d):
            raise RingMismatch(f"rational scalar with imaginary part: {self.components}")
        if self.ring == Ring.GAUSS and (self.c or self.d):
            raise RingMismatch(f"Gaussian scalar with j/k part: {self.components}")

    # Constructors

    @classmethod
    def rat(cls, value: Number) -> "Scalar":
        return cls(Ring.RAT, Fraction(value))

    @classmethod
    def gauss(cls, real: Number, imag: Number = 0) -> "Scalar":
        return cls(Ring.GAUSS, Fraction(real), Fraction(imag))

    @classmethod
    def quat(cls, a: Number, b: Number = 0, c: Number = 0, d: Number = 0) -> "Scalar":
        return cls(Ring.QUAT, Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @classmethod
    def of(cls, ring: Ring, value: Number) -> "Scalar":
        """Real value in the given ring"""
        return cls(ring, Fraction(value))

    @classmethod
    def zero(cls, ring: Ring) -> "Scalar":
        return cls(ring, Fraction(0))

    @classmethod
    def one(cls, ring: Ring) -> "Scalar":
        return cls(ring, Fraction(1))

    # Structure

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @property
    def real(self) -> Fraction:
        return self.a

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_positive(self) -> bool:
        return self.is_real() and self.a > 0

    def embed(self, ring: Ring) -> "Scalar":
        if RING_RANK[ring] < RING_RANK[self.ring]:
            if ring == Ring.RAT and self.is_real():
                return Scalar(ring, self.a)
            if ring == Ring.GAUSS and not (self.c or self.d):
                return Scalar(ring, self.a, self.b)
            raise RingMismatch(f"cannot embed {self} into {ring.value}")
        return Scalar(ring, *self.components)

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring.value} and {other.ring.value} values mixed without embed")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.ring, Fraction(other))
        return None

    # Arithmetic

    def conjugate(self) -> "Scalar":
        return Scalar(self.ring, self.a, -self.b, -self.c, -self.d)

    def norm_sq(self) -> Fraction:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def reduced_trace(self) -> "Scalar":
        return Scalar(self.ring, 2 * self.a)

    def inverse(self) -> "Scalar":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.ring, self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.ring, self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, -self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _hamilton(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _hamilton(o, self)

    def __truediv__(self, other):
        """Right division: self * other^-1"""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _hamilton(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _hamilton(o, self.inverse())

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r}, {self.ring.value})"


def _hamilton(x: Scalar, y: Scalar) -> Scalar:
    if x.ring == Ring.RAT:
        return Scalar(Ring.RAT, x.a * y.a)
    if x.ring == Ring.GAUSS:
        return Scalar(Ring.GAUSS, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a)
    a1, b1, c1, d1 = x.components
    a2, b2, c2, d2 = y.components
    return Scalar(
        x.ring,
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def conjugate(x: Scalar) -> Scalar:
    return x.conjugate()


def reduced_trace(x: Scalar) -> Scalar:
    """x + conj(x), a real value of the same ring"""
    return x.reduced_trace()


def norm_sq(x: Scalar) -> Fraction:
    return x.norm_sq()


def quat_mul(x: Scalar, y: Scalar) -> Scalar:
    """Hamilton product; both operands must share a ring and are embedded in H"""
    if x.ring != y.ring:
        raise RingMismatch(f"quat_mul of {x.ring.value} and {y.ring.value}")
    return _hamilton(x.embed(Ring.QUAT), y.embed(Ring.QUAT))


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def format_scalar(x: Scalar) -> str:
    """Serialize as "p/q", "p/q+r/s i" or "p/q+r/s i+t/u j+v/w k" depending on the ring"""
    text = _fraction_text(x.a)
    width = {Ring.RAT: 0, Ring.GAUSS: 1, Ring.QUAT: 3}[x.ring]
    for value, unit in list(zip((x.b, x.c, x.d), UNITS))[:width]:
        sign = "-" if value < 0 else "+"
        text += f"{sign}{_fraction_text(abs(value))} {unit}"
    return text


def parse_scalar(text: str, ring: Optional[Ring] = None) -> Scalar:
    """Parse the serialized form; zero components may be omitted.

    Without an explicit ring the smallest ring containing the value is used.
    """
    s = str(text).strip()
    if not s:
        raise ValueError("empty scalar")
    if _SPLIT_NUMBER.search(s):
        raise ValueError(f"whitespace inside a number in {text!r}")
    s = "".join(s.split())
    parts: Dict[str, Fraction] = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, number, unit = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or not (number or unit):
            raise ValueError(f"malformed scalar {text!r} at {pos}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign before term in {text!r}")
        try:
            value = Fraction(number) if number else Fraction(1)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}")
        parts[unit] += -value if sign == "-" else value
        pos = m.end()

    if parts["j"] or parts["k"]:
        natural = Ring.QUAT
    elif parts["i"]:
        natural = Ring.GAUSS
    else:
        natural = Ring.RAT
    value = Scalar(natural, parts[""], parts["i"], parts["j"], parts["k"])
    if ring is None:
        return value
    if RING_RANK[ring] < RING_RANK[natural]:
        raise RingMismatch(f"{text!r} does not fit ring {ring.value}")
    return value.embed(ring)
