"""
Sparse Laurent polynomials and symbolic reconstruction.

Running the reconstruction schedule with one indeterminate per position of
the standard network expresses every matrix entry as a Laurent polynomial:
each cofactor met along the way is, up to sign, a single network variable.
"""
import logging
import re
import string
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import pandas as pd

from ..core.config import settings
from ..core.exceptions import BoundExceeded, NonGeneric, NonLaurent, PrerequisiteMissing
from .minors import FaceConvention, face_sign, face_spec, laplace_det
from .reconstruct import FillStep, PartialMatrix, run_schedule, solve_entry
from .scalars import Ring, Scalar
from .tilings import Subset, interval

logger = logging.getLogger(__name__)

Monomial = Tuple[Tuple[str, int], ...]
CONJ = "~"

_FACTOR = re.compile(r"([A-Za-z][A-Za-z0-9]*~?)(?:\^(\d+))?$")
_COEF = re.compile(r"^(?:\((\d+)/(\d+)\)|(\d+))(?:\*|$)")


def _mono(powers: Mapping[str, int]) -> Monomial:
    return tuple(sorted((name, e) for name, e in powers.items() if e))


def is_conjugate_name(name: str) -> bool:
    return name.endswith(CONJ)


def conjugate_name(name: str) -> str:
    return name[:-1] if is_conjugate_name(name) else name + CONJ


def is_face_name(name: str) -> bool:
    return name.startswith("f")


class LaurentPoly:
    """Finite sum of rational multiples of monomials with integer exponents"""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Fraction]] = None):
        self.terms: Dict[Monomial, Fraction] = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, value: Union[int, Fraction]) -> "LaurentPoly":
        return cls({(): Fraction(value)})

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "LaurentPoly":
        return cls({_mono({name: exponent}): Fraction(1)})

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coefficient: Union[int, Fraction] = 1) -> "LaurentPoly":
        return cls({_mono(powers): Fraction(coefficient)})

    @staticmethod
    def _coerce(other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    # Structure

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def coefficients(self) -> List[Fraction]:
        return [c for _, c in self.sorted_terms()]

    def monomials(self) -> List["LaurentPoly"]:
        return [LaurentPoly({m: c}) for m, c in self.sorted_terms()]

    def variables(self) -> set:
        return {name for m in self.terms for name, _ in m}

    def denominators(self) -> List[Dict[str, int]]:
        return [{name: -e for name, e in m if e < 0} for m, _ in self.sorted_terms()]

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # Arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self.terms.items()})

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
        terms: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                powers = dict(m1)
                for name, e in m2:
                    powers[name] = powers.get(name, 0) + e
                terms[_mono(powers)] += c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def divide(self, other) -> "LaurentPoly":
        """Division by a single term; anything else has no Laurent quotient in general"""
        o = self._coerce(other)
        if o is None or not o.is_monomial():
            raise NonLaurent(f"cannot divide by {o}: divisor has {len(o) if o is not None else '?'} terms")
        ((m, c),) = o.terms.items()
        inverse = LaurentPoly({tuple((name, -e) for name, e in m): 1 / c})
        return self * inverse

    def __truediv__(self, other):
        return self.divide(other)

    def conjugate(self, is_real: Callable[[str], bool] = lambda name: not is_face_name(name)) -> "LaurentPoly":
        """Swap every non-real variable with its formal conjugate"""
        terms = {}
        for m, c in self.terms.items():
            terms[_mono({(name if is_real(name) else conjugate_name(name)): e for name, e in m})] = c
        return LaurentPoly(terms)

    def rename(self, names: Mapping[str, str]) -> "LaurentPoly":
        terms: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m, c in self.terms.items():
            powers: Dict[str, int] = defaultdict(int)
            for name, e in m:
                if is_conjugate_name(name) and name not in names:
                    powers[conjugate_name(names.get(conjugate_name(name), conjugate_name(name)))] += e
                else:
                    powers[names.get(name, name)] += e
            terms[_mono(powers)] += c
        return LaurentPoly(terms)

    def reduce(self, rules: Mapping[Tuple[str, str], "LaurentPoly"]) -> "LaurentPoly":
        """Rewrite x*y -> rules[(x, y)] while some term holds both factors with positive exponent"""
        if not rules:
            return self
        done: Dict[Monomial, Fraction] = defaultdict(Fraction)
        pending = list(self.terms.items())
        while pending:
            m, c = pending.pop()
            powers = dict(m)
            for (x, y), replacement in rules.items():
                if powers.get(x, 0) > 0 and powers.get(y, 0) > 0:
                    powers[x] -= 1
                    powers[y] -= 1
                    pending.extend((LaurentPoly({_mono(powers): c}) * replacement).terms.items())
                    break
            else:
                done[m] += c
        return LaurentPoly(done)

    def evaluate(self, point: Mapping[str, Union[Scalar, Fraction, int]], ring: Ring = Ring.RAT) -> Scalar:
        """Substitute values; a conjugate name falls back to the conjugate of its partner's value"""
        total = Scalar.zero(ring)
        for m, c in self.sorted_terms():
            term = Scalar.of(ring, c)
            for name, e in m:
                value = _lookup(point, name, ring)
                if e < 0:
                    if value.is_zero():
                        raise NonGeneric(f"variable {name} is zero but appears with exponent {e}", name)
                    value = value.inverse()
                for _ in range(abs(e)):
                    term = term * value
            total = total + term
        return total

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


def _lookup(point: Mapping, name: str, ring: Ring) -> Scalar:
    if name in point:
        raw = point[name]
    elif is_conjugate_name(name) and conjugate_name(name) in point:
        raw = point[conjugate_name(name)]
        raw = raw.conjugate() if isinstance(raw, Scalar) else raw
    else:
        raise PrerequisiteMissing(f"no value for variable {name}")
    return raw.embed(ring) if isinstance(raw, Scalar) else Scalar.of(ring, raw)


def _factors(powers: Iterable[Tuple[str, int]]) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in powers)


def format_laurent(p: LaurentPoly) -> str:
    """Canonical text: terms like 3*a*c/(b*d), joined by + and -"""
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        num = [(name, e) for name, e in m if e > 0]
        den = [(name, -e) for name, e in m if e < 0]
        magnitude = abs(c)
        text = _factors(num)
        if magnitude != 1 or not text:
            coef = str(magnitude.numerator) if magnitude.denominator == 1 else f"({magnitude.numerator}/{magnitude.denominator})"
            text = f"{coef}*{text}" if text else coef
        if den:
            body = _factors(den)
            text += f"/({body})" if len(den) > 1 or den[0][1] > 1 else f"/{body}"
        pieces.append(("-" if c < 0 else "+", text))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def parse_laurent(text: str) -> LaurentPoly:
    """Inverse of format_laurent"""
    body = "".join(text.split())
    if not body:
        raise ValueError("empty polynomial")
    total = LaurentPoly()
    for sign, term in re.findall(r"([+-]?)([^+-]+)", body):
        total = total + (-_parse_term(term) if sign == "-" else _parse_term(term))
    return total


def _parse_term(term: str) -> LaurentPoly:
    coefficient = Fraction(1)
    m = _COEF.match(term)
    if m:
        coefficient = Fraction(int(m.group(1)), int(m.group(2))) if m.group(1) else Fraction(int(m.group(3)))
        term = term[m.end():]
        if not term:
            return LaurentPoly.const(coefficient)
    num, _, den = term.partition("/")
    if den.startswith("(") and den.endswith(")"):
        den = den[1:-1]
    powers: Dict[str, int] = defaultdict(int)
    for part, sign in ((num, 1), (den, -1)):
        if not part or part == "1":
            continue
        for factor in part.split("*"):
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"malformed factor {factor!r}")
            powers[fm.group(1)] += sign * int(fm.group(2) or 1)
    return LaurentPoly.monomial(powers, coefficient)


# Network variables of the standard tiling


def vertex_name(s: Subset) -> str:
    return "v" + "".join(str(m) for m in sorted(s))


def face_name(i: int, j: int) -> str:
    return f"f{i}{j}"


def position_names(n: int) -> List[str]:
    """Standard-network variables level by level: row k alternates the k-vertices and the faces R_{i,i+k}"""
    names = []
    for k in range(1, n + 1):
        for r in range(1, n - k + 2):
            names.append(vertex_name(interval(r, r + k - 1)))
            if r + k <= n:
                names.append(face_name(r, r + k))
    return names


def letter_names(n: int) -> Dict[str, str]:
    """Single-letter aliases a, b, c, ... in level order"""
    names = position_names(n)
    if len(names) > len(string.ascii_lowercase):
        raise BoundExceeded(f"{len(names)} variables do not fit single letters")
    return dict(zip(names, string.ascii_lowercase))


# Hermitian 4x4 aliases: diagonal a-d, faces x y z u v w, interior vertex f
HERMITIAN_LETTERS_4 = {
    "v1": "a", "v2": "b", "v3": "c", "v4": "d",
    "f12": "x", "f23": "y", "f34": "z", "f13": "u", "f24": "v", "f14": "w",
    "v23": "f",
}


def step_name(step: FillStep) -> str:
    return face_name(*step.position) if step.is_face else vertex_name(step.position)


class LaurentPartial(PartialMatrix[LaurentPoly]):
    def __init__(self, n: int, rules: Optional[Mapping[Tuple[str, str], LaurentPoly]] = None):
        super().__init__(n, LaurentPoly.const(1), LaurentPoly())
        self.rules = dict(rules or {})

    def det(self, rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
        return laplace_det(rows, self.one, self.zero).reduce(self.rules)

    def divide(self, numerator: LaurentPoly, denominator: LaurentPoly) -> LaurentPoly:
        denominator = denominator.reduce(self.rules)
        if not denominator.is_monomial():
            logger.error(f"Non-monomial divisor {denominator}")
            raise NonLaurent(f"divisor {denominator} is not a monomial")
        return numerator.reduce(self.rules).divide(denominator).reduce(self.rules)

    def is_zero(self, value: LaurentPoly) -> bool:
        return value.reduce(self.rules).is_zero()


@dataclass(frozen=True)
class SymbolicMatrix:
    n: int
    rows: Tuple[Tuple[LaurentPoly, ...], ...]

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.rows[i - 1][j - 1]

    def term_counts(self) -> List[List[int]]:
        return [[len(p) for p in row] for row in self.rows]

    def renamed(self, names: Mapping[str, str]) -> "SymbolicMatrix":
        return SymbolicMatrix(self.n, tuple(tuple(p.rename(names) for p in row) for row in self.rows))

    def evaluate(self, point: Mapping, ring: Ring = Ring.RAT) -> List[List[Scalar]]:
        return [[p.evaluate(point, ring) for p in row] for row in self.rows]


def _check_symbolic_bound(n: int) -> None:
    if n > settings.SYMBOLIC_MAX_N:
        raise BoundExceeded(f"n={n} exceeds SYMBOLIC_MAX_N={settings.SYMBOLIC_MAX_N}")


def symbolic_reconstruct(n: int, convention: FaceConvention = FaceConvention.LOWER) -> SymbolicMatrix:
    """Entries of the matrix of the standard network with one indeterminate per position"""
    _check_symbolic_bound(n)
    partial = run_schedule(LaurentPartial(n), convention, lambda step: LaurentPoly.var(step_name(step)))
    rows = tuple(tuple(partial[r, c] for c in range(1, n + 1)) for r in range(1, n + 1))
    logger.info(f"Symbolic reconstruction n={n} ({convention.value}): {sum(len(p) for row in rows for p in row)} terms")
    return SymbolicMatrix(n, rows)


def hermitian_variables(n: int) -> List[str]:
    """Diagonal entries, interior vertices and faces of a standard Hermitian network"""
    names = [vertex_name({i}) for i in range(1, n + 1)]
    for k in range(2, n - 1):
        names += [vertex_name(interval(r, r + k - 1)) for r in range(2, n - k + 1)]
    for k in range(1, n):
        names += [face_name(r, r + k) for r in range(1, n - k + 1)]
    return names


def hermitian_rules(n: int) -> Dict[Tuple[str, str], LaurentPoly]:
    """f * f~ -> F(base)F(top) + F(side)F(side) for faces whose corners are all free variables"""
    free = set(hermitian_variables(n))

    def corner(s: Subset) -> Optional[LaurentPoly]:
        if not s:
            return LaurentPoly.const(1)
        name = vertex_name(s)
        return LaurentPoly.var(name) if name in free else None

    rules = {}
    for k in range(1, n):
        for i in range(1, n - k + 1):
            j = i + k
            base = interval(i + 1, j - 1)
            corners = [corner(base), corner(base | {i}), corner(base | {i, j}), corner(base | {j})]
            if all(c is not None for c in corners):
                name = face_name(i, j)
                rules[(name, conjugate_name(name))] = corners[0] * corners[2] + corners[1] * corners[3]
    return rules


def hermitian_symbolic_reconstruct(n: int) -> SymbolicMatrix:
    """Hermitian standard network with free diagonal, interior vertices and faces.

    Only face solves are needed: each fixes one off-diagonal entry and its mirror is the conjugate.
    """
    _check_symbolic_bound(n)
    rules = hermitian_rules(n)
    partial = LaurentPartial(n, rules)
    for i in range(1, n + 1):
        partial[i, i] = LaurentPoly.var(vertex_name({i}))

    for k in range(1, n):
        for i in range(n - k, 0, -1):
            base = interval(i + 1, i + k - 1)
            spec = face_spec(base, i, i + k, FaceConvention.ODD)
            (row,) = spec.rows - spec.cols
            (col,) = spec.cols - spec.rows
            target = LaurentPoly.var(face_name(i, i + k)) * face_sign(base)
            value = solve_entry(partial, spec, target, (row, col), (i, i + k))
            partial[col, row] = value.conjugate()
    rows = tuple(tuple(partial[r, c] for c in range(1, n + 1)) for r in range(1, n + 1))
    return SymbolicMatrix(n, rows)


def catalan_report(ns: Sequence[int] = (4, 5)) -> pd.DataFrame:
    """Term counts along the first row of Hermitian symbolic matrices; informational only"""
    records = []
    for n in ns:
        try:
            counts = hermitian_symbolic_reconstruct(n).term_counts()[0]
        except (NonLaurent, BoundExceeded) as e:
            logger.error(f"Hermitian symbolic reconstruction failed for n={n}: {e}")
            continue
        for j, count in enumerate(counts, start=1):
            records.append({"n": n, "entry": f"1,{j}", "terms": count, "catalan": _catalan(j - 1)})
    report = pd.DataFrame.from_records(records, columns=["n", "entry", "terms", "catalan"])
    if not report.empty:
        report["matches"] = report["terms"] == report["catalan"]
        logger.info(f"Catalan term counts:\n{report.to_string(index=False)}")
    return report


def _catalan(k: int) -> int:
    c = 1
    for m in range(k):
        c = c * 2 * (2 * m + 1) // (m + 2)
    return c
