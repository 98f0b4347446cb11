"""Exact arithmetic in Z[A^±1, B^±1, a^±1] localized at (A - B).

Every value of the invariant lives in this ring: a Laurent polynomial numerator
over a power of (A - B). Values are kept in canonical form, so structural
equality is ring equality.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from tokenize import TokenError
from types import MappingProxyType

import sympy
from sympy.parsing.sympy_parser import parse_expr

from .errors import NonExactSpecialization, PoleAtPoint, UnknownConstant

logger = logging.getLogger(__name__)

Exponent = tuple[int, int, int]
Point = tuple[Fraction | int, Fraction | int, Fraction | int]


def _render_term(coeff: int, powers: Iterable[tuple[str, int]]) -> str:
    parts = [] if coeff == 1 else [str(coeff)]
    parts.extend(f"{name}^{exp}" for name, exp in powers if exp != 0)
    return "*".join(parts) if parts else "1"


class LaurentPoly:
    """Laurent polynomial in A, B, a with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        cleaned = {exp: c for exp, c in (terms or {}).items() if c != 0}
        self._terms: Mapping[Exponent, int] = MappingProxyType(cleaned)
        self._hash: int | None = None

    @classmethod
    def monomial(cls, coeff: int = 1, e_a_upper: int = 0, e_b: int = 0, e_a: int = 0) -> LaurentPoly:
        return cls({(e_a_upper, e_b, e_a): coeff})

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        merged = dict(self._terms)
        for exp, c in other._terms.items():
            merged[exp] = merged.get(exp, 0) + c
        return LaurentPoly(merged)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({exp: c * other for exp, c in self._terms.items()})
        product: dict[Exponent, int] = {}
        for (i1, j1, l1), c1 in self._terms.items():
            for (i2, j2, l2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2, l1 + l2)
                product[key] = product.get(key, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def divide_by_a_minus_b(self) -> LaurentPoly | None:
        """Exact quotient by (A - B), or None when (A - B) does not divide.

        The polynomial is read as univariate in A with Laurent coefficients in
        B and a, and divided synthetically by the monic factor (A - B).
        """
        if not self._terms:
            return self
        by_power: dict[int, dict[tuple[int, int], int]] = {}
        for (i, j, l), c in self._terms.items():
            by_power.setdefault(i, {})[(j, l)] = c
        low, high = min(by_power), max(by_power)
        quotients: list[dict[tuple[int, int], int]] = [{} for _ in range(high - low)]
        carry: dict[tuple[int, int], int] = {}
        for k in range(high - low, 0, -1):
            current = dict(by_power.get(low + k, {}))
            for (j, l), c in carry.items():
                current[(j + 1, l)] = current.get((j + 1, l), 0) + c
            current = {key: c for key, c in current.items() if c != 0}
            quotients[k - 1] = current
            carry = current
        remainder = dict(by_power.get(low, {}))
        for (j, l), c in carry.items():
            remainder[(j + 1, l)] = remainder.get((j + 1, l), 0) + c
        if any(c != 0 for c in remainder.values()):
            return None
        result: dict[Exponent, int] = {}
        for k, coeffs in enumerate(quotients):
            for (j, l), c in coeffs.items():
                result[(low + k, j, l)] = c
        return LaurentPoly(result)

    def render(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), reverse=True)
        return " + ".join(_render_term(c, (("A", i), ("B", j), ("a", l))) for (i, j, l), c in ordered)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()})"


@lru_cache(maxsize=64)
def _a_minus_b_power(m: int) -> LaurentPoly:
    if m == 0:
        return LaurentPoly.monomial(1)
    return _a_minus_b_power(m - 1) * (LaurentPoly.monomial(1, 1, 0, 0) - LaurentPoly.monomial(1, 0, 1, 0))


class RingElem:
    """A value num / (A - B)^k in canonical form."""

    __slots__ = ("num", "k")

    def __init__(self, num: LaurentPoly, k: int = 0):
        self.num = num
        self.k = k

    @classmethod
    def from_int(cls, n: int) -> RingElem:
        return cls(LaurentPoly.monomial(n), 0)

    @classmethod
    def monomial(cls, coeff: int = 1, e_a_upper: int = 0, e_b: int = 0, e_a: int = 0) -> RingElem:
        return cls(LaurentPoly.monomial(coeff, e_a_upper, e_b, e_a), 0)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @staticmethod
    def _coerce(value: RingElem | int) -> RingElem:
        return RingElem.from_int(value) if isinstance(value, int) else value

    def __add__(self, other: RingElem | int) -> RingElem:
        other = self._coerce(other)
        k = max(self.k, other.k)
        num = self.num * _a_minus_b_power(k - self.k) + other.num * _a_minus_b_power(k - other.k)
        return reduce(num, k)

    __radd__ = __add__

    def __neg__(self) -> RingElem:
        return RingElem(-self.num, self.k)

    def __sub__(self, other: RingElem | int) -> RingElem:
        return self + (-self._coerce(other))

    def __rsub__(self, other: RingElem | int) -> RingElem:
        return self._coerce(other) - self

    def __mul__(self, other: RingElem | int) -> RingElem:
        other = self._coerce(other)
        return reduce(self.num * other.num, self.k + other.k)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RingElem:
        if exponent < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = RingElem.from_int(1)
        base: RingElem = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = RingElem.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.k == other.k and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.num, self.k))

    def render(self) -> str:
        if self.k == 0:
            return self.num.render()
        return f"({self.num.render()})/(A-B)^{self.k}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RingElem({self.render()})"

    def to_sympy(self) -> sympy.Expr:
        """Export as a sympy rational expression in the symbols A, B, a."""
        upper, b_sym, a_sym = SYMBOLS["A"], SYMBOLS["B"], SYMBOLS["a"]
        numerator = sympy.Add(
            *(sympy.Integer(c) * upper**i * b_sym**j * a_sym**l for (i, j, l), c in self.num)
        )
        return numerator / (upper - b_sym) ** self.k


def reduce(num: LaurentPoly, k: int) -> RingElem:
    """Cancel factors of (A - B) until the value is canonical."""
    if k < 0:
        raise ValueError(f"denominator power must be nonnegative, got {k}")
    if num.is_zero():
        return RingElem(num, 0)
    while k > 0:
        quotient = num.divide_by_a_minus_b()
        if quotient is None:
            break
        num, k = quotient, k - 1
    return RingElem(num, k)


def arith(op: str, x: RingElem, y: RingElem | None = None) -> RingElem:
    """Dispatch a named ring operation."""
    if op == "neg":
        return -x
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown ring operation: {op}")


def _build_constants() -> dict[str, RingElem]:
    upper = LaurentPoly.monomial(1, 1, 0, 0)
    lower = LaurentPoly.monomial(1, 0, 1, 0)
    a = LaurentPoly.monomial(1, 0, 0, 1)
    a_inv = LaurentPoly.monomial(1, 0, 0, -1)
    diff = upper - lower
    return {
        "mu": reduce(a - a_inv + diff, 1),
        "bigO": reduce(upper * a_inv - lower * a - (upper + lower) * diff, 1),
        "gamma": reduce(lower * lower * a - upper * upper * a_inv + upper * lower * diff, 1),
        "xi": reduce(lower * lower * lower * a - upper * upper * upper * a_inv, 1),
        "a": RingElem(a),
        "ainv": RingElem(a_inv),
        "A": RingElem(upper),
        "B": RingElem(lower),
        "one": RingElem.from_int(1),
        "zero": RingElem.from_int(0),
    }


_CONSTANTS = _build_constants()


def constant(name: str) -> RingElem:
    """Return a named structure constant (mu, bigO, gamma, xi) or generator."""
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise UnknownConstant(name) from None


MU = constant("mu")
BIG_O = constant("bigO")
GAMMA = constant("gamma")
XI = constant("xi")
ONE = constant("one")
ZERO = constant("zero")
VAR_A = constant("A")
VAR_B = constant("B")
VAR_SMALL_A = constant("a")


class UniLaurent:
    """Laurent polynomial in the single variable A."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms: Mapping[int, int] = MappingProxyType({e: c for e, c in (terms or {}).items() if c != 0})

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> UniLaurent:
        return cls({exp: coeff})

    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: UniLaurent) -> UniLaurent:
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return UniLaurent(merged)

    def __neg__(self) -> UniLaurent:
        return UniLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: UniLaurent) -> UniLaurent:
        return self + (-other)

    def __mul__(self, other: UniLaurent | int) -> UniLaurent:
        if isinstance(other, int):
            return UniLaurent({e: c * other for e, c in self._terms.items()})
        product: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return UniLaurent(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniLaurent:
        result = UniLaurent.monomial(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, exp: int) -> UniLaurent:
        """Multiply by A^exp."""
        return UniLaurent({e + exp: c for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniLaurent.monomial(other)
        if not isinstance(other, UniLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def divide_by_a_minus_a_inverse(self) -> UniLaurent | None:
        """Exact quotient by (A - A^-1) = (A^2 - 1)/A, or None."""
        if not self._terms:
            return self
        low = min(self._terms) + 1
        high = max(self._terms) + 1
        coeffs = [self._terms.get(e - 1, 0) for e in range(low, high + 1)]
        quotient = [0] * max(len(coeffs) - 2, 0)
        for k in range(len(coeffs) - 1, 1, -1):
            quotient[k - 2] = coeffs[k]
            coeffs[k - 2] += coeffs[k]
            coeffs[k] = 0
        if any(coeffs[:2]):
            return None
        return UniLaurent({low + k: c for k, c in enumerate(quotient)})

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_render_term(c, (("A", e),)) for e, c in sorted(self._terms.items(), reverse=True))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"UniLaurent({self.render()})"


DELTA = UniLaurent({1: -1, -1: -1})


class Specialization(str, Enum):
    """Substitutions B -> A^-1 and a -> sign * A^power."""

    PLANAR_TEST = "planar_test"
    BRACKET = "bracket"
    YAMADA = "yamada"

    @property
    def a_image(self) -> tuple[int, int]:
        """(sign, power) of the image of a."""
        return {
            Specialization.PLANAR_TEST: (1, 1),
            Specialization.BRACKET: (-1, 3),
            Specialization.YAMADA: (1, 2),
        }[self]


def specialize(x: RingElem, spec: Specialization | str) -> UniLaurent:
    """Apply a specialization homomorphism and clear the denominator exactly."""
    spec = Specialization(spec)
    sign, power = spec.a_image
    image: dict[int, int] = {}
    for (i, j, l), c in x.num:
        e = i - j + power * l
        image[e] = image.get(e, 0) + c * (sign if l % 2 else 1)
    result: UniLaurent | None = UniLaurent(image)
    for _ in range(x.k):
        assert result is not None
        result = result.divide_by_a_minus_a_inverse()
        if result is None:
            raise NonExactSpecialization(spec.value)
    assert result is not None
    return result


def eval_rational(x: RingElem, point: Point) -> Fraction:
    """Evaluate exactly at rational values of (A, B, a)."""
    upper, lower, a = (Fraction(v) for v in point)
    if upper == lower or 0 in (upper, lower, a):
        raise PoleAtPoint(point)
    total = Fraction(0)
    for (i, j, l), c in x.num:
        total += c * upper**i * lower**j * a**l
    return total / (upper - lower) ** x.k


SYMBOLS: dict[str, sympy.Symbol] = {
    name: sympy.Symbol(name) for name in ("A", "B", "a", "ainv", "mu", "bigO", "gamma", "xi")
}

# Only what the parser transformations emit; any other name becomes a free Symbol.
_PARSE_GLOBALS = {
    "Integer": sympy.Integer,
    "Float": sympy.Float,
    "Rational": sympy.Rational,
    "Symbol": sympy.Symbol,
    "Function": sympy.Function,
}


def _from_sympy(node: sympy.Expr) -> RingElem:
    if node.is_Integer:
        return RingElem.from_int(int(node))
    if node.is_Symbol:
        return constant(str(node))
    if node.is_Add:
        total = ZERO
        for arg in node.args:
            total = total + _from_sympy(arg)
        return total
    if node.is_Mul:
        product = ONE
        for arg in node.args:
            product = product * _from_sympy(arg)
        return product
    if node.is_Pow:
        base, exp = node.args
        if not exp.is_Integer:
            raise ValueError(f"non-integer power in weight: {node}")
        if int(exp) >= 0:
            return _from_sympy(base) ** int(exp)
        if base.is_Symbol and str(base) in ("A", "B", "a"):
            index = ("A", "B", "a").index(str(base))
            exps = [0, 0, 0]
            exps[index] = int(exp)
            return RingElem.monomial(1, *exps)
        raise ValueError(f"negative power of a non-monomial in weight: {node}")
    raise ValueError(f"unsupported weight expression: {node}")


def parse_weight(text: str) -> RingElem:
    """Parse a weight expression such as ``-(A+B)`` or ``1 - A*B`` into the ring."""
    try:
        expr = parse_expr(text, local_dict=dict(SYMBOLS), global_dict=dict(_PARSE_GLOBALS))
    except (SyntaxError, TypeError, NameError, TokenError) as e:
        raise ValueError(f"cannot parse weight {text!r}: {e}") from e
    unknown = {str(s) for s in expr.free_symbols} - set(SYMBOLS)
    if unknown:
        raise UnknownConstant(sorted(unknown)[0])
    return _from_sympy(expr)
