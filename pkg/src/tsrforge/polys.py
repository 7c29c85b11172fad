"""Dense univariate polynomials over a Field, plus the canonical text format.

Coefficient index i holds the coefficient of X^i; no trailing zeros are
stored.  The zero polynomial has an empty coefficient tuple and degree
NEG_INF, a sentinel below every integer so deg(a*b) = deg a + deg b holds
formally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DivisionByZeroPoly
from .fields import Field, FieldElement, format_element

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Polynomial:
    field: Field
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1].is_zero():
            raise ValueError("trailing zero coefficient; use Polynomial.make")

    @staticmethod
    def make(field: Field, coeffs: Iterable) -> "Polynomial":
        """Build from little-endian coefficients (ints or FieldElements), trimming."""
        elems = [field.element(c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        return Polynomial(field, tuple(elems))

    @staticmethod
    def zero(field: Field) -> "Polynomial":
        return Polynomial(field, ())

    @staticmethod
    def one(field: Field) -> "Polynomial":
        return Polynomial.make(field, [1])

    @staticmethod
    def x(field: Field) -> "Polynomial":
        return Polynomial.make(field, [0, 1])

    @staticmethod
    def constant(field: Field, c) -> "Polynomial":
        return Polynomial.make(field, [c])

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    @property
    def constant_term(self) -> FieldElement:
        return self.coeff(0)

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.make(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial.make(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return Polynomial.make(self.field, out)

    def scale(self, c: FieldElement) -> "Polynomial":
        return Polynomial.make(self.field, [a * c for a in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by X^k (k >= 0)."""
        if self.is_zero() or k == 0:
            return self
        return Polynomial(self.field, tuple([self.field.zero()] * k) + self.coeffs)

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.leading.inverse())

    def reverse(self) -> "Polynomial":
        """Coefficient reversal X^deg * f(1/X); trims if f(0) = 0."""
        return Polynomial.make(self.field, list(reversed(self.coeffs)))

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, g: "Polynomial") -> "Polynomial":
        """f(g(X)) by Horner over polynomials."""
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + Polynomial.constant(self.field, c)
        return acc

    def pow(self, e: int) -> "Polynomial":
        result = Polynomial.one(self.field)
        acc = self
        while e:
            if e & 1:
                result = result * acc
            e >>= 1
            acc = acc * acc
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial.make(
            self.field,
            [self.coeffs[i] * self.field.element(i) for i in range(1, len(self.coeffs))],
        )

    def int_encoding(self) -> int:
        """Sum of int(c_i) * q^i; the total order used for candidate scans."""
        q = self.field.order
        return sum(c.int_value * q**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r} over {self.field!r})"


def poly_divrem(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """(quot, rem) with a = quot*b + rem, deg rem < deg b."""
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    field = a.field
    if a.degree < b.degree:
        return Polynomial.zero(field), a
    inv_lead = b.leading.inverse()
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    quot = [field.zero()] * (len(rem) - db)
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if c.is_zero():
            continue
        c = c * inv_lead
        quot[top - db] = c
        for i, bc in enumerate(b.coeffs):
            rem[top - db + i] = rem[top - db + i] - c * bc
    return Polynomial.make(field, quot), Polynomial.make(field, rem)


def poly_mod(a: Polynomial, b: Polynomial) -> Polynomial:
    return poly_divrem(a, b)[1]


def poly_modpow(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    """base^e mod modulus by square-and-multiply."""
    if modulus.degree < 1:
        raise DivisionByZeroPoly("modulus must have degree >= 1")
    result = Polynomial.one(base.field)
    acc = poly_mod(base, modulus)
    while e:
        if e & 1:
            result = poly_mod(result * acc, modulus)
        e >>= 1
        acc = poly_mod(acc * acc, modulus)
    return result


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
    return a.monic() if not a.is_zero() else a


# --- canonical text format ---
#
# Terms in decreasing degree joined by " + "; powers written with ^;
# extension-field coefficients printed in the generator symbol a, wrapped in
# parentheses when they have more than one term (e.g. "x^3 + x^2 + (a+1)").
# The parser also accepts the unparenthesized trailing style "x + 2a+1" by
# summing constant contributions term by term.

def format_poly(p: Polynomial, var: str = "x", gen_symbol: str = "a") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        cs = format_element(c, gen_symbol)
        composite = "+" in cs or "-" in cs
        if i == 0:
            parts.append(f"({cs})" if composite else cs)
            continue
        xpart = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            parts.append(xpart)
        elif composite:
            parts.append(f"({cs}){xpart}")
        else:
            parts.append(f"{cs}{xpart}")
    return " + ".join(parts)


def _parse_coefficient(text: str, field: Field, gen_symbol: str) -> FieldElement:
    """Parse a coefficient expression like '2a^2+a+1', '3', '' (meaning 1)."""
    text = text.strip().replace(" ", "")
    if text in ("", "+"):
        return field.one()
    if text == "-":
        return -field.one()
    total = field.zero()
    for sign, term in re.findall(r"([+-]?)([^+-]+)", text):
        neg = sign == "-"
        m = re.fullmatch(rf"(\d*)\*?(?:{re.escape(gen_symbol)})(?:\^(\d+))?", term)
        if m:
            mult = int(m.group(1)) if m.group(1) else 1
            exp = int(m.group(2)) if m.group(2) else 1
            contrib = field.element([0] * exp + [mult])
        elif term.isdigit():
            contrib = field.element(int(term) % field.characteristic)
        else:
            raise ValueError(f"cannot parse coefficient term {term!r}")
        total = total - contrib if neg else total + contrib
    return total


def parse_poly(text: str, field: Field, var: str = "x", gen_symbol: str = "a") -> Polynomial:
    """Inverse of format_poly; accepts the looser unparenthesized table style.

    A constant tail like 'x^3 + x^2 + 2a + 2' sums term by term, so
    parentheses around composite coefficients are optional on input.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if var == var.lower():
        s = s.replace(var.upper(), var)
    if s == "0":
        return Polynomial.zero(field)
    # split into top-level signed chunks, keeping parenthesized groups intact
    chunks: list[tuple[bool, str]] = []
    depth = 0
    cur = ""
    neg = False
    for ch in s:
        if ch == "(":
            depth += 1
            cur += ch
        elif ch == ")":
            depth -= 1
            cur += ch
        elif ch in "+-" and depth == 0:
            if cur:
                chunks.append((neg, cur))
                cur = ""
                neg = ch == "-"
            else:
                neg = (ch == "-") != neg
        else:
            cur += ch
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    if cur:
        chunks.append((neg, cur))
    coeff_acc: dict[int, FieldElement] = {}

    def add(i: int, c: FieldElement, negate: bool) -> None:
        if negate:
            c = -c
        coeff_acc[i] = coeff_acc.get(i, field.zero()) + c

    vre = re.compile(rf"^(?P<coeff>.*?)\*?{re.escape(var)}(?:\^(?P<exp>\d+))?$")
    for negate, chunk in chunks:
        m = vre.match(chunk)
        if m:
            coeff_text = m.group("coeff")
            exp = int(m.group("exp")) if m.group("exp") else 1
            if coeff_text.startswith("(") and coeff_text.endswith(")"):
                coeff_text = coeff_text[1:-1]
            add(exp, _parse_coefficient(coeff_text, field, gen_symbol), negate)
        else:
            inner = chunk[1:-1] if chunk.startswith("(") and chunk.endswith(")") else chunk
            add(0, _parse_coefficient(inner, field, gen_symbol), negate)
    top = max(coeff_acc) if coeff_acc else 0
    return Polynomial.make(field, [coeff_acc.get(i, field.zero()) for i in range(top + 1)])
