"""Gaussian rationals: complex numbers with exact rational parts."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "parse_scalar", "format_scalar", "to_scalar"]

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


@dataclass(frozen=True)
class Scalar:
    """Exact complex number ``re + im*i`` with ``Fraction`` parts.

    ``Fraction`` already keeps lowest terms with a positive denominator, so
    dataclass equality is structural equality of canonical forms.
    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other):
        other = to_scalar(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = to_scalar(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return to_scalar(other) - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = to_scalar(other)
        return Scalar(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = to_scalar(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar((self.re * other.re + self.im * other.im) / norm,
                      (self.im * other.re - self.re * other.im) / norm)

    def __rtruediv__(self, other):
        return to_scalar(other) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> Scalar:
        return Scalar(self.re, -self.im)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def to_scalar(value) -> Scalar:
    """Coerce ints, Fractions, Gaussian-integer complex numbers or literals."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Rational)):
        return Scalar(Fraction(value))
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, complex):
        if value.real != int(value.real) or value.imag != int(value.imag):
            raise TypeError(f"only Gaussian-integer complex values are exact: {value!r}")
        return Scalar(Fraction(int(value.real)), Fraction(int(value.imag)))
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def _parse_rational(text: str, literal: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ValueError(f"malformed scalar literal {literal!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {literal!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(literal: str) -> Scalar:
    """Parse ``"3/4"``, ``"-i"``, ``"2/3i"``, ``"1/2-5i"`` and similar."""
    s = "".join(literal.split())
    if not s:
        raise ValueError("empty scalar literal")
    if not s.endswith("i"):
        return Scalar(_parse_rational(s, literal))
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_text, imag_text = body[:split], body[split:]
    else:
        real_text, imag_text = "", body
    if imag_text in ("", "+", "-"):
        imag = Fraction(-1 if imag_text == "-" else 1)
    else:
        imag = _parse_rational(imag_text, literal)
    real = _parse_rational(real_text, literal) if real_text else Fraction(0)
    return Scalar(real, imag)


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar) -> str:
    """Canonical text: lowest terms, zero parts suppressed, ``"0"`` for zero."""
    if x.im == 0:
        return _fmt_fraction(x.re)
    if x.re == 0:
        if x.im == 1:
            return "i"
        if x.im == -1:
            return "-i"
        return _fmt_fraction(x.im) + "i"
    sign = "+" if x.im > 0 else "-"
    return f"{_fmt_fraction(x.re)}{sign}{_fmt_fraction(abs(x.im))}i"
