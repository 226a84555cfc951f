"""Exact univariate polynomial arithmetic over the rationals.

A :class:`Poly` is an immutable dense coefficient tuple over
``fractions.Fraction``; index ``i`` holds the coefficient of ``x**i``.
The zero polynomial is the empty tuple and its degree is the sentinel
``NEG_INF`` rather than any integer, so degree arithmetic can never be
silently wrong.

The module also owns the polynomial text grammar used by the CLI and the
JSON payloads: a sum of terms ``[+-] coef [*] [x [^ exp]]`` with ``coef``
a rational literal ``int[/posint]``, whitespace ignored.  ``to_text`` and
``from_text`` round-trip bit-exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Union

Rat = Fraction

RatLike = Union[Fraction, int, str]

NEG_INF = float("-inf")


class PolyParseError(ValueError):
    """Polynomial text does not match the term grammar."""


class DuplicateAbscissa(ValueError):
    """Interpolation nodes share an x-value."""


class ZeroPolynomial(ValueError):
    """The operation requires a nonzero polynomial."""


def as_rat(value: RatLike) -> Fraction:
    """Coerce an int, str or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise PolyParseError(f"bad rational literal {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [as_rat(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def constant(cls, c: RatLike) -> "Poly":
        return cls((as_rat(c),))

    @classmethod
    def monomial(cls, exp: int, coef: RatLike = 1) -> "Poly":
        if exp < 0:
            raise ValueError("monomial exponent must be non-negative")
        return cls((Fraction(0),) * exp + (as_rat(coef),))

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> "int | float":
        """Degree of the polynomial; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, n: int) -> Fraction:
        """Coefficient of x**n (zero beyond the stored length)."""
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly.zero()
            # Clear denominators first: integer convolution avoids a gcd
            # normalisation per partial product.
            n1, d1 = self._int_form()
            n2, d2 = other._int_form()
            out = [0] * (len(n1) + len(n2) - 1)
            for i, ci in enumerate(n1):
                if not ci:
                    continue
                for j, cj in enumerate(n2):
                    out[i + j] += ci * cj
            den = d1 * d2
            return Poly(tuple(Fraction(c, den) for c in out))
        if isinstance(other, (Fraction, int)):
            q = as_rat(other)
            if q == 0:
                return Poly.zero()
            return Poly(tuple(c * q for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _int_form(self) -> tuple[list[int], int]:
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        return [int(c * den) for c in self.coeffs], den

    # -- calculus and evaluation ------------------------------------------

    def derive(self) -> "Poly":
        """Formal derivative: x**n -> n*x**(n-1)."""
        return Poly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def integrate_at(self, a: RatLike) -> "Poly":
        """Antiderivative normalised to vanish at ``a``.

        ``integrate_at(0)`` is the constant-free antiderivative.
        """
        anti = Poly((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))
        return anti - Poly.constant(anti(as_rat(a)))

    def __call__(self, t: RatLike) -> Fraction:
        """Exact Horner evaluation."""
        t = as_rat(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose_affine(self, mu: RatLike, nu: RatLike) -> "Poly":
        """Return p(mu*x + nu)."""
        lin = Poly((as_rat(nu), as_rat(mu)))
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly.constant(c)
        return acc

    # -- root finding ------------------------------------------------------

    def rational_roots(self) -> list[Fraction]:
        """All rational roots, multiplicity discarded, ascending.

        Clears denominators and enumerates divisor candidates p/q with p
        dividing the constant and q the leading integer coefficient.
        """
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has every point as a root")
        roots: set[Fraction] = set()
        cs = list(self.coeffs)
        while cs[0] == 0:
            cs.pop(0)
            roots.add(Fraction(0))
        if len(cs) > 1:
            den = 1
            for c in cs:
                den = lcm(den, c.denominator)
            ints = [int(c * den) for c in cs]
            g = 0
            for c in ints:
                g = gcd(g, c)
            ints = [c // g for c in ints]
            for p in _divisors(abs(ints[0])):
                for q in _divisors(abs(ints[-1])):
                    cand = Fraction(p, q)
                    if self(cand) == 0:
                        roots.add(cand)
                    if self(-cand) == 0:
                        roots.add(-cand)
        return sorted(roots)

    # -- text grammar ------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, highest power first."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if exp == 0:
                body = str(mag)
            else:
                xpart = "x" if exp == 1 else f"x^{exp}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "Poly":
        compact = "".join(text.split())
        if not compact:
            raise PolyParseError("empty polynomial text")
        coeffs: dict[int, Fraction] = {}
        pos = 0
        while pos < len(compact):
            m = _TERM_RE.match(compact, pos)
            if m is None or m.end() == pos:
                raise PolyParseError(f"cannot parse polynomial text at {compact[pos:]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            coef_text = m.group("coef")
            coef = as_rat(coef_text) if coef_text else Fraction(1)
            if m.group("xa") or m.group("xb"):
                exp_text = m.group("ea") or m.group("eb")
                exp = int(exp_text) if exp_text else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
            pos = m.end()
        out = [Fraction(0)] * (max(coeffs) + 1)
        for exp, c in coeffs.items():
            out[exp] = c
        return cls(tuple(out))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d+(?:/\d+)?)(?:\*?(?P<xa>x)(?:\^(?P<ea>\d+))?)?"
    r"|(?P<xb>x)(?:\^(?P<eb>\d+))?)"
)


def _divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1 by trial division."""
    if n < 1:
        raise ValueError("divisor enumeration needs a positive integer")
    small, large = [], []
    d = 1
    while d <= isqrt(n):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def lagrange(points: Iterable[tuple[RatLike, RatLike]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points.

    Raises :class:`DuplicateAbscissa` when two nodes share an x-value.
    """
    pts = [(as_rat(x), as_rat(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation nodes must have distinct x-values")
    total = Poly.zero()
    for l, (xl, yl) in enumerate(pts):
        if yl == 0:
            continue
        basis = Poly.one()
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == l:
                continue
            basis = basis * Poly((-xj, Fraction(1)))
            denom *= xl - xj
        total = total + basis * (yl / denom)
    return total


def format_rational(q: Fraction) -> str:
    """Text form of a rational, round-trips through ``as_rat``."""
    return str(q)
