"""Sparse multivariate polynomials over the rationals in variables c0, c1, ...

Terms map canonical exponent keys (sorted tuples of ``(variable, exponent)``
pairs with positive exponents) to nonzero rational coefficients; the zero
polynomial is the empty map.  Values are immutable by convention and all
operations are pure.

Products enforce a configurable total-degree cap (default 64) so a runaway
substitution raises :class:`DegreeCapExceeded` instead of hanging.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .poly import NEG_INF, Poly, RatLike, as_rat

Key = tuple[tuple[int, int], ...]

_degree_cap = 64


class DegreeCapExceeded(ArithmeticError):
    """A product term exceeded the configured total-degree cap."""


class UnassignedVariable(LookupError):
    """Substitution map does not cover a variable of the polynomial."""


def set_degree_cap(cap: int) -> None:
    global _degree_cap
    if cap < 1:
        raise ValueError("degree cap must be positive")
    _degree_cap = cap


def degree_cap() -> int:
    return _degree_cap


def _canonical_key(exps: Iterable[tuple[int, int]]) -> Key:
    merged: dict[int, int] = {}
    for var, exp in exps:
        if var < 0:
            raise ValueError("variable indices must be non-negative")
        if exp < 0:
            raise ValueError("exponents must be non-negative")
        if exp:
            merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def _key_degree(key: Key) -> int:
    return sum(e for _, e in key)


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, RatLike] | None = None):
        out: dict[Key, Fraction] = {}
        if terms:
            for key, coef in terms.items():
                q = as_rat(coef)
                if q == 0:
                    continue
                k = _canonical_key(key)
                q = out.get(k, Fraction(0)) + q if k in out else q
                if q == 0:
                    out.pop(k, None)
                else:
                    out[k] = q
        self.terms = out

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return cls()

    @classmethod
    def constant(cls, c: RatLike) -> "MPoly":
        return cls({(): c})

    @classmethod
    def variable(cls, index: int, exp: int = 1) -> "MPoly":
        return cls({((index, exp),): 1})

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def variables(self) -> set[int]:
        return {var for key in self.terms for var, _ in key}

    def total_degree(self) -> "int | float":
        if not self.terms:
            return NEG_INF
        return max(_key_degree(k) for k in self.terms)

    def coefficient(self, key: Iterable[tuple[int, int]]) -> Fraction:
        return self.terms.get(_canonical_key(key), Fraction(0))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, coef in other.terms.items():
            acc = out.get(key, Fraction(0)) + coef
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
        result = MPoly.__new__(MPoly)
        result.terms = out
        return result

    def __neg__(self) -> "MPoly":
        result = MPoly.__new__(MPoly)
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            out: dict[Key, Fraction] = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    key = _canonical_key(k1 + k2)
                    if _key_degree(key) > _degree_cap:
                        raise DegreeCapExceeded(
                            f"product term degree {_key_degree(key)} exceeds cap {_degree_cap}"
                        )
                    acc = out.get(key, Fraction(0)) + c1 * c2
                    if acc == 0:
                        out.pop(key, None)
                    else:
                        out[key] = acc
            result = MPoly.__new__(MPoly)
            result.terms = out
            return result
        if isinstance(other, (Fraction, int)):
            q = as_rat(other)
            result = MPoly.__new__(MPoly)
            result.terms = {} if q == 0 else {k: c * q for k, c in self.terms.items()}
            return result
        return NotImplemented

    __rmul__ = __mul__

    # -- substitution and evaluation ----------------------------------------

    def subst(self, var: int, repl: "MPoly") -> "MPoly":
        """Replace every occurrence of variable ``var`` by ``repl``, expanded."""
        powers: list[MPoly] = [MPoly.constant(1)]

        def power(e: int) -> MPoly:
            while len(powers) <= e:
                powers.append(powers[-1] * repl)
            return powers[e]

        out = MPoly.zero()
        for key, coef in self.terms.items():
            exp = dict(key).get(var, 0)
            if exp == 0:
                out = out + MPoly({key: coef})
            else:
                rest = tuple((v, e) for v, e in key if v != var)
                out = out + MPoly({rest: coef}) * power(exp)
        return out

    def eval_univariate(self, assign: Mapping[int, Poly]) -> Poly:
        """Substitute a univariate polynomial for every variable."""
        acc = Poly.zero()
        for key, coef in self.terms.items():
            part = Poly.constant(coef)
            for var, exp in key:
                if var not in assign:
                    raise UnassignedVariable(f"no assignment for variable c{var}")
                part = part * assign[var] ** exp
            acc = acc + part
        return acc

    def eval_at(self, assign: Mapping[int, RatLike]) -> Fraction:
        """Evaluate at a full rational assignment."""
        acc = Fraction(0)
        for key, coef in self.terms.items():
            part = coef
            for var, exp in key:
                if var not in assign:
                    raise UnassignedVariable(f"no assignment for variable c{var}")
                part *= as_rat(assign[var]) ** exp
            acc += part
        return acc

    # -- text form -----------------------------------------------------------

    def to_text(self) -> str:
        """Diagnostic text form, terms in graded-lex order."""
        if not self.terms:
            return "0"
        width = max(self.variables(), default=-1) + 1

        def sort_key(key: Key):
            dense = [0] * width
            for var, exp in key:
                dense[var] = exp
            return (-_key_degree(key), [-e for e in dense])

        parts: list[str] = []
        for key in sorted(self.terms, key=sort_key):
            coef = self.terms[key]
            mag = -coef if coef < 0 else coef
            vars_part = "*".join(
                f"c{var}" if exp == 1 else f"c{var}^{exp}" for var, exp in key
            )
            if not key:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            if not parts:
                parts.append(f"-{body}" if coef < 0 else body)
            else:
                parts.append(f" - {body}" if coef < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r})"
