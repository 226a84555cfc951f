"""Generators acting on the moduli space of analytic operators, and words in them.

Four generator families, applied left-to-right when composed into words:

* :class:`Shear` (wire tag ``HB``): (a, r) -> (a, r + r(b)*s) with s(b) = 0,
* :class:`ShearSquared` (``HB2``): (a, r) -> (a, r + r(b)^2*s) with s(b) = 0,
* :class:`Translate` (``GA``): (a, r(x)) -> (a - nu, r(x + nu)),
* :class:`Dilate` (``GM``): (a, r(x)) -> (a/mu, r(mu*x)), mu nonzero.

Shears preserve the fiber value r(b) at their own base point, which is what
makes their per-generator inverses (negate s) exact.  Translate and Dilate
realise conjugation by the affine substitutions x -> x + nu and x -> mu*x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .operators import AnalyticOp
from .poly import Poly, RatLike, as_rat, format_rational


class InvalidGenerator(ValueError):
    """Generator invariant violated at construction (s(b) != 0, or mu = 0)."""


@dataclass(frozen=True)
class Shear:
    """Add r(b) times a polynomial vanishing at b to the multiplier."""

    b: Fraction
    s: Poly
    tag = "HB"

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", as_rat(self.b))
        if self.s(self.b) != 0:
            raise InvalidGenerator(f"shear direction must vanish at {self.b}")

    def apply(self, op: AnalyticOp) -> AnalyticOp:
        return AnalyticOp(op.a, op.r + self.s * op.r(self.b))

    def inverse(self) -> "Shear":
        return Shear(self.b, -self.s)


@dataclass(frozen=True)
class ShearSquared:
    """Add r(b)^2 times a polynomial vanishing at b to the multiplier."""

    b: Fraction
    s: Poly
    tag = "HB2"

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", as_rat(self.b))
        if self.s(self.b) != 0:
            raise InvalidGenerator(f"shear direction must vanish at {self.b}")

    def apply(self, op: AnalyticOp) -> AnalyticOp:
        return AnalyticOp(op.a, op.r + self.s * op.r(self.b) ** 2)

    def inverse(self) -> "ShearSquared":
        return ShearSquared(self.b, -self.s)


@dataclass(frozen=True)
class Translate:
    """Conjugation by x -> x + nu."""

    nu: Fraction
    tag = "GA"

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", as_rat(self.nu))

    def apply(self, op: AnalyticOp) -> AnalyticOp:
        return AnalyticOp(op.a - self.nu, op.r.compose_affine(1, self.nu))

    def inverse(self) -> "Translate":
        return Translate(-self.nu)


@dataclass(frozen=True)
class Dilate:
    """Conjugation by x -> mu*x, mu nonzero."""

    mu: Fraction
    tag = "GM"

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", as_rat(self.mu))
        if self.mu == 0:
            raise InvalidGenerator("dilation factor must be nonzero")

    def apply(self, op: AnalyticOp) -> AnalyticOp:
        return AnalyticOp(op.a / self.mu, op.r.compose_affine(self.mu, 0))

    def inverse(self) -> "Dilate":
        return Dilate(1 / self.mu)


Generator = Union[Shear, ShearSquared, Translate, Dilate]
Word = tuple[Generator, ...]


def apply_gen(gen: Generator, op: AnalyticOp) -> AnalyticOp:
    return gen.apply(op)


def apply_word(word: Iterable[Generator], op: AnalyticOp) -> AnalyticOp:
    """Left-to-right application of a word."""
    for gen in word:
        op = gen.apply(op)
    return op


def apply_word_tuple(word: Iterable[Generator], ops: Sequence[AnalyticOp]) -> list[AnalyticOp]:
    """Diagonal action: the same word applied to every member."""
    out = list(ops)
    for gen in word:
        out = [gen.apply(op) for op in out]
    return out


def inverse_word(word: Sequence[Generator]) -> Word:
    """Word undoing ``word``: reversed order, each generator inverted."""
    return tuple(gen.inverse() for gen in reversed(word))


def fiber_value(op: AnalyticOp, b: RatLike) -> Fraction:
    """Value of the multiplier at b; invariant under shears based at b."""
    return op.r(b)


def orbit_chart(op: AnalyticOp, b: RatLike) -> tuple[Fraction, Fraction]:
    """The pair (a, r(b)); both coordinates are fixed by every shear based at b."""
    return (op.a, op.r(b))


def affine_orbit_word(op1: AnalyticOp, op2: AnalyticOp) -> "Word | None":
    """A Translate-then-Dilate word carrying op1 to op2, or None.

    The dilation factor is pinned up to sign by the leading-coefficient
    ratio, the translation by the base points; each candidate is verified
    by exact application before being returned.
    """
    k1, k2 = op1.r.degree, op2.r.degree
    if k1 != k2:
        return None
    ratio = op2.r.coeffs[-1] / op1.r.coeffs[-1]
    for mu in _rational_kth_roots(ratio, k1):
        nu = op1.a - mu * op2.a
        word: Word = (Translate(nu), Dilate(mu))
        if apply_word(word, op1) == op2:
            return word
    return None


def _int_kth_root(n: int, k: int) -> "int | None":
    """Exact non-negative k-th root of n >= 0, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or k == 1:
        return n
    x = max(1, round(n ** (1.0 / k)))
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x if x**k == n else None


def _rational_kth_roots(q: Fraction, k: int) -> list[Fraction]:
    """All rational k-th roots of q; two for even k, one for odd, none otherwise."""
    if k == 0:
        return [Fraction(1)] if q == 1 else []
    if q == 0:
        return [Fraction(0)]
    if q < 0 and k % 2 == 0:
        return []
    num = _int_kth_root(abs(q.numerator), k)
    den = _int_kth_root(q.denominator, k)
    if num is None or den is None:
        return []
    root = Fraction(num, den)
    if q < 0:
        return [-root]
    return [root, -root] if k % 2 == 0 else [root]


# -- wire format -----------------------------------------------------------

def generator_to_json(gen: Generator) -> dict:
    if isinstance(gen, (Shear, ShearSquared)):
        return {"type": gen.tag, "b": format_rational(gen.b), "s": gen.s.to_text()}
    if isinstance(gen, Translate):
        return {"type": gen.tag, "nu": format_rational(gen.nu)}
    if isinstance(gen, Dilate):
        return {"type": gen.tag, "mu": format_rational(gen.mu)}
    raise TypeError(f"not a generator: {gen!r}")


def generator_from_json(data: dict) -> Generator:
    kind = data["type"]
    if kind == "HB":
        return Shear(as_rat(data["b"]), Poly.from_text(data["s"]))
    if kind == "HB2":
        return ShearSquared(as_rat(data["b"]), Poly.from_text(data["s"]))
    if kind == "GA":
        return Translate(as_rat(data["nu"]))
    if kind == "GM":
        return Dilate(as_rat(data["mu"]))
    raise ValueError(f"unknown generator type {kind!r}")


def word_to_json(word: Sequence[Generator]) -> list[dict]:
    return [generator_to_json(gen) for gen in word]


def word_from_json(data: Sequence[dict]) -> Word:
    return tuple(generator_from_json(item) for item in data)
