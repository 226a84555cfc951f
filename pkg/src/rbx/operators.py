"""Rota-Baxter operators on Q[x]: representations, identity checks, canonical form.

Two representations live here.  :class:`AnalyticOp` is a moduli point
``(a, r)`` standing for the operator "multiply by the nonzero polynomial r,
then integrate with antiderivative vanishing at a".  :class:`TruncOp` is a
generic linear operator cut off at the monomials ``x^0 .. x^N``, stored as
the list of their images.

``operator_to_point`` recovers the moduli point from a truncation: the
multiplier comes from differentiating the images, the base point is the
unique common rational root of the low-degree images, and the result is
re-verified by an exact round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, RatLike, as_rat, format_rational


class TruncationTooSmall(ValueError):
    """The truncation does not reach every monomial image the check needs."""


class NotMultiplierType(ValueError):
    """Differentiating the images does not yield multiplication by one fixed polynomial."""


class ZeroMultiplier(ValueError):
    """The recovered (or supplied) multiplier is the zero polynomial."""


class NoRationalBasePoint(ValueError):
    """No rational point kills every low-degree image; the base point is irrational or absent."""


class Inconsistent(ValueError):
    """Round-trip verification of the recovered operator failed."""


@dataclass(frozen=True)
class AnalyticOp:
    """Moduli point (a, r): multiply by nonzero r, then integrate, vanishing at a."""

    a: Fraction
    r: Poly

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rat(self.a))
        if self.r.is_zero():
            raise ZeroMultiplier("analytic operators need a nonzero multiplier")

    def apply(self, f: Poly) -> Poly:
        """Image of f; always vanishes at the base point."""
        return (self.r * f).integrate_at(self.a)

    def truncate(self, n: int) -> "TruncOp":
        """Restrict to the monomials x^0 .. x^n."""
        if n < 0:
            raise ValueError("truncation degree must be non-negative")
        return TruncOp(tuple(self.apply(Poly.monomial(i)) for i in range(n + 1)))

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "r": self.r.to_text()}

    @classmethod
    def from_json(cls, data: dict) -> "AnalyticOp":
        return cls(as_rat(data["a"]), Poly.from_text(data["r"]))


@dataclass(frozen=True)
class TruncOp:
    """Linear operator known only through its images of x^0 .. x^N."""

    images: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if not self.images:
            raise ValueError("a truncated operator needs at least the image of 1")
        object.__setattr__(self, "images", tuple(self.images))

    @property
    def n_max(self) -> int:
        return len(self.images) - 1

    def apply(self, f: Poly) -> Poly:
        """Extend the monomial images by linearity."""
        if f.degree > self.n_max:
            raise TruncationTooSmall(
                f"image of degree-{f.degree} argument needs truncation {f.degree}, have {self.n_max}"
            )
        acc = Poly.zero()
        for i, c in enumerate(f.coeffs):
            if c:
                acc = acc + self.images[i] * c
        return acc

    def to_json(self) -> dict:
        return {"N": self.n_max, "images": [p.to_text() for p in self.images]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncOp":
        images = tuple(Poly.from_text(t) for t in data["images"])
        if int(data["N"]) != len(images) - 1:
            raise ValueError("truncation degree does not match the image count")
        return cls(images)


def rb_residual(op: TruncOp, weight: RatLike, n: int, m: int) -> Poly:
    """Defect of the weight-``weight`` Rota-Baxter identity on the pair (x^n, x^m).

    Returns R(x^n)R(x^m) - R(R(x^n)x^m + x^n R(x^m)) - weight*R(x^(n+m));
    the zero polynomial exactly when the identity holds on this pair.
    """
    if n < 0 or m < 0:
        raise ValueError("monomial exponents must be non-negative")
    weight = as_rat(weight)
    top = op.n_max
    if n > top or m > top or n + m > top:
        raise TruncationTooSmall(f"pair ({n},{m}) is out of reach at truncation {top}")
    rn, rm = op.images[n], op.images[m]
    if rn.degree + m > top or rm.degree + n > top:
        raise TruncationTooSmall(
            f"inner images for pair ({n},{m}) exceed truncation {top}"
        )
    inner = rn * Poly.monomial(m) + rm * Poly.monomial(n)
    residual = rn * rm - op.apply(inner)
    if weight:
        residual = residual - op.apply(Poly.monomial(n + m)) * weight
    return residual


def first_rb_failure(op: TruncOp, weight: RatLike, d: int) -> "tuple[int, int] | None":
    """First pair (n, m), n <= m <= d, where the identity fails; None if all hold."""
    for n in range(d + 1):
        for m in range(n, d + 1):
            if not rb_residual(op, weight, n, m).is_zero():
                return (n, m)
    return None


def is_rb_upto(op: TruncOp, weight: RatLike, d: int) -> bool:
    """True iff the weight-``weight`` identity holds on all pairs of degree <= d.

    By bilinearity this certifies the identity for every pair of polynomials
    of degree at most d.
    """
    return first_rb_failure(op, weight, d) is None


def odd_halving_example(n: int) -> TruncOp:
    """The non-injective weight-zero example: kills even powers, halves odd ones.

    x^(2t) -> 0 and x^(2t+1) -> x^(2t+2)/(2t+2).
    """
    images = tuple(
        Poly.monomial(i + 1, Fraction(1, i + 1)) if i % 2 else Poly.zero()
        for i in range(n + 1)
    )
    return TruncOp(images)


def derived_multiplier(op: TruncOp) -> Poly:
    """The fixed polynomial r with d/dx of R(x^n) equal to r*x^n for all rows.

    Raises :class:`NotMultiplierType` when some row fails the check and
    :class:`ZeroMultiplier` when all rows agree on r = 0.
    """
    if op.n_max < 1:
        raise TruncationTooSmall("multiplier extraction needs at least the images of 1 and x")
    r = op.images[0].derive()
    for n in range(op.n_max + 1):
        if op.images[n].derive() != r * Poly.monomial(n):
            raise NotMultiplierType(
                f"derivative of image {n} is not the row of a fixed multiplier"
            )
    if r.is_zero():
        raise ZeroMultiplier("derived multiplier is zero")
    return r


def operator_to_point(op: TruncOp) -> AnalyticOp:
    """Canonical form: recover the moduli point (a, r) from a truncation.

    The base point must be a common rational root of the images of
    x^0 .. x^k (k the multiplier degree); at most one such point can exist.
    The recovered operator is re-truncated and compared exactly.
    """
    r = derived_multiplier(op)
    k = r.degree
    if op.n_max < k:
        raise TruncationTooSmall(
            f"need images up to degree {k} to pin the base point, have {op.n_max}"
        )
    good = [
        a
        for a in op.images[0].rational_roots()
        if all(op.images[j](a) == 0 for j in range(1, k + 1))
    ]
    if not good:
        raise NoRationalBasePoint("no rational point kills every low-degree image")
    if len(good) > 1:  # impossible: the 1/(i+j+1) vectors form a basis
        raise AssertionError(f"base point must be unique, got {good}")
    candidate = AnalyticOp(good[0], r)
    if candidate.truncate(op.n_max) != op:
        raise Inconsistent("recovered moduli point does not reproduce the truncation")
    return candidate
