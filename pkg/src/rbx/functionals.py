"""Linear functionals attached to multiplier-type operators on Q[x].

An operator R with derivative row r corresponds one-to-one to the linear
functional c(f) = R(f)(0) subject to a quadratic identity; in the
coordinates c_i = c(x^i) that identity becomes, for every pair (n, m),

    c_n c_m + sum_i (1/(i+n+1) + 1/(i+m+1)) r_i c_(i+n+m+1) = 0.

For a multiplier of degree k every coordinate c_t with t > k can be solved
for in lower coordinates (``elimination_polynomial``), reducing any instance
of the system to a polynomial in c_0 .. c_k (``reduced_equation``).  The
curve of functionals realised by an actual integration base point a is
``curve_coords`` and its symbolic form in a is ``curve_coords_symbolic``;
``satisfies_system`` / ``recover_base_point`` decide, at a finite budget,
whether a coordinate head solves the system resp. lies on the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .mpoly import MPoly
from .operators import TruncOp, TruncationTooSmall, derived_multiplier
from .poly import Poly, RatLike, as_rat


class IndexTooSmall(ValueError):
    """Coordinate index does not exceed the multiplier degree; nothing to eliminate."""


@dataclass(frozen=True)
class FunctionalCoords:
    """Coordinates c_i = c(x^i) of a linear functional, with its context multiplier."""

    r: Poly
    c: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.r.is_zero():
            raise ValueError("functional coordinates need a nonzero context multiplier")
        object.__setattr__(self, "c", tuple(as_rat(v) for v in self.c))
        if not self.c:
            raise ValueError("at least one coordinate is required")

    @property
    def length(self) -> int:
        return len(self.c)

    def pairing(self, f: Poly) -> Fraction:
        """c(f) by linearity; every monomial of f must be covered."""
        if f.degree >= self.length:
            raise TruncationTooSmall(
                f"functional of length {self.length} cannot pair with degree {f.degree}"
            )
        return sum((coef * self.c[i] for i, coef in enumerate(f.coeffs) if coef), Fraction(0))


def coords_from_operator(op: TruncOp) -> FunctionalCoords:
    """Constant terms of the images, tagged with the derived multiplier."""
    r = derived_multiplier(op)
    return FunctionalCoords(r, tuple(img.coeff(0) for img in op.images))


def curve_coords(r: Poly, a: RatLike, length: int) -> FunctionalCoords:
    """The functional realised by integration base point a: c_i = -I(r*x^i)(a)."""
    a = as_rat(a)
    return FunctionalCoords(
        r,
        tuple(-(r * Poly.monomial(i)).integrate_at(0)(a) for i in range(length)),
    )


def curve_coords_symbolic(r: Poly, length: int) -> list[Poly]:
    """Entry i is -I(r*x^i) read as a polynomial in the base point; degree i + deg r + 1."""
    if r.is_zero():
        raise ValueError("context multiplier must be nonzero")
    return [-(r * Poly.monomial(i)).integrate_at(0) for i in range(length)]


def functional_residual(fc: FunctionalCoords, f: Poly, g: Poly) -> Fraction:
    """Defect of the quadratic functional identity on the pair (f, g).

    Evaluates c(f)c(g) + c(I(rf)g + f I(rg)); zero on every pair within reach
    exactly when the coordinates come from an operator satisfying the
    weight-zero identity.
    """
    r = fc.r
    argument = (r * f).integrate_at(0) * g + f * (r * g).integrate_at(0)
    return fc.pairing(f) * fc.pairing(g) + fc.pairing(argument)


def coordinate_equation(r: Poly, n: int, m: int) -> MPoly:
    """The quadratic coordinate equation for the pair (n, m), as a polynomial in the c_i."""
    if r.is_zero():
        raise ValueError("context multiplier must be nonzero")
    if n < 0 or m < 0:
        raise ValueError("pair indices must be non-negative")
    quad = ((n, 2),) if n == m else tuple(sorted(((n, 1), (m, 1))))
    terms: dict = {quad: Fraction(1)}
    for i, ri in enumerate(r.coeffs):
        if not ri:
            continue
        coef = (Fraction(1, i + n + 1) + Fraction(1, i + m + 1)) * ri
        key = ((i + n + m + 1, 1),)
        terms[key] = terms.get(key, Fraction(0)) + coef
    return MPoly(terms)


@lru_cache(maxsize=None)
def elimination_polynomial(r: Poly, t: int) -> MPoly:
    """Express coordinate c_t in the lower coordinates c_0 .. c_(t-1).

    Solves the (n = t-1-k, m = 0) instance of the coordinate system for c_t;
    the divisor (1/t + 1/(k+1)) * lead(r) is nonzero in characteristic zero.
    """
    k = r.degree
    if r.is_zero():
        raise ValueError("context multiplier must be nonzero")
    if t <= k:
        raise IndexTooSmall(f"coordinate {t} is free; only indices above {k} are eliminable")
    eq = coordinate_equation(r, t - 1 - k, 0)
    pivot = ((t, 1),)
    divisor = eq.terms[pivot]
    rest = eq - MPoly({pivot: divisor})
    return rest * (Fraction(-1) / divisor)


def reduced_equation(r: Poly, n: int, m: int) -> MPoly:
    """Rewrite the (n, m) coordinate equation purely in c_0 .. c_k.

    Substitutes the elimination polynomials for the highest coordinate
    present, descending; each substitution only introduces lower indices.
    """
    k = r.degree
    eq = coordinate_equation(r, n, m)
    while True:
        high = max((v for v in eq.variables() if v > k), default=None)
        if high is None:
            return eq
        eq = eq.subst(high, elimination_polynomial(r, high))


def vanishes_on_curve(r: Poly, n: int, m: int) -> bool:
    """True iff the reduced (n, m) equation is identically zero along the curve.

    Substitutes the symbolic curve coordinates and checks for the zero
    polynomial in the base-point variable.
    """
    g = reduced_equation(r, n, m)
    if g.is_zero():
        return True
    entries = curve_coords_symbolic(r, r.degree + 1)
    return g.eval_univariate(dict(enumerate(entries))).is_zero()


def satisfies_system(r: Poly, head: Sequence[RatLike], budget: int = 8) -> bool:
    """Decide membership of a coordinate head in the solution set, at a finite budget.

    The head (length deg r + 1) extends uniquely via the elimination
    polynomials; membership holds iff every coordinate equation with
    n, m <= budget is satisfied by the extension.
    """
    k = r.degree
    if r.is_zero():
        raise ValueError("context multiplier must be nonzero")
    if len(head) != k + 1:
        raise ValueError(f"head must have length {k + 1}, got {len(head)}")
    coords: dict[int, Fraction] = {i: as_rat(v) for i, v in enumerate(head)}
    for t in range(k + 1, 2 * budget + k + 2):
        coords[t] = elimination_polynomial(r, t).eval_at(coords)
    for n in range(budget + 1):
        for m in range(n, budget + 1):
            value = coords[n] * coords[m]
            for i, ri in enumerate(r.coeffs):
                if not ri:
                    continue
                value += (
                    (Fraction(1, i + n + 1) + Fraction(1, i + m + 1))
                    * ri
                    * coords[i + n + m + 1]
                )
            if value:
                return False
    return True


def recover_base_point(r: Poly, head: Sequence[RatLike]) -> "Fraction | None":
    """The unique base point realising the head on the curve, or None.

    Takes the rational roots of the first symbolic entry shifted by the
    first head value and filters them against every further entry.  Callers
    should pass deg r + 2 entries: the extra one separates root candidates
    that the minimal head cannot.
    """
    k = r.degree
    if r.is_zero():
        raise ValueError("context multiplier must be nonzero")
    if len(head) < k + 1:
        raise ValueError(f"head must have at least {k + 1} entries, got {len(head)}")
    values = [as_rat(v) for v in head]
    entries = curve_coords_symbolic(r, len(values))
    first = entries[0] - Poly.constant(values[0])
    good = [
        a
        for a in first.rational_roots()
        if all(entries[j](a) == values[j] for j in range(1, len(values)))
    ]
    if not good:
        return None
    if len(good) > 1:  # impossible: the head-of-coordinates projection is injective
        raise AssertionError(f"curve point must be unique, got {good}")
    return good[0]


def operator_from_coords(fc: FunctionalCoords, n: int) -> TruncOp:
    """Rebuild the truncated operator: image of x^i is I(r*x^i) + c_i."""
    if fc.length < n + 1:
        raise TruncationTooSmall(
            f"need {n + 1} coordinates to truncate at degree {n}, have {fc.length}"
        )
    images = tuple(
        (fc.r * Poly.monomial(i)).integrate_at(0) + Poly.constant(fc.c[i])
        for i in range(n + 1)
    )
    return TruncOp(images)
