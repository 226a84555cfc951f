"""Constructive word synthesis for the shear actions on analytic operators.

Every solver here returns a word of generators and verifies it by exact
application before returning; a wrong word is a bug, not a result.  The
staging device is :class:`DiagonalTuple`: an operator tuple whose multipliers
hit prescribed nonzero values on a diagonal evaluation pattern
(r_i(b_j) = c_i when i = j, else 0), which makes per-member fiber moves
independent of each other.

Base points are always scanned deterministically through 0, 1, 2, ... so a
fixed input yields a fixed word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .actions import (
    Generator,
    Shear,
    ShearSquared,
    Translate,
    Word,
    apply_word,
    apply_word_tuple,
    inverse_word,
)
from .operators import AnalyticOp
from .poly import Poly, RatLike, as_rat, lagrange


class BasePointMismatch(ValueError):
    """Operators do not share the integration base point the construction needs."""


class ZeroFiberValue(ValueError):
    """A fiber move would divide by a vanishing multiplier value."""


class FiberMismatch(ValueError):
    """Source and destination sit in different fibers of the evaluation map."""


class LinearlyDependent(ValueError):
    """The multiplier tuple has no full rank, but the construction needs it."""


class BasePointCollision(ValueError):
    """Evaluation point sets that must be disjoint are not."""


class DuplicateOperators(ValueError):
    """The tuple members must be pairwise distinct."""


@dataclass(frozen=True)
class DiagonalTuple:
    """Operator tuple with diagonal evaluation pattern r_i(b_j) = c_i * delta_ij."""

    base_points: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    ops: tuple[AnalyticOp, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base_points", tuple(as_rat(b) for b in self.base_points))
        object.__setattr__(self, "values", tuple(as_rat(c) for c in self.values))
        object.__setattr__(self, "ops", tuple(self.ops))
        m = len(self.ops)
        if len(self.base_points) != m or len(self.values) != m:
            raise ValueError("base points, values and operators must have equal length")
        if len(set(self.base_points)) != m:
            raise ValueError("base points must be pairwise distinct")
        if any(c == 0 for c in self.values):
            raise ZeroFiberValue("diagonal values must be nonzero")
        _shared_base(self.ops)
        for i, op in enumerate(self.ops):
            for j, b in enumerate(self.base_points):
                expected = self.values[i] if i == j else Fraction(0)
                if op.r(b) != expected:
                    raise ValueError(
                        f"member {i} evaluates to {op.r(b)} at point {j}, expected {expected}"
                    )


def _shared_base(ops: Sequence[AnalyticOp]) -> Fraction:
    if not ops:
        raise ValueError("empty operator tuple")
    a = ops[0].a
    if any(op.a != a for op in ops):
        raise BasePointMismatch("operators must share one integration base point")
    return a


def _coeff_rows(rs: Sequence[Poly]) -> list[list[Fraction]]:
    width = max((len(r.coeffs) for r in rs), default=0) or 1
    return [[r.coeff(j) for j in range(width)] for r in rs]


def _is_independent(ops: Sequence[AnalyticOp]) -> bool:
    return linalg.rank(_coeff_rows([op.r for op in ops])) == len(ops)


def fiber_move(src: AnalyticOp, dst: AnalyticOp, b: RatLike) -> Shear:
    """The shear at b carrying src to dst within one fiber of the evaluation map."""
    b = as_rat(b)
    if src.a != dst.a:
        raise BasePointMismatch("fiber moves keep the integration base point fixed")
    c1, c2 = src.r(b), dst.r(b)
    if c1 != c2:
        raise FiberMismatch(f"multiplier values at {b} differ: {c1} vs {c2}")
    if c1 == 0:
        raise ZeroFiberValue(f"multiplier value at {b} must be nonzero")
    return Shear(b, (dst.r - src.r) * (1 / c1))


def solve_single(op1: AnalyticOp, op2: AnalyticOp) -> Word:
    """Word of at most three generators carrying op1 to op2.

    A translation aligns the integration base points; one shear matches the
    multiplier value at a fresh evaluation point; a fiber move there
    finishes.  The evaluation points are the two smallest non-negative
    integers avoiding the roots of both multipliers.
    """
    word: list[Generator] = []
    cur = op1
    if cur.a != op2.a:
        gen = Translate(cur.a - op2.a)
        word.append(gen)
        cur = gen.apply(cur)
    r1, r2 = cur.r, op2.r
    points: list[Fraction] = []
    t = 0
    while len(points) < 2:
        b = Fraction(t)
        if r1(b) != 0 and r2(b) != 0:
            points.append(b)
        t += 1
    first, second = points
    gamma = (r2(second) - r1(second)) / (r1(first) * (second - first))
    gen = Shear(first, Poly((-first, Fraction(1))) * gamma)
    word.append(gen)
    cur = gen.apply(cur)
    gen = fiber_move(cur, op2, second)
    word.append(gen)
    cur = gen.apply(cur)
    assert cur == op2 and len(word) <= 3
    assert apply_word(word, op1) == op2
    return tuple(word)


def select_basepoints(rs: Sequence[Poly]) -> list[Fraction]:
    """Integers 0, 1, 2, ... greedily kept while they raise the evaluation rank.

    Returns len(rs) points at which the evaluation matrix (r_i(b_j)) is
    invertible; raises :class:`LinearlyDependent` when no points can work.
    """
    m = len(rs)
    if linalg.rank(_coeff_rows(rs)) < m:
        raise LinearlyDependent("multipliers must be linearly independent")
    points: list[Fraction] = []
    columns: list[list[Fraction]] = []
    t = 0
    while len(points) < m:
        if t > 1000:  # cannot happen: independent polynomials separate on the integers
            raise AssertionError("base point scan failed to reach full rank")
        b = Fraction(t)
        column = [r(b) for r in rs]
        trial = [row + [column[i]] for i, row in enumerate(_rows_of(columns, m))]
        if linalg.rank(trial) > len(points):
            points.append(b)
            columns.append(column)
        t += 1
    return points


def _rows_of(columns: list[list[Fraction]], m: int) -> list[list[Fraction]]:
    return [[col[i] for col in columns] for i in range(m)]


def _selector(points: Sequence[Fraction], index: int) -> Poly:
    """Interpolation selector: 1 at points[index], 0 at every other point."""
    return lagrange([(b, 1 if j == index else 0) for j, b in enumerate(points)])


def diagonalize_tuple(
    ops: Sequence[AnalyticOp], points: Sequence[Fraction]
) -> tuple[Word, DiagonalTuple]:
    """Column-operation elimination of the evaluation matrix by shears.

    Each generator adds one column of (r_i(b_j)) to another; afterwards each
    row holds exactly one nonzero entry.  Returns the word and the resulting
    diagonal tuple, base points permuted to match the rows.
    """
    m = len(ops)
    points = [as_rat(b) for b in points]
    if len(points) != m or len(set(points)) != m:
        raise ValueError("need as many distinct evaluation points as operators")
    _shared_base(ops)
    matrix = [[op.r(b) for b in points] for op in ops]
    if linalg.det(matrix) == 0:
        raise LinearlyDependent("evaluation matrix must be invertible")
    selectors = [_selector(points, j) for j in range(m)]
    word: list[Generator] = []
    cur = list(ops)
    used: list[int] = []
    for i in range(m):
        pivot = next(j for j in range(m) if j not in used and matrix[i][j] != 0)
        for j in range(m):
            if j == pivot or matrix[i][j] == 0:
                continue
            lam = -matrix[i][j] / matrix[i][pivot]
            gen = Shear(points[pivot], selectors[j] * lam)
            word.append(gen)
            cur = [gen.apply(op) for op in cur]
            for t in range(m):
                matrix[t][j] += lam * matrix[t][pivot]
        used.append(pivot)
    result = DiagonalTuple(
        tuple(points[p] for p in used),
        tuple(matrix[i][p] for i, p in enumerate(used)),
        tuple(cur),
    )
    return tuple(word), result


def bridge_tuple(
    src: DiagonalTuple, dst_points: Sequence[RatLike], dst_values: Sequence[RatLike]
) -> tuple[Word, DiagonalTuple]:
    """Move a diagonal tuple onto a disjoint evaluation pattern.

    Interpolates target multipliers meeting both patterns at once, then
    walks there one member at a time with fiber moves at the source points;
    each move fixes the other members because their multipliers vanish
    there.
    """
    m = len(src.ops)
    dst_points = [as_rat(b) for b in dst_points]
    dst_values = [as_rat(c) for c in dst_values]
    if len(dst_points) != m or len(dst_values) != m:
        raise ValueError("destination pattern must match the tuple length")
    if set(dst_points) & set(src.base_points):
        raise BasePointCollision("destination points must avoid the source points")
    if len(set(dst_points)) != m:
        raise ValueError("destination points must be pairwise distinct")
    if any(c == 0 for c in dst_values):
        raise ZeroFiberValue("destination values must be nonzero")
    a = src.ops[0].a
    targets = []
    for k in range(m):
        constraints = [
            (b, src.values[k] if i == k else 0) for i, b in enumerate(src.base_points)
        ] + [(b, dst_values[k] if i == k else 0) for i, b in enumerate(dst_points)]
        targets.append(AnalyticOp(a, lagrange(constraints)))
    word: list[Generator] = []
    cur = list(src.ops)
    for k in range(m):
        gen = fiber_move(cur[k], targets[k], src.base_points[k])
        word.append(gen)
        cur = [gen.apply(op) for op in cur]
    result = DiagonalTuple(tuple(dst_points), tuple(dst_values), tuple(cur))
    return tuple(word), result


def _to_canonical_pattern(ops: Sequence[AnalyticOp]) -> tuple[Word, DiagonalTuple]:
    """Carry an independent tuple into the pattern (1..m | 1..1) via two bridges."""
    m = len(ops)
    points = select_basepoints([op.r for op in ops])
    word1, diag = diagonalize_tuple(ops, points)
    canonical = [Fraction(i) for i in range(1, m + 1)]
    taken = set(diag.base_points) | set(canonical)
    aux: list[Fraction] = []
    t = 0
    while len(aux) < m:
        b = Fraction(t)
        if b not in taken:
            aux.append(b)
        t += 1
    word2, diag = bridge_tuple(diag, aux, [Fraction(1)] * m)
    word3, diag = bridge_tuple(diag, canonical, [Fraction(1)] * m)
    return word1 + word2 + word3, diag


def solve_tuple_independent(
    src: Sequence[AnalyticOp], dst: Sequence[AnalyticOp]
) -> Word:
    """Word of shears carrying one independent tuple to another, memberwise.

    Both tuples are staged onto the canonical pattern (1..m | 1..1); the
    leftover mismatch is fixed by per-member fiber moves inside the pattern,
    and the destination staging is undone by its inverse word.
    """
    m = len(src)
    if len(dst) != m:
        raise ValueError("tuples must have equal length")
    _shared_base(list(src) + list(dst))
    if not _is_independent(src) or not _is_independent(dst):
        raise LinearlyDependent("both tuples must be linearly independent")
    word_src, diag_src = _to_canonical_pattern(src)
    word_dst, diag_dst = _to_canonical_pattern(dst)
    within: list[Generator] = []
    cur = list(diag_src.ops)
    for k in range(m):
        gen = fiber_move(cur[k], diag_dst.ops[k], diag_src.base_points[k])
        within.append(gen)
        cur = [gen.apply(op) for op in cur]
    word = word_src + tuple(within) + inverse_word(word_dst)
    assert apply_word_tuple(word, src) == list(dst)
    assert len(word) <= 10 * m * m + 20 * m
    return word


def make_independent(ops: Sequence[AnalyticOp]) -> Word:
    """Word of shears and squared shears making a distinct tuple independent.

    Recursively canonicalises the first m-1 members to the monomial
    multipliers 1, x, ..., x^(m-2); a dependent last member then lies in
    their span and a single squared shear (at 0, 1 or -1, after at most one
    coefficient swap) breaks the dependence.  The resulting rank is asserted.
    """
    m = len(ops)
    _shared_base(ops)
    if len(set(ops)) != m:
        raise DuplicateOperators("tuple members must be pairwise distinct")
    if _is_independent(ops):
        return ()
    a = ops[0].a
    word: list[Generator] = []
    cur = list(ops)

    def emit(extra: Sequence[Generator]) -> None:
        nonlocal cur
        word.extend(extra)
        cur = apply_word_tuple(extra, cur)

    emit(make_independent(cur[: m - 1]))
    canonical = [AnalyticOp(a, Poly.monomial(i)) for i in range(m - 1)]
    emit(solve_tuple_independent(cur[: m - 1], canonical))
    if not _is_independent(cur):
        r = cur[-1].r
        spike = Poly.monomial(m)
        if r(0) not in (0, 1):
            emit([ShearSquared(0, spike)])
        elif r(1) not in (0, 1):
            emit([ShearSquared(1, spike - Poly.one())])
        elif r(-1) ** 2 != r(1):
            emit([ShearSquared(-1, spike - Poly.constant((-1) ** m))])
        else:
            # All three probes degenerate; then some coefficient is outside
            # {0, 1} (an all-0/1 multiplier would have hit the probe at 1 or
            # duplicated a canonical member).  Swap it into the constant slot
            # and spike at 0.
            p = next(i for i in range(m - 1) if r.coeff(i) not in (0, 1))
            swapped = list(canonical)
            swapped[0], swapped[p] = swapped[p], swapped[0]
            emit(solve_tuple_independent(cur[: m - 1], swapped))
            emit([ShearSquared(0, spike)])
    assert _is_independent(cur)
    return tuple(word)


def solve_distinct_tuple(
    src: Sequence[AnalyticOp], dst: Sequence[AnalyticOp]
) -> Word:
    """Word carrying any distinct tuple to any other, memberwise.

    Makes both sides independent, solves between the independent images and
    undoes the destination preparation.
    """
    if len(src) != len(dst):
        raise ValueError("tuples must have equal length")
    _shared_base(list(src) + list(dst))
    word_src = make_independent(src)
    src_ind = apply_word_tuple(word_src, src)
    word_dst = make_independent(dst)
    dst_ind = apply_word_tuple(word_dst, dst)
    word = word_src + solve_tuple_independent(src_ind, dst_ind) + inverse_word(word_dst)
    assert apply_word_tuple(word, src) == list(dst)
    return word
