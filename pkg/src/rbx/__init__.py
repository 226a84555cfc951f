"""rbx: exact computation with integration-type Rota-Baxter operators on Q[x].

The library represents the injective weight-zero operators by their moduli
points (base point, multiplier), checks the defining identity on exact
truncations, eliminates the attached functional coordinate system, and
synthesizes verified words in the shear/conjugation generators acting on
the moduli space.
"""

from .actions import (
    Dilate,
    InvalidGenerator,
    Shear,
    ShearSquared,
    Translate,
    Word,
    affine_orbit_word,
    apply_gen,
    apply_word,
    apply_word_tuple,
    fiber_value,
    inverse_word,
    orbit_chart,
    word_from_json,
    word_to_json,
)
from .functionals import (
    FunctionalCoords,
    IndexTooSmall,
    coordinate_equation,
    coords_from_operator,
    curve_coords,
    curve_coords_symbolic,
    elimination_polynomial,
    functional_residual,
    operator_from_coords,
    recover_base_point,
    reduced_equation,
    satisfies_system,
    vanishes_on_curve,
)
from .mpoly import DegreeCapExceeded, MPoly, UnassignedVariable, degree_cap, set_degree_cap
from .operators import (
    AnalyticOp,
    Inconsistent,
    NoRationalBasePoint,
    NotMultiplierType,
    TruncOp,
    TruncationTooSmall,
    ZeroMultiplier,
    derived_multiplier,
    first_rb_failure,
    is_rb_upto,
    odd_halving_example,
    operator_to_point,
    rb_residual,
)
from .poly import (
    NEG_INF,
    DuplicateAbscissa,
    Poly,
    PolyParseError,
    Rat,
    ZeroPolynomial,
    as_rat,
    format_rational,
    lagrange,
)
from .transitivity import (
    BasePointCollision,
    BasePointMismatch,
    DiagonalTuple,
    DuplicateOperators,
    FiberMismatch,
    LinearlyDependent,
    ZeroFiberValue,
    bridge_tuple,
    diagonalize_tuple,
    fiber_move,
    make_independent,
    select_basepoints,
    solve_distinct_tuple,
    solve_single,
    solve_tuple_independent,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
