"""wsatlas: exact invariants and deformation data for numerical semigroups.

The package builds, for a numerical semigroup, its monomial curve, the
minimal free resolution of the curve ideal, the graded cotangent spaces
of first and second order, dimension bounds for the associated moduli
stratum, and desk-scale deformation data (quadratic base equations and
an unfolding/flatness pipeline), all over exact arithmetic.
"""

ENGINE_VERSION = "0.1.0"

from .semigroup import (  # noqa: F401
    NumericalSemigroup,
    apery_set,
    enumerate_by_genus,
    from_generators,
    type_lambda,
)
