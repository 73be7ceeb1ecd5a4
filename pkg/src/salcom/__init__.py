"""Conditional oriented matroids, Salvetti complexes and exact verification tools
for real hyperplane arrangements restricted to an open convex region."""
from ._kernels import BACKEND
from .com import (
    COM,
    AxiomReport,
    Semisimplification,
    check_com,
    face_poset,
    is_oriented_matroid,
    require_com,
    semisimplify,
    topes,
)
from .errors import InvariantViolation, UsageError
from .geom import (
    AffineForm,
    Arrangement,
    Constraint,
    Region,
    enumerate_covectors,
    enumerate_covectors_exhaustive,
    feasible,
    region_equal,
    region_subset,
    subregion,
)
from .homology import ChainComplex, HomologyProfile, betti, boundary_matrices, smith_normal_form, try_collapse
from .oracle import intersection_poset, poincare_polynomial, region_count
from .poset import FinitePoset, SimplicialComplex, hasse, opposite, order_complex, verify_order_iso
from .salvetti import SalElement, salvetti_complex, salvetti_elements, salvetti_poset
from .signs import SignVector, compose, leq, negate, separator
from .zcover import ZCover, ZPoint, fiber, in_cover, local_region, sal_at, verify_nerve, z_equiv

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
