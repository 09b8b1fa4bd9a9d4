"""Exact verification toolkit for orbifold and quantum-corrected cohomology
of transversal A_n singularities, plus McKay correspondence utilities."""

from .cartan import CurveClass, cartan_inverse, cartan_matrix, curve_class, intersection
from .geometry import (
    BaseRing,
    Geometry,
    GradedClass,
    TautClasses,
    TotalClass,
    default_geometry,
    i_pull,
    i_push,
    integrate_total,
)
from .gw import gw_invariant, gw_vanishing_symplectic
from .mckay import GroupSpec, ade_equation, character_table, mckay_graph, resolution_graph
from .orbifold import ConventionFlags, OrbClass, OrbifoldRing, age, obstruction_class, surface_table
from .quantum import PoleError, QPoint, QSeries, QuantumRing, quantum_mul, r_poly
from .resolution import ResClass, ResolutionRing
from .scalars import CycNum, parse_scalar
from .verify import (
    HomCandidate,
    HomChecker,
    HomReport,
    check_associativity,
    check_pairing_nondegenerate,
    check_ring_hom,
    reconcile_6_2,
    solve_a2_symmetric,
)

__version__ = "0.1.0"
