"""Two-block group-algebra / bivariate-bicycle CSS codes.

Construction and structural analysis of CSS codes built from a pair of
polynomials over F2[x,y]/(x^l-1, y^m-1): code parameters, purity and
principality of the logical-operator structure, explicit symplectic bases
of logical operators, and fold-transversal Clifford gates verified at the
stabilizer-tableau level.
"""

from .f2la import BitMatrix, BitVec, Subspace
from .grouprings import (
    Ideal, RingAutomorphism, RingElem, RingParams, annihilator, elem,
    format_elem, ideal_generated, parse_elem,
)
from .codes import (
    BBCodeSpec, ChainComplex, CssCode, DistanceReport, build_bb, build_nfold,
    distance_exhaustive, distance_isd,
)
from .homology import (
    LogicalBasis, LogicalClass, PurityReport, SemiperiodicData,
    principality_check, pure_logical_basis, purity_check,
    semiperiodic_generator,
)
from .gates import (
    CliffordTableau, FoldGate, GateGroup, ZXDuality, apply_to_tableau,
    check_stabilizer_preservation, cz_gate, enumerate_group, hadamard_gate,
    logical_action, omega_duality, standard_duality, swap_gate,
)

__version__ = "0.1.0"
