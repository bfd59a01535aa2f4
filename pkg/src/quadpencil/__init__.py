"""Exact arithmetic of pencils of quadrics and related orbit problems.

Everything works over the rationals with no floating point: binary forms as
invariants of symmetric matrix pencils, orbit parameters in the etale algebra
Q[x]/(g), stabilizers, the ring R_f with its oriented ideals, curve points,
quadratic-space local-global invariants, alternating-form sub-Pfaffians, and
conjugation invariants of square matrices.
"""

from .adjoint import (
    AdjointInvariants,
    adjoint_canonical_rep,
    adjoint_conjugator,
    adjoint_invariants,
    conjugator_is_unique,
    d_determinant,
    regularity_D,
)
from .binforms import BinaryForm
from .errors import DomainError
from .etale import AlgElement, EtaleAlgebra, all_square_roots, sqrt_in_algebra
from .hyper import CurvePoint, on_curve, point_to_orbit
from .orders import (
    Order,
    OrientedIdeal,
    canonical_odd_orbit,
    form_order,
    ideal_mul,
    ideal_pair_to_matrices,
    ideal_pair_valid,
    ideal_pow,
    inverse_different_check,
    module_stable,
    order_disc,
    power_ideal,
    rational_params_of_pair,
    scalar_ideal,
    unit_ideal,
)
from .pencil import (
    OrbitParam,
    StabilizerGroup,
    SymPair,
    g_equivalent,
    h_equivalent,
    invariant_binary_form,
    orbit_witness_search,
    param_to_pencil,
    pencil_to_param,
    real_orbit_obstruction,
    stabilizer_rational,
)
from .factor import factor_poly, is_irreducible
from .pfaffian import SkewTriple, pfaffian, pi_invariant, sl5_stable, sub_pfaffian_forms
from .polys import Poly, discriminant, is_squarefree, real_root_count, resultant
from .quadspace import (
    REAL_PLACE,
    BrauerClass2,
    QuadForm,
    diagonalize,
    forms_equivalent,
    gram_invariant,
    hasse_invariant,
    hilbert_symbol,
    is_isotropic,
    isotropy_witness,
    quaternion_class,
    so_orbit_target,
    spin_obstruction,
)

__version__ = "0.1.0"
