"""Exact finite-level verification of Kummer-image openness over Q and
over function fields: Kummer degrees, division-group indices, image
certificates, first group cohomology, and the factorization oracle that
grounds everything."""

from .config import norm_degree_limit
from .cyclotomic import (CycElement, CycPoly, CyclotomicField,
                         cyclotomic_field, cyclotomic_poly, euler_phi)
from .cycfactor import (factor_over_cyclotomic, nth_root_in_cyclotomic,
                        zresultant)
from .errors import (DependentGeneratorsError, SizeLimitError,
                     VerificationError)
from .kummer import (DescentWitness, InjectivityProfile, KummerLevel,
                     LevelImage, OpennessCertificate, RelationLattice,
                     component_table, cyclotomic_power_membership,
                     descent_exponent, geometric_rho_image,
                     horizontal_certificate, injectivity_profile,
                     kummer_degree, relation_lattice,
                     relation_lattice_enumerated, rho_image,
                     sah_descent_check, vertical_certificate)
from .multgroup import (DivisionGroupReport, FactoredRational,
                        FunctionFieldElement, MultSubgroup, ParseError,
                        division_group, factor_rational, independence_check,
                        parse_function_field, poly_str, parse_poly,
                        power_intersection_check)
from .qpoly import FactorizationResult, QPoly
from .zassenhaus import factor_over_rationals
from .zlattice import (IntMatrix, ModSubgroup, SmithDecomposition,
                       hermite_normal_form, kernel_mod,
                       orthogonal_complement_mod, saturation,
                       smith_normal_form)
from .cohomology import (Cochain, DeltaReport, FiniteGroup, FiniteModule,
                         H1Report, SahVerdict, all_unit_actions,
                         cyclic_group, dihedral_group, direct_product,
                         groups_up_to_order, h1, kummer_delta_check,
                         quaternion_group, sah_verify, trivial_module,
                         unit_action_module)

__version__ = "0.1.0"
