"""Weakly Arf (S2)-ification of affine semigroup rings in one and two variables."""
from .errors import (ArfS2Error, BoundExceeded, DegenerateCone, DegreeCapExceeded,
                     InconsistencyError, IterationLimit, NotFound)
from .ideals import (FracMonModule, MonIdeal, choose_sop_partner, colon_principal,
                     colon_stabilize, integral_closure_principal, is_sop, u_part)
from .polymod import (FracSubmodule, Poly, Submodule, VecPoly, buchberger, frac_intersect,
                      intersect, verify_theorem_ab_modules)
from .s2 import S2Report, is_s2_fixed, regular_pair_check, s2ify, verify_theorem_ab
from .semigroup import (AffineSemigroup, conductor_element, cone_rays, lattice_basis,
                        member, minimal_algebra_generators, saturation,
                        saturation_module_generators)
from .weak_arf import (is_weakly_arf_bounded, reduction_check, wa_s2ify, wap_violations,
                       weak_arf_closure)

__version__ = "0.1.0"
