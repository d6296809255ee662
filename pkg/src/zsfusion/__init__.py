"""Matched pairs, bicrossed products and crossed extensions of fusion rings."""

from .bicross import BicrossedRing, bicrossed_ring, verify_exact_factorization
from .crossact import (CrossedActionData, matched_pair_fc, pointed_crossed_action,
                       trivial_crossed_action, verify_crossed_action)
from .dualgt import (BimoduleObject, bimodule_tensor, decompose_bimodule,
                     dual_completeness, dual_ring_group_theoretical)
from .equivar import (EquivariantObject, EquivariantSimple, equivariant_census_general,
                      equivariantize_pointed, extension_checks, verify_equivariant_structure)
from .errors import ZSFusionError
from .fusring import (FusionRing, Grading, find_based_iso, fpdim, group_ring, rep_ring,
                      tambara_yamagami, universal_grading, validate_fusion_ring)
from .grp import (FiniteGroup, Subgroup, double_cosets, exact_factorizations,
                  group_from_permutations, group_from_table, make_subgroup)
from .matched import MatchedPair, derive_matched_pair, verify_matched_pair, zappa_szep

__version__ = "0.1.0"
