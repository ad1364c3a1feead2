from src.fp.field import (PrimeField, legendre, count_conic_solutions, conic_lemma_count,
                          solve_general_conic, smallest_nonresidue, smallest_primitive_root,
                          cubic_coset_representatives, smallest_conic_point)
from src.fp.predicates import ResidueConstraint, ResidueKind, param_equivalent, FAMILY_PARAMETERS
