from src.structure.characteristic import (center, derived_subgroup, frattini, lower_central_series,
                                          mho, omega, is_abelian)
from src.structure.invariants import (StructureRecord, abelian_invariants, d, exponent,
                                      nilpotency_class, structure_record)
from src.structure.metacyclic import is_metacyclic
from src.structure.quotient import quotient
