from src.subgroups.subgroup import Subgroup, closure, as_subgroup
from src.subgroups.errors import LatticeGuardExceeded
