"""
Residue constraints on catalog parameters and the parameter-isomorphism
predicates of the congruence families.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable, Dict, List, Mapping, Optional

from src.fp.errors import UnknownFamilyError, UnknownPredicateError
from src.fp.field import (PrimeField, cubic_coset_representatives, legendre,
                          smallest_nonresidue, smallest_primitive_root)


class ResidueKind(Enum):
    QUADRATIC_RESIDUE = "QuadraticResidue"
    QUADRATIC_NON_RESIDUE = "QuadraticNonResidue"
    CUBIC_COSET_REP = "CubicCosetRep"
    FREE_PARAM = "FreeParam"
    CUSTOM = "Custom"


def _unit_or_nonresidue(value: int, F: PrimeField) -> bool:
    return value % F.p in (1, smallest_nonresidue(F.p))


def _fixed_nonresidue(value: int, F: PrimeField) -> bool:
    return value % F.p == smallest_nonresidue(F.p)


def _primitive_root(value: int, F: PrimeField) -> bool:
    return value == smallest_primitive_root(F.p)


def _unit(value: int, F: PrimeField) -> bool:
    return value % F.p != 0


def _negative_is_nonsquare(value: int, F: PrimeField) -> bool:
    return legendre(-value, F) == -1


def _negative_is_square(value: int, F: PrimeField) -> bool:
    return legendre(-value, F) == 1


PREDICATES: Dict[str, Callable[[int, PrimeField], bool]] = {
    "unit": _unit,
    "unit_or_nonresidue": _unit_or_nonresidue,
    "fixed_nonresidue": _fixed_nonresidue,
    "primitive_root": _primitive_root,
    "negative_nonsquare": _negative_is_nonsquare,
    "negative_square": _negative_is_square,
}


@dataclass(frozen=True)
class ResidueConstraint:
    kind: ResidueKind
    target: str
    predicate_id: Optional[str] = None

    def __post_init__(self):
        if self.kind is ResidueKind.CUSTOM and self.predicate_id not in PREDICATES:
            raise UnknownPredicateError(f"unknown predicate '{self.predicate_id}' for {self.target}")

    def holds(self, value: int, F: PrimeField) -> bool:
        if self.kind is ResidueKind.FREE_PARAM:
            return True
        if self.kind is ResidueKind.QUADRATIC_RESIDUE:
            return legendre(value, F) == 1
        if self.kind is ResidueKind.QUADRATIC_NON_RESIDUE:
            return legendre(value, F) == -1
        if self.kind is ResidueKind.CUBIC_COSET_REP:
            return value in cubic_coset_representatives(F.p)
        return PREDICATES[self.predicate_id](value, F)

    @classmethod
    def from_dict(cls, target: str, data: Mapping) -> "ResidueConstraint":
        kind = ResidueKind(data["kind"])
        return cls(kind=kind, target=target, predicate_id=data.get("predicate"))


def _cong0(a, b, F, r, s):
    p = F.p
    return (b["j"] - s * s * a["j"]) % p == 0 and (b["i"] - r * r * s * a["i"]) % p == 0


def _cong0a(a, b, F, r, s):
    p = F.p
    return (b["j"] - r * s * a["j"]) % p == 0 and (b["i"] - r ** 3 * a["i"]) % p == 0


def _cong1(a, b, F, k):
    # witnesses: i = +-1 scales r, l = +-1 picks the direction of b
    p = F.p
    if (a["nu1"], a["nu2"]) != (b["nu1"], b["nu2"]):
        return False
    shift_unit = a["nu2"] * F.inv(a["nu1"])
    for i, l in product((1, -1), (1, -1)):
        if (b["r"] - i * a["r"]) % p:
            continue
        shift = i * k * shift_unit * a["r"]
        if l == 1 and (b["s"] - a["s"] - shift) % p == 0:
            return True
        if l == -1 and (b["s"] + a["s"] - 2 * a["nu2"] - shift) % p == 0:
            return True
    return False


def _cong2(a, b, F):
    return (a["nu"], a["t"] % F.p) == (b["nu"], b["t"] % F.p)


def _cong3(a, b, F, i, k):
    p = F.p
    if a["nu"] != b["nu"] or (b["t"] * i - a["t"]) % p:
        return False
    shift = F.inv(i) * a["t"] * k * a["nu"]
    return ((b["s"] - a["s"] + shift) % p == 0
            or (b["s"] + a["s"] - 2 * a["nu"] - shift) % p == 0)


def _cong4(a, b, F):
    p = F.p
    return a["nu"] == b["nu"] and ((b["k"] - a["k"]) % p == 0 or (b["k"] + a["k"]) % p == 0)


FAMILY_PARAMETERS: Dict[str, List[str]] = {
    "cong0": ["i", "j"],
    "cong0a": ["i", "j"],
    "cong1": ["nu1", "nu2", "r", "s"],
    "cong2": ["nu", "t"],
    "cong3": ["nu", "s", "t"],
    "cong4": ["nu", "k"],
}


def param_equivalent(family: str, params1: Mapping[str, int], params2: Mapping[str, int],
                     F: PrimeField) -> bool:
    """True iff the family's isomorphism condition has a witness in F_p."""
    if family not in FAMILY_PARAMETERS:
        raise UnknownFamilyError(f"unknown family '{family}'")
    names = FAMILY_PARAMETERS[family]
    a = {name: int(params1[name]) for name in names}
    b = {name: int(params2[name]) for name in names}
    units = F.units()
    field = range(F.p)

    if family == "cong0":
        return any(_cong0(a, b, F, r, s) for r, s in product(units, units))
    if family == "cong0a":
        return any(_cong0a(a, b, F, r, s) for r, s in product(units, units))
    if family == "cong1":
        return any(_cong1(a, b, F, k) for k in field)
    if family == "cong2":
        return _cong2(a, b, F)
    if family == "cong3":
        return any(_cong3(a, b, F, i, k) for i, k in product(units, field))
    return _cong4(a, b, F)
