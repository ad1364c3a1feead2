"""
Catalog entries: one classified family with its parameter domain, its
presentation and the invariants the catalog claims for it.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from src.fp import ResidueConstraint
from src.pcgroup.expressions import evaluate, free_names
from src.pcgroup.template import PresentationTemplate

# claims every entry is measured against; anything else in ``claims`` is a schema error
CLAIM_NAMES = (
    "order", "at", "mu", "alpha1", "d", "c", "exponent",
    "derived_order", "derived_type", "center_type", "frattini_type", "metacyclic",
    "has_a1_maximal", "has_abelian_maximal", "a1_maximal_count", "min_a1_maximal",
    "frattini_central", "every_maximal_a2", "every_maximal_two_generated",
    "maximal_d3_noncentral_derived",
)


@dataclass
class ParameterSpec:
    """One parameter of a family.

    Integer parameters run upward from ``minimum``; field parameters run over
    F_p^* (or F_p with ``include_zero``). ``values`` replaces either range by
    an explicit list expression such as ``[1, nonres()]``.
    """
    name: str
    kind: str = "integer"
    minimum: int = 1
    values: Optional[str] = None
    include_zero: bool = False
    residue: Optional[ResidueConstraint] = None

    @classmethod
    def from_dict(cls, data: Mapping) -> "ParameterSpec":
        name = data["name"]
        residue = ResidueConstraint.from_dict(name, data["residue"]) if "residue" in data else None
        return cls(
            name=name,
            kind=data.get("kind", "integer"),
            minimum=int(data.get("min", 0 if data.get("include_zero") else 1)),
            values=data.get("values"),
            include_zero=bool(data.get("include_zero", False)),
            residue=residue,
        )

    def candidates(self, env, cap):
        """Values to try under ``env``; integer ranges stop at ``cap``."""
        p = env["p"]
        if self.values is not None:
            values = evaluate(self.values, env)
            return [int(v) for v in (values if isinstance(values, list) else [values])]
        if self.kind == "field":
            return list(range(0 if self.include_zero else 1, p))
        return list(range(self.minimum, cap + 1))

    def to_dict(self):
        data = {"name": self.name, "kind": self.kind, "min": self.minimum}
        if self.values is not None:
            data["values"] = self.values
        if self.residue is not None:
            data["residue"] = {"kind": self.residue.kind.value, "predicate": self.residue.predicate_id}
        return data


@dataclass(frozen=True)
class ParameterAssignment:
    p: int
    values: tuple = ()

    @classmethod
    def of(cls, p, **values):
        return cls(int(p), tuple(sorted((k, int(v)) for k, v in values.items())))

    @classmethod
    def from_dict(cls, data: Mapping):
        data = dict(data)
        p = data.pop("p")
        return cls.of(p, **data)

    def env(self) -> Dict[str, int]:
        env = {"p": self.p}
        env.update(dict(self.values))
        return env

    def key(self) -> str:
        return ",".join([f"p={self.p}"] + [f"{k}={v}" for k, v in self.values])

    def to_dict(self):
        return self.env()

    def __str__(self):
        return self.key()


@dataclass
class CatalogEntry:
    id: str
    block: str
    source: str
    level: Any
    order: str
    presentation: Dict[str, Any]
    primes: str = "True"
    parameters: List[ParameterSpec] = field(default_factory=list)
    constraints: List[str] = field(default_factory=list)
    claims: Dict[str, Any] = field(default_factory=dict)
    alternatives: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    product_form: Optional[Dict[str, Any]] = None
    equivalence: Optional[Dict[str, Any]] = None
    notes: str = ""
    template: Optional[PresentationTemplate] = None

    @classmethod
    def from_dict(cls, data: Mapping) -> "CatalogEntry":
        return cls(
            id=data["id"],
            block=data["block"],
            source=data.get("source", ""),
            level=data["level"],
            order=str(data["order"]),
            presentation=dict(data["presentation"]),
            primes=str(data.get("primes", "True")),
            parameters=[ParameterSpec.from_dict(p) for p in data.get("parameters", [])],
            constraints=[str(c) for c in data.get("constraints", [])],
            claims=dict(data.get("claims", {})),
            alternatives={k: list(v) for k, v in data.get("alternatives", {}).items()},
            product_form=data.get("product_form"),
            equivalence=data.get("equivalence"),
            notes=data.get("notes", ""),
        )

    @property
    def parameter_names(self):
        return [spec.name for spec in self.parameters]

    @property
    def all_constraints(self):
        return [self.primes] + self.constraints

    def residues(self):
        return [spec.residue for spec in self.parameters if spec.residue is not None]

    def expressions(self):
        """(field, expression) for every formula of the entry, for schema checks."""
        yield "order", self.order
        yield "level", self.level
        yield "primes", self.primes
        for constraint in self.constraints:
            yield "constraints", constraint
        for name, value in self.claims.items():
            for item in (value if isinstance(value, list) else [value]):
                yield f"claims.{name}", item
        for name, readings in self.alternatives.items():
            for reading in readings:
                yield f"alternatives.{name}", reading.get("value")
                yield f"alternatives.{name}", reading.get("when", "True")
        for name, value in ((self.equivalence or {}).get("params") or {}).items():
            yield f"equivalence.{name}", value

    def unbound_names(self):
        known = {"p"} | set(self.parameter_names)
        missing = []
        for field_name, expression in self.expressions():
            for name in sorted(free_names(expression) - known):
                missing.append((field_name, name))
        return missing

    def to_dict(self):
        return {
            "id": self.id,
            "block": self.block,
            "source": self.source,
            "level": self.level,
            "order": self.order,
            "primes": self.primes,
            "parameters": [spec.to_dict() for spec in self.parameters],
            "constraints": list(self.constraints),
            "claims": dict(self.claims),
        }
