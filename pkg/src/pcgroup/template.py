"""
Presentation templates and their refinement into executable pc presentations.

A template lists generators top down with their relative orders, the word each
generator's order-th power equals, and conjugation relations written as
``[x,y]=w`` or ``x^y=w``. Generators that only exist to break a cyclic
dependency carry ``define`` (``A`` with ``define: a^(p^2)``); their images
under generators above the source are derived automatically. The catalog's own
relations are kept verbatim in ``defining`` and re-checked in the built group.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from src.fp import PrimeField, ResidueConstraint
from src.pcgroup.consistency import ConsistencyFailure, check_consistency
from src.pcgroup.errors import (ConstraintViolation, InconsistentPresentation,
                                PresentationError, UnboundName, UnresolvedWord)
from src.pcgroup.expressions import evaluate, evaluate_int
from src.pcgroup.group import DEFAULT_MAX_ORDER, PcGroup
from src.pcgroup.presentation import ConsistencyStatus, PcPresentation
from src.pcgroup.products import central_product, direct_product
from src.pcgroup.words import (Commutator, Conjugate, Gen, Power, Product,
                               evaluate_word, parse_relation, parse_word)
from src.utils.logger import log


class ProductKind(Enum):
    PLAIN = "Plain"
    DIRECT = "DirectProduct"
    CENTRAL = "CentralProduct"


@dataclass
class GeneratorSpec:
    name: str
    order: Union[str, int]
    power: str = "1"
    define: Optional[str] = None

    @classmethod
    def from_dict(cls, data):
        return cls(name=data["name"], order=data["order"], power=str(data.get("power", "1")),
                   define=data.get("define"))


@dataclass
class ProductFactor:
    template: "PresentationTemplate"
    bindings: Dict[str, Union[str, int]] = field(default_factory=dict)
    label: str = ""


@dataclass
class ProductTag:
    kind: ProductKind
    factors: List[ProductFactor]
    identification: Optional[Tuple[str, str]] = None


@dataclass
class PresentationTemplate:
    generators: List[GeneratorSpec] = field(default_factory=list)
    relations: List[str] = field(default_factory=list)
    defining: List[str] = field(default_factory=list)
    parameters: List[str] = field(default_factory=list)
    constraints: List[str] = field(default_factory=list)
    residues: List[ResidueConstraint] = field(default_factory=list)
    product: Optional[ProductTag] = None

    @property
    def kind(self):
        return self.product.kind if self.product else ProductKind.PLAIN

    @property
    def generator_names(self):
        return [g.name for g in self.generators]

    @classmethod
    def from_dict(cls, data: Mapping, resolve: Optional[Callable] = None,
                  parameters=(), constraints=(), residues=()):
        """Build from the catalog's ``presentation`` block.

        ``resolve(ref)`` returns the template of a named product factor.
        """
        product = None
        if "product" in data:
            product = _product_from_dict(data["product"], resolve)
        return cls(
            generators=[GeneratorSpec.from_dict(g) for g in data.get("generators", [])],
            relations=list(data.get("relations", [])),
            defining=list(data.get("defining", [])),
            parameters=list(parameters),
            constraints=list(constraints),
            residues=list(residues),
            product=product,
        )


def _product_from_dict(data, resolve):
    kinds = {"direct": ProductKind.DIRECT, "central": ProductKind.CENTRAL}
    if data.get("kind") not in kinds:
        raise PresentationError(f"unknown product kind {data.get('kind')!r}")
    factors = []
    for factor in data.get("factors", []):
        if "ref" in factor:
            if resolve is None:
                raise PresentationError(f"no resolver for factor '{factor['ref']}'")
            template = resolve(factor["ref"])
        else:
            template = PresentationTemplate.from_dict(factor["presentation"], resolve)
        factors.append(ProductFactor(template, dict(factor.get("params", {})), factor.get("ref", "")))
    if len(factors) < 2:
        raise PresentationError("a product needs at least two factors")
    identification = tuple(data["identify"]) if "identify" in data else None
    if kinds[data["kind"]] is ProductKind.CENTRAL:
        if len(factors) != 2:
            raise PresentationError("a central product needs exactly two factors")
        if identification is None:
            raise PresentationError("a central product needs an identification pair")
    return ProductTag(kinds[data["kind"]], factors, identification)


def bind_parameters(template, params):
    """The evaluation environment for ``params``; raises on any failed constraint."""
    if "p" not in params:
        raise UnboundName("p")
    F = PrimeField(int(params["p"]))
    env = {name: int(value) for name, value in params.items()}
    for name in template.parameters:
        if name not in env:
            raise UnboundName(name)
    for residue in template.residues:
        if not residue.holds(env[residue.target], F):
            raise ConstraintViolation(f"{residue.kind.value}({residue.target})", params)
    for constraint in template.constraints:
        if not evaluate(constraint, env):
            raise ConstraintViolation(constraint, params)
    return env


def _p_exponent(q, p, name):
    e = 0
    while q > 1 and q % p == 0:
        q //= p
        e += 1
    if q != 1 or e == 0:
        raise PresentationError(f"relative order of '{name}' is not a positive power of {p}")
    return e


def _conjugate_image(lhs, rhs, index):
    """(later level, earlier level, image word) from one conjugation relation."""
    if isinstance(lhs, Commutator) and len(lhs.items) == 2 \
            and all(isinstance(item, Gen) for item in lhs.items):
        x, y = (index[item.name] for item in lhs.items)
        if x > y:
            return x, y, Product((Gen(lhs.items[0].name), rhs))
        if x < y:
            return y, x, Product((Gen(lhs.items[1].name), Power(rhs, -1)))
    if isinstance(lhs, Conjugate) and isinstance(lhs.base, Gen) and isinstance(lhs.by, Gen):
        x, y = index[lhs.base.name], index[lhs.by.name]
        if x > y:
            return x, y, rhs
    raise UnresolvedWord("a pc relation must read [x,y]=w or x^y=w with x below y")


def relation_holds(group, relation, env):
    sides = parse_relation(relation, group.names, env)
    lookup = group.lookup()
    values = {evaluate_word(side, group, lookup) for side in sides}
    return len(values) == 1


def echo_relations(group, relations, env):
    """Relations of ``relations`` that fail in ``group``."""
    return [relation for relation in relations if not relation_holds(group, relation, env)]


def _echo_or_raise(presentation, relations, env):
    failed = echo_relations(presentation.group, relations, env)
    if failed:
        presentation.status = ConsistencyStatus.FAILED
        raise InconsistentPresentation(ConsistencyFailure(
            "relation echo", (), None, f"relation '{failed[0]}' does not hold"))


def _refine_plain(template, env, max_order, sample_triples, seed, check_defining=True):
    p = env["p"]
    names = template.generator_names
    if len(set(names)) != len(names):
        raise PresentationError(f"duplicate generator names in {names}")
    index = {name: i for i, name in enumerate(names)}

    exponents = [_p_exponent(evaluate_int(g.order, env), p, g.name) for g in template.generators]
    powers = [parse_word(g.power, names, env) for g in template.generators]

    defines = {}
    echoed = list(template.defining)
    for i, g in enumerate(template.generators):
        if g.define is None:
            continue
        node = parse_word(g.define, names, env)
        if isinstance(node, Gen):
            node = Power(node, 1)
        if not (isinstance(node, Power) and isinstance(node.base, Gen)
                and index[node.base.name] < i):
            raise UnresolvedWord(f"'{g.name}' must be defined as a power of a generator above it")
        defines[i] = (index[node.base.name], node.exponent)
        echoed.append(f"{g.name}={g.define}")

    conjugates = {}
    for relation in template.relations:
        sides = parse_relation(relation, names, env)
        for lhs in sides[:-1]:
            j, i, image = _conjugate_image(lhs, sides[-1], index)
            if (j, i) in conjugates:
                raise PresentationError(f"two relations give {names[j]}^{names[i]}")
            conjugates[(j, i)] = image

    presentation = PcPresentation(prime=p, names=names, exponents=exponents, powers=powers,
                                  conjugates=conjugates, defines=defines, relations=echoed)
    group = PcGroup(presentation, max_order)
    report = check_consistency(group, sample_triples, seed)
    if not report.ok:
        raise InconsistentPresentation(report.first_failure)
    _echo_or_raise(presentation, echoed if check_defining else echoed[len(template.defining):], env)
    return presentation


def _refine_product(template, env, max_order, sample_triples, seed):
    tag = template.product
    groups = []
    for factor in tag.factors:
        factor_params = {"p": env["p"]}
        factor_params.update({name: evaluate_int(expr, env) for name, expr in factor.bindings.items()})
        presentation = refine_to_pc(factor.template, factor_params, max_order, sample_triples, seed)
        groups.append((presentation.group, factor_params))
    if tag.kind is ProductKind.DIRECT:
        return reduce(lambda A, B: direct_product(A, B, max_order), [g for g, _ in groups]).presentation
    (A, env_a), (B, env_b) = groups
    za = A.word_value(parse_word(tag.identification[0], A.names, env_a))
    zb = B.word_value(parse_word(tag.identification[1], B.names, env_b))
    return central_product(A, B, (za, zb), max_order).presentation


def refine_to_pc(template, params, max_order=DEFAULT_MAX_ORDER, sample_triples=10 ** 4, seed=20240229,
                 check_defining=True):
    """Bind ``params``, build the group and check it.

    The returned presentation is Verified and carries its PcGroup in ``group``.
    With ``check_defining`` off the catalog's ``defining`` relations are left
    for the caller to echo.
    """
    env = bind_parameters(template, params)
    if template.product is not None:
        presentation = _refine_product(template, env, max_order, sample_triples, seed)
        if check_defining:
            _echo_or_raise(presentation, template.defining, env)
    else:
        presentation = _refine_plain(template, env, max_order, sample_triples, seed, check_defining)
    log.info(f"Refined {template.kind.value} template at {params} to order {presentation.group.order}")
    return presentation
