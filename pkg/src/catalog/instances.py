"""
From catalog entries to concrete groups: admissible assignments, groups and
the values each claim takes at an assignment.
"""
from src.catalog.entry import ParameterAssignment
from src.catalog.errors import InadmissibleAssignment, UnboundParameter
from src.fp import PrimeField
from src.pcgroup.errors import (ConstraintViolation, ExpressionError,
                                OrderGuardExceeded, UnboundName)
from src.pcgroup.expressions import evaluate, evaluate_int
from src.pcgroup.group import DEFAULT_MAX_ORDER
from src.pcgroup.template import refine_to_pc
from src.structure.invariants import log_p
from src.utils.logger import log

TYPE_CLAIMS = ("derived_type", "center_type", "frattini_type")


def _holds(expression, env):
    try:
        return bool(evaluate(expression, env))
    except ExpressionError:
        return False


def applies_at(entry, p):
    """Whether the entry's prime condition admits ``p``."""
    return _holds(entry.primes, {"p": p})


def check_admissible(entry, assignment):
    """Raise InadmissibleAssignment naming the first constraint that fails."""
    env = assignment.env()
    given = set(env) - {"p"}
    missing = sorted(set(entry.parameter_names) - given)
    if missing:
        raise UnboundParameter(entry.id, missing[0], "assignment")
    unknown = sorted(given - set(entry.parameter_names))
    if unknown:
        raise InadmissibleAssignment(entry.id, f"unknown parameter {unknown[0]}", assignment)
    if not _holds(entry.primes, env):
        raise InadmissibleAssignment(entry.id, entry.primes, assignment)
    F = PrimeField(assignment.p)
    for spec in entry.parameters:
        value = env[spec.name]
        if spec.kind == "integer" and spec.values is None:
            if value < spec.minimum:
                raise InadmissibleAssignment(entry.id, f"{spec.name} >= {spec.minimum}", assignment)
        elif value not in spec.candidates(env, value):
            raise InadmissibleAssignment(entry.id, f"{spec.name} in its domain", assignment)
        if spec.residue is not None and not spec.residue.holds(value, F):
            raise InadmissibleAssignment(entry.id, f"{spec.residue.kind.value}({spec.name})", assignment)
    for constraint in entry.constraints:
        if not _holds(constraint, env):
            raise InadmissibleAssignment(entry.id, constraint, assignment)


def expected_order(entry, assignment):
    try:
        return evaluate_int(entry.order, assignment.env())
    except UnboundName as e:
        raise UnboundParameter(entry.id, e.name, "order")


def instantiate(entry, assignment, catalog=None, max_order=DEFAULT_MAX_ORDER,
                sample_triples=10 ** 4, seed=20240229, check_defining=True):
    """The consistency-checked PcGroup of ``entry`` at ``assignment``."""
    check_admissible(entry, assignment)
    order = expected_order(entry, assignment)
    if order > max_order:
        raise OrderGuardExceeded(order, max_order)
    template = catalog.template(entry) if catalog is not None else entry.template
    try:
        presentation = refine_to_pc(template, assignment.env(), max_order, sample_triples, seed,
                                    check_defining)
    except ConstraintViolation as e:
        raise InadmissibleAssignment(entry.id, e.constraint, assignment)
    group = presentation.group
    if group.order != order:
        log.warning(f"{entry.id} at {assignment}: built order {group.order}, expected {order}")
    return group


def instantiate_product_form(entry, assignment, catalog, max_order=DEFAULT_MAX_ORDER,
                             sample_triples=10 ** 4, seed=20240229):
    """The group of the entry's product description, or None if it has none."""
    template = catalog.product_template(entry)
    if template is None:
        return None
    return refine_to_pc(template, assignment.env(), max_order, sample_triples, seed).group


def instantiate_product_factors(entry, assignment, catalog, max_order=DEFAULT_MAX_ORDER,
                                sample_triples=10 ** 4, seed=20240229):
    """[(factor id, group)] of the entry's product description, or [] if it has none."""
    template = catalog.product_template(entry)
    if template is None:
        return []
    env = assignment.env()
    factors = []
    for factor in template.product.factors:
        params = {"p": env["p"]}
        params.update({name: evaluate_int(expr, env) for name, expr in factor.bindings.items()})
        group = refine_to_pc(factor.template, params, max_order, sample_triples, seed).group
        factors.append((factor.label, group))
    return factors


def enumerate_small(entry, max_order, primes):
    """Every admissible assignment whose expected order is at most ``max_order``.

    Primes ascend; parameters vary in declaration order, last one fastest.
    """
    assignments = []
    for p in sorted(set(primes)):
        env = {"p": p}
        if not _holds(entry.primes, env):
            continue
        cap = log_p(max_order, p)
        assignments += _extend(entry, env, list(entry.parameters), cap, max_order, PrimeField(p))
    return assignments


def _extend(entry, env, remaining, cap, max_order, F):
    if not remaining:
        if not all(_holds(c, env) for c in entry.constraints):
            return []
        try:
            order = evaluate_int(entry.order, env)
        except ExpressionError:
            return []
        if order > max_order:
            return []
        values = {k: v for k, v in env.items() if k != "p"}
        return [ParameterAssignment.of(env["p"], **values)]
    spec, rest = remaining[0], remaining[1:]
    found = []
    for value in spec.candidates(env, cap):
        if spec.residue is not None and not spec.residue.holds(value, F):
            continue
        found += _extend(entry, {**env, spec.name: value}, rest, cap, max_order, F)
    return found


def _normalise(name, value):
    if name in TYPE_CLAIMS:
        if value is None:
            return None
        items = value if isinstance(value, list) else [value]
        return tuple(sorted((int(v) for v in items if int(v) != 1), reverse=True))
    if name == "mu":
        return tuple(int(v) for v in value)
    return value


def evaluate_claim(entry, name, expression, env):
    try:
        return _normalise(name, evaluate(expression, env))
    except UnboundName as e:
        raise UnboundParameter(entry.id, e.name, f"claims.{name}")


def expected_invariants(entry, assignment):
    """{claim: value} for every claim of the entry, ``order`` and ``at`` included."""
    env = assignment.env()
    record = {"order": expected_order(entry, assignment)}
    try:
        record["at"] = evaluate_int(entry.level, env)
    except UnboundName as e:
        raise UnboundParameter(entry.id, e.name, "level")
    for name, expression in entry.claims.items():
        record[name] = evaluate_claim(entry, name, expression, env)
    return record


def alternative_readings(entry, assignment):
    """{claim: [(reading, value)]} for the readings whose ``when`` holds at ``assignment``."""
    env = assignment.env()
    found = {}
    for name, readings in entry.alternatives.items():
        for reading in readings:
            if not _holds(reading.get("when", "True"), env):
                continue
            value = evaluate_claim(entry, name, reading["value"], env)
            found.setdefault(name, []).append((reading.get("reading", ""), value))
    return found


def smallest_assignment(entry, primes=(2, 3, 5, 7), max_order=DEFAULT_MAX_ORDER):
    """The admissible assignment of least order, or None."""
    candidates = enumerate_small(entry, max_order, primes)
    if not candidates:
        return None
    return min(candidates, key=lambda a: (expected_order(entry, a), a.p, a.values))