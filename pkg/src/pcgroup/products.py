from src.pcgroup.errors import ProductError
from src.pcgroup.group import DEFAULT_MAX_ORDER, PcGroup
from src.pcgroup.pcgs import pc_presentation_of
from src.pcgroup.presentation import ConsistencyStatus, PcPresentation
from src.pcgroup.quotient import QuotientGroup
from src.pcgroup.words import rename
from src.utils.logger import log


def _presentation(group):
    if isinstance(group, PcGroup):
        return group.presentation
    presentation, _ = pc_presentation_of(group)
    PcGroup(presentation)
    # read off an existing group, so it presents that group by construction
    presentation.status = ConsistencyStatus.VERIFIED
    return presentation


def _fresh_names(taken, names):
    mapping = {}
    used = set(taken)
    for name in names:
        candidate = name
        suffix = 2
        while candidate in used:
            candidate = f"{name}_{suffix}"
            suffix += 1
        mapping[name] = candidate
        used.add(candidate)
    return mapping


def direct_product(A, B, max_order=DEFAULT_MAX_ORDER):
    """A x B with A's levels on top: (a, b) is the element a * |B| + b."""
    left, right = _presentation(A), _presentation(B)
    if left.prime != right.prime:
        raise ProductError(f"cannot multiply a {left.prime}-group by a {right.prime}-group")
    mapping = _fresh_names(left.names, right.names)
    shift = len(left.names)
    conjugates = dict(left.conjugates)
    for (j, i), node in right.conjugates.items():
        conjugates[(j + shift, i + shift)] = rename(node, mapping)
    defines = dict(left.defines)
    for j, (source, exponent) in right.defines.items():
        defines[j + shift] = (source + shift, exponent)
    presentation = PcPresentation(
        prime=left.prime,
        names=left.names + [mapping[n] for n in right.names],
        exponents=left.exponents + right.exponents,
        powers=left.powers + [rename(node, mapping) for node in right.powers],
        conjugates=conjugates,
        defines=defines,
    )
    group = PcGroup(presentation, max_order)
    if left.status == right.status == ConsistencyStatus.VERIFIED:
        presentation.status = ConsistencyStatus.VERIFIED
    log.info(f"Direct product of orders {A.order} and {B.order}")
    return group


def _is_central(group, z):
    return all(group.mul(z, g) == group.mul(g, z) for g in group.generators())


def central_product(A, B, identification, max_order=DEFAULT_MAX_ORDER):
    """A * B identifying the central elements za of A and zb of B."""
    za, zb = (int(z) for z in identification)
    if not _is_central(A, za) or not _is_central(B, zb):
        raise ProductError("identified elements must be central")
    if A.element_order(za) != B.element_order(zb):
        raise ProductError(f"identified elements have orders {A.element_order(za)} "
                           f"and {B.element_order(zb)}")
    product = direct_product(A, B, max_order * B.order)
    z = product.mul(za * B.order, product.inv(zb))
    kernel = product.closure([z])
    presentation, _ = pc_presentation_of(QuotientGroup(product, kernel))
    group = PcGroup(presentation, max_order)
    presentation.status = ConsistencyStatus.VERIFIED
    log.info(f"Central product of orders {A.order} and {B.order} has order {group.order}")
    return group
