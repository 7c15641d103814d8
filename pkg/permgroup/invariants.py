import logging
from math import factorial, prod

from .exceptional import verify_table
from .nesting import level_actions, primitive_nesting
from .oracles import brute_force_is_primitive, preserves, refines_block
from .services import block_system, is_primitive, minimal_block_containing

logger = logging.getLogger(__name__)

ORDER_ENUMERATION_LIMIT = 10_000
PRIMITIVITY_ORACLE_MAX_DEGREE = 9


def check_group(g):
    """Violations of the group-level identities for one group, as messages."""
    problems = []
    order = g.order()
    if factorial(g.degree) % order:
        problems.append(f"order {order} does not divide {g.degree}!")
    if order <= ORDER_ENUMERATION_LIMIT and len(g.elements(cap=ORDER_ENUMERATION_LIMIT)) != order:
        problems.append(f"order {order} disagrees with explicit enumeration")
    if not g.is_transitive() or g.degree == 1:
        return problems

    for x in range(1, g.degree):
        block = minimal_block_containing(g, (0, x))
        if not preserves(g, block_system(g, block).cells):
            problems.append(f"block system of {list(block)} is not preserved")
        if g.degree <= PRIMITIVITY_ORACLE_MAX_DEGREE and refines_block(g, block, (0, x)):
            problems.append(f"block {list(block)} for (0, {x}) is not minimal")
    if g.degree <= PRIMITIVITY_ORACLE_MAX_DEGREE and is_primitive(g) != brute_force_is_primitive(g):
        problems.append("primitivity disagrees with preserved-partition enumeration")

    nest = primitive_nesting(g)
    actions = level_actions(g, nest)
    bound = prod(action.order() ** (g.degree // len(outer))
                 for action, outer in zip(actions, nest.blocks[1:]))
    if bound < order:
        problems.append(f"nesting product {bound} is below the group order {order}")
    return problems


def check_exceptional_table():
    return [f"{entry.name} (degree {entry.degree}) exceeds its bound" for entry in verify_table()]


SUITES = {
    'exceptional-table': check_exceptional_table,
}
