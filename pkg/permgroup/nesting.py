import logging
from math import factorial

from .domain import NestingClassification, NestingLevel, PrimitiveNesting
from .exceptional import level_bound_constant
from .exceptions import GroupError
from .services import induced_block_action, is_primitive, minimal_block_of, require_transitive

logger = logging.getLogger(__name__)

# smallest degree at which an alternating level action is a factorial factor
FACTORIAL_DEGREE = 6


def contains_alternating(g):
    # a subgroup of S_d of index at most 2 is S_d or A_d
    return 2 * g.order() >= factorial(g.degree)


def _carries_factorial(degree, order):
    return degree >= FACTORIAL_DEGREE and 2 * order >= factorial(degree)


def _block_key(block):
    return (len(block), block)


def _candidate_blocks(g, current):
    candidates = set()
    for x in range(g.degree):
        if x not in current:
            candidates.add(minimal_block_of(g, set(current) | {x}))
    return candidates


def _minimal_over(g, current):
    """Every block that contains current properly with nothing strictly in between."""
    candidates = _candidate_blocks(g, current)
    minimal = [b for b in candidates
               if not any(other != b and set(other) < set(b) for other in candidates)]
    return sorted(minimal, key=_block_key)


def _levels(g, blocks):
    levels = []
    for inner, outer in zip(blocks, blocks[1:]):
        action = induced_block_action(g, inner, outer)
        degree = len(outer) // len(inner)
        order = action.order()
        levels.append(NestingLevel(
            degree=degree,
            group_order=order,
            proper=not _carries_factorial(degree, order),
            bound_constant=level_bound_constant(degree),
        ))
    return tuple(levels)


def primitive_nesting(g, start=0):
    """
    The nesting obtained by repeatedly taking a smallest block that properly
    contains the current one; ties go to the lexicographically least block.
    """
    require_transitive(g)
    if not 0 <= start < g.degree:
        raise GroupError(f"start point {start} outside the domain")
    blocks = [(start,)]
    while len(blocks[-1]) < g.degree:
        blocks.append(min(_candidate_blocks(g, blocks[-1]), key=_block_key))
    nesting = PrimitiveNesting(blocks=tuple(blocks), levels=_levels(g, blocks))
    logger.info(f"primitive nesting of {g} has level degrees {[level.degree for level in nesting.levels]}")
    return nesting


def all_primitive_nestings(g, start=0):
    require_transitive(g)
    chains = []

    def extend(blocks):
        if len(blocks[-1]) == g.degree:
            chains.append(tuple(blocks))
            return
        for block in _minimal_over(g, blocks[-1]):
            extend(blocks + [block])

    extend([(start,)])
    return [PrimitiveNesting(blocks=blocks, levels=_levels(g, blocks)) for blocks in chains]


def classify_nesting(nest):
    indices = tuple(j for j, level in enumerate(nest.levels)
                    if _carries_factorial(level.degree, level.group_order))
    return NestingClassification(proper=not indices, factorial_indices=indices)


def has_only_proper_nestings(g):
    return all(classify_nesting(nest).proper for nest in all_primitive_nestings(g))


def level_actions(g, nest):
    """The induced block actions of every level, each re-checked primitive."""
    actions = []
    for inner, outer in zip(nest.blocks, nest.blocks[1:]):
        action = induced_block_action(g, inner, outer)
        if action.degree > 1 and not is_primitive(action):
            raise GroupError(f"level action on {list(outer)} is not primitive")
        actions.append(action)
    return actions
