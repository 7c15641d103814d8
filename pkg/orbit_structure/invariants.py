import logging
from math import factorial

from permgroup.nesting import contains_alternating
from poset_core.services import is_coconnected, width
from .locks import lock_cycles, locked_restriction_bound
from .services import (
    extends_by_identity, factorization_check, interdependent_orbit_unions, is_max_locked,
    orbit_graph, restriction_group, structured, union_elements, union_structured_poset,
)

logger = logging.getLogger(__name__)


def check_factorization(p, caps=None):
    lhs, rhs, equal = factorization_check(p)
    return [] if equal else [f"|Aut| = {lhs} but the union product is {rhs}"]


def check_unions(p, caps=None, sp=None):
    """
    For every interdependent orbit union U: a cell of U with one element
    below (above) an outside x lies entirely below (above) x, and every
    frame automorphism of U extended by the identity is an automorphism.
    """
    sp = sp or structured(p)
    problems = []
    for cells in interdependent_orbit_unions(orbit_graph(sp)):
        elements = union_elements(sp, cells)
        outside = sorted(set(range(p.size)) - set(elements))
        for c in cells:
            cell = list(sp.cells[c])
            for x in outside:
                below, above = p.lt[cell, x], p.lt[x, cell]
                if below.any() and not below.all():
                    problems.append(f"cell {c} is partly below outside element {x}")
                if above.any() and not above.all():
                    problems.append(f"cell {c} is partly above outside element {x}")
        if len(elements) == 1:
            continue
        union, _ = union_structured_poset(sp, cells)
        for perm in union.frame_group.generators:
            if not extends_by_identity(sp, perm, elements):
                problems.append(f"{perm} on union {list(cells)} does not extend by the identity")
    return problems


def check_alternating_levels(p, caps=None, sp=None):
    """A coconnected width-w poset whose rank level carries A_w is max-locked with |Aut| = w!."""
    w = width(p)
    if w < 3 or not is_coconnected(p):
        return []
    sp = sp or structured(p)
    problems = []
    for rank in range(p.height + 1):
        level = p.rank_level(rank)
        if len(level) != w or not contains_alternating(restriction_group(sp, level)):
            continue
        if not is_max_locked(p):
            problems.append(f"rank level {rank} carries A_{w} but the poset is not max-locked")
        order = sp.frame_group.order()
        if order != factorial(w):
            problems.append(f"rank level {rank} carries A_{w} but |Aut| = {order} != {w}!")
        break
    return problems


def check_lock_cycles(p, caps=None, sp=None):
    sp = sp or structured(p)
    if not sp.tight:
        return []
    problems = []
    for report in lock_cycles(sp):
        if not report.nontrivially_locked:
            continue
        order, bound = locked_restriction_bound(sp, report)
        if order > bound:
            problems.append(f"lock cycle {list(report.cycle)}: restriction order {order} exceeds M!/(M-1) = {bound}")
    return problems


POSET_SUITES = {
    'factorization': check_factorization,
    'union-properties': check_unions,
    'alternating-levels': check_alternating_levels,
    'lock-cycles': check_lock_cycles,
}
