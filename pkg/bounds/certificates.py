"""
Certificates |Aut_D(U)| <= 2^(c * |U|) for tight interdependent orbit unions.

``iou_bound`` bounds every cell group through its primitive nestings and
combines the steps of a deconstruction sequence; ``primitive_orbit_bound``
handles unions all of whose cell groups are primitive.
"""
import logging
import math
from fractions import Fraction
from math import factorial

import networkx as nx

from core.exact import at_most_power_of_two, describe_fraction
from deconstruction.exceptions import NotAnOrbitUnionError
from deconstruction.services import deconstruction_sequence
from orbit_structure.locks import lock_cycles
from orbit_structure.services import orbit_graph, require_tight, restriction_group
from permgroup.nesting import all_primitive_nestings, classify_nesting, contains_alternating
from permgroup.services import is_primitive
from .domain import BoundCertificate, Derivation, ResidualCell, ResidualData
from .exceptions import BoundsError, CertificateRefused, HypothesisViolation, PrimitivityError, SoundnessViolation
from .nesting import NESTING_CONSTANT, nesting_constant_derivation, nesting_derivation, nesting_exponent

logger = logging.getLogger(__name__)

STRATEGIES = ('auto', 'iou', 'primitive')

FOUR_SEVENTHS = Fraction(4, 7)
PRIMITIVE_CONSTANT = Fraction(138, 100)
PRIMITIVE_UNION_EXPONENT = Fraction(69, 100)
ALTERNATING_UNION_EXPONENT = Fraction(1, 2)
SMALL_CELL_EXPONENT = Fraction(993, 1000)


def describe_union(u):
    return f"union of {u.size} elements in {len(u.cells)} cells of sizes {[len(cell) for cell in u.cells]}"


def cell_groups(u):
    """Lambda_D(D) for every cell D, in cell order."""
    return [restriction_group(u, cell) for cell in u.cells]


def _require_union(u):
    require_tight(u)
    if len(u.cells) > 1 and not nx.is_connected(orbit_graph(u).graph):
        raise NotAnOrbitUnionError("the orbit graph of the structured poset is not connected")


def _single_element(u, target):
    return BoundCertificate(
        target=target, size=u.size, exponent=Fraction(0),
        derivation=Derivation(rule='exact-order', statement="a single element has one automorphism",
                              constants={'order': Fraction(1)}),
    )


def _refuse(reason, cell=None, level=None, advisory=()):
    logger.warning(f"certificate refused: {reason}")
    raise CertificateRefused(reason, cell=cell, level=level, advisory=advisory)


def cell_nesting_derivations(u, label=''):
    """
    One ``nesting-product`` step per cell, for the nesting with the largest
    exponent. Every primitive nesting of every cell group must be proper.
    """
    steps = []
    for index, group in enumerate(cell_groups(u)):
        nests = all_primitive_nestings(group)
        for nest in nests:
            verdict = classify_nesting(nest)
            if not verdict.proper:
                level = verdict.factorial_indices[0]
                _refuse(f"{label}cell {index}: level {level} of degree {nest.levels[level].degree} "
                        f"carries a factorial factor", cell=index, level=level)
        worst = max(nests, key=nesting_exponent)
        exponent = nesting_exponent(worst)
        if exponent > NESTING_CONSTANT:
            message = f"{label}cell {index}: nesting exponent {exponent} exceeds {NESTING_CONSTANT}"
            logger.error(message)
            raise SoundnessViolation(message)
        steps.append(nesting_derivation(worst, f"{label}cell {index}"))
    return steps


def combination_factor(b):
    """b/(2b - 1), and its limit 1/2 when no antichain was collapsed."""
    if b is None or b == math.inf:
        return Fraction(1, 2)
    if b < 1:
        raise BoundsError(f"antichain size bound must be positive, got {b}")
    return Fraction(b, 2 * b - 1)


def combine_deconstruction_bound(u_m_bound, residual_orders, b, c):
    """
    Exponent for |G*| <= 2^(e * |U|) from one prune-and-compact step.

    ``u_m_bound`` is the exponent already certified for the compacted set,
    ``residual_orders`` the ResidualData of the step. With c >= 1 and a
    compacted bound within 4/7 * c the result is min{4/7, b/(2b-1)} * c.
    """
    u_m_bound, c = Fraction(u_m_bound), Fraction(c)
    factor = combination_factor(b)
    if u_m_bound > factor * c:
        raise HypothesisViolation(1, f"compacted exponent {u_m_bound} exceeds {factor} * {c}")
    for cell in residual_orders.cells:
        if not at_most_power_of_two(cell.order, c, cell.size):
            raise HypothesisViolation(2, f"cell of {cell.size} elements has a group of order {cell.order} "
                                         f"above 2^({c} * {cell.size})")
    small = [size for size in residual_orders.antichain_sizes if size < b]
    if small:
        raise HypothesisViolation(3, f"collapsed antichains of sizes {small} are smaller than {b}")
    if residual_orders.trivial:
        return u_m_bound
    if c >= 1 and u_m_bound <= FOUR_SEVENTHS * c:
        return min(FOUR_SEVENTHS, factor) * c
    return factor * c


def residual_data(step):
    """Orders of the residual group and of its restrictions to the cells from D_t on."""
    context, q = step.context, step.q
    position = {x: i for i, x in enumerate(step.q_elements)}
    cells = []
    for j in context.slack_cells + (context.removed_cell,) + context.later_cells:
        points = [position[x] for x in step.source.cells[j]]
        cells.append(ResidualCell(size=len(points), order=restriction_group(q, points).order()))
    return ResidualData(order=q.frame_group.order(), cells=tuple(cells),
                        antichain_sizes=tuple(step.antichain_sizes))


def _two_cell_derivation(u, label):
    exponent = NESTING_CONSTANT / 2
    return exponent, Derivation(
        rule='two-cell-union',
        statement=f"{label}two cells: |Aut_D(U)| <= 2^({describe_fraction(exponent)} * {u.size})",
        constants={'constant': NESTING_CONSTANT, 'half': Fraction(1, 2)},
        children=tuple(cell_nesting_derivations(u, label)) + (nesting_constant_derivation(),),
    )


def iou_bound(u, policy=None, target=None):
    """
    Certificate for a tight interdependent orbit union whose cell groups have
    only proper primitive nestings. Two cells give (1/2) * 1.7376; more cells
    are deconstructed and combined step by step from the two-cell residual.
    """
    _require_union(u)
    target = target or describe_union(u)
    if u.size == 1:
        return _single_element(u, target)
    if len(u.cells) == 2:
        exponent, derivation = _two_cell_derivation(u, '')
        return _issue(u, target, exponent, derivation)

    cell_steps = cell_nesting_derivations(u)
    sequence = deconstruction_sequence(u, policy)
    b = sequence.b
    exponent, derivation = _two_cell_derivation(sequence.final_residual, 'final residual ')
    for index in reversed(range(len(sequence.steps))):
        step = sequence.steps[index]
        residual = residual_data(step)
        exponent = combine_deconstruction_bound(exponent, residual, b, NESTING_CONSTANT)
        constants = {
            'combination_factor': combination_factor(b),
            'four_sevenths': FOUR_SEVENTHS,
            'constant': NESTING_CONSTANT,
            'residual_order': Fraction(residual.order),
            'exponent': exponent,
        }
        if b != math.inf:
            constants['b'] = Fraction(b)
        derivation = Derivation(
            rule='deconstruction-combination',
            statement=f"step {index + 1}, cell {step.context.removed_cell} removed: "
                      f"|G*| <= 2^({describe_fraction(exponent)} * {step.source.size})",
            constants=constants,
            children=(derivation,),
        )
    derivation = Derivation(
        rule=derivation.rule, statement=derivation.statement, constants=derivation.constants,
        children=derivation.children + tuple(cell_steps),
    )
    return _issue(u, target, exponent, derivation)


def _issue(u, target, exponent, derivation):
    certificate = BoundCertificate(target=target, size=u.size, exponent=exponent, derivation=derivation)
    logger.info(f"certified {target}: {certificate.verdict}")
    return certificate


def all_primitive(u):
    return all(group.degree == 1 or is_primitive(group) for group in cell_groups(u))


def primitive_orbit_bound(u, target=None):
    """
    Certificate for a union all of whose cell groups are primitive, so that
    |Aut_D(U)| = |Lambda_D(D)| for every cell D.

    Without alternating content the bound is 1.38 * min |D| <= 0.69 * |U|.
    When some cell carries its alternating group and the cell sizes differ,
    |U| is at least d(d+1)/2 for such a cell of size d and the bound is
    |U|/2. Equal-sized cells with alternating content are refused with the
    lock cycles of the union attached.
    """
    _require_union(u)
    target = target or describe_union(u)
    if u.size == 1:
        return _single_element(u, target)
    groups = cell_groups(u)
    for index, group in enumerate(groups):
        if group.degree > 1 and not is_primitive(group):
            raise PrimitivityError(f"cell {index} of size {group.degree} carries an imprimitive group")
    sizes = [len(cell) for cell in u.cells]
    alternating = [index for index, group in enumerate(groups) if contains_alternating(group)]
    if not alternating:
        smallest = min(sizes)
        derivation = Derivation(
            rule='primitive-union',
            statement=f"|Aut_D(U)| = |Lambda(D)| <= 2^({PRIMITIVE_CONSTANT} * {smallest}) "
                      f"<= 2^({PRIMITIVE_UNION_EXPONENT} * {u.size})",
            constants={'primitive_constant': PRIMITIVE_CONSTANT, 'min_cell': Fraction(smallest),
                       'exponent': PRIMITIVE_UNION_EXPONENT},
        )
        return _issue(u, target, PRIMITIVE_UNION_EXPONENT, derivation)
    if len(set(sizes)) == 1:
        reports = lock_cycles(u)
        _refuse(f"all {len(sizes)} cells have {sizes[0]} elements and carry alternating groups; "
                f"{len(reports)} lock cycles found", cell=alternating[0], advisory=reports)
    d = min(sizes[index] for index in alternating)
    if 2 * u.size < d * (d + 1) or not at_most_power_of_two(factorial(d), ALTERNATING_UNION_EXPONENT, u.size):
        message = f"alternating cell of {d} elements in a union of only {u.size}"
        logger.error(message)
        raise SoundnessViolation(message)
    derivation = Derivation(
        rule='alternating-union',
        statement=f"|Aut_D(U)| = |Lambda(D)| <= {d}! with |U| >= {d}({d}+1)/2, "
                  f"so <= 2^({ALTERNATING_UNION_EXPONENT} * {u.size})",
        constants={'cell_size': Fraction(d), 'min_union_size': Fraction(d * (d + 1), 2),
                   'exponent': ALTERNATING_UNION_EXPONENT},
    )
    return _issue(u, target, ALTERNATING_UNION_EXPONENT, derivation)


def certify_union(u, strategy='auto', policy=None, target=None):
    """The primitive route when every cell group is primitive, otherwise the deconstruction route."""
    if strategy not in STRATEGIES:
        raise BoundsError(f"unknown strategy {strategy!r}, expected one of {', '.join(STRATEGIES)}")
    if strategy == 'auto':
        require_tight(u)
        strategy = 'primitive' if all_primitive(u) else 'iou'
    if strategy == 'primitive':
        return primitive_orbit_bound(u, target)
    return iou_bound(u, policy, target)
