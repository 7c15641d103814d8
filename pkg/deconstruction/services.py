import logging
import math

import networkx as nx
import numpy as np
from django.conf import settings

from orbit_structure.domain import OrbitFrame, StructuredPoset
from orbit_structure.services import orbit_graph, require_tight, tighten, union_elements
from poset_core.services import induced_subposet, maximal_autonomous_antichain_partition
from .domain import DeconstructionContext, DeconstructionSequence, DeconstructionStep
from .exceptions import (
    CutvertexError, DeconstructionError, DeconstructionInvariantError, GraphNotConnectedError,
    NotAnOrbitUnionError,
)

logger = logging.getLogger(__name__)

POLICIES = ('first', 'max_cell', 'min_cell')


def choose_noncutvertex(og, policy=None):
    """
    A vertex whose removal leaves the orbit graph connected.

    ``first`` takes the lowest index, ``max_cell`` and ``min_cell`` the
    largest or smallest cell with ties going to the lowest index.
    """
    policy = policy or settings.NONCUTVERTEX_POLICY
    if policy not in POLICIES:
        raise DeconstructionError(f"unknown policy {policy!r}, expected one of {', '.join(POLICIES)}")
    graph = og.graph
    if graph.number_of_nodes() < 3:
        raise DeconstructionError(f"need at least 3 cells, got {graph.number_of_nodes()}")
    if not nx.is_connected(graph):
        raise GraphNotConnectedError("orbit graph is not connected")
    cutvertices = set(nx.articulation_points(graph))
    candidates = [v for v in og.vertices if v not in cutvertices]
    if policy == 'max_cell':
        return min(candidates, key=lambda v: (-og.cell_sizes[v], v))
    if policy == 'min_cell':
        return min(candidates, key=lambda v: (og.cell_sizes[v], v))
    return candidates[0]


def substructure(p, cells):
    """StructuredPoset induced on the union of ``cells``, plus its element map."""
    sub, elements = induced_subposet(p, [x for cell in cells for x in cell])
    position = {x: i for i, x in enumerate(elements)}
    frame = OrbitFrame(tuple(tuple(position[x] for x in cell) for cell in cells))
    return StructuredPoset(sub, frame), elements


def _context(u, og, d_n, allow_cutvertex):
    rest = og.graph.copy()
    rest.remove_node(d_n)
    components = sorted(sorted(component) for component in nx.connected_components(rest))
    if len(components) > 1 and not allow_cutvertex:
        raise CutvertexError(f"cell {d_n} is a cutvertex of the orbit graph")
    component = components[0]
    later = sorted(set(rest.nodes) - set(component))
    neighbours = set(og.neighbours(d_n))
    ambient = union_elements(u, component)
    partitions = {
        j: tuple(maximal_autonomous_antichain_partition(u.poset, ambient, u.cells[j]))
        for j in component if j in neighbours
    }
    plain = [j for j in component if j not in neighbours]
    slack = [j for j in partitions if any(cell.nontrivial for cell in partitions[j])]
    trivial = [j for j in partitions if j not in slack]
    quiet = [j for j in later if j not in neighbours]
    linked = [j for j in later if j in neighbours]
    s = len(plain) + 1
    t = s + len(trivial)
    n = t + len(slack)
    return DeconstructionContext(
        labels=tuple(plain + trivial + slack + [d_n] + quiet + linked),
        s=s, t=t, n=n, r=n + 1 + len(quiet),
        partitions=partitions,
    )


def _fail(message):
    logger.error(message)
    raise DeconstructionInvariantError(message)


def _check_step(u, step):
    context = step.context
    comparable = u.poset.lt | u.poset.lt.T
    removed = list(u.cells[context.removed_cell])
    for j, parts in context.partitions.items():
        # a lone component cell may well be one autonomous antichain
        if len(parts) < 2 and len(context.component_cells) > 1:
            _fail(f"cell {j} is a single autonomous antichain inside the component")
        if len({cell.size for cell in parts}) != 1:
            _fail(f"autonomous antichains of cell {j} have sizes {[cell.size for cell in parts]}")
    for j in context.slack_cells:
        for cell in context.partitions[j]:
            x = cell.members[0]
            for y in cell.members[1:]:
                if not np.any(comparable[x, removed] != comparable[y, removed]):
                    _fail(f"no element of cell {context.removed_cell} separates {x} from {y}")
    if not step.u_n.tight:
        _fail(f"pruned and compacted set of {step.u_n.size} elements is not tight")
    if len(step.u_n.cells) > 1 and not nx.is_connected(orbit_graph(step.u_n).graph):
        _fail("pruned and compacted set is not an interdependent orbit union")
    if not step.q.tight:
        _fail(f"residual of {step.q.size} elements is not tight")


def prune_and_compact(u, d_n, allow_cutvertex=False):
    """
    Remove cell ``d_n`` from the tight interdependent orbit union ``u``.

    U_n keeps the component cells not interdependent with D_n whole and
    shrinks every other component cell to one representative per maximal
    autonomous antichain. Q holds the interdependent component cells, D_n
    and everything beyond it, framed by the orbits of the antichain cells
    together with D_n..D_m.
    """
    require_tight(u)
    if not 0 <= d_n < len(u.cells):
        raise DeconstructionError(f"no cell {d_n} among {len(u.cells)} cells")
    og = orbit_graph(u)
    if not nx.is_connected(og.graph):
        raise NotAnOrbitUnionError("the orbit graph of the structured poset is not connected")
    context = _context(u, og, d_n, allow_cutvertex)
    parts = context.partitions
    u_n_cells = [
        tuple(cell.representative for cell in parts[j]) if j in parts else u.cells[j]
        for j in context.component_cells
    ]
    q_cells = [cell.members for j in context.interdependent_cells for cell in parts[j]]
    q_cells += [u.cells[j] for j in (context.removed_cell,) + context.later_cells]
    u_n, u_n_elements = substructure(u.poset, u_n_cells)
    q, q_elements = substructure(u.poset, q_cells)
    step = DeconstructionStep(
        source=u,
        context=context,
        u_n=u_n,
        q=tighten(q),
        u_n_elements=u_n_elements,
        q_elements=q_elements,
    )
    _check_step(u, step)
    logger.info(
        f"removed cell {d_n}: s={context.s} t={context.t} n={context.n} m={context.m}, "
        f"U_n has {u_n.size} elements, Q has {q.size}")
    return step


def deconstruction_sequence(u, policy=None):
    """Prune noncutvertices until two cells remain; b is the least collapsed antichain size."""
    require_tight(u)
    steps = []
    current = u
    b = math.inf
    while len(current.cells) >= 3:
        d_n = choose_noncutvertex(orbit_graph(current), policy)
        step = prune_and_compact(current, d_n)
        steps.append(step)
        b = min([b] + step.antichain_sizes)
        current = step.u_n
    logger.info(f"deconstruction of {u.size} elements took {len(steps)} steps, b = {b}")
    return DeconstructionSequence(steps=tuple(steps), final_residual=current, b=b)
