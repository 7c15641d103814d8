"""
Enumeration checks for a single prune-and-compact step.

Every function here lists the whole frame automorphism group (or a given
subgroup G*) and is capped by ``settings.AUT_ENUMERATION_CAP``.
"""
import logging
from dataclasses import dataclass

import networkx as nx
from django.conf import settings

from counting.search import is_automorphism
from orbit_structure.services import orbit_graph, restriction_group
from permgroup.domain import Permutation
from .exceptions import DeconstructionError, DeconstructionInvariantError
from .services import prune_and_compact

logger = logging.getLogger(__name__)


def _elements(u, g_star, cap):
    cap = cap if cap is not None else settings.AUT_ENUMERATION_CAP
    group = u.frame_group if g_star is None else g_star
    elements = sorted(group.elements(cap=cap), key=lambda perm: perm.image)
    if g_star is not None:
        for perm in g_star.generators:
            if not is_automorphism(u.poset, perm.image) or any(
                    {perm(x) for x in cell} != set(cell) for cell in u.cells):
                raise DeconstructionError(f"{perm} is not a frame automorphism")
    return elements


def _representative_of(step):
    return {x: cell.representative for parts in step.context.partitions.values() for cell in parts for x in cell.members}


def compacted(step, perm):
    """Phi_n: the action of perm on U_n, each antichain read through its representative."""
    representative = _representative_of(step)
    position = {x: i for i, x in enumerate(step.u_n_elements)}
    for parts in step.context.partitions.values():
        for cell in parts:
            if len({representative.get(perm(x), perm(x)) for x in cell.members}) != 1:
                message = f"{perm} splits the autonomous antichain {list(cell.members)}"
                logger.error(message)
                raise DeconstructionInvariantError(message)
    image = []
    for x in step.u_n_elements:
        y = perm(x)
        image.append(position[representative.get(y, y)])
    return Permutation(tuple(image))


def _respects_cells(sp, perm):
    return all({perm(x) for x in cell} == set(cell) for cell in sp.cells)


@dataclass(frozen=True)
class StepSplit:
    """A prune-and-compact step with G* enumerated once: its compacted images and kernel."""
    step: object
    elements: list
    images: frozenset
    kernel: list


def split_step(u, d_n, g_star=None, cap=None, allow_cutvertex=False, step=None):
    """The step, the compacted images of G* and the elements of G* compacting to the identity."""
    if step is None:
        step = prune_and_compact(u, d_n, allow_cutvertex=allow_cutvertex)
    elements = _elements(u, g_star, cap)
    images = set()
    kernel = []
    identity = Permutation.identity(step.u_n.size)
    for perm in elements:
        image = compacted(step, perm)
        if not is_automorphism(step.u_n.poset, image.image) or not _respects_cells(step.u_n, image):
            message = f"compacted {perm} is not a frame automorphism of U_n"
            logger.error(message)
            raise DeconstructionInvariantError(message)
        images.add(image)
        if image == identity:
            kernel.append(perm)
    return StepSplit(step=step, elements=elements, images=frozenset(images), kernel=kernel)


def verify_factorization(u, d_n, g_star=None, cap=None, allow_cutvertex=False, split=None):
    """
    (|G*|, |{Phi_n}|, |{Psi restricted to Q : Psi_n = id}|, equal) for G* the
    frame automorphism group of u unless a subgroup is supplied.
    """
    if split is None:
        split = split_step(u, d_n, g_star, cap, allow_cutvertex)
    restricted = {perm.restricted(split.step.q_elements) for perm in split.kernel}
    lhs, left, right = len(split.elements), len(split.images), len(restricted)
    if lhs != left * right:
        logger.error(f"removing cell {d_n}: {lhs} != {left} * {right}")
    return lhs, left, right, lhs == left * right


def residual_matches_frame_group(u, d_n, cap=None, split=None):
    """
    The kernel {Psi : Psi_n = id}, restricted to Q, is exactly the frame group
    of (Q, D_Q). A supplied split must enumerate the whole frame group of u.
    """
    cap = cap if cap is not None else settings.AUT_ENUMERATION_CAP
    if split is None:
        split = split_step(u, d_n, None, cap)
    restricted = {perm.restricted(split.step.q_elements) for perm in split.kernel}
    return restricted == set(split.step.q.frame_group.elements(cap=cap))


def separation_partition(u, d_n, g_star=None, cap=None, split=None):
    """
    The orbits of the residual group G*-kernel restricted to Q that lie in
    D_n, in elements of u. Every element of G* must map these residual
    orbits onto residual orbits.
    """
    if split is None:
        split = split_step(u, d_n, g_star, cap)
    step, kernel = split.step, split.kernel
    orbits = {tuple(sorted({perm(x) for perm in kernel})) for x in step.q_elements}
    for perm in split.elements:
        for orbit in orbits:
            if tuple(sorted(perm(x) for x in orbit)) not in orbits:
                message = f"{perm} does not map residual orbit {list(orbit)} onto a residual orbit"
                logger.error(message)
                raise DeconstructionInvariantError(message)
    removed = set(u.cells[step.context.removed_cell])
    return sorted(orbit for orbit in orbits if set(orbit) <= removed)


def bipartite_layer_check(sp):
    """
    (|G|, |G on B|, |G on T|, equal) for a tight structured poset whose orbit
    graph is bipartite with sides B and T. Isolated cells must be singletons
    and are left out of both sides.
    """
    og = orbit_graph(sp)
    graph = og.graph
    if not nx.is_bipartite(graph):
        raise DeconstructionError("orbit graph is not bipartite")
    for v in nx.isolates(graph):
        if og.cell_sizes[v] > 1:
            raise DeconstructionError(f"cell {v} is not interdependent with any other cell")
    colour = nx.bipartite.color(graph)
    sides = [[x for v in og.vertices if graph.degree(v) and colour[v] == side for x in sp.cells[v]]
             for side in (0, 1)]
    order = sp.frame_group.order()
    on_b, on_t = (restriction_group(sp, side).order() if side else 1 for side in sides)
    return order, on_b, on_t, order == on_b == on_t
