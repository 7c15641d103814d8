import logging

import networkx as nx
from django.conf import settings

from catalog.services import circulant
from orbit_structure.services import interdependent_orbit_unions, orbit_graph, structured, union_structured_poset
from permgroup.exceptions import EnumerationCapError
from .exceptions import DeconstructionInvariantError
from .services import deconstruction_sequence
from .verification import (
    bipartite_layer_check, residual_matches_frame_group, separation_partition, split_step, verify_factorization,
)

logger = logging.getLogger(__name__)

CIRCULANT_SHAPES = ((3, 3), (4, 3), (3, 4))


def _cap(caps, name, default):
    value = (caps or {}).get(name)
    return value if value is not None else default


def _tight_unions(p, cap, sp=None, min_cells=1):
    sp = sp or structured(p)
    for cells in interdependent_orbit_unions(orbit_graph(sp)):
        if len(cells) < min_cells:
            continue
        union, _ = union_structured_poset(sp, cells)
        if union.tight and union.frame_group.order() <= cap:
            yield cells, union


def check_removal(u, label, cap):
    """Product and residual identities, the separation partition and the two-layer residual for every noncutvertex."""
    problems = []
    graph = orbit_graph(u).graph
    cutvertices = set(nx.articulation_points(graph))
    for d_n in sorted(set(graph.nodes) - cutvertices):
        try:
            split = split_step(u, d_n, cap=cap)
            lhs, left, right, equal = verify_factorization(u, d_n, split=split)
            if not equal:
                problems.append(f"{label}, cell {d_n}: |Aut| = {lhs} but {left} * {right}")
            if not residual_matches_frame_group(u, d_n, cap=cap, split=split):
                problems.append(f"{label}, cell {d_n}: kernel differs from the residual frame group")
            separation_partition(u, d_n, split=split)
            order, on_b, on_t, layered = bipartite_layer_check(split.step.q)
            if not layered:
                problems.append(f"{label}, cell {d_n}: residual orders {order}, {on_b}, {on_t}")
        except DeconstructionInvariantError as exc:
            problems.append(f"{label}, cell {d_n}: {exc}")
        except EnumerationCapError:
            logger.warning(f"{label}, cell {d_n}: skipped, group exceeds the enumeration cap")
    return problems


def check_pruning(p, caps=None, sp=None):
    cap = _cap(caps, 'aut_cap', settings.AUT_ENUMERATION_CAP)
    problems = []
    for cells, union in _tight_unions(p, cap, sp, min_cells=3):
        problems.extend(check_removal(union, f"union {list(cells)}", cap))
    return problems


def check_two_layers(p, caps=None, sp=None):
    cap = _cap(caps, 'aut_cap', settings.AUT_ENUMERATION_CAP)
    problems = []
    for cells, union in _tight_unions(p, cap, sp):
        if len(cells) != 2:
            continue
        order, on_b, on_t, equal = bipartite_layer_check(union)
        if not equal:
            problems.append(f"union {list(cells)}: |G| = {order}, on B {on_b}, on T {on_t}")
    return problems


def check_sequences(p, caps=None, sp=None):
    cap = _cap(caps, 'aut_cap', settings.AUT_ENUMERATION_CAP)
    problems = []
    for cells, union in _tight_unions(p, cap, sp, min_cells=3):
        try:
            sequence = deconstruction_sequence(union)
        except DeconstructionInvariantError as exc:
            problems.append(f"union {list(cells)}: {exc}")
            continue
        if len(sequence.steps) != len(cells) - 2 or len(sequence.final_residual.cells) != 2:
            problems.append(f"union {list(cells)}: {len(sequence.steps)} steps for {len(cells)} cells")
        if sequence.bounded and sequence.b < 2:
            problems.append(f"union {list(cells)}: b = {sequence.b}")
    return problems


def check_circulant_unions(count=40, seed=0, caps=None):
    """Pruning identities on the tight unions of seeded rotation-invariant posets."""
    problems = []
    for offset in range(count):
        k, levels = CIRCULANT_SHAPES[offset % len(CIRCULANT_SHAPES)]
        p = circulant(k, levels=levels, density=50, seed=seed + offset)
        problems.extend(f"circulant seed {seed + offset}: {problem}" for problem in check_pruning(p, caps))
    return problems


POSET_SUITES = {
    'pruning': check_pruning,
    'two-layers': check_two_layers,
    'deconstruction-sequences': check_sequences,
}

SUITES = {
    'circulant-unions': check_circulant_unions,
}
