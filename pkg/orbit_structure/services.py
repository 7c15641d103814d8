import logging
from math import prod

import networkx as nx
import numpy as np

from catalog.services import s_w, w_c2
from counting.search import aut_group, are_isomorphic, is_automorphism
from permgroup.domain import PermGroup
from poset_core.services import induced_subposet, width
from .domain import MaxLockedUnion, OrbitFrame, OrbitGraph, StructuredPoset
from .exceptions import NotTightError, SameCellError

logger = logging.getLogger(__name__)


def natural_frame(p):
    return OrbitFrame(tuple(aut_group(p).orbits()))


def structured(p, frame=None):
    """StructuredPoset on p with the given cells, or the natural frame."""
    return StructuredPoset(p, natural_frame(p) if frame is None else OrbitFrame(tuple(frame)))


def frame_automorphisms(sp):
    return sp.frame_group


def require_tight(sp):
    if not sp.tight:
        raise NotTightError(f"structured poset on {sp.size} elements with {len(sp.cells)} cells is not tight")
    return sp


def restriction_group(sp, subset):
    """
    Restrictions of the frame automorphisms to an invariant subset, acting on
    the points of the subset in sorted order.
    """
    points = tuple(sorted(subset))
    return PermGroup(len(points), [perm.restricted(points) for perm in sp.frame_group.generators])


def _relation_between(p, c, d):
    below = p.lt[np.ix_(c, d)]
    above = p.lt[np.ix_(d, c)].T
    return below, above


def direct_interdependence(sp, c, d):
    """Cells c and d have both a comparable and an incomparable pair."""
    if c == d:
        raise SameCellError(f"cell {c} compared with itself")
    below, above = _relation_between(sp.poset, sp.cells[c], sp.cells[d])
    comparable = below | above
    return bool(comparable.any() and not comparable.all())


def orientation(sp, c, d):
    below, above = _relation_between(sp.poset, sp.cells[c], sp.cells[d])
    if below.any() and above.any():
        return 'both'
    return 'below' if below.any() else 'above'


def orbit_graph(sp):
    vertices = tuple(range(len(sp.cells)))
    edges = tuple((c, d) for c in vertices for d in vertices[c + 1:] if direct_interdependence(sp, c, d))
    return OrbitGraph(
        vertices=vertices,
        edges=edges,
        orientation={edge: orientation(sp, *edge) for edge in edges},
        cell_sizes=tuple(len(cell) for cell in sp.cells),
    )


def interdependent_orbit_unions(og):
    """Connected components of the orbit graph as sorted cell-index tuples."""
    return sorted(tuple(sorted(component)) for component in nx.connected_components(og.graph))


def union_elements(sp, cells):
    return tuple(sorted(x for c in cells for x in sp.cells[c]))


def union_structured_poset(sp, cells):
    """(U, frame restricted to U) together with the new-to-old element map."""
    sub, elements = induced_subposet(sp.poset, union_elements(sp, cells))
    position = {x: i for i, x in enumerate(elements)}
    frame = [tuple(position[x] for x in sp.cells[c]) for c in cells]
    return StructuredPoset(sub, OrbitFrame(tuple(frame))), elements


def factorization_check(p):
    """
    |Aut(P)| against the product of the frame-automorphism orders of the
    interdependent orbit unions of the natural frame.
    """
    sp = structured(p)
    lhs = sp.frame_group.order()
    factors = []
    for cells in interdependent_orbit_unions(orbit_graph(sp)):
        if len(union_elements(sp, cells)) > 1:
            union, _ = union_structured_poset(sp, cells)
            factors.append(union.frame_group.order())
    rhs = prod(factors)
    if lhs != rhs:
        logger.error(f"factorization mismatch: {lhs} != {rhs} on {p}")
    return lhs, rhs, lhs == rhs


def is_tight(sp):
    return sp.tight


def tighten(sp):
    """Split every cell into its frame-automorphism orbits until nothing changes."""
    current = sp
    while True:
        orbit_of = {x: set(orbit) for orbit in current.frame_group.orbits() for x in orbit}
        cells = sorted({tuple(sorted(set(cell) & orbit_of[x])) for cell in current.cells for x in cell})
        if len(cells) == len(current.cells):
            return current
        logger.info(f"tighten: {len(current.cells)} cells split into {len(cells)}")
        current = StructuredPoset(current.poset, OrbitFrame(tuple(cells)))


def extends_by_identity(sp, perm, elements):
    """True iff perm, acting on the listed elements, extended by the identity is an automorphism."""
    image = list(range(sp.size))
    for i, x in enumerate(elements):
        image[x] = elements[perm(i)]
    return is_automorphism(sp.poset, image)


def lower_upper(p, first, second):
    """The two cells ordered so that the first holds an element below the second."""
    return (first, second) if p.lt[np.ix_(first, second)].any() else (second, first)


def _pairing(p, lower, upper, comparable_partner):
    pairs = []
    for a in lower:
        partners = [b for b in upper if bool(p.lt[a, b]) == comparable_partner]
        if len(partners) != 1:
            return None
        pairs.append(partners[0])
    return tuple(pairs) if len(set(pairs)) == len(pairs) else None


def classify_two_levels(p, lower, upper):
    """
    ('standard', partners) when lower and upper induce S_w, ('chains',
    partners) for wC_2, otherwise (None, None). ``partners[i]`` is the element
    of upper paired with the i-th smallest element of lower.
    """
    lower, upper = tuple(sorted(lower)), tuple(sorted(upper))
    if len(lower) != len(upper) or not lower:
        return None, None
    w = len(lower)
    sub, _ = induced_subposet(p, lower + upper)
    if w >= 3 and are_isomorphic(sub, s_w(w)):
        return 'standard', _pairing(p, lower, upper, comparable_partner=False)
    if are_isomorphic(sub, w_c2(w)):
        return 'chains', _pairing(p, lower, upper, comparable_partner=True)
    return None, None


def is_max_locked(p):
    """
    Width at least 2 and every pair of consecutive rank levels induces S_w or
    wC_2; an antichain of width at least 2 qualifies.
    """
    w = width(p)
    if w < 2:
        return False
    for rank in range(p.height):
        lower, upper = p.rank_level(rank), p.rank_level(rank + 1)
        if len(lower) != w or len(upper) != w:
            return False
        kind, _ = classify_two_levels(p, lower, upper)
        if kind is None:
            return False
    return True


def max_locked_unions(p, sp=None):
    """Two-cell interdependent orbit unions of the natural frame inducing S_w or wC_2."""
    sp = sp or structured(p)
    found = []
    for cells in interdependent_orbit_unions(orbit_graph(sp)):
        if len(cells) != 2:
            continue
        lower, upper = lower_upper(p, *(sp.cells[c] for c in cells))
        kind, partners = classify_two_levels(p, lower, upper)
        if kind is not None and partners is not None:
            found.append(MaxLockedUnion(kind=kind, w=len(lower), lower=tuple(sorted(lower)), upper=partners))
    logger.info(f"{len(found)} max-locked height-1 unions on {p.size} elements")
    return found
