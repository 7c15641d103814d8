"""
Automorphism and isomorphism search for posets.

Elements are first coloured by colour refinement started from
(colour, rank, |up|, |down|). The search then keeps a boolean candidate
matrix ``cand[x, y]`` (x may map to y) and narrows it after each
assignment with the comparabilities of the assigned pair.

``aut_group`` walks a base x_0, x_1, ...: at each level it finds, for every
candidate image of the base point, one automorphism fixing the earlier base
points, so the group order is the product of the basic orbit sizes.
"""
import logging
from collections import deque

import numpy as np
from django.conf import settings

from permgroup.domain import PermGroup, Permutation
from permgroup.exceptions import OrderMismatchError
from .exceptions import CountingError

logger = logging.getLogger(__name__)


def degree_signature(p):
    """Sorted (rank, |up|, |down|) multiset; equal for isomorphic posets."""
    up = p.lt.sum(axis=1)
    down = p.lt.sum(axis=0)
    return tuple(sorted(zip(p.ranks, (int(u) for u in up), (int(d) for d in down))))


def _relabel(keys_per_poset):
    palette = {key: index for index, key in enumerate(sorted({k for keys in keys_per_poset for k in keys}))}
    return [[palette[key] for key in keys] for keys in keys_per_poset]


def refine_colours(posets, colours=None):
    """
    Joint colour refinement of several posets.

    Colours are canonical integers shared across the posets, so equal
    colours are comparable between them.
    """
    if colours is None:
        colours = [None] * len(posets)
    keys = []
    for p, initial in zip(posets, colours):
        initial = [0] * p.size if initial is None else list(initial)
        up = p.lt.sum(axis=1)
        down = p.lt.sum(axis=0)
        keys.append([(initial[x], p.ranks[x], int(up[x]), int(down[x])) for x in range(p.size)])
    current = _relabel(keys)
    classes = len({c for cols in current for c in cols})
    uppers = [[np.flatnonzero(p.lt[x]) for x in range(p.size)] for p in posets]
    lowers = [[np.flatnonzero(p.lt[:, x]) for x in range(p.size)] for p in posets]
    while True:
        keys = []
        for cols, up, down in zip(current, uppers, lowers):
            keys.append([(cols[x],
                          tuple(sorted(cols[y] for y in up[x])),
                          tuple(sorted(cols[y] for y in down[x]))) for x in range(len(cols))])
        refined = _relabel(keys)
        refined_classes = len({c for cols in refined for c in cols})
        current = refined
        if refined_classes == classes:
            return current
        classes = refined_classes


def _assign(p, q, cand, x, y):
    """Narrow cand for x -> y; None when some element is left without images."""
    cand = cand.copy()
    cand[x, :] = False
    cand[:, y] = False
    cand &= np.equal.outer(p.lt[x], q.lt[y])
    cand &= np.equal.outer(p.lt[:, x], q.lt[:, y])
    cand[x, y] = True
    if not cand.any(axis=1).all():
        return None
    return cand


def _search(p, q, cand):
    """Depth-first search for one bijection consistent with cand."""
    counts = cand.sum(axis=1)
    open_rows = np.flatnonzero(counts > 1)
    if open_rows.size == 0:
        image = tuple(int(np.flatnonzero(row)[0]) for row in cand)
        if len(set(image)) != len(image):
            return None
        # rows that started as singletons were never propagated
        return image if np.array_equal(p.lt, q.lt[np.ix_(image, image)]) else None
    x = int(open_rows[np.argmin(counts[open_rows])])
    for y in np.flatnonzero(cand[x]):
        narrowed = _assign(p, q, cand, x, int(y))
        if narrowed is not None:
            found = _search(p, q, narrowed)
            if found is not None:
                return found
    return None


def _initial_candidates(p, q, colours_p=None, colours_q=None):
    refined_p, refined_q = refine_colours([p, q], [colours_p, colours_q])
    return np.equal.outer(np.array(refined_p), np.array(refined_q))


def find_isomorphism(p, q, colours_p=None, colours_q=None):
    """An isomorphism p -> q respecting the given colours, as an image tuple, or None."""
    if p.size != q.size:
        return None
    cand = _initial_candidates(p, q, colours_p, colours_q)
    if not cand.any(axis=1).all() or not cand.any(axis=0).all():
        return None
    # singleton rows are fixed before searching
    for x in range(p.size):
        row = np.flatnonzero(cand[x])
        if row.size == 1:
            cand = _assign(p, q, cand, x, int(row[0]))
            if cand is None:
                return None
    return _search(p, q, cand)


def are_isomorphic(p, q):
    return find_isomorphism(p, q) is not None


def _fix(p, cand, points):
    for x in points:
        cand = _assign(p, p, cand, x, x)
        if cand is None:
            raise CountingError(f"identity is inconsistent with the colouring at element {x}")
    return cand


def _orbit_closure(start, generators):
    orbit = {start}
    queue = deque([start])
    while queue:
        point = queue.popleft()
        for perm in generators:
            image = perm(point)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def aut_group(p, colours=None):
    """
    The group of automorphisms of p that preserve the colouring.

    With ``colours`` set to frame-cell indices this is the frame automorphism
    group; without it the full automorphism group.
    """
    (refined,) = refine_colours([p], [colours])
    start = np.equal.outer(np.array(refined), np.array(refined))
    base = []
    generators = []
    order = 1
    while True:
        cand = _fix(p, start, base)
        counts = cand.sum(axis=1)
        open_rows = np.flatnonzero(counts > 1)
        if open_rows.size == 0:
            break
        point = int(open_rows[np.argmin(counts[open_rows])])
        level = []
        orbit = {point}
        for target in np.flatnonzero(cand[point]):
            target = int(target)
            if target in orbit:
                continue
            narrowed = _assign(p, p, cand, point, target)
            image = _search(p, p, narrowed) if narrowed is not None else None
            if image is not None:
                level.append(Permutation(image))
                orbit = _orbit_closure(point, level)
        generators.extend(level)
        order *= len(orbit)
        base.append(point)
    logger.info(f"automorphism search on {p.size} elements: order {order}, base length {len(base)}")
    group = PermGroup(p.size, generators, order=order)
    try:
        group.check_order()
    except OrderMismatchError as exc:
        logger.error(f"automorphism search on {p.size} elements: {exc}")
        raise
    return group


def automorphism_count(p, colours=None):
    return aut_group(p, colours).order()


def iter_automorphisms(p, colours=None, cap=None):
    """Every automorphism of p as a Permutation, enumerated from the group."""
    cap = cap if cap is not None else settings.AUT_ENUMERATION_CAP
    return sorted(aut_group(p, colours).elements(cap=cap), key=lambda perm: perm.image)


def is_automorphism(p, image):
    image = np.asarray(image)
    return bool(np.array_equal(p.lt[np.ix_(image, image)], p.lt)) and len(set(image.tolist())) == p.size
