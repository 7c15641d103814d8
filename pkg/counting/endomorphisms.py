"""
Exact counts of order-preserving maps.

Elements are processed along a linear extension. A state records, for each
unprocessed element with a processed lower cover, the bitmask of images still
admissible for it. Choosing the image v of y intersects the mask of every
upper cover of y with the closed up-set of v; earlier constraints reach the
later elements through chains of covers.
"""
import logging

from django.conf import settings

from poset_core.domain import elements_of, mask_of
from .exceptions import CapExceededError, InvalidFrameError

logger = logging.getLogger(__name__)


def _full_mask(target):
    return (1 << target.size) - 1


def count_order_preserving_into(p, allowed=None, target=None):
    """
    Number of maps f: p -> target with x <= y implying f(x) <= f(y) and
    f(x) in allowed[x] (bitmasks over target's elements).
    """
    target = target or p
    if allowed is None:
        allowed = [_full_mask(target)] * p.size
    closed_up = target.closed_up_masks
    states = {(): 1}
    for y in p.linear_extension:
        following = {}
        for state, ways in states.items():
            pending = dict(state)
            mask = pending.pop(y, allowed[y])
            for v in elements_of(mask):
                updated = dict(pending)
                for u in p.upper_covers[y]:
                    narrowed = updated.get(u, allowed[u]) & closed_up[v]
                    if not narrowed:
                        break
                    updated[u] = narrowed
                else:
                    key = tuple(sorted(updated.items()))
                    following[key] = following.get(key, 0) + ways
        states = following
    return sum(states.values())


def iter_order_preserving_into(p, allowed=None, target=None):
    """Every map counted by ``count_order_preserving_into``, as image tuples."""
    target = target or p
    if allowed is None:
        allowed = [_full_mask(target)] * p.size
    order = p.linear_extension
    image = [None] * p.size

    def extend(position):
        if position == len(order):
            yield tuple(image)
            return
        y = order[position]
        mask = allowed[y]
        for z in p.lower_covers[y]:
            mask &= target.closed_up_masks[image[z]]
        for v in elements_of(mask):
            image[y] = v
            yield from extend(position + 1)
        image[y] = None

    yield from extend(0)


def _check_cap(p, cap):
    cap = cap if cap is not None else settings.END_COUNT_CAP
    if p.size > cap:
        raise CapExceededError(p.size, cap)


def count_endomorphisms(p, cap=None):
    _check_cap(p, cap)
    count = count_order_preserving_into(p)
    logger.info(f"{count} endomorphisms on {p.size} elements")
    return count


def frame_masks(p, frame):
    seen = sorted(x for cell in frame for x in cell)
    if seen != list(range(p.size)):
        raise InvalidFrameError("frame cells must partition the elements")
    masks = [0] * p.size
    for cell in frame:
        cell_mask = mask_of(cell)
        for x in cell:
            masks[x] = cell_mask
    return masks


def count_frame_endomorphisms(p, frame, cap=None):
    """Order-preserving self-maps sending every frame cell into itself."""
    _check_cap(p, cap)
    cells = frame.cells if hasattr(frame, 'cells') else frame
    return count_order_preserving_into(p, frame_masks(p, cells))


def is_order_preserving(p, image, target=None):
    target = target or p
    for x, y in zip(*p.lt.nonzero()):
        a, b = image[x], image[y]
        if a != b and not target.lt[a, b]:
            return False
    return True
