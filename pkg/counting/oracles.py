"""Exhaustive oracles over all permutations or all self-maps; desk-scale only."""
from itertools import permutations, product
from math import prod

from django.conf import settings

from .endomorphisms import frame_masks, is_order_preserving
from .exceptions import CapExceededError, CountingError
from .search import is_automorphism

FRAME_MAP_LIMIT = 10 ** 6


def _guard(p, cap):
    if p.size > cap:
        raise CapExceededError(p.size, cap)


def brute_force_automorphisms(p, cap=None):
    _guard(p, cap if cap is not None else settings.AUT_BRUTE_FORCE_MAX_N)
    return [image for image in permutations(range(p.size)) if is_automorphism(p, image)]


def brute_force_automorphism_count(p, cap=None):
    return len(brute_force_automorphisms(p, cap))


def brute_force_endomorphism_count(p, cap=None):
    _guard(p, cap if cap is not None else settings.END_BRUTE_FORCE_MAX_N)
    return sum(1 for image in product(range(p.size), repeat=p.size) if is_order_preserving(p, image))


def brute_force_frame_endomorphism_count(p, frame, max_maps=FRAME_MAP_LIMIT):
    masks = frame_masks(p, frame)
    choices = [[y for y in range(p.size) if masks[x] >> y & 1] for x in range(p.size)]
    total = prod(len(options) for options in choices)
    if total > max_maps:
        raise CountingError(f"{total} candidate maps exceed the limit of {max_maps}")
    return sum(1 for image in product(*choices) if is_order_preserving(p, image))
