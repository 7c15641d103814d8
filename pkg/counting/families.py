"""
Constructed families of endomorphisms that give lower bounds on |End(P)|.

Every family can count its members, list them and draw one at random.
Three-fan families send whole rank levels to fixed elements or to
three-element sets around a non-irreducible element c; a level is "fanned"
when each of its elements may choose among three images.
"""
import logging
from itertools import product
from math import prod

import numpy as np

from orbit_structure.services import max_locked_unions
from poset_core.domain import mask_of
from poset_core.services import dual
from .domain import EndoFamily
from .endomorphisms import count_order_preserving_into, is_order_preserving, iter_order_preserving_into

logger = logging.getLogger(__name__)

EXHAUSTIVE_VERIFICATION_LIMIT = 4096
VERIFICATION_SAMPLES = 64


class ConstantFamily:
    description = 'constant'
    fanned_levels = ()

    def __init__(self, p):
        self.p = p

    @property
    def count(self):
        return self.p.size

    def members(self):
        for v in range(self.p.size):
            yield (v,) * self.p.size

    def random_member(self, rng):
        return (int(rng.integers(self.p.size)),) * self.p.size


def longest_chain(p):
    """A maximum chain, bottom first, preferring low indices."""
    top = min(p.rank_level(p.height))
    chain = [top]
    while p.ranks[chain[-1]] > 0:
        x = chain[-1]
        chain.append(min(y for y in p.lower_covers[x] if p.ranks[y] == p.ranks[x] - 1))
    return tuple(reversed(chain))


class ChainRetractionFamily:
    """All order-preserving self-maps with image inside one longest chain."""
    description = 'chain-retraction'
    fanned_levels = ()

    def __init__(self, p):
        self.p = p
        self.chain = longest_chain(p)
        self.allowed = [mask_of(self.chain)] * p.size

    @property
    def count(self):
        return count_order_preserving_into(self.p, self.allowed)

    def members(self):
        return iter_order_preserving_into(self.p, self.allowed)

    def random_member(self, rng):
        position = {x: i for i, x in enumerate(self.chain)}
        image = [None] * self.p.size
        for y in self.p.linear_extension:
            low = max((position[image[z]] for z in self.p.lower_covers[y]), default=0)
            image[y] = self.chain[int(rng.integers(low, len(self.chain)))]
        return tuple(image)


class ThreeFanFamily:
    """Maps choosing, independently per element, an image from the set assigned to its rank level."""

    def __init__(self, p, level_images, description, ranks=None):
        self.p = p
        self.level_images = {rank: tuple(images) for rank, images in level_images.items()}
        self.choices = [self.level_images[rank] for rank in (p.ranks if ranks is None else ranks)]
        self.fanned_levels = tuple(sorted(r for r, images in self.level_images.items() if len(images) > 1))
        self.description = description

    @property
    def count(self):
        return prod(len(options) for options in self.choices)

    def members(self):
        return product(*self.choices)

    def random_member(self, rng):
        return tuple(options[int(rng.integers(len(options)))] for options in self.choices)


def _rank_below(p, x):
    return min(y for y in p.lower_covers[x] if p.ranks[y] == p.ranks[x] - 1)


def _height_two_families(p):
    families = []
    for c in p.rank_level(1):
        lower, upper = p.lower_covers[c], p.upper_covers[c]
        if len(lower) >= 2 and len(upper) >= 2:
            b1, b2 = lower[:2]
            t1, t2 = upper[:2]
            families.append(ThreeFanFamily(p, {0: (b1, b2, c), 1: (c,), 2: (c, t1, t2)},
                                           'three-fan height 2, middle collapsed'))
            break
    for c in p.rank_level(1):
        if p.upper_covers[c]:
            b, t = p.lower_covers[c][0], p.upper_covers[c][0]
            families.append(ThreeFanFamily(p, {0: (b,), 1: (b, c, t), 2: (t,)},
                                           'three-fan height 2, middle fanned'))
            break
    return families


def _height_three_families(p):
    for c in p.rank_level(2):
        upper = p.upper_covers[c]
        if len(upper) < 2:
            continue
        t1, t2 = upper[:2]
        b = _rank_below(p, c)
        a = _rank_below(p, b)
        top = (c, t1, t2)
        return [
            ThreeFanFamily(p, {0: (a,), 1: (a,), 2: (a, b, c), 3: top}, 'three-fan height 3, lower pair collapsed'),
            ThreeFanFamily(p, {0: (a,), 1: (a, b, c), 2: (c,), 3: top}, 'three-fan height 3, rank 1 fanned'),
            ThreeFanFamily(p, {0: (a, b, c), 1: (c,), 2: (c,), 3: top}, 'three-fan height 3, upper pair collapsed'),
        ]
    return []


def three_fan_families(p):
    """Height-2 and height-3 fans of p and of its dual; a dual fan is the same set of maps on p."""
    builders = {2: _height_two_families, 3: _height_three_families}
    if p.height not in builders:
        return []
    families = builders[p.height](p)
    q = dual(p)
    for family in builders[p.height](q):
        families.append(ThreeFanFamily(p, family.level_images, f"dual {family.description}", ranks=q.ranks))
    return families


class MaxLockedFanFamily:
    """
    Per max-locked height-1 union: for wC_2 every chain a_i < b_i goes to some
    chain a_g(i) < b_g(i) (w^w maps); for S_w every upper element goes to b_0
    and every lower a_i to some a_j with j != 0 ((w-1)^w maps). Identity
    elsewhere.
    """
    description = 'max-locked fan'
    fanned_levels = ()

    def __init__(self, p, unions=None):
        self.p = p
        self.unions = max_locked_unions(p) if unions is None else unions
        self.slots = []
        for union in self.unions:
            w = union.w
            for i in range(w):
                if union.kind == 'chains':
                    self.slots.append([((union.lower[i], union.lower[j]), (union.upper[i], union.upper[j]))
                                       for j in range(w)])
                else:
                    self.slots.append([((union.lower[i], union.lower[j]), (union.upper[i], union.upper[0]))
                                       for j in range(1, w)])

    @property
    def count(self):
        return prod(len(options) for options in self.slots)

    def _image(self, picks):
        image = list(range(self.p.size))
        for pick in picks:
            for x, y in pick:
                image[x] = y
        return tuple(image)

    def members(self):
        for picks in product(*self.slots):
            yield self._image(picks)

    def random_member(self, rng):
        return self._image([options[int(rng.integers(len(options)))] for options in self.slots])


def candidate_families(p):
    families = [ConstantFamily(p), ChainRetractionFamily(p)]
    families.extend(three_fan_families(p))
    fans = MaxLockedFanFamily(p)
    if fans.unions:
        families.append(fans)
    return families


def verify_family(p, family, seed=0):
    """Checks every member when the family is small, otherwise a seeded sample."""
    if family.count <= EXHAUSTIVE_VERIFICATION_LIMIT:
        members = family.members()
    else:
        rng = np.random.default_rng(seed)
        members = (family.random_member(rng) for _ in range(VERIFICATION_SAMPLES))
    for image in members:
        if not is_order_preserving(p, image):
            logger.error(f"{family.description} member {image} is not order-preserving")
            return False
    return True


def constructive_endo_lower_bound(p, seed=0):
    """The largest applicable family, verified; constant maps when nothing else applies."""
    families = candidate_families(p)
    best = max(families, key=lambda family: family.count)
    verified = verify_family(p, best, seed)
    logger.info(f"{best.description} family of {best.count} endomorphisms on {p.size} elements")
    return EndoFamily(description=best.description, count=best.count, verified=verified,
                      fanned_levels=best.fanned_levels)
