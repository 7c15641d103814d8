import logging

import numpy as np

from counting.search import are_isomorphic, degree_signature
from poset_core.domain import Poset, elements_of
from .exceptions import GeneratorError

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 6


def down_sets(p):
    """Every down-closed subset of p as a bitmask, the empty set included."""
    for mask in range(1 << p.size):
        if all(p.down_masks[x] & ~mask == 0 for x in elements_of(mask)):
            yield mask


def _extend(p, mask):
    n = p.size
    lt = np.zeros((n + 1, n + 1), dtype=bool)
    lt[:n, :n] = p.lt
    for x in elements_of(mask):
        lt[x, n] = True
    return Poset(lt)


def enumerate_small_posets(n):
    """
    One representative per isomorphism class of n-element posets.

    Every poset arises from a smaller one by adding a maximal element over a
    down-set, so the classes on n elements are built from those on n - 1.
    """
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise GeneratorError(f"enumeration is limited to 1 <= n <= {MAX_ENUMERATION_SIZE}, got {n}")
    classes = [Poset.antichain(1)]
    for size in range(2, n + 1):
        buckets = {}
        for p in classes:
            for mask in down_sets(p):
                candidate = _extend(p, mask)
                bucket = buckets.setdefault(degree_signature(candidate), [])
                if not any(are_isomorphic(candidate, known) for known in bucket):
                    bucket.append(candidate)
        classes = [q for bucket in buckets.values() for q in bucket]
        logger.info(f"{len(classes)} isomorphism classes on {size} elements")
    return iter(classes)
