"""Brute-force block oracles: enumerate every equal-size partition and test it."""
from .services import is_transitive


def equal_size_partitions(degree, cell_size):
    def build(remaining):
        if not remaining:
            yield []
            return
        first, rest = remaining[0], remaining[1:]
        for others in _choose(rest, cell_size - 1):
            cell = (first,) + others
            left = tuple(x for x in rest if x not in others)
            for tail in build(left):
                yield [cell] + tail

    yield from build(tuple(range(degree)))


def _choose(items, k):
    if k == 0:
        yield ()
        return
    for i in range(len(items) - k + 1):
        for tail in _choose(items[i + 1:], k - 1):
            yield (items[i],) + tail


def preserves(g, cells):
    cell_sets = {frozenset(cell) for cell in cells}
    return all(frozenset(perm(x) for x in cell) in cell_sets
               for perm in g.generators for cell in cells)


def preserved_partitions(g):
    """Nontrivial partitions into equal-size cells mapped to themselves by g."""
    found = []
    for size in range(2, g.degree):
        if g.degree % size == 0:
            found.extend(cells for cells in equal_size_partitions(g.degree, size) if preserves(g, cells))
    return found


def brute_force_is_primitive(g):
    return is_transitive(g) and not preserved_partitions(g)


def refines_block(g, block, pair):
    """True iff some preserved partition has a cell holding pair that is strictly inside block."""
    a, b = pair
    for cells in preserved_partitions(g):
        for cell in cells:
            if a in cell and b in cell and set(cell) < set(block):
                return True
    return False
