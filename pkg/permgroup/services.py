import logging
from collections import deque

from .domain import BlockSystem, PermGroup, Permutation
from .exceptions import BlockContainmentError, GroupError, NotABlockError, NotTransitiveError

logger = logging.getLogger(__name__)


def group_order(g):
    return g.order()


def orbits(g):
    return g.orbits()


def is_transitive(g):
    return g.is_transitive()


def require_transitive(g):
    if not g.is_transitive():
        raise NotTransitiveError(f"{g} is not transitive")


def minimal_block_of(g, points):
    """Smallest block of transitive g containing all the given points."""
    points = sorted(set(points))
    if len(points) == 1:
        return (points[0],)
    representatives = g.sympy_group().minimal_block(points)
    anchor = representatives[points[0]]
    return tuple(x for x in range(g.degree) if representatives[x] == anchor)


def minimal_block_containing(g, pair):
    require_transitive(g)
    return minimal_block_of(g, pair)


def is_primitive(g):
    require_transitive(g)
    if g.degree <= 2:
        return True
    return bool(g.sympy_group().is_primitive(randomized=False))


def block_system(g, b):
    """Orbit of the block b under g, verified to partition the domain."""
    require_transitive(g)
    block = frozenset(b)
    if not block or not block <= set(range(g.degree)):
        raise NotABlockError(f"{sorted(block)} is not a subset of the domain")
    seen = {block}
    queue = deque([block])
    while queue:
        current = queue.popleft()
        for generator in g.generators:
            image = frozenset(generator(x) for x in current)
            if image not in seen:
                if any(image & other for other in seen):
                    raise NotABlockError(f"{sorted(block)} is not a block: image {sorted(image)} overlaps")
                seen.add(image)
                queue.append(image)
    cells = sorted(tuple(sorted(cell)) for cell in seen)
    if sum(len(cell) for cell in cells) != g.degree:
        raise NotABlockError(f"images of {sorted(block)} do not cover the domain")
    return BlockSystem(cells=tuple(cells))


def block_stabilizer_generators(g, b):
    """
    Generators of the setwise stabilizer of a block b of transitive g.

    For a block, sigma[b] = b iff sigma(x) lies in b for one fixed x in b, so
    the stabilizer is generated by the point stabilizer of x together with
    one transversal element per point of b.
    """
    anchor = min(b)
    group = g.sympy_group()
    generators = [Permutation.from_sympy(p, g.degree) for p in group.stabilizer(anchor).generators]
    block = set(b)
    for point, transversal in group.orbit_transversal(anchor, pairs=True):
        if point in block and point != anchor:
            generators.append(Permutation.from_sympy(transversal, g.degree))
    return [perm for perm in generators if not perm.is_identity()]


def induced_on_block(g, b):
    """The group {sigma|_b : sigma[b] = b} on the points of b in sorted order."""
    system = block_system(g, b)
    points = tuple(sorted(b))
    if points not in system.cells:
        raise NotABlockError(f"{list(points)} is not a block")
    generators = [perm.restricted(points) for perm in block_stabilizer_generators(g, points)]
    return PermGroup(len(points), generators)


def _action_on_cells(generators, cells, degree):
    cell_of = {}
    for index, cell in enumerate(cells):
        for x in cell:
            cell_of[x] = index
    actions = []
    for perm in generators:
        image = []
        for cell in cells:
            targets = {cell_of.get(perm(x)) for x in cell}
            if len(targets) != 1 or None in targets:
                raise NotABlockError(f"{perm} does not permute the cells {list(cells)}")
            image.append(targets.pop())
        actions.append(Permutation(tuple(image)))
    return PermGroup(degree, actions)


def induced_block_action(g, inner, outer):
    """Action on the cells of g.inner lying inside outer, by the stabilizer of outer."""
    inner_set, outer_set = set(inner), set(outer)
    if not inner_set <= outer_set:
        raise BlockContainmentError(f"{sorted(inner_set)} is not contained in {sorted(outer_set)}")
    inner_system = block_system(g, inner_set)
    outer_system = block_system(g, outer_set)
    if tuple(sorted(outer_set)) not in outer_system.cells:
        raise NotABlockError(f"{sorted(outer_set)} is not a block")
    cells = [cell for cell in inner_system.cells if set(cell) <= outer_set]
    generators = block_stabilizer_generators(g, sorted(outer_set))
    return _action_on_cells(generators, cells, len(cells))


def action_on_partition(g, cells):
    """Action of g on an invariant partition; transitivity is not required."""
    cells = sorted(tuple(sorted(cell)) for cell in cells)
    covered = sorted(x for cell in cells for x in cell)
    if covered != list(range(g.degree)):
        raise GroupError("cells must partition the domain")
    return _action_on_cells(g.generators, cells, len(cells))


def parse_permutation(line):
    return Permutation(tuple(int(token) for token in line.split()))


def format_permutation(perm):
    return " ".join(str(x) for x in perm.image)


def parse_group(text):
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith('#')]
    if not lines:
        raise GroupError("a group file needs at least one permutation")
    perms = [parse_permutation(line) for line in lines]
    return PermGroup(perms[0].degree, perms)


def format_group(g):
    generators = g.generators or (Permutation.identity(g.degree),)
    return "\n".join(format_permutation(perm) for perm in generators) + "\n"
