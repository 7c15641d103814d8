import logging
from itertools import combinations

import networkx as nx
import numpy as np

from .domain import (
    AutonomousCell, Poset, PosetDocument, RankProfile, SubsetPredicateReport, mask_of,
)
from .exceptions import (
    CycleDetectedError, EmptySubsetError, NotAnAntichainError, PieceCountError,
    PosetError, PosetFormatError,
)

logger = logging.getLogger(__name__)


def transitive_closure(matrix):
    """Warshall closure of a boolean relation matrix."""
    closed = np.array(matrix, dtype=bool, copy=True)
    for k in range(closed.shape[0]):
        closed |= np.outer(closed[:, k], closed[k, :])
    return closed


def from_relation(n, pairs, labels=None):
    """Poset generated by the pairs (i, j) meaning i < j."""
    if n < 1:
        raise PosetError(f"element count must be positive, got {n}")
    matrix = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise PosetError(f"pair ({i}, {j}) out of range for {n} elements")
        if i == j:
            raise CycleDetectedError(f"cycle detected: {i} below itself")
        matrix[i, j] = True
    closed = transitive_closure(matrix)
    if closed.diagonal().any():
        element = int(np.flatnonzero(closed.diagonal())[0])
        raise CycleDetectedError(f"cycle detected through element {element}")
    return Poset(closed, labels)


def parse_poset_document(text):
    lines = text.splitlines()
    content = []
    comments = []
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            comments.append(line[1:].strip())
            continue
        content.append((number, line))
    if not content:
        raise PosetFormatError("empty poset file", 1)

    number, header = content[0]
    key, _, value = header.partition(':')
    if key.strip() != 'elements' or not value.strip():
        raise PosetFormatError(f"expected 'elements: <n>', got {header!r}", number)
    try:
        n = int(value.strip())
    except ValueError:
        raise PosetFormatError(f"element count is not an integer: {value.strip()!r}", number)
    if n < 1:
        raise PosetFormatError(f"element count must be positive, got {n}", number)
    if len(content) < 2 or content[1][1] != 'covers:':
        line_number = content[1][0] if len(content) > 1 else number
        raise PosetFormatError("expected 'covers:' section", line_number)

    pairs = []
    frame = None
    for number, line in content[2:]:
        if line == 'frame:':
            if frame is not None:
                raise PosetFormatError("duplicate 'frame:' section", number)
            frame = []
            continue
        try:
            indices = [int(token) for token in line.split()]
        except ValueError:
            raise PosetFormatError(f"malformed line {line!r}", number)
        for index in indices:
            if not 0 <= index < n:
                raise PosetFormatError(f"index {index} out of range for {n} elements", number)
        if frame is not None:
            if not indices:
                raise PosetFormatError("empty frame cell", number)
            frame.append(tuple(indices))
            continue
        if len(indices) != 2:
            raise PosetFormatError(f"cover line needs two indices, got {line!r}", number)
        pairs.append(tuple(indices))
    poset = from_relation(n, pairs)
    logger.info(f"parsed poset with {n} elements and {len(pairs)} cover lines")
    return PosetDocument(poset=poset, frame=tuple(frame) if frame is not None else None,
                         comments=tuple(comments))


def parse_poset(text):
    return parse_poset_document(text).poset


def format_poset(p, frame=None, comments=()):
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"elements: {p.size}")
    lines.append("covers:")
    lines.extend(f"{i} {j}" for i, j in p.covers)
    if frame is not None:
        lines.append("frame:")
        lines.extend(" ".join(str(x) for x in sorted(cell)) for cell in frame)
    return "\n".join(lines) + "\n"


def width(p):
    """Maximum antichain size via Dilworth: n minus a maximum matching of the comparability graph."""
    graph = nx.Graph()
    left = [('below', x) for x in range(p.size)]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((('above', x) for x in range(p.size)), bipartite=1)
    graph.add_edges_from((('below', int(i)), ('above', int(j))) for i, j in zip(*np.nonzero(p.lt)))
    matching = nx.bipartite.maximum_matching(graph, top_nodes=left)
    return p.size - len(matching) // 2


def rank_height_width(p):
    return RankProfile(ranks=p.ranks, height=p.height, width=width(p))


def is_antichain(p, elements):
    elements = list(elements)
    return not p.lt[np.ix_(elements, elements)].any()


def is_order_autonomous(p, a, ambient=None):
    members = sorted(set(a))
    if not members:
        raise EmptySubsetError("order-autonomy is defined for nonempty subsets")
    outside = sorted(set(range(p.size) if ambient is None else ambient) - set(members))
    for z in outside:
        below = p.lt[z, members]
        above = p.lt[members, z]
        if (below.any() and not below.all()) or (above.any() and not above.all()):
            return SubsetPredicateReport(frozenset(members), False, z)
    return SubsetPredicateReport(frozenset(members), True)


def maximal_autonomous_antichain_partition(p, ambient, frame_block):
    """
    Partition frame_block into maximal antichains that are order-autonomous in
    the sub-poset induced on ambient.

    Inside an antichain, pairwise autonomy is equality of the strict up- and
    down-sets restricted to ambient, so the cells are the classes of that key.
    """
    block = sorted(set(frame_block))
    ambient = set(ambient)
    if not block:
        raise EmptySubsetError("frame block is empty")
    if not set(block) <= ambient:
        raise PosetError("frame block must lie inside the ambient set")
    if not is_antichain(p, block):
        raise NotAnAntichainError(f"frame block {block} is not an antichain")
    ambient_mask = mask_of(ambient)
    classes = {}
    for x in block:
        key = (p.up_masks[x] & ambient_mask, p.down_masks[x] & ambient_mask)
        classes.setdefault(key, []).append(x)
    cells = [AutonomousCell(members=tuple(members), representative=members[0])
             for members in classes.values()]
    return sorted(cells, key=lambda cell: cell.representative)


def incomparability_graph(p):
    graph = nx.Graph()
    graph.add_nodes_from(range(p.size))
    incomparable = ~(p.lt | p.lt.T)
    graph.add_edges_from((int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(incomparable, k=1))))
    return graph


def is_coconnected(p):
    # the incomparability components of a poset form a chain A_1 < A_2 < ...
    return nx.is_connected(incomparability_graph(p))


def dual(p):
    return Poset(p.lt.T, p.labels)


def lexicographic_sum(index, pieces):
    pieces = list(pieces)
    if len(pieces) != index.size:
        raise PieceCountError(f"index has {index.size} elements but {len(pieces)} pieces were given")
    owner = [t for t, piece in enumerate(pieces) for _ in range(piece.size)]
    offsets = np.cumsum([0] + [piece.size for piece in pieces])
    owner = np.array(owner)
    lt = index.lt[np.ix_(owner, owner)].copy()
    for t, piece in enumerate(pieces):
        start, stop = offsets[t], offsets[t + 1]
        lt[start:stop, start:stop] = piece.lt
    labels = None
    if index.labels or any(piece.labels for piece in pieces):
        labels = tuple(f"{index.label(t)}.{piece.label(x)}"
                       for t, piece in enumerate(pieces) for x in range(piece.size))
    return Poset(lt, labels)


def disjoint_union(posets):
    posets = list(posets)
    return lexicographic_sum(Poset.antichain(len(posets)), posets)


def ordinal_sum(posets):
    posets = list(posets)
    return lexicographic_sum(Poset.chain(len(posets)), posets)


def induced_subposet(p, elements):
    """Sub-poset on the given elements (sorted); returns it with the new-to-old index map."""
    elements = tuple(sorted(set(elements)))
    if not elements:
        raise EmptySubsetError("cannot induce a poset on no elements")
    labels = tuple(p.label(x) for x in elements) if p.labels else None
    return Poset(p.lt[np.ix_(elements, elements)], labels), elements


def brute_force_width(p):
    best = 1
    for size in range(2, p.size + 1):
        if any(is_antichain(p, subset) for subset in combinations(range(p.size), size)):
            best = size
        else:
            break
    return best
