from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from counting.search import aut_group
from poset_core.domain import Poset
from poset_core.services import is_antichain, maximal_autonomous_antichain_partition
from .exceptions import FrameError


@dataclass(frozen=True)
class OrbitFrame:
    """A partition into cells, each stored sorted, cells ordered by first element."""
    cells: tuple

    def __post_init__(self):
        cells = [tuple(sorted(int(x) for x in cell)) for cell in self.cells]
        if any(not cell for cell in cells):
            raise FrameError("frame cells must be nonempty")
        members = [x for cell in cells for x in cell]
        if len(members) != len(set(members)):
            raise FrameError("frame cells overlap")
        object.__setattr__(self, 'cells', tuple(sorted(cells)))

    def __len__(self):
        return len(self.cells)

    @property
    def size(self):
        return sum(len(cell) for cell in self.cells)

    @cached_property
    def cell_index(self):
        return {x: index for index, cell in enumerate(self.cells) for x in cell}

    def colours(self):
        return [self.cell_index[x] for x in range(self.size)]

    def singletons(self):
        return all(len(cell) == 1 for cell in self.cells)


@dataclass(frozen=True, eq=False)
class StructuredPoset:
    """
    A poset with an orbit frame.

    The frame automorphism group and the slack/tightness flags are computed
    once, at construction.
    """
    poset: Poset
    frame: OrbitFrame
    frame_group: object = field(init=False, repr=False)
    without_slack: bool = field(init=False)
    tight: bool = field(init=False)

    def __post_init__(self):
        p, frame = self.poset, self.frame
        if frame.size != p.size or sorted(frame.cell_index) != list(range(p.size)):
            raise FrameError(f"frame does not partition the {p.size} elements")
        for cell in frame.cells:
            if not is_antichain(p, cell):
                raise FrameError(f"frame cell {list(cell)} is not an antichain")
        group = aut_group(p, frame.colours())
        without_slack = all(
            not cell.nontrivial
            for block in frame.cells
            for cell in maximal_autonomous_antichain_partition(p, range(p.size), block)
        )
        orbits = {tuple(orbit) for orbit in group.orbits()}
        transitive = all(cell in orbits for cell in frame.cells)
        object.__setattr__(self, 'frame_group', group)
        object.__setattr__(self, 'without_slack', without_slack)
        object.__setattr__(self, 'tight', without_slack and transitive)

    @property
    def size(self):
        return self.poset.size

    @property
    def cells(self):
        return self.frame.cells


@dataclass(frozen=True)
class OrbitGraph:
    """
    Vertices are frame-cell indices. ``orientation`` maps each edge (c, d),
    c < d, to 'below' when some element of c lies below one of d, 'above'
    for the reverse, or 'both'.
    """
    vertices: tuple
    edges: tuple
    orientation: dict
    cell_sizes: tuple

    @cached_property
    def graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def neighbours(self, vertex):
        return sorted(self.graph.neighbors(vertex))


@dataclass(frozen=True)
class MaxLockedUnion:
    """
    A two-cell union inducing S_w ('standard') or wC_2 ('chains').

    ``lower[i]`` is paired with ``upper[i]``: comparable for chains,
    the unique incomparable partner for the standard example.
    """
    kind: str
    w: int
    lower: tuple
    upper: tuple

    @property
    def elements(self):
        return tuple(sorted(self.lower + self.upper))


@dataclass(frozen=True)
class LockCycleReport:
    cycle: tuple
    M: int
    steps: tuple
    locked_pairs: tuple

    @property
    def nontrivially_locked(self):
        return any(x != y for x, y in self.locked_pairs)


@dataclass(frozen=True)
class CycleReport:
    cycle: tuple
    lock: bool
