import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DeconstructionContext:
    """
    The cells of a union around one removed cell D_n, relabeled D_1..D_m.

    ``labels[k - 1]`` is the original index of D_k. The order is: component
    cells not interdependent with D_n, interdependent cells whose autonomous
    antichains are all trivial (from s), interdependent cells with nontrivial
    ones (from t), D_n itself, cells outside the component that are not
    interdependent with D_n, and finally those that are (from r). An empty
    range shows up as t = n or r = m + 1.

    ``partitions`` maps the original index of every cell from s to n - 1 to
    its maximal autonomous antichains inside the component.
    """
    labels: tuple
    s: int
    t: int
    n: int
    r: int
    partitions: dict

    @property
    def m(self):
        return len(self.labels)

    @property
    def removed_cell(self):
        return self.labels[self.n - 1]

    @property
    def component_cells(self):
        return self.labels[:self.n - 1]

    @property
    def interdependent_cells(self):
        return self.labels[self.s - 1:self.n - 1]

    @property
    def slack_cells(self):
        return self.labels[self.t - 1:self.n - 1]

    @property
    def later_cells(self):
        return self.labels[self.n:]

    @property
    def ell(self):
        return {cell: len(parts) for cell, parts in self.partitions.items()}


@dataclass(frozen=True, eq=False)
class DeconstructionStep:
    """
    One prune-and-compact step on ``source``.

    ``u_n_elements`` and ``q_elements`` list, position by position, the
    elements of ``source`` the two substructures are built on.
    """
    source: object
    context: DeconstructionContext
    u_n: object
    q: object
    u_n_elements: tuple
    q_elements: tuple

    @property
    def representatives(self):
        return {cell.representative for parts in self.context.partitions.values() for cell in parts}

    @property
    def antichain_sizes(self):
        """Sizes of the nontrivial autonomous antichains the step collapsed."""
        return sorted(cell.size for parts in self.context.partitions.values() for cell in parts if cell.nontrivial)


@dataclass(frozen=True, eq=False)
class DeconstructionSequence:
    steps: tuple
    final_residual: object
    b: float = math.inf

    def qualifies(self, b):
        """True iff this is a b-deconstruction sequence."""
        return self.b >= b

    @property
    def bounded(self):
        return self.b != math.inf
